#include "eah/alphabet.hpp"

#include <bit>

#include "eah/error.hpp"

namespace eah {

Alphabet::Alphabet(std::string_view symbols) {
    if (symbols.empty()) {
        throw Error(errc::empty_input, "alphabet must contain at least one symbol");
    }
    if (symbols.size() > 256) {
        throw Error(errc::value_out_of_range, "alphabet is limited to 256 symbols");
    }
    index_.fill(-1);
    symbols_.reserve(symbols.size());
    for (char c : symbols) {
        const auto sym = static_cast<unsigned char>(c);
        if (index_[sym] != -1) {
            throw Error(errc::value_out_of_range,
                        "alphabet symbols must be distinct");
        }
        index_[sym] = static_cast<std::int16_t>(symbols_.size());
        symbols_.push_back(c);
    }
}

Alphabet Alphabet::scan(std::string_view text) {
    if (text.empty()) {
        throw Error(errc::empty_input, "cannot scan an alphabet from empty text");
    }
    std::array<bool, 256> seen{};
    for (char c : text) {
        seen[static_cast<unsigned char>(c)] = true;
    }
    std::string symbols;
    for (std::size_t value = 0; value < seen.size(); ++value) {
        if (seen[value]) {
            symbols.push_back(static_cast<char>(value));
        }
    }
    return Alphabet(symbols);
}

std::size_t Alphabet::bits_per_symbol() const noexcept {
    return static_cast<std::size_t>(std::bit_width(symbols_.size() - 1));
}

bool Alphabet::contains(unsigned char symbol) const noexcept {
    return index_[symbol] != -1;
}

std::size_t Alphabet::index_of(unsigned char symbol) const {
    const std::int16_t index = index_[symbol];
    if (index < 0) {
        throw Error(errc::unknown_symbol,
                    "symbol (byte " + std::to_string(symbol) + ") is not in the alphabet");
    }
    return static_cast<std::size_t>(index);
}

unsigned char Alphabet::symbol_at(std::size_t index) const {
    if (index >= symbols_.size()) {
        throw Error(errc::value_out_of_range, "symbol index out of range");
    }
    return static_cast<unsigned char>(symbols_[index]);
}

}  // namespace eah
