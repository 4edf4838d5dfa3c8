#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace eah {

// Ordered alphabet of 1..256 distinct byte symbols. The position of a symbol
// in the declaration order is its index; all fixed-width fields use
// bits_per_symbol() = ceil(log2 m) bits (0 when m == 1).
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    // Distinct bytes of `text`, ordered by byte value. Throws
    // errc::empty_input for empty text.
    static Alphabet scan(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    std::size_t bits_per_symbol() const noexcept;

    bool contains(unsigned char symbol) const noexcept;
    std::size_t index_of(unsigned char symbol) const;  // errc::unknown_symbol
    unsigned char symbol_at(std::size_t index) const;  // errc::value_out_of_range

    const std::string& symbols() const noexcept { return symbols_; }

    bool operator==(const Alphabet& other) const noexcept {
        return symbols_ == other.symbols_;
    }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_{};
};

}  // namespace eah
