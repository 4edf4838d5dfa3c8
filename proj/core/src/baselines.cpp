#include "eah/baselines.hpp"

#include <bit>
#include <map>

#include "eah/bitstring.hpp"
#include "eah/error.hpp"
#include "eah/huffman.hpp"

namespace eah {

namespace {

// ceil(log2 value) with the convention 0 for value <= 1.
std::size_t ceil_log2(std::uint64_t value) {
    return value <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(value - 1));
}

}  // namespace

std::uint64_t huffman_baseline_length(std::string_view input, const Alphabet& alphabet) {
    if (input.empty()) {
        throw Error(errc::empty_input, "cannot size a code for empty input");
    }
    std::map<std::size_t, std::uint64_t> counts;
    for (char c : input) {
        ++counts[alphabet.index_of(static_cast<unsigned char>(c))];
    }
    std::vector<std::uint64_t> frequencies;
    frequencies.reserve(counts.size());
    for (const auto& [index, count] : counts) {
        frequencies.push_back(count);
    }
    return weighted_cost(huffman(frequencies), frequencies);
}

Lz78Output lz78_encode(std::string_view input, const Alphabet& alphabet) {
    for (char c : input) {
        alphabet.index_of(static_cast<unsigned char>(c));  // throws on unknown
    }
    const std::size_t symbol_bits = alphabet.bits_per_symbol();

    Lz78Output out;
    std::map<std::string, std::uint64_t, std::less<>> dictionary;
    dictionary.emplace(std::string(), 0);
    std::string current;
    const auto emit = [&](std::optional<unsigned char> symbol) {
        const std::uint64_t phrase_number = out.phrases.size() + 1;
        out.phrases.push_back(Lz78Phrase{dictionary.find(current)->second, symbol});
        out.bit_length += ceil_log2(phrase_number);
        if (symbol.has_value()) {
            out.bit_length += symbol_bits;
            dictionary.emplace(current + static_cast<char>(*symbol),
                               dictionary.size());
        }
    };
    for (char c : input) {
        std::string extended = current + c;
        if (dictionary.contains(extended)) {
            current = std::move(extended);
            continue;
        }
        emit(static_cast<unsigned char>(c));
        current.clear();
    }
    if (!current.empty()) {
        emit(std::nullopt);
    }
    return out;
}

std::string lz78_expand(const Lz78Output& output) {
    std::vector<std::string> dictionary{std::string()};
    std::string out;
    for (const Lz78Phrase& phrase : output.phrases) {
        if (phrase.index >= dictionary.size()) {
            throw Error(errc::value_out_of_range,
                        "phrase references a dictionary entry that does not exist yet");
        }
        std::string expansion = dictionary[phrase.index];
        if (phrase.symbol.has_value()) {
            expansion.push_back(static_cast<char>(*phrase.symbol));
            dictionary.push_back(expansion);
        }
        out += expansion;
    }
    return out;
}

}  // namespace eah
