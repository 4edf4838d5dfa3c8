#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eah/alphabet.hpp"

namespace eah {

// One parse step: a back-reference into the phrase dictionary (0 = empty
// root) plus the extension symbol. The final phrase may be a bare reference
// with no extension when the input ends mid-phrase.
struct Lz78Phrase {
    std::uint64_t index = 0;
    std::optional<unsigned char> symbol;

    bool operator==(const Lz78Phrase&) const = default;
};

struct Lz78Output {
    std::vector<Lz78Phrase> phrases;
    std::uint64_t bit_length = 0;
};

// Cost of coding `input` with a single whole-string prefix code: huffman()
// over the counts of the symbols that occur (alphabet-index order), summed as
// count * length. Requires nonempty input (errc::empty_input).
std::uint64_t huffman_baseline_length(std::string_view input, const Alphabet& alphabet);

// Greedy LZ78 dictionary parse. Bit accounting: phrase number t (1-based)
// costs ceil(log2 t) index bits plus ceil(log2 m) symbol bits; a bare final
// reference costs only its index bits.
Lz78Output lz78_encode(std::string_view input, const Alphabet& alphabet);

// Expands a phrase list back to the source string.
std::string lz78_expand(const Lz78Output& output);

}  // namespace eah
