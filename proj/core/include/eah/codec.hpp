#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "eah/alphabet.hpp"
#include "eah/bitstring.hpp"

namespace eah {

// Encoded form of a string: header parameters plus five bitstrings.
//   a - fixed-width alphabet indices of the first min(h, n) symbols
//   b - context-occurrence bitmap over all m^n contexts, in index order
//   c - per-symbol successor bitmap, restricted to contexts marked in b
//       (symbol-major: all contexts of symbol 0, then symbol 1, ...)
//   d - fixed-width successor frequencies, one per set bit of c, all padded
//       to the width of the largest one
//   e - the per-context Huffman codewords of positions n+1..h
// When h <= n the string is carried entirely by `a` and b..e are empty.
struct EahPayload {
    Alphabet alphabet;
    std::size_t order = 1;
    std::uint64_t original_length = 0;  // h
    BitString a, b, c, d, e;

    std::array<std::uint64_t, 5> component_lengths() const {
        return {a.size(), b.size(), c.size(), d.size(), e.size()};
    }
    std::uint64_t total_bits() const {
        return a.size() + b.size() + c.size() + d.size() + e.size();
    }
};

// Encodes `input` over the alphabet with context order `order` (>= 1).
// Deterministic: identical inputs produce identical payloads. Throws
// errc::unknown_symbol for foreign bytes and errc::format_limit when the
// context space m^order is too large to enumerate.
EahPayload encode(std::string_view input, std::size_t order, const Alphabet& alphabet);

// Reconstructs the exact input of encode(). Rebuilding the per-context
// codewords from the stored frequencies is bit-identical to the encoder
// because the codeword assignment is a deterministic function of the
// frequency tuple. Throws errc::malformed_payload when the payload is
// internally inconsistent.
std::string decode(const EahPayload& payload);

// Total payload size in bits, the compressed-size metric of this codec.
std::uint64_t leah(const EahPayload& payload);

// Checks the structural component-length invariants (including that the
// stored frequencies reproduce codewords totalling |e| bits). Throws
// errc::malformed_payload.
void validate_payload(const EahPayload& payload);

}  // namespace eah
