#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eah/alphabet.hpp"
#include "eah/bitstring.hpp"

namespace eah {

// Code table of order n: one nonempty codeword per (symbol, context) pair,
// for every context of length 0..n over the alphabet. The encoder picks the
// codeword of each symbol based on the preceding min(position, n) symbols.
class AdaptiveCodeTable {
public:
    AdaptiveCodeTable(Alphabet alphabet, std::size_t order);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t order() const noexcept { return order_; }

    void set_codeword(unsigned char symbol, std::string_view context, BitString codeword);
    const BitString& codeword(unsigned char symbol, std::string_view context) const;

    // True when every (symbol, context) pair with |context| <= order has a
    // codeword.
    bool is_total() const;

    // Homomorphic extension: codewords of consecutive symbols, each selected
    // by its context, concatenated. Throws errc::unknown_symbol.
    BitString encode(std::string_view input) const;

    // Codewords of one context in alphabet order; null when incomplete.
    const std::vector<BitString>* context_codes(std::string_view context) const;

private:
    Alphabet alphabet_;
    std::size_t order_;
    // context -> per-symbol codewords (alphabet order); empty codeword = unset
    std::map<std::string, std::vector<BitString>, std::less<>> entries_;
};

// All contexts of length 0..max_length over the alphabet, shortest first,
// index-lexicographic within a length. Throws errc::format_limit when the
// enumeration would exceed 2^20 contexts.
std::vector<std::string> enumerate_contexts(const Alphabet& alphabet,
                                            std::size_t max_length);

// True when no word is a proper prefix of another; duplicates are collapsed.
bool is_prefix_code(std::span<const BitString> words);

// True when every context's codeword set has |alphabet| distinct elements and
// is a prefix code. A true result certifies order-n adaptivity; false is
// inconclusive.
bool check_order_n_sufficiency(const AdaptiveCodeTable& table);

// Text format: one line per context, the context token (or "lambda" for the
// empty context) followed by one codeword per alphabet symbol, in alphabet
// order. Every context of length 0..order must be present exactly once.
AdaptiveCodeTable parse_code_table(std::string_view text, const Alphabet& alphabet,
                                   std::size_t order);

}  // namespace eah
