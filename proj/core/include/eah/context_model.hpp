#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eah/alphabet.hpp"
#include "eah/bitstring.hpp"

namespace eah {

struct SuccessorEntry {
    unsigned char symbol = 0;
    std::uint64_t frequency = 0;  // true occurrence count, >= 1
    BitString codeword;

    bool operator==(const SuccessorEntry&) const = default;
};

// Per-context successor statistics of a string: for every n-gram context the
// symbols that follow it, their occurrence counts, and the codewords assigned
// by running huffman() over the counts in alphabet-index order. Also keeps
// the plain n-gram window counts (used for the order >= 2 automaton labels).
class ContextModel {
public:
    ContextModel(Alphabet alphabet, std::size_t order);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t order() const noexcept { return order_; }

    // Contexts in lexicographic order; successors in alphabet-index order.
    const std::map<std::string, std::vector<SuccessorEntry>, std::less<>>& table() const noexcept {
        return table_;
    }
    const std::map<std::string, std::uint64_t, std::less<>>& ngram_stats() const noexcept {
        return ngram_stats_;
    }

    // Null when the context never occurs followed by a successor.
    const std::vector<SuccessorEntry>* successors(std::string_view context) const;
    const SuccessorEntry* find(std::string_view context, unsigned char symbol) const;

    // Sum of all successor frequencies; |w| - n for a model built from w.
    std::uint64_t total_transitions() const noexcept { return total_transitions_; }

private:
    friend ContextModel build_context_model(std::string_view input, std::size_t order,
                                            const Alphabet& alphabet);

    Alphabet alphabet_;
    std::size_t order_;
    std::map<std::string, std::vector<SuccessorEntry>, std::less<>> table_;
    std::map<std::string, std::uint64_t, std::less<>> ngram_stats_;
    std::uint64_t total_transitions_ = 0;
};

// Scans the (order+1)-grams and order-grams of `input`. Every symbol must be
// in the alphabet (errc::unknown_symbol); order must be >= 1.
ContextModel build_context_model(std::string_view input, std::size_t order,
                                 const Alphabet& alphabet);

}  // namespace eah
