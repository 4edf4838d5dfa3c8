#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "eah/bitstring.hpp"

namespace eah {

// Worklist entry of the tuple-merge construction. `members` are the original
// frequency positions covered by this entry; `ages[i]` counts the merges
// members[i] has been through, which equals its final codeword length.
struct WorkItem {
    std::uint64_t weight = 0;
    std::vector<std::uint32_t> ages;
    std::vector<std::size_t> members;
};

// Combines two entries: weights add, every carried age increments, member
// lists concatenate in order.
WorkItem merge_items(const WorkItem& first, const WorkItem& second);

struct CodeEntry {
    BitString codeword;
    std::size_t length = 0;

    bool operator==(const CodeEntry&) const = default;
};

// One entry per input frequency, input order preserved. For k >= 2 the
// codewords form a prefix code with k distinct elements.
using CodeAssignment = std::vector<CodeEntry>;

// Optimal prefix code over the frequency tuple. Deterministic: when several
// entries tie for the smallest weights, the two lowest worklist positions are
// merged, the earlier position receives bit 0, and the merged entry is
// appended at the tail. A single frequency yields codeword "0".
// Throws errc::empty_input for an empty tuple and errc::value_out_of_range
// for zero frequencies.
CodeAssignment huffman(std::span<const std::uint64_t> frequencies);
CodeAssignment huffman(std::initializer_list<std::uint64_t> frequencies);

// Sum of frequency * codeword length. Throws errc::length_mismatch when the
// tuple sizes differ.
std::uint64_t weighted_cost(const CodeAssignment& assignment,
                            std::span<const std::uint64_t> frequencies);
std::uint64_t weighted_cost(const CodeAssignment& assignment,
                            std::initializer_list<std::uint64_t> frequencies);

}  // namespace eah
