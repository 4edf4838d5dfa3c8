#include "eah/huffman.hpp"

#include <string>
#include <utility>

#include "eah/error.hpp"

namespace eah {

WorkItem merge_items(const WorkItem& first, const WorkItem& second) {
    WorkItem merged;
    merged.weight = first.weight + second.weight;
    merged.ages.reserve(first.ages.size() + second.ages.size());
    for (std::uint32_t age : first.ages) {
        merged.ages.push_back(age + 1);
    }
    for (std::uint32_t age : second.ages) {
        merged.ages.push_back(age + 1);
    }
    merged.members.reserve(first.members.size() + second.members.size());
    merged.members.insert(merged.members.end(), first.members.begin(),
                          first.members.end());
    merged.members.insert(merged.members.end(), second.members.begin(),
                          second.members.end());
    return merged;
}

namespace {

// Positions i < j holding the two smallest weights; ties resolved toward the
// lowest positions.
std::pair<std::size_t, std::size_t> select_pair(const std::vector<WorkItem>& list) {
    std::size_t first = 0;
    for (std::size_t q = 1; q < list.size(); ++q) {
        if (list[q].weight < list[first].weight) {
            first = q;
        }
    }
    std::size_t second = first == 0 ? 1 : 0;
    for (std::size_t q = 0; q < list.size(); ++q) {
        if (q == first) {
            continue;
        }
        if (list[q].weight < list[second].weight) {
            second = q;
        }
    }
    return {std::min(first, second), std::max(first, second)};
}

}  // namespace

CodeAssignment huffman(std::span<const std::uint64_t> frequencies) {
    const std::size_t k = frequencies.size();
    if (k == 0) {
        throw Error(errc::empty_input, "frequency tuple is empty");
    }
    std::vector<WorkItem> list;
    list.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (frequencies[i] == 0) {
            throw Error(errc::value_out_of_range, "frequencies must be positive");
        }
        list.push_back(WorkItem{frequencies[i], {0}, {i}});
    }

    std::vector<std::string> words(k);
    if (k == 1) {
        words[0] = "0";
    }
    while (list.size() > 1) {
        const auto [i, j] = select_pair(list);
        for (std::size_t x : list[i].members) {
            words[x].insert(words[x].begin(), '0');
        }
        for (std::size_t x : list[j].members) {
            words[x].insert(words[x].begin(), '1');
        }
        WorkItem merged = merge_items(list[i], list[j]);
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(j));
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
        list.push_back(std::move(merged));
    }

    CodeAssignment out;
    out.reserve(k);
    for (const std::string& word : words) {
        out.push_back(CodeEntry{BitString::from_string(word), word.size()});
    }
    return out;
}

CodeAssignment huffman(std::initializer_list<std::uint64_t> frequencies) {
    return huffman(std::span<const std::uint64_t>(frequencies.begin(), frequencies.size()));
}

std::uint64_t weighted_cost(const CodeAssignment& assignment,
                            std::span<const std::uint64_t> frequencies) {
    if (assignment.size() != frequencies.size()) {
        throw Error(errc::length_mismatch,
                    "assignment and frequency tuple lengths differ");
    }
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        total += frequencies[i] * assignment[i].length;
    }
    return total;
}

std::uint64_t weighted_cost(const CodeAssignment& assignment,
                            std::initializer_list<std::uint64_t> frequencies) {
    return weighted_cost(
        assignment, std::span<const std::uint64_t>(frequencies.begin(), frequencies.size()));
}

}  // namespace eah
