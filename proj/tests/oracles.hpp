#pragma once

// Independent reference computations the tests check the library against.
// Everything here is deliberately brute force and shares no code with the
// implementation paths under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace eah::test {

// Minimum of sum(frequency * leaf depth) over every full binary code tree,
// found by trying every merge pair at every step (memoized on the sorted
// multiset). A single frequency is charged one bit, the cost of the lone
// codeword "0".
class PrefixTreeOracle {
public:
    std::uint64_t min_cost(std::span<const std::uint64_t> frequencies) {
        if (frequencies.size() == 1) {
            return frequencies[0];
        }
        std::vector<std::uint64_t> sorted(frequencies.begin(), frequencies.end());
        std::sort(sorted.begin(), sorted.end());
        return solve(sorted);
    }

private:
    std::uint64_t solve(const std::vector<std::uint64_t>& multiset) {
        if (multiset.size() <= 1) {
            return 0;
        }
        const auto cached = memo_.find(multiset);
        if (cached != memo_.end()) {
            return cached->second;
        }
        std::uint64_t best = ~std::uint64_t{0};
        for (std::size_t i = 0; i < multiset.size(); ++i) {
            for (std::size_t j = i + 1; j < multiset.size(); ++j) {
                std::vector<std::uint64_t> next;
                next.reserve(multiset.size() - 1);
                for (std::size_t q = 0; q < multiset.size(); ++q) {
                    if (q != i && q != j) {
                        next.push_back(multiset[q]);
                    }
                }
                const std::uint64_t merged = multiset[i] + multiset[j];
                next.insert(std::lower_bound(next.begin(), next.end(), merged),
                            merged);
                best = std::min(best, merged + solve(next));
            }
        }
        memo_.emplace(multiset, best);
        return best;
    }

    std::map<std::vector<std::uint64_t>, std::uint64_t> memo_;
};

}  // namespace eah::test
