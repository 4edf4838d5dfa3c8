#include "eah/context_model.hpp"

#include <algorithm>

#include "eah/error.hpp"
#include "eah/huffman.hpp"

namespace eah {

ContextModel::ContextModel(Alphabet alphabet, std::size_t order)
    : alphabet_(std::move(alphabet)), order_(order) {
    if (order_ == 0) {
        throw Error(errc::value_out_of_range, "context order must be at least 1");
    }
}

const std::vector<SuccessorEntry>* ContextModel::successors(std::string_view context) const {
    const auto it = table_.find(context);
    return it == table_.end() ? nullptr : &it->second;
}

const SuccessorEntry* ContextModel::find(std::string_view context,
                                         unsigned char symbol) const {
    const std::vector<SuccessorEntry>* entries = successors(context);
    if (entries == nullptr) {
        return nullptr;
    }
    for (const SuccessorEntry& entry : *entries) {
        if (entry.symbol == symbol) {
            return &entry;
        }
    }
    return nullptr;
}

ContextModel build_context_model(std::string_view input, std::size_t order,
                                 const Alphabet& alphabet) {
    ContextModel model(alphabet, order);
    for (char c : input) {
        alphabet.index_of(static_cast<unsigned char>(c));  // throws on unknown
    }

    const std::size_t h = input.size();
    const std::size_t n = order;

    // Successor counts per context, keyed by alphabet index within a context.
    std::map<std::string, std::map<std::size_t, std::uint64_t>, std::less<>> counts;
    for (std::size_t pos = n; pos < h; ++pos) {
        const std::string context(input.substr(pos - n, n));
        const auto symbol = static_cast<unsigned char>(input[pos]);
        ++counts[context][alphabet.index_of(symbol)];
        ++model.total_transitions_;
    }
    for (auto& [context, successor_counts] : counts) {
        std::vector<std::uint64_t> frequencies;
        frequencies.reserve(successor_counts.size());
        for (const auto& [index, count] : successor_counts) {
            frequencies.push_back(count);
        }
        const CodeAssignment codes = huffman(frequencies);
        std::vector<SuccessorEntry> entries;
        entries.reserve(successor_counts.size());
        std::size_t slot = 0;
        for (const auto& [index, count] : successor_counts) {
            entries.push_back(SuccessorEntry{alphabet.symbol_at(index), count,
                                             codes[slot].codeword});
            ++slot;
        }
        model.table_.emplace(context, std::move(entries));
    }

    // All n-gram windows, the final one included.
    for (std::size_t start = 0; start + n <= h; ++start) {
        ++model.ngram_stats_[std::string(input.substr(start, n))];
    }
    return model;
}

}  // namespace eah
