#include "eah/adaptive_code.hpp"

#include <algorithm>
#include <sstream>

#include "eah/error.hpp"

namespace eah {

AdaptiveCodeTable::AdaptiveCodeTable(Alphabet alphabet, std::size_t order)
    : alphabet_(std::move(alphabet)), order_(order) {
    if (order_ == 0) {
        throw Error(errc::value_out_of_range, "code table order must be at least 1");
    }
}

void AdaptiveCodeTable::set_codeword(unsigned char symbol, std::string_view context,
                                     BitString codeword) {
    if (context.size() > order_) {
        throw Error(errc::value_out_of_range, "context longer than the table order");
    }
    if (codeword.empty()) {
        throw Error(errc::value_out_of_range, "codewords must be nonempty");
    }
    const std::size_t index = alphabet_.index_of(symbol);
    for (char c : context) {
        alphabet_.index_of(static_cast<unsigned char>(c));
    }
    auto it = entries_.find(context);
    if (it == entries_.end()) {
        it = entries_.emplace(std::string(context),
                              std::vector<BitString>(alphabet_.size())).first;
    }
    it->second[index] = std::move(codeword);
}

const BitString& AdaptiveCodeTable::codeword(unsigned char symbol,
                                             std::string_view context) const {
    const std::size_t index = alphabet_.index_of(symbol);
    const auto it = entries_.find(context);
    if (it == entries_.end() || it->second[index].empty()) {
        throw Error(errc::value_out_of_range,
                    "no codeword for the requested (symbol, context) pair");
    }
    return it->second[index];
}

bool AdaptiveCodeTable::is_total() const {
    const std::vector<std::string> contexts = enumerate_contexts(alphabet_, order_);
    for (const std::string& context : contexts) {
        const std::vector<BitString>* codes = context_codes(context);
        if (codes == nullptr) {
            return false;
        }
    }
    return true;
}

BitString AdaptiveCodeTable::encode(std::string_view input) const {
    BitString out;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const std::size_t window = std::min(i, order_);
        const std::string_view context = input.substr(i - window, window);
        out.append(codeword(static_cast<unsigned char>(input[i]), context));
    }
    return out;
}

const std::vector<BitString>* AdaptiveCodeTable::context_codes(
    std::string_view context) const {
    const auto it = entries_.find(context);
    if (it == entries_.end()) {
        return nullptr;
    }
    for (const BitString& code : it->second) {
        if (code.empty()) {
            return nullptr;
        }
    }
    return &it->second;
}

std::vector<std::string> enumerate_contexts(const Alphabet& alphabet,
                                            std::size_t max_length) {
    constexpr std::size_t kLimit = std::size_t{1} << 20;
    const std::size_t m = alphabet.size();
    std::vector<std::string> out{std::string()};
    std::size_t first_of_length = 0;
    for (std::size_t length = 1; length <= max_length; ++length) {
        const std::size_t begin = first_of_length;
        const std::size_t end = out.size();
        first_of_length = end;
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t s = 0; s < m; ++s) {
                if (out.size() >= kLimit) {
                    throw Error(errc::format_limit, "context enumeration too large");
                }
                std::string next = out[i];
                next.push_back(static_cast<char>(alphabet.symbol_at(s)));
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

bool is_prefix_code(std::span<const BitString> words) {
    std::vector<BitString> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        // Lexicographic order puts a prefix immediately before its extensions.
        if (sorted[i].is_proper_prefix_of(sorted[i + 1])) {
            return false;
        }
    }
    return true;
}

bool check_order_n_sufficiency(const AdaptiveCodeTable& table) {
    const std::vector<std::string> contexts =
        enumerate_contexts(table.alphabet(), table.order());
    for (const std::string& context : contexts) {
        const std::vector<BitString>* codes = table.context_codes(context);
        if (codes == nullptr) {
            throw Error(errc::value_out_of_range,
                        "code table is not total over contexts of length <= order");
        }
        std::vector<BitString> sorted(*codes);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return false;  // duplicate codewords break decodability
        }
        if (!is_prefix_code(sorted)) {
            return false;
        }
    }
    return true;
}

AdaptiveCodeTable parse_code_table(std::string_view text, const Alphabet& alphabet,
                                   std::size_t order) {
    AdaptiveCodeTable table(alphabet, order);
    std::istringstream stream{std::string(text)};
    std::string line;
    std::size_t line_number = 0;
    std::size_t parsed_lines = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string token;
        if (!(fields >> token) || token.starts_with('#')) {
            continue;
        }
        const std::string context = token == "lambda" ? std::string() : token;
        if (context.size() > order) {
            throw Error(errc::parse_error,
                        "line " + std::to_string(line_number) + ": context '" + token +
                            "' longer than order " + std::to_string(order));
        }
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            std::string word;
            if (!(fields >> word)) {
                throw Error(errc::parse_error,
                            "line " + std::to_string(line_number) + ": expected " +
                                std::to_string(alphabet.size()) + " codewords");
            }
            table.set_codeword(alphabet.symbol_at(i), context,
                               BitString::from_string(word));
        }
        std::string extra;
        if (fields >> extra) {
            throw Error(errc::parse_error,
                        "line " + std::to_string(line_number) + ": trailing token '" +
                            extra + "'");
        }
        ++parsed_lines;
    }
    const std::size_t expected = enumerate_contexts(alphabet, order).size();
    if (parsed_lines != expected || !table.is_total()) {
        throw Error(errc::parse_error,
                    "table must define every context of length 0.." +
                        std::to_string(order) + " exactly once");
    }
    return table;
}

}  // namespace eah
