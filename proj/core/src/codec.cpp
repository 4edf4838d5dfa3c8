#include "eah/codec.hpp"

#include <map>
#include <optional>
#include <vector>

#include "eah/context_model.hpp"
#include "eah/error.hpp"
#include "eah/huffman.hpp"

namespace eah {

namespace {

// Hard cap on the context-bitmap size: b alone would exceed 32 MiB beyond
// this, and the format becomes useless long before.
constexpr std::uint64_t kMaxContexts = std::uint64_t{1} << 28;

std::uint64_t context_count(std::size_t m, std::size_t n) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > kMaxContexts / m) {
            throw Error(errc::format_limit,
                        "context space " + std::to_string(m) + "^" +
                            std::to_string(n) + " exceeds the format limit");
        }
        count *= m;
    }
    return count;
}

// Context string whose alphabet indices spell `index` in base m.
std::string context_of_index(std::uint64_t index, const Alphabet& alphabet,
                             std::size_t order) {
    std::string context(order, '\0');
    if (alphabet.size() == 1) {
        // Base-1 positional digits degenerate; the single context is the
        // lone symbol repeated.
        for (std::size_t i = 0; i < order; ++i) {
            context[i] = static_cast<char>(alphabet.symbol_at(0));
        }
        return context;
    }
    const DigitTuple digits =
        base_m_digits(index, static_cast<std::uint32_t>(alphabet.size()), order);
    for (std::size_t i = 0; i < order; ++i) {
        context[i] = static_cast<char>(alphabet.symbol_at(digits.digits[i]));
    }
    return context;
}

struct ParsedPayload {
    std::vector<std::string> occurring_contexts;  // contexts with a set b-bit
    // context -> successors with frequencies and rebuilt codewords
    std::map<std::string, std::vector<SuccessorEntry>, std::less<>> table;
    std::uint64_t expected_e_bits = 0;
    std::size_t max_freq_width = 0;
    std::size_t marked_count = 0;
};

[[noreturn]] void malformed(const std::string& what) {
    throw Error(errc::malformed_payload, what);
}

// Recovers the per-context code tables from b, c and d. Performs all
// structural checks on the way.
ParsedPayload parse_payload(const EahPayload& payload) {
    const Alphabet& alphabet = payload.alphabet;
    const std::size_t m = alphabet.size();
    const std::size_t n = payload.order;
    const std::size_t bits_per_symbol = alphabet.bits_per_symbol();
    const std::uint64_t h = payload.original_length;

    if (n == 0) {
        malformed("order must be at least 1");
    }
    const std::uint64_t lead_symbols = h < n ? h : n;
    if (payload.a.size() != lead_symbols * bits_per_symbol) {
        malformed("component a has " + std::to_string(payload.a.size()) +
                  " bits, expected " + std::to_string(lead_symbols * bits_per_symbol));
    }

    ParsedPayload parsed;
    if (h <= n) {
        if (!payload.b.empty() || !payload.c.empty() || !payload.d.empty() ||
            !payload.e.empty()) {
            malformed("components b..e must be empty when the whole input fits in a");
        }
        return parsed;
    }

    const std::uint64_t contexts = context_count(m, n);
    if (payload.b.size() != contexts) {
        malformed("component b has " + std::to_string(payload.b.size()) +
                  " bits, expected " + std::to_string(contexts));
    }
    for (std::uint64_t j = 0; j < contexts; ++j) {
        if (payload.b.bit(j)) {
            parsed.occurring_contexts.push_back(context_of_index(j, alphabet, n));
        }
    }
    if (parsed.occurring_contexts.empty()) {
        malformed("no context is marked although positions beyond the lead exist");
    }

    if (payload.c.size() != m * parsed.occurring_contexts.size()) {
        malformed("component c has " + std::to_string(payload.c.size()) +
                  " bits, expected " +
                  std::to_string(m * parsed.occurring_contexts.size()));
    }
    // Marked (symbol, context) pairs in the symbol-major scan order of c.
    std::vector<std::pair<std::size_t, std::size_t>> marked;
    std::size_t c_pos = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < parsed.occurring_contexts.size(); ++j) {
            if (payload.c.bit(c_pos++)) {
                marked.emplace_back(i, j);
            }
        }
    }
    parsed.marked_count = marked.size();
    if (marked.empty()) {
        malformed("component c marks no (symbol, context) pair");
    }
    if (payload.d.size() % marked.size() != 0) {
        malformed("component d (" + std::to_string(payload.d.size()) +
                  " bits) is not a multiple of the " + std::to_string(marked.size()) +
                  " marked pairs");
    }
    const std::size_t width = payload.d.size() / marked.size();
    if (width == 0) {
        malformed("component d stores zero-width frequencies");
    }
    parsed.max_freq_width = width;

    std::map<std::string, std::map<std::size_t, std::uint64_t>, std::less<>> counts;
    std::size_t d_pos = 0;
    for (const auto& [symbol_index, context_index] : marked) {
        if (width > 63) {
            malformed("frequency fields wider than 63 bits");
        }
        std::uint64_t frequency = 0;
        for (std::size_t bit = 0; bit < width; ++bit) {
            frequency = (frequency << 1) | static_cast<std::uint64_t>(payload.d.bit(d_pos++));
        }
        if (frequency == 0) {
            malformed("marked pair with zero frequency");
        }
        counts[parsed.occurring_contexts[context_index]][symbol_index] = frequency;
    }

    for (const auto& [context, successor_counts] : counts) {
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
            parsed.expected_e_bits += count * codes[slot].length;
            entries.push_back(SuccessorEntry{alphabet.symbol_at(index), count,
                                             codes[slot].codeword});
            ++slot;
        }
        parsed.table.emplace(context, std::move(entries));
    }
    return parsed;
}

}  // namespace

EahPayload encode(std::string_view input, std::size_t order, const Alphabet& alphabet) {
    if (order == 0) {
        throw Error(errc::value_out_of_range, "order must be at least 1");
    }
    const std::size_t m = alphabet.size();
    const std::size_t bits_per_symbol = alphabet.bits_per_symbol();
    const std::uint64_t h = input.size();

    EahPayload payload{alphabet, order, h, {}, {}, {}, {}, {}};

    const std::size_t lead_symbols =
        static_cast<std::size_t>(h < order ? h : order);
    for (std::size_t i = 0; i < lead_symbols; ++i) {
        const std::size_t index = alphabet.index_of(static_cast<unsigned char>(input[i]));
        if (bits_per_symbol > 0) {
            payload.a.append(fixed_width_repr(index, bits_per_symbol));
        }
    }
    if (h <= order) {
        return payload;
    }

    const ContextModel model = build_context_model(input, order, alphabet);
    const std::uint64_t contexts = context_count(m, order);

    std::vector<std::string> occurring;
    for (std::uint64_t j = 0; j < contexts; ++j) {
        const std::string context = context_of_index(j, alphabet, order);
        const bool occurs = model.successors(context) != nullptr;
        payload.b.push_back(occurs);
        if (occurs) {
            occurring.push_back(context);
        }
    }

    std::vector<const SuccessorEntry*> marked;
    for (std::size_t i = 0; i < m; ++i) {
        const unsigned char symbol = alphabet.symbol_at(i);
        for (const std::string& context : occurring) {
            const SuccessorEntry* entry = model.find(context, symbol);
            payload.c.push_back(entry != nullptr);
            if (entry != nullptr) {
                marked.push_back(entry);
            }
        }
    }

    std::size_t max_width = 0;
    for (const SuccessorEntry* entry : marked) {
        max_width = std::max(max_width, binary_width(entry->frequency));
    }
    for (const SuccessorEntry* entry : marked) {
        payload.d.append(fixed_width_repr(entry->frequency, max_width));
    }

    for (std::size_t pos = order; pos < input.size(); ++pos) {
        const SuccessorEntry* entry = model.find(
            input.substr(pos - order, order), static_cast<unsigned char>(input[pos]));
        payload.e.append(entry->codeword);
    }
    return payload;
}

std::string decode(const EahPayload& payload) {
    const Alphabet& alphabet = payload.alphabet;
    const std::size_t n = payload.order;
    const std::size_t bits_per_symbol = alphabet.bits_per_symbol();
    const std::uint64_t h = payload.original_length;

    const ParsedPayload parsed = parse_payload(payload);

    std::string out;
    out.reserve(h);
    const std::uint64_t lead_symbols = h < n ? h : n;
    for (std::uint64_t i = 0; i < lead_symbols; ++i) {
        std::uint64_t index = 0;
        for (std::size_t bit = 0; bit < bits_per_symbol; ++bit) {
            index = (index << 1) |
                    static_cast<std::uint64_t>(payload.a.bit(i * bits_per_symbol + bit));
        }
        if (index >= alphabet.size()) {
            throw Error(errc::malformed_payload,
                        "lead symbol index " + std::to_string(index) +
                            " outside the alphabet");
        }
        out.push_back(static_cast<char>(alphabet.symbol_at(index)));
    }
    if (h <= n) {
        return out;
    }

    // Stream-decode e: greedy prefix match within the current context's
    // rebuilt prefix code, then slide the window.
    std::size_t e_pos = 0;
    while (out.size() < h) {
        const std::string_view context =
            std::string_view(out).substr(out.size() - n, n);
        const auto entries = parsed.table.find(context);
        if (entries == parsed.table.end()) {
            throw Error(errc::malformed_payload,
                        "decoding reached a context with no marked successors");
        }
        const SuccessorEntry* match = nullptr;
        for (const SuccessorEntry& entry : entries->second) {
            if (payload.e.matches_at(e_pos, entry.codeword)) {
                match = &entry;
                break;
            }
        }
        if (match == nullptr) {
            throw Error(errc::malformed_payload,
                        "component e does not continue with a codeword of the "
                        "current context");
        }
        e_pos += match->codeword.size();
        out.push_back(static_cast<char>(match->symbol));
    }
    if (e_pos != payload.e.size()) {
        throw Error(errc::malformed_payload,
                    "component e has " + std::to_string(payload.e.size() - e_pos) +
                        " trailing bits");
    }
    return out;
}

std::uint64_t leah(const EahPayload& payload) { return payload.total_bits(); }

void validate_payload(const EahPayload& payload) {
    const ParsedPayload parsed = parse_payload(payload);
    if (payload.original_length <= payload.order) {
        return;
    }
    if (payload.e.size() != parsed.expected_e_bits) {
        throw Error(errc::malformed_payload,
                    "component e has " + std::to_string(payload.e.size()) +
                        " bits, the stored frequencies require " +
                        std::to_string(parsed.expected_e_bits));
    }
    // The stored field width must be exactly the width of the largest
    // frequency, or the payload is not the canonical encoding.
    std::uint64_t max_frequency = 0;
    for (const auto& [context, entries] : parsed.table) {
        for (const SuccessorEntry& entry : entries) {
            max_frequency = std::max(max_frequency, entry.frequency);
        }
    }
    if (binary_width(max_frequency) != parsed.max_freq_width) {
        throw Error(errc::malformed_payload,
                    "frequency fields are wider than the largest frequency needs");
    }
}

}  // namespace eah
