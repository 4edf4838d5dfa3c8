#include "eah/automaton.hpp"

#include <sstream>

#include "eah/error.hpp"

namespace eah {

State State::gram(std::string text) {
    if (text.empty()) {
        throw Error(errc::value_out_of_range, "gram states must be nonempty");
    }
    State state;
    state.sink_ = false;
    state.gram_ = std::move(text);
    return state;
}

std::set<State> AdaptiveAutomaton::image(const State& state,
                                         const TransitionLabel& label) const {
    if (state.is_sink()) {
        return {State::sink()};
    }
    const auto by_state = edges_.find(state);
    if (by_state != edges_.end()) {
        const auto by_label = by_state->second.find(label);
        if (by_label != by_state->second.end() && !by_label->second.empty()) {
            return by_label->second;
        }
    }
    return {State::sink()};
}

std::set<State> AdaptiveAutomaton::delta(const State& state,
                                         const TransitionLabel& label) const {
    if (!labels_.contains(label)) {
        throw Error(errc::unknown_label, "label is not part of the automaton");
    }
    if (!states_.contains(state)) {
        throw Error(errc::value_out_of_range, "state is not part of the automaton");
    }
    return image(state, label);
}

std::set<State> AdaptiveAutomaton::step(const std::set<State>& current,
                                        const TransitionLabel& label) const {
    std::set<State> out;
    for (const State& state : current) {
        out.merge(delta(state, label));
    }
    return out;
}

bool AdaptiveAutomaton::accepts_trace(std::span<const TransitionLabel> trace) const {
    std::set<State> current{start_};
    const auto advance = [&](const TransitionLabel& label) {
        std::set<State> next;
        for (const State& state : current) {
            next.merge(image(state, label));
        }
        next.erase(State::sink());  // runs through the sink never recover
        current = std::move(next);
    };
    for (const TransitionLabel& label : trace) {
        advance(label);
        if (current.empty()) {
            return false;
        }
        if (order_ >= 2) {
            // One silent move follows every codeword move: collect the images
            // under all silent labels.
            std::set<State> next;
            for (const TransitionLabel& silent : labels_) {
                if (!silent.codeword.empty()) {
                    continue;
                }
                for (const State& state : current) {
                    next.merge(image(state, silent));
                }
            }
            next.erase(State::sink());
            current = std::move(next);
            if (current.empty()) {
                return false;
            }
        }
    }
    for (const State& state : current) {
        if (finals_.contains(state)) {
            return true;
        }
    }
    return false;
}

namespace {

std::string quote_dot(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string label_text(const TransitionLabel& label) {
    std::string code = label.codeword.empty() ? "λ" : label.codeword.to_string();
    return "(" + std::to_string(label.frequency) + "," + code + ")";
}

}  // namespace

std::string AdaptiveAutomaton::to_dot() const {
    std::ostringstream out;
    out << "digraph adaptive_automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point, label=\"\"];\n";
    for (const State& state : states_) {
        out << "  " << quote_dot(state.display());
        if (finals_.contains(state)) {
            out << " [shape=doublecircle]";
        }
        out << ";\n";
    }
    out << "  __start -> " << quote_dot(start_.display()) << ";\n";
    // Group parallel edges: one line per (source, target) with the sorted
    // label list. Labels without an explicit image fall through to the sink,
    // so every state carries an edge for every label.
    for (const State& source : states_) {
        std::map<State, std::vector<TransitionLabel>> grouped;
        if (source.is_sink()) {
            for (const TransitionLabel& label : labels_) {
                grouped[State::sink()].push_back(label);
            }
        } else {
            const auto by_state = edges_.find(source);
            for (const TransitionLabel& label : labels_) {
                const std::set<State>* targets = nullptr;
                if (by_state != edges_.end()) {
                    const auto by_label = by_state->second.find(label);
                    if (by_label != by_state->second.end() && !by_label->second.empty()) {
                        targets = &by_label->second;
                    }
                }
                if (targets == nullptr) {
                    grouped[State::sink()].push_back(label);
                } else {
                    for (const State& target : *targets) {
                        grouped[target].push_back(label);
                    }
                }
            }
        }
        for (const auto& [target, edge_labels] : grouped) {
            out << "  " << quote_dot(source.display()) << " -> "
                << quote_dot(target.display()) << " [label=\"";
            for (std::size_t i = 0; i < edge_labels.size(); ++i) {
                if (i > 0) {
                    out << ",";
                }
                out << label_text(edge_labels[i]);
            }
            out << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

AdaptiveAutomaton build_automaton(std::string_view input, std::size_t order,
                                  const ContextModel& model) {
    if (order == 0) {
        throw Error(errc::value_out_of_range, "automaton order must be at least 1");
    }
    if (input.size() <= order) {
        throw Error(errc::string_too_short,
                    "input of length " + std::to_string(input.size()) +
                        " is too short for order " + std::to_string(order));
    }
    if (model.order() != order) {
        throw Error(errc::model_mismatch, "context model order differs");
    }

    const std::size_t h = input.size();
    const std::size_t n = order;

    AdaptiveAutomaton automaton;
    automaton.order_ = n;
    automaton.states_.insert(State::sink());
    for (std::size_t pos = n; pos < h; ++pos) {
        automaton.states_.insert(State::gram(std::string(1, input[pos])));
    }
    for (std::size_t start = 0; start + n <= h; ++start) {
        automaton.states_.insert(State::gram(std::string(input.substr(start, n))));
    }
    automaton.start_ = State::gram(std::string(input.substr(0, n)));
    automaton.finals_.insert(State::gram(std::string(input.substr(h - n, n))));

    // Codeword labels and their edges come from the (n+1)-gram statistics.
    for (const auto& [context, entries] : model.table()) {
        const State source = State::gram(context);
        if (!automaton.states_.contains(source)) {
            throw Error(errc::model_mismatch,
                        "model context does not occur in the input");
        }
        for (const SuccessorEntry& entry : entries) {
            const TransitionLabel label{entry.frequency, entry.codeword};
            automaton.labels_.insert(label);
            automaton.edges_[source][label].insert(
                State::gram(std::string(1, static_cast<char>(entry.symbol))));
        }
    }
    for (std::size_t pos = n; pos < h; ++pos) {
        if (model.find(input.substr(pos - n, n),
                       static_cast<unsigned char>(input[pos])) == nullptr) {
            throw Error(errc::model_mismatch,
                        "model lacks a (context, successor) pair of the input");
        }
    }

    // Silent labels from the n-gram statistics; they lead from a symbol to
    // the windows ending in it. Materialized for order >= 2 only.
    if (n >= 2) {
        for (const auto& [gram, count] : model.ngram_stats()) {
            const TransitionLabel label{count, BitString()};
            automaton.labels_.insert(label);
            const State symbol_state = State::gram(std::string(1, gram.back()));
            if (automaton.states_.contains(symbol_state)) {
                automaton.edges_[symbol_state][label].insert(State::gram(gram));
            }
        }
    }
    return automaton;
}

std::vector<TransitionLabel> transition_trace(std::string_view input,
                                              const ContextModel& model) {
    const std::size_t n = model.order();
    std::vector<TransitionLabel> trace;
    if (input.size() <= n) {
        return trace;
    }
    trace.reserve(input.size() - n);
    for (std::size_t pos = n; pos < input.size(); ++pos) {
        const SuccessorEntry* entry = model.find(
            input.substr(pos - n, n), static_cast<unsigned char>(input[pos]));
        if (entry == nullptr) {
            throw Error(errc::model_mismatch,
                        "model lacks a (context, successor) pair of the input");
        }
        trace.push_back(TransitionLabel{entry->frequency, entry->codeword});
    }
    return trace;
}

}  // namespace eah
