#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eah/bitstring.hpp"
#include "eah/context_model.hpp"

namespace eah {

// Edge label: an occurrence count paired with a codeword. An empty codeword
// stands for the silent labels derived from n-gram counts (order >= 2 only).
// Two edges anywhere in the automaton sharing (frequency, codeword) share one
// label.
struct TransitionLabel {
    std::uint64_t frequency = 0;
    BitString codeword;

    bool operator==(const TransitionLabel&) const = default;
    auto operator<=>(const TransitionLabel&) const = default;
};

// Automaton state: a symbol or n-gram of the source string, or the absorbing
// sink that collects every move with no valid successor.
class State {
public:
    State() = default;  // sink

    static State sink() { return State(); }
    static State gram(std::string text);

    bool is_sink() const noexcept { return sink_; }
    const std::string& gram() const noexcept { return gram_; }
    std::string display() const { return sink_ ? "star" : gram_; }

    bool operator==(const State&) const = default;
    // Grams in lexicographic order, the sink after all of them.
    std::strong_ordering operator<=>(const State& other) const {
        if (sink_ != other.sink_) {
            return sink_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return gram_ <=> other.gram_;
    }

private:
    std::string gram_;
    bool sink_ = true;
};

// Nondeterministic automaton tracing the successor structure of a string:
// states are its symbols and n-gram windows plus the sink, labels carry
// (count, codeword) pairs, and the transition function follows which window
// can continue with which coded symbol. The transition function is total and
// never maps to the empty set; every pair without an explicit image falls
// through to the sink.
class AdaptiveAutomaton {
public:
    std::size_t order() const noexcept { return order_; }
    const std::set<State>& states() const noexcept { return states_; }
    const std::set<TransitionLabel>& labels() const noexcept { return labels_; }
    const State& start() const noexcept { return start_; }
    const std::set<State>& finals() const noexcept { return finals_; }

    // Image of one (state, label) pair. Throws errc::unknown_label when the
    // label is not in labels() and errc::value_out_of_range for a foreign
    // state.
    std::set<State> delta(const State& state, const TransitionLabel& label) const;

    // Union of delta over a set of states.
    std::set<State> step(const std::set<State>& current,
                         const TransitionLabel& label) const;

    // True when some run from the start over the codeword labels ends in a
    // final state without entering the sink. For order >= 2 each codeword
    // move is followed by one silent-label move.
    bool accepts_trace(std::span<const TransitionLabel> trace) const;

    // Deterministic DOT rendering: states sorted lexicographically with the
    // sink (token "star") last, edge labels sorted by frequency then codeword.
    std::string to_dot() const;

    // Non-sink adjacency, exposed for structural checks.
    const std::map<State, std::map<TransitionLabel, std::set<State>>>& edges() const noexcept {
        return edges_;
    }

private:
    friend AdaptiveAutomaton build_automaton(std::string_view input, std::size_t order,
                                             const ContextModel& model);

    std::set<State> image(const State& state, const TransitionLabel& label) const;

    std::size_t order_ = 1;
    std::set<State> states_;
    std::set<TransitionLabel> labels_;
    State start_;
    std::set<State> finals_;
    std::map<State, std::map<TransitionLabel, std::set<State>>> edges_;
};

// Builds the order-n automaton of `input` from its context model. Requires
// |input| > order (errc::string_too_short) and a model of the same order
// covering every (context, successor) pair of the input
// (errc::model_mismatch).
AdaptiveAutomaton build_automaton(std::string_view input, std::size_t order,
                                  const ContextModel& model);

// Labels selected by consecutive positions of `input` under the model: the
// label sequence of the coded payload. Used to replay a string against its
// automaton.
std::vector<TransitionLabel> transition_trace(std::string_view input,
                                              const ContextModel& model);

}  // namespace eah
