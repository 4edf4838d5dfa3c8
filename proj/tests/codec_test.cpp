#include <doctest.h>

#include <map>
#include <random>

#include "eah/automaton.hpp"
#include "eah/codec.hpp"
#include "eah/context_model.hpp"
#include "eah/error.hpp"
#include "eah/huffman.hpp"
#include "eah/samples.hpp"
#include "test_util.hpp"

using namespace eah;

namespace {

const Alphabet kAbcde("abcde");

// The 200-symbol sample's per-context codes, frozen by hand from its bigram
// statistics; used as an independent route to the e component.
const std::map<std::string, std::map<char, std::string>> kSample200Codes{
    {"a", {{'b', "0"}}},
    {"b", {{'a', "0"}, {'e', "1"}}},
    {"c", {{'a', "10"}, {'c', "0"}, {'e', "11"}}},
    {"d", {{'c', "0"}}},
    {"e", {{'d', "0"}}},
};

std::string replay_e(std::string_view input,
                     const std::map<std::string, std::map<char, std::string>>& codes) {
    std::string out;
    for (std::size_t i = 1; i < input.size(); ++i) {
        out += codes.at(std::string(1, input[i - 1])).at(input[i]);
    }
    return out;
}

}  // namespace

TEST_CASE("context model of the 200-symbol sample") {
    const ContextModel model = build_context_model(sample_text_200(), 1, kAbcde);
    const std::vector<SuccessorEntry>* entries = model.successors("c");
    REQUIRE(entries != nullptr);
    REQUIRE(entries->size() == 3);
    CHECK((*entries)[0] == SuccessorEntry{'a', 22, BitString::from_string("10")});
    CHECK((*entries)[1] == SuccessorEntry{'c', 28, BitString::from_string("0")});
    CHECK((*entries)[2] == SuccessorEntry{'e', 14, BitString::from_string("11")});
    CHECK(model.total_transitions() == 199);
}

TEST_CASE("context model of the nine-symbol sample") {
    const ContextModel model =
        build_context_model(sample_text_9(), 1, Alphabet("abcd"));
    const std::vector<SuccessorEntry>* entries = model.successors("b");
    REQUIRE(entries != nullptr);
    REQUIRE(entries->size() == 2);
    CHECK((*entries)[0] == SuccessorEntry{'a', 2, BitString::from_string("0")});
    CHECK((*entries)[1] == SuccessorEntry{'d', 1, BitString::from_string("1")});
}

TEST_CASE("context model of a string no longer than the order") {
    const ContextModel model = build_context_model("ab", 2, Alphabet("ab"));
    CHECK(model.table().empty());
    REQUIRE(model.ngram_stats().size() == 1);
    CHECK(model.ngram_stats().at("ab") == 1);
    CHECK(model.total_transitions() == 0);
}

TEST_CASE("encoding the 200-symbol sample, order one") {
    const EahPayload payload = encode(sample_text_200(), 1, kAbcde);
    CHECK(payload.original_length == 200);
    CHECK(payload.a.to_string() == "000");
    CHECK(payload.b.to_string() == "11111");
    CHECK(payload.c.to_string() == "0110010000001100000101100");
    CHECK(payload.d.to_string() ==
          "001000"  // (a, context b):  8
          "010110"  // (a, context c): 22
          "011111"  // (b, context a): 31
          "011100"  // (c, context c): 28
          "100100"  // (c, context d): 36
          "100101"  // (d, context e): 37
          "010111"  // (e, context b): 23
          "001110"  // (e, context c): 14
    );
    CHECK(payload.e.size() == 235);
    CHECK(payload.e.to_string() == replay_e(sample_text_200(), kSample200Codes));
    CHECK(payload.component_lengths() ==
          std::array<std::uint64_t, 5>{3, 5, 25, 48, 235});
    CHECK(leah(payload) == 316);
    validate_payload(payload);
}

TEST_CASE("encoding the nine-symbol sample, order one") {
    const EahPayload payload = encode(sample_text_9(), 1, Alphabet("abcd"));
    CHECK(payload.a.to_string() == "00");
    CHECK(payload.b.to_string() == "1111");
    CHECK(payload.c.to_string() == "0100100110000110");
    CHECK(payload.d.to_string() == "100110010101");
    CHECK(payload.e.to_string() == "01001000");
    CHECK(leah(payload) == 42);
    CHECK(decode(payload) == sample_text_9());
}

TEST_CASE("inputs no longer than the order ride entirely in component a") {
    const EahPayload payload = encode("a", 1, kAbcde);
    CHECK(payload.original_length == 1);
    CHECK(payload.a.to_string() == "000");
    CHECK(payload.b.empty());
    CHECK(payload.c.empty());
    CHECK(payload.d.empty());
    CHECK(payload.e.empty());
    CHECK(leah(payload) == 3);
    CHECK(decode(payload) == "a");
    validate_payload(payload);

    const EahPayload two = encode("ed", 3, kAbcde);
    CHECK(two.a.size() == 6);
    CHECK(decode(two) == "ed");

    const EahPayload empty = encode("", 2, kAbcde);
    CHECK(empty.original_length == 0);
    CHECK(empty.total_bits() == 0);
    CHECK(decode(empty).empty());
}

TEST_CASE("single-symbol alphabet degenerates to counting") {
    const Alphabet unary("a");
    const EahPayload payload = encode("aaaa", 1, unary);
    CHECK(payload.a.empty());  // zero bits per symbol
    CHECK(payload.b.to_string() == "1");
    CHECK(payload.c.to_string() == "1");
    CHECK(payload.d.to_string() == "11");  // count 3, two bits wide
    CHECK(payload.e.to_string() == "000");
    CHECK(decode(payload) == "aaaa");
    validate_payload(payload);
}

TEST_CASE("encode rejects symbols outside the alphabet") {
    CHECK_THROWS_AS(encode("abxba", 1, Alphabet("ab")), Error);
    CHECK_THROWS_AS(encode("x", 2, Alphabet("ab")), Error);
}

TEST_CASE("decoding rejects inconsistent payloads") {
    const Alphabet ab("ab");

    SUBCASE("frequency block not divisible by the marked pairs") {
        EahPayload payload = encode("aba", 1, ab);
        REQUIRE(payload.d.size() == 2);  // two marked pairs
        payload.d = BitString::zeros(13);
        CHECK_THROWS_WITH_AS(static_cast<void>(decode(payload)),
                             doctest::Contains("not a multiple"), Error);
    }
    SUBCASE("trailing bits in the codeword stream") {
        EahPayload payload = encode("aba", 1, ab);
        payload.e.push_back(false);
        CHECK_THROWS_WITH_AS(static_cast<void>(decode(payload)),
                             doctest::Contains("trailing"), Error);
    }
    SUBCASE("length pointing past the coded symbols") {
        EahPayload payload = encode("ab", 1, ab);
        payload.original_length = 3;
        CHECK_THROWS_WITH_AS(static_cast<void>(decode(payload)),
                             doctest::Contains("no marked successors"), Error);
    }
    SUBCASE("lead symbol index outside the alphabet") {
        EahPayload payload = encode("a", 1, Alphabet("abc"));
        payload.a = BitString::from_string("11");
        CHECK_THROWS_AS(static_cast<void>(decode(payload)), Error);
    }
    SUBCASE("zero frequency field") {
        EahPayload payload = encode("aba", 1, ab);
        payload.d = BitString::zeros(2);
        CHECK_THROWS_AS(static_cast<void>(decode(payload)), Error);
    }
    SUBCASE("nonempty tail components on a short input") {
        EahPayload payload = encode("a", 1, ab);
        payload.e.push_back(true);
        CHECK_THROWS_AS(static_cast<void>(decode(payload)), Error);
    }
}

TEST_CASE("payload validation checks the component-length formulas") {
    EahPayload payload = encode(sample_text_9(), 1, Alphabet("abcd"));
    validate_payload(payload);

    SUBCASE("wrong e length") {
        payload.e.push_back(true);
        CHECK_THROWS_AS(validate_payload(payload), Error);
    }
    SUBCASE("slack frequency width") {
        // Re-pad every frequency to one extra bit: still parseable, but not
        // the canonical encoding.
        EahPayload wide = payload;
        wide.d = BitString();
        const ContextModel model =
            build_context_model(sample_text_9(), 1, Alphabet("abcd"));
        for (char symbol : std::string("abcd")) {
            for (const auto& [context, entries] : model.table()) {
                for (const SuccessorEntry& entry : entries) {
                    if (static_cast<char>(entry.symbol) == symbol) {
                        wide.d.append(fixed_width_repr(entry.frequency, 3));
                    }
                }
            }
        }
        REQUIRE(wide.d.size() == 18);
        CHECK_THROWS_WITH_AS(validate_payload(wide), doctest::Contains("wider"),
                             Error);
    }
}

TEST_CASE("coded length equals the weighted cost of the context model") {
    std::mt19937_64 rng(77);
    const std::string_view pool = "abcdefgh";
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t order = 1 + rng() % 3;
        const std::size_t m = 2 + rng() % 7;
        const std::string input =
            test::random_string(rng, pool.substr(0, m), order + 1 + rng() % 300);
        const Alphabet alphabet(pool.substr(0, m));
        const EahPayload payload = encode(input, order, alphabet);
        const ContextModel model = build_context_model(input, order, alphabet);

        std::uint64_t expected_bits = 0;
        for (const auto& [context, entries] : model.table()) {
            for (const SuccessorEntry& entry : entries) {
                expected_bits += entry.frequency * entry.codeword.size();
            }
        }
        CHECK(payload.e.size() == expected_bits);

        std::uint64_t replayed_bits = 0;
        for (const TransitionLabel& label : transition_trace(input, model)) {
            replayed_bits += label.codeword.size();
        }
        CHECK(payload.e.size() == replayed_bits);
        validate_payload(payload);
    }
}

TEST_CASE("round trips over random strings") {
    std::mt19937_64 rng(123);
    const std::string_view pool = "abcdefgh";
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t order = 1 + rng() % 3;
        const std::size_t m = 2 + rng() % 7;
        const std::string input =
            test::random_string(rng, pool.substr(0, m), rng() % 800);
        const Alphabet alphabet(pool.substr(0, m));
        const EahPayload payload = encode(input, order, alphabet);
        CHECK(decode(payload) == input);
    }
}

TEST_CASE("encoding is deterministic") {
    const EahPayload first = encode(sample_text_200(), 1, kAbcde);
    const EahPayload second = encode(sample_text_200(), 1, kAbcde);
    CHECK(first.a == second.a);
    CHECK(first.b == second.b);
    CHECK(first.c == second.c);
    CHECK(first.d == second.d);
    CHECK(first.e == second.e);
}
