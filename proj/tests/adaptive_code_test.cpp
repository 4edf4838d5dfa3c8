#include <doctest.h>

#include <map>
#include <random>

#include "eah/adaptive_code.hpp"
#include "eah/error.hpp"
#include "test_util.hpp"

using namespace eah;

namespace {

AdaptiveCodeTable load_table1() {
    static const std::string text = test::read_file(
        std::filesystem::path(TEST_DATA_DIR) / "table1.txt");
    REQUIRE_FALSE(text.empty());
    return parse_code_table(text, Alphabet("abc"), 2);
}

// Order-n table where every context reuses one fixed prefix code, shifted by
// a context-dependent rotation. Passes the sufficiency check by construction.
AdaptiveCodeTable rotated_table(const Alphabet& alphabet, std::size_t order,
                                std::uint64_t seed) {
    AdaptiveCodeTable table(alphabet, order);
    std::vector<BitString> base;
    for (std::size_t i = 0; i + 1 < alphabet.size(); ++i) {
        std::string word(i, '1');
        word.push_back('0');
        base.push_back(BitString::from_string(word));
    }
    base.push_back(
        BitString::from_string(std::string(alphabet.size() - 1, '1')));
    if (alphabet.size() == 1) {
        base = {BitString::from_string("0")};
    }
    std::mt19937_64 rng(seed);
    for (const std::string& context : enumerate_contexts(alphabet, order)) {
        const std::size_t rotation = rng() % alphabet.size();
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            table.set_codeword(alphabet.symbol_at(i), context,
                               base[(i + rotation) % alphabet.size()]);
        }
    }
    return table;
}

}  // namespace

TEST_CASE("the order-two example table encodes as listed") {
    const AdaptiveCodeTable table = load_table1();
    CHECK(table.encode("abacca").to_string() == "001011111100");
    CHECK(table.encode("").empty());
    CHECK(table.encode("a").to_string() == "00");
    CHECK_THROWS_AS(table.encode("abd"), Error);
}

TEST_CASE("encoding length is the sum of the selected codeword lengths") {
    const AdaptiveCodeTable table = load_table1();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::string input = test::random_string(rng, "abc", rng() % 40);
        std::size_t expected = 0;
        for (std::size_t i = 0; i < input.size(); ++i) {
            const std::size_t window = std::min<std::size_t>(i, 2);
            expected += table
                            .codeword(static_cast<unsigned char>(input[i]),
                                      input.substr(i - window, window))
                            .size();
        }
        CHECK(table.encode(input).size() == expected);
    }
}

TEST_CASE("prefix-code check") {
    const auto words = [](std::initializer_list<const char*> texts) {
        std::vector<BitString> out;
        for (const char* text : texts) {
            out.push_back(BitString::from_string(text));
        }
        return out;
    };
    CHECK(is_prefix_code(words({"0", "10", "11"})));
    CHECK_FALSE(is_prefix_code(words({"0", "01"})));
    CHECK(is_prefix_code(words({"00", "11", "10"})));
}

TEST_CASE("sufficiency check accepts the example table") {
    CHECK(check_order_n_sufficiency(load_table1()));
}

TEST_CASE("sufficiency check rejects a prefix violation") {
    AdaptiveCodeTable table = rotated_table(Alphabet("ab"), 1, 3);
    // c(a, lambda) = 0 is a proper prefix of c(b, lambda) = 01.
    table.set_codeword('a', "", BitString::from_string("0"));
    table.set_codeword('b', "", BitString::from_string("01"));
    CHECK_FALSE(check_order_n_sufficiency(table));
}

TEST_CASE("sufficiency check rejects duplicate codewords within a context") {
    AdaptiveCodeTable table = rotated_table(Alphabet("ab"), 1, 4);
    table.set_codeword('a', "a", BitString::from_string("1"));
    table.set_codeword('b', "a", BitString::from_string("1"));
    CHECK_FALSE(check_order_n_sufficiency(table));
}

TEST_CASE("a single-symbol alphabet with codeword 0 everywhere passes") {
    AdaptiveCodeTable table(Alphabet("a"), 1);
    for (const std::string& context : enumerate_contexts(Alphabet("a"), 1)) {
        table.set_codeword('a', context, BitString::from_string("0"));
    }
    CHECK(check_order_n_sufficiency(table));
}

TEST_CASE("tables passing the check encode injectively at desk scale") {
    // Exhaustive: all strings of length <= 6, encodings pairwise distinct.
    const auto check_injective = [](const AdaptiveCodeTable& table) {
        REQUIRE(check_order_n_sufficiency(table));
        const Alphabet& alphabet = table.alphabet();
        std::map<std::string, std::string> seen;  // encoding -> input
        std::vector<std::string> layer{""};
        for (std::size_t length = 0; length <= 6; ++length) {
            std::vector<std::string> next;
            for (const std::string& input : layer) {
                const std::string encoded = table.encode(input).to_string();
                const auto [it, inserted] = seen.emplace(encoded, input);
                if (!inserted) {
                    CAPTURE(input);
                    CAPTURE(it->second);
                    FAIL_CHECK("two inputs share the encoding " << encoded);
                }
                if (length < 6) {
                    for (std::size_t s = 0; s < alphabet.size(); ++s) {
                        next.push_back(
                            input + static_cast<char>(alphabet.symbol_at(s)));
                    }
                }
            }
            layer = std::move(next);
        }
    };
    check_injective(load_table1());
    check_injective(rotated_table(Alphabet("abc"), 2, 17));
    check_injective(rotated_table(Alphabet("ab"), 3, 18));
}

TEST_CASE("length-n context entries cannot influence the first n symbols") {
    AdaptiveCodeTable table = rotated_table(Alphabet("abc"), 2, 5);
    AdaptiveCodeTable tweaked = rotated_table(Alphabet("abc"), 2, 5);
    for (const std::string& context : enumerate_contexts(Alphabet("abc"), 2)) {
        if (context.size() != 2) {
            continue;
        }
        for (std::size_t i = 0; i < 3; ++i) {
            // Re-point every full-length context at a different code.
            tweaked.set_codeword(tweaked.alphabet().symbol_at(i), context,
                                 BitString::from_string(i == 0 ? "1" : i == 1 ? "00" : "01"));
        }
    }
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string prefix = test::random_string(rng, "abc", 2);
        CHECK(table.encode(prefix) == tweaked.encode(prefix));
    }
}

TEST_CASE("table text parser rejects malformed inputs") {
    const Alphabet alphabet("abc");
    CHECK_THROWS_AS(parse_code_table("lambda 0 1", alphabet, 1), Error);
    CHECK_THROWS_AS(parse_code_table("lambda 0 1 00 11", alphabet, 1), Error);
    // Missing contexts.
    CHECK_THROWS_AS(parse_code_table("lambda 0 10 11", alphabet, 1), Error);
}
