#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "eah/alphabet.hpp"

namespace eah {

// One comparison row: the codec's component breakdown next to the two
// baseline sizes and the raw size h * ceil(log2 m).
struct BenchRow {
    std::string name;
    std::uint64_t h = 0;
    std::size_t m = 0;
    std::size_t n = 0;
    std::array<std::uint64_t, 5> parts{};
    std::uint64_t leah_bits = 0;
    std::uint64_t lh_bits = 0;
    std::uint64_t llz_bits = 0;
    std::uint64_t raw_bits = 0;
};

BenchRow make_bench_row(std::string name, std::string_view data, std::size_t order,
                        const Alphabet& alphabet);

// Human-readable table followed by the convention notes the numbers depend
// on. Deterministic for identical rows.
std::string format_table(std::span<const BenchRow> rows);

// The same rows as CSV with a header line.
std::string format_csv(std::span<const BenchRow> rows);

}  // namespace eah
