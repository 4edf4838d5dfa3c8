#pragma once

#include <string_view>

namespace eah {

// Bundled sample inputs used by the tests, the benchmarks, and the docs.

// 200 symbols over {a,b,c,d,e}; every context has a skewed successor
// distribution, the kind of input this codec is built for.
std::string_view sample_text_200();

// Nine symbols over {a,b,c,d}; small enough to trace by hand.
std::string_view sample_text_9();

}  // namespace eah
