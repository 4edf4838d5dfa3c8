#pragma once

#include <stdexcept>
#include <string>

namespace eah {

// Failure categories surfaced by the library. The CLI maps any of these to
// exit code 2 (data error); usage problems never reach this type.
enum class errc {
    width_overflow,
    value_out_of_range,
    empty_input,
    length_mismatch,
    unknown_symbol,
    string_too_short,
    unknown_label,
    model_mismatch,
    parse_error,
    malformed_payload,
    malformed_container,
    unsupported_version,
    format_limit,
    io_failure,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what_arg)
        : std::runtime_error(what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace eah
