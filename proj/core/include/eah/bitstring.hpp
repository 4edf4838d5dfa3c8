#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace eah {

// Growable sequence of bits with an explicit bit length. Bits are packed
// MSB-first into bytes; pad bits in the trailing byte are kept zero, so the
// defaulted equality on (bytes, size) is exact.
class BitString {
public:
    BitString() = default;

    // Parses a string of '0'/'1' characters.
    static BitString from_string(std::string_view bits);
    static BitString zeros(std::size_t count);

    void push_back(bool bit);
    void append(const BitString& other);

    bool bit(std::size_t index) const;
    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    std::string to_string() const;

    // Packed MSB-first bytes, ceil(size/8) of them, pad bits zero.
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    bool is_proper_prefix_of(const BitString& other) const;
    // True when `other` equals the bits at [offset, offset+other.size()).
    bool matches_at(std::size_t offset, const BitString& other) const;

    bool operator==(const BitString&) const = default;
    // Lexicographic bit order; a proper prefix sorts before its extensions.
    std::strong_ordering operator<=>(const BitString& other) const;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

// Fixed-length base-m digit expansion of an integer, most significant first.
struct DigitTuple {
    std::vector<std::uint32_t> digits;
    std::uint32_t base = 2;

    std::size_t size() const noexcept { return digits.size(); }
    std::uint64_t value() const;
};

// Minimal-length binary representation; no leading zeros except "0" itself.
BitString binary_repr(std::uint64_t value);

// Number of bits binary_repr(value) occupies (1 for value == 0).
std::size_t binary_width(std::uint64_t value);

// binary_repr left-padded with zeros to exactly `width` bits. Throws
// errc::width_overflow when the value does not fit.
BitString fixed_width_repr(std::uint64_t value, std::size_t width);

// Base-m expansion with exactly `width` digits, most significant first.
// Requires base >= 2 and value < base^width (errc::value_out_of_range).
DigitTuple base_m_digits(std::uint64_t value, std::uint32_t base, std::size_t width);

}  // namespace eah
