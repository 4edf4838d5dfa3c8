#include "eah/bitstring.hpp"

#include <bit>

#include "eah/error.hpp"

namespace eah {

BitString BitString::from_string(std::string_view bits) {
    BitString out;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(errc::value_out_of_range,
                        "bit string may contain only '0' and '1'");
        }
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::zeros(std::size_t count) {
    BitString out;
    out.size_ = count;
    out.bytes_.assign((count + 7) / 8, 0);
    return out;
}

void BitString::push_back(bool bit) {
    const std::size_t byte_index = size_ / 8;
    if (byte_index == bytes_.size()) {
        bytes_.push_back(0);
    }
    if (bit) {
        bytes_[byte_index] |= static_cast<std::uint8_t>(1u << (7 - size_ % 8));
    }
    ++size_;
}

void BitString::append(const BitString& other) {
    if (size_ % 8 == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        size_ += other.size_;
        return;
    }
    for (std::size_t i = 0; i < other.size_; ++i) {
        push_back(other.bit(i));
    }
}

bool BitString::bit(std::size_t index) const {
    if (index >= size_) {
        throw Error(errc::value_out_of_range, "bit index out of range");
    }
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out.push_back(bit(i) ? '1' : '0');
    }
    return out;
}

bool BitString::is_proper_prefix_of(const BitString& other) const {
    if (size_ >= other.size_) {
        return false;
    }
    return other.matches_at(0, *this);
}

bool BitString::matches_at(std::size_t offset, const BitString& other) const {
    if (offset + other.size_ > size_) {
        return false;
    }
    for (std::size_t i = 0; i < other.size_; ++i) {
        if (bit(offset + i) != other.bit(i)) {
            return false;
        }
    }
    return true;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
    const std::size_t common = size_ < other.size_ ? size_ : other.size_;
    for (std::size_t i = 0; i < common; ++i) {
        const bool a = bit(i);
        const bool b = other.bit(i);
        if (a != b) {
            return a ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return size_ <=> other.size_;
}

std::uint64_t DigitTuple::value() const {
    std::uint64_t acc = 0;
    for (std::uint32_t d : digits) {
        acc = acc * base + d;
    }
    return acc;
}

BitString binary_repr(std::uint64_t value) {
    const std::size_t width = binary_width(value);
    BitString out;
    for (std::size_t i = width; i-- > 0;) {
        out.push_back((value >> i) & 1u);
    }
    return out;
}

std::size_t binary_width(std::uint64_t value) {
    return value == 0 ? 1 : static_cast<std::size_t>(std::bit_width(value));
}

BitString fixed_width_repr(std::uint64_t value, std::size_t width) {
    const std::size_t need = binary_width(value);
    if (need > width) {
        throw Error(errc::width_overflow,
                    "value needs " + std::to_string(need) + " bits, width is " +
                        std::to_string(width));
    }
    BitString out = BitString::zeros(width - need);
    out.append(binary_repr(value));
    return out;
}

DigitTuple base_m_digits(std::uint64_t value, std::uint32_t base, std::size_t width) {
    if (base < 2) {
        throw Error(errc::value_out_of_range, "digit base must be at least 2");
    }
    DigitTuple out;
    out.base = base;
    out.digits.assign(width, 0);
    std::uint64_t rest = value;
    for (std::size_t i = width; i-- > 0;) {
        out.digits[i] = static_cast<std::uint32_t>(rest % base);
        rest /= base;
    }
    if (rest != 0) {
        throw Error(errc::value_out_of_range,
                    "value " + std::to_string(value) + " does not fit in " +
                        std::to_string(width) + " base-" + std::to_string(base) +
                        " digits");
    }
    return out;
}

}  // namespace eah
