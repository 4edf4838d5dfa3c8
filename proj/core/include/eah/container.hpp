#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "eah/codec.hpp"

namespace eah {

// On-disk container, all integers big-endian:
//   offset 0   magic "EAHC" (4 bytes)
//   4          version (1 byte, currently 1)
//   5          order n (1 byte, >= 1)
//   6          alphabet size m (1 byte; 0 encodes 256)
//   7          alphabet symbols, m bytes in index order
//   7+m        original length h (8 bytes)
//   15+m       bit lengths of a, b, c, d, e (5 x 8 bytes)
//   55+m       body: a||b||c||d||e packed MSB-first, zero-padded to a byte
// Total size: 55 + m + ceil(total bits / 8) bytes.

inline constexpr std::uint8_t kContainerVersion = 1;

std::vector<std::uint8_t> serialize_container(const EahPayload& payload);

// Exact inverse of serialize_container. Throws errc::malformed_container for
// structural damage (bad magic, truncation, nonzero padding, trailing bytes)
// and errc::unsupported_version for a foreign version byte.
EahPayload parse_container(std::span<const std::uint8_t> data);

void write_container_file(const std::filesystem::path& path, const EahPayload& payload);
EahPayload read_container_file(const std::filesystem::path& path);

}  // namespace eah
