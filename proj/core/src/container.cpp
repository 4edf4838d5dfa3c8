#include "eah/container.hpp"

#include <array>
#include <fstream>
#include <optional>

#include "eah/error.hpp"

namespace eah {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'E', 'A', 'H', 'C'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t value) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(value >> shift));
    }
}

std::uint64_t get_u64(std::span<const std::uint8_t> data, std::size_t offset) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        value = (value << 8) | data[offset + i];
    }
    return value;
}

[[noreturn]] void bad(const std::string& what) {
    throw Error(errc::malformed_container, what);
}

}  // namespace

std::vector<std::uint8_t> serialize_container(const EahPayload& payload) {
    if (payload.order == 0 || payload.order > 255) {
        throw Error(errc::format_limit, "container stores orders 1..255");
    }
    const std::size_t m = payload.alphabet.size();

    std::vector<std::uint8_t> out;
    out.reserve(55 + m + (payload.total_bits() + 7) / 8);
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kContainerVersion);
    out.push_back(static_cast<std::uint8_t>(payload.order));
    out.push_back(static_cast<std::uint8_t>(m == 256 ? 0 : m));
    for (char c : payload.alphabet.symbols()) {
        out.push_back(static_cast<std::uint8_t>(c));
    }
    put_u64(out, payload.original_length);
    for (std::uint64_t bits : payload.component_lengths()) {
        put_u64(out, bits);
    }
    BitString body;
    body.append(payload.a);
    body.append(payload.b);
    body.append(payload.c);
    body.append(payload.d);
    body.append(payload.e);
    out.insert(out.end(), body.bytes().begin(), body.bytes().end());
    return out;
}

EahPayload parse_container(std::span<const std::uint8_t> data) {
    if (data.size() < 7) {
        bad("container shorter than the fixed header");
    }
    for (std::size_t i = 0; i < kMagic.size(); ++i) {
        if (data[i] != kMagic[i]) {
            bad("magic bytes do not spell EAHC");
        }
    }
    if (data[4] != kContainerVersion) {
        throw Error(errc::unsupported_version,
                    "unsupported container version " + std::to_string(data[4]));
    }
    const std::size_t order = data[5];
    if (order == 0) {
        bad("order byte must be at least 1");
    }
    const std::size_t m = data[6] == 0 ? 256 : data[6];
    if (data.size() < 55 + m) {
        bad("container truncated inside the header");
    }
    std::string symbols(reinterpret_cast<const char*>(data.data() + 7), m);
    std::optional<Alphabet> alphabet;
    try {
        alphabet.emplace(symbols);
    } catch (const Error&) {
        bad("alphabet symbols are not distinct");
    }
    EahPayload payload{*alphabet, order, get_u64(data, 7 + m), {}, {}, {}, {}, {}};

    std::array<std::uint64_t, 5> lengths{};
    std::uint64_t total_bits = 0;
    for (std::size_t i = 0; i < 5; ++i) {
        lengths[i] = get_u64(data, 15 + m + 8 * i);
        total_bits += lengths[i];
    }
    const std::uint64_t body_bytes = (total_bits + 7) / 8;
    if (data.size() != 55 + m + body_bytes) {
        bad("body size does not match the recorded bit lengths");
    }

    const std::span<const std::uint8_t> body = data.subspan(55 + m);
    std::uint64_t bit_pos = 0;
    const auto read_bit = [&]() -> bool {
        const bool value = (body[bit_pos / 8] >> (7 - bit_pos % 8)) & 1u;
        ++bit_pos;
        return value;
    };
    BitString* parts[5] = {&payload.a, &payload.b, &payload.c, &payload.d,
                           &payload.e};
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::uint64_t bit = 0; bit < lengths[i]; ++bit) {
            parts[i]->push_back(read_bit());
        }
    }
    while (bit_pos < body_bytes * 8) {
        if (read_bit()) {
            bad("padding bits of the final body byte must be zero");
        }
    }
    return payload;
}

void write_container_file(const std::filesystem::path& path, const EahPayload& payload) {
    const std::vector<std::uint8_t> bytes = serialize_container(payload);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(errc::io_failure, "cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(errc::io_failure, "failed writing " + path.string());
    }
}

EahPayload read_container_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(errc::io_failure, "cannot open " + path.string() + " for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(errc::io_failure, "failed reading " + path.string());
    }
    return parse_container(bytes);
}

}  // namespace eah
