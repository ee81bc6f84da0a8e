#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace pvh {

// 6-byte identifier used both for link-layer MACs and for network-layer
// host addresses. Host addresses identify a node, not an interface, so a
// node keeps one address no matter how many NICs it has.
struct Addr6 {
    std::array<uint8_t, 6> bytes{};

    auto operator<=>(const Addr6&) const = default;

    bool is_broadcast() const {
        for (uint8_t b : bytes)
            if (b != 0xff) return false;
        return true;
    }
    bool is_zero() const {
        for (uint8_t b : bytes)
            if (b != 0x00) return false;
        return true;
    }

    static Addr6 broadcast() {
        Addr6 a;
        a.bytes.fill(0xff);
        return a;
    }

    std::string str() const;
    // Parses "aa:bb:cc:dd:ee:ff"; returns false on malformed input.
    static bool parse(const std::string& text, Addr6& out);
};

using NodeAddr = Addr6;
using MacAddr = Addr6;

struct Addr6Hash {
    size_t operator()(const Addr6& a) const {
        uint64_t v = 0;
        for (uint8_t b : a.bytes) v = (v << 8) | b;
        return std::hash<uint64_t>{}(v);
    }
};

} // namespace pvh
