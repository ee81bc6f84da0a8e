#pragma once

#include <cstdint>
#include <vector>

#include "pvh/addr.hpp"
#include "pvh/bytes.hpp"
#include "pvh/result.hpp"

namespace pvh {

// One hop of a source route.
//
// Wire form:
//   PointToPoint  1 byte   +nic (signed, 1..127)
//   SharedMedium  7 bytes  -nic (two's complement) followed by 6 dmac octets
//   Terminator    1 byte   0x00
//
// The terminator doubles as the "arrived" marker, which is why NIC ids
// start at 1.
struct PathEntry {
    enum class Kind : uint8_t { PointToPoint, SharedMedium, Terminator };

    Kind kind = Kind::Terminator;
    uint8_t nic = 0; // 1..127 for non-terminator entries
    MacAddr dmac{};  // SharedMedium only

    static PathEntry p2p(uint8_t nic) { return {Kind::PointToPoint, nic, {}}; }
    static PathEntry shared(uint8_t nic, MacAddr dmac) { return {Kind::SharedMedium, nic, dmac}; }
    static PathEntry terminator() { return {}; }

    size_t wire_size() const { return kind == Kind::SharedMedium ? 7 : 1; }
    bool valid() const {
        if (kind == Kind::Terminator) return nic == 0;
        return nic >= 1 && nic <= 127;
    }

    bool operator==(const PathEntry&) const = default;
};

// Ordered hop list ending in exactly one terminator.
struct PathVector {
    std::vector<PathEntry> entries;

    static PathVector empty_route() { return PathVector{{PathEntry::terminator()}}; }

    size_t wire_size() const {
        size_t n = 0;
        for (const auto& e : entries) n += e.wire_size();
        return n;
    }
    // Hops to traverse, excluding the terminator.
    size_t hop_count() const { return entries.empty() ? 0 : entries.size() - 1; }

    bool valid() const;
    void encode(ByteWriter& w) const;
    // Parses entries up to and including the terminator; stops there.
    static Result<PathVector> decode(ByteReader& r);

    bool operator==(const PathVector&) const = default;
};

// Per-hop receive record accumulated in flight; no terminator, oldest hop
// first. Reversing it yields the return source route.
struct RevPath {
    static constexpr size_t kMaxWireBytes = 200;

    std::vector<PathEntry> entries;

    size_t wire_size() const {
        size_t n = 0;
        for (const auto& e : entries) n += e.wire_size();
        return n;
    }

    bool valid() const;
    void encode(ByteWriter& w) const; // entries only, no count byte
    static Result<RevPath> decode(ByteReader& r, size_t wire_bytes);

    bool operator==(const RevPath&) const = default;
};

// Concatenates two routes: a's hops, then b's hops, one terminator.
PathVector concat_routes(const PathVector& a, const PathVector& b);

} // namespace pvh
