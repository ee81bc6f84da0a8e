#pragma once

#include <cstdint>
#include <optional>

#include "pvh/addr.hpp"
#include "pvh/bytes.hpp"
#include "pvh/path_vector.hpp"
#include "pvh/result.hpp"

namespace pvh {

// EtherTypes (IEEE local-experimental range).
constexpr uint16_t kEtherTypeData = 0x88B5;
constexpr uint16_t kEtherTypeControl = 0x88B6;

// Packet categories carried in the tag's low 7 bits.
namespace tag {
constexpr uint8_t kRaw = 0x00;
constexpr uint8_t kIpTunnel = 0x01;
constexpr uint8_t kEchoRequest = 0x02;
constexpr uint8_t kEchoReply = 0x03;
// High bit flags the presence of the reverse-path section.
constexpr uint8_t kRevPathFlag = 0x80;
constexpr uint8_t kKindMask = 0x7f;
} // namespace tag

// Data-plane packet header.
//
//   offset  size  field
//   0       1     tag
//   1       1     hdr_len
//   2       2     tot_len        (big-endian)
//   4       6     src_addr
//   10      6     dst_addr
//   16      var   path vector    (entries, terminator, then pv_pad zeros)
//   ..      var   reverse path   (iff tag & 0x80: count byte, then entries)
//   hdr_len ..    payload        (tot_len - hdr_len bytes)
//
// Forwarding shifts the path vector left in place and zero-fills, so the
// pv region keeps its size while hops are consumed; pv_pad counts those
// fill bytes. The reverse-path section sits at the very end of the header,
// so its count byte always equals (hdr_len - 1 - its own offset), which is
// how the decoder finds it behind the padding.
struct PvhHeader {
    uint8_t tag = tag::kRaw;
    NodeAddr src{};
    NodeAddr dst{};
    PathVector pv;
    size_t pv_pad = 0; // zero bytes after the terminator, inside the pv region
    std::optional<RevPath> rev; // present iff tag & kRevPathFlag

    static constexpr size_t kFixedBytes = 16;
    static constexpr size_t kMinBytes = 17; // fixed part + lone terminator
    static constexpr size_t kMaxPvRegionBytes = 239;

    uint8_t kind() const { return tag & tag::kKindMask; }
    bool has_rev() const { return (tag & tag::kRevPathFlag) != 0; }

    size_t pv_region_size() const { return pv.wire_size() + pv_pad; }
    size_t rev_section_size() const { return rev ? 1 + rev->wire_size() : 0; }
    size_t header_size() const { return kFixedBytes + pv_region_size() + rev_section_size(); }
};

// Header plus payload; the unit the forwarding engine works on.
struct PvhPacket {
    PvhHeader header;
    Bytes payload;

    size_t total_size() const { return header.header_size() + payload.size(); }
};

Result<Bytes> encode_pvh(const PvhPacket& packet);
Result<PvhPacket> decode_pvh(const Bytes& frame);

} // namespace pvh
