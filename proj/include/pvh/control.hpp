#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvh/addr.hpp"
#include "pvh/bytes.hpp"
#include "pvh/path_vector.hpp"
#include "pvh/result.hpp"

namespace pvh {

// Control-plane messages. Sent either as bare Ethernet payloads
// (EtherType 0x88B6) for link-local floods, or as the payload of a
// tag-0x00 data packet when they must travel a multi-hop route.
enum class MsgType : uint8_t {
    CapBcast = 0x01,
    HeadDecl = 0x02,
    JoinReq = 0x03,
    JoinAck = 0x04,
    ScanReq = 0x05,
    ScanRep = 0x06,
    Hello = 0x07,
    NbrUpload = 0x08,
    RouteReq = 0x09,
    RouteRep = 0x0a,
    ProbeReq = 0x0b,
    ProbeRep = 0x0c,
    SvcReg = 0x0d,
    SvcPush = 0x0e,
    SvcQuery = 0x0f,
    SvcRep = 0x10,
};

const char* msg_type_name(MsgType t);
bool msg_type_known(uint8_t v);

// TLV field tags. Unknown tags are skipped on decode.
namespace tlv {
constexpr uint8_t kOriginAddr = 0x01;  // 6 bytes
constexpr uint8_t kCapability = 0x02;  // 8-byte IEEE754 double, big-endian
constexpr uint8_t kHopBudget = 0x03;   // 1 byte
constexpr uint8_t kRevPath = 0x04;     // path entries, no terminator
constexpr uint8_t kHeadAddr = 0x05;    // 6 bytes
constexpr uint8_t kPathVector = 0x06;  // full pv wire form incl. terminator
constexpr uint8_t kTargetAddr = 0x07;  // 6 bytes
constexpr uint8_t kRequestId = 0x08;   // 4 bytes
constexpr uint8_t kNeighbor = 0x09;    // addr(6) nic(1) has_dmac(1) [dmac(6)]
constexpr uint8_t kServiceName = 0x0a; // <= 64 bytes, opaque
constexpr uint8_t kProviderAddr = 0x0b; // 6 bytes
constexpr uint8_t kDistToHead = 0x0c;  // 1 byte
constexpr uint8_t kStatus = 0x0d;      // 1 byte
constexpr uint8_t kNodeAddr = 0x0e;    // 6 bytes
} // namespace tlv

namespace status {
constexpr uint8_t kOk = 0x00;
constexpr uint8_t kNotInCluster = 0x01;
constexpr uint8_t kNotFound = 0x02;
} // namespace status

struct Tlv {
    uint8_t tag = 0;
    Bytes value;

    bool operator==(const Tlv&) const = default;
};

// A neighbor-table row as carried in NbrUpload.
struct NeighborTlv {
    NodeAddr addr{};
    uint8_t nic = 0;
    std::optional<MacAddr> dmac; // present iff reached over a shared link

    bool operator==(const NeighborTlv&) const = default;
};

struct ControlMessage {
    MsgType type = MsgType::Hello;
    std::vector<Tlv> fields;

    ControlMessage() = default;
    explicit ControlMessage(MsgType t) : type(t) {}

    // Field builders.
    ControlMessage& add_addr(uint8_t tag, const Addr6& a);
    ControlMessage& add_u8(uint8_t tag, uint8_t v);
    ControlMessage& add_u32(uint8_t tag, uint32_t v);
    ControlMessage& add_f64(uint8_t tag, double v);
    ControlMessage& add_bytes(uint8_t tag, Bytes v);
    ControlMessage& add_string(uint8_t tag, const std::string& s);
    ControlMessage& add_pv(const PathVector& pv);
    ControlMessage& add_rev(const RevPath& rev);
    ControlMessage& add_neighbor(const NeighborTlv& n);

    // Field accessors; nullopt when the tag is absent or malformed.
    std::optional<Addr6> get_addr(uint8_t tag) const;
    std::optional<uint8_t> get_u8(uint8_t tag) const;
    std::optional<uint32_t> get_u32(uint8_t tag) const;
    std::optional<double> get_f64(uint8_t tag) const;
    std::optional<std::string> get_string(uint8_t tag) const;
    std::optional<PathVector> get_pv() const;
    std::optional<RevPath> get_rev() const;
    std::vector<NeighborTlv> get_neighbors() const;
    const Tlv* find(uint8_t tag) const;

    // Replaces (or inserts) the rev-path field; used by flood relaying.
    void set_rev(const RevPath& rev);

    bool operator==(const ControlMessage&) const = default;
};

// Length-framed wrapper that survives Ethernet minimum-frame zero padding:
//
//   codec_id(2, big-endian, 0x0001 = TLV v1)  length(2)  payload(length)
//
// Decode reads exactly `length` payload bytes and ignores anything after,
// so trailing pad zeros never reach the message parser.
constexpr uint16_t kCodecTlvV1 = 0x0001;

Result<Bytes> encode_control(const ControlMessage& msg);
Result<ControlMessage> decode_control(const Bytes& frame);

} // namespace pvh
