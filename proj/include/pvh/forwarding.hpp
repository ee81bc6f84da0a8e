#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "pvh/packet.hpp"

namespace pvh {

enum class DropReason {
    MalformedPathVector,
    NoSuchNic,
    WrongDestination,
    RevPathOverflow,
};

const char* drop_reason_name(DropReason r);

// Outcome of one per-hop forwarding decision.
struct ForwardAction {
    enum class Kind { Deliver, Emit, Drop };

    Kind kind = Kind::Drop;
    uint8_t nic = 0;   // Emit only
    MacAddr dmac{};    // Emit only; broadcast for point-to-point hops
    PvhPacket packet;  // Emit: the rewritten packet to put on the wire
    DropReason reason = DropReason::MalformedPathVector; // Drop only

    static ForwardAction deliver() { return {Kind::Deliver, 0, {}, {}, {}}; }
    static ForwardAction drop(DropReason r) { return {Kind::Drop, 0, {}, {}, r}; }
};

// Consumes the leading path-vector entry of `packet` and decides what the
// node holding it should do. Consults nothing but the packet and the
// node's NIC id set: a terminator means deliver (or drop when dst is not
// us), a hop entry means emit on that NIC with the vector shifted left and
// zero-filled so header sizes stay put.
ForwardAction forward_step(const PvhPacket& packet, const NodeAddr& own_addr,
                           const std::set<uint8_t>& own_nics);

// Appends the receiving hop to a reverse path: PointToPoint(rx_nic) for a
// point-to-point receipt, SharedMedium(rx_nic, rx_smac) otherwise.
// Returns false when the addition would exceed the reverse-path budget.
bool record_reverse_hop(RevPath& rev, uint8_t rx_nic, const MacAddr& rx_smac, bool shared_link);

// Reverses an accumulated path into a source route back to the originator.
PathVector reverse_to_pv(const RevPath& rev);

} // namespace pvh
