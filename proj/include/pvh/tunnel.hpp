#pragma once

#include <map>
#include <optional>

#include "pvh/packet.hpp"

namespace pvh {

// Static IPv4 destination -> host address table, loaded from the scenario
// file. Mappings are host routes (/32), one host per IP.
class IpMapping {
public:
    void add(uint32_t ipv4, const NodeAddr& addr) { map_[ipv4] = addr; }
    std::optional<NodeAddr> lookup(uint32_t ipv4) const {
        auto it = map_.find(ipv4);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    size_t size() const { return map_.size(); }

private:
    std::map<uint32_t, NodeAddr> map_;
};

// Wraps an IPv4 packet as the payload of a tunnel-mode (tag 0x01) packet.
// The payload is carried verbatim; forwarding never looks inside.
Result<PvhPacket> encap_ip(const Bytes& ip_packet, const NodeAddr& src,
                           const NodeAddr& dst, const PathVector& pv);

// Extracts the embedded IP packet from a delivered tunnel-mode packet.
Result<Bytes> decap_ip(const PvhPacket& packet);

} // namespace pvh
