#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pvh/addr.hpp"
#include "pvh/path_vector.hpp"
#include "pvh/result.hpp"

namespace pvh {

using SimTime = uint64_t; // virtual microseconds

// Directed labeled adjacency assembled at the cluster head from uploaded
// neighbor tables. An edge (u -> v) means: emitting from u's nic with dmac
// (broadcast when absent) reaches v.
class TopologyGraph {
public:
    struct EdgeLabel {
        uint8_t nic = 0;
        std::optional<MacAddr> dmac;
        SimTime last_refresh = 0;
        bool expired = false;
    };

    // Inserts or refreshes the edge; clears any expired mark.
    void upsert_edge(const NodeAddr& from, const NodeAddr& to, uint8_t nic,
                     const std::optional<MacAddr>& dmac, SimTime now);
    // Drops edges out of `from` that were not refreshed at/after `cutoff`.
    // Keeps the rest untouched; used when a fresh upload replaces a table.
    void replace_edges_from(const NodeAddr& from,
                            const std::vector<std::tuple<NodeAddr, uint8_t, std::optional<MacAddr>>>& rows,
                            SimTime now);
    // Marks every edge incident to `node` expired.
    void expire_node(const NodeAddr& node);

    bool contains(const NodeAddr& node) const;
    // Active (non-expired) out-neighbors, sorted by address.
    std::vector<NodeAddr> active_neighbors(const NodeAddr& from) const;
    const EdgeLabel* edge(const NodeAddr& from, const NodeAddr& to) const;
    std::set<NodeAddr> nodes() const;
    size_t active_edge_count() const;

private:
    // from -> (to -> label); at most one live edge per ordered pair, the
    // lowest-nic link wins when a pair is multiply connected.
    std::map<NodeAddr, std::map<NodeAddr, EdgeLabel>> adj_;
};

// Minimum-hop node sequence src..dst over non-expired edges. Ties are
// broken by expanding neighbors in address order, so results are stable.
Result<std::vector<NodeAddr>> bfs_route(const TopologyGraph& topo,
                                        const NodeAddr& src, const NodeAddr& dst);

// Translates a node sequence into the wire route: one entry per edge,
// terminator appended.
Result<PathVector> path_to_pv(const TopologyGraph& topo,
                              const std::vector<NodeAddr>& path);

// Per-node route cache; entries expire after the route TTL.
class RouteCache {
public:
    explicit RouteCache(SimTime ttl_us) : ttl_us_(ttl_us) {}

    void put(const NodeAddr& dst, PathVector pv, SimTime now);
    std::optional<PathVector> get(const NodeAddr& dst, SimTime now) const;
    void invalidate(const NodeAddr& dst);
    void clear() { entries_.clear(); }

private:
    struct Entry {
        PathVector pv;
        SimTime stored_at = 0;
    };
    SimTime ttl_us_;
    std::map<NodeAddr, Entry> entries_;
};

// Drop-duplicates set for relayed broadcasts, keyed on (origin, request id).
class ProbeDedup {
public:
    explicit ProbeDedup(SimTime ttl_us) : ttl_us_(ttl_us) {}

    // True when (origin, id) was not seen within the TTL; records it.
    bool check_and_insert(const NodeAddr& origin, uint32_t id, SimTime now);

private:
    SimTime ttl_us_;
    std::map<std::pair<NodeAddr, uint32_t>, SimTime> seen_;
};

} // namespace pvh
