#include "plab/min_cost_flow.hpp"

#include <algorithm>
#include <limits>

namespace plab {

MinCostFlow::MinCostFlow(int nodes) : out_(static_cast<std::size_t>(nodes)), nodes_(nodes) {}

int MinCostFlow::add_edge(int from, int to, int capacity, double cost) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, cost});
    arcs_.push_back({from, 0, -cost});
    out_[static_cast<std::size_t>(from)].push_back(id);
    out_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
}

double MinCostFlow::solve(int source, int sink) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    constexpr double kGain = -1e-12;  // ignore fp-noise "improvements"
    double total = 0.0;
    std::vector<double> dist;
    std::vector<int> via;
    for (;;) {
        dist.assign(static_cast<std::size_t>(nodes_), kInf);
        via.assign(static_cast<std::size_t>(nodes_), -1);
        dist[static_cast<std::size_t>(source)] = 0.0;
        // Bellman-Ford over residual arcs
        for (int round = 0; round < nodes_; ++round) {
            bool changed = false;
            for (int u = 0; u < nodes_; ++u) {
                if (dist[static_cast<std::size_t>(u)] == kInf) continue;
                for (int id : out_[static_cast<std::size_t>(u)]) {
                    const Arc& a = arcs_[static_cast<std::size_t>(id)];
                    if (a.flow >= a.capacity) continue;
                    const double nd = dist[static_cast<std::size_t>(u)] + a.cost;
                    if (nd < dist[static_cast<std::size_t>(a.to)] - 1e-15) {
                        dist[static_cast<std::size_t>(a.to)] = nd;
                        via[static_cast<std::size_t>(a.to)] = id;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (via[static_cast<std::size_t>(sink)] < 0 ||
            dist[static_cast<std::size_t>(sink)] >= kGain)
            break;
        int push = std::numeric_limits<int>::max();
        for (int v = sink; v != source;) {
            const Arc& a = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])];
            push = std::min(push, a.capacity - a.flow);
            v = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to;
        }
        for (int v = sink; v != source;) {
            const int id = via[static_cast<std::size_t>(v)];
            arcs_[static_cast<std::size_t>(id)].flow += push;
            arcs_[static_cast<std::size_t>(id ^ 1)].flow -= push;
            v = arcs_[static_cast<std::size_t>(id ^ 1)].to;
        }
        total += push * dist[static_cast<std::size_t>(sink)];
    }
    return total;
}

int MinCostFlow::flow_on(int edge_id) const {
    return arcs_[static_cast<std::size_t>(edge_id)].flow;
}

}  // namespace plab
