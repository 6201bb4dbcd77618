#pragma once

#include <vector>

namespace plab {

/// Successive-shortest-path min-cost flow on a small graph with real arc
/// costs (negative allowed; no negative cycles). Augments one cheapest path
/// at a time and stops once the next path would not lower total cost, which
/// yields the min-cost flow over all flow magnitudes. Bellman-Ford per
/// round; fine at assignment-oracle scale.
class MinCostFlow {
public:
    explicit MinCostFlow(int nodes);

    /// Returns an edge id usable with flow_on().
    int add_edge(int from, int to, int capacity, double cost);

    /// Total cost of the flow kept (<= 0 when all supply arcs cost 0).
    double solve(int source, int sink);

    int flow_on(int edge_id) const;

private:
    struct Arc {
        int to;
        int capacity;
        double cost;
        int flow = 0;
    };

    std::vector<Arc> arcs_;                 // arc 2i+1 is the reverse of 2i
    std::vector<std::vector<int>> out_;     // adjacency by arc index
    int nodes_;
};

}  // namespace plab
