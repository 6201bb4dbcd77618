#include "plab/adversary.hpp"

#include <numeric>
#include <stdexcept>

namespace plab::adversary {

namespace {

std::vector<double> value_grid(const Bounds& bounds, int levels) {
    if (levels < 1) throw std::domain_error("adversary: need at least one level");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(levels));
    if (levels == 1) {
        grid.push_back(bounds.L);
        return grid;
    }
    const double dv = (bounds.U - bounds.L) / (levels - 1);
    for (int i = 0; i < levels; ++i) grid.push_back(bounds.L + i * dv);
    grid.back() = bounds.U;  // pin against accumulation error
    return grid;
}

}  // namespace

OspInstance osp_batched_increasing(int capacity, const Bounds& bounds, int levels,
                                   double top_value) {
    if (top_value < bounds.L || top_value > bounds.U)
        throw std::domain_error("osp_batched_increasing: top value outside bounds");
    const auto grid = value_grid(bounds, levels);
    OspInstance inst{capacity, bounds, {}};
    const double slack = 1e-12 * (bounds.U - bounds.L);
    for (double v : grid) {
        if (v > top_value + slack) break;
        inst.valuations.insert(inst.valuations.end(), static_cast<std::size_t>(capacity), v);
    }
    inst.validate();
    return inst;
}

OspInstance osp_static_worst_case(int capacity, const Bounds& bounds) {
    if (!(bounds.theta > 1.0))
        throw std::domain_error("osp_static_worst_case: needs theta > 1");
    OspInstance inst{capacity, bounds, {}};
    inst.valuations.insert(inst.valuations.end(), static_cast<std::size_t>(capacity), bounds.L);
    inst.valuations.insert(inst.valuations.end(), static_cast<std::size_t>(capacity), bounds.U);
    inst.validate();
    return inst;
}

OapInstance oap_two_stage(int items, int capacity, const Bounds& bounds, int levels,
                          const std::vector<int>& perm) {
    if (items < 2) throw std::domain_error("oap_two_stage: need at least two items");
    std::vector<int> order = perm;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(items));
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != items)
        throw std::invalid_argument("oap_two_stage: permutation size mismatch");
    {
        std::vector<bool> seen(static_cast<std::size_t>(items), false);
        for (int p : order) {
            if (p < 0 || p >= items || seen[static_cast<std::size_t>(p)])
                throw std::invalid_argument("oap_two_stage: not a permutation");
            seen[static_cast<std::size_t>(p)] = true;
        }
    }

    OapInstance inst;
    inst.capacities.assign(static_cast<std::size_t>(items), capacity);
    inst.bounds.assign(static_cast<std::size_t>(items), bounds);
    // Stage I: upper triangle at the floor price
    for (int j = 0; j < items; ++j) {
        std::vector<double> row(static_cast<std::size_t>(items), 0.0);
        for (int i = j; i < items; ++i) row[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = bounds.L;
        for (int c = 0; c < capacity; ++c) inst.valuations.push_back(row);
    }
    // Stage II: rising batches aimed at the last item of the permutation
    const int target = order.back();
    const auto grid = value_grid(bounds, levels);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        std::vector<double> row(static_cast<std::size_t>(items), 0.0);
        row[static_cast<std::size_t>(target)] = grid[i];
        for (int c = 0; c < capacity; ++c) inst.valuations.push_back(row);
    }
    inst.validate();
    return inst;
}

OsccInstance oscc_batched_increasing(const ConvexCost& cost, const Bounds& bounds, int levels,
                                     double top_value) {
    const OspInstance base = osp_batched_increasing(cost.capacity(), bounds, levels, top_value);
    OsccInstance inst{cost, bounds, base.valuations};
    inst.validate();
    return inst;
}

OspInstance single_leg_increasing(const std::vector<double>& levels, int capacity, int upto) {
    if (levels.empty()) throw std::domain_error("single_leg_increasing: empty ladder");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i] > levels[i - 1]))
            throw std::domain_error("single_leg_increasing: ladder must be strictly increasing");
    const int m = static_cast<int>(levels.size());
    const int last = upto < 0 ? m : upto;
    if (last < 1 || last > m)
        throw std::domain_error("single_leg_increasing: upto outside 1..m");
    OspInstance inst{capacity, Bounds::of(levels.front(), levels.back()), {}};
    for (int i = 0; i < last; ++i)
        inst.valuations.insert(inst.valuations.end(), static_cast<std::size_t>(capacity),
                               levels[static_cast<std::size_t>(i)]);
    inst.validate();
    return inst;
}

}  // namespace plab::adversary
