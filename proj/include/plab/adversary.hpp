#pragma once

#include <vector>

#include "plab/instance.hpp"

namespace plab::adversary {

/// Batches of `capacity` identical buyers at each grid level
/// V_i = L + (i-1)(U-L)/(levels-1), truncated at the last level <= top_value.
/// The offline optimum serves the final batch alone: OPT = capacity * top.
OspInstance osp_batched_increasing(int capacity, const Bounds& bounds, int levels,
                                   double top_value);

/// capacity buyers at the floor followed by capacity buyers at the cap; a
/// deterministic floor price earns exactly 1/theta of the optimum here.
OspInstance osp_static_worst_case(int capacity, const Bounds& bounds);

/// Two-stage assignment stream. Stage I: batch j of `capacity` buyers at the
/// floor price, interested in items perm[j..K-1] (upper-triangle pattern).
/// Stage II: batched increasing valuations over `levels` grid points aimed
/// only at item perm[K-1]. An empty perm means the identity.
OapInstance oap_two_stage(int items, int capacity, const Bounds& bounds, int levels,
                          const std::vector<int>& perm = {});

/// The batched increasing stream with capacity taken from the cost table.
OsccInstance oscc_batched_increasing(const ConvexCost& cost, const Bounds& bounds, int levels,
                                     double top_value);

/// Batches of `capacity` buyers at ladder prices V_1..V_upto
/// (upto = -1 means the whole ladder).
OspInstance single_leg_increasing(const std::vector<double>& levels, int capacity,
                                  int upto = -1);

}  // namespace plab::adversary
