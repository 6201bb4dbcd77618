#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "plab/adversary.hpp"
#include "plab/oap.hpp"
#include "plab/oscc.hpp"
#include "plab/osp.hpp"

using namespace plab;

namespace {
const double kE = std::exp(1.0);
}

TEST_CASE("rising batches") {
    SUBCASE("pinned layout") {
        const auto inst =
            adversary::osp_batched_increasing(2, Bounds::of(1.0, 2.0), 3, 2.0);
        CHECK(inst.valuations == std::vector<double>{1.0, 1.0, 1.5, 1.5, 2.0, 2.0});
        CHECK(osp::offline_opt(inst).value == 4.0);
    }
    SUBCASE("truncation at the floor") {
        const auto inst =
            adversary::osp_batched_increasing(3, Bounds::of(1.0, 2.0), 5, 1.0);
        CHECK(inst.valuations == std::vector<double>{1.0, 1.0, 1.0});
        CHECK(osp::offline_opt(inst).value == 3.0);
    }
    SUBCASE("ratio tightens as the grid refines") {
        const Bounds b = Bounds::of(1.0, 10.0);
        const PriceLaw law = osp::build_static_law(b);
        double prev_ratio = 0.0;
        for (int m : {10, 100, 1000}) {
            const auto inst = adversary::osp_batched_increasing(5, b, m, b.U);
            const double ratio = osp::offline_opt(inst).value /
                                 osp::exact_expected(inst, law, Objective::welfare);
            CHECK(ratio >= prev_ratio - 1e-12);
            CHECK(ratio <= law.alpha() * (1.0 + 1e-12));
            prev_ratio = ratio;
        }
    }
}

TEST_CASE("low-then-high worst case for one fixed price") {
    const auto inst = adversary::osp_static_worst_case(1, Bounds::of(1.0, 3.0));
    CHECK(inst.valuations == std::vector<double>{1.0, 3.0});
    const double opt = osp::offline_opt(inst).value;
    CHECK(osp::run_static(inst, 1.0).welfare * 3.0 == opt);  // floor earns OPT/theta
    CHECK(osp::run_static(inst, 3.0).welfare == opt);        // cap price is lossless here

    const auto wide = adversary::osp_static_worst_case(4, Bounds::of(1.0, 2.0));
    CHECK(osp::offline_opt(wide).value / osp::run_static(wide, 1.0).welfare == 2.0);
    CHECK_THROWS_AS(adversary::osp_static_worst_case(2, Bounds::of(1.0, 1.0)),
                    std::domain_error);
}

TEST_CASE("two-stage assignment stream") {
    SUBCASE("stage-one-only optimum") {
        const auto inst = adversary::oap_two_stage(2, 1, Bounds::of(1.0, kE), 1);
        CHECK(inst.valuations.size() == 2);
        CHECK(oap::offline_opt(inst).value == 2.0);
    }
    SUBCASE("full-stream optimum formula") {
        const auto inst = adversary::oap_two_stage(3, 2, Bounds::of(1.0, kE), 50);
        CHECK(oap::offline_opt(inst).value ==
              doctest::Approx(1.0 * 2 * 2 + kE * 2).epsilon(1e-12));
    }
    SUBCASE("a permutation relabels items without changing the optimum") {
        const std::vector<int> perm{2, 0, 1};
        const auto inst = adversary::oap_two_stage(3, 2, Bounds::of(1.0, kE), 20, perm);
        inst.validate();
        CHECK(oap::offline_opt(inst).value ==
              doctest::Approx(oap::offline_opt(adversary::oap_two_stage(3, 2,
                                                                        Bounds::of(1.0, kE), 20))
                                  .value)
                  .epsilon(1e-12));
        CHECK_THROWS_AS(adversary::oap_two_stage(3, 1, Bounds::of(1.0, 2.0), 5, {0, 0, 2}),
                        std::invalid_argument);
    }
    SUBCASE("static laws stay within the ratio bound (measured diagnostic)") {
        const auto inst = adversary::oap_two_stage(8, 8, Bounds::of(1.0, kE), 200);
        const auto laws = oap::build_static_laws(inst);
        const auto stats = oap::mc_expected(inst, laws, Objective::welfare, 2000, 17);
        const double opt = oap::offline_opt(inst).value;
        CHECK(opt <= laws.alpha * (stats.mean + 3.0 * stats.stderr_));
        MESSAGE("two-stage tightness diagnostic: OPT/mean = ", opt / stats.mean,
                " vs alpha = ", laws.alpha);
    }
}

TEST_CASE("rising batches with production cost") {
    const ConvexCost quad = ConvexCost::from_cumulative({0.0, 0.0, 1.0, 3.0});
    SUBCASE("zero cost matches the plain generator") {
        const auto with_cost = adversary::oscc_batched_increasing(
            ConvexCost::zero(2), Bounds::of(1.0, 2.0), 3, 2.0);
        const auto plain = adversary::osp_batched_increasing(2, Bounds::of(1.0, 2.0), 3, 2.0);
        CHECK(with_cost.valuations == plain.valuations);
    }
    SUBCASE("offline value equals the conjugate at the top value") {
        const auto inst =
            adversary::oscc_batched_increasing(quad, Bounds::of(1.0, 3.0), 400, 3.0);
        CHECK(oscc::offline_opt(inst).value == 6.0);
        const auto floor_only =
            adversary::oscc_batched_increasing(quad, Bounds::of(1.0, 3.0), 400, 1.0);
        CHECK(oscc::offline_opt(floor_only).value == 1.0);  // profit at the floor
    }
}

TEST_CASE("single-leg ladder stream") {
    SUBCASE("pinned layouts") {
        CHECK(adversary::single_leg_increasing({1.0, 2.0}, 1, 2).valuations ==
              std::vector<double>{1.0, 2.0});
        const auto top_only = adversary::single_leg_increasing({4.0}, 3);
        CHECK(top_only.valuations == std::vector<double>{4.0, 4.0, 4.0});
        CHECK(osp::offline_opt(top_only).value == 12.0);
    }
    SUBCASE("generated instances validate") {
        CHECK_NOTHROW(adversary::single_leg_increasing({1.0, 2.0, 4.0}, 10, 3).validate());
        CHECK_THROWS_AS(adversary::single_leg_increasing({2.0, 1.0}, 1),
                        std::domain_error);
        CHECK_THROWS_AS(adversary::single_leg_increasing({1.0, 2.0}, 1, 5),
                        std::domain_error);
    }
}

TEST_CASE("every generator output validates") {
    CHECK_NOTHROW(adversary::osp_batched_increasing(3, Bounds::of(2.0, 8.0), 17, 5.0).validate());
    CHECK_NOTHROW(adversary::osp_static_worst_case(5, Bounds::of(1.0, 4.0)).validate());
    CHECK_NOTHROW(adversary::oap_two_stage(4, 3, Bounds::of(1.0, kE), 9).validate());
    CHECK_NOTHROW(adversary::oscc_batched_increasing(ConvexCost::zero(3), Bounds::of(1.0, 2.0), 4,
                                                     1.5)
                      .validate());
}
