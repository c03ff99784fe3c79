#include <gtest/gtest.h>

#include <thread>

#include "sfd/errors.hpp"
#include "sfd/system.hpp"
#include "test_support.hpp"

using namespace sfd;
using sfd::test::random_state;
using sfd::test::rel_diff;

namespace {

// Hand-evaluated N=1, k=1 generator.
DenseComplexMatrix hand_generator() {
    DenseComplexMatrix a(2, 2);
    a << cplx(0, 48), cplx(8, -32), cplx(0, -64), cplx(-16, 48);
    return a;
}

}  // namespace

TEST(OrderReduction, ZeroAndHandValue) {
    const Mesh m = make_mesh(1);
    EXPECT_EQ(apply_order_reduction(GridVector::state(m, CVector::Zero(2)), 1.0, m).values(),
              CVector::Zero(2));
    const CVector ay = apply_order_reduction(GridVector::state(m, CVector::Unit(2, 1)), 1.0, m).values();
    EXPECT_NEAR(std::abs(ay(0) - cplx(8, -32)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(ay(1) - cplx(-16, 48)), 0.0, 1e-13);
    EXPECT_THROW(apply_order_reduction(GridVector::state(m, CVector::Zero(2)), 0.0, m), DomainError);
}

TEST(OrderReduction, AssembledMatrixN1) {
    const DenseComplexMatrix a = assemble_generator(Scheme::order_reduction, 1.0, make_mesh(1));
    EXPECT_LT((a - hand_generator()).norm(), 1e-12);
}

TEST(Generator, MatchesApplier) {
    for (Scheme scheme : {Scheme::order_reduction, Scheme::classical}) {
        for (int n : {1, 5, 40}) {
            for (double k : {0.1, 1.0, 10.0}) {
                const Mesh m = make_mesh(n);
                const DenseComplexMatrix a = assemble_generator(scheme, k, m);
                for (std::uint64_t seed = 0; seed < 100; ++seed) {
                    const GridVector y = random_state(m, seed);
                    const CVector applied = apply_generator(scheme, y, k, m).values();
                    EXPECT_LE(rel_diff(a * y.values(), applied), 1e-12);
                }
            }
        }
    }
}

TEST(Generator, Linear) {
    const Mesh m = make_mesh(30);
    const GridVector a = random_state(m, 1), b = random_state(m, 2);
    const cplx alpha(-0.7, 2.0);
    for (Scheme scheme : {Scheme::order_reduction, Scheme::classical}) {
        const GridVector sum = GridVector::state(m, alpha * a.values() + b.values());
        const CVector lhs = apply_generator(scheme, sum, 1.0, m).values();
        const CVector rhs = alpha * apply_generator(scheme, a, 1.0, m).values() +
                            apply_generator(scheme, b, 1.0, m).values();
        EXPECT_LT(rel_diff(lhs, rhs), 1e-12);
    }
}

TEST(Classical, InteriorColumnsAreIMMt) {
    for (int n : {1, 4, 17}) {
        const Mesh m = make_mesh(n);
        const SchemeMatrices s = build_scheme_matrices(m);
        const DenseComplexMatrix expected = I * s.M * s.M.transpose();
        const DenseComplexMatrix a = assemble_generator(Scheme::classical, 2.5, m);
        for (int j = 0; j < n; ++j) {
            const CVector applied =
                apply_classical(GridVector::state(m, CVector::Unit(n + 1, j)), 2.5, m).values();
            EXPECT_EQ(applied, CVector(expected.col(j))) << "column " << j;
        }
        const DenseComplexMatrix diff = a - expected;
        EXPECT_EQ(diff.leftCols(n).norm(), 0.0);
        EXPECT_GT(diff.col(n).norm(), 0.0);
    }
}

TEST(Dissipation, HandValueN1) {
    const Mesh m = make_mesh(1);
    const GridVector y = GridVector::state(m, CVector::Unit(2, 1));
    const GridVector ay = apply_order_reduction(y, 1.0, m);
    EXPECT_NEAR(yh_inner(ay, y, m).real(), -1.0, 1e-14);
    EXPECT_LE(std::abs(dissipation_gap(y, 1.0, m, Scheme::order_reduction)), 1e-14);
}

TEST(Dissipation, VanishingBoundaryValue) {
    const Mesh m = make_mesh(50);
    CVector v = random_state(m, 9).values();
    v(m.n) = 0.0;
    const GridVector y = GridVector::state(m, v);
    const GridVector ay = apply_order_reduction(y, 1.0, m);
    const double scale = std::sqrt(yh_inner(ay, ay, m).real() * yh_inner(y, y, m).real());
    EXPECT_LE(std::abs(yh_inner(ay, y, m).real()), 1e-12 * scale);
}

TEST(Dissipation, RandomStates) {
    const Mesh m = make_mesh(256);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const GridVector y = random_state(m, seed);
        const double k = 10.0;
        const double scale = y.values().norm() * apply_order_reduction(y, k, m).values().norm() +
                             k * std::norm(y.values()(m.n));
        EXPECT_LE(std::abs(dissipation_gap(y, k, m, Scheme::order_reduction)), 1e-10 * scale);
    }
}

TEST(Energy, Examples) {
    const Mesh m = make_mesh(1);
    EXPECT_EQ(discrete_energy(GridVector::state(m, CVector::Zero(2)), m), 0.0);
    const GridVector w = GridVector::state(m, CVector::Unit(2, 1));
    EXPECT_NEAR(discrete_energy(w, m), 1.0 / 16.0, 1e-17);
    EXPECT_NEAR(0.5 * yh_inner(w, w, m).real(), 1.0 / 16.0, 1e-17);
}

TEST(Energy, SumFormMatchesInnerProduct) {
    for (int n : {1, 10, 300}) {
        const Mesh m = make_mesh(n);
        const GridVector w = random_state(m, 77);
        const double e = discrete_energy(w, m);
        EXPECT_NEAR(e, 0.5 * yh_inner(w, w, m).real(), 1e-13 * e);
    }
}

TEST(SemiDiscreteSystem, Basics) {
    EXPECT_THROW(SemiDiscreteSystem(Scheme::order_reduction, 4, 0.0), DomainError);
    EXPECT_THROW(SemiDiscreteSystem(Scheme::order_reduction, 0, 1.0), DomainError);
    const SemiDiscreteSystem sys(Scheme::order_reduction, 1, 1.0);
    EXPECT_EQ(sys.dimension(), 2);
    EXPECT_LT((sys.generator() - hand_generator()).norm(), 1e-12);
    EXPECT_EQ(&sys.generator(), &sys.generator());
    const SemiDiscreteSystem copy = sys;
    EXPECT_EQ(&copy.generator(), &sys.generator());
}

TEST(SemiDiscreteSystem, ConcurrentFirstAccess) {
    const SemiDiscreteSystem sys(Scheme::order_reduction, 60, 1.0);
    std::vector<const DenseComplexMatrix*> seen(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t)
        threads.emplace_back([&, t] { seen[t] = &sys.weighted_generator(); });
    for (auto& th : threads) th.join();
    for (const auto* p : seen) EXPECT_EQ(p, seen[0]);
}

TEST(SemiDiscreteSystem, WeightedGeneratorIsSimilarity) {
    for (int n : {1, 9, 40}) {
        const SemiDiscreteSystem sys(Scheme::order_reduction, n, 1.0);
        const SchemeMatrices s = build_scheme_matrices(sys.mesh());
        const DenseComplexMatrix expected = s.D * sys.generator() * s.D.inverse();
        EXPECT_LE((sys.weighted_generator() - expected).norm(), 1e-11 * expected.norm());

        const SemiDiscreteSystem cl(Scheme::classical, n, 1.0);
        EXPECT_EQ(cl.weighted_generator(), cl.generator());
    }
}

TEST(SemiDiscreteSystem, WeightedCoordinates) {
    for (Scheme scheme : {Scheme::order_reduction, Scheme::classical}) {
        const SemiDiscreteSystem sys(scheme, 25, 1.0);
        const CVector w = random_state(sys.mesh(), 3).values();
        const CVector u = sys.to_weighted(w);
        EXPECT_LT(rel_diff(sys.from_weighted(u), w), 1e-13);
        EXPECT_NEAR(sys.energy(w), 0.5 * u.squaredNorm(), 1e-13 * sys.energy(w));
    }
}

TEST(Scheme, Parse) {
    EXPECT_EQ(parse_scheme("or"), Scheme::order_reduction);
    EXPECT_EQ(parse_scheme("order_reduction"), Scheme::order_reduction);
    EXPECT_EQ(parse_scheme("cl"), Scheme::classical);
    EXPECT_EQ(parse_scheme("classical"), Scheme::classical);
    EXPECT_THROW(parse_scheme("upwind"), DomainError);
}
