#include "wehrl/weyl.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wehrl;

namespace {

PhaseSpacePoint pt(std::vector<int> g, std::vector<int> lambda) {
  return PhaseSpacePoint{GroupElement{std::move(g)}, Character{std::move(lambda)}};
}

}  // namespace

TEST(Cocycle, Examples) {
  const auto z2 = GroupDescriptor::parse("Z2");
  // chi_1(0) conj(chi_1(1)) = -1.
  EXPECT_EQ(cocycle(z2, pt({1}, {1}), pt({0}, {1})), std::complex<double>(-1.0, 0.0));
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    for (std::size_t z = 0; z < g.phase_space_size(); ++z) {
      EXPECT_TRUE(cocycle_phase_index(g, z, z).is_zero());
      for (std::size_t w = 0; w < g.phase_space_size(); ++w) {
        EXPECT_EQ(cocycle_phase_index(g, w, z), -cocycle_phase_index(g, z, w));
        EXPECT_EQ(cocycle(g, g.point(w), g.point(z)), std::conj(cocycle(g, g.point(z), g.point(w))));
      }
    }
  }
}

TEST(Cocycle, Bilinear) {
  for (const char* spec : {"Z2", "Z4", "Z6", "Z2xZ2", "Z3xZ3"}) {
    const auto g = GroupDescriptor::parse(spec);
    const std::size_t points = g.phase_space_size();
    for (std::size_t z = 0; z < points; ++z)
      for (std::size_t z1 = 0; z1 < points; ++z1)
        for (std::size_t w = 0; w < points; ++w) {
          const auto sum = g.index_of(add(g, g.point(z), g.point(z1)));
          ASSERT_EQ(cocycle_phase_index(g, sum, w), cocycle_phase_index(g, z, w) + cocycle_phase_index(g, z1, w));
        }
  }
}

TEST(Cocycle, TrivialOnMaximalCompact) {
  for (const char* spec : {"Z2", "Z3", "Z4", "Z6", "Z8", "Z2xZ2", "Z4xZ2", "Z3xZ3", "Z9", "Z2xZ2xZ2", "Z16", "Z4xZ4"}) {
    const auto g = GroupDescriptor::parse(spec);
    for (const auto& h : all_subgroups(g)) {
      const auto k = maximal_compact(h);
      for (std::size_t u : k.indices())
        for (std::size_t v : k.indices()) ASSERT_TRUE(cocycle_phase_index(g, u, v).is_zero()) << spec;
    }
  }
}

TEST(Heisenberg, IdentityAndCentralCoordinate) {
  const auto z2 = GroupDescriptor::parse("Z2");
  const HeisenbergElement a{pt({1}, {1}), Phase(1, 3)};
  EXPECT_EQ(heis_mul(z2, a, heis_identity(z2)), a);
  EXPECT_EQ(heis_mul(z2, heis_identity(z2), a), a);
  const auto prod = heis_mul(z2, {pt({1}, {1}), Phase()}, {pt({0}, {1}), Phase()});
  EXPECT_EQ(prod.z, pt({1}, {0}));
  EXPECT_EQ(prod.t.value(), std::complex<double>(-1.0, 0.0));
}

TEST(Heisenberg, AssociativeExactly) {
  std::mt19937_64 rng(3);
  for (const char* spec : {"Z6", "Z4xZ2", "Z3xZ9"}) {
    const auto g = GroupDescriptor::parse(spec);
    std::uniform_int_distribution<std::size_t> pick(0, g.phase_space_size() - 1);
    std::uniform_int_distribution<int> num(0, 11);
    for (int i = 0; i < 1000; ++i) {
      const HeisenbergElement a{g.point(pick(rng)), Phase(num(rng), 12)};
      const HeisenbergElement b{g.point(pick(rng)), Phase(num(rng), 7)};
      const HeisenbergElement c{g.point(pick(rng)), Phase(num(rng), 5)};
      ASSERT_EQ(heis_mul(g, heis_mul(g, a, b), c), heis_mul(g, a, heis_mul(g, b, c)));
    }
  }
}

TEST(WeylApply, Examples) {
  const auto z2 = GroupDescriptor::parse("Z2");
  const Vector delta0 = StateVector::basis(2, 0).amplitudes();
  EXPECT_EQ(weyl_apply(z2, pt({0}, {0}), delta0), delta0);
  EXPECT_EQ(weyl_apply(z2, pt({1}, {0}), delta0), StateVector::basis(2, 1).amplitudes());
  const double r = 1.0 / std::sqrt(2.0);
  Vector plus(2);
  plus << r, r;
  Vector minus(2);
  minus << r, -r;
  EXPECT_LT((weyl_apply(z2, pt({0}, {1}), plus) - minus).norm(), 1e-15);
  EXPECT_THROW(weyl_apply(z2, pt({0}, {1}), Vector::Zero(3).eval()), DimensionMismatch);
}

TEST(WeylApply, AdjointInvertsAndPreservesNorm) {
  std::mt19937_64 rng(5);
  const auto g = GroupDescriptor::parse("Z4xZ3");
  for (std::size_t z = 0; z < g.phase_space_size(); ++z) {
    const WeylOperator w(g, z);
    const Vector f = random_state(g.order(), rng).amplitudes();
    EXPECT_NEAR(w.apply(f).norm(), 1.0, 1e-13);
    EXPECT_LT((w.apply_adjoint(w.apply(f)) - f).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(WeylDense, Examples) {
  const auto z2 = GroupDescriptor::parse("Z2");
  EXPECT_EQ(weyl_dense(z2, pt({0}, {0})), Matrix::Identity(2, 2));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 1) = 1.0;   // chi_1(0) at row 0, column 0 - 1 = 1
  expected(1, 0) = -1.0;  // chi_1(1) at row 1, column 0
  EXPECT_EQ(weyl_dense(z2, pt({1}, {1})), expected);
  EXPECT_THROW(weyl_dense(GroupDescriptor::parse("Z8"), pt({1}, {1}), 4), DenseLimitExceeded);
}

TEST(WeylDense, MonomialUnitaryAndMatchesOracle) {
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    const auto d = static_cast<Eigen::Index>(g.order());
    for (std::size_t z = 0; z < g.phase_space_size(); ++z) {
      const Matrix m = WeylOperator(g, z).dense();
      EXPECT_LT((m - oracle::naive_weyl(g, z)).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LE((m.adjoint() * m - Matrix::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-12);
      for (Eigen::Index r = 0; r < d; ++r) {
        int nonzero_row = 0;
        int nonzero_col = 0;
        for (Eigen::Index c = 0; c < d; ++c) {
          if (m(r, c) != 0.0) {
            ++nonzero_row;
            EXPECT_NEAR(std::abs(m(r, c)), 1.0, 1e-14);
          }
          if (m(c, r) != 0.0) ++nonzero_col;
        }
        EXPECT_EQ(nonzero_row, 1);
        EXPECT_EQ(nonzero_col, 1);
      }
    }
  }
}

TEST(WeylApply, FastMatchesDenseOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (const auto& spec : oracle::standard_suite()) {
    const auto g = GroupDescriptor::parse(spec);
    std::uniform_int_distribution<std::size_t> pick(0, g.phase_space_size() - 1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const std::size_t z = pick(rng);
      const Vector f = random_state(g.order(), rng).amplitudes();
      worst = std::max(worst, (WeylOperator(g, z).apply(f) - oracle::naive_weyl(g, z) * f).cwiseAbs().maxCoeff());
    }
    EXPECT_LE(worst, 1e-13) << spec;
  }
}

TEST(WeylApply, CommutationPointwise) {
  std::mt19937_64 rng(23);
  const auto g = GroupDescriptor::parse("Z6xZ2");
  std::uniform_int_distribution<std::size_t> pick(0, g.phase_space_size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t z = pick(rng);
    const std::size_t w = pick(rng);
    const Vector f = random_state(g.order(), rng).amplitudes();
    const Vector lhs = WeylOperator(g, z).apply(WeylOperator(g, w).apply(f));
    const Vector rhs = cocycle_phase_index(g, z, w).value() * WeylOperator(g, w).apply(WeylOperator(g, z).apply(f));
    ASSERT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(VerifyCcr, ExhaustiveAndRandomized) {
  const auto z2 = verify_ccr(GroupDescriptor::parse("Z2"));
  EXPECT_TRUE(z2.exhaustive);
  EXPECT_EQ(z2.pairs_checked, 16u);
  EXPECT_TRUE(z2.passed);
  for (const auto& spec : oracle::standard_suite()) {
    const auto report = verify_ccr(GroupDescriptor::parse(spec), 1);
    EXPECT_TRUE(report.passed) << spec << " residual " << report.max_residual;
  }
  const auto big = verify_ccr(GroupDescriptor::parse("Z8xZ4"), 2);
  EXPECT_FALSE(big.exhaustive);
  EXPECT_EQ(big.pairs_checked, 10000u);
  EXPECT_TRUE(big.passed);
}

TEST(VerifyCcr, CommutingPairHasZeroResidual) {
  const auto g = GroupDescriptor::parse("Z4");
  std::mt19937_64 rng(1);
  // omega((2, 0), (0, 2)) = 1 in Z4.
  const std::size_t z = g.index_of(pt({2}, {0}));
  const std::size_t w = g.index_of(pt({0}, {2}));
  ASSERT_TRUE(cocycle_phase_index(g, z, w).is_zero());
  const Vector f = random_state(4, rng).amplitudes();
  const Vector lhs = WeylOperator(g, z).apply(WeylOperator(g, w).apply(f));
  const Vector rhs = WeylOperator(g, w).apply(WeylOperator(g, z).apply(f));
  EXPECT_EQ((lhs - rhs).cwiseAbs().maxCoeff(), 0.0);
}
