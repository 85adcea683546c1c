#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinparadox/rotation.hpp"

namespace spinparadox {
namespace {

using std::numbers::pi;

TEST(Axis, NamedAndNormalized) {
  EXPECT_DOUBLE_EQ(Axis::x().theta(), pi / 2);
  EXPECT_DOUBLE_EQ(Axis::x().phi(), 0.0);
  EXPECT_DOUBLE_EQ(Axis::y().phi(), pi / 2);
  EXPECT_DOUBLE_EQ(Axis::z().theta(), 0.0);
  EXPECT_EQ(Axis::x().name(), 'x');
  EXPECT_FALSE(Axis(1.0, 0.0).name());

  const Axis a(-0.5, 0.25);  // theta < 0 flips through the pole
  EXPECT_NEAR(a.theta(), 0.5, 1e-15);
  EXPECT_NEAR(a.phi(), 0.25 + pi, 1e-15);
  const Axis b(0.5, -0.25);
  EXPECT_NEAR(b.phi(), 2 * pi - 0.25, 1e-15);
  const Axis c(0.5, 2 * pi);
  EXPECT_EQ(c.phi(), 0.0);
  EXPECT_THROW(Axis(std::nan(""), 0.0), std::invalid_argument);
}

TEST(WignerSmallD, StretchedColumnAtQuarterTurn) {
  const auto d = wigner_small_d(Spin(4), pi / 2);
  const double expected[] = {0.25, 0.5, std::sqrt(6.0) / 4, 0.5, 0.25};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(d(i, 0).real(), expected[i], 1e-15);
}

TEST(WignerSmallD, FullQuarterTurnMatrixForSpinTwo) {
  // exp(-i pi/2 S_y) for s = 2, evaluated symbolically offline
  const double q = std::sqrt(6.0) / 4;
  const double expected[5][5] = {
      {0.25, -0.5, q, -0.5, 0.25},  {0.5, -0.5, 0.0, 0.5, -0.5}, {q, 0.0, -0.5, 0.0, q},
      {0.5, 0.5, 0.0, -0.5, -0.5}, {0.25, 0.5, q, 0.5, 0.25},
  };
  const auto d = wigner_small_d(Spin(4), pi / 2);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(d(i, j).real(), expected[i][j], 1e-14) << i << "," << j;
}

TEST(WignerSmallD, IdentityAtZero) {
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    EXPECT_LT(max_abs_diff(wigner_small_d(spin, 0.0), OperatorMatrix::identity(spin.dim())), 1e-15);
  }
}

TEST(WignerSmallD, MatchesMatrixExponential) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-2 * pi, 2 * pi);
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    for (int k = 0; k < 5; ++k) {
      const double beta = angle(rng);
      EXPECT_LT(max_abs_diff(wigner_small_d(spin, beta), oracle::small_d_by_exponential(spin, beta)), 1e-10)
          << "2s = " << t << " beta = " << beta;
    }
  }
}

TEST(WignerSmallD, GroupPropertyAndOrthogonality) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    for (int k = 0; k < 10; ++k) {
      const double b1 = angle(rng), b2 = angle(rng);
      const auto d1 = wigner_small_d(spin, b1);
      EXPECT_LT(max_abs_diff(d1 * wigner_small_d(spin, b2), wigner_small_d(spin, b1 + b2)), 1e-10);
      EXPECT_LT(max_abs_diff(d1 * d1.transpose(), OperatorMatrix::identity(spin.dim())), 1e-10);
      for (const auto& e : d1.entries()) EXPECT_EQ(e.imag(), 0.0);
    }
  }
}

TEST(WignerSmallD, ColumnsAreTiltedEigenstates) {
  for (int t = 1; t <= 8; ++t) {
    const Spin spin(t);
    const auto ops = spin_operators(spin);
    const double beta = 0.7;
    const auto tilted = Complex{std::cos(beta)} * ops.z + Complex{std::sin(beta)} * ops.x;
    const auto d = wigner_small_d(spin, beta);
    for (std::size_t col = 0; col < spin.dim(); ++col) {
      std::vector<Complex> v(spin.dim());
      for (std::size_t r = 0; r < spin.dim(); ++r) v[r] = d(r, col);
      const auto tv = matrix_apply(tilted, v);
      for (std::size_t r = 0; r < spin.dim(); ++r) EXPECT_NEAR(std::abs(tv[r] - 0.5 * spin.twice_m_at(col) * v[r]), 0.0, 1e-12);
    }
  }
}

TEST(AxisEigenstate, Examples) {
  const auto x2 = axis_eigenstate(Spin(4), 4, Axis::x());
  const double expected[] = {0.25, 0.5, std::sqrt(6.0) / 4, 0.5, 0.25};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(x2[i].real(), expected[i], 1e-12);
    EXPECT_EQ(x2[i].imag(), 0.0);
  }

  for (int t = 0; t <= 10; ++t) {
    const auto up = axis_eigenstate(Spin(t), t, Axis::z());
    EXPECT_EQ(up[0], Complex(1.0));
    for (std::size_t i = 1; i < up.dim(); ++i) EXPECT_EQ(up[i], Complex(0.0));
  }

  // S_x = [[0, 1/2], [1/2, 0]] has eigenvector (1, 1)/sqrt 2 for +1/2
  const auto half = axis_eigenstate(Spin(1), 1, Axis::x());
  EXPECT_NEAR(half[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(half[1].real(), 1 / std::sqrt(2.0), 1e-15);

  EXPECT_THROW(axis_eigenstate(Spin(4), 6, Axis::x()), std::out_of_range);
  EXPECT_THROW(axis_eigenstate(Spin(4), 1, Axis::x()), std::out_of_range);
}

TEST(AxisEigenstate, ResidualOverRandomDirections) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> twice_s(0, 8);
  std::uniform_real_distribution<double> theta(0.0, pi), phi(0.0, 2 * pi);
  for (int trial = 0; trial < 100; ++trial) {
    const Spin spin(twice_s(rng));
    const auto spectrum = spin.spectrum();
    const int tm = spectrum[std::uniform_int_distribution<std::size_t>(0, spectrum.size() - 1)(rng)];
    const Axis axis(theta(rng), phi(rng));
    const auto v = axis_eigenstate(spin, tm, axis);
    const auto nv = matrix_apply(component_along(spin_operators(spin), axis.theta(), axis.phi()), v);
    double residual = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) residual += std::norm(nv[i] - 0.5 * tm * v[i]);
    EXPECT_LT(std::sqrt(residual), 1e-9);
  }
}

TEST(AxisBasis, Orthonormal) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> theta(0.0, pi), phi(0.0, 2 * pi);
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    for (const Axis& axis : {Axis::x(), Axis::y(), Axis::z(), Axis(theta(rng), phi(rng))}) {
      const AxisBasis basis(spin, axis);
      for (std::size_t i = 0; i < spin.dim(); ++i)
        for (std::size_t j = 0; j < spin.dim(); ++j) {
          const Complex g = inner_product(basis.states()[i].amplitudes(), basis.states()[j].amplitudes());
          EXPECT_NEAR(std::abs(g - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-10);
        }
    }
  }
}

TEST(Expand, StretchedXExpansion) {
  const Spin spin(4);
  const auto x2 = axis_eigenstate(spin, 4, Axis::x());
  const auto e = expand(x2, spin, Axis::z());
  const double expected[] = {0.25, 0.5, std::sqrt(6.0) / 4, 0.5, 0.25};
  ASSERT_EQ(e.amplitudes.size(), 5u);
  double total = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(e.amplitudes[i].twice_m, 4 - 2 * static_cast<int>(i));
    EXPECT_NEAR(std::abs(e.amplitudes[i].amplitude - expected[i]), 0.0, 1e-12);
    total += std::norm(e.amplitudes[i].amplitude);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);

  const auto self = expand(x2, spin, Axis::x());
  EXPECT_NEAR(std::abs(self.amplitudes[0].amplitude - 1.0), 0.0, 1e-12);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_NEAR(std::abs(self.amplitudes[i].amplitude), 0.0, 1e-12);

  EXPECT_THROW(expand(x2, Spin(2), Axis::z()), std::invalid_argument);
}

TEST(Expand, EigenstateExpandsToUnitAmplitude) {
  const Axis tilted(1.1, 4.0);
  for (int t = 0; t <= 6; ++t) {
    const Spin spin(t);
    for (int tm : spin.spectrum()) {
      const auto e = expand(axis_eigenstate(spin, tm, tilted), spin, tilted);
      for (const auto& term : e.amplitudes) {
        EXPECT_NEAR(std::abs(term.amplitude), term.twice_m == tm ? 1.0 : 0.0, 1e-10);
      }
    }
  }
}

TEST(ExactPiHalf, Examples) {
  EXPECT_EQ(exact_pi_half_probabilities(Spin(4), 4, 4), Rational(1, 16));
  EXPECT_EQ(exact_pi_half_probabilities(Spin(4), 4, 0), Rational(3, 8));
  EXPECT_EQ(exact_pi_half_probabilities(Spin(1), 1, 1), Rational(1, 2));
  EXPECT_THROW(exact_pi_half_probabilities(Spin(4), 4, 5), std::out_of_range);
  EXPECT_THROW(exact_pi_half_probabilities(Spin(31), 31, 31), std::out_of_range);

  // squares of the symbolic s = 2 quarter-turn matrix
  const Rational expected[5][5] = {
      {{1, 16}, {1, 4}, {3, 8}, {1, 4}, {1, 16}}, {{1, 4}, {1, 4}, {0}, {1, 4}, {1, 4}},
      {{3, 8}, {0}, {1, 4}, {0}, {3, 8}},         {{1, 4}, {1, 4}, {0}, {1, 4}, {1, 4}},
      {{1, 16}, {1, 4}, {3, 8}, {1, 4}, {1, 16}},
  };
  const Spin spin(4);
  for (std::size_t to = 0; to < 5; ++to)
    for (std::size_t from = 0; from < 5; ++from)
      EXPECT_EQ(exact_pi_half_probabilities(spin, spin.twice_m_at(from), spin.twice_m_at(to)), expected[to][from]);
}

TEST(ExactPiHalf, StretchedColumnIsBinomial) {
  for (int t = 0; t <= 30; ++t) {
    const Spin spin(t);
    for (int tm : spin.spectrum()) {
      const Rational binomial_form(binomial(t, (t + tm) / 2), std::int64_t{1} << t);
      EXPECT_EQ(exact_pi_half_probabilities(spin, t, tm), binomial_form) << "2s = " << t << " 2m = " << tm;
    }
  }
}

TEST(ExactPiHalf, AgreesWithExponentialOracle) {
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    const auto d = oracle::small_d_by_exponential(spin, pi / 2);
    for (std::size_t to = 0; to < spin.dim(); ++to)
      for (std::size_t from = 0; from < spin.dim(); ++from) {
        const double exact = exact_pi_half_probabilities(spin, spin.twice_m_at(from), spin.twice_m_at(to)).to_double();
        EXPECT_NEAR(exact, std::norm(d(to, from)), 1e-12);
      }
  }
}

TEST(ExactPiHalf, RowsAreDistributions) {
  for (int t = 0; t <= 30; ++t) {
    const Spin spin(t);
    for (int from : spin.spectrum()) {
      Rational total(0);
      for (int to : spin.spectrum()) total += exact_pi_half_probabilities(spin, from, to);
      EXPECT_EQ(total, Rational(1)) << "2s = " << t;
    }
  }
}

TEST(ExactNamedTransition, MatchesBornProbabilities) {
  const Axis axes[] = {Axis::x(), Axis::y(), Axis::z()};
  for (int t = 0; t <= 6; ++t) {
    const Spin spin(t);
    for (const auto& from : axes)
      for (const auto& to : axes) {
        const AxisBasis to_basis(spin, to);
        for (int fm : spin.spectrum()) {
          const auto start = axis_eigenstate(spin, fm, from);
          for (int tm : spin.spectrum()) {
            const double born = std::norm(inner_product(to_basis.state(tm).amplitudes(), start.amplitudes()));
            const auto exact = exact_named_transition(spin, from, fm, to, tm);
            ASSERT_TRUE(exact);
            EXPECT_NEAR(exact->to_double(), born, 1e-12);
          }
        }
      }
  }
  EXPECT_FALSE(exact_named_transition(Spin(2), Axis(1.0, 0.0), 2, Axis::z(), 2));
}

}  // namespace
}  // namespace spinparadox
