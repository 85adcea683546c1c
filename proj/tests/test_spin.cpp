#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spinparadox/rotation.hpp"
#include "spinparadox/spin.hpp"

namespace spinparadox {
namespace {

const Complex I{0.0, 1.0};

TEST(Spin, Construction) {
  const Spin two = make_spin(4);
  EXPECT_EQ(two.twice_s(), 4);
  EXPECT_DOUBLE_EQ(two.s(), 2.0);
  EXPECT_EQ(two.dim(), 5u);

  const Spin zero = make_spin(0);
  EXPECT_EQ(zero.dim(), 1u);
  EXPECT_EQ(zero.spectrum(), std::vector<int>{0});

  const Spin three_halves = make_spin(3);
  EXPECT_DOUBLE_EQ(three_halves.s(), 1.5);
  EXPECT_EQ(three_halves.dim(), 4u);
  EXPECT_EQ(three_halves.spectrum(), (std::vector<int>{3, 1, -1, -3}));

  EXPECT_THROW(make_spin(-1), std::invalid_argument);
}

TEST(Spin, SpectrumIndexing) {
  const Spin s(4);
  EXPECT_EQ(s.index_of(4), 0u);
  EXPECT_EQ(s.index_of(-4), 4u);
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_FALSE(s.contains(6));
  EXPECT_THROW(s.index_of(3), std::out_of_range);
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(s.index_of(s.twice_m_at(i)), i);
}

TEST(HalfInteger, Parsing) {
  EXPECT_EQ(parse_half_integer("2"), 4);
  EXPECT_EQ(parse_half_integer("4/2"), 4);
  EXPECT_EQ(parse_half_integer("1/2"), 1);
  EXPECT_EQ(parse_half_integer("+3/2"), 3);
  EXPECT_EQ(parse_half_integer("-1/2"), -1);
  EXPECT_EQ(parse_half_integer("-1"), -2);
  EXPECT_EQ(parse_half_integer("0"), 0);
  EXPECT_FALSE(parse_half_integer("1/3"));
  EXPECT_FALSE(parse_half_integer("x"));
  EXPECT_FALSE(parse_half_integer(""));
  EXPECT_FALSE(parse_half_integer("1/"));
  EXPECT_FALSE(parse_half_integer("1.5"));
  EXPECT_FALSE(parse_half_integer("++1"));
  EXPECT_FALSE(parse_half_integer("1/-2"));
}

TEST(HalfInteger, RoundTripsEverySpectrumValue) {
  for (int t = 0; t <= 30; ++t) {
    for (int tm : Spin(t).spectrum()) {
      EXPECT_EQ(parse_half_integer(format_half_integer(tm)), tm);
      EXPECT_EQ(parse_half_integer(format_signed_half_integer(tm)), tm);
    }
  }
}

TEST(SpinOperators, SpinHalfIsHalfPauli) {
  const auto ops = spin_operators(Spin(1));
  const OperatorMatrix sx(2, {0.0, 0.5, 0.5, 0.0}, Units::hbar());
  const OperatorMatrix sy(2, {0.0, -0.5 * I, 0.5 * I, 0.0}, Units::hbar());
  const OperatorMatrix sz(2, {0.5, 0.0, 0.0, -0.5}, Units::hbar());
  EXPECT_LT(max_abs_diff(ops.x, sx), 1e-15);
  EXPECT_LT(max_abs_diff(ops.y, sy), 1e-15);
  EXPECT_LT(max_abs_diff(ops.z, sz), 1e-15);
  EXPECT_EQ(ops.x.units(), Units::hbar());
}

TEST(SpinOperators, SzIsDiagonal) {
  const auto ops = spin_operators(Spin(4));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const double expected = i == j ? 2.0 - static_cast<double>(i) : 0.0;
      EXPECT_EQ(ops.z(i, j), Complex(expected, 0.0));
    }
}

TEST(SpinOperators, HermitianAndCondonShortley) {
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    const auto ops = spin_operators(spin);
    EXPECT_TRUE(ops.x.is_hermitian(1e-15));
    EXPECT_TRUE(ops.y.is_hermitian(1e-15));
    EXPECT_TRUE(ops.z.is_hermitian(1e-15));
    const auto plus = raising_operator(spin);
    for (const auto& e : plus.entries()) {
      EXPECT_GE(e.real(), 0.0);
      EXPECT_EQ(e.imag(), 0.0);
    }
  }
}

TEST(SpinOperators, CommutationRelations) {
  for (int t = 0; t <= 10; ++t) {
    const auto ops = spin_operators(Spin(t));
    EXPECT_LT(max_abs_diff(commutator(ops.x, ops.y), I * ops.z), 1e-10) << "2s = " << t;
    EXPECT_LT(max_abs_diff(commutator(ops.y, ops.z), I * ops.x), 1e-10) << "2s = " << t;
    EXPECT_LT(max_abs_diff(commutator(ops.z, ops.x), I * ops.y), 1e-10) << "2s = " << t;
    EXPECT_EQ(commutator(ops.x, ops.y).units(), Units::hbar_squared());
  }
}

TEST(Casimir, MatchesSTimesSPlusOne) {
  EXPECT_LT(max_abs_diff(casimir(Spin(4)), Complex{6.0} * OperatorMatrix::identity(5, Units::hbar_squared())), 1e-12);
  EXPECT_EQ(casimir(Spin(0)).max_abs(), 0.0);
  EXPECT_EQ(casimir(Spin(0)).dim(), 1u);
  // (3/2)(5/2) = 15/4 computed by hand
  EXPECT_LT(max_abs_diff(casimir(Spin(3)), Complex{3.75} * OperatorMatrix::identity(4, Units::hbar_squared())), 1e-12);
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    const double value = spin.s() * (spin.s() + 1.0);
    const auto c = casimir(spin);
    EXPECT_EQ(c.units(), Units::hbar_squared());
    EXPECT_LT(max_abs_diff(c, Complex{value} * OperatorMatrix::identity(spin.dim(), Units::hbar_squared())), 1e-12);
  }
}

TEST(Commutator, SquaredComponents) {
  const auto half = spin_operators(Spin(1));
  EXPECT_LT(commutator(half.x * half.x, half.z * half.z).max_abs(), 1e-15);

  // [S_x^2, S_z^2] for s = 2, multiplied out exactly: +-2 sqrt 6 in the
  // (0,2), (2,0), (2,4), (4,2) positions
  const auto ops = spin_operators(Spin(4));
  const auto c = commutator(ops.x * ops.x, ops.z * ops.z);
  const double r = 2.0 * std::sqrt(6.0);
  OperatorMatrix expected(5, Units{4});
  expected(0, 2) = -r;
  expected(2, 0) = r;
  expected(2, 4) = r;
  expected(4, 2) = -r;
  EXPECT_LT(max_abs_diff(c, expected), 1e-12);
  EXPECT_GT(c.max_abs(), 0.1);
  EXPECT_EQ(c.units(), Units{4});

  EXPECT_THROW(commutator(ops.x, half.x), std::invalid_argument);
}

TEST(MatrixApply, Basics) {
  const Spin spin(4);
  const auto ops = spin_operators(spin);
  const auto up = StateVector::basis_state(spin, 4);
  const auto out = matrix_apply(ops.z, up);
  EXPECT_EQ(out[0], Complex(2.0));
  for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(out[i], Complex(0.0));

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  std::vector<Complex> raw(5);
  for (auto& a : raw) a = {g(rng), g(rng)};
  const auto v = StateVector::normalized(raw);
  const auto same = matrix_apply(OperatorMatrix::identity(5), v);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(same[i], v[i]);

  const double q = std::sqrt(6.0) / 4.0;
  const StateVector eq1({0.25, 0.5, q, 0.5, 0.25});
  const auto sx_v = matrix_apply(ops.x, eq1);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_LT(std::abs(sx_v[i] - 2.0 * eq1[i]), 1e-12);

  EXPECT_THROW(matrix_apply(ops.x, StateVector::basis_state(Spin(1), 1)), std::invalid_argument);
}

TEST(StateVector, NormalizationAndPhase) {
  EXPECT_THROW(StateVector({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(StateVector(std::vector<Complex>{}), std::invalid_argument);
  EXPECT_THROW(StateVector({std::nan(""), 0.0}), std::invalid_argument);
  EXPECT_THROW(StateVector::normalized({0.0, 0.0}), std::invalid_argument);

  const StateVector v({0.0, Complex(0.0, -0.6), 0.8});
  EXPECT_EQ(v[0], Complex(0.0));
  EXPECT_DOUBLE_EQ(v[1].real(), 0.6);
  EXPECT_EQ(v[1].imag(), 0.0);
  EXPECT_NEAR(v[2].real(), 0.0, 1e-15);
  EXPECT_NEAR(v[2].imag(), 0.8, 1e-15);
}

TEST(Spectrum, EigenvaluesByCharacteristicPolynomial) {
  // det(A - m I) vanishes at each spectrum value, relative to the product of
  // the gaps to the other eigenvalues
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    const auto ops = spin_operators(spin);
    for (const auto* op : {&ops.x, &ops.y, &ops.z}) {
      for (int tm : spin.spectrum()) {
        const double m = 0.5 * tm;
        const auto shifted = *op - Complex{m} * OperatorMatrix::identity(spin.dim(), Units::hbar());
        double gaps = 1.0;
        for (int other : spin.spectrum())
          if (other != tm) gaps *= std::abs(m - 0.5 * other);
        EXPECT_LT(std::abs(oracle::determinant(shifted)) / gaps, 1e-10) << "2s = " << t << " 2m = " << tm;
      }
    }
  }
}

TEST(Spectrum, EigenvaluesByAxisEigenvectors) {
  for (int t = 0; t <= 10; ++t) {
    const Spin spin(t);
    const auto ops = spin_operators(spin);
    const std::pair<const OperatorMatrix*, Axis> pairs[] = {{&ops.x, Axis::x()}, {&ops.y, Axis::y()}, {&ops.z, Axis::z()}};
    for (const auto& [op, axis] : pairs) {
      for (int tm : spin.spectrum()) {
        const auto v = axis_eigenstate(spin, tm, axis);
        const auto av = matrix_apply(*op, v);
        double residual = 0.0;
        for (std::size_t i = 0; i < v.dim(); ++i) residual += std::norm(av[i] - 0.5 * tm * v[i]);
        EXPECT_LT(std::sqrt(residual), 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace spinparadox
