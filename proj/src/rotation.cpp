#include "spinparadox/rotation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace spinparadox {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTwiceSFloat = 30;
constexpr int kMaxTwiceSExact = 30;

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Signed binomial sum shared by the float and exact evaluations.
// Uses integer indices a = s+m (column), b = s+m' (row), n = 2s.
struct DTerm {
  int k;
  int sign;
  std::int64_t weight;  // C(s+m, k) C(s-m, s-m'-k)
  int cos_power;
  int sin_power;
};

std::vector<DTerm> d_terms(int n, int a, int b) {
  // s+m = a, s-m = n-a, s+m' = b, s-m' = n-b, m'-m = b-a
  std::vector<DTerm> terms;
  const int k_min = std::max(0, a - b);
  const int k_max = std::min(a, n - b);
  for (int k = k_min; k <= k_max; ++k) {
    DTerm t;
    t.k = k;
    t.sign = ((b - a + k) % 2 == 0) ? 1 : -1;
    t.weight = binomial(a, k) * binomial(n - a, n - b - k);
    t.cos_power = n + a - b - 2 * k;
    t.sin_power = b - a + 2 * k;
    terms.push_back(t);
  }
  return terms;
}

}  // namespace

Axis::Axis(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) throw std::invalid_argument("axis angles must be finite");
  theta = wrap_angle(theta);
  if (theta > std::numbers::pi) {
    theta = kTwoPi - theta;
    phi += std::numbers::pi;
  }
  theta_ = theta;
  phi_ = wrap_angle(phi);
}

Axis Axis::x() { return Axis(std::numbers::pi / 2, 0.0, 'x'); }
Axis Axis::y() { return Axis(std::numbers::pi / 2, std::numbers::pi / 2, 'y'); }
Axis Axis::z() { return Axis(0.0, 0.0, 'z'); }

std::string Axis::label() const {
  if (name_) return std::string(1, *name_);
  return fmt::format("({:.12g},{:.12g})", theta_, phi_);
}

OperatorMatrix wigner_small_d(const Spin& spin, double beta) {
  if (!std::isfinite(beta)) throw std::invalid_argument("rotation angle must be finite");
  const int n = spin.twice_s();
  if (n > kMaxTwiceSFloat) throw std::out_of_range("wigner_small_d supports 2s <= 30");
  const long double c = std::cos(static_cast<long double>(beta) / 2);
  const long double s = std::sin(static_cast<long double>(beta) / 2);
  OperatorMatrix d(spin.dim(), Units::none());
  for (std::size_t row = 0; row < spin.dim(); ++row) {
    const int b = n - static_cast<int>(row);  // s + m'
    for (std::size_t col = 0; col < spin.dim(); ++col) {
      const int a = n - static_cast<int>(col);  // s + m
      long double sum = 0;
      for (const auto& t : d_terms(n, a, b)) {
        sum += t.sign * static_cast<long double>(t.weight) * std::pow(c, t.cos_power) * std::pow(s, t.sin_power);
      }
      const long double prefactor =
          std::sqrt(static_cast<long double>(binomial(n, a)) / static_cast<long double>(binomial(n, b)));
      d(row, col) = static_cast<double>(prefactor * sum);
    }
  }
  return d;
}

namespace {

std::vector<Complex> rotated_column(const Spin& spin, const OperatorMatrix& d, std::size_t col, double phi) {
  std::vector<Complex> amps(spin.dim());
  for (std::size_t row = 0; row < spin.dim(); ++row) {
    const double m_row = 0.5 * spin.twice_m_at(row);
    amps[row] = std::polar(1.0, -m_row * phi) * d(row, col);
  }
  return amps;
}

}  // namespace

StateVector axis_eigenstate(const Spin& spin, int twice_m, const Axis& axis) {
  const std::size_t col = spin.index_of(twice_m);
  const OperatorMatrix d = wigner_small_d(spin, axis.theta());
  return StateVector(rotated_column(spin, d, col, axis.phi()), axis.label());
}

AxisBasis::AxisBasis(const Spin& spin, const Axis& axis) : spin_(spin), axis_(axis) {
  const OperatorMatrix d = wigner_small_d(spin, axis.theta());
  states_.reserve(spin.dim());
  for (std::size_t col = 0; col < spin.dim(); ++col) {
    states_.emplace_back(rotated_column(spin, d, col, axis.phi()), axis.label());
  }
}

Expansion expand(const StateVector& state, const Spin& spin, const Axis& axis) {
  if (state.dim() != spin.dim()) {
    throw std::invalid_argument(fmt::format("state dimension {} does not match spin dimension {}", state.dim(), spin.dim()));
  }
  const AxisBasis basis(spin, axis);
  Expansion out{spin, axis, {}};
  out.amplitudes.reserve(spin.dim());
  for (std::size_t i = 0; i < spin.dim(); ++i) {
    out.amplitudes.push_back({spin.twice_m_at(i), inner_product(basis.states()[i].amplitudes(), state.amplitudes())});
  }
  return out;
}

Rational exact_pi_half_probabilities(const Spin& spin, int twice_m_from, int twice_m_to) {
  const int n = spin.twice_s();
  if (n > kMaxTwiceSExact) throw std::out_of_range("exact pi/2 probabilities support 2s <= 30");
  if (!spin.contains(twice_m_from) || !spin.contains(twice_m_to)) {
    throw std::out_of_range(fmt::format("m values {} -> {} not both in the spectrum of spin {}",
                                        format_half_integer(twice_m_from), format_half_integer(twice_m_to),
                                        format_half_integer(n)));
  }
  const int a = (n + twice_m_from) / 2;
  const int b = (n + twice_m_to) / 2;
  // at beta = pi/2 every term carries (1/sqrt 2)^{2s}, so
  // d^2 = C(2s, s+m) S^2 / (C(2s, s+m') 2^{2s}) with S the signed binomial sum
  __int128 sum = 0;
  for (const auto& t : d_terms(n, a, b)) sum += t.sign * static_cast<__int128>(t.weight);
  const __int128 num = static_cast<__int128>(binomial(n, a)) * sum * sum;
  const __int128 den = static_cast<__int128>(binomial(n, b)) << n;
  return Rational::from_wide(num, den);
}

std::optional<Rational> exact_named_transition(const Spin& spin, const Axis& from, int twice_m_from, const Axis& to,
                                               int twice_m_to) {
  if (!from.name() || !to.name()) return std::nullopt;
  if (!spin.contains(twice_m_from) || !spin.contains(twice_m_to)) {
    throw std::out_of_range("transition endpoints outside the spectrum");
  }
  if (*from.name() == *to.name()) return Rational(twice_m_from == twice_m_to ? 1 : 0);
  // any two distinct coordinate axes are related by a quarter turn about the
  // third, and the moduli of that rotation's matrix elements are |d(pi/2)|
  return exact_pi_half_probabilities(spin, twice_m_from, twice_m_to);
}

}  // namespace spinparadox
