#include "spinparadox/spin.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace spinparadox {

Spin::Spin(int twice_s) : twice_s_(twice_s) {
  if (twice_s < 0) throw std::invalid_argument("spin must be non-negative, got 2s = " + std::to_string(twice_s));
}

Spin make_spin(int twice_s) { return Spin(twice_s); }

std::vector<int> Spin::spectrum() const {
  std::vector<int> out;
  out.reserve(dim());
  for (int tm = twice_s_; tm >= -twice_s_; tm -= 2) out.push_back(tm);
  return out;
}

bool Spin::contains(int twice_m) const {
  return twice_m >= -twice_s_ && twice_m <= twice_s_ && (twice_s_ - twice_m) % 2 == 0;
}

std::size_t Spin::index_of(int twice_m) const {
  if (!contains(twice_m)) {
    throw std::out_of_range("m = " + format_half_integer(twice_m) + " is not in the spectrum of spin " +
                            format_half_integer(twice_s_));
  }
  return static_cast<std::size_t>((twice_s_ - twice_m) / 2);
}

namespace {

std::optional<long long> parse_int(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty() || text.front() == '+') return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<int> parse_half_integer(std::string_view text) {
  constexpr long long kLimit = 1'000'000;
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(text);
    if (!v || *v > kLimit || *v < -kLimit) return std::nullopt;
    return static_cast<int>(2 * *v);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) return std::nullopt;
  auto den = parse_int(den_text);
  if (!num || !den || *num > kLimit || *num < -kLimit) return std::nullopt;
  if (*den == 1) return static_cast<int>(2 * *num);
  if (*den == 2) return static_cast<int>(*num);
  return std::nullopt;
}

std::string format_half_integer(int twice_value) {
  if (twice_value % 2 == 0) return std::to_string(twice_value / 2);
  return std::to_string(twice_value) + "/2";
}

std::string format_signed_half_integer(int twice_value) {
  return (twice_value > 0 ? "+" : "") + format_half_integer(twice_value);
}

std::string Units::label() const {
  switch (hbar_power) {
    case 0: return "1";
    case 1: return "hbar";
    default: return "hbar^" + std::to_string(hbar_power);
  }
}

OperatorMatrix::OperatorMatrix(std::size_t dim, Units units)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}), units_(units) {}

OperatorMatrix::OperatorMatrix(std::size_t dim, std::vector<Complex> entries, Units units)
    : dim_(dim), entries_(std::move(entries)), units_(units) {
  if (entries_.size() != dim * dim) throw std::invalid_argument("matrix entry count does not match dimension");
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) throw std::invalid_argument("non-finite matrix entry");
  }
}

OperatorMatrix OperatorMatrix::identity(std::size_t dim, Units units) {
  OperatorMatrix m(dim, units);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  OperatorMatrix out(dim_, units_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

OperatorMatrix OperatorMatrix::transpose() const {
  OperatorMatrix out(dim_, units_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(j, i);
  return out;
}

bool OperatorMatrix::is_hermitian(double tol) const { return max_abs_diff(*this, adjoint()) <= tol; }

double OperatorMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

namespace {

void require_same_dim(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

void require_same_units(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.units() != b.units()) throw std::invalid_argument("units mismatch: " + a.units().label() + " vs " + b.units().label());
}

}  // namespace

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  OperatorMatrix out(n, a.units() * b.units());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  require_same_units(a, b);
  OperatorMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  require_same_units(a, b);
  OperatorMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

OperatorMatrix operator*(Complex c, const OperatorMatrix& a) {
  OperatorMatrix out = a;
  for (auto& e : out.entries_) e *= c;
  return out;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product of vectors with different lengths");
  Complex sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& a : v) sum += std::norm(a);
  return std::sqrt(sum);
}

void apply_phase_convention(std::vector<Complex>& amplitudes) {
  for (const auto& a : amplitudes) {
    const double r = std::abs(a);
    if (r > StateVector::kPhaseThreshold) {
      const Complex phase = std::conj(a) / r;
      for (auto& b : amplitudes) b *= phase;
      return;
    }
  }
}

StateVector::StateVector(std::vector<Complex> amplitudes, std::string basis_label)
    : amplitudes_(std::move(amplitudes)), basis_label_(std::move(basis_label)) {
  if (amplitudes_.empty()) throw std::invalid_argument("state vector must have at least one amplitude");
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw std::invalid_argument("non-finite amplitude");
  }
  double n2 = 0.0;
  for (const auto& a : amplitudes_) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state vector is not normalized (sum |a|^2 = " + std::to_string(n2) + ")");
  }
  apply_phase_convention(amplitudes_);
  // snap the phase-fixed leading amplitude onto the real axis exactly
  for (auto& a : amplitudes_) {
    if (std::abs(a) > kPhaseThreshold) {
      a = Complex{std::abs(a), 0.0};
      break;
    }
  }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes, std::string basis_label) {
  const double n = norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  for (auto& a : amplitudes) a /= n;
  return StateVector(std::move(amplitudes), std::move(basis_label));
}

StateVector StateVector::basis_state(const Spin& spin, int twice_m) {
  std::vector<Complex> amps(spin.dim());
  amps[spin.index_of(twice_m)] = 1.0;
  return StateVector(std::move(amps));
}

OperatorMatrix raising_operator(const Spin& spin) {
  const std::size_t n = spin.dim();
  OperatorMatrix plus(n, Units::hbar());
  // <m+1|S+|m> = sqrt(s(s+1) - m(m+1)); in quarter units (T(T+2) - tm(tm+2)) / 4
  for (std::size_t col = 1; col < n; ++col) {
    const int tm = spin.twice_m_at(col);
    const double quarters = spin.casimir_quarters() - tm * (tm + 2);
    plus(col - 1, col) = std::sqrt(quarters) / 2.0;
  }
  return plus;
}

SpinOperators spin_operators(const Spin& spin) {
  const std::size_t n = spin.dim();
  const OperatorMatrix plus = raising_operator(spin);
  const OperatorMatrix minus = plus.adjoint();
  OperatorMatrix z(n, Units::hbar());
  for (std::size_t i = 0; i < n; ++i) z(i, i) = 0.5 * spin.twice_m_at(i);
  return SpinOperators{
      .x = Complex{0.5, 0.0} * (plus + minus),
      .y = Complex{0.0, -0.5} * (plus - minus),
      .z = std::move(z),
  };
}

OperatorMatrix casimir(const Spin& spin) {
  const auto ops = spin_operators(spin);
  return ops.x * ops.x + ops.y * ops.y + ops.z * ops.z;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

std::vector<Complex> matrix_apply(const OperatorMatrix& a, std::span<const Complex> v) {
  if (a.dim() != v.size()) {
    throw std::invalid_argument("dimension mismatch: matrix " + std::to_string(a.dim()) + ", vector " +
                                std::to_string(v.size()));
  }
  std::vector<Complex> out(v.size());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < a.dim(); ++j) sum += a(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

std::vector<Complex> matrix_apply(const OperatorMatrix& a, const StateVector& v) {
  return matrix_apply(a, std::span<const Complex>(v.amplitudes()));
}

OperatorMatrix component_along(const SpinOperators& ops, double theta, double phi) {
  const double nx = std::sin(theta) * std::cos(phi);
  const double ny = std::sin(theta) * std::sin(phi);
  const double nz = std::cos(theta);
  return Complex{nx, 0.0} * ops.x + Complex{ny, 0.0} * ops.y + Complex{nz, 0.0} * ops.z;
}

}  // namespace spinparadox
