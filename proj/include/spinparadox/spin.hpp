#pragma once

// Spin-s operator algebra in the S_z eigenbasis.
//
// Conventions used throughout the library:
//   * hbar = 1. Matrices carry a Units tag recording the power of hbar.
//   * Basis index i corresponds to twice_m = twice_s - 2 i, so amplitudes run
//     m = +s, s-1, ..., -s.
//   * Ladder operators use the Condon-Shortley phase (real, non-negative
//     matrix elements), which makes every stretched eigenstate along +x have
//     non-negative S_z amplitudes.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spinparadox {

using Complex = std::complex<double>;

/// Spin quantum number s, stored exactly as the integer 2s.
class Spin {
 public:
  /// Throws std::invalid_argument for negative twice_s.
  explicit Spin(int twice_s);

  int twice_s() const { return twice_s_; }
  double s() const { return 0.5 * twice_s_; }
  std::size_t dim() const { return static_cast<std::size_t>(twice_s_) + 1; }

  /// twice_m values in storage order: twice_s, twice_s - 2, ..., -twice_s.
  std::vector<int> spectrum() const;
  bool contains(int twice_m) const;
  /// Basis index of twice_m; throws std::out_of_range outside the spectrum.
  std::size_t index_of(int twice_m) const;
  int twice_m_at(std::size_t index) const { return twice_s_ - 2 * static_cast<int>(index); }

  /// s(s+1) in quarter units, i.e. twice_s (twice_s + 2).
  int casimir_quarters() const { return twice_s_ * (twice_s_ + 2); }

  friend bool operator==(const Spin&, const Spin&) = default;

 private:
  int twice_s_;
};

Spin make_spin(int twice_s);

/// Parses "2", "4/2", "1/2", "+3/2", "-1/2". Returns twice the value, or
/// nullopt when the text is not an integer or half-integer.
std::optional<int> parse_half_integer(std::string_view text);
/// Inverse of parse_half_integer for the canonical forms "2", "-1/2".
std::string format_half_integer(int twice_value);
/// Like format_half_integer but with an explicit "+" on positive values.
std::string format_signed_half_integer(int twice_value);

/// Power of hbar attached to a matrix or value.
struct Units {
  int hbar_power = 0;

  static constexpr Units none() { return {0}; }
  static constexpr Units hbar() { return {1}; }
  static constexpr Units hbar_squared() { return {2}; }

  std::string label() const;
  friend Units operator*(Units a, Units b) { return {a.hbar_power + b.hbar_power}; }
  friend bool operator==(Units, Units) = default;
};

/// Dense complex square matrix, row-major.
class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t dim, Units units);
  OperatorMatrix(std::size_t dim, std::vector<Complex> entries, Units units);

  static OperatorMatrix identity(std::size_t dim, Units units = Units::none());

  std::size_t dim() const { return dim_; }
  Units units() const { return units_; }
  const std::vector<Complex>& entries() const { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  OperatorMatrix adjoint() const;
  OperatorMatrix transpose() const;
  bool is_hermitian(double tol) const;
  /// Largest |entry|.
  double max_abs() const;

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(Complex c, const OperatorMatrix& a);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
  Units units_;
};

/// Largest entrywise |a - b|, ignoring units. Throws on dimension mismatch.
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

/// Normalized amplitude vector in the S_z eigenbasis.
///
/// Construction enforces sum |a|^2 = 1 within kNormTolerance and applies the
/// global-phase rule: the first amplitude with modulus above
/// kPhaseThreshold (scanning from m = +s) is made real and non-negative.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-12;
  static constexpr double kPhaseThreshold = 1e-12;

  /// Throws std::invalid_argument if the input is empty, non-finite or not
  /// normalized.
  explicit StateVector(std::vector<Complex> amplitudes, std::string basis_label = "z");

  /// Rescales arbitrary non-zero input to unit norm before construction.
  static StateVector normalized(std::vector<Complex> amplitudes, std::string basis_label = "z");

  /// The S_z eigenstate |m>.
  static StateVector basis_state(const Spin& spin, int twice_m);

  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  /// Descriptive only; storage is always in the S_z eigenbasis.
  const std::string& basis_label() const { return basis_label_; }

 private:
  std::vector<Complex> amplitudes_;
  std::string basis_label_;
};

/// <a|b> with the first argument conjugated.
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
/// Rotates the global phase so the first non-negligible entry is real >= 0.
void apply_phase_convention(std::vector<Complex>& amplitudes);

struct SpinOperators {
  OperatorMatrix x;
  OperatorMatrix y;
  OperatorMatrix z;
};

/// S_x, S_y, S_z in units of hbar, built from the ladder operators.
SpinOperators spin_operators(const Spin& spin);
/// S_+ in units of hbar.
OperatorMatrix raising_operator(const Spin& spin);
/// S_x^2 + S_y^2 + S_z^2 in units of hbar^2.
OperatorMatrix casimir(const Spin& spin);
/// AB - BA. Units are the product of the input units.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
/// Plain matrix-vector product, no renormalization.
std::vector<Complex> matrix_apply(const OperatorMatrix& a, const StateVector& v);
std::vector<Complex> matrix_apply(const OperatorMatrix& a, std::span<const Complex> v);

/// n.S for the direction with polar angle theta and azimuth phi.
OperatorMatrix component_along(const SpinOperators& ops, double theta, double phi);

}  // namespace spinparadox
