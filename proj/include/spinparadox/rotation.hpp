#pragma once

#include <optional>
#include <vector>

#include "spinparadox/rational.hpp"
#include "spinparadox/spin.hpp"

namespace spinparadox {

/// Measurement direction. theta is the polar angle from +z, phi the azimuth
/// from +x; both are normalized to theta in [0, pi], phi in [0, 2 pi).
class Axis {
 public:
  Axis(double theta, double phi);

  static Axis x();
  static Axis y();
  static Axis z();

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  /// 'x', 'y' or 'z' for the named constructors, nullopt otherwise.
  std::optional<char> name() const { return name_; }
  std::string label() const;

  friend bool operator==(const Axis& a, const Axis& b) { return a.theta_ == b.theta_ && a.phi_ == b.phi_; }

 private:
  Axis(double theta, double phi, char name) : theta_(theta), phi_(phi), name_(name) {}

  double theta_;
  double phi_;
  std::optional<char> name_;
};

struct ExpansionTerm {
  int twice_m;
  Complex amplitude;
};

/// A state written in the eigenbasis of one spin component.
struct Expansion {
  Spin spin;
  Axis axis;
  std::vector<ExpansionTerm> amplitudes;  // descending twice_m
};

/// Wigner small-d matrix d^s_{m',m}(beta) = <m'| exp(-i beta S_y) |m>, real
/// entries, rows and columns in descending-m order. Column m holds the
/// eigenstate of cos(beta) S_z + sin(beta) S_x with eigenvalue m.
///
/// Evaluated from the closed-form binomial sum in extended precision; the
/// integer binomial weights limit this to 2s <= 30.
OperatorMatrix wigner_small_d(const Spin& spin, double beta);

/// Eigenstate |m>_axis of n.S, built as exp(-i phi S_z) exp(-i theta S_y) |m>
/// and then phase-fixed by the StateVector convention.
StateVector axis_eigenstate(const Spin& spin, int twice_m, const Axis& axis);

/// All 2s+1 eigenstates of one axis, in descending-m order. Cheaper than
/// calling axis_eigenstate repeatedly because the d-matrix is built once.
class AxisBasis {
 public:
  AxisBasis(const Spin& spin, const Axis& axis);

  const Spin& spin() const { return spin_; }
  const Axis& axis() const { return axis_; }
  const std::vector<StateVector>& states() const { return states_; }
  const StateVector& state(int twice_m) const { return states_[spin_.index_of(twice_m)]; }

 private:
  Spin spin_;
  Axis axis_;
  std::vector<StateVector> states_;
};

/// Amplitudes <m|_axis state for every m in the spectrum.
Expansion expand(const StateVector& state, const Spin& spin, const Axis& axis);

/// Exact |d^s_{to,from}(pi/2)|^2 as a reduced fraction. Requires 2s <= 30.
Rational exact_pi_half_probabilities(const Spin& spin, int twice_m_from, int twice_m_to);

/// Exact transition probability |<to_m|_to from_m>_from|^2 when both axes are
/// named (x, y or z): a Kronecker delta for equal axes and the pi/2 d-matrix
/// weight for orthogonal ones. nullopt for general axes.
std::optional<Rational> exact_named_transition(const Spin& spin, const Axis& from, int twice_m_from, const Axis& to,
                                               int twice_m_to);

}  // namespace spinparadox
