#pragma once

// Value-assignment analysis for sequential maximal spin measurements.
//
// If S_x and S_z both had pre-existing values of modulus s between two
// measurements, the three squared components would have to sum to at least
// 2 s^2, while every state of a spin-s particle has S^2 = s(s+1). Everything
// here works in exact integer arithmetic on twice-values (quarter units for
// squares) so no floating-point equality is ever tested.

#include <optional>
#include <vector>

#include "spinparadox/rational.hpp"
#include "spinparadox/spin.hpp"

namespace spinparadox {

/// Hypothetical pre-existing values (v_x, v_y, v_z), each stored as 2v.
struct Assignment {
  int twice_vx;
  int twice_vy;
  int twice_vz;

  /// v_x^2 + v_y^2 + v_z^2 in quarter units.
  int sum_of_squares_quarters() const {
    return twice_vx * twice_vx + twice_vy * twice_vy + twice_vz * twice_vz;
  }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

enum class AssignmentMode {
  /// v_x^2 + v_y^2 + v_z^2 = s(s+1) with every value in the spectrum.
  exact_sum_rule,
  /// v_x^2 + v_z^2 <= s(s+1), i.e. only v_y^2 >= 0 is demanded.
  positivity_bound,
};

struct ParadoxReport {
  Spin spin;
  double lhs;                    // 2 s^2, hbar^2
  double rhs;                    // s(s+1), hbar^2
  bool violated;                 // lhs > rhs
  double min_sy_squared_needed;  // s(s+1) - 2 s^2, may be negative
  Rational joint_probability;    // P(S_z = +s | S_x = +s)
};

/// Largest spin accepted by the cube enumeration (s = 10).
inline constexpr int kMaxEnumerationTwiceS = 20;

ParadoxReport paradox_condition(const Spin& spin);

/// Every assignment satisfying the mode's constraint, ordered by descending
/// (v_x, v_y, v_z). Throws std::out_of_range above kMaxEnumerationTwiceS.
std::vector<Assignment> enumerate_assignments(const Spin& spin, AssignmentMode mode);

/// An exact-sum-rule assignment with |v_x| = |v_z| = s, if one exists.
std::optional<Assignment> max_max_witness(const Spin& spin);
bool max_max_assignment_feasible(const Spin& spin);

struct VonNeumannWitness {
  double commutator_max_abs;  // hbar^4
  bool nonzero;
};

/// Largest entry of [S_x^2, S_z^2]; nonzero when above 1e-10.
VonNeumannWitness von_neumann_witness(const Spin& spin);

/// Reports for 2s = 1, 2, ..., twice_s_max, in that order.
std::vector<ParadoxReport> paradox_scan(int twice_s_max);

/// Whether fixed values of v_x and v_z can be completed to an exact-sum-rule
/// assignment.
struct FalsifyReport {
  Spin spin;
  int twice_vx;
  int twice_vz;
  Rational required_vy_squared;  // s(s+1) - v_x^2 - v_z^2
  Rational max_vy_squared;       // s^2
  bool feasible;
  /// Matching assignments (v_y = +/- sqrt of the requirement); empty when
  /// infeasible.
  std::vector<Assignment> witnesses;
};

/// Throws std::out_of_range when v_x or v_z is outside the spectrum.
FalsifyReport falsify(const Spin& spin, int twice_vx, int twice_vz);

}  // namespace spinparadox
