#include "spinparadox/paradox.hpp"

#include <cstdlib>
#include <stdexcept>

#include <fmt/format.h>

#include "spinparadox/rotation.hpp"

namespace spinparadox {

ParadoxReport paradox_condition(const Spin& spin) {
  const int t = spin.twice_s();
  // quarter units: 2 s^2 = 2 t^2 / 4, s(s+1) = t (t + 2) / 4
  const int lhs_q = 2 * t * t;
  const int rhs_q = spin.casimir_quarters();
  const bool by_quarters = lhs_q > rhs_q;
  const bool by_threshold = t > 2;
  const double lhs = 2.0 * spin.s() * spin.s();
  const double rhs = spin.s() * (spin.s() + 1.0);
  if (by_quarters != by_threshold || by_quarters != (lhs > rhs)) {
    throw std::logic_error(fmt::format("paradox characterizations disagree at 2s = {}", t));
  }
  return ParadoxReport{
      .spin = spin,
      .lhs = lhs,
      .rhs = rhs,
      .violated = by_quarters,
      .min_sy_squared_needed = rhs - lhs,
      .joint_probability = exact_pi_half_probabilities(spin, t, t),
  };
}

std::vector<Assignment> enumerate_assignments(const Spin& spin, AssignmentMode mode) {
  if (spin.twice_s() > kMaxEnumerationTwiceS) {
    throw std::out_of_range(fmt::format("assignment enumeration supports s <= {}, got s = {}",
                                        format_half_integer(kMaxEnumerationTwiceS), format_half_integer(spin.twice_s())));
  }
  const int target = spin.casimir_quarters();
  const auto values = spin.spectrum();
  std::vector<Assignment> out;
  for (int vx : values)
    for (int vy : values)
      for (int vz : values) {
        const Assignment a{vx, vy, vz};
        const bool keep = mode == AssignmentMode::exact_sum_rule ? a.sum_of_squares_quarters() == target
                                                                 : vx * vx + vz * vz <= target;
        if (keep) out.push_back(a);
      }
  return out;
}

std::optional<Assignment> max_max_witness(const Spin& spin) {
  const int t = spin.twice_s();
  for (const auto& a : enumerate_assignments(spin, AssignmentMode::exact_sum_rule)) {
    if (std::abs(a.twice_vx) == t && std::abs(a.twice_vz) == t) return a;
  }
  return std::nullopt;
}

bool max_max_assignment_feasible(const Spin& spin) {
  const bool feasible = max_max_witness(spin).has_value();
  if (feasible == paradox_condition(spin).violated) {
    throw std::logic_error(fmt::format("feasibility and paradox condition disagree at 2s = {}", spin.twice_s()));
  }
  return feasible;
}

VonNeumannWitness von_neumann_witness(const Spin& spin) {
  const auto ops = spin_operators(spin);
  const double max_abs = commutator(ops.x * ops.x, ops.z * ops.z).max_abs();
  return {max_abs, max_abs > 1e-10};
}

std::vector<ParadoxReport> paradox_scan(int twice_s_max) {
  if (twice_s_max < 1) throw std::invalid_argument("paradox scan needs 2s_max >= 1");
  std::vector<ParadoxReport> out;
  out.reserve(static_cast<std::size_t>(twice_s_max));
  for (int t = 1; t <= twice_s_max; ++t) out.push_back(paradox_condition(Spin(t)));
  return out;
}

FalsifyReport falsify(const Spin& spin, int twice_vx, int twice_vz) {
  if (!spin.contains(twice_vx) || !spin.contains(twice_vz)) {
    throw std::out_of_range(fmt::format("values v_x = {}, v_z = {} must lie in the spectrum of spin {}",
                                        format_half_integer(twice_vx), format_half_integer(twice_vz),
                                        format_half_integer(spin.twice_s())));
  }
  const int required_q = spin.casimir_quarters() - twice_vx * twice_vx - twice_vz * twice_vz;
  FalsifyReport report{
      .spin = spin,
      .twice_vx = twice_vx,
      .twice_vz = twice_vz,
      .required_vy_squared = Rational(required_q, 4),
      .max_vy_squared = Rational(spin.twice_s() * spin.twice_s(), 4),
      .feasible = false,
      .witnesses = {},
  };
  for (const auto& a : enumerate_assignments(spin, AssignmentMode::exact_sum_rule)) {
    if (a.twice_vx == twice_vx && a.twice_vz == twice_vz) report.witnesses.push_back(a);
  }
  report.feasible = !report.witnesses.empty();
  return report;
}

}  // namespace spinparadox
