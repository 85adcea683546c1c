#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "spinparadox/rng.hpp"
#include "spinparadox/rotation.hpp"
#include "spinparadox/spin.hpp"

namespace spinparadox {

/// Born probabilities below this are treated as impossible outcomes.
inline constexpr double kImpossibleProbability = 1e-15;
/// An outcome this close to 1 counts as predictable with certainty.
inline constexpr double kCertaintyTolerance = 1e-10;

/// Raised when a projection onto a zero-probability outcome is requested.
class ImpossibleOutcome : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int twice_m;
  double probability;
};

struct MeasurementRecord {
  Axis axis;
  int twice_m;
  double probability;
};

/// Post-selection on the outcome of one step of a sequence.
struct Condition {
  std::size_t step;
  int twice_m;

  friend bool operator==(const Condition&, const Condition&) = default;
};

struct SequenceStats {
  Spin spin;
  std::vector<Axis> axes;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::optional<Condition> condition;
  /// Shots that passed the condition; equals shots when there is none.
  std::uint64_t accepted = 0;
  /// Full outcome chains (twice_m per step) of the accepted shots.
  std::map<std::vector<int>, std::uint64_t> counts;

  /// Adds another run's shots and counts. Associative and commutative.
  void merge(const SequenceStats& other);
  /// Number of accepted shots whose outcome at `step` equals twice_m.
  std::uint64_t count_at(std::size_t step, int twice_m) const;
};

/// p_m = |<m|_axis state|^2 in descending-m order.
std::vector<Outcome> born_distribution(const StateVector& state, const Spin& spin, const Axis& axis);
std::vector<Outcome> born_distribution(const StateVector& state, const AxisBasis& basis);

struct Projection {
  StateVector state;
  double probability;
};

/// Collapse onto |m>_axis. The returned state is the canonical axis
/// eigenstate. Throws ImpossibleOutcome when p < kImpossibleProbability.
Projection project(const StateVector& state, const Spin& spin, const Axis& axis, int twice_m);

/// The outcome whose probability is at least 1 - kCertaintyTolerance, if any.
std::optional<int> predictable_with_certainty(const StateVector& state, const Spin& spin, const Axis& axis);

/// Inverse-CDF pick over `probabilities` in the given order. Entries below
/// kImpossibleProbability are never selected; if rounding leaves u above the
/// final cumulative sum the last possible entry is returned.
std::size_t draw_index(std::span<const double> probabilities, double u);

struct Sample {
  MeasurementRecord record;
  StateVector state;
};

/// One Born-rule draw (one uniform consumed) followed by collapse.
Sample sample_outcome(const StateVector& state, const Spin& spin, const Axis& axis, SeededGenerator& rng);

/// Shots per independently seeded batch in run_sequence.
inline constexpr std::uint64_t kShotsPerBatch = 1u << 16;

/// Repeats the measurement chain `axes` on `initial` for `shots` shots.
///
/// Shots are split into batches of kShotsPerBatch; batch b draws from a
/// SeededGenerator seeded with derive_batch_seed(seed, b), consuming one
/// uniform per step. Every shot runs the whole chain, and shots failing the
/// condition are then discarded. The result depends only on the inputs, not
/// on `threads`.
SequenceStats run_sequence(const Spin& spin, const StateVector& initial, const std::vector<Axis>& axes,
                           std::uint64_t shots, std::uint64_t seed, std::optional<Condition> condition = std::nullopt,
                           unsigned threads = 1);

/// Exact-in-floating-point distribution of the last step's outcome, given
/// the condition (if any). Throws ImpossibleOutcome if the condition has
/// zero probability.
std::vector<Outcome> final_step_distribution(const Spin& spin, const StateVector& initial,
                                             const std::vector<Axis>& axes,
                                             std::optional<Condition> condition = std::nullopt);

/// Rational version of final_step_distribution for an initial eigenstate of
/// a named axis and named measurement axes. nullopt if any axis is general
/// or the rationals overflow.
std::optional<std::vector<Rational>> exact_final_step_distribution(const Spin& spin, const Axis& initial_axis,
                                                                   int initial_twice_m, const std::vector<Axis>& axes,
                                                                   std::optional<Condition> condition = std::nullopt);

}  // namespace spinparadox
