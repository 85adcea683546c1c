#include "spinparadox/measurement.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <fmt/format.h>

namespace spinparadox {

void SequenceStats::merge(const SequenceStats& other) {
  shots += other.shots;
  accepted += other.accepted;
  for (const auto& [chain, count] : other.counts) counts[chain] += count;
}

std::uint64_t SequenceStats::count_at(std::size_t step, int twice_m) const {
  std::uint64_t total = 0;
  for (const auto& [chain, count] : counts) {
    if (step < chain.size() && chain[step] == twice_m) total += count;
  }
  return total;
}

namespace {

void require_dim(const StateVector& state, const Spin& spin) {
  if (state.dim() != spin.dim()) {
    throw std::invalid_argument(
        fmt::format("state dimension {} does not match spin dimension {}", state.dim(), spin.dim()));
  }
}

std::vector<double> probabilities_from(const StateVector& state, const AxisBasis& basis) {
  std::vector<double> p;
  p.reserve(basis.states().size());
  for (const auto& eig : basis.states()) p.push_back(std::norm(inner_product(eig.amplitudes(), state.amplitudes())));
  return p;
}

}  // namespace

std::vector<Outcome> born_distribution(const StateVector& state, const AxisBasis& basis) {
  require_dim(state, basis.spin());
  const auto p = probabilities_from(state, basis);
  std::vector<Outcome> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back({basis.spin().twice_m_at(i), p[i]});
  return out;
}

std::vector<Outcome> born_distribution(const StateVector& state, const Spin& spin, const Axis& axis) {
  require_dim(state, spin);
  return born_distribution(state, AxisBasis(spin, axis));
}

Projection project(const StateVector& state, const Spin& spin, const Axis& axis, int twice_m) {
  require_dim(state, spin);
  StateVector eig = axis_eigenstate(spin, twice_m, axis);
  const double p = std::norm(inner_product(eig.amplitudes(), state.amplitudes()));
  if (p < kImpossibleProbability) {
    throw ImpossibleOutcome(fmt::format("outcome m = {} along {} has probability {:.3g}", format_half_integer(twice_m),
                                        axis.label(), p));
  }
  return {std::move(eig), p};
}

std::optional<int> predictable_with_certainty(const StateVector& state, const Spin& spin, const Axis& axis) {
  for (const auto& o : born_distribution(state, spin, axis)) {
    if (o.probability >= 1.0 - kCertaintyTolerance) return o.twice_m;
  }
  return std::nullopt;
}

std::size_t draw_index(std::span<const double> probabilities, double u) {
  double cumulative = 0.0;
  std::optional<std::size_t> last_possible;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] < kImpossibleProbability) continue;
    last_possible = i;
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  if (!last_possible) throw ImpossibleOutcome("distribution has no possible outcome");
  return *last_possible;
}

Sample sample_outcome(const StateVector& state, const Spin& spin, const Axis& axis, SeededGenerator& rng) {
  require_dim(state, spin);
  const AxisBasis basis(spin, axis);
  const auto p = probabilities_from(state, basis);
  const std::size_t idx = draw_index(p, rng.next_uniform());
  return {MeasurementRecord{axis, spin.twice_m_at(idx), p[idx]}, basis.states()[idx]};
}

namespace {

void validate_sequence(const Spin& spin, const StateVector& initial, const std::vector<Axis>& axes,
                       const std::optional<Condition>& condition) {
  require_dim(initial, spin);
  if (axes.empty()) throw std::invalid_argument("measurement sequence needs at least one axis");
  if (condition) {
    if (condition->step >= axes.size()) {
      throw std::out_of_range(fmt::format("condition step {} is outside a sequence of {} measurements", condition->step,
                                          axes.size()));
    }
    if (!spin.contains(condition->twice_m)) {
      throw std::out_of_range(fmt::format("condition outcome {} is not in the spectrum of spin {}",
                                          format_signed_half_integer(condition->twice_m),
                                          format_half_integer(spin.twice_s())));
    }
  }
}

// Because collapse lands on canonical eigenstates, a chain of measurements
// is a Markov chain: the first step samples from the initial Born
// distribution, each later step from a row of a fixed transition table.
struct ChainTables {
  std::vector<double> first;
  // transitions[i][from][to] for step i >= 1
  std::vector<std::vector<std::vector<double>>> transitions;
};

ChainTables build_tables(const Spin& spin, const StateVector& initial, const std::vector<Axis>& axes) {
  std::vector<AxisBasis> bases;
  bases.reserve(axes.size());
  for (const auto& a : axes) bases.emplace_back(spin, a);
  ChainTables t;
  t.first = probabilities_from(initial, bases[0]);
  t.transitions.resize(axes.size());
  for (std::size_t i = 1; i < axes.size(); ++i) {
    for (const auto& from : bases[i - 1].states()) t.transitions[i].push_back(probabilities_from(from, bases[i]));
  }
  return t;
}

SequenceStats run_batch(const Spin& spin, const ChainTables& tables, std::size_t steps, std::uint64_t shots,
                        std::uint64_t seed, const std::optional<Condition>& condition) {
  SequenceStats stats{spin, {}, shots, seed, condition, 0, {}};
  SeededGenerator rng(seed);
  std::vector<std::size_t> idx(steps);
  std::vector<int> chain(steps);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    idx[0] = draw_index(tables.first, rng.next_uniform());
    for (std::size_t i = 1; i < steps; ++i) idx[i] = draw_index(tables.transitions[i][idx[i - 1]], rng.next_uniform());
    for (std::size_t i = 0; i < steps; ++i) chain[i] = spin.twice_m_at(idx[i]);
    if (condition && chain[condition->step] != condition->twice_m) continue;
    ++stats.accepted;
    auto it = stats.counts.find(chain);
    if (it == stats.counts.end()) {
      stats.counts.emplace(chain, 1);
    } else {
      ++it->second;
    }
  }
  return stats;
}

}  // namespace

SequenceStats run_sequence(const Spin& spin, const StateVector& initial, const std::vector<Axis>& axes,
                           std::uint64_t shots, std::uint64_t seed, std::optional<Condition> condition,
                           unsigned threads) {
  if (shots == 0) throw std::invalid_argument("shots must be at least 1");
  validate_sequence(spin, initial, axes, condition);
  const ChainTables tables = build_tables(spin, initial, axes);

  const std::uint64_t batches = (shots + kShotsPerBatch - 1) / kShotsPerBatch;
  std::vector<SequenceStats> results(batches, SequenceStats{spin, {}, 0, 0, condition, 0, {}});
  auto work = [&](std::uint64_t b) {
    const std::uint64_t n = std::min(kShotsPerBatch, shots - b * kShotsPerBatch);
    results[b] = run_batch(spin, tables, axes.size(), n, derive_batch_seed(seed, b), condition);
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batches)));
  if (threads == 1) {
    for (std::uint64_t b = 0; b < batches; ++b) work(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::uint64_t b = next++; b < batches; b = next++) work(b);
      });
    }
  }

  SequenceStats total{spin, axes, 0, seed, condition, 0, {}};
  for (const auto& r : results) total.merge(r);
  return total;
}

namespace {

template <typename T, typename Transition>
std::vector<T> propagate(const Spin& spin, std::vector<T> dist, std::size_t steps, const std::optional<Condition>& condition,
                         Transition transition) {
  const std::size_t n = spin.dim();
  for (std::size_t i = 0; i < steps; ++i) {
    if (i > 0) {
      std::vector<T> next(n, T(0));
      for (std::size_t from = 0; from < n; ++from) {
        if (dist[from] == T(0)) continue;
        for (std::size_t to = 0; to < n; ++to) next[to] += dist[from] * transition(i, from, to);
      }
      dist = std::move(next);
    }
    if (condition && condition->step == i) {
      const std::size_t keep = spin.index_of(condition->twice_m);
      if (!(dist[keep] > T(0))) throw ImpossibleOutcome("conditioned outcome has zero probability");
      std::fill(dist.begin(), dist.end(), T(0));
      dist[keep] = T(1);
    }
  }
  return dist;
}

}  // namespace

std::vector<Outcome> final_step_distribution(const Spin& spin, const StateVector& initial, const std::vector<Axis>& axes,
                                             std::optional<Condition> condition) {
  validate_sequence(spin, initial, axes, condition);
  const ChainTables tables = build_tables(spin, initial, axes);
  auto dist = propagate<double>(spin, tables.first, axes.size(), condition,
                                [&](std::size_t i, std::size_t from, std::size_t to) { return tables.transitions[i][from][to]; });
  std::vector<Outcome> out;
  for (std::size_t i = 0; i < dist.size(); ++i) out.push_back({spin.twice_m_at(i), dist[i]});
  return out;
}

std::optional<std::vector<Rational>> exact_final_step_distribution(const Spin& spin, const Axis& initial_axis,
                                                                   int initial_twice_m, const std::vector<Axis>& axes,
                                                                   std::optional<Condition> condition) {
  validate_sequence(spin, StateVector::basis_state(spin, spin.twice_s()), axes, condition);
  if (!initial_axis.name() || std::any_of(axes.begin(), axes.end(), [](const Axis& a) { return !a.name(); })) {
    return std::nullopt;
  }
  try {
    std::vector<Rational> first;
    for (int tm : spin.spectrum()) first.push_back(*exact_named_transition(spin, initial_axis, initial_twice_m, axes[0], tm));
    return propagate<Rational>(spin, std::move(first), axes.size(), condition,
                               [&](std::size_t i, std::size_t from, std::size_t to) {
                                 return *exact_named_transition(spin, axes[i - 1], spin.twice_m_at(from), axes[i],
                                                                spin.twice_m_at(to));
                               });
  } catch (const std::overflow_error&) {
    return std::nullopt;
  } catch (const std::out_of_range&) {
    // beyond the exact d-matrix range
    return std::nullopt;
  }
}

}  // namespace spinparadox
