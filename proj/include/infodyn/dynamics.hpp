/***************************************************************
 *  dynamics.hpp
 *
 *  Iterated structure/action update simulator. Each cycle the
 *  structure conditions a batch of action draws; the realized
 *  contingency of those draws, blended with one expected draw of
 *  the prior conditional per structure state, becomes the next
 *  state. Iterating produces probabilistic entropy: the structure
 *  distribution drifts toward uniformity over its support while
 *  staying bounded by log2(n) bits.
 ***************************************************************/

#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "infodyn/contingency.hpp"
#include "infodyn/measures.hpp"
#include "infodyn/tables.hpp"

namespace infodyn {

/// Pseudo-draws of the prior conditional mixed into each step's
/// realized counts, per structure state with positive prior mass.
/// Keeps the joint support exactly invariant: sampling alone is a
/// martingale that fixates on a single cell, while the blend turns
/// the row marginals into a drift toward uniformity over the
/// supported states.
inline constexpr double kPriorBlendWeight = 1.0;

struct SimulationConfig {
  std::size_t n_structure = 2;   // structure states (rows)
  std::size_t n_action = 2;      // action categories per actor (columns)
  std::size_t n_actors = 1;      // coupled action systems pooled per step
  std::size_t steps = 0;
  std::size_t sample_size = 1;   // action draws per actor per step
  std::uint64_t seed = 0;
  std::optional<JointTable> initial;  // absent = uniform joint
};

inline void validate(const SimulationConfig& config) {
  if (config.n_structure < 1 || config.n_action < 1 || config.n_actors < 1 ||
      config.sample_size < 1) {
    throw Error("counts must be at least 1");
  }
  if (config.initial && (config.initial->n_rows() != config.n_structure ||
                         config.initial->n_cols() != config.n_action)) {
    throw Error("initial joint does not match configured sizes");
  }
}

/// Deterministic stream of unit doubles and categorical draws.
/// Draw order is part of the reproducibility contract: one unit
/// double per draw, taken from the top 53 bits of an mt19937_64
/// output; a step consumes, per actor and then per sample, one
/// structure draw followed by one action draw.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Inverse-CDF draw over `weights` (nonnegative, summing to ~1).
  /// Zero-weight categories are never selected.
  std::size_t pick(const std::vector<double>& weights) {
    const double u = next_unit();
    double acc = 0.0;
    std::size_t last_positive = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      last_positive = i;
      acc += weights[i];
      if (u < acc) return i;
    }
    if (last_positive == weights.size()) throw Error("cannot draw from zero-mass weights");
    return last_positive;  // rounding shortfall at the top of the CDF
  }

 private:
  std::mt19937_64 engine_;
};

/// One row of a trajectory: measures of the state at a step, plus
/// the update information of the transition that produced it
/// (zero at step 0).
struct StepRecord {
  double h_structure;        // H(A), bits
  double h_structure_given_action;  // H(A|B), bits
  double transmission;       // T(A,B), bits
  double update_info;        // Eq.-(9)-style message content, bits
  double redundancy;         // 1 - H(A)/log2 n_A
};

struct Trajectory {
  std::vector<StepRecord> records;  // length steps + 1, index 0 = initial state

  std::size_t size() const { return records.size(); }
};

namespace detail {

inline StepRecord measure_state(const JointTable& state, double update_info) {
  const LabeledDistribution structure = marginal(state, Axis::Row);
  return StepRecord{entropy(structure), conditional_entropy(state, Axis::Col),
                    transmission(state), update_info, redundancy(structure)};
}

}  // namespace detail

/// Uniform joint over n_structure x n_action cells with generated
/// labels A1..An / B1..Bm.
inline JointTable uniform_joint(std::size_t n_structure, std::size_t n_action) {
  std::vector<std::string> rows, cols;
  rows.reserve(n_structure);
  cols.reserve(n_action);
  for (std::size_t i = 0; i < n_structure; ++i) rows.push_back("A" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n_action; ++j) cols.push_back("B" + std::to_string(j + 1));
  std::vector<double> cells(n_structure * n_action,
                            1.0 / static_cast<double>(n_structure * n_action));
  return JointTable(std::move(rows), std::move(cols), std::move(cells));
}

/// One update cycle. Draws sample_size action events per actor from
/// the current conditional p(B|A) mixed over p(A), pools the counts,
/// blends in kPriorBlendWeight expected draws of the prior
/// conditional per supported structure state, and normalizes the
/// result into the next joint. Returns the new state and its record.
inline std::pair<JointTable, StepRecord> step(const JointTable& state,
                                              const SimulationConfig& config,
                                              SampleStream& stream) {
  validate(config);
  const std::size_t n_rows = state.n_rows();
  const std::size_t n_cols = state.n_cols();
  const LabeledDistribution structure = marginal(state, Axis::Row);
  const ConditionalTable actions = conditional(state, Axis::Row);

  std::vector<double> counts(n_rows * n_cols, 0.0);
  std::vector<std::vector<double>> action_rows(n_rows);
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (structure.probs[i] <= 0.0) continue;
    action_rows[i].assign(actions.cells.begin() + i * n_cols,
                          actions.cells.begin() + (i + 1) * n_cols);
  }
  for (std::size_t actor = 0; actor < config.n_actors; ++actor) {
    for (std::size_t k = 0; k < config.sample_size; ++k) {
      const std::size_t a = stream.pick(structure.probs);
      const std::size_t b = stream.pick(action_rows[a]);
      counts[a * n_cols + b] += 1.0;
    }
  }

  double total = static_cast<double>(config.n_actors * config.sample_size);
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (structure.probs[i] <= 0.0) continue;
    for (std::size_t j = 0; j < n_cols; ++j) {
      counts[i * n_cols + j] += kPriorBlendWeight * actions.at(i, j);
    }
    total += kPriorBlendWeight;
  }
  for (double& c : counts) c /= total;

  JointTable next(state.row_labels, state.col_labels, std::move(counts));
  StepRecord record = detail::measure_state(next, update_information(state, next));
  return {std::move(next), record};
}

/// Runs the configured number of cycles from the initial state and
/// records every step, the initial state included.
inline Trajectory simulate(const SimulationConfig& config) {
  validate(config);
  JointTable state =
      config.initial ? *config.initial : uniform_joint(config.n_structure, config.n_action);
  Trajectory trajectory;
  trajectory.records.reserve(config.steps + 1);
  trajectory.records.push_back(detail::measure_state(state, 0.0));
  SampleStream stream(config.seed);
  for (std::size_t s = 0; s < config.steps; ++s) {
    auto [next, record] = step(state, config, stream);
    state = std::move(next);
    trajectory.records.push_back(record);
  }
  return trajectory;
}

namespace detail {

inline void append_shortest(std::string& line, double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  line.append(buf, end);
}

}  // namespace detail

/// Flat plot-ready table, one row per step, values in bits.
inline void write_trajectory(std::ostream& out, const Trajectory& trajectory) {
  out << "step,h_a,h_a_given_b,transmission,update_info,redundancy\n";
  for (std::size_t s = 0; s < trajectory.records.size(); ++s) {
    const StepRecord& r = trajectory.records[s];
    std::string line = std::to_string(s);
    for (double v : {r.h_structure, r.h_structure_given_action, r.transmission, r.update_info,
                     r.redundancy}) {
      line.push_back(',');
      detail::append_shortest(line, v);
    }
    line.push_back('\n');
    out << line;
  }
}

}  // namespace infodyn
