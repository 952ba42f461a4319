/***************************************************************
 *  tables.hpp
 *
 *  Labeled probability tables for discrete network analysis:
 *  distributions over named categories, two-dimensional joint
 *  tables (rows = structure/cited, columns = action/citing),
 *  conditional tables and label partitions.
 *
 *  All values are immutable after construction; every operation
 *  is a pure function returning a new value.
 ***************************************************************/

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace infodyn {

/// Error type for every contract violation in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axis { Row, Col };

/// Probability mass must balance to 1 within this tolerance.
inline constexpr double kProbTolerance = 1e-12;

namespace detail {

inline void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  seen.reserve(labels.size());
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(std::string("duplicate ") + what + " label: " + label);
    }
  }
}

inline double sum(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

}  // namespace detail

/// A normalized probability vector over named categories.
struct LabeledDistribution {
  std::vector<std::string> labels;
  std::vector<double> probs;

  LabeledDistribution(std::vector<std::string> labels_in, std::vector<double> probs_in)
      : labels(std::move(labels_in)), probs(std::move(probs_in)) {
    if (labels.size() != probs.size()) throw Error("labels and probabilities differ in length");
    if (labels.empty()) throw Error("empty distribution");
    detail::require_unique(labels, "category");
    for (double p : probs) {
      if (!(p >= 0.0)) throw Error("negative probability");
    }
    if (std::abs(detail::sum(probs) - 1.0) > kProbTolerance) {
      throw Error("probabilities do not sum to 1");
    }
  }

  std::size_t size() const { return probs.size(); }
};

/// A labeled nonnegative table normalized to total mass 1.
/// Rows carry the structure ("cited") axis, columns the action
/// ("citing") axis. Cells are stored row-major.
struct JointTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> cells;

  JointTable(std::vector<std::string> rows, std::vector<std::string> cols,
             std::vector<double> cells_in)
      : row_labels(std::move(rows)), col_labels(std::move(cols)), cells(std::move(cells_in)) {
    if (row_labels.empty() || col_labels.empty()) throw Error("empty table axis");
    if (cells.size() != row_labels.size() * col_labels.size()) {
      throw Error("cell count does not match axis sizes");
    }
    detail::require_unique(row_labels, "row");
    detail::require_unique(col_labels, "column");
    for (double c : cells) {
      if (!(c >= 0.0)) throw Error("negative probability");
    }
    if (std::abs(detail::sum(cells) - 1.0) > kProbTolerance) {
      throw Error("probabilities do not sum to 1");
    }
  }

  /// Builds a table from nested row vectors.
  static JointTable from_rows(std::vector<std::string> rows, std::vector<std::string> cols,
                              const std::vector<std::vector<double>>& data) {
    std::vector<double> flat;
    flat.reserve(rows.size() * cols.size());
    for (const auto& row : data) {
      if (row.size() != cols.size()) throw Error("ragged row data");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return JointTable(std::move(rows), std::move(cols), std::move(flat));
  }

  std::size_t n_rows() const { return row_labels.size(); }
  std::size_t n_cols() const { return col_labels.size(); }
  double at(std::size_t i, std::size_t j) const { return cells[i * n_cols() + j]; }
};

/// Conditional probabilities sharing a JointTable's axes. `given`
/// names the conditioning axis: given == Col means cells hold
/// p(row | col) and each column with nonzero marginal sums to 1.
/// Slices whose conditioning marginal is zero are flagged empty
/// and hold zero cells.
struct ConditionalTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> cells;
  Axis given;
  std::vector<char> empty_slices;  // one flag per conditioning-axis index

  ConditionalTable(std::vector<std::string> rows, std::vector<std::string> cols,
                   std::vector<double> cells_in, Axis given_in, std::vector<char> empty)
      : row_labels(std::move(rows)),
        col_labels(std::move(cols)),
        cells(std::move(cells_in)),
        given(given_in),
        empty_slices(std::move(empty)) {
    if (row_labels.empty() || col_labels.empty()) throw Error("empty table axis");
    if (cells.size() != row_labels.size() * col_labels.size()) {
      throw Error("cell count does not match axis sizes");
    }
    detail::require_unique(row_labels, "row");
    detail::require_unique(col_labels, "column");
    const std::size_t n_slices = given == Axis::Col ? col_labels.size() : row_labels.size();
    const std::size_t slice_len = given == Axis::Col ? row_labels.size() : col_labels.size();
    if (empty_slices.size() != n_slices) throw Error("slice flag count does not match axis size");
    for (std::size_t s = 0; s < n_slices; ++s) {
      double total = 0.0;
      for (std::size_t k = 0; k < slice_len; ++k) {
        const double v = given == Axis::Col ? cells[k * col_labels.size() + s]
                                            : cells[s * col_labels.size() + k];
        if (!(v >= 0.0)) throw Error("negative probability");
        total += v;
      }
      if (empty_slices[s]) {
        if (total != 0.0) throw Error("empty slice holds probability mass");
      } else if (std::abs(total - 1.0) > kProbTolerance) {
        throw Error("conditional slice does not sum to 1");
      }
    }
  }

  std::size_t n_rows() const { return row_labels.size(); }
  std::size_t n_cols() const { return col_labels.size(); }
  double at(std::size_t i, std::size_t j) const { return cells[i * n_cols() + j]; }
  bool slice_empty(std::size_t s) const { return empty_slices[s] != 0; }
};

/// Surjective map from category labels to group names, kept in
/// insertion order.
struct Partition {
  std::vector<std::pair<std::string, std::string>> assignments;

  explicit Partition(std::vector<std::pair<std::string, std::string>> assignments_in)
      : assignments(std::move(assignments_in)) {
    if (assignments.empty()) throw Error("empty partition");
    std::unordered_set<std::string> seen;
    seen.reserve(assignments.size());
    for (const auto& [label, group] : assignments) {
      if (!seen.insert(label).second) throw Error("duplicate partition label: " + label);
    }
  }

  /// Group of `label`, or nullptr when the label is unassigned.
  const std::string* find(const std::string& label) const {
    for (const auto& [l, g] : assignments) {
      if (l == label) return &g;
    }
    return nullptr;
  }

  std::size_t size() const { return assignments.size(); }
};

/// A raw nonnegative labeled table, the ingestion-side shape of a
/// contingency matrix before normalization. Carries counts (or
/// pre-normalized weights); no mass invariant is imposed.
struct CountTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> cells;  // row-major

  std::size_t n_rows() const { return row_labels.size(); }
  std::size_t n_cols() const { return col_labels.size(); }
  double at(std::size_t i, std::size_t j) const { return cells[i * n_cols() + j]; }
};

/// Turns raw counts into the joint probability table all measures
/// operate on: each cell is divided by the grand total.
inline JointTable normalize(const CountTable& counts) {
  double total = 0.0;
  for (double c : counts.cells) {
    if (!(c >= 0.0)) throw Error("negative count");
    total += c;
  }
  if (total <= 0.0) throw Error("degenerate table");
  std::vector<double> cells(counts.cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = counts.cells[i] / total;
  return JointTable(counts.row_labels, counts.col_labels, std::move(cells));
}

/// Marginal distribution along `axis` (sums over the other axis).
inline LabeledDistribution marginal(const JointTable& t, Axis axis) {
  const std::size_t n = axis == Axis::Row ? t.n_rows() : t.n_cols();
  std::vector<double> sums(n, 0.0);
  for (std::size_t i = 0; i < t.n_rows(); ++i) {
    for (std::size_t j = 0; j < t.n_cols(); ++j) {
      sums[axis == Axis::Row ? i : j] += t.at(i, j);
    }
  }
  return LabeledDistribution(axis == Axis::Row ? t.row_labels : t.col_labels, std::move(sums));
}

/// Conditional probabilities given `given`: each cell divided by
/// the marginal of its slice. Zero-marginal slices come back
/// flagged empty rather than failing, so downstream 0·log 0 terms
/// can skip them.
inline ConditionalTable conditional(const JointTable& t, Axis given) {
  const std::size_t n_slices = given == Axis::Col ? t.n_cols() : t.n_rows();
  const LabeledDistribution m = marginal(t, given);
  std::vector<double> cells(t.cells.size(), 0.0);
  std::vector<char> empty(n_slices, 0);
  for (std::size_t s = 0; s < n_slices; ++s) {
    if (m.probs[s] == 0.0) {
      empty[s] = 1;
      continue;
    }
    if (given == Axis::Col) {
      for (std::size_t i = 0; i < t.n_rows(); ++i) {
        cells[i * t.n_cols() + s] = t.at(i, s) / m.probs[s];
      }
    } else {
      for (std::size_t j = 0; j < t.n_cols(); ++j) {
        cells[s * t.n_cols() + j] = t.at(s, j) / m.probs[s];
      }
    }
  }
  return ConditionalTable(t.row_labels, t.col_labels, std::move(cells), given, std::move(empty));
}

namespace detail {

/// Maps each label of `labels` to its group index; group names are
/// ordered by first appearance along the table axis. Coverage must
/// be exact in both directions.
inline std::pair<std::vector<std::size_t>, std::vector<std::string>> group_indices(
    const std::vector<std::string>& labels, const Partition& part) {
  std::unordered_set<std::string> present(labels.begin(), labels.end());
  for (const auto& [label, group] : part.assignments) {
    if (!present.count(label)) throw Error("unknown label: " + label);
  }
  std::vector<std::string> groups;
  std::unordered_map<std::string, std::size_t> group_index;
  std::vector<std::size_t> assignment(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string* group = part.find(labels[i]);
    if (group == nullptr) throw Error("uncovered label: " + labels[i]);
    auto [it, inserted] = group_index.try_emplace(*group, groups.size());
    if (inserted) groups.push_back(*group);
    assignment[i] = it->second;
  }
  return {std::move(assignment), std::move(groups)};
}

}  // namespace detail

/// Sums same-group rows (or columns); group names become the new
/// labels, ordered by first appearance along the aggregated axis.
inline JointTable aggregate(const JointTable& t, const Partition& part, Axis axis) {
  const auto& labels = axis == Axis::Row ? t.row_labels : t.col_labels;
  auto [assignment, groups] = detail::group_indices(labels, part);
  const std::size_t out_rows = axis == Axis::Row ? groups.size() : t.n_rows();
  const std::size_t out_cols = axis == Axis::Col ? groups.size() : t.n_cols();
  std::vector<double> cells(out_rows * out_cols, 0.0);
  for (std::size_t i = 0; i < t.n_rows(); ++i) {
    for (std::size_t j = 0; j < t.n_cols(); ++j) {
      const std::size_t oi = axis == Axis::Row ? assignment[i] : i;
      const std::size_t oj = axis == Axis::Col ? assignment[j] : j;
      cells[oi * out_cols + oj] += t.at(i, j);
    }
  }
  return JointTable(axis == Axis::Row ? groups : t.row_labels,
                    axis == Axis::Col ? groups : t.col_labels, std::move(cells));
}

/// Swaps the two axes.
inline JointTable transpose(const JointTable& t) {
  std::vector<double> cells(t.cells.size());
  for (std::size_t i = 0; i < t.n_rows(); ++i) {
    for (std::size_t j = 0; j < t.n_cols(); ++j) {
      cells[j * t.n_rows() + i] = t.at(i, j);
    }
  }
  return JointTable(t.col_labels, t.row_labels, std::move(cells));
}

}  // namespace infodyn
