/***************************************************************
 *  measures.hpp
 *
 *  Static information-theoretic measures over labeled tables:
 *  entropy, conditional entropy, transmission (mutual
 *  information), expected information of a prior-to-posterior
 *  message, per-cell terms, grouping decomposition, redundancy.
 *
 *  Everything is measured in bits (base-2 logarithms); the
 *  convention 0 * log 0 = 0 applies throughout.
 ***************************************************************/

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "infodyn/tables.hpp"

namespace infodyn {

namespace detail {

/// p * log2(p) with the 0 * log 0 = 0 convention.
inline double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

/// Entropy of a raw probability vector, clamped against the tiny
/// negative zero a degenerate sum can produce.
inline double entropy_of(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) h -= plog2p(p);
  return h < 0.0 ? 0.0 : h;
}

inline void require_same_labels(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  if (a != b) throw Error("label mismatch");
}

/// Core of Eq.-(7)-style sums: sum q log2(q/p). Zero-posterior
/// cells contribute nothing; a positive posterior over a zero
/// prior has no finite information content.
inline double information_cells(const std::vector<double>& q, const std::vector<double>& p) {
  double total = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) throw Error("infinite surprise");
    total += q[i] * std::log2(q[i] / p[i]);
  }
  return total;
}

inline std::vector<double> information_terms(const std::vector<double>& q,
                                             const std::vector<double>& p) {
  std::vector<double> terms(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) throw Error("infinite surprise");
    terms[i] = q[i] * std::log2(q[i] / p[i]);
  }
  return terms;
}

}  // namespace detail

/// Expected information content H = -sum_i p_i log2 p_i, in bits.
inline double entropy(const LabeledDistribution& d) { return detail::entropy_of(d.probs); }

/// Joint entropy over all cells of a two-dimensional table.
inline double joint_entropy(const JointTable& t) { return detail::entropy_of(t.cells); }

/// Remaining uncertainty given the `given` axis, via
/// H(x|y) = H(x,y) - H(y). Never negative.
inline double conditional_entropy(const JointTable& t, Axis given) {
  const double h = joint_entropy(t) - entropy(marginal(t, given));
  return h < 0.0 ? 0.0 : h;
}

/// Mutual information between the two axes,
/// T = H(row) + H(col) - H(joint). Never negative.
inline double transmission(const JointTable& t) {
  const double value =
      entropy(marginal(t, Axis::Row)) + entropy(marginal(t, Axis::Col)) - joint_entropy(t);
  return value < 0.0 ? 0.0 : value;
}

/// Expected information of the message transforming prior `p` into
/// posterior `q`: I = sum q log2(q/p) >= 0. A cell with q > 0 over
/// p = 0 throws "infinite surprise"; the ingestion missing-value
/// policy is the supported way to avoid empty priors.
inline double expected_information(const LabeledDistribution& q, const LabeledDistribution& p) {
  detail::require_same_labels(q.labels, p.labels);
  return detail::information_cells(q.probs, p.probs);
}

inline double expected_information(const JointTable& q, const JointTable& p) {
  detail::require_same_labels(q.row_labels, p.row_labels);
  detail::require_same_labels(q.col_labels, p.col_labels);
  return detail::information_cells(q.cells, p.cells);
}

/// Per-cell contributions to an aggregate information value,
/// aligned with the source index set (row-major for tables).
/// Individual terms may be negative where q < p; the total never is.
struct CellTerms {
  std::vector<double> terms;
  double total;
};

inline CellTerms cell_terms(const LabeledDistribution& q, const LabeledDistribution& p) {
  detail::require_same_labels(q.labels, p.labels);
  std::vector<double> terms = detail::information_terms(q.probs, p.probs);
  double total = 0.0;
  for (double t : terms) total += t;
  return {std::move(terms), total};
}

inline CellTerms cell_terms(const JointTable& q, const JointTable& p) {
  detail::require_same_labels(q.row_labels, p.row_labels);
  detail::require_same_labels(q.col_labels, p.col_labels);
  std::vector<double> terms = detail::information_terms(q.cells, p.cells);
  double total = 0.0;
  for (double t : terms) total += t;
  return {std::move(terms), total};
}

/// Split of a distribution's entropy into between-group entropy
/// plus probability-weighted within-group entropies:
/// H = between + sum_g weight_g * within_g.
struct GroupDecomposition {
  struct Group {
    std::string name;
    double weight;  // total probability of the group's members
    double within;  // entropy of the renormalized within-group distribution, bits
  };

  double between = 0.0;  // entropy over the group weights, bits
  std::vector<Group> groups;

  double total() const {
    double t = between;
    for (const auto& g : groups) t += g.weight * g.within;
    return t;
  }
};

inline GroupDecomposition group_decomposition(const LabeledDistribution& d,
                                              const Partition& part) {
  auto [assignment, names] = detail::group_indices(d.labels, part);
  std::vector<double> weights(names.size(), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) weights[assignment[i]] += d.probs[i];

  GroupDecomposition out;
  out.between = detail::entropy_of(weights);
  out.groups.reserve(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    double within = 0.0;
    if (weights[k] > 0.0) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (assignment[i] == k) within -= detail::plog2p(d.probs[i] / weights[k]);
      }
      if (within < 0.0) within = 0.0;
    }
    out.groups.push_back({names[k], weights[k], within});
  }
  return out;
}

/// Maximal uncertainty of a system with n elements: log2 n bits.
inline double max_entropy(std::size_t n) {
  if (n < 1) throw Error("empty system has no entropy bound");
  return std::log2(static_cast<double>(n));
}

/// Unused fraction of the maximal uncertainty, R = 1 - H / log2 n.
/// A one-element system is fully determined (R = 1).
inline double redundancy(const LabeledDistribution& d) {
  if (d.size() == 1) return 1.0;
  return 1.0 - entropy(d) / max_entropy(d.size());
}

}  // namespace infodyn
