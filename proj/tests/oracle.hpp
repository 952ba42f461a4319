// Test-only brute-force oracle: every measure evaluated as a direct
// cell-loop over its defining sum, with marginals recomputed locally.
// Intentionally independent of the library's computation paths (the
// library derives conditional entropy and transmission from entropy
// differences; the oracle never does).

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "infodyn/tables.hpp"

namespace oracle {

using infodyn::JointTable;

inline std::vector<double> row_sums(const JointTable& t) {
  std::vector<double> sums(t.n_rows(), 0.0);
  for (std::size_t i = 0; i < t.n_rows(); ++i)
    for (std::size_t j = 0; j < t.n_cols(); ++j) sums[i] += t.at(i, j);
  return sums;
}

inline std::vector<double> col_sums(const JointTable& t) {
  std::vector<double> sums(t.n_cols(), 0.0);
  for (std::size_t i = 0; i < t.n_rows(); ++i)
    for (std::size_t j = 0; j < t.n_cols(); ++j) sums[j] += t.at(i, j);
  return sums;
}

// H = -sum p log2 p
inline double entropy(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

inline double joint_entropy(const JointTable& t) { return entropy(t.cells); }

// H(x|y) summed directly: -sum_ij p_ij log2( p_ij / p(slice) )
inline double conditional_entropy(const JointTable& t, infodyn::Axis given) {
  const std::vector<double> slice =
      given == infodyn::Axis::Col ? col_sums(t) : row_sums(t);
  double h = 0.0;
  for (std::size_t i = 0; i < t.n_rows(); ++i) {
    for (std::size_t j = 0; j < t.n_cols(); ++j) {
      const double p = t.at(i, j);
      if (p <= 0.0) continue;
      const double m = given == infodyn::Axis::Col ? slice[j] : slice[i];
      h -= p * std::log2(p / m);
    }
  }
  return h;
}

// T = sum_ij p_ij log2( p_ij / (p_i. p_.j) )
inline double transmission(const JointTable& t) {
  const std::vector<double> rows = row_sums(t);
  const std::vector<double> cols = col_sums(t);
  double sum = 0.0;
  for (std::size_t i = 0; i < t.n_rows(); ++i) {
    for (std::size_t j = 0; j < t.n_cols(); ++j) {
      const double p = t.at(i, j);
      if (p <= 0.0) continue;
      sum += p * std::log2(p / (rows[i] * cols[j]));
    }
  }
  return sum;
}

// I = sum q log2(q/p); a positive q over a zero p is undefined.
inline double expected_information(const std::vector<double>& q, const std::vector<double>& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) throw std::domain_error("oracle: zero prior under positive posterior");
    sum += q[i] * std::log2(q[i] / p[i]);
  }
  return sum;
}

// Eq outcome of conditioning the structure on realized action:
// sum_ij q_ij log2( (q_ij / q_.j) / p_i. )
inline double update_information(const JointTable& prior, const JointTable& posterior) {
  const std::vector<double> q_cols = col_sums(posterior);
  const std::vector<double> p_rows = row_sums(prior);
  double sum = 0.0;
  for (std::size_t i = 0; i < posterior.n_rows(); ++i) {
    for (std::size_t j = 0; j < posterior.n_cols(); ++j) {
      const double q = posterior.at(i, j);
      if (q <= 0.0) continue;
      if (p_rows[i] <= 0.0) throw std::domain_error("oracle: zero prior row marginal");
      sum += q * std::log2((q / q_cols[j]) / p_rows[i]);
    }
  }
  return sum;
}

// Posterior-weighted prior pointwise transmission:
// sum_ij q_ij log2( p_ij / (p_i. p_.j) )
inline double dynamic_prediction(const JointTable& prior, const JointTable& posterior) {
  const std::vector<double> p_rows = row_sums(prior);
  const std::vector<double> p_cols = col_sums(prior);
  double sum = 0.0;
  for (std::size_t i = 0; i < posterior.n_rows(); ++i) {
    for (std::size_t j = 0; j < posterior.n_cols(); ++j) {
      const double q = posterior.at(i, j);
      if (q <= 0.0) continue;
      const double p = prior.at(i, j);
      if (p <= 0.0) throw std::domain_error("oracle: zero prior cell");
      sum += q * std::log2(p / (p_rows[i] * p_cols[j]));
    }
  }
  return sum;
}

struct Components {
  double action_given_marginal;     // -sum q_ij log2 p_.j
  double action_given_conditional;  // -sum q_ij log2( p_ij / p_i. )
};

inline Components update_components(const JointTable& prior, const JointTable& posterior) {
  const std::vector<double> p_rows = row_sums(prior);
  const std::vector<double> p_cols = col_sums(prior);
  Components c{0.0, 0.0};
  for (std::size_t i = 0; i < posterior.n_rows(); ++i) {
    for (std::size_t j = 0; j < posterior.n_cols(); ++j) {
      const double q = posterior.at(i, j);
      if (q <= 0.0) continue;
      const double p = prior.at(i, j);
      if (p <= 0.0) throw std::domain_error("oracle: zero prior cell");
      c.action_given_marginal -= q * std::log2(p_cols[j]);
      c.action_given_conditional -= q * std::log2(p / p_rows[i]);
    }
  }
  return c;
}

// Bayes posterior cell via the three-factor formula p(A) p(B|A) / p(B).
inline double bayes_cell(const JointTable& prior, std::size_t i, std::size_t j) {
  const std::vector<double> rows = row_sums(prior);
  const std::vector<double> cols = col_sums(prior);
  if (rows[i] <= 0.0 || cols[j] <= 0.0) throw std::domain_error("oracle: empty slice");
  return rows[i] * (prior.at(i, j) / rows[i]) / cols[j];
}

struct Decomposition {
  double h_posterior;        // -sum q^c log2 q^c over the prior support
  double h_structure;        // entropy of the prior row marginal
  double h_ratio;            // -sum r log2 r
  double structure_message;  // sum p_i. log2( p_i. / q^c )
  double ratio_message;      // sum r log2( r / q^c )
  double residual;
};

inline Decomposition posterior_decomposition(const JointTable& prior) {
  const std::vector<double> rows = row_sums(prior);
  const std::vector<double> cols = col_sums(prior);
  for (double m : rows)
    if (m <= 0.0) throw std::domain_error("oracle: empty slice");
  for (double m : cols)
    if (m <= 0.0) throw std::domain_error("oracle: empty slice");
  Decomposition d{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  d.h_structure = entropy(rows);
  for (std::size_t i = 0; i < prior.n_rows(); ++i) {
    for (std::size_t j = 0; j < prior.n_cols(); ++j) {
      const double p = prior.at(i, j);
      if (p <= 0.0) continue;
      const double qc = p / cols[j];
      const double r = (p / rows[i]) / cols[j];
      d.h_posterior -= qc * std::log2(qc);
      d.h_ratio -= r * std::log2(r);
      d.structure_message += rows[i] * std::log2(rows[i] / qc);
      d.ratio_message += r * std::log2(r / qc);
    }
  }
  d.residual = d.h_posterior - (d.h_structure + d.h_ratio + d.structure_message + d.ratio_message);
  return d;
}

// Disaggregation of H over groups: weights, within-group entropies
// and the between-group entropy, each evaluated directly.
struct Grouping {
  std::vector<double> weights;
  std::vector<double> within;
  double between;
};

inline Grouping group_decomposition(const std::vector<double>& probs,
                                    const std::vector<std::size_t>& group_of,
                                    std::size_t n_groups) {
  Grouping g;
  g.weights.assign(n_groups, 0.0);
  g.within.assign(n_groups, 0.0);
  for (std::size_t i = 0; i < probs.size(); ++i) g.weights[group_of[i]] += probs[i];
  for (std::size_t k = 0; k < n_groups; ++k) {
    if (g.weights[k] <= 0.0) continue;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (group_of[i] != k || probs[i] <= 0.0) continue;
      const double w = probs[i] / g.weights[k];
      g.within[k] -= w * std::log2(w);
    }
  }
  g.between = entropy(g.weights);
  return g;
}

inline double redundancy(const std::vector<double>& probs) {
  if (probs.size() == 1) return 1.0;
  return 1.0 - entropy(probs) / std::log2(static_cast<double>(probs.size()));
}

}  // namespace oracle
