/***************************************************************
 *  contingency.hpp
 *
 *  Bayesian conditionalization between a prior and a posterior
 *  joint table: the update information carried by the message
 *  that action occurred, the dynamic prediction of the next
 *  period's transmission, its two-component split, the
 *  normalization ratio of conditional to marginal action
 *  probabilities, the a-posteriori uncertainty decomposition,
 *  and the empirical coverage ratio.
 *
 *  Rows are the structure ("cited") axis A, columns the action
 *  ("citing") axis B. All sums are weighted by posterior joint
 *  cells q_ij and skip zero-posterior cells; posterior mass on a
 *  cell whose required prior quantity is zero throws
 *  "infinite surprise".
 ***************************************************************/

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infodyn/measures.hpp"
#include "infodyn/tables.hpp"

namespace infodyn {

/// Posterior structure distribution per action category via Bayes'
/// formula q(A|B) = p(A) p(B|A) / p(B), which collapses to column
/// conditioning of the prior joint. Zero-column slices come back
/// flagged empty.
inline ConditionalTable bayes_posterior(const JointTable& prior) {
  return conditional(prior, Axis::Col);
}

namespace detail {

struct PairView {
  const JointTable& prior;
  const JointTable& posterior;
  std::vector<double> prior_rows;
  std::vector<double> prior_cols;
  std::vector<double> posterior_cols;
};

inline PairView pair_view(const JointTable& prior, const JointTable& posterior) {
  require_same_labels(prior.row_labels, posterior.row_labels);
  require_same_labels(prior.col_labels, posterior.col_labels);
  PairView v{prior, posterior, std::vector<double>(prior.n_rows(), 0.0),
             std::vector<double>(prior.n_cols(), 0.0),
             std::vector<double>(posterior.n_cols(), 0.0)};
  for (std::size_t i = 0; i < prior.n_rows(); ++i) {
    for (std::size_t j = 0; j < prior.n_cols(); ++j) {
      v.prior_rows[i] += prior.at(i, j);
      v.prior_cols[j] += prior.at(i, j);
      v.posterior_cols[j] += posterior.at(i, j);
    }
  }
  return v;
}

}  // namespace detail

/// Information content of the message that the structure must
/// update because actions occurred: the posterior conditional
/// against the prior structure marginal, weighted by posterior
/// joint cells,
///
///   sum_ij q_ij log2( (q_ij / q_.j) / p_i. )
///   = sum_j q_.j D( q(.|j) || p(A) )  >=  0.
///
/// With posterior == prior this reduces to the static transmission.
inline double update_information(const JointTable& prior, const JointTable& posterior) {
  const detail::PairView v = detail::pair_view(prior, posterior);
  double total = 0.0;
  for (std::size_t i = 0; i < posterior.n_rows(); ++i) {
    for (std::size_t j = 0; j < posterior.n_cols(); ++j) {
      const double q = posterior.at(i, j);
      if (q <= 0.0) continue;
      if (v.prior_rows[i] <= 0.0) throw Error("infinite surprise");
      total += q * std::log2((q / v.posterior_cols[j]) / v.prior_rows[i]);
    }
  }
  return total;
}

/// Prediction of the next period's transmission: posterior joint
/// weights over the prior's pointwise transmission terms,
///
///   sum_ij q_ij log2( p_ij / (p_i. p_.j) ).
///
/// With posterior == prior this is exactly the static transmission
/// of the prior; with an independent prior it vanishes for any
/// admissible posterior.
inline double dynamic_prediction(const JointTable& prior, const JointTable& posterior) {
  const detail::PairView v = detail::pair_view(prior, posterior);
  double total = 0.0;
  for (std::size_t i = 0; i < posterior.n_rows(); ++i) {
    for (std::size_t j = 0; j < posterior.n_cols(); ++j) {
      const double q = posterior.at(i, j);
      if (q <= 0.0) continue;
      const double p = prior.at(i, j);
      if (p <= 0.0) throw Error("infinite surprise");
      total += q * std::log2(p / (v.prior_rows[i] * v.prior_cols[j]));
    }
  }
  return total;
}

/// The two-message split of the dynamic prediction: the expected
/// surprise of realized events under the prior action marginal
/// minus the expected surprise under the prior's structure-
/// conditioned action distribution,
///
///   action_given_marginal    = -sum_ij q_ij log2 p_.j
///   action_given_conditional = -sum_ij q_ij log2( p_ij / p_i. )
///
/// Their difference equals dynamic_prediction cell for cell: the
/// improvement gained by predicting action from the conditioned
/// rather than the unconditioned prior.
struct UpdateComponents {
  double action_given_marginal;
  double action_given_conditional;

  double difference() const { return action_given_marginal - action_given_conditional; }
};

inline UpdateComponents update_components(const JointTable& prior, const JointTable& posterior) {
  const detail::PairView v = detail::pair_view(prior, posterior);
  UpdateComponents c{0.0, 0.0};
  for (std::size_t i = 0; i < posterior.n_rows(); ++i) {
    for (std::size_t j = 0; j < posterior.n_cols(); ++j) {
      const double q = posterior.at(i, j);
      if (q <= 0.0) continue;
      const double p = prior.at(i, j);
      if (p <= 0.0) throw Error("infinite surprise");
      c.action_given_marginal -= q * std::log2(v.prior_cols[j]);
      c.action_given_conditional -= q * std::log2(p / v.prior_rows[i]);
    }
  }
  return c;
}

/// Ratio of conditional to marginal action probability per cell,
/// r_ij = (p_ij / p_i.) / p_.j — the normalization a structure
/// applies before incorporating action. Values may exceed 1.
/// Cells on a zero row or column marginal are flagged undefined.
struct RatioTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> values;  // row-major; meaningful only where defined
  std::vector<char> defined;

  std::size_t n_cols() const { return col_labels.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * n_cols() + j]; }
  bool is_defined(std::size_t i, std::size_t j) const { return defined[i * n_cols() + j] != 0; }
};

inline RatioTable normalization_ratio(const JointTable& prior) {
  const LabeledDistribution rows = marginal(prior, Axis::Row);
  const LabeledDistribution cols = marginal(prior, Axis::Col);
  RatioTable out{prior.row_labels, prior.col_labels,
                 std::vector<double>(prior.cells.size(), 0.0),
                 std::vector<char>(prior.cells.size(), 0)};
  for (std::size_t i = 0; i < prior.n_rows(); ++i) {
    for (std::size_t j = 0; j < prior.n_cols(); ++j) {
      if (rows.probs[i] == 0.0 || cols.probs[j] == 0.0) continue;
      out.values[i * prior.n_cols() + j] = (prior.at(i, j) / rows.probs[i]) / cols.probs[j];
      out.defined[i * prior.n_cols() + j] = 1;
    }
  }
  return out;
}

/// Term-wise decomposition of the a-posteriori uncertainty
/// -sum q^c log2 q^c (q^c the Bayes posterior of the prior) into
/// the uncertainties of the two a-priori systems plus the two
/// merge messages. The expansion is reported, not asserted: the
/// residual carries whatever the four terms fail to explain.
struct PosteriorDecomposition {
  double h_posterior;        // -sum_ij q^c_ij log2 q^c_ij
  double h_structure;        // entropy of the prior row marginal
  double h_ratio;            // -sum_ij r_ij log2 r_ij
  double structure_message;  // sum_ij p_i. log2( p_i. / q^c_ij )
  double ratio_message;      // sum_ij r_ij log2( r_ij / q^c_ij )
  double residual;           // h_posterior minus the four terms above
};

/// All sums run over the prior's support (cells with p_ij > 0);
/// a zero row or column marginal leaves the decomposition undefined.
inline PosteriorDecomposition posterior_decomposition(const JointTable& prior) {
  const LabeledDistribution rows = marginal(prior, Axis::Row);
  const LabeledDistribution cols = marginal(prior, Axis::Col);
  for (double m : rows.probs) {
    if (m == 0.0) throw Error("decomposition undefined on empty slice");
  }
  for (double m : cols.probs) {
    if (m == 0.0) throw Error("decomposition undefined on empty slice");
  }
  PosteriorDecomposition d{0.0, entropy(rows), 0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < prior.n_rows(); ++i) {
    for (std::size_t j = 0; j < prior.n_cols(); ++j) {
      const double p = prior.at(i, j);
      if (p <= 0.0) continue;
      const double qc = p / cols.probs[j];
      const double r = (p / rows.probs[i]) / cols.probs[j];
      d.h_posterior -= qc * std::log2(qc);
      d.h_ratio -= r * std::log2(r);
      d.structure_message += rows.probs[i] * std::log2(rows.probs[i] / qc);
      d.ratio_message += r * std::log2(r / qc);
    }
  }
  d.residual =
      d.h_posterior - (d.h_structure + d.h_ratio + d.structure_message + d.ratio_message);
  return d;
}

/// Fraction of the observed transmission change the dynamic
/// prediction accounts for: (prediction - T_prior) / (T_post - T_prior).
/// Scale-free, so bits and mbits give the same ratio.
inline double coverage_ratio(double t_prior, double t_posterior, double prediction) {
  if (t_posterior == t_prior) throw Error("no transmission change");
  return (prediction - t_prior) / (t_posterior - t_prior);
}

/// Everything a prior/posterior year pair yields: both static
/// transmissions, the dynamic prediction, the update information,
/// the prediction's two components, and the coverage ratio.
/// Coverage is absent (not zero) when the transmission did not
/// change between the two periods.
struct UpdateReport {
  double t_prior;
  double t_posterior;
  double prediction;
  double update_info;
  double action_given_marginal;
  double action_given_conditional;
  std::optional<double> coverage;
};

/// Aggregates both tables identically per the optional partitions
/// (groups first, then measures), then fills an UpdateReport.
inline UpdateReport year_pair_analysis(const JointTable& prior_in, const JointTable& posterior_in,
                                       const Partition* row_part = nullptr,
                                       const Partition* col_part = nullptr) {
  JointTable prior = prior_in;
  JointTable posterior = posterior_in;
  if (row_part != nullptr) {
    prior = aggregate(prior, *row_part, Axis::Row);
    posterior = aggregate(posterior, *row_part, Axis::Row);
  }
  if (col_part != nullptr) {
    prior = aggregate(prior, *col_part, Axis::Col);
    posterior = aggregate(posterior, *col_part, Axis::Col);
  }
  UpdateReport report{};
  report.t_prior = transmission(prior);
  report.t_posterior = transmission(posterior);
  report.prediction = dynamic_prediction(prior, posterior);
  report.update_info = update_information(prior, posterior);
  const UpdateComponents c = update_components(prior, posterior);
  report.action_given_marginal = c.action_given_marginal;
  report.action_given_conditional = c.action_given_conditional;
  if (report.t_posterior != report.t_prior) {
    report.coverage = coverage_ratio(report.t_prior, report.t_posterior, report.prediction);
  }
  return report;
}

}  // namespace infodyn
