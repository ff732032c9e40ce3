#pragma once

#include <random>
#include <sstream>

#include "gtcl/transition.hpp"

namespace gtcl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Requested work exceeds the configured dimension cap.
class resource_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  std::optional<long long> max_dim;
  int threads = 0;
  std::vector<Entry> shift_offsets{-3, 5};
  std::size_t exhaustive_limit = 200;  // run per-basis-vector checks on every vector up to this dim
  std::size_t sample_size = 100;       // random basis vectors beyond it
  std::uint64_t seed = 0x5eedULL;
};

struct VerifyReport {
  BoundingTuple bounding;
  std::vector<CheckResult> checks;
  TriangularReport triangular;
  DiagonalReport diagonal;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::size_t> pick_basis_indices(std::size_t dim, const VerifyOptions& opts) {
  std::vector<std::size_t> all(dim);
  for (std::size_t i = 0; i < dim; ++i) all[i] = i;
  if (dim <= opts.exhaustive_limit) return all;
  std::vector<std::size_t> picks;
  std::mt19937_64 rng(opts.seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picks), opts.sample_size, rng);
  return picks;
}

}  // namespace detail

/// Runs the full check battery on one module: dimension, Lie relations,
/// triangularity, diagonal formula, recursion identities, shift invariance.
inline VerifyReport run_verification(const BoundingTuple& bounding,
                                     const VerifyOptions& opts = {}) {
  const Integer dim = weyl_dimension(bounding);
  if (opts.max_dim && dim > *opts.max_dim)
    throw resource_cap_error("gtcl: dimension " + dim.str() + " exceeds the cap " +
                             std::to_string(*opts.max_dim));

  VerifyReport report{bounding, {}, {}, {}};
  const int n = bounding.size();
  const std::vector<Pattern> order = enumerate_patterns(bounding);

  // dimension: enumeration count against the Weyl product
  {
    const bool ok = Integer(order.size()) == dim;
    report.checks.push_back({"dimension", ok,
                             "patterns=" + std::to_string(order.size()) + " weyl=" + dim.str()});
  }

  std::vector<WeightTuple> weights;
  weights.reserve(order.size());
  for (const Pattern& p : order) weights.push_back(weight(p));

  // Lie relations: matrix-unit commutators, Cartan eigenvalues, and the
  // highest-weight axioms
  {
    long long failures = 0;
    std::string first_failure;
    auto record = [&](const std::string& what) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    };

    const GtVector top = GtVector::highest_weight_vector(bounding);
    for (int k = 1; k < n; ++k) {
      if (!act_raise(k, top).is_zero()) record("raise(" + std::to_string(k) + ") on top");
      const Entry expected = bounding.entries()[k - 1] - bounding.entries()[k];
      if (act_cartan(k, top) != Rational(expected) * top)
        record("cartan(" + std::to_string(k) + ") on top");
    }

    const auto picks = detail::pick_basis_indices(order.size(), opts);
    for (const std::size_t idx : picks) {
      const GtVector xi = GtVector::unit(order[idx]);
      const std::vector<Entry>& mu = weights[idx].coords();
      for (int k = 1; k < n; ++k)
        if (act_cartan(k, xi) != Rational(mu[k - 1] - mu[k]) * xi)
          record("cartan eigenvalue at " + format_pattern(order[idx]));
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          if (a == b) continue;
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d) {
              if (c == d) continue;
              const GtVector lhs = commutator(OperatorSpec::matrix_unit(a, b),
                                              OperatorSpec::matrix_unit(c, d), xi);
              GtVector rhs(bounding);
              if (b == c && d == a) {
                rhs = cartan_difference_action(a, b, xi);
              } else if (b == c) {
                rhs = act(OperatorSpec::matrix_unit(a, d), xi);
              } else if (d == a) {
                rhs -= act(OperatorSpec::matrix_unit(c, b), xi);
              }
              if (lhs != rhs)
                record("[E(" + std::to_string(a) + "," + std::to_string(b) + "),E(" +
                       std::to_string(c) + "," + std::to_string(d) + ")] at " +
                       format_pattern(order[idx]));
            }
        }
    }
    std::string detail_text = "vectors=" + std::to_string(picks.size()) +
                              (order.size() > opts.exhaustive_limit ? " (sampled)" : "") +
                              " failures=" + std::to_string(failures);
    if (failures) detail_text += " first=" + first_failure;
    report.checks.push_back({"relations", failures == 0, detail_text});
  }

  const std::vector<GtVector> rows = cl_vectors(order, opts.threads);
  std::map<Pattern, std::size_t, PatternCanonicalBefore> index;
  for (std::size_t s = 0; s < order.size(); ++s) index.emplace(order[s], s);

  // triangularity: every GT pattern carrying a nonzero coefficient must
  // dominate the row pattern and share its weight
  {
    long long weight_mismatches = 0;
    std::size_t nonzero = 0;
    for (std::size_t s = 0; s < order.size(); ++s)
      for (const auto& [p, c] : rows[s].terms()) {
        ++nonzero;
        if (!dominates(p, order[s]))
          report.triangular.violations.push_back({order[s], p, c});
        if (weight(p) != weights[s]) ++weight_mismatches;
      }
    const bool ok = report.triangular.passed() && weight_mismatches == 0;
    report.checks.push_back(
        {"triangularity", ok,
         "nonzero=" + std::to_string(nonzero) +
             " violations=" + std::to_string(report.triangular.violations.size()) +
             " weight-mismatches=" + std::to_string(weight_mismatches)});
  }

  // diagonal: closed form, positivity, nonzero determinant
  {
    long long nonpositive = 0;
    Rational det(1);
    for (std::size_t s = 0; s < order.size(); ++s) {
      const Rational actual = rows[s].coefficient(order[s]);
      const Rational predicted = diagonal_predicted(order[s]);
      if (actual != predicted) report.diagonal.mismatches.push_back({order[s], actual, predicted});
      if (actual <= 0) ++nonpositive;
      det *= actual;
    }
    const bool ok = report.diagonal.passed() && nonpositive == 0 && det != 0;
    report.checks.push_back(
        {"diagonal", ok,
         "entries=" + std::to_string(order.size()) +
             " mismatches=" + std::to_string(report.diagonal.mismatches.size()) +
             " nonpositive=" + std::to_string(nonpositive) +
             " determinant=" + std::string(det != 0 ? "nonzero" : "zero")});
  }

  // recursion: each non-highest CL vector against a single lowering step
  // from its incremented pattern, plus the two closed-form coefficient
  // identities along the interpolating chain
  {
    long long failures = 0;
    std::string first_failure;
    auto record = [&](const std::string& what, const Pattern& p) {
      ++failures;
      if (first_failure.empty()) first_failure = what + " at " + format_pattern(p);
    };
    for (std::size_t s = 0; s < order.size(); ++s) {
      const Pattern& p = order[s];
      if (length(p) == 0) continue;
      const auto [i0, j0] = first_discrepancy(p);
      const Pattern p_tilde = incremented_pattern(p);
      const auto it = index.find(p_tilde);
      GTCL_ASSERT(it != index.end(), "incremented pattern escapes the module");
      const Entry denom = p.shifted_entry(j0, i0) - p.shifted_entry(j0 - 1, i0);
      const OperatorSpec step = OperatorSpec::matrix_unit(j0, i0);

      if (make_rational(1, denom) * act(step, rows[it->second]) != rows[s])
        record("vector recursion", p);

      const Rational direct = act(step, GtVector::unit(p_tilde)).coefficient(p);
      if (direct != step_coefficient_predicted(p)) record("step coefficient", p);

      Rational chain(1);
      for (int k = i0; k < j0; ++k) {
        const Pattern from = interpolated_pattern(p, p_tilde, k);
        const Pattern to = interpolated_pattern(p, p_tilde, k + 1);
        chain *= act_lower(k, GtVector::unit(from)).coefficient(to);
      }
      if (chain != direct) record("chain factorization", p);

      if (diagonal_predicted(p) !=
          diagonal_predicted(p_tilde) * step_coefficient_predicted(p) / Rational(denom))
        record("diagonal recursion", p);
    }
    std::string detail_text = "patterns=" + std::to_string(order.size()) +
                              " failures=" + std::to_string(failures);
    if (failures) detail_text += " first=" + first_failure;
    report.checks.push_back({"recursion", failures == 0, detail_text});
  }

  // shift invariance: adding a constant to the bounding tuple must carry
  // the whole matrix along entry-for-entry
  {
    long long failures = 0;
    for (const Entry offset : opts.shift_offsets) {
      const BoundingTuple shifted = bounding.shifted(offset);
      const std::vector<Pattern> shifted_order = enumerate_patterns(shifted);
      if (shifted_order.size() != order.size()) {
        ++failures;
        continue;
      }
      bool order_ok = true;
      for (std::size_t s = 0; s < order.size(); ++s)
        if (shifted_order[s] != order[s].shifted(offset)) {
          order_ok = false;
          break;
        }
      if (!order_ok) {
        ++failures;
        continue;
      }
      const std::vector<GtVector> shifted_rows = cl_vectors(shifted_order, opts.threads);
      for (std::size_t s = 0; s < order.size(); ++s) {
        if (shifted_rows[s].term_count() != rows[s].term_count()) {
          ++failures;
          continue;
        }
        auto lhs = rows[s].terms().begin();
        auto rhs = shifted_rows[s].terms().begin();
        for (; lhs != rows[s].terms().end(); ++lhs, ++rhs)
          if (rhs->first != lhs->first.shifted(offset) || rhs->second != lhs->second) {
            ++failures;
            break;
          }
      }
    }
    std::ostringstream offsets;
    for (std::size_t i = 0; i < opts.shift_offsets.size(); ++i)
      offsets << (i ? "," : "") << opts.shift_offsets[i];
    report.checks.push_back({"shift-invariance", failures == 0,
                             "offsets=" + offsets.str() +
                                 " failures=" + std::to_string(failures)});
  }

  return report;
}

}  // namespace gtcl
