#pragma once

#include "gtcl/clbasis.hpp"

namespace gtcl {

/// Square exact matrix of CL vectors in GT coordinates. Rows and columns
/// share one pattern order (canonical, greatest first); entries[s][t] is
/// the coefficient of xi(order[t]) in v(order[s]). With this order the
/// matrix is lower triangular.
struct TransitionMatrix {
  BoundingTuple bounding;
  std::vector<Pattern> order;
  std::vector<std::vector<Rational>> entries;

  int size() const { return static_cast<int>(order.size()); }
  bool operator==(const TransitionMatrix&) const = default;
};

/// Assembles the matrix, optionally restricted to one weight class (weight
/// spaces are invariant, so the block is well defined). Throws if the
/// filter matches no pattern.
inline TransitionMatrix transition_matrix(
    const BoundingTuple& bounding,
    const std::optional<WeightTuple>& weight_filter = std::nullopt, int threads = 0) {
  std::vector<Pattern> order = enumerate_patterns(bounding);
  if (weight_filter) {
    if (weight_filter->size() != bounding.size())
      throw std::invalid_argument("gtcl: weight filter length must match the bounding tuple");
    std::erase_if(order,
                  [&](const Pattern& p) { return !same_weight_class(weight(p), *weight_filter); });
    if (order.empty())
      throw std::invalid_argument("gtcl: no patterns in the requested weight class");
  }
  std::map<Pattern, int, PatternCanonicalBefore> column;
  for (int t = 0; t < static_cast<int>(order.size()); ++t) column.emplace(order[t], t);

  TransitionMatrix m{bounding, order,
                     std::vector<std::vector<Rational>>(
                         order.size(), std::vector<Rational>(order.size(), Rational(0)))};
  parallel_for(order.size(), threads, [&](std::size_t s) {
    const GtVector v = cl_vector(m.order[s]);
    for (const auto& [p, c] : v.terms()) {
      const auto it = column.find(p);
      GTCL_ASSERT(it != column.end(), "CL vector support escapes the matrix order");
      m.entries[s][static_cast<std::size_t>(it->second)] = c;
    }
  });
  return m;
}

/// Closed form for the diagonal entry c^p_p: a double product of factorial
/// ratios in the shifted entries. Every factorial argument is non-negative
/// for a valid pattern, and the value is positive.
inline Rational diagonal_predicted(const Pattern& p) {
  Rational result(1);
  for (int j = 2; j <= p.size(); ++j)
    for (int i = 1; i < j; ++i)
      for (int q = i; q <= j - 1; ++q) {
        const Entry num_arg = p.shifted_entry(j - 1, i) - p.shifted_entry(j - 1, q);
        const Entry den_arg = p.shifted_entry(j, i) - p.shifted_entry(j - 1, q);
        GTCL_ASSERT(num_arg >= 0 && den_arg >= 0,
                    "negative factorial argument in the diagonal formula");
        result *= make_rational(factorial(num_arg), factorial(den_arg));
      }
  return result;
}

/// First position, scanning rows top-down and positions left-to-right,
/// where a row differs from the row above it.
struct Discrepancy {
  int position = 0;  // i0
  int row = 0;       // j0
};

inline Discrepancy first_discrepancy(const Pattern& p) {
  for (int j = 2; j <= p.size(); ++j)
    for (int i = 1; i < j; ++i)
      if (p.entry(j, i) != p.entry(j - 1, i)) return {i, j};
  throw std::invalid_argument("gtcl: pattern of length zero has no discrepancy");
}

/// The pattern one length step closer to the highest one: entry (j, i0)
/// bumped by one for every row j in [i0, j0).
inline Pattern incremented_pattern(const Pattern& p) {
  const auto [i0, j0] = first_discrepancy(p);
  std::vector<Entry> flat = p.flat();
  for (int j = i0; j < j0; ++j) flat[Pattern::flat_offset(j) + i0 - 1] += 1;
  return Pattern::from_flat(p.size(), std::move(flat));
}

/// Intermediate pattern of the single-step chain from incremented_pattern(p)
/// down to p: rows above k come from p, rows k and below from p_tilde.
inline Pattern interpolated_pattern(const Pattern& p, const Pattern& p_tilde, int k) {
  GTCL_ASSERT(p.size() == p_tilde.size(), "interpolation needs equal-shape patterns");
  std::vector<Entry> flat = p_tilde.flat();
  std::copy_n(p.flat().begin(), Pattern::flat_offset(k), flat.begin());
  return Pattern::from_flat(p.size(), std::move(flat));
}

/// Closed form for the coefficient of xi(p) in E(j0,i0) applied to
/// xi(incremented_pattern(p)).
inline Rational step_coefficient_predicted(const Pattern& p) {
  const auto [i0, j0] = first_discrepancy(p);
  Rational result(1);
  for (int q = i0 + 1; q <= j0 - 1; ++q)
    result /= Rational(p.shifted_entry(j0 - 1, i0) - p.shifted_entry(j0 - 1, q) + 1);
  return result;
}

struct TriangularViolation {
  Pattern row_pattern;
  Pattern col_pattern;
  Rational coeff;
};

struct TriangularReport {
  std::vector<TriangularViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Nonzero entries must sit on dominating column patterns. The check goes
/// through the dominance order itself, never through matrix position.
inline TriangularReport check_triangular(const TransitionMatrix& m) {
  TriangularReport report;
  for (int s = 0; s < m.size(); ++s)
    for (int t = 0; t < m.size(); ++t)
      if (m.entries[s][t] != 0 && !dominates(m.order[t], m.order[s]))
        report.violations.push_back({m.order[s], m.order[t], m.entries[s][t]});
  return report;
}

struct DiagonalMismatch {
  Pattern pattern;
  Rational actual;
  Rational predicted;
};

struct DiagonalReport {
  std::vector<DiagonalMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

inline DiagonalReport check_diagonal(const TransitionMatrix& m) {
  DiagonalReport report;
  for (int s = 0; s < m.size(); ++s) {
    const Rational predicted = diagonal_predicted(m.order[s]);
    if (m.entries[s][s] != predicted)
      report.mismatches.push_back({m.order[s], m.entries[s][s], predicted});
  }
  return report;
}

/// Product of the diagonal entries; valid as the determinant because the
/// order is a linear extension of dominance and the matrix is triangular.
inline Rational determinant(const TransitionMatrix& m) {
  Rational det(1);
  for (int s = 0; s < m.size(); ++s) det *= m.entries[s][s];
  return det;
}

}  // namespace gtcl
