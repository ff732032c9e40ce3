#pragma once

#include "gtcl/gtvector.hpp"
#include "gtcl/parallel.hpp"

namespace gtcl {

/// One divided-power factor (x^-[i,j])^(n), where x^-[i,j] is the matrix
/// unit E(j+1,i) and n >= 0.
struct ClFactor {
  int position = 0;  // i
  int row = 0;       // j
  Entry exponent = 0;

  OperatorSpec op() const { return OperatorSpec::matrix_unit(row + 1, position); }
  bool operator==(const ClFactor&) const = default;
};

/// Ordered product of divided powers attached to a pattern. Factors are
/// grouped by row j = 1..r; groups apply to the vector in descending j
/// order, and factors inside one group commute.
struct ClMonomial {
  std::vector<std::vector<ClFactor>> row_factors;  // index j-1

  Entry total_exponent() const {
    Entry total = 0;
    for (const auto& group : row_factors)
      for (const ClFactor& f : group) total += f.exponent;
    return total;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& group : row_factors)
      for (const ClFactor& f : group) {
        if (f.exponent == 0) continue;
        if (!out.empty()) out += " · ";
        out += "(x-[" + std::to_string(f.position) + "," + std::to_string(f.row) +
               "])^(" + std::to_string(f.exponent) + ")";
      }
    return out.empty() ? "1" : out;
  }

  bool operator==(const ClMonomial&) const = default;
};

/// Exponent of x^-[i,j] is the shifted-entry increment between rows j+1 and
/// j at position i; interlacing keeps every exponent non-negative, and the
/// exponents total the pattern length.
inline ClMonomial cl_monomial(const Pattern& p) {
  ClMonomial m;
  m.row_factors.resize(p.rank());
  for (int j = 1; j <= p.rank(); ++j)
    for (int i = 1; i <= j; ++i) {
      const Entry exponent = p.shifted_entry(j + 1, i) - p.shifted_entry(j, i);
      GTCL_ASSERT(exponent >= 0, "negative divided-power exponent");
      m.row_factors[j - 1].push_back({i, j, exponent});
    }
  return m;
}

/// op^n / n! applied to v; the factorial division happens once at the end.
inline GtVector divided_power_apply(const OperatorSpec& op, Entry n, GtVector v) {
  if (n < 0) throw std::invalid_argument("gtcl: negative divided-power exponent");
  for (Entry step = 0; step < n; ++step) v = act(op, v);
  if (n > 1) v *= make_rational(1, factorial(n));
  return v;
}

/// v_p: the monomial of p applied to the highest-weight vector. Row groups
/// apply in descending j order; within a group factors apply in ascending i
/// (the choice is immaterial, the factors commute).
inline GtVector cl_vector(const Pattern& p) {
  GtVector v = GtVector::highest_weight_vector(p.bounding());
  const ClMonomial m = cl_monomial(p);
  for (int j = p.rank(); j >= 1; --j)
    for (const ClFactor& f : m.row_factors[j - 1])
      if (f.exponent > 0) v = divided_power_apply(f.op(), f.exponent, std::move(v));
  return v;
}

/// CL vectors for a pattern list, computed row-parallel.
inline std::vector<GtVector> cl_vectors(const std::vector<Pattern>& patterns, int threads = 0) {
  std::vector<GtVector> rows;
  rows.reserve(patterns.size());
  for (const Pattern& p : patterns) rows.emplace_back(p.bounding());
  parallel_for(patterns.size(), threads,
               [&](std::size_t s) { rows[s] = cl_vector(patterns[s]); });
  return rows;
}

}  // namespace gtcl
