#pragma once

#include <map>

#include "gtcl/patterns.hpp"

namespace gtcl {

/// A basis operator of sl(r+1): a matrix unit E(a,b) with a != b, or a
/// Cartan difference H(k) = E(k,k) - E(k+1,k+1).
struct OperatorSpec {
  enum class Kind { matrix_unit, cartan };

  Kind kind = Kind::matrix_unit;
  int a = 0;  // E(a,b) row index, or k for H(k)
  int b = 0;  // E(a,b) column index; unused for H(k)

  static OperatorSpec matrix_unit(int row, int col) {
    if (row < 1 || col < 1 || row == col)
      throw std::invalid_argument("gtcl: a matrix unit needs distinct positive indices");
    return {Kind::matrix_unit, row, col};
  }

  static OperatorSpec cartan(int k) {
    if (k < 1) throw std::invalid_argument("gtcl: Cartan index must be positive");
    return {Kind::cartan, k, 0};
  }

  bool is_matrix_unit() const { return kind == Kind::matrix_unit; }
  bool operator==(const OperatorSpec&) const = default;
};

inline std::string format_operator(const OperatorSpec& op) {
  if (op.kind == OperatorSpec::Kind::cartan) return "H(" + std::to_string(op.a) + ")";
  return "E(" + std::to_string(op.a) + "," + std::to_string(op.b) + ")";
}

/// Sparse exact-rational combination of GT basis vectors over one bounding
/// tuple. Zero coefficients are never stored; term iteration follows the
/// canonical pattern order.
class GtVector {
 public:
  using TermMap = std::map<Pattern, Rational, PatternCanonicalBefore>;

  explicit GtVector(BoundingTuple bounding) : bounding_(std::move(bounding)) {}

  static GtVector unit(const Pattern& p, const Rational& coeff = Rational(1)) {
    GtVector v(p.bounding());
    v.add_term(p, coeff);
    return v;
  }

  /// v_lambda: the single-term vector at the highest pattern.
  static GtVector highest_weight_vector(const BoundingTuple& bounding) {
    return unit(highest_pattern(bounding));
  }

  const BoundingTuple& bounding() const { return bounding_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Pattern& p) const {
    const auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Pattern& p, const Rational& coeff) {
    if (coeff == 0) return;
    GTCL_ASSERT(p.size() == bounding_.size() && p.row(p.size()) == bounding_.entries(),
                "pattern bounding mismatch in GtVector");
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GtVector& operator+=(const GtVector& rhs) {
    GTCL_ASSERT(bounding_ == rhs.bounding_, "bounding mismatch in vector sum");
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
  }

  GtVector& operator-=(const GtVector& rhs) {
    GTCL_ASSERT(bounding_ == rhs.bounding_, "bounding mismatch in vector difference");
    for (const auto& [p, c] : rhs.terms_) add_term(p, -c);
    return *this;
  }

  GtVector& operator*=(const Rational& scale) {
    if (scale == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= scale;
    return *this;
  }

  friend GtVector operator+(GtVector a, const GtVector& b) { return a += b; }
  friend GtVector operator-(GtVector a, const GtVector& b) { return a -= b; }
  friend GtVector operator*(const Rational& scale, GtVector v) { return v *= scale; }
  friend GtVector operator*(GtVector v, const Rational& scale) { return v *= scale; }

  bool operator==(const GtVector&) const = default;

 private:
  BoundingTuple bounding_;
  TermMap terms_;
};

namespace detail {
inline void check_generator_index(const GtVector& v, int k) {
  if (k < 1 || k > v.bounding().rank())
    throw std::out_of_range("gtcl: generator index out of range");
}
}  // namespace detail

/// H(k) scales each GT term by mu_k - mu_{k+1} of its pattern.
inline GtVector act_cartan(int k, const GtVector& v) {
  detail::check_generator_index(v, k);
  GtVector out(v.bounding());
  for (const auto& [p, c] : v.terms()) {
    const WeightTuple mu = weight(p);
    out.add_term(p, c * Rational(mu.coords()[k - 1] - mu.coords()[k]));
  }
  return out;
}

/// E(k,k+1) on each GT term: the signed sum over positions i of the ratio
/// of shifted-entry difference products, on the raised pattern; raised
/// patterns that fail interlacing contribute nothing.
inline GtVector act_raise(int k, const GtVector& v) {
  detail::check_generator_index(v, k);
  GtVector out(v.bounding());
  for (const auto& [p, c] : v.terms()) {
    for (int i = 1; i <= k; ++i) {
      const auto target = apply_delta(p, k, i, +1);
      if (!target) continue;
      const Entry li = p.shifted_entry(k, i);
      Integer num = 1;
      for (int j = 1; j <= k + 1; ++j) num *= li - p.shifted_entry(k + 1, j);
      if (num == 0) continue;
      Integer den = 1;
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;  // the vanishing factor is skipped
        const Entry d = li - p.shifted_entry(k, j);
        GTCL_ASSERT(d != 0, "repeated shifted entry within a pattern row");
        den *= d;
      }
      out.add_term(*target, c * make_rational(-num, den));
    }
  }
  return out;
}

/// E(k+1,k), the lowering analogue of act_raise; the numerator runs over
/// row k-1 and is the empty product when k = 1.
inline GtVector act_lower(int k, const GtVector& v) {
  detail::check_generator_index(v, k);
  GtVector out(v.bounding());
  for (const auto& [p, c] : v.terms()) {
    for (int i = 1; i <= k; ++i) {
      const auto target = apply_delta(p, k, i, -1);
      if (!target) continue;
      const Entry li = p.shifted_entry(k, i);
      Integer num = 1;
      for (int j = 1; j <= k - 1; ++j) num *= li - p.shifted_entry(k - 1, j);
      if (num == 0) continue;
      Integer den = 1;
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        const Entry d = li - p.shifted_entry(k, j);
        GTCL_ASSERT(d != 0, "repeated shifted entry within a pattern row");
        den *= d;
      }
      out.add_term(*target, c * make_rational(num, den));
    }
  }
  return out;
}

/// Action of an arbitrary basis operator. Simple generators evaluate
/// directly; a matrix unit E(a,b) with |a-b| > 1 is the nested commutator
/// of simple ones: E(a,b) = [E(a,a-1), E(a-1,b)] on the lowering side and
/// E(a,b) = [E(a,b-1), E(b-1,b)] on the raising side.
inline GtVector act(const OperatorSpec& op, const GtVector& v) {
  const int n = v.bounding().size();
  if (op.kind == OperatorSpec::Kind::cartan) {
    if (op.a < 1 || op.a > n - 1)
      throw std::invalid_argument("gtcl: Cartan index out of range for this module");
    return act_cartan(op.a, v);
  }
  const int a = op.a, b = op.b;
  if (a < 1 || b < 1 || a > n || b > n || a == b)
    throw std::invalid_argument("gtcl: matrix unit out of range for this module");
  if (b - a == 1) return act_raise(a, v);
  if (a - b == 1) return act_lower(b, v);
  if (a < b) {
    const auto lead = OperatorSpec::matrix_unit(a, b - 1);
    const auto last = OperatorSpec::matrix_unit(b - 1, b);
    return act(lead, act(last, v)) - act(last, act(lead, v));
  }
  const auto lead = OperatorSpec::matrix_unit(a, a - 1);
  const auto rest = OperatorSpec::matrix_unit(a - 1, b);
  return act(lead, act(rest, v)) - act(rest, act(lead, v));
}

inline GtVector commutator(const OperatorSpec& x, const OperatorSpec& y, const GtVector& v) {
  return act(x, act(y, v)) - act(y, act(x, v));
}

/// Action of the diagonal difference E(a,a) - E(b,b) as a sum of Cartan
/// differences.
inline GtVector cartan_difference_action(int a, int b, const GtVector& v) {
  GTCL_ASSERT(a != b, "diagonal difference needs distinct indices");
  GtVector out(v.bounding());
  if (a < b) {
    for (int k = a; k < b; ++k) out += act_cartan(k, v);
  } else {
    for (int k = b; k < a; ++k) out -= act_cartan(k, v);
  }
  return out;
}

/// "1/3*(3;3,2) + 2/3*(3;4,1)"; pattern labels omit the bounding row unless
/// full_patterns is set. The zero vector renders as "0".
inline std::string format_gt_vector(const GtVector& v, bool full_patterns = false) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : v.terms()) {
    const bool negative = c < 0;
    Rational magnitude = c;
    if (negative) magnitude = -magnitude;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_rational(magnitude);
    out += "*(";
    out += full_patterns ? format_pattern(p) : format_pattern_inner(p);
    out += ")";
  }
  return out;
}

}  // namespace gtcl
