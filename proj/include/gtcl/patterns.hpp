#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtcl/rational.hpp"

namespace gtcl {

using Entry = long long;

/// Non-increasing integer (r+1)-tuple fixing the highest weight. It is
/// stored as given (no normalization); two tuples differing by a constant
/// shift describe the same weight.
class BoundingTuple {
 public:
  explicit BoundingTuple(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
      throw std::invalid_argument("gtcl: a bounding tuple needs at least two entries");
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
      if (entries_[i] < entries_[i + 1])
        throw std::invalid_argument("gtcl: bounding tuple entries must be non-increasing");
  }

  const std::vector<Entry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }  // r+1
  int rank() const { return size() - 1; }                         // r

  BoundingTuple shifted(Entry offset) const {
    std::vector<Entry> shifted_entries = entries_;
    for (Entry& e : shifted_entries) e += offset;
    return BoundingTuple(std::move(shifted_entries));
  }

  bool operator==(const BoundingTuple&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Coordinates of a weight in the epsilon basis. Weights are compared both
/// exactly and modulo the constant tuple (1,...,1).
class WeightTuple {
 public:
  explicit WeightTuple(std::vector<Entry> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("gtcl: empty weight tuple");
  }

  const std::vector<Entry>& coords() const { return coords_; }
  int size() const { return static_cast<int>(coords_.size()); }

  /// Class representative with last coordinate 0.
  WeightTuple normalized() const {
    std::vector<Entry> c = coords_;
    const Entry last = c.back();
    for (Entry& x : c) x -= last;
    return WeightTuple(std::move(c));
  }

  bool operator==(const WeightTuple&) const = default;
  friend bool operator<(const WeightTuple& a, const WeightTuple& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<Entry> coords_;
};

/// True iff the two tuples differ by a constant shift.
inline bool same_weight_class(const WeightTuple& a, const WeightTuple& b) {
  if (a.size() != b.size()) return false;
  const Entry shift = a.coords()[0] - b.coords()[0];
  for (int i = 0; i < a.size(); ++i)
    if (a.coords()[i] - b.coords()[i] != shift) return false;
  return true;
}

/// Triangular array of integers with rows of lengths 1..n (indexed 1..n
/// top-down), consecutive rows interlacing; row n is the bounding tuple.
/// Instances are immutable and always valid.
class Pattern {
 public:
  static std::optional<Pattern> try_from_flat(int rows, std::vector<Entry> flat) {
    if (!flat_valid(rows, flat)) return std::nullopt;
    return Pattern(rows, std::move(flat));
  }

  static Pattern from_flat(int rows, std::vector<Entry> flat) {
    auto p = try_from_flat(rows, std::move(flat));
    if (!p) throw std::invalid_argument("gtcl: not a valid pattern");
    return *std::move(p);
  }

  static Pattern from_rows(const std::vector<std::vector<Entry>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw std::invalid_argument("gtcl: a pattern needs at least two rows");
    std::vector<Entry> flat;
    flat.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(rows[j].size()) != j + 1)
        throw std::invalid_argument("gtcl: pattern row " + std::to_string(j + 1) +
                                    " must have " + std::to_string(j + 1) + " entries");
      flat.insert(flat.end(), rows[j].begin(), rows[j].end());
    }
    return from_flat(n, std::move(flat));
  }

  /// Shape, monotonicity and interlacing of a flattened candidate.
  static bool flat_valid(int rows, const std::vector<Entry>& flat) {
    if (rows < 2) return false;
    if (flat.size() != static_cast<std::size_t>(rows) * (rows + 1) / 2) return false;
    for (int j = 1; j <= rows; ++j)
      for (int i = 1; i < j; ++i)
        if (flat[flat_offset(j) + i - 1] < flat[flat_offset(j) + i]) return false;
    for (int j = 2; j <= rows; ++j)
      for (int i = 1; i < j; ++i) {
        const Entry upper = flat[flat_offset(j) + i - 1];
        const Entry mid = flat[flat_offset(j - 1) + i - 1];
        const Entry lower = flat[flat_offset(j) + i];
        if (upper < mid || mid < lower) return false;
      }
    return true;
  }

  static std::size_t flat_offset(int row) {
    return static_cast<std::size_t>(row) * (row - 1) / 2;
  }

  int size() const { return size_; }        // number of rows, r+1
  int rank() const { return size_ - 1; }    // r

  Entry entry(int row, int pos) const {
    check_index(row, pos);
    return flat_[flat_offset(row) + pos - 1];
  }

  /// entry(row, pos) - pos + 1; strictly decreasing along every row.
  Entry shifted_entry(int row, int pos) const { return entry(row, pos) - pos + 1; }

  std::vector<Entry> row(int j) const {
    check_index(j, 1);
    return {flat_.begin() + static_cast<long>(flat_offset(j)),
            flat_.begin() + static_cast<long>(flat_offset(j)) + j};
  }

  Entry row_sum(int j) const {
    check_index(j, 1);
    Entry sum = 0;
    for (int i = 0; i < j; ++i) sum += flat_[flat_offset(j) + i];
    return sum;
  }

  std::vector<std::vector<Entry>> rows() const {
    std::vector<std::vector<Entry>> out;
    out.reserve(size_);
    for (int j = 1; j <= size_; ++j) out.push_back(row(j));
    return out;
  }

  BoundingTuple bounding() const { return BoundingTuple(row(size_)); }

  Pattern shifted(Entry offset) const {
    std::vector<Entry> flat = flat_;
    for (Entry& e : flat) e += offset;
    return Pattern(size_, std::move(flat));
  }

  const std::vector<Entry>& flat() const { return flat_; }

  bool operator==(const Pattern&) const = default;

 private:
  Pattern(int rows, std::vector<Entry> flat) : size_(rows), flat_(std::move(flat)) {}

  void check_index(int row, int pos) const {
    if (row < 1 || row > size_ || pos < 1 || pos > row)
      throw std::out_of_range("gtcl: pattern index out of range");
  }

  int size_ = 0;
  std::vector<Entry> flat_;
};

/// Canonical order: descending lexicographic on the concatenation of rows
/// read from row 1 down. This is a linear extension of row-wise dominance
/// with greater elements first.
struct PatternCanonicalBefore {
  bool operator()(const Pattern& a, const Pattern& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(b.flat().begin(), b.flat().end(),
                                        a.flat().begin(), a.flat().end());
  }
};

/// Total validity predicate over arbitrary row data.
inline bool is_valid_pattern(const std::vector<std::vector<Entry>>& rows,
                             const BoundingTuple& bounding) {
  const int n = bounding.size();
  if (static_cast<int>(rows.size()) != n) return false;
  std::vector<Entry> flat;
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(rows[j].size()) != j + 1) return false;
    flat.insert(flat.end(), rows[j].begin(), rows[j].end());
  }
  if (rows[n - 1] != bounding.entries()) return false;
  return Pattern::flat_valid(n, flat);
}

/// The unique pattern of weight equal to the bounding tuple: row j is the
/// length-j prefix of the bounding tuple.
inline Pattern highest_pattern(const BoundingTuple& bounding) {
  const int n = bounding.size();
  std::vector<Entry> flat;
  flat.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int j = 1; j <= n; ++j)
    flat.insert(flat.end(), bounding.entries().begin(), bounding.entries().begin() + j);
  return Pattern::from_flat(n, std::move(flat));
}

/// All integral patterns over the bounding tuple, in canonical order.
inline std::vector<Pattern> enumerate_patterns(const BoundingTuple& bounding) {
  const int n = bounding.size();
  std::vector<std::vector<Entry>> rows(n);
  rows[n - 1] = bounding.entries();
  for (int r = 0; r + 1 < n; ++r) rows[r].assign(r + 1, 0);

  std::vector<Pattern> out;
  // Fill rows bottom-up; each entry ranges over its interlacing interval.
  std::function<void(int, int)> fill = [&](int r, int pos) {
    if (r < 0) {
      std::vector<Entry> flat;
      flat.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
      for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
      out.push_back(Pattern::from_flat(n, std::move(flat)));
      return;
    }
    if (pos > r) {
      fill(r - 1, 0);
      return;
    }
    const std::vector<Entry>& below = rows[r + 1];
    for (Entry v = below[pos]; v >= below[pos + 1]; --v) {
      rows[r][pos] = v;
      fill(r, pos + 1);
    }
  };
  fill(n - 2, 0);
  std::sort(out.begin(), out.end(), PatternCanonicalBefore{});
  return out;
}

/// Successive row-sum differences.
inline WeightTuple weight(const Pattern& p) {
  std::vector<Entry> mu(p.size());
  Entry previous = 0;
  for (int k = 1; k <= p.size(); ++k) {
    const Entry sum = p.row_sum(k);
    mu[k - 1] = sum - previous;
    previous = sum;
  }
  return WeightTuple(std::move(mu));
}

/// Total of the entry increments between consecutive rows; zero exactly for
/// the highest pattern.
inline Entry length(const Pattern& p) {
  Entry total = 0;
  for (int j = 2; j <= p.size(); ++j)
    for (int i = 1; i < j; ++i) total += p.entry(j, i) - p.entry(j - 1, i);
  return total;
}

/// Row-wise dominance: every prefix sum of every row of a weakly exceeds
/// the matching prefix sum of b. Requires a common bounding tuple.
inline bool dominates(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size() || a.row(a.size()) != b.row(b.size()))
    throw std::invalid_argument("gtcl: dominance needs a common bounding tuple");
  for (int j = 1; j <= a.size(); ++j) {
    Entry prefix_a = 0, prefix_b = 0;
    for (int i = 1; i <= j; ++i) {
      prefix_a += a.entry(j, i);
      prefix_b += b.entry(j, i);
      if (prefix_a < prefix_b) return false;
    }
  }
  return true;
}

/// Bump entry (row, pos) by +/-1; absent when the result interlaces badly.
/// The bounding row is never modified (row <= rank).
inline std::optional<Pattern> apply_delta(const Pattern& p, int row, int pos, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("gtcl: delta sign must be +1 or -1");
  if (row < 1 || row > p.rank() || pos < 1 || pos > row)
    throw std::out_of_range("gtcl: delta position out of range");
  std::vector<Entry> flat = p.flat();
  flat[Pattern::flat_offset(row) + pos - 1] += sign;
  return Pattern::try_from_flat(p.size(), std::move(flat));
}

/// Pattern count per weight. Within a fixed bounding tuple all weights have
/// the same coordinate sum, so exact keys and class keys coincide.
inline std::map<WeightTuple, long long> weight_multiplicities(const BoundingTuple& bounding) {
  std::map<WeightTuple, long long> counts;
  for (const Pattern& p : enumerate_patterns(bounding)) {
    auto [it, inserted] = counts.try_emplace(weight(p), 0);
    ++it->second;
  }
  return counts;
}

/// Product formula for dim V(lambda), evaluated exactly.
inline Integer weyl_dimension(const BoundingTuple& bounding) {
  const std::vector<Entry>& lam = bounding.entries();
  const int n = bounding.size();
  Integer num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lam[i] - lam[j] + j - i;
      den *= j - i;
    }
  GTCL_ASSERT(num % den == 0, "Weyl product must divide exactly");
  return num / den;
}

namespace detail {

inline std::string strip_space(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text)
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  return out;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return parts;
}

inline Entry parse_entry(const std::string& token) {
  Entry value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("gtcl: malformed integer '" + token + "'");
  return value;
}

inline std::vector<Entry> parse_entry_list(const std::string& text) {
  std::vector<Entry> out;
  for (const std::string& token : split(text, ',')) out.push_back(parse_entry(token));
  return out;
}

inline std::string join_entries(const std::vector<Entry>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries[i]);
  }
  return out;
}

}  // namespace detail

inline BoundingTuple parse_bounding(const std::string& text) {
  return BoundingTuple(detail::parse_entry_list(detail::strip_space(text)));
}

inline std::string format_bounding(const BoundingTuple& bounding) {
  return detail::join_entries(bounding.entries());
}

inline WeightTuple parse_weight(const std::string& text) {
  return WeightTuple(detail::parse_entry_list(detail::strip_space(text)));
}

inline std::string format_weight(const WeightTuple& w) {
  return detail::join_entries(w.coords());
}

/// Text encoding "2;3,1;4,2,0": rows top-to-bottom separated by ';',
/// entries by ','.
inline Pattern parse_pattern(const std::string& text) {
  std::vector<std::vector<Entry>> rows;
  for (const std::string& part : detail::split(detail::strip_space(text), ';'))
    rows.push_back(detail::parse_entry_list(part));
  return Pattern::from_rows(rows);
}

/// As above, but the bounding row may be omitted from the text.
inline Pattern parse_pattern(const std::string& text, const BoundingTuple& bounding) {
  std::vector<std::vector<Entry>> rows;
  for (const std::string& part : detail::split(detail::strip_space(text), ';'))
    rows.push_back(detail::parse_entry_list(part));
  const int n = bounding.size();
  if (static_cast<int>(rows.size()) == n - 1) rows.push_back(bounding.entries());
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("gtcl: pattern text must have " + std::to_string(n) +
                                " rows (or omit the bounding row)");
  if (rows.back() != bounding.entries())
    throw std::invalid_argument("gtcl: pattern text disagrees with the bounding tuple");
  return Pattern::from_rows(rows);
}

inline std::string format_pattern(const Pattern& p) {
  std::string out;
  for (int j = 1; j <= p.size(); ++j) {
    if (j > 1) out.push_back(';');
    out += detail::join_entries(p.row(j));
  }
  return out;
}

/// Rows above the bounding row only; used where the bounding is clear from
/// context.
inline std::string format_pattern_inner(const Pattern& p) {
  std::string out;
  for (int j = 1; j < p.size(); ++j) {
    if (j > 1) out.push_back(';');
    out += detail::join_entries(p.row(j));
  }
  return out;
}

}  // namespace gtcl
