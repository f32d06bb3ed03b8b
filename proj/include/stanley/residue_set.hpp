#pragma once

// Residue-set calculus: modular and near-modular verification, the product
// A (x) B = A + N*B, scaling, max-shifting, and conversion of a near-modular
// set into a modular one.

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/arith.hpp"
#include "stanley/error.hpp"

namespace stanley {

/// A finite set of nonnegative integers containing 0, paired with a modulus.
/// Elements are stored ascending; nothing about 3-freeness or coverage is
/// enforced here, that is what verify() reports.
class ResidueSet {
 public:
  ResidueSet(value_t modulus, std::vector<value_t> elements) : modulus_(modulus), elements_(std::move(elements)) {
    if (modulus_ == 0) throw error(error_kind::malformed_input, "modulus must be positive");
    if (modulus_ >= (value_t{1} << 62)) throw error(error_kind::overflow, "modulus too large");
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
      throw error(error_kind::malformed_input, "duplicate element");
    if (elements_.empty() || elements_.front() != 0)
      throw error(error_kind::malformed_input, "set must contain 0");
  }

  value_t modulus() const noexcept { return modulus_; }
  std::span<const value_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  value_t max() const noexcept { return elements_.back(); }
  bool contains(value_t v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  value_t modulus_;
  std::vector<value_t> elements_;
};

inline bool is_mod_ap(value_t x, value_t y, value_t z, value_t n) {
  if (n == 0) throw error(error_kind::precondition, "modulus must be positive");
  return mod_2y_minus_x(x, y, n) == z % n;
}

/// Some x <= y in A with 2y - x == z (mod N); x == y is allowed.
inline bool is_mod_covered(value_t z, const ResidueSet& a) {
  const auto e = a.elements();
  const value_t n = a.modulus();
  for (std::size_t j = 0; j < e.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (mod_2y_minus_x(e[i], e[j], n) == z % n) return true;
  return false;
}

struct VerificationReport {
  bool is_three_free_mod = false;
  std::vector<value_t> uncovered_residues;
  bool is_near_modular = false;
  bool is_modular = false;
  // (x, y, z) with x + z == 2y (mod N), not all equal.
  std::optional<std::array<value_t, 3>> witness_violation;
};

/// Checks 3-freeness mod N (no triple in A^3, not all equal, with
/// x + z == 2y mod N) and mod-coverage of every residue 0..N-1.
inline VerificationReport verify(const ResidueSet& a) {
  const auto e = a.elements();
  const value_t n = a.modulus();
  VerificationReport report;

  // (residue, element) sorted by residue: equal_range gives every element in
  // a residue class.
  std::vector<std::pair<value_t, value_t>> by_residue;
  by_residue.reserve(e.size());
  for (value_t v : e) by_residue.emplace_back(v % n, v);
  std::sort(by_residue.begin(), by_residue.end());

  for (std::size_t j = 0; j < e.size() && !report.witness_violation; ++j) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      // z completes (x, y, z) as a mod-AP.
      const value_t r = mod_2y_minus_x(e[i], e[j], n);
      auto [lo, hi] = std::equal_range(by_residue.begin(), by_residue.end(), std::pair{r, value_t{0}},
                                       [](const auto& p, const auto& q) { return p.first < q.first; });
      for (auto it = lo; it != hi; ++it) {
        const value_t z = it->second;
        if (e[i] == e[j] && z == e[j]) continue;
        report.witness_violation = std::array{e[i], e[j], z};
        break;
      }
      if (report.witness_violation) break;
    }
  }
  report.is_three_free_mod = !report.witness_violation;

  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (std::size_t j = 0; j < e.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) covered[mod_2y_minus_x(e[i], e[j], n)] = true;
  for (value_t r = 0; r < n; ++r)
    if (!covered[r]) report.uncovered_residues.push_back(r);

  report.is_near_modular = report.is_three_free_mod && report.uncovered_residues.empty();
  report.is_modular = report.is_near_modular && a.max() < n;
  return report;
}

inline bool is_near_modular(const ResidueSet& a) { return verify(a).is_near_modular; }

inline constexpr std::size_t max_set_size = std::size_t{1} << 24;

/// A (x) B = {a + N*b}, modulus N*M. The decomposition of each sum must be
/// unique; a collision is reported as an invariant violation.
inline ResidueSet product(const ResidueSet& a, const ResidueSet& b) {
  const value_t n = a.modulus();
  const value_t modulus = checked_mul(n, b.modulus());
  if (checked_mul(a.size(), b.size()) > max_set_size)
    throw error(error_kind::resource_limit, "product would have " + std::to_string(a.size() * b.size()) + " elements");
  std::vector<value_t> out;
  out.reserve(a.size() * b.size());
  for (value_t y : b.elements()) {
    const value_t base = checked_mul(n, y);
    for (value_t x : a.elements()) out.push_back(checked_add(x, base));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw error(error_kind::invariant_violation, "product sums are not unique");
  return ResidueSet(modulus, std::move(out));
}

/// c*A with the same modulus; requires gcd(c, N) == 1.
inline ResidueSet scale(const ResidueSet& a, value_t c) {
  if (c == 0 || std::gcd(c, a.modulus()) != 1)
    throw error(error_kind::precondition, "scale factor " + std::to_string(c) +
                                              " is not coprime to modulus " + std::to_string(a.modulus()));
  std::vector<value_t> out;
  out.reserve(a.size());
  for (value_t v : a.elements()) out.push_back(checked_mul(v, c));
  return ResidueSet(a.modulus(), std::move(out));
}

/// Replaces max(A) by max(A) + multiples*N. Residues are unchanged.
inline ResidueSet shift_max(const ResidueSet& a, value_t multiples) {
  if (multiples == 0) throw error(error_kind::precondition, "shift count must be positive");
  if (a.size() < 2) throw error(error_kind::precondition, "cannot shift the only element 0");
  std::vector<value_t> out(a.elements().begin(), a.elements().end());
  out.back() = checked_add(out.back(), checked_mul(multiples, a.modulus()));
  return ResidueSet(a.modulus(), std::move(out));
}

inline const ResidueSet& zero_one_mod3() {
  static const ResidueSet s(3, {0, 1});
  return s;
}

struct ModularForm {
  ResidueSet set;
  unsigned k;  // number of (x) {0,1} factors applied
};

/// Smallest k with max(L (x) {0,1}^k) = t + N(3^k - 1)/2 < N*3^k.
/// L is assumed near-modular; the result is then modular mod N*3^k.
inline unsigned to_modular_exponent(value_t modulus, value_t max_element) {
  unsigned k = 0;
  value_t power = 1;   // 3^k
  value_t partial = 0; // (3^k - 1)/2
  while (checked_add(max_element, checked_mul(modulus, partial)) >= checked_mul(modulus, power)) {
    partial = checked_add(partial, power);
    power = checked_mul(power, 3);
    ++k;
  }
  return k;
}

inline ModularForm to_modular(const ResidueSet& l) {
  const unsigned k = to_modular_exponent(l.modulus(), l.max());
  ResidueSet cur = l;
  for (unsigned i = 0; i < k; ++i) cur = product(cur, zero_one_mod3());
  return {std::move(cur), k};
}

/// lambda = 2t + 1 - N for max element t.
inline value_t character_of(const ResidueSet& l) {
  const value_t twice_plus_one = checked_add(checked_mul(2, l.max()), 1);
  if (twice_plus_one < l.modulus())
    throw error(error_kind::negative_character,
                "2*" + std::to_string(l.max()) + "+1 < " + std::to_string(l.modulus()));
  return twice_plus_one - l.modulus();
}

// ---------------------------------------------------------------------------
// Set file format: `N=<modulus>; <e1>,<e2>,...,<ek>`, one set per line,
// elements ascending decimal, `#` starts a comment line. Whitespace around
// tokens is ignored when reading; writing is canonical.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline value_t parse_decimal(std::string_view token, std::string_view context) {
  token = trim(token);
  if (token.empty()) throw error(error_kind::malformed_input, "empty number in '" + std::string(context) + "'");
  if (token.size() > 1 && token.front() == '0')
    throw error(error_kind::malformed_input, "leading zero in '" + std::string(token) + "'");
  value_t v = 0;
  for (char c : token) {
    if (c < '0' || c > '9')
      throw error(error_kind::malformed_input, "bad digit in '" + std::string(token) + "'");
    v = checked_add(checked_mul(v, 10), static_cast<value_t>(c - '0'));
  }
  return v;
}

}  // namespace detail

/// Raw element tokens of a set line, split but not yet interpreted.
struct SetLineTokens {
  value_t modulus;
  std::vector<std::string> elements;
};

inline SetLineTokens tokenize_set_line(std::string_view line) {
  const std::string_view body = detail::trim(line);
  const auto semi = body.find(';');
  if (semi == std::string_view::npos)
    throw error(error_kind::malformed_input, "missing ';' in '" + std::string(line) + "'");
  std::string_view head = detail::trim(body.substr(0, semi));
  if (head.size() < 2 || head[0] != 'N' || detail::trim(head.substr(1)).front() != '=')
    throw error(error_kind::malformed_input, "expected 'N=<modulus>' in '" + std::string(line) + "'");
  head = detail::trim(head.substr(1));
  SetLineTokens out{detail::parse_decimal(head.substr(1), line), {}};

  std::string_view rest = body.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    out.elements.emplace_back(detail::trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

inline ResidueSet parse_set_line(std::string_view line) {
  const SetLineTokens tokens = tokenize_set_line(line);
  std::vector<value_t> elements;
  elements.reserve(tokens.elements.size());
  for (const auto& t : tokens.elements) elements.push_back(detail::parse_decimal(t, line));
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw error(error_kind::malformed_input, "elements must be ascending in '" + std::string(line) + "'");
  return ResidueSet(tokens.modulus, std::move(elements));
}

inline std::string format_set(const ResidueSet& a) {
  std::string out = "N=" + std::to_string(a.modulus()) + ";";
  char sep = ' ';
  for (value_t v : a.elements()) {
    out += sep;
    out += std::to_string(v);
    sep = ',';
  }
  return out;
}

inline bool is_blank_or_comment(std::string_view line) {
  const auto t = detail::trim(line);
  return t.empty() || t.front() == '#';
}

inline std::vector<ResidueSet> read_sets(std::istream& in) {
  std::vector<ResidueSet> out;
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    out.push_back(parse_set_line(line));
  }
  return out;
}

}  // namespace stanley
