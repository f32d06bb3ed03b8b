#pragma once

// Arithmetic-progression predicates over the integers, the greedy Stanley
// sequence generator, and empirical detection of independence (character,
// repeat factor), the omitted set and the growth ratio.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stanley/arith.hpp"
#include "stanley/error.hpp"

namespace stanley {

namespace detail {

inline void require_strictly_increasing(std::span<const value_t> terms, const char* what) {
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] <= terms[i - 1])
      throw error(error_kind::malformed_input,
                  std::string(what) + ": terms must be strictly increasing (index " +
                      std::to_string(i) + ")");
  }
}

}  // namespace detail

/// True iff no i < j < k has 2*terms[j] == terms[i] + terms[k].
/// Two-pointer scan around each middle term, O(n^2).
inline bool is_3_free(std::span<const value_t> terms) {
  detail::require_strictly_increasing(terms, "is_3_free");
  const std::size_t n = terms.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const value_t twice = 2 * terms[j];
    std::size_t i = 0;
    std::size_t k = n - 1;
    while (i < j && k > j) {
      const value_t sum = terms[i] + terms[k];
      if (sum == twice) return false;
      if (sum < twice)
        ++i;
      else
        --k;
    }
  }
  return true;
}

/// True iff z = 2y - x for some terms x < y.
inline bool is_covered(value_t z, std::span<const value_t> terms) {
  detail::require_strictly_increasing(terms, "is_covered");
  for (value_t y : terms) {
    if (y >= z) break;  // x < y forces y < z
    const value_t twice = 2 * y;
    if (twice < z) continue;
    const value_t x = twice - z;
    if (std::binary_search(terms.begin(), terms.end(), x)) return true;
  }
  return false;
}

struct GreedyLimits {
  std::size_t max_terms = std::size_t{1} << 22;
  // Bound on the forbidden table, i.e. on twice the largest term.
  value_t max_value = value_t{1} << 32;
};

/// A strictly increasing, 3-free run of nonnegative integers whose first
/// generator_size() terms are the seed it was grown from.
class StanleyPrefix {
 public:
  /// Validates the seed; throws malformed_input or precondition.
  static StanleyPrefix from_seed(std::vector<value_t> seed) {
    if (seed.empty()) throw error(error_kind::precondition, "seed must not be empty");
    if (!is_3_free(seed)) throw error(error_kind::precondition, "seed is not 3-free");
    const std::size_t g = seed.size();
    return StanleyPrefix(std::move(seed), g);
  }

  std::span<const value_t> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t generator_size() const noexcept { return generator_size_; }
  value_t operator[](std::size_t i) const { return terms_[i]; }
  value_t back() const { return terms_.back(); }

  friend bool operator==(const StanleyPrefix&, const StanleyPrefix&) = default;

 private:
  friend StanleyPrefix greedy_extend(const StanleyPrefix&, std::size_t, const GreedyLimits&);

  StanleyPrefix(std::vector<value_t> terms, std::size_t generator_size)
      : terms_(std::move(terms)), generator_size_(generator_size) {}

  std::vector<value_t> terms_;
  std::size_t generator_size_;
};

/// The unique greedy extension of `seed` to `target_len` terms.
///
/// Keeps a growable table of integers covered by existing pairs; adding a term
/// c marks 2c - x for every earlier x, so each new term costs O(length).
inline StanleyPrefix greedy_extend(const StanleyPrefix& seed, std::size_t target_len,
                                   const GreedyLimits& limits = {}) {
  if (target_len < seed.size())
    throw error(error_kind::precondition, "target length " + std::to_string(target_len) +
                                              " is shorter than the seed");
  if (target_len > limits.max_terms)
    throw error(error_kind::resource_limit, "target length " + std::to_string(target_len) +
                                                " exceeds cap " + std::to_string(limits.max_terms));

  std::vector<value_t> terms(seed.terms().begin(), seed.terms().end());
  terms.reserve(target_len);

  std::vector<bool> forbidden;
  auto ensure = [&](value_t top) {
    if (top >= limits.max_value)
      throw error(error_kind::resource_limit,
                  "greedy table would exceed " + std::to_string(limits.max_value));
    if (top < forbidden.size()) return;
    const auto grown = std::max<std::size_t>(forbidden.size() * 2, static_cast<std::size_t>(top) + 1);
    forbidden.resize(static_cast<std::size_t>(std::min<value_t>(grown, limits.max_value)));
  };

  ensure(2 * terms.back());
  for (std::size_t j = 1; j < terms.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) forbidden[2 * terms[j] - terms[i]] = true;

  value_t candidate = terms.back() + 1;
  while (terms.size() < target_len) {
    while (candidate < forbidden.size() && forbidden[candidate]) ++candidate;
    ensure(2 * candidate);
    for (value_t x : terms) forbidden[2 * candidate - x] = true;
    terms.push_back(candidate);
    ++candidate;
  }
  return StanleyPrefix(std::move(terms), seed.generator_size());
}

/// lambda, kappa and repeat factor of an empirically independent prefix.
struct CharacterProfile {
  value_t lambda = 0;
  unsigned kappa = 0;
  value_t repeat_factor = 0;
  // Largest doubling level k (2^(k+1) <= length) at which both identities held.
  unsigned verified_up_to_k = 0;

  unsigned levels() const noexcept { return verified_up_to_k - kappa + 1; }

  friend bool operator==(const CharacterProfile&, const CharacterProfile&) = default;
};

/// Finds the least kappa such that, for every level k from kappa up to the
/// last level the prefix can witness, a[2^k + i] == a[2^k] + a[i] for all
/// i < 2^k and a[2^k] == 2 a[2^k - 1] - lambda + 1 with a single lambda >= 0.
inline std::optional<CharacterProfile> detect_character(std::span<const value_t> terms) {
  if (terms.size() < 4)
    throw error(error_kind::prefix_too_short,
                "character detection needs at least 4 terms, got " + std::to_string(terms.size()));

  unsigned top = 0;
  while ((std::size_t{1} << (top + 2)) <= terms.size()) ++top;

  // lambda at level k, or nullopt when the additive identity fails there or
  // the implied lambda would be negative.
  auto level_lambda = [&](unsigned k) -> std::optional<value_t> {
    const std::size_t p = std::size_t{1} << k;
    const value_t head = terms[p];
    const value_t prev = terms[p - 1];
    if (head > 2 * prev + 1) return std::nullopt;
    for (std::size_t i = 0; i < p; ++i)
      if (terms[p + i] != head + terms[i]) return std::nullopt;
    return 2 * prev + 1 - head;
  };

  std::vector<std::optional<value_t>> per_level(top + 1);
  for (unsigned k = 0; k <= top; ++k) per_level[k] = level_lambda(k);

  // The admissible kappas form a suffix; walk down from the top level.
  if (!per_level[top]) return std::nullopt;
  unsigned kappa = top;
  while (kappa > 0 && per_level[kappa - 1] && *per_level[kappa - 1] == *per_level[top]) --kappa;

  return CharacterProfile{*per_level[top], kappa, terms[std::size_t{1} << kappa], top};
}

inline std::optional<CharacterProfile> detect_character(const StanleyPrefix& prefix) {
  return detect_character(prefix.terms());
}

struct OmittedSet {
  std::vector<value_t> elements;
  std::optional<value_t> omega;  // max(elements), empty when nothing is omitted
  value_t scan_bound = 0;
};

/// Integers in [0, bound) that are neither terms nor covered by two terms.
/// Coverage of z only involves terms below z, so the answer is exact once the
/// prefix reaches bound.
inline OmittedSet omitted_set(std::span<const value_t> terms, value_t bound) {
  detail::require_strictly_increasing(terms, "omitted_set");
  if (terms.empty() || terms.back() < bound)
    throw error(error_kind::insufficient_prefix,
                "prefix must reach the scan bound " + std::to_string(bound));

  std::vector<bool> hit(static_cast<std::size_t>(bound), false);
  const auto below = static_cast<std::size_t>(
      std::lower_bound(terms.begin(), terms.end(), bound) - terms.begin());
  for (std::size_t j = 0; j < below; ++j) {
    hit[terms[j]] = true;
    for (std::size_t i = 0; i < j; ++i) {
      const value_t z = 2 * terms[j] - terms[i];
      if (z < bound) hit[z] = true;
    }
  }

  OmittedSet out;
  out.scan_bound = bound;
  for (value_t z = 0; z < bound; ++z)
    if (!hit[z]) out.elements.push_back(z);
  if (!out.elements.empty()) out.omega = out.elements.back();
  return out;
}

inline OmittedSet omitted_set(const StanleyPrefix& prefix, value_t bound) {
  return omitted_set(prefix.terms(), bound);
}

struct GrowthEstimate {
  double liminf_est;
  double limsup_est;
};

/// min and max of a_n / n^(log2 3) over the second half of the prefix.
inline GrowthEstimate growth_diagnostic(std::span<const value_t> terms) {
  if (terms.size() < 8)
    throw error(error_kind::prefix_too_short,
                "growth diagnostic needs at least 8 terms, got " + std::to_string(terms.size()));
  const double exponent = std::log2(3.0);
  GrowthEstimate g{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t n = terms.size() / 2; n < terms.size(); ++n) {
    const double ratio = static_cast<double>(terms[n]) / std::pow(static_cast<double>(n), exponent);
    g.liminf_est = std::min(g.liminf_est, ratio);
    g.limsup_est = std::max(g.limsup_est, ratio);
  }
  return g;
}

inline GrowthEstimate growth_diagnostic(const StanleyPrefix& prefix) {
  return growth_diagnostic(prefix.terms());
}

}  // namespace stanley
