#pragma once

// Exhaustive search for near-modular sets with a prescribed modulus, maximum
// and size, plus a deliberately naive greedy/character oracle that shares no
// code with apset.hpp and is used to cross-check it.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "stanley/apset.hpp"
#include "stanley/arith.hpp"
#include "stanley/error.hpp"
#include "stanley/residue_set.hpp"

namespace stanley {

inline constexpr std::uint64_t default_node_budget = 1'000'000'000;

struct SearchSpec {
  value_t modulus = 1;
  value_t max_element = 0;
  std::size_t cardinality = 2;
  // When false, 0 is not forced and the smallest element is searched as well.
  bool require_zero = true;
  std::uint64_t budget = default_node_budget;
};

struct SearchOptions {
  unsigned threads = 1;
  // Partitions before this index are skipped (resume token of an earlier run).
  std::size_t first_partition = 0;
  // Off: no 3-free or counting cuts, every leaf goes through verify().
  bool prune = true;
};

enum class search_outcome { found, exhausted, budget_exceeded };

inline std::string_view to_string(search_outcome o) {
  switch (o) {
    case search_outcome::found: return "found";
    case search_outcome::exhausted: return "exhausted";
    case search_outcome::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

struct SearchResult {
  search_outcome outcome = search_outcome::exhausted;
  std::vector<value_t> witness;  // ascending, empty unless found
  value_t modulus = 1;
  std::uint64_t nodes = 0;
  std::size_t partitions = 0;
  // Resume token: first partition that was not fully scanned.
  std::size_t next_partition = 0;

  ResidueSet witness_set() const { return ResidueSet(modulus, witness); }
};

namespace detail {

// Incremental residue state for one DFS. forbid[r] > 0 means adding an
// element with residue r would close a mod-AP; cover[r] counts the pairs
// x <= y with 2y - x == r.
class residue_state {
 public:
  explicit residue_state(value_t n)
      : n_(n), forbid_(static_cast<std::size_t>(n), 0), cover_(static_cast<std::size_t>(n), 0), uncovered_(n) {}

  bool blocked(value_t x) const { return forbid_[x % n_] != 0; }
  std::size_t size() const { return chosen_.size(); }
  value_t uncovered() const { return uncovered_; }
  std::span<const value_t> chosen() const { return chosen_; }

  void push(value_t x) {
    apply(x, +1);
    chosen_.push_back(x);
  }

  void pop() {
    const value_t x = chosen_.back();
    chosen_.pop_back();
    apply(x, -1);
  }

 private:
  void bump_forbid(value_t r, int d) { forbid_[r] = static_cast<std::uint32_t>(forbid_[r] + d); }

  void bump_cover(value_t r, int d) {
    if (d > 0 && cover_[r]++ == 0) --uncovered_;
    if (d < 0 && --cover_[r] == 0) ++uncovered_;
  }

  // Residues r with 2r == v (mod n).
  void bump_halves(value_t v, int d) {
    if (n_ % 2 == 1) {
      bump_forbid((v % 2 == 0) ? v / 2 : (v + n_) / 2, d);
    } else if (v % 2 == 0) {
      bump_forbid(v / 2, d);
      bump_forbid(v / 2 + n_ / 2, d);
    }
  }

  void apply(value_t x, int d) {
    const value_t rx = x % n_;
    for (value_t z : chosen_) {
      const value_t rz = z % n_;
      bump_forbid((2 * rx + n_ - rz) % n_, d);
      bump_forbid((2 * rz + n_ - rx) % n_, d);
      bump_halves((rx + rz) % n_, d);
      bump_cover(x <= z ? mod_2y_minus_x(x, z, n_) : mod_2y_minus_x(z, x, n_), d);
    }
    bump_forbid(rx, d);
    bump_halves((2 * rx) % n_, d);
    bump_cover(rx, d);
  }

  value_t n_;
  std::vector<std::uint32_t> forbid_;
  std::vector<std::uint32_t> cover_;
  value_t uncovered_;
  std::vector<value_t> chosen_;
};

enum class partition_status { found, exhausted, aborted };

struct shared_search {
  const SearchSpec& spec;
  const SearchOptions& options;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best{SIZE_MAX};
};

class partition_scan {
 public:
  partition_scan(shared_search& shared, std::size_t partition, value_t lo, std::size_t middle)
      : shared_(shared), partition_(partition), lo_(lo), middle_(middle), state_(shared.spec.modulus) {}

  partition_status run(value_t top_choice) {
    const auto& spec = shared_.spec;
    if (spec.require_zero) state_.push(0);
    state_.push(spec.max_element);
    const bool ok = descend_with(top_choice, middle_);
    flush();
    if (ok) return partition_status::found;
    return aborted_ ? partition_status::aborted : partition_status::exhausted;
  }

  std::vector<value_t> witness() const {
    std::vector<value_t> w(state_.chosen().begin(), state_.chosen().end());
    std::sort(w.begin(), w.end());
    return w;
  }

 private:
  bool should_stop() {
    if (++local_nodes_ >= 4096) flush();
    if (shared_.out_of_budget.load(std::memory_order_relaxed) ||
        shared_.best.load(std::memory_order_relaxed) < partition_) {
      aborted_ = true;
      return true;
    }
    return false;
  }

  void flush() {
    const auto total = shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed) + local_nodes_;
    local_nodes_ = 0;
    if (total > shared_.spec.budget) shared_.out_of_budget.store(true, std::memory_order_relaxed);
  }

  // Upper bound on residues the remaining picks can newly cover: the j-th
  // added element forms at most (current size + j + 1) new pairs.
  bool coverage_reachable(std::size_t remaining) const {
    const std::size_t c = state_.size();
    const value_t bound = remaining * c + remaining * (remaining + 1) / 2;
    return state_.uncovered() <= bound;
  }

  bool leaf_ok() const {
    if (shared_.options.prune) return state_.uncovered() == 0;
    return verify(ResidueSet(shared_.spec.modulus, witness())).is_near_modular;
  }

  // Adds v (one of `remaining` picks still owed) and recurses below it.
  bool descend_with(value_t v, std::size_t remaining) {
    if (should_stop()) return false;
    const bool prune = shared_.options.prune;
    if (prune && state_.blocked(v)) return false;
    state_.push(v);
    if (!prune || coverage_reachable(remaining - 1)) {
      if (descend(v, remaining - 1)) return true;
    }
    state_.pop();
    return false;
  }

  // Choose `remaining` more elements from [lo_, upper), colex order.
  bool descend(value_t upper, std::size_t remaining) {
    if (remaining == 0) return leaf_ok();
    for (value_t v = lo_ + remaining - 1; v < upper; ++v) {
      if (descend_with(v, remaining)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  shared_search& shared_;
  std::size_t partition_;
  value_t lo_;
  std::size_t middle_;
  residue_state state_;
  std::uint64_t local_nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

/// First near-modular set (in colex order of the free elements) containing
/// 0 and max_element with the requested cardinality.
///
/// The free elements are chosen from [1, max) largest first; the choice of the
/// largest free element defines the partition. Partitions run in parallel but
/// the reported witness is always the one from the earliest partition.
inline SearchResult search_near_modular(const SearchSpec& spec, const SearchOptions& options = {}) {
  const value_t n = spec.modulus;
  const value_t t = spec.max_element;
  if (n == 0) throw error(error_kind::precondition, "modulus must be positive");
  if (n > (value_t{1} << 30)) throw error(error_kind::resource_limit, "modulus too large for residue tables");
  if (spec.cardinality < 2 || t + 1 < spec.cardinality)
    throw error(error_kind::precondition, "need cardinality >= 2 and max >= cardinality - 1");
  if (!spec.require_zero && t + 1 < spec.cardinality)
    throw error(error_kind::precondition, "not enough candidates below the maximum");

  const value_t lo = spec.require_zero ? 1 : 0;
  const std::size_t middle = spec.cardinality - (spec.require_zero ? 2 : 1);

  SearchResult result;
  result.modulus = n;

  // Partition p fixes the largest free element to first_top + p.
  const value_t first_top = lo + (middle == 0 ? 0 : middle - 1);
  const std::size_t partitions = middle == 0 ? 1 : static_cast<std::size_t>(t - first_top);
  result.partitions = partitions;

  detail::shared_search shared{spec, options};
  std::vector<detail::partition_status> status(partitions, detail::partition_status::aborted);
  std::vector<std::vector<value_t>> found(partitions);

  std::atomic<std::size_t> next{std::min(options.first_partition, partitions)};
  auto worker = [&] {
    while (true) {
      const std::size_t p = next.fetch_add(1);
      if (p >= partitions || p > shared.best.load() || shared.out_of_budget.load()) return;
      if (middle == 0) {
        // Only {0, t}: nothing free to choose.
        detail::residue_state s(n);
        s.push(0);
        bool ok = !s.blocked(t);
        s.push(t);
        ok = ok && s.uncovered() == 0;
        if (!options.prune) ok = verify(ResidueSet(n, {0, t})).is_near_modular;
        shared.nodes.fetch_add(1);
        status[p] = ok ? detail::partition_status::found : detail::partition_status::exhausted;
        if (ok) found[p] = {0, t};
      } else {
        detail::partition_scan scan(shared, p, lo, middle);
        status[p] = scan.run(first_top + p);
        if (status[p] == detail::partition_status::found) found[p] = scan.witness();
      }
      if (status[p] == detail::partition_status::found) {
        std::size_t cur = shared.best.load();
        while (p < cur && !shared.best.compare_exchange_weak(cur, p)) {
        }
      }
    }
  };

  // {0, t} itself may already close a mod-AP; then nothing can be found.
  const bool forced_pair_ok = !spec.require_zero || [&] {
    detail::residue_state s(n);
    s.push(0);
    return !s.blocked(t);
  }();

  if (forced_pair_ok || !options.prune) {
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
  } else {
    std::fill(status.begin(), status.end(), detail::partition_status::exhausted);
  }
  result.nodes = shared.nodes.load();

  for (std::size_t p = 0; p < partitions; ++p) {
    if (p < options.first_partition) continue;
    if (status[p] == detail::partition_status::found) {
      result.outcome = search_outcome::found;
      result.witness = found[p];
      result.next_partition = p + 1;
      return result;
    }
    if (status[p] == detail::partition_status::aborted) {
      result.outcome = search_outcome::budget_exceeded;
      result.next_partition = p;
      return result;
    }
  }
  result.outcome = search_outcome::exhausted;
  result.next_partition = partitions;
  return result;
}

// ---------------------------------------------------------------------------
// Naive oracle: greedy by pairwise rescans, character by brute-force kappa.

namespace oracle {

inline bool naive_3_free(std::span<const value_t> s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (s[i] + s[k] == 2 * s[j]) return false;
  return true;
}

inline std::vector<value_t> naive_greedy(std::vector<value_t> seq, std::size_t length) {
  value_t c = seq.back();
  while (seq.size() < length) {
    ++c;
    bool clash = false;
    for (std::size_t i = 0; i < seq.size() && !clash; ++i)
      for (std::size_t j = i + 1; j < seq.size() && !clash; ++j)
        clash = (2 * seq[j] - seq[i] == c);
    if (!clash) seq.push_back(c);
  }
  return seq;
}

}  // namespace oracle

/// Same contract as detect_character, computed from a naive greedy run of
/// 2^(levels+1) terms.
inline std::optional<CharacterProfile> brute_character(std::vector<value_t> seed, unsigned levels) {
  if (levels < 1 || levels > 6) throw error(error_kind::precondition, "levels must be in [1, 6]");
  if (seed.empty()) throw error(error_kind::precondition, "seed must not be empty");
  for (std::size_t i = 1; i < seed.size(); ++i)
    if (seed[i] <= seed[i - 1]) throw error(error_kind::malformed_input, "seed must be strictly increasing");
  if (!oracle::naive_3_free(seed)) throw error(error_kind::precondition, "seed is not 3-free");

  const std::size_t length = std::max<std::size_t>(seed.size(), std::size_t{1} << (levels + 1));
  const std::vector<value_t> a = oracle::naive_greedy(std::move(seed), length);

  unsigned top = 0;
  while ((std::size_t{2} << (top + 1)) <= a.size()) ++top;

  for (unsigned kappa = 0; kappa <= top; ++kappa) {
    std::optional<std::int64_t> lambda;
    bool ok = true;
    for (unsigned k = kappa; k <= top && ok; ++k) {
      const std::size_t p = std::size_t{1} << k;
      const auto l = 2 * static_cast<std::int64_t>(a[p - 1]) + 1 - static_cast<std::int64_t>(a[p]);
      ok = l >= 0 && (!lambda || *lambda == l);
      lambda = l;
      for (std::size_t i = 0; i < p && ok; ++i) ok = a[p + i] == a[p] + a[i];
    }
    if (ok) return CharacterProfile{static_cast<value_t>(*lambda), kappa, a[std::size_t{1} << kappa], top};
  }
  return std::nullopt;
}

}  // namespace stanley
