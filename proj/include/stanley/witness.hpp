#pragma once

// Character coverage: for an admissible lambda, pick a construction whose
// near-modular set L has 2*max(L) + 1 - N == lambda, build it, verify it and
// optionally confirm the character on the greedy sequence of its modular form.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "stanley/apset.hpp"
#include "stanley/appendix.hpp"
#include "stanley/arith.hpp"
#include "stanley/error.hpp"
#include "stanley/families.hpp"
#include "stanley/residue_set.hpp"
#include "stanley/search.hpp"

namespace stanley {

inline constexpr std::array<value_t, 6> forbidden_characters{1, 3, 5, 9, 11, 15};

inline bool is_forbidden_character(value_t lambda) {
  return std::find(forbidden_characters.begin(), forbidden_characters.end(), lambda) != forbidden_characters.end();
}

enum class strategy { trivial_zero, even_ladder, mod30_table, mod60_family, mod28_table, small_case_search };

inline std::string_view to_string(strategy s) {
  switch (s) {
    case strategy::trivial_zero: return "trivial_zero";
    case strategy::even_ladder: return "even_ladder";
    case strategy::mod30_table: return "mod30_table";
    case strategy::mod60_family: return "mod60_family";
    case strategy::mod28_table: return "mod28_table";
    case strategy::small_case_search: return "small_case_search";
  }
  return "?";
}

/// A construction plan: build `base`, raise its maximum shift_count times by
/// its modulus, and the result has max expected_t and modulus expected_N.
struct WitnessRecipe {
  value_t target_lambda = 0;
  strategy kind = strategy::trivial_zero;
  std::variant<ResidueSet, FamilyId> base{ResidueSet(1, {0})};
  value_t shift_count = 0;
  value_t expected_t = 0;
  value_t expected_N = 1;
  std::string label;  // e.g. "row:46", "Atk:3,7", "search:N=10,s=4"
};

enum class verification_depth { shallow, deep };

inline std::string_view to_string(verification_depth d) {
  return d == verification_depth::deep ? "deep" : "shallow";
}

struct VerifiedWitness {
  WitnessRecipe recipe;
  ResidueSet set;
  value_t character = 0;
  value_t modular_modulus = 0;  // modulus of the modular form, computed either way
  verification_depth depth = verification_depth::shallow;
  std::optional<CharacterProfile> profile;
  std::optional<OmittedSet> omitted;
};

struct CoverageRecord {
  value_t lambda = 0;
  bool pass = false;
  std::optional<VerifiedWitness> witness;
  std::string failure;
};

struct CoverageReport {
  value_t lambda_max = 0;
  value_t deep_cap = 0;
  std::vector<CoverageRecord> records;  // ascending lambda

  bool all_pass() const {
    return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  }
  std::size_t pass_count() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
  }
};

struct WitnessOptions {
  value_t deep_cap = 100'000;
  // Small odd characters: moduli scanned and set sizes tried, in order.
  value_t small_search_max_modulus = 100;
  std::vector<std::size_t> small_search_sizes{4, 8, 16};
  std::uint64_t small_search_budget = 50'000'000;
  unsigned threads = 1;
  AppendixLoadOptions appendix{};
};

class WitnessEngine {
 public:
  explicit WitnessEngine(WitnessOptions options = {})
      : options_(std::move(options)),
        mod28_(load_appendix_mod28(options_.appendix)),
        mod30_(load_appendix_mod30(options_.appendix)) {}

  const AppendixTable& mod28() const { return mod28_; }
  const AppendixTable& mod30() const { return mod30_; }
  const WitnessOptions& options() const { return options_; }

  WitnessRecipe witness_for(value_t lambda) const {
    if (is_forbidden_character(lambda))
      throw error(error_kind::forbidden_character, std::to_string(lambda) + " is not a character");
    if (lambda == 0) return trivial_zero();
    if (lambda % 2 == 0) return even_ladder(lambda);
    if (lambda % 30 == 1) {
      const auto [n, u] = split_powers_of_three((lambda - 1) / 10);
      if (u > 2) return mod60_family(lambda, n, u);
      if (lambda >= 87) return table_recipe(lambda, mod28_, 57, strategy::mod28_table);
      return small_case(lambda);
    }
    if (lambda >= 61) return table_recipe(lambda, mod30_, 46, strategy::mod30_table);
    return small_case(lambda);
  }

  VerifiedWitness execute_and_verify(const WitnessRecipe& recipe, bool deep) const {
    auto fail = [&](const std::string& what) {
      throw error(error_kind::verification_failure, "lambda=" + std::to_string(recipe.target_lambda) + ": " + what);
    };
    if (2 * recipe.expected_t + 1 < recipe.expected_N ||
        2 * recipe.expected_t + 1 - recipe.expected_N != recipe.target_lambda)
      fail("recipe arithmetic does not give the target");

    ResidueSet set = std::holds_alternative<FamilyId>(recipe.base) ? build(std::get<FamilyId>(recipe.base))
                                                                   : std::get<ResidueSet>(recipe.base);
    if (recipe.shift_count > 0) set = shift_max(set, recipe.shift_count);

    const VerificationReport report = verify(set);
    if (!report.is_three_free_mod) {
      const auto& v = *report.witness_violation;
      fail("not 3-free mod " + std::to_string(set.modulus()) + " (" + std::to_string(v[0]) + "," +
           std::to_string(v[1]) + "," + std::to_string(v[2]) + ")");
    }
    if (!report.uncovered_residues.empty())
      fail("residue " + std::to_string(report.uncovered_residues.front()) + " is not mod-covered");
    if (set.max() != recipe.expected_t)
      fail("max is " + std::to_string(set.max()) + ", expected " + std::to_string(recipe.expected_t));
    if (set.modulus() != recipe.expected_N)
      fail("modulus is " + std::to_string(set.modulus()) + ", expected " + std::to_string(recipe.expected_N));

    VerifiedWitness out{recipe, set, character_of(set), 0, verification_depth::shallow, std::nullopt, std::nullopt};
    if (out.character != recipe.target_lambda) fail("character_of gives " + std::to_string(out.character));

    const unsigned k = to_modular_exponent(set.modulus(), set.max());
    out.modular_modulus = checked_mul(set.modulus(), checked_pow(3, k));
    if (!deep || out.modular_modulus > options_.deep_cap) return out;

    if (!is_power_of_two(set.size())) fail("|L| = " + std::to_string(set.size()) + " is not a power of two");
    const ModularForm modular = to_modular(set);
    if (!verify(modular.set).is_modular) fail("modular form does not verify as modular");

    const auto elements = modular.set.elements();
    const StanleyPrefix seed = StanleyPrefix::from_seed({elements.begin(), elements.end()});
    const StanleyPrefix prefix = greedy_extend(seed, std::max<std::size_t>(4 * modular.set.size(), 16));
    const auto profile = detect_character(prefix);
    if (!profile) fail("greedy sequence shows no consistent character");
    if (profile->lambda != recipe.target_lambda) fail("detected character " + std::to_string(profile->lambda));
    if (profile->levels() < 2) fail("only " + std::to_string(profile->levels()) + " doubling level(s) verified");

    OmittedSet omitted = omitted_set(prefix, prefix.back());
    if (omitted.omega && *omitted.omega >= profile->lambda)
      fail("omitted element " + std::to_string(*omitted.omega) + " is not below the character");

    out.depth = verification_depth::deep;
    out.profile = profile;
    out.omitted = std::move(omitted);
    return out;
  }

  /// Every admissible lambda in [0, lambda_max], verified deep whenever the
  /// modular form's modulus is at most deep_cap. Output is ordered by lambda.
  CoverageReport coverage_report(value_t lambda_max, value_t deep_cap) const {
    if (lambda_max < 16) throw error(error_kind::precondition, "coverage needs lambda_max >= 16");
    WitnessEngine scoped = *this;
    scoped.options_.deep_cap = deep_cap;

    std::vector<value_t> lambdas;
    for (value_t l = 0; l <= lambda_max; ++l)
      if (!is_forbidden_character(l)) lambdas.push_back(l);

    CoverageReport report{lambda_max, deep_cap, std::vector<CoverageRecord>(lambdas.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < lambdas.size(); i = next.fetch_add(1)) {
        CoverageRecord& rec = report.records[i];
        rec.lambda = lambdas[i];
        try {
          rec.witness = scoped.execute_and_verify(scoped.witness_for(rec.lambda), true);
          rec.pass = true;
        } catch (const error& e) {
          rec.failure = e.what();
        }
      }
    };
    const unsigned threads = std::max(1u, options_.threads);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    return report;
  }

 private:
  static WitnessRecipe trivial_zero() {
    WitnessRecipe r;
    r.target_lambda = 0;
    r.kind = strategy::trivial_zero;
    r.base = ResidueSet(1, {0});
    r.expected_t = 0;
    r.expected_N = 1;
    r.label = "S(0)";
    return r;
  }

  // lambda - 1 = m * 3^(t-1) with 3 not dividing m; k = (m + 3) / 2.
  static WitnessRecipe even_ladder(value_t lambda) {
    const auto [e, m] = split_powers_of_three(lambda - 1);
    const value_t t = e + 1;
    const value_t k = (m + 3) / 2;
    WitnessRecipe r;
    r.target_lambda = lambda;
    r.kind = strategy::even_ladder;
    FamilyId id{family::Atk, {t, k}};
    r.label = to_string(id);
    r.base = std::move(id);
    r.expected_t = checked_mul(k, checked_pow(3, e));
    r.expected_N = checked_pow(3, static_cast<unsigned>(t));
    return r;
  }

  // lambda - 1 = 10 u 3^n, 3 not dividing u, u >= 4: u mod 6 picks the family,
  // the rest of u counts shifts of the maximum by 10*3^(n+1).
  static WitnessRecipe mod60_family(value_t lambda, unsigned n, value_t u) {
    cdef which{};
    value_t offset = 0;
    switch (u % 6) {
      case 1: which = cdef::C; offset = 7; break;
      case 2: which = cdef::D; offset = 8; break;
      case 4: which = cdef::E; offset = 4; break;
      case 5: which = cdef::F; offset = 5; break;
      default:
        throw error(error_kind::invariant_violation, "u=" + std::to_string(u) + " is divisible by 3");
    }
    if (u < offset) throw error(error_kind::invariant_violation, "u=" + std::to_string(u) + " below family offset");
    const value_t p = checked_pow(3, n);
    WitnessRecipe r;
    r.target_lambda = lambda;
    r.kind = strategy::mod60_family;
    const family f = which == cdef::C ? family::C : which == cdef::D ? family::D : which == cdef::E ? family::E : family::F;
    FamilyId id{f, {n}};
    r.label = to_string(id);
    r.base = std::move(id);
    r.shift_count = (u - offset) / 6;
    r.expected_N = checked_mul(30, p);
    r.expected_t = checked_add(checked_mul(cdef_max_multiplier(which), p), checked_mul(r.shift_count, r.expected_N));
    return r;
  }

  // lambda = 2t + 1 - N: pick the row whose maximum is congruent to t in the
  // table's band and shift the rest.
  static WitnessRecipe table_recipe(value_t lambda, const AppendixTable& table, value_t band_start, strategy kind) {
    const value_t n = table.modulus;
    const value_t t = (lambda - 1) / 2 + n / 2;
    if (t < band_start) throw error(error_kind::invariant_violation, "t below the table band");
    const value_t base_max = band_start + (t - band_start) % n;
    const auto it = table.rows.find(base_max);
    if (it == table.rows.end() || !it->second.usable())
      throw error(error_kind::invariant_violation,
                  "no usable mod-" + std::to_string(n) + " row with max " + std::to_string(base_max));
    WitnessRecipe r;
    r.target_lambda = lambda;
    r.kind = kind;
    r.base = *it->second.set;
    r.shift_count = (t - base_max) / n;
    r.expected_t = t;
    r.expected_N = n;
    r.label = "row:" + std::to_string(base_max);
    return r;
  }

  WitnessRecipe small_case(value_t lambda) const {
    for (std::size_t s : options_.small_search_sizes) {
      const value_t pairs = s * (s + 1) / 2;
      for (value_t n = 1; n <= options_.small_search_max_modulus && n <= pairs; ++n) {
        if ((lambda - 1 + n) % 2 != 0) continue;
        const value_t t = (lambda - 1 + n) / 2;
        if (t + 1 < s) continue;
        const SearchResult found = search_near_modular({n, t, s, true, options_.small_search_budget});
        if (found.outcome != search_outcome::found) continue;
        WitnessRecipe r;
        r.target_lambda = lambda;
        r.kind = strategy::small_case_search;
        r.base = found.witness_set();
        r.expected_t = t;
        r.expected_N = n;
        r.label = "search:N=" + std::to_string(n) + ",s=" + std::to_string(s);
        return r;
      }
    }
    throw error(error_kind::invariant_violation, "no small-case witness for lambda=" + std::to_string(lambda));
  }

  WitnessOptions options_;
  AppendixTable mod28_;
  AppendixTable mod30_;
};

}  // namespace stanley
