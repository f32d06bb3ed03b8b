// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "stanley_cli.hpp"

using namespace stanley;
using V = std::vector<value_t>;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// (lambda, omega) of every empirically independent sequence seen in 4 and 5.
std::vector<std::pair<value_t, std::optional<value_t>>> independent_sequences;

Outcome fixtures_verify() {
  struct Want {
    const ResidueSet& set;
    value_t n;
    std::size_t size;
    value_t max;
  };
  const Want want[] = {{fixtures::A0(), 3, 2, 2}, {fixtures::A1(), 27, 8, 18}, {fixtures::B1(), 9, 4, 6},
                       {fixtures::B2(), 81, 16, 54}};
  for (const auto& w : want) {
    if (!verify(w.set).is_modular || !oracles::modular(w.set) || w.set.modulus() != w.n || w.set.size() != w.size ||
        w.set.max() != w.max)
      return {false, format_set(w.set)};
  }
  return {true, "A0, A1, B1, B2 modular"};
}

Outcome at_family_modular() {
  for (value_t t = 1; t <= 8; ++t) {
    const auto a = build_At(t);
    const value_t p = checked_pow(3, t);
    if (a.modulus() != p || a.size() != (value_t{1} << t) || a.max() != 2 * p / 3 || !verify(a).is_modular)
      return {false, "t=" + std::to_string(t)};
  }
  return {true, "t=1..8"};
}

Outcome appendix_integrity() {
  const WitnessEngine engine;
  std::size_t rows = 0, verified = 0;
  std::vector<std::string> expected_errata, reported_errata;
  for (const auto* table : {&engine.mod28(), &engine.mod30()}) {
    for (const auto& [max, row] : table->rows) {
      ++rows;
      if (!row.usable() || !oracles::near_modular(*row.set) || row.set->max() != max ||
          row.set->modulus() != table->modulus)
        return {false, "row " + row.printed};
      bool as_printed = false;
      try {
        as_printed = oracles::near_modular(parse_set_line(row.printed));
      } catch (const error&) {
      }
      if (as_printed) ++verified;
      else expected_errata.push_back(row.printed);
    }
    for (const auto* e : table->errata()) reported_errata.push_back(e->printed);
  }
  if (rows != 54 || expected_errata != reported_errata) return {false, "erratum list mismatch"};
  return {true, std::to_string(rows) + " rows, " + std::to_string(verified) + " verified as printed, " +
                    std::to_string(reported_errata.size()) + " erratum"};
}

Outcome pipeline_equivalence() {
  std::size_t checked = 0, skipped = 0;
  for (const auto& [name, l] : fixtures::corpus()) {
    if ((l.size() & (l.size() - 1)) != 0 || 2 * l.max() + 1 < l.modulus()) {
      ++skipped;
      continue;
    }
    const auto m = to_modular(l);
    if (m.set.modulus() > 10'000) {
      ++skipped;
      continue;
    }
    const auto prefix = greedy_extend(StanleyPrefix::from_seed(V(m.set.elements().begin(), m.set.elements().end())),
                                      std::max<std::size_t>(4 * m.set.size(), 16));
    const auto c = detect_character(prefix);
    if (!c || c->lambda != character_of(l) || c->levels() < 2) return {false, name};
    independent_sequences.emplace_back(c->lambda, omitted_set(prefix, prefix.back()).omega);
    ++checked;
  }
  return {checked > 0, std::to_string(checked) + " sets checked, " + std::to_string(skipped) + " out of scope"};
}

Outcome flagship_coverage() {
  const auto path = std::filesystem::temp_directory_path() / "stanley_acceptance_coverage.json";
  std::ostringstream out, err;
  const int code = cli::run_cli({"coverage", "--max", "200", "--deep-cap", "100000", "--json", path.string()}, out, err);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  std::size_t deep = 0, shallow = 0;
  for (const auto& r : j["records"]) {
    if (!r["pass"].get<bool>()) return {false, "lambda=" + std::to_string(r["lambda"].get<value_t>())};
    const bool is_deep = r["verified_depth"] == "deep";
    if (!is_deep && r["modular_N"].get<value_t>() <= 100'000)
      return {false, "lambda=" + std::to_string(r["lambda"].get<value_t>()) + " not deep"};
    if (is_deep) {
      ++deep;
      if (r["detected_lambda"] != r["lambda"] || r["levels"].get<unsigned>() < 2) return {false, "deep mismatch"};
      std::optional<value_t> omega;
      if (!r["omega"].is_null()) omega = r["omega"].get<value_t>();
      independent_sequences.emplace_back(r["lambda"].get<value_t>(), omega);
    } else {
      ++shallow;
    }
  }
  const bool pass = code == 0 && j["admissible"] == 195 && j["all_pass"] == true;
  return {pass, std::to_string(j["passed"].get<std::size_t>()) + "/195 admissible, " + std::to_string(deep) +
                    " deep, " + std::to_string(shallow) + " shallow"};
}

Outcome product_suite() {
  std::vector<ResidueSet> pool{ResidueSet(1, {0})};
  for (value_t n = 1; n <= 30; ++n)
    for (std::size_t s : {2, 4, 8})
      for (value_t t = s - 1; t <= 2 * n + 4; ++t) {
        const auto r = search_near_modular({n, t, s, true, 2'000'000});
        if (r.outcome == search_outcome::found && oracles::near_modular(r.witness_set())) pool.push_back(r.witness_set());
      }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    const auto ab = product(a, b);
    if (ab.modulus() != a.modulus() * b.modulus() || ab.size() != a.size() * b.size() || !verify(ab).is_near_modular ||
        product(ab, c) != product(a, product(b, c)))
      return {false, format_set(a) + " x " + format_set(b)};
  }
  return {true, "200 pairs from " + std::to_string(pool.size()) + " searched sets"};
}

Outcome transform_suite() {
  std::size_t scaled = 0, rejected = 0, shifted = 0;
  for (const auto& [name, s] : fixtures::corpus()) {
    for (value_t c = 1; c <= 12; ++c) {
      if (std::gcd(c, s.modulus()) == 1) {
        if (!verify(scale(s, c)).is_near_modular) return {false, name + " scale " + std::to_string(c)};
        ++scaled;
        continue;
      }
      try {
        (void)scale(s, c);
        return {false, name + " accepted scale " + std::to_string(c)};
      } catch (const error& e) {
        if (e.kind() != error_kind::precondition) return {false, name};
        ++rejected;
      }
    }
    if (s.size() < 2) continue;
    for (value_t m : {1, 2, 3}) {
      if (!verify(shift_max(s, m)).is_near_modular) return {false, name + " shift"};
      ++shifted;
    }
  }
  return {true, std::to_string(scaled) + " scalings, " + std::to_string(rejected) + " rejections, " +
                    std::to_string(shifted) + " shifts"};
}

Outcome search_reproduction() {
  std::ostringstream out, err;
  const int code = cli::run_cli({"search", "--mod", "28", "--max", "57", "--size", "8", "--budget", "100000000"}, out, err);
  if (code != 0) return {false, "exit " + std::to_string(code)};
  const std::string line = out.str().substr(0, out.str().find('\n'));
  const auto set = parse_set_line(line);
  const bool ok = set.modulus() == 28 && set.max() == 57 && set.size() == 8 && oracles::near_modular(set);
  return {ok, line};
}

Outcome omega_below_lambda() {
  std::size_t with_omega = 0;
  for (const auto& [lambda, omega] : independent_sequences) {
    if (omega && *omega >= lambda) return {false, "lambda=" + std::to_string(lambda)};
    if (omega) ++with_omega;
  }
  return {!independent_sequences.empty(), std::to_string(independent_sequences.size()) + " sequences, " +
                                              std::to_string(with_omega) + " with nonempty omitted set"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 fixture verification", fixtures_verify},
      {"2 A_t modular for t<=8", at_family_modular},
      {"3 appendix integrity", appendix_integrity},
      {"4 character pipeline equivalence", pipeline_equivalence},
      {"5 flagship coverage run", flagship_coverage},
      {"6 product property suite", product_suite},
      {"7 transform suite", transform_suite},
      {"8 oracle search reproduction", search_reproduction},
      {"9 omega below lambda", omega_below_lambda},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
