#pragma once

// Command-line front end. run_cli() is the whole program minus process
// plumbing, so tests can drive it with captured streams.
//
// Exit status: 0 success, 1 a requested verification failed, 2 usage or
// input error, 3 resource limit (budget, overflow, size caps).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stanley/report.hpp"
#include "stanley/stanley.hpp"

namespace stanley::cli {

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2, resource = 3 };

inline int exit_for(error_kind kind) {
  switch (kind) {
    case error_kind::verification_failure:
    case error_kind::invariant_violation:
      return verification_failed;
    case error_kind::overflow:
    case error_kind::resource_limit:
      return resource;
    default:
      return usage;
  }
}

inline std::vector<value_t> parse_list(const std::string& text) {
  std::vector<value_t> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(detail::parse_decimal(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

inline std::string join(std::span<const value_t> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

// A path to a set file, or a set literal in the same grammar.
inline std::vector<ResidueSet> load_sets(const std::string& source) {
  if (source.find(';') != std::string::npos && source.find("N") != std::string::npos) {
    std::istringstream in(source);
    return read_sets(in);
  }
  std::ifstream in(source);
  if (!in) throw error(error_kind::malformed_input, "cannot open '" + source + "'");
  return read_sets(in);
}

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("STANLEY_NODE_BUDGET")) return detail::parse_decimal(env, "STANLEY_NODE_BUDGET");
  return default_node_budget;
}

class timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stanley sequences, near-modular sets and character witnesses"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for coverage and search")->check(CLI::Range(1u, 256u));

  std::string seed_text;
  std::size_t length = 64;
  auto* generate = app.add_subcommand("generate", "greedy Stanley sequence from a seed");
  generate->add_option("--seed", seed_text, "comma-separated 3-free seed")->required();
  generate->add_option("--len", length, "number of terms");

  auto* character = app.add_subcommand("character", "detect character, omitted set and growth of S(seed)");
  character->add_option("--seed", seed_text, "comma-separated 3-free seed")->required();
  character->add_option("--len", length, "number of terms");

  std::string file;
  bool modular_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "verify sets from a file (or a set literal)");
  verify_cmd->add_option("--file", file, "set file or literal 'N=..; ..'")->required();
  verify_cmd->add_flag("--modular", modular_only, "require modular, not just near-modular");

  std::string left, right;
  auto* product_cmd = app.add_subcommand("product", "A (x) B of the first set in each input");
  product_cmd->add_option("a", left, "set file or literal")->required();
  product_cmd->add_option("b", right, "set file or literal")->required();

  std::string family_text;
  auto* family_cmd = app.add_subcommand("family", "build a named family, e.g. Acal:2, Atk:3,7, C:1");
  family_cmd->add_option("id", family_text, "<family>:<params>")->required();

  value_t lambda = 0;
  bool deep = false;
  value_t deep_cap = 100'000;
  auto* witness_cmd = app.add_subcommand("witness", "build and verify a witness for one character");
  witness_cmd->add_option("--lambda", lambda, "target character")->required();
  witness_cmd->add_flag("--deep", deep, "also confirm the character on the greedy sequence");
  witness_cmd->add_option("--deep-cap", deep_cap, "largest modular modulus verified deep");

  value_t lambda_max = 200;
  std::string json_path;
  auto* coverage_cmd = app.add_subcommand("coverage", "witness every admissible character up to --max");
  coverage_cmd->add_option("--max", lambda_max, "largest character")->check(CLI::Range(value_t{16}, value_t{1} << 40));
  coverage_cmd->add_option("--deep-cap", deep_cap, "largest modular modulus verified deep");
  coverage_cmd->add_option("--json", json_path, "also write the machine-readable report here");

  value_t modulus = 0, max_element = 0;
  std::size_t size = 0, resume = 0;
  std::uint64_t budget = default_budget();
  bool no_zero = false;
  auto* search_cmd = app.add_subcommand("search", "exhaustive search for a near-modular set");
  search_cmd->add_option("--mod", modulus, "modulus N")->required()->check(CLI::Range(value_t{1}, value_t{1} << 30));
  search_cmd->add_option("--max", max_element, "maximum element t")->required();
  search_cmd->add_option("--size", size, "cardinality")->required();
  search_cmd->add_option("--budget", budget, "node budget (env STANLEY_NODE_BUDGET)");
  search_cmd->add_option("--resume", resume, "first partition to scan");
  search_cmd->add_flag("--no-zero", no_zero, "do not force 0 into the set");

  auto* appendix_cmd = app.add_subcommand("appendix-check", "verify every row of the mod-28 and mod-30 tables");
  auto* erratum_cmd = app.add_subcommand("erratum-report", "list table rows that needed repair or replacement");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return usage;
  }

  try {
    if (*generate || *character) {
      const auto seed = parse_list(seed_text);
      if (std::find(seed.begin(), seed.end(), 0) == seed.end())
        err << "warning: seed does not contain 0; the sequence is a translate\n";
      const StanleyPrefix prefix = greedy_extend(StanleyPrefix::from_seed(seed), length);
      if (*generate) {
        out << join(prefix.terms()) << "\n";
        return ok;
      }
      const auto profile = detect_character(prefix);
      if (!profile) {
        out << "character: not detected within " << prefix.size() << " terms\n";
        return verification_failed;
      }
      out << "lambda=" << profile->lambda << " kappa=" << profile->kappa
          << " repeat_factor=" << profile->repeat_factor << " verified_up_to_k=" << profile->verified_up_to_k
          << " levels=" << profile->levels() << " (empirically independent)\n";
      const OmittedSet omitted = omitted_set(prefix, prefix.back());
      out << "omitted(<" << omitted.scan_bound << ")=" << (omitted.elements.empty() ? "none" : join(omitted.elements))
          << " omega=" << (omitted.omega ? std::to_string(*omitted.omega) : "none") << "\n";
      if (prefix.size() >= 8) {
        const auto g = growth_diagnostic(prefix);
        std::ostringstream line;
        line.precision(6);
        line << "growth a_n/n^log2(3) over second half: min=" << g.liminf_est << " max=" << g.limsup_est;
        out << line.str() << "\n";
      }
      return ok;
    }

    if (*verify_cmd) {
      const auto sets = load_sets(file);
      bool all = !sets.empty();
      for (const auto& s : sets) {
        const VerificationReport r = verify(s);
        const bool pass = modular_only ? r.is_modular : r.is_near_modular;
        all = all && pass;
        out << format_set(s) << " | three_free_mod=" << (r.is_three_free_mod ? "yes" : "no")
            << " uncovered=" << r.uncovered_residues.size() << " near_modular=" << (r.is_near_modular ? "yes" : "no")
            << " modular=" << (r.is_modular ? "yes" : "no");
        if (r.witness_violation) {
          const auto& v = *r.witness_violation;
          out << " violation=(" << v[0] << "," << v[1] << "," << v[2] << ")";
        }
        out << (pass ? " PASS" : " FAIL") << "\n";
      }
      return all ? ok : verification_failed;
    }

    if (*product_cmd) {
      const auto a = load_sets(left);
      const auto b = load_sets(right);
      if (a.empty() || b.empty()) throw error(error_kind::malformed_input, "product needs a set on each side");
      out << format_set(product(a.front(), b.front())) << "\n";
      return ok;
    }

    if (*family_cmd) {
      out << format_set(build(parse_family(family_text))) << "\n";
      return ok;
    }

    if (*witness_cmd) {
      WitnessOptions options;
      options.deep_cap = deep_cap;
      options.threads = threads;
      const WitnessEngine engine(options);
      const WitnessRecipe recipe = engine.witness_for(lambda);
      out << describe(recipe) << "\n";
      const VerifiedWitness w = engine.execute_and_verify(recipe, deep);
      out << format_set(w.set) << "\n";
      out << describe(w) << "\n";
      out << "VERIFIED " << to_string(w.depth) << "\n";
      return ok;
    }

    if (*coverage_cmd) {
      const timer clock;
      WitnessOptions options;
      options.threads = threads;
      const WitnessEngine engine(options);
      const CoverageReport report = engine.coverage_report(lambda_max, deep_cap);
      std::size_t deep_count = 0;
      for (const auto& r : report.records) {
        out << describe(r) << "\n";
        if (r.witness && r.witness->depth == verification_depth::deep) ++deep_count;
      }
      out << "coverage max=" << lambda_max << " admissible=" << report.records.size()
          << " passed=" << report.pass_count() << " deep=" << deep_count
          << " shallow=" << report.pass_count() - deep_count << (report.all_pass() ? " PASS" : " FAIL") << "\n";
      if (!json_path.empty()) {
        std::ofstream js(json_path);
        if (!js) throw error(error_kind::malformed_input, "cannot write '" + json_path + "'");
        js << to_json(report).dump(2) << "\n";
      }
      err << "coverage took " << clock.seconds() << " s\n";
      return report.all_pass() ? ok : verification_failed;
    }

    if (*search_cmd) {
      const timer clock;
      const SearchSpec spec{modulus, max_element, size, !no_zero, budget};
      const SearchResult r = search_near_modular(spec, {threads, resume, true});
      err << "search scanned " << r.nodes << " nodes in " << clock.seconds() << " s\n";
      switch (r.outcome) {
        case search_outcome::found:
          out << (no_zero ? "N=" + std::to_string(modulus) + "; " + join(r.witness) : format_set(r.witness_set()))
              << "\n";
          out << "found partition=" << r.next_partition - 1 << " nodes=" << r.nodes << "\n";
          return ok;
        case search_outcome::exhausted:
          out << "exhausted nodes=" << r.nodes << "\n";
          return verification_failed;
        case search_outcome::budget_exceeded:
          out << "budget-exceeded nodes=" << r.nodes << " resume=" << r.next_partition << "\n";
          return resource;
      }
    }

    if (*appendix_cmd || *erratum_cmd) {
      const WitnessEngine engine;
      std::size_t processed = 0, verified = 0, usable = 0;
      std::vector<const AppendixRow*> errata;
      for (const AppendixTable* table : {&engine.mod28(), &engine.mod30()}) {
        for (const auto& [max, row] : table->rows) {
          ++processed;
          if (row.status == row_status::verified) ++verified;
          if (row.usable()) ++usable;
          if (*appendix_cmd)
            out << "mod " << table->modulus << " max " << max << ": " << to_string(row.status) << "\n";
        }
        for (const AppendixRow* e : table->errata()) errata.push_back(e);
      }
      if (*appendix_cmd) {
        out << processed << " rows processed, " << verified << " verified as printed, " << usable << " usable, "
            << errata.size() << " erratum row(s)\n";
      }
      for (const AppendixRow* e : errata) {
        out << "erratum: printed '" << e->printed << "' -> " << to_string(e->status);
        if (e->set) out << " '" << format_set(*e->set) << "'";
        out << " (" << e->note << ")\n";
      }
      return usable == processed ? ok : verification_failed;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.kind());
  }
  return usage;
}

}  // namespace stanley::cli
