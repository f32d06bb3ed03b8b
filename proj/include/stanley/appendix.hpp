#pragma once

// Loader for the tables of near-modular sets mod 28 and mod 30. Every row is
// verified on load; a row that does not verify as printed is repaired (a
// fused leading "0" token is split) or replaced by a search witness with the
// same modulus, maximum and size, and is flagged as an erratum either way.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/appendix_data.hpp"
#include "stanley/arith.hpp"
#include "stanley/error.hpp"
#include "stanley/residue_set.hpp"
#include "stanley/search.hpp"

namespace stanley {

enum class row_status { verified, repaired, replaced, quarantined };

inline std::string_view to_string(row_status s) {
  switch (s) {
    case row_status::verified: return "verified";
    case row_status::repaired: return "repaired";
    case row_status::replaced: return "replaced";
    case row_status::quarantined: return "quarantined";
  }
  return "?";
}

struct AppendixRow {
  value_t max_element = 0;
  std::string printed;
  std::optional<ResidueSet> set;  // empty only when quarantined
  row_status status = row_status::verified;
  std::string note;

  bool usable() const { return set.has_value(); }
  bool is_erratum() const { return status != row_status::verified; }
};

struct AppendixTable {
  value_t modulus = 0;
  std::map<value_t, AppendixRow> rows;

  /// The usable row whose maximum is congruent to t mod N.
  const AppendixRow* row_congruent_to(value_t t) const {
    for (const auto& [max, row] : rows)
      if (max % modulus == t % modulus && row.usable()) return &row;
    return nullptr;
  }

  std::vector<const AppendixRow*> errata() const {
    std::vector<const AppendixRow*> out;
    for (const auto& [max, row] : rows)
      if (row.is_erratum()) out.push_back(&row);
    return out;
  }
};

namespace detail {

inline std::optional<ResidueSet> verified_reading(value_t modulus, const std::vector<std::string>& tokens,
                                                  value_t expected_max, std::size_t expected_size) {
  try {
    std::vector<value_t> elements;
    for (const auto& t : tokens) elements.push_back(parse_decimal(t, t));
    if (!std::is_sorted(elements.begin(), elements.end())) return std::nullopt;
    ResidueSet s(modulus, std::move(elements));
    if (s.size() != expected_size || s.max() != expected_max) return std::nullopt;
    if (!verify(s).is_near_modular) return std::nullopt;
    return s;
  } catch (const error&) {
    return std::nullopt;
  }
}

}  // namespace detail

struct AppendixLoadOptions {
  std::size_t row_size = 8;
  std::uint64_t replacement_budget = 100'000'000;
  unsigned threads = 1;
};

/// Parses a table in the set file format. Rows must all carry `modulus`.
inline AppendixTable load_appendix_table(std::string_view text, value_t modulus,
                                         const AppendixLoadOptions& options = {}) {
  AppendixTable table;
  table.modulus = modulus;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (is_blank_or_comment(line)) continue;
    const SetLineTokens tokens = tokenize_set_line(line);
    if (tokens.modulus != modulus)
      throw error(error_kind::malformed_input, "row '" + line + "' is not mod " + std::to_string(modulus));

    AppendixRow row;
    row.printed = std::string(detail::trim(line));
    row.max_element = detail::parse_decimal(tokens.elements.back(), line);

    if (auto s = detail::verified_reading(modulus, tokens.elements, row.max_element, options.row_size)) {
      row.set = std::move(s);
      row.status = row_status::verified;
    } else {
      // A leading element written as "0xy" is read as "0" followed by "xy".
      std::vector<std::string> split = tokens.elements;
      const std::string first = split.front();
      std::optional<ResidueSet> repaired;
      if (first.size() > 1 && first.front() == '0') {
        const std::string rest = first.substr(first.find_first_not_of('0') == std::string::npos
                                                  ? first.size()
                                                  : first.find_first_not_of('0'));
        if (!rest.empty()) {
          split.front() = rest;
          split.insert(split.begin(), "0");
          repaired = detail::verified_reading(modulus, split, row.max_element, options.row_size);
        }
      }
      if (repaired) {
        row.set = std::move(repaired);
        row.status = row_status::repaired;
        row.note = "split fused leading token '" + first + "'";
      } else {
        SearchSpec spec{modulus, row.max_element, options.row_size, true, options.replacement_budget};
        const SearchResult r = search_near_modular(spec, {options.threads});
        if (r.outcome == search_outcome::found) {
          row.set = r.witness_set();
          row.status = row_status::replaced;
          row.note = "printed row does not verify; replaced by search witness";
        } else {
          row.status = row_status::quarantined;
          row.note = "printed row does not verify; search " + std::string(to_string(r.outcome));
        }
      }
    }
    table.rows.emplace(row.max_element, std::move(row));
  }
  return table;
}

inline AppendixTable load_appendix_mod28(const AppendixLoadOptions& options = {}) {
  return load_appendix_table(appendix_data::mod28, 28, options);
}

inline AppendixTable load_appendix_mod30(const AppendixLoadOptions& options = {}) {
  return load_appendix_table(appendix_data::mod30, 30, options);
}

}  // namespace stanley
