#pragma once

// The fixture corpus: sets printed in the base cases, family instances,
// appendix rows and the mod-10 factors.

#include <string>
#include <vector>

#include "stanley/stanley.hpp"

namespace fixtures {

using stanley::ResidueSet;

struct Named {
  std::string name;
  ResidueSet set;
};

inline const ResidueSet& A0() { static const ResidueSet s(3, {0, 2}); return s; }
inline const ResidueSet& A1() { static const ResidueSet s(27, {0, 1, 6, 7, 10, 15, 16, 18}); return s; }
inline const ResidueSet& B1() { static const ResidueSet s(9, {0, 2, 5, 6}); return s; }
inline const ResidueSet& B2() {
  static const ResidueSet s(81, {0, 2, 3, 5, 18, 20, 21, 23, 29, 30, 32, 45, 47, 48, 50, 54});
  return s;
}

inline std::vector<Named> corpus() {
  using namespace stanley;
  std::vector<Named> out{{"A0", A0()}, {"A1", A1()}, {"B1", B1()}, {"B2", B2()}};
  for (value_t t = 1; t <= 6; ++t) out.push_back({"At:" + std::to_string(t), build_At(t)});
  for (value_t n = 0; n <= 2; ++n) out.push_back({"Ttilde:" + std::to_string(n), build_Ttilde(n)});
  for (value_t t = 1; t <= 3; ++t)
    for (value_t k : {2, 4, 5, 7, 8})
      out.push_back({"Atk:" + std::to_string(t) + "," + std::to_string(k), build_Atk(t, k)});
  for (value_t n = 0; n <= 1; ++n)
    for (auto [w, letter] : {std::pair{cdef::C, "C"}, {cdef::D, "D"}, {cdef::E, "E"}, {cdef::F, "F"}})
      out.push_back({std::string(letter) + ":" + std::to_string(n), build_CDEF(n, w)});
  out.push_back({"mod10:c", mod10_factor_c()});
  out.push_back({"mod10:e", mod10_factor_e()});
  static const auto tables = std::pair{load_appendix_mod28(), load_appendix_mod30()};
  for (const AppendixTable* t : {&tables.first, &tables.second})
    for (const auto& [max, row] : t->rows)
      if (row.usable()) out.push_back({"row" + std::to_string(t->modulus) + ":" + std::to_string(max), *row.set});
  return out;
}

}  // namespace fixtures
