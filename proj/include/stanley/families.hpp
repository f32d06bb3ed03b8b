#pragma once

// Named constructions: T_n, T~_n, Acal_n, U_n, U~_n, Bcal_n, the unified A_t,
// the A_t^k ladder, the R_n variants and the C/D/E/F families built on them.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/arith.hpp"
#include "stanley/error.hpp"
#include "stanley/residue_set.hpp"

namespace stanley {

namespace detail {

inline const ResidueSet& zero_two_mod3() {
  static const ResidueSet s(3, {0, 2});
  return s;
}

// {0,1} (x) {0,2} = {0,1,6,7} mod 9
inline const ResidueSet& block_mod9() {
  static const ResidueSet s = product(zero_one_mod3(), zero_two_mod3());
  return s;
}

inline ResidueSet identity_set() { return ResidueSet(1, {0}); }

// Left fold: ((f (x) f) (x) f) ...
inline ResidueSet power(const ResidueSet& f, value_t n) {
  ResidueSet acc = identity_set();
  for (value_t i = 0; i < n; ++i) acc = product(acc, f);
  return acc;
}

// (S \ {removed}) u {inserted}, keeping the modulus.
inline ResidueSet swap_element(const ResidueSet& s, value_t removed, value_t inserted) {
  if (!s.contains(removed))
    throw error(error_kind::invariant_violation, std::to_string(removed) + " is not an element");
  std::vector<value_t> out;
  out.reserve(s.size());
  for (value_t v : s.elements())
    if (v != removed) out.push_back(v);
  out.push_back(inserted);
  return ResidueSet(s.modulus(), std::move(out));
}

}  // namespace detail

inline ResidueSet build_T(value_t n) { return detail::power(detail::block_mod9(), n); }

inline ResidueSet build_Ttilde(value_t n) { return product(build_T(n), zero_one_mod3()); }

/// (T~_n \ {3^(2n)}) u {2*3^(2n)}: modular mod 3^(2n+1), max 2*3^(2n).
inline ResidueSet build_Acal(value_t n) {
  const value_t p = checked_pow(3, static_cast<unsigned>(checked_mul(2, n)));
  return detail::swap_element(build_Ttilde(n), p, checked_mul(2, p));
}

inline ResidueSet build_U(value_t n) {
  if (n < 1) throw error(error_kind::precondition, "U_n needs n >= 1");
  return product(detail::zero_two_mod3(), detail::power(detail::block_mod9(), n - 1));
}

inline ResidueSet build_Utilde(value_t n) { return product(build_U(n), zero_one_mod3()); }

/// (U~_n \ {3^(2n-1)}) u {2*3^(2n-1)}: modular mod 3^(2n), max 2*3^(2n-1).
inline ResidueSet build_Bcal(value_t n) {
  if (n < 1) throw error(error_kind::precondition, "Bcal_n needs n >= 1");
  const value_t p = checked_pow(3, static_cast<unsigned>(checked_sub(checked_mul(2, n), 1)));
  return detail::swap_element(build_Utilde(n), p, checked_mul(2, p));
}

/// Modular mod 3^t with 2^t elements and max 2*3^(t-1).
inline ResidueSet build_At(value_t t) {
  if (t < 1) throw error(error_kind::precondition, "A_t needs t >= 1");
  return (t % 2 == 1) ? build_Acal((t - 1) / 2) : build_Bcal(t / 2);
}

/// Near-modular mod 3^t with max k*3^(t-1), for k >= 2, k != 0 mod 3.
/// k = 2 is A_t, k = 4 is 2*A_t; every further step of 3 shifts the max by 3^t.
inline ResidueSet build_Atk(value_t t, value_t k) {
  if (k < 2 || k % 3 == 0)
    throw error(error_kind::precondition, "A_t^k needs k >= 2 and k != 0 mod 3, got k=" + std::to_string(k));
  const ResidueSet at = build_At(t);
  const value_t base_k = (k % 3 == 2) ? 2 : 4;
  ResidueSet base = (base_k == 2) ? at : scale(at, 2);
  const value_t shifts = (k - base_k) / 3;
  return shifts == 0 ? base : shift_max(base, shifts);
}

enum class r_variant { plain, prime, doubleprime, tripleprime };

/// R_n = A_{n+1} and its three transforms, all near-modular mod 3^(n+1):
/// plain (max 2*3^n), prime = 2R with max shifted once (7*3^n),
/// doubleprime = R with max shifted three times (11*3^n), tripleprime = 8R (16*3^n).
inline ResidueSet build_R_variant(value_t n, r_variant v) {
  const ResidueSet r = build_At(checked_add(n, 1));
  switch (v) {
    case r_variant::plain: return r;
    case r_variant::prime: return shift_max(scale(r, 2), 1);
    case r_variant::doubleprime: return shift_max(r, 3);
    case r_variant::tripleprime: return scale(r, 8);
  }
  throw error(error_kind::precondition, "unknown R variant");
}

inline const ResidueSet& mod10_factor_c() {
  static const ResidueSet s(10, {0, 7, 9, 16});
  return s;
}

inline const ResidueSet& mod10_factor_e() {
  static const ResidueSet s(10, {0, 1, 7, 8});
  return s;
}

enum class cdef { C, D, E, F };

/// Near-modular mod 10*3^(n+1) with max 50, 55, 35, 40 (times 3^n) for C, D, E, F.
inline ResidueSet build_CDEF(value_t n, cdef which) {
  switch (which) {
    case cdef::C: return product(build_R_variant(n, r_variant::plain), mod10_factor_c());
    case cdef::D: return product(build_R_variant(n, r_variant::prime), mod10_factor_c());
    case cdef::E: return product(build_R_variant(n, r_variant::doubleprime), mod10_factor_e());
    case cdef::F: return product(build_R_variant(n, r_variant::tripleprime), mod10_factor_e());
  }
  throw error(error_kind::precondition, "unknown family");
}

/// Max element of C/D/E/F as a multiple of 3^n.
inline constexpr value_t cdef_max_multiplier(cdef which) noexcept {
  switch (which) {
    case cdef::C: return 50;
    case cdef::D: return 55;
    case cdef::E: return 35;
    case cdef::F: return 40;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Family identifiers as written on the command line: `Acal:2`, `Atk:3,7`, `C:1`.

enum class family { T, Ttilde, Acal, U, Utilde, Bcal, At, Atk, C, D, E, F };

inline constexpr std::array<std::pair<family, std::string_view>, 12> family_names{{
    {family::T, "T"},
    {family::Ttilde, "Ttilde"},
    {family::Acal, "Acal"},
    {family::U, "U"},
    {family::Utilde, "Utilde"},
    {family::Bcal, "Bcal"},
    {family::At, "At"},
    {family::Atk, "Atk"},
    {family::C, "C"},
    {family::D, "D"},
    {family::E, "E"},
    {family::F, "F"},
}};

struct FamilyId {
  family name;
  std::vector<value_t> params;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline std::string_view to_string(family f) {
  for (const auto& [id, name] : family_names)
    if (id == f) return name;
  return "?";
}

inline std::string to_string(const FamilyId& id) {
  std::string out(to_string(id.name));
  char sep = ':';
  for (value_t p : id.params) {
    out += sep;
    out += std::to_string(p);
    sep = ',';
  }
  return out;
}

/// Throws precondition when the parameters are out of range for the family.
inline void validate(const FamilyId& id) {
  const auto arity = (id.name == family::Atk) ? 2u : 1u;
  if (id.params.size() != arity)
    throw error(error_kind::precondition, std::string(to_string(id.name)) + " takes " +
                                              std::to_string(arity) + " parameter(s)");
  const value_t p = id.params[0];
  switch (id.name) {
    case family::U:
    case family::Utilde:
    case family::Bcal:
    case family::At:
      if (p < 1) throw error(error_kind::precondition, std::string(to_string(id.name)) + " needs a parameter >= 1");
      break;
    case family::Atk: {
      const value_t k = id.params[1];
      if (p < 1 || k < 2 || k % 3 == 0)
        throw error(error_kind::precondition, "Atk needs t >= 1, k >= 2, k != 0 mod 3");
      break;
    }
    default:
      break;
  }
}

inline FamilyId parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw error(error_kind::malformed_input, "expected <family>:<params>, got '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon);
  FamilyId id{};
  bool known = false;
  for (const auto& [f, n] : family_names) {
    if (n == name) {
      id.name = f;
      known = true;
    }
  }
  if (!known) throw error(error_kind::malformed_input, "unknown family '" + std::string(name) + "'");
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    id.params.push_back(detail::parse_decimal(rest.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  validate(id);
  return id;
}

inline ResidueSet build(const FamilyId& id) {
  validate(id);
  const value_t p = id.params[0];
  switch (id.name) {
    case family::T: return build_T(p);
    case family::Ttilde: return build_Ttilde(p);
    case family::Acal: return build_Acal(p);
    case family::U: return build_U(p);
    case family::Utilde: return build_Utilde(p);
    case family::Bcal: return build_Bcal(p);
    case family::At: return build_At(p);
    case family::Atk: return build_Atk(p, id.params[1]);
    case family::C: return build_CDEF(p, cdef::C);
    case family::D: return build_CDEF(p, cdef::D);
    case family::E: return build_CDEF(p, cdef::E);
    case family::F: return build_CDEF(p, cdef::F);
  }
  throw error(error_kind::precondition, "unknown family");
}

}  // namespace stanley
