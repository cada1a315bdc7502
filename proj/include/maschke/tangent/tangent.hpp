#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maschke/algebra/multipoly.hpp"
#include "maschke/algebra/quotient.hpp"
#include "maschke/algebra/univariate.hpp"

namespace maschke::tangent {

using algebra::BigRational;
using algebra::QMultiPoly;
using algebra::QPoly;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// integer-coefficient expressions in +, -, *, ^ and parentheses over the
// given variables
QMultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);
QPoly parse_upoly(std::string_view text, const std::string& var);

// ---- the named polynomials

QMultiPoly octic();                      // F in x0..x3
std::array<QMultiPoly, 5> invariants();  // p0..p4 in x0..x3
QMultiPoly igusa_quartic();              // G_I in y0..y4
QMultiPoly maschke_quadric();            // G_M in y0..y4
QMultiPoly w_quartic();                  // H in y0..y3

// the pencil f_c(t) = A t^8 + B t^4 + C of lines (x, 1, t y, t), in x, y
struct FourTangentForms {
  QMultiPoly A, B, C, gplus, gminus;
};
const FourTangentForms& four_tangent_forms();

// g_+ = P(y) x^4 - Q(y) x^2 + P(y)
QPoly form_P();
QPoly form_Q();
QPoly form_A();  // y^8 + 14 y^4 + 1
QPoly quotient_discriminant();  // Q^2 - 4 P^2

// ---- checks

enum class CheckId { ABC, DELTA, TWIST, IGUSA, GM, WQUARTIC, WLINES, LINES32, GINVAR, AJ, QUOT };

std::string to_string(CheckId id);
std::optional<CheckId> parse_check(std::string_view name);
const std::vector<CheckId>& all_checks();

struct SymbolicCheck {
  CheckId id;
  bool pass = false;
  // the identity that was verified, or the nonzero residue
  std::string witness;
  // 64-bit FNV-1a of the witness, hex
  std::string digest() const;
};

SymbolicCheck run_check(CheckId id);
// independent checks run concurrently, results in the order given
std::vector<SymbolicCheck> run_checks(const std::vector<CheckId>& ids, unsigned workers = 1);

// ---- genus bookkeeping

struct GenusReport {
  // C_+ and C_- of bidegree (4,4): smooth over each certificate prime
  std::vector<std::uint64_t> smooth_primes;
  bool cplus_smooth = false;
  bool cminus_smooth = false;
  int genus_cplus = -1;
  int genus_cminus = -1;
  // zeros of A on C_+, all simple when the fibres over the roots of A are
  int branch_points = 0;
  bool branch_simple = false;
  int genus_ctilde = -1;  // Riemann-Hurwitz over C_+
  int genus_cbar = -1;    // s^2 = Q^2 - 4P^2
  int genus_c3 = -1;      // s^2 = A
  int genus_c7 = -1;      // u^2 = A (Q^2 - 4P^2)
  std::vector<std::string> certificates;

  bool expected() const {
    return cplus_smooth && cminus_smooth && genus_cplus == 9 && genus_cminus == 9 && branch_points == 32 &&
           branch_simple && genus_ctilde == 33 && genus_cbar == 3 && genus_c3 == 3 && genus_c7 == 7;
  }
};

// the three certificate primes, all above 10^4
const std::vector<std::uint64_t>& smoothness_primes();
GenusReport curve_invariants();

// genus of s^2 = f for squarefree f of degree d >= 1, else nullopt
std::optional<int> hyperelliptic_genus(const QPoly& f);

// no common zero of g, dg/dx, dg/dy on P^1 x P^1 over the algebraic closure
// of F_p, for g of bidegree (dx, dy) given by coefficients g[i][j] of x^i y^j
bool bihomogeneous_smooth_mod_p(const std::vector<std::vector<std::int64_t>>& g, unsigned dx, unsigned dy,
                                std::uint64_t p);

}  // namespace maschke::tangent
