#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hzknots {

using Int = mpz_class;

// Fixed variable alphabet. 'L' denotes the transform parameter lambda.
enum Var : int { VarA = 0, VarZ = 1, VarQ = 2, VarL = 3, VarT = 4 };
inline constexpr int kVarCount = 5;

char var_name(Var v);

// Bitmask of allowed/used variables.
using VarMask = unsigned;
inline constexpr VarMask var_bit(Var v) { return 1u << static_cast<int>(v); }
inline constexpr VarMask kVarsAZ = var_bit(VarA) | var_bit(VarZ);
inline constexpr VarMask kVarsAQ = var_bit(VarA) | var_bit(VarQ);
inline constexpr VarMask kVarsLQ = var_bit(VarL) | var_bit(VarQ);
inline constexpr VarMask kVarsQ = var_bit(VarQ);
inline constexpr VarMask kVarsT = var_bit(VarT);
inline constexpr VarMask kVarsAll =
    var_bit(VarA) | var_bit(VarZ) | var_bit(VarQ) | var_bit(VarL) | var_bit(VarT);

using ExpVec = std::array<int, kVarCount>;
inline constexpr ExpVec kZeroExp{0, 0, 0, 0, 0};

// Graded-lexicographic comparison, variable order a < z < q < L < t.
// Used descending so that map iteration starts at the leading term.
struct GrlexGreater {
  bool operator()(const ExpVec& lhs, const ExpVec& rhs) const;
};

class AlgebraError : public std::runtime_error {
 public:
  explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public AlgebraError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : AlgebraError(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Sparse exact Laurent polynomial over the integers in the fixed alphabet.
// Invariant: no stored coefficient is zero; the zero polynomial is empty.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Int, GrlexGreater>;

  LaurentPoly() = default;

  static LaurentPoly constant(Int c);
  static LaurentPoly variable(Var v, int exp = 1);
  static LaurentPoly monomial(Int c, const ExpVec& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Requires is_constant().
  Int constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ExpVec& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  LaurentPoly times_monomial(const Int& c, const ExpVec& e) const;
  LaurentPoly pow(unsigned k) const;

  VarMask used_vars() const;
  bool uses(Var v) const { return (used_vars() & var_bit(v)) != 0; }
  // Require !is_zero().
  int min_exp(Var v) const;
  int max_exp(Var v) const;
  // Distinct exponents of v across all terms, ascending.
  std::vector<int> exponents_of(Var v) const;
  // Coefficient of v^k as a polynomial with the v-exponent cleared.
  LaurentPoly coeff_of(Var v, int k) const;

  LaurentPoly subst_one(Var v) const;            // v := 1
  LaurentPoly negate_var(Var v) const;           // v := -v
  LaurentPoly invert_var(Var v) const;           // v := v^-1
  // Exponent remap from^e contributes to^(mult*e); 'from' may equal 'to'.
  LaurentPoly subst_power(Var from, Var to, int mult) const;
  // Replace v by an arbitrary polynomial; requires all v-exponents >= 0.
  LaurentPoly subst_poly(Var v, const LaurentPoly& value) const;

  LaurentPoly derivative(Var v) const;

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;

  std::string str() const;

 private:
  TermMap terms_;
};

class NotDivisibleError : public AlgebraError {
 public:
  NotDivisibleError(const std::string& what, LaurentPoly remainder)
      : AlgebraError(what), remainder(std::move(remainder)) {}
  LaurentPoly remainder;
};

// Parses the polynomial grammar:
//   poly   := ['-'] term { ('+' | '-') term }
//   term   := integer [ '*' factors ] | factors
//   factors:= factor { '*' factor }
//   factor := var [ '^' signed-integer ]
// Whitespace-insensitive. Throws ParseError, including for variables
// outside allowed_vars.
LaurentPoly parse_poly(const std::string& text, VarMask allowed_vars = kVarsAll);

// Division with remainder by a single divisor (grlex leading-term reduction
// after shifting both operands to nonnegative exponents). p = q*d + r.
std::pair<LaurentPoly, LaurentPoly> div_rem(const LaurentPoly& p, const LaurentPoly& d);

// Exact quotient; throws NotDivisibleError carrying the remainder.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// z := q - q^-1. Negative z-powers must clear; otherwise throws
// NotDivisibleError (nonclearing negative power).
LaurentPoly subst_z_to_q(const LaurentPoly& p);

// q - q^-1 as a polynomial, and its k-th power.
LaurentPoly q_minus_qinv();
LaurentPoly q_minus_qinv_pow(unsigned k);

// Mirror map a -> a^-1, z -> -z on an (a,z) polynomial.
LaurentPoly mirror_az(const LaurentPoly& p);

// Rewrites a Laurent polynomial in q as a polynomial in z = q - q^-1.
// Throws NotDivisibleError if the input is not in the image.
LaurentPoly q_poly_to_z(const LaurentPoly& g);

// Rewrites an (a,q) polynomial as an (a,z) polynomial coefficient-wise.
LaurentPoly aq_to_az(const LaurentPoly& h);

// Rewrites a palindromic Laurent polynomial in t as a polynomial in z^2,
// z^2 = t - 2 + t^-1, returned in the z variable (even powers).
LaurentPoly t_poly_to_conway_z(const LaurentPoly& d);

// Residue of a univariate polynomial in t modulo t^2 - t + 1, as x + y*t.
std::pair<Int, Int> eval_mod_t2_t1(const LaurentPoly& p);

}  // namespace hzknots
