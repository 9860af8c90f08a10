#include "hzknots/rational.hpp"

#include <algorithm>

namespace hzknots {

LaurentPoly lambda_factor(int beta, int sign) {
  LaurentPoly f = LaurentPoly::constant(1);
  f.add_term(ExpVec{0, 0, beta, 1, 0}, sign >= 0 ? 1 : -1);
  return f;
}

LaurentPoly eval_lambda_power(const LaurentPoly& p, int shift) {
  return p.subst_power(VarL, VarQ, shift);
}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw AlgebraError("rational function with zero denominator");
  if ((num_.used_vars() | den_.used_vars()) & ~kVarsLQ)
    throw AlgebraError("rational function must live in (L, q)");
  canonicalize();
}

void RationalFn::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  // Strip a common power of L if the denominator vanishes at L = 0.
  int shared_l = std::min(num_.min_exp(VarL), den_.min_exp(VarL));
  if (shared_l != 0) {
    num_ = num_.times_monomial(1, ExpVec{0, 0, 0, -shared_l, 0});
    den_ = den_.times_monomial(1, ExpVec{0, 0, 0, -shared_l, 0});
  }
  LaurentPoly unit = den_.coeff_of(VarL, 0);
  if (unit.is_zero() || unit.term_count() != 1)
    throw AlgebraError("denominator constant term in lambda is not a monomial: " + den_.str());
  // Monomials are units in the Laurent ring; divide both sides by it.
  const auto& [ue, uc] = *unit.terms().begin();
  if (uc != 1 && uc != -1)
    throw AlgebraError("denominator unit is not +-q^k: " + unit.str());
  ExpVec inv;
  for (int i = 0; i < kVarCount; ++i) inv[i] = -ue[i];
  num_ = num_.times_monomial(uc, inv);
  den_ = den_.times_monomial(uc, inv);

  // Cancel common factors (1 - L*q^beta), detected by evaluation at L = q^-beta.
  int span = 0;
  if (den_.uses(VarQ) || num_.uses(VarQ)) {
    int hi = std::max(den_.is_zero() ? 0 : den_.max_exp(VarQ), num_.max_exp(VarQ));
    int lo = std::min(den_.min_exp(VarQ), num_.min_exp(VarQ));
    span = std::max(std::abs(hi), std::abs(lo));
  }
  int bound = span + 2;
  for (int beta = -bound; beta <= bound; ++beta) {
    LaurentPoly f = lambda_factor(beta);
    while (den_.uses(VarL) && eval_lambda_power(den_, -beta).is_zero() &&
           eval_lambda_power(num_, -beta).is_zero()) {
      num_ = exact_divide(num_, f);
      den_ = exact_divide(den_, f);
    }
  }
}

RationalFn RationalFn::operator*(const RationalFn& rhs) const {
  return RationalFn(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFn RationalFn::operator+(const RationalFn& rhs) const {
  return RationalFn(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFn RationalFn::invert_q() const {
  return RationalFn(num_.invert_var(VarQ), den_.invert_var(VarQ));
}

std::string RationalFn::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

}  // namespace hzknots
