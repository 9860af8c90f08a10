#pragma once

#include <string>

#include "hzknots/laurent.hpp"

namespace hzknots {

// Ratio of two Laurent polynomials in (L, q), canonicalized so that the
// denominator evaluates to exactly 1 at L = 0 and numerator and denominator
// share no (1 - L*q^beta) factor. Equality is decided by cross-multiplication.
class RationalFn {
 public:
  RationalFn() : num_(), den_(LaurentPoly::constant(1)) {}
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFn& lhs, const RationalFn& rhs) {
    return lhs.num_ * rhs.den_ == rhs.num_ * lhs.den_;
  }

  RationalFn operator*(const RationalFn& rhs) const;
  RationalFn operator+(const RationalFn& rhs) const;

  // q -> q^-1 on both numerator and denominator, recanonicalized.
  RationalFn invert_q() const;

  std::string str() const;

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

// 1 - L*q^beta (sign = -1) or 1 + L*q^beta (sign = +1).
LaurentPoly lambda_factor(int beta, int sign = -1);

// Substitutes L = q^shift into a polynomial in (L, q).
LaurentPoly eval_lambda_power(const LaurentPoly& p, int shift);

}  // namespace hzknots
