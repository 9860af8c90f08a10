#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hzknots/laurent.hpp"
#include "hzknots/rational.hpp"

namespace hzknots {

class TransformError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Factorised signature of a HZ transform:
//   Z = lambda * prod_i (1 -+ lambda q^alpha_i) / prod_{i=0..m} (1 - lambda q^(e+2i)).
// numerator_factors holds (alpha, sign), sign -1 for (1 - lambda q^alpha),
// +1 for (1 + lambda q^alpha); denominator exponents are always e + 2i.
struct HzParams {
  int m = 1;
  int e = 0;
  std::vector<std::pair<int, int>> numerator_factors;
  int components = 1;

  std::vector<int> betas() const;
  std::vector<int> alphas() const;
  long alpha_sum() const;
  long beta_sum() const;

  friend bool operator==(const HzParams&, const HzParams&) = default;
  std::string str() const;
};

// Numerator peels some factors but an irreducible polynomial survives.
struct QuasiFactorisation {
  int m = 1;
  int e = 0;
  std::vector<std::pair<int, int>> peeled;
  LaurentPoly remainder;  // in (L, q); never 1
};

using FactoriseResult = std::variant<HzParams, QuasiFactorisation>;

// Unnormalised HOMFLY-PT in the (a,q) picture: a Laurent polynomial numerator
// carried over the declared denominator (q - q^-1).
struct UnnormalizedAq {
  LaurentPoly num;
  std::vector<int> a_support;
};

// Hbar as an (a,z) Laurent polynomial: (-1)^(components+1) (a - a^-1) z^-1 H.
LaurentPoly unnormalize_az(const LaurentPoly& h_az, int components);

// Hbar in (a,q): (-1)^(components+1) (a - a^-1) H(a, q - q^-1) over (q - q^-1).
UnnormalizedAq unnormalize_aq(const LaurentPoly& h_az, int components);

// The HZ transform: a^beta -> 1/(1 - lambda q^beta) summed over the a-support
// of Hbar, returned in canonical rational form.
RationalFn hz_transform(const UnnormalizedAq& hbar);

// Convenience composition of unnormalize_aq and hz_transform.
RationalFn hz_of_homfly(const LaurentPoly& h_az, int components);

// Builds the rational function encoded by a factorised signature.
RationalFn rational_from_params(const HzParams& p);

// Detects the factorised form. Internal gaps in the denominator progression
// are refilled (they arise when a numerator factor cancels a denominator
// factor, as for 5_2). For 2-component links a fully-cancelled top factor is
// restored so the signature carries the (1 + lambda q^a0)(1 - lambda q^a1)
// numerator shape. Throws TransformError when the denominator exponents are
// not an arithmetic progression of step 2.
FactoriseResult factorise(const RationalFn& z, int components = 1);

// Candidate sets of denominator exponents that could have cancelled against
// the numerator, relative to a caller-supplied expected m (e.g. the braid
// index). Diagnostic only; each candidate extension restores a full
// factorisation. Empty when expected_m <= found m or Z is not factorisable.
std::vector<std::vector<int>> missing_factor_candidates(const RationalFn& z, int expected_m,
                                                        int components = 1);

// True iff the lambda^N coefficient of Z at q = 1 equals N^components for all
// N <= n_max. Throws TransformError if the q = 1 denominator does not
// degenerate to a power of (1 - lambda).
bool hz_at_q1_check(const RationalFn& z, int components, int n_max);

// Morton-Franks-Williams bound m = (a-span of H)/2 + 1.
int mfw_bound(const LaurentPoly& h_az);

}  // namespace hzknots
