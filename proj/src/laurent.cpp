#include "hzknots/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hzknots {

char var_name(Var v) {
  static constexpr char names[kVarCount] = {'a', 'z', 'q', 'L', 't'};
  return names[static_cast<int>(v)];
}

bool GrlexGreater::operator()(const ExpVec& lhs, const ExpVec& rhs) const {
  long dl = 0, dr = 0;
  for (int i = 0; i < kVarCount; ++i) {
    dl += lhs[i];
    dr += rhs[i];
  }
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

LaurentPoly LaurentPoly::constant(Int c) {
  LaurentPoly p;
  p.add_term(kZeroExp, c);
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int exp) {
  ExpVec e = kZeroExp;
  e[static_cast<int>(v)] = exp;
  return monomial(1, e);
}

LaurentPoly LaurentPoly::monomial(Int c, const ExpVec& e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == kZeroExp;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == kZeroExp &&
         terms_.begin()->second == 1;
}

Int LaurentPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw AlgebraError("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  Int prod;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      ExpVec e;
      for (int i = 0; i < kVarCount; ++i) e[i] = el[i] + er[i];
      prod = cl * cr;
      out.add_term(e, prod);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::times_monomial(const Int& c, const ExpVec& e) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [te, tc] : terms_) {
    ExpVec ne;
    for (int i = 0; i < kVarCount; ++i) ne[i] = te[i] + e[i];
    out.terms_.emplace(ne, tc * c);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

VarMask LaurentPoly::used_vars() const {
  VarMask m = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kVarCount; ++i)
      if (e[i] != 0) m |= 1u << i;
  return m;
}

int LaurentPoly::min_exp(Var v) const {
  if (terms_.empty()) throw AlgebraError("min_exp of zero polynomial");
  int best = terms_.begin()->first[static_cast<int>(v)];
  for (const auto& [e, c] : terms_) best = std::min(best, e[static_cast<int>(v)]);
  return best;
}

int LaurentPoly::max_exp(Var v) const {
  if (terms_.empty()) throw AlgebraError("max_exp of zero polynomial");
  int best = terms_.begin()->first[static_cast<int>(v)];
  for (const auto& [e, c] : terms_) best = std::max(best, e[static_cast<int>(v)]);
  return best;
}

std::vector<int> LaurentPoly::exponents_of(Var v) const {
  std::set<int> s;
  for (const auto& [e, c] : terms_) s.insert(e[static_cast<int>(v)]);
  return std::vector<int>(s.begin(), s.end());
}

LaurentPoly LaurentPoly::coeff_of(Var v, int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<int>(v)] != k) continue;
    ExpVec ne = e;
    ne[static_cast<int>(v)] = 0;
    out.terms_.emplace(ne, c);
  }
  return out;
}

LaurentPoly LaurentPoly::subst_one(Var v) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[static_cast<int>(v)] = 0;
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly LaurentPoly::negate_var(Var v) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<int>(v)] % 2 == 0)
      out.terms_.emplace(e, c);
    else
      out.terms_.emplace(e, -c);
  }
  return out;
}

LaurentPoly LaurentPoly::invert_var(Var v) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[static_cast<int>(v)] = -ne[static_cast<int>(v)];
    out.terms_.emplace(ne, c);
  }
  return out;
}

LaurentPoly LaurentPoly::subst_power(Var from, Var to, int mult) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    int k = ne[static_cast<int>(from)];
    ne[static_cast<int>(from)] = 0;
    ne[static_cast<int>(to)] += mult * k;
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly LaurentPoly::subst_poly(Var v, const LaurentPoly& value) const {
  if (is_zero()) return LaurentPoly();
  int lo = min_exp(v);
  if (lo < 0)
    throw AlgebraError("subst_poly requires nonnegative exponents of the substituted variable");
  int hi = max_exp(v);
  // Horner over the substituted variable.
  LaurentPoly out = coeff_of(v, hi);
  for (int k = hi - 1; k >= 0; --k) {
    out = out * value;
    out += coeff_of(v, k);
  }
  return out;
}

LaurentPoly LaurentPoly::derivative(Var v) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<int>(v)];
    if (k == 0) continue;
    ExpVec ne = e;
    ne[static_cast<int>(v)] = k - 1;
    out.add_term(ne, c * k);
  }
  return out;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = e != kZeroExp;
    if (!has_var) {
      os << abs_c.get_str();
      continue;
    }
    bool need_star = false;
    if (abs_c != 1) {
      os << abs_c.get_str();
      need_star = true;
    }
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << var_name(static_cast<Var>(i));
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;
  VarMask allowed;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  int var_index(char c) const {
    switch (c) {
      case 'a': return VarA;
      case 'z': return VarZ;
      case 'q': return VarQ;
      case 'L': return VarL;
      case 't': return VarT;
      default: return -1;
    }
  }

  Int parse_integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer", start);
    return Int(text.substr(start, pos - start));
  }

  int parse_signed_int() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Int v = parse_integer();
    if (!v.fits_sint_p()) throw ParseError("exponent out of range", pos);
    int i = static_cast<int>(v.get_si());
    return neg ? -i : i;
  }

  // factor := var [ '^' signed-integer ]
  void parse_factor(ExpVec& e) {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected variable", pos);
    int idx = var_index(text[pos]);
    if (idx < 0) throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    if ((allowed & (1u << idx)) == 0)
      throw ParseError(std::string("variable '") + text[pos] + "' not allowed here", pos);
    ++pos;
    int exp = 1;
    if (accept('^')) exp = parse_signed_int();
    e[idx] += exp;
  }

  // term := integer [ '*' factors ] | factors
  void parse_term(LaurentPoly& out, bool negative) {
    skip_ws();
    if (pos >= text.size()) throw ParseError("expected term", pos);
    Int coeff = 1;
    ExpVec e = kZeroExp;
    bool saw_int = std::isdigit(static_cast<unsigned char>(text[pos])) != 0;
    if (saw_int) {
      coeff = parse_integer();
      if (accept('*')) {
        parse_factor(e);
        while (accept('*')) parse_factor(e);
      }
    } else {
      parse_factor(e);
      while (accept('*')) parse_factor(e);
    }
    if (negative) coeff = -coeff;
    out.add_term(e, coeff);
  }

  LaurentPoly parse() {
    LaurentPoly out;
    skip_ws();
    if (pos >= text.size()) throw ParseError("empty polynomial", pos);
    bool neg = accept('-');
    parse_term(out, neg);
    while (!at_end()) {
      if (accept('+'))
        parse_term(out, false);
      else if (accept('-'))
        parse_term(out, true);
      else
        throw ParseError("expected '+' or '-'", pos);
    }
    return out;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, VarMask allowed_vars) {
  Parser p{text, 0, allowed_vars};
  return p.parse();
}

std::pair<LaurentPoly, LaurentPoly> div_rem(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw AlgebraError("division by zero polynomial");
  if (p.is_zero()) return {LaurentPoly(), LaurentPoly()};

  // Shift both operands to nonnegative exponents so grlex is a well-order.
  ExpVec sp, sd;
  for (int i = 0; i < kVarCount; ++i) {
    sp[i] = -p.min_exp(static_cast<Var>(i));
    sd[i] = -d.min_exp(static_cast<Var>(i));
  }
  LaurentPoly w = p.times_monomial(1, sp);
  LaurentPoly dd = d.times_monomial(1, sd);

  const auto& dlead = *dd.terms().begin();
  LaurentPoly quot, rem;
  while (!w.is_zero()) {
    const auto& wlead = *w.terms().begin();
    ExpVec diff;
    bool divisible = true;
    for (int i = 0; i < kVarCount; ++i) {
      diff[i] = wlead.first[i] - dlead.first[i];
      if (diff[i] < 0) divisible = false;
    }
    Int qc, r;
    if (divisible) {
      mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), wlead.second.get_mpz_t(),
                  dlead.second.get_mpz_t());
      if (r != 0) divisible = false;
    }
    if (divisible) {
      quot.add_term(diff, qc);
      w -= dd.times_monomial(qc, diff);
    } else {
      rem.add_term(wlead.first, wlead.second);
      LaurentPoly lead = LaurentPoly::monomial(wlead.second, wlead.first);
      w -= lead;
    }
  }
  // Undo the shifts: p = q*d + r  <=>  w = (q * x^(sp-sd)) * dd + r * x^sp.
  ExpVec unq, unr;
  for (int i = 0; i < kVarCount; ++i) {
    unq[i] = sd[i] - sp[i];
    unr[i] = -sp[i];
  }
  return {quot.times_monomial(1, unq), rem.times_monomial(1, unr)};
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
  auto [q, r] = div_rem(p, d);
  if (!r.is_zero())
    throw NotDivisibleError("polynomial division is not exact; remainder " + r.str(), r);
  return q;
}

LaurentPoly q_minus_qinv() {
  LaurentPoly p = LaurentPoly::variable(VarQ, 1);
  p -= LaurentPoly::variable(VarQ, -1);
  return p;
}

LaurentPoly q_minus_qinv_pow(unsigned k) { return q_minus_qinv().pow(k); }

LaurentPoly subst_z_to_q(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  int lo = std::min(p.min_exp(VarZ), 0);
  // Clear negative z-powers by a shift, substitute, then divide back.
  LaurentPoly shifted = p.times_monomial(1, ExpVec{0, -lo, 0, 0, 0});
  LaurentPoly substituted = shifted.subst_poly(VarZ, q_minus_qinv());
  if (lo == 0) return substituted;
  auto [q, r] = div_rem(substituted, q_minus_qinv_pow(static_cast<unsigned>(-lo)));
  if (!r.is_zero())
    throw NotDivisibleError("negative z-powers do not clear under z = q - q^-1", r);
  return q;
}

LaurentPoly mirror_az(const LaurentPoly& p) { return p.invert_var(VarA).negate_var(VarZ); }

LaurentPoly q_poly_to_z(const LaurentPoly& g) {
  if ((g.used_vars() & ~kVarsQ) != 0)
    throw AlgebraError("q_poly_to_z expects a univariate polynomial in q");
  LaurentPoly rest = g;
  LaurentPoly out;
  while (!rest.is_zero()) {
    int d = rest.max_exp(VarQ);
    if (d < 0)
      throw NotDivisibleError("polynomial is not expressible in z = q - q^-1", rest);
    if (d == 0) {
      if (!rest.is_constant())
        throw NotDivisibleError("polynomial is not expressible in z = q - q^-1", rest);
      out.add_term(kZeroExp, rest.constant_value());
      break;
    }
    LaurentPoly lead = rest.coeff_of(VarQ, d);
    if (!lead.is_constant())
      throw AlgebraError("q_poly_to_z expects a univariate polynomial in q");
    Int c = lead.constant_value();
    out.add_term(ExpVec{0, d, 0, 0, 0}, c);
    rest -= q_minus_qinv_pow(static_cast<unsigned>(d)).times_monomial(c, kZeroExp);
  }
  return out;
}

LaurentPoly aq_to_az(const LaurentPoly& h) {
  LaurentPoly out;
  for (int e : h.exponents_of(VarA)) {
    LaurentPoly piece = q_poly_to_z(h.coeff_of(VarA, e));
    out += piece.times_monomial(1, ExpVec{e, 0, 0, 0, 0});
  }
  return out;
}

LaurentPoly t_poly_to_conway_z(const LaurentPoly& d) {
  if ((d.used_vars() & ~kVarsT) != 0)
    throw AlgebraError("t_poly_to_conway_z expects a univariate polynomial in t");
  // z^2 = t - 2 + t^-1
  LaurentPoly zsq = LaurentPoly::variable(VarT, 1);
  zsq += LaurentPoly::variable(VarT, -1);
  zsq -= LaurentPoly::constant(2);
  LaurentPoly rest = d;
  LaurentPoly out;
  while (!rest.is_zero()) {
    int deg = rest.max_exp(VarT);
    if (deg < 0)
      throw NotDivisibleError("polynomial in t is not palindromic", rest);
    if (deg == 0) {
      out.add_term(kZeroExp, rest.constant_value());
      break;
    }
    Int c = rest.coeff_of(VarT, deg).constant_value();
    out.add_term(ExpVec{0, 2 * deg, 0, 0, 0}, c);
    rest -= zsq.pow(static_cast<unsigned>(deg)).times_monomial(c, kZeroExp);
  }
  return out;
}

std::pair<Int, Int> eval_mod_t2_t1(const LaurentPoly& p) {
  if ((p.used_vars() & ~kVarsT) != 0)
    throw AlgebraError("eval_mod_t2_t1 expects a univariate polynomial in t");
  // x + y*t arithmetic modulo t^2 = t - 1; note t^-1 = 1 - t.
  auto mul = [](std::pair<Int, Int> u, const std::pair<Int, Int>& v) {
    Int x = u.first * v.first - u.second * v.second;
    Int y = u.first * v.second + u.second * v.first + u.second * v.second;
    return std::pair<Int, Int>{x, y};
  };
  auto power = [&](std::pair<Int, Int> base, unsigned k) {
    std::pair<Int, Int> acc{1, 0};
    while (k > 0) {
      if (k & 1u) acc = mul(acc, base);
      k >>= 1u;
      if (k > 0) base = mul(base, base);
    }
    return acc;
  };
  std::pair<Int, Int> total{0, 0};
  for (const auto& [e, c] : p.terms()) {
    int k = e[static_cast<int>(VarT)];
    std::pair<Int, Int> tk =
        k >= 0 ? power({0, 1}, static_cast<unsigned>(k)) : power({1, -1}, static_cast<unsigned>(-k));
    total.first += c * tk.first;
    total.second += c * tk.second;
  }
  return total;
}

}  // namespace hzknots
