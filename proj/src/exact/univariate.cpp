#include "qdeform/exact/univariate.hpp"

#include "qdeform/errors.hpp"

namespace qdeform::exact {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly upoly_derivative(const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw ArithmeticError("univariate division by zero");
  UPoly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {UPoly{}, rem};
  UPoly quot(rem.size() - b.size() + 1);
  const BigRat lead_inv = 1 / b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRat c = rem[k + b.size() - 1] * lead_inv;
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

UPoly upoly_monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  const BigRat inv = 1 / p.back();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = upoly_monic(std::move(r));
  }
  return upoly_monic(std::move(a));
}

BigRat upoly_eval(const UPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

long double upoly_eval(const UPoly& p, long double x) {
  long double acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + static_cast<long double>(p[i].get_d());
  return acc;
}

UPoly to_upoly(const MPoly& p, std::size_t& var) {
  auto support = p.support();
  if (support.size() > 1) throw StructuralError("polynomial is not univariate: " + p.to_string());
  if (support.size() == 1) var = support[0];
  UPoly r(p.is_zero() ? 0 : p.total_degree() + 1);
  for (const auto& t : p.terms()) r[support.empty() ? 0 : t.mono.exponent(support[0])] = t.coef;
  trim(r);
  return r;
}

MPoly from_upoly(const UPoly& p, const VarTablePtr& vars, std::size_t var) {
  std::vector<MPoly::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) != 0) terms.push_back({Monomial::variable(var, static_cast<std::uint32_t>(i)), p[i]});
  }
  return MPoly::from_terms(vars, std::move(terms));
}

MPoly univar_gcd(const MPoly& a, const MPoly& b) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::size_t va = kUnset;
  std::size_t vb = kUnset;
  UPoly pa = to_upoly(a, va);
  UPoly pb = to_upoly(b, vb);
  if (va != kUnset && vb != kUnset && va != vb) {
    throw StructuralError("univar_gcd: polynomials in different variables");
  }
  const std::size_t var = va != kUnset ? va : (vb != kUnset ? vb : 0);
  return from_upoly(upoly_gcd(std::move(pa), std::move(pb)), a.vars(), var);
}

}  // namespace qdeform::exact
