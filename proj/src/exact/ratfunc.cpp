#include "qdeform/exact/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "qdeform/errors.hpp"

namespace qdeform::exact {

namespace {

using Factor = RatFunc::Factor;

bool factor_less(const Factor& a, const Factor& b) { return structural_less(a.poly, b.poly); }

// Merges b into a (both sorted), adding multiplicities.
std::vector<Factor> merge_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && factor_less(*i, *j))) {
      out.push_back(*i++);
    } else if (i == a.end() || factor_less(*j, *i)) {
      out.push_back(*j++);
    } else {
      out.push_back({i->poly, i->mult + j->mult});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

/// Least common multiple of factored denominators, plus the cofactor L / d for any
/// contributing denominator d.
class DenominatorLcm {
 public:
  explicit DenominatorLcm(VarTablePtr vars) : vars_(std::move(vars)) {}

  void add(const RatFunc& f) {
    mono_ = Monomial::lcm(mono_, f.den_mono_);
    for (const auto& fac : f.factors_) {
      auto it = std::find_if(factors_.begin(), factors_.end(), [&](const Factor& g) { return g.poly == fac.poly; });
      if (it == factors_.end()) {
        factors_.push_back(fac);
      } else {
        it->mult = std::max(it->mult, fac.mult);
      }
    }
  }

  MPoly cofactor(const RatFunc& f) {
    MPoly c = MPoly::monomial(vars_, mono_ / f.den_mono_, BigRat(1));
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      unsigned have = 0;
      for (const auto& fac : f.factors_) {
        if (fac.poly == factors_[k].poly) {
          have = fac.mult;
          break;
        }
      }
      if (const unsigned missing = factors_[k].mult - have) c = c * power(k, missing);
    }
    return c;
  }

  void apply_to(RatFunc& f) {
    std::sort(factors_.begin(), factors_.end(), factor_less);
    f.den_mono_ = mono_;
    f.factors_ = factors_;
  }

 private:
  const MPoly& power(std::size_t k, unsigned e) {
    auto& cache = powers_[k];
    if (cache.empty()) cache.push_back(MPoly::constant(vars_, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * factors_[k].poly);
    return cache[e];
  }

  VarTablePtr vars_;
  Monomial mono_;
  std::vector<Factor> factors_;
  std::map<std::size_t, std::vector<MPoly>> powers_;
};

RatFunc::RatFunc(MPoly num) : num_(std::move(num)) {}

RatFunc::RatFunc(MPoly num, const MPoly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  absorb_denominator(den);
  cancel_monomial();
  reset_if_zero();
}

void RatFunc::absorb_denominator(const MPoly& den) {
  if (auto c = den.constant_value()) {
    num_ *= BigRat(1 / *c);
    return;
  }
  const Monomial m = den.monomial_content();
  MPoly prim = den.div_monomial(m);
  const BigRat c = prim.content();
  prim *= BigRat(1 / c);
  num_ *= BigRat(1 / c);
  den_mono_ = den_mono_ * m;
  if (!prim.is_constant()) factors_ = merge_factors(factors_, {Factor{std::move(prim), 1}});
}

void RatFunc::cancel_monomial() {
  if (den_mono_.is_one() || num_.is_zero()) return;
  const Monomial g = Monomial::gcd(den_mono_, num_.monomial_content());
  if (g.is_one()) return;
  num_ = num_.div_monomial(g);
  den_mono_ = den_mono_ / g;
}

void RatFunc::reset_if_zero() {
  if (num_.is_zero()) {
    den_mono_ = Monomial{};
    factors_.clear();
  }
}

bool RatFunc::same_den(const RatFunc& other) const {
  if (den_mono_ != other.den_mono_ || factors_.size() != other.factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].mult != other.factors_[i].mult || !(factors_[i].poly == other.factors_[i].poly)) return false;
  }
  return true;
}

MPoly RatFunc::den() const {
  MPoly d = MPoly::monomial(vars(), den_mono_, BigRat(1));
  for (const auto& f : factors_) d = d * f.poly.pow(f.mult);
  return d;
}

std::optional<BigRat> RatFunc::constant_value() const {
  if (!has_trivial_den()) return std::nullopt;
  return num_.constant_value();
}

bool RatFunc::is_one() const {
  auto v = constant_value();
  return v && *v == 1;
}

RatFunc RatFunc::with_numerator(MPoly num) const {
  RatFunc r = *this;
  r.num_ = std::move(num);
  r.cancel_monomial();
  r.reset_if_zero();
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.same_den(b)) {
    RatFunc r = a;
    r.num_ += b.num_;
    r.cancel_monomial();
    r.reset_if_zero();
    return r;
  }
  const RatFunc terms[] = {a, b};
  return RatFunc::sum(terms, a.vars());
}

RatFunc RatFunc::sum(std::span<const RatFunc> terms, const VarTablePtr& vars) {
  RatFunc r(vars);
  DenominatorLcm lcm(vars);
  bool any = false;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    lcm.add(t);
    any = true;
  }
  if (!any) return r;
  std::vector<MPoly::Term> acc;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    MPoly part = t.num_ * lcm.cofactor(t);
    for (const auto& term : part.terms()) acc.push_back(term);
  }
  r.num_ = MPoly::from_terms(vars, std::move(acc));
  if (r.num_.is_zero()) return r;
  lcm.apply_to(r);
  r.cancel_monomial();
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.vars());
  RatFunc r(a.num_ * b.num_);
  r.den_mono_ = a.den_mono_ * b.den_mono_;
  if (a.factors_.empty()) {
    r.factors_ = b.factors_;
  } else if (b.factors_.empty()) {
    r.factors_ = a.factors_;
  } else {
    r.factors_ = merge_factors(a.factors_, b.factors_);
  }
  r.cancel_monomial();
  return r;
}

RatFunc operator*(const RatFunc& a, const BigRat& s) {
  if (sgn(s) == 0) return RatFunc(a.vars());
  RatFunc r = a;
  r.num_ *= s;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by the zero rational function");
  RatFunc r(MPoly::monomial(vars(), den_mono_, BigRat(1)));
  for (const auto& f : factors_) r.num_ = r.num_ * f.poly.pow(f.mult);
  r.absorb_denominator(num_);
  r.cancel_monomial();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  RatFunc r = a * b.inverse();
  r.normalize();
  return r;
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc result = RatFunc::constant(vars(), 1);
  RatFunc base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

RatFunc& RatFunc::normalize() {
  cancel_monomial();
  for (auto it = factors_.begin(); it != factors_.end();) {
    while (it->mult > 0) {
      auto q = num_.divide_exact(it->poly);
      if (!q) break;
      num_ = std::move(*q);
      --it->mult;
    }
    it = it->mult == 0 ? factors_.erase(it) : it + 1;
  }
  reset_if_zero();
  return *this;
}

std::string RatFunc::to_string() const {
  if (has_trivial_den()) return num_.to_string();
  std::ostringstream os;
  os << '(' << num_.to_string() << ")/(";
  bool first = true;
  if (!den_mono_.is_one()) {
    os << MPoly::monomial(vars(), den_mono_, BigRat(1)).to_string();
    first = false;
  }
  for (const auto& f : factors_) {
    if (!first) os << '*';
    first = false;
    os << '(' << f.poly.to_string() << ')';
    if (f.mult > 1) os << '^' << f.mult;
  }
  os << ')';
  return os.str();
}

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.same_den(b)) return a.num_ == b.num_;
  DenominatorLcm lcm(a.vars());
  lcm.add(a);
  lcm.add(b);
  return a.num_ * lcm.cofactor(a) == b.num_ * lcm.cofactor(b);
}

RatFunc ratfunc_arithmetic(const RatFunc& a, const RatFunc& b, RatOp op) {
  switch (op) {
    case RatOp::add:
      return a + b;
    case RatOp::mul:
      return a * b;
    case RatOp::div:
      return a / b;
    case RatOp::neg:
      return -a;
  }
  throw StructuralError("unknown rational-function operation");
}

Bindings bind(const VarTablePtr& vars, const std::map<std::string, RatFunc>& by_name) {
  Bindings b;
  for (const auto& [name, value] : by_name) b.emplace(vars->index(name), value);
  return b;
}

RatFunc substitute(const MPoly& p, const Bindings& bindings) {
  const auto& vars = p.vars();
  if (bindings.empty() || p.is_zero()) return RatFunc(p);
  // Only variables that are bound and occur matter; the rest stay in the monomial.
  std::vector<std::size_t> bound;
  for (const auto& [var, value] : bindings) {
    if (var >= vars->size()) throw StructuralError("binding for variable outside the table");
    if (p.degree_in(var) > 0) bound.push_back(var);
  }
  if (bound.empty()) return RatFunc(p);

  std::map<std::size_t, std::vector<RatFunc>> powers;
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const RatFunc& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(RatFunc::constant(vars, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * bindings.at(var));
    return cache[e];
  };

  // Group terms by their bound-variable part so each distinct product is formed once.
  std::map<Monomial, MPoly> groups;
  for (const auto& t : p.terms()) {
    Monomial bound_part;
    Monomial rest = t.mono;
    for (auto v : bound) {
      if (auto e = t.mono.exponent(v)) {
        bound_part.set_exponent(v, e);
        rest.set_exponent(v, 0);
      }
    }
    auto [it, inserted] = groups.try_emplace(bound_part, MPoly(vars));
    it->second += MPoly::monomial(vars, rest, t.coef);
  }
  std::vector<RatFunc> parts;
  parts.reserve(groups.size());
  for (const auto& [bound_part, rest] : groups) {
    RatFunc prod(rest);
    for (auto v : bound) {
      if (auto e = bound_part.exponent(v)) prod = prod * power_of(v, e);
    }
    parts.push_back(std::move(prod));
  }
  return RatFunc::sum(parts, vars);
}

RatFunc substitute(const RatFunc& f, const Bindings& bindings) {
  if (bindings.empty()) return f;
  RatFunc num = substitute(f.num(), bindings);
  RatFunc den = substitute(MPoly::monomial(f.vars(), f.den_monomial(), BigRat(1)), bindings);
  if (den.is_zero()) throw SingularSubstitution("denominator monomial vanishes under substitution");
  for (const auto& fac : f.den_factors()) {
    RatFunc v = substitute(fac.poly, bindings);
    if (v.is_zero()) throw SingularSubstitution("denominator factor (" + fac.poly.to_string() + ") vanishes");
    den = den * v.pow(static_cast<int>(fac.mult));
  }
  RatFunc r = num / den;
  return r;
}

RatFunc derivative(const RatFunc& f, std::size_t var) {
  const auto& vars = f.vars();
  if (var >= vars->size()) throw StructuralError("derivative variable out of range");
  if (f.is_zero()) return f;
  // f = n / D  =>  f' = n'/D - f * (log D)',  (log D)' = e/x + sum mult * g'/g.
  std::vector<RatFunc> log_terms;
  if (auto e = f.den_monomial().exponent(var)) {
    log_terms.emplace_back(MPoly::constant(vars, e), MPoly::variable(vars, var));
  }
  for (const auto& fac : f.den_factors()) {
    MPoly dg = fac.poly.derivative(var);
    if (dg.is_zero()) continue;
    log_terms.emplace_back(dg * BigRat(fac.mult), fac.poly);
  }
  RatFunc result = f.with_numerator(f.num().derivative(var));
  if (!log_terms.empty()) result = result - f * RatFunc::sum(log_terms, vars);
  result.normalize();
  return result;
}

}  // namespace qdeform::exact
