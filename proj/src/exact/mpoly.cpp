#include "qdeform/exact/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qdeform/errors.hpp"

namespace qdeform::exact {

void Monomial::set_exponent(std::size_t var, std::uint32_t value) {
  if (var >= kMaxVars) throw StructuralError("monomial variable index out of range");
  if (value > kMaxExponent) throw ArithmeticError("monomial exponent overflow");
  const std::uint32_t old = exponent(var);
  auto& w = words_[var / kFieldsPerWord];
  w &= ~(std::uint64_t{0xffff} << shift(var));
  w |= std::uint64_t{value} << shift(var);
  degree_ = degree_ - old + value;
}

Monomial Monomial::operator*(const Monomial& other) const {
  constexpr std::uint64_t kHigh = 0x8000800080008000ull;
  Monomial m;
  m.degree_ = degree_ + other.degree_;
  for (std::size_t w = 0; w < kWords; ++w) {
    m.words_[w] = words_[w] + other.words_[w];
    if (m.words_[w] & kHigh) throw ArithmeticError("monomial exponent overflow");
  }
  return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (auto e = std::min(a.exponent(v), b.exponent(v))) m.set_exponent(v, e);
  }
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (auto e = std::max(a.exponent(v), b.exponent(v))) m.set_exponent(v, e);
  }
  return m;
}

namespace {

bool term_desc(const MPoly::Term& a, const MPoly::Term& b) { return a.mono > b.mono; }

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<MPoly::Term> canonical(std::vector<MPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_desc);
  std::vector<MPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coef) == 0) out.pop_back();
  return out;
}

}  // namespace

MPoly MPoly::constant(VarTablePtr vars, const BigRat& value) {
  MPoly p(std::move(vars));
  if (sgn(value) != 0) p.terms_.push_back({Monomial{}, value});
  return p;
}

MPoly MPoly::variable(VarTablePtr vars, std::string_view name, std::uint32_t power) {
  const auto idx = vars->index(name);
  return variable(std::move(vars), idx, power);
}

MPoly MPoly::variable(VarTablePtr vars, std::size_t index, std::uint32_t power) {
  if (index >= vars->size()) throw StructuralError("variable index out of range");
  MPoly p(std::move(vars));
  p.terms_.push_back({Monomial::variable(index, power), BigRat(1)});
  return p;
}

MPoly MPoly::monomial(VarTablePtr vars, const Monomial& mono, const BigRat& coef) {
  MPoly p(std::move(vars));
  if (sgn(coef) != 0) p.terms_.push_back({mono, coef});
  return p;
}

MPoly MPoly::from_terms(VarTablePtr vars, std::vector<Term> terms) {
  MPoly p(std::move(vars));
  p.terms_ = canonical(std::move(terms));
  return p;
}

std::optional<BigRat> MPoly::constant_value() const {
  if (terms_.empty()) return BigRat(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coef;
  return std::nullopt;
}

BigRat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return BigRat(0);
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

std::vector<std::size_t> MPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    if (degree_in(v) > 0) out.push_back(v);
  }
  return out;
}

void MPoly::check_same_table(const MPoly& other) const {
  if (vars_ != other.vars_ && !vars_->same_as(*other.vars_)) {
    throw StructuralError("polynomials over different variable tables");
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly& MPoly::add_scaled(const MPoly& other, int sign) {
  check_same_table(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->mono > j->mono)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono > i->mono) {
      out.push_back({j->mono, sign > 0 ? j->coef : BigRat(-j->coef)});
      ++j;
    } else {
      BigRat c = sign > 0 ? BigRat(i->coef + j->coef) : BigRat(i->coef - j->coef);
      if (sgn(c) != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator+=(const MPoly& other) { return add_scaled(other, 1); }
MPoly& MPoly::operator-=(const MPoly& other) { return add_scaled(other, -1); }

MPoly& MPoly::operator*=(const BigRat& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= scalar;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_table(b);
  MPoly r(a.vars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term preserves the order.
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) r.terms_.push_back({t.mono * single.mono, t.coef * single.coef});
    return r;
  }
  std::vector<MPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prods.push_back({x.mono * y.mono, x.coef * y.coef});
  }
  r.terms_ = canonical(std::move(prods));
  return r;
}

MPoly MPoly::mul_monomial(const Monomial& mono) const {
  MPoly r = *this;
  if (mono.is_one()) return r;
  for (auto& t : r.terms_) t.mono = t.mono * mono;
  return r;
}

MPoly MPoly::div_monomial(const Monomial& mono) const {
  MPoly r = *this;
  if (mono.is_one()) return r;
  for (auto& t : r.terms_) {
    if (!mono.divides(t.mono)) throw ArithmeticError("monomial does not divide polynomial");
    t.mono = t.mono / mono;
  }
  return r;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result = constant(vars_, 1);
  MPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  check_same_table(divisor);
  if (divisor.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (is_zero()) return MPoly(vars_);
  if (divisor.terms_.size() == 1) {
    const auto& lt = divisor.terms_[0];
    MPoly q(vars_);
    q.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({t.mono / lt.mono, t.coef / lt.coef});
    }
    return q;
  }
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  const auto& lt = divisor.terms_.front();
  std::vector<Term> quot;
  MPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& rt = rem.terms_.front();
    if (!lt.mono.divides(rt.mono)) return std::nullopt;
    Term qt{rt.mono / lt.mono, rt.coef / lt.coef};
    MPoly step = MPoly::monomial(vars_, qt.mono, qt.coef) * divisor;
    rem -= step;
    quot.push_back(std::move(qt));
  }
  MPoly q(vars_);
  q.terms_ = std::move(quot);  // generated in strictly descending order
  return q;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= vars_->size()) throw StructuralError("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exponent(var, e - 1);
    out.push_back({m, t.coef * e});
  }
  return from_terms(vars_, std::move(out));
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = Monomial::gcd(g, t.mono);
  }
  return g;
}

BigRat MPoly::content() const {
  if (terms_.empty()) return BigRat(1);
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  BigRat c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(terms_.front().coef) < 0) c = -c;
  return c;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigRat c = t.coef;
    if (sgn(c) < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool unit = c == 1;
    if (!unit || t.mono.is_one()) os << c.get_str();
    bool need_star = !unit;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      const auto e = t.mono.exponent(v);
      if (e == 0) continue;
      if (need_star) os << '*';
      os << vars_->name(v);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + t.mono.hash();
    h ^= std::hash<std::string>{}(t.coef.get_str()) + (h << 6);
  }
  return h;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

bool structural_less(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.mono != y.mono) return x.mono < y.mono;
    if (x.coef != y.coef) return x.coef < y.coef;
  }
  return a.terms_.size() < b.terms_.size();
}

MPoly poly_arithmetic(const MPoly& a, const MPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::mul:
      return a * b;
    case PolyOp::neg:
      return -a;
  }
  throw StructuralError("unknown polynomial operation");
}

}  // namespace qdeform::exact
