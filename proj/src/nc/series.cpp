#include "qdeform/nc/series.hpp"

#include <algorithm>
#include <sstream>

#include "qdeform/errors.hpp"

namespace qdeform::nc {

namespace {

using Accumulator = std::map<Word, std::vector<RatFunc>, WordLess>;

WordSum collapse(Accumulator& acc) {
  WordSum out;
  for (auto& [w, parts] : acc) {
    RatFunc s = parts.size() == 1 ? std::move(parts.front()) : RatFunc::sum(parts, parts.front().vars());
    s.normalize();
    if (!s.is_zero()) out.emplace(w, std::move(s));
  }
  return out;
}

}  // namespace

NCSeries::NCSeries(PresentationPtr pres, int order) : pres_(std::move(pres)), order_(order) {
  if (!pres_) throw StructuralError("series needs a presentation");
  if (order_ < 0) throw DomainError("truncation order must be >= 0");
}

NCSeries NCSeries::constant(PresentationPtr pres, const RatFunc& c, int order) {
  NCSeries s(std::move(pres), order);
  s.add_term({}, c);
  return s;
}

NCSeries NCSeries::generator(PresentationPtr pres, std::string_view name, int order) {
  const Word w{pres->index(name)};
  NCSeries s(std::move(pres), order);
  s.add_term(w, RatFunc::constant(1));
  return s;
}

NCSeries NCSeries::word(PresentationPtr pres, const Word& w, const RatFunc& c, int order) {
  NCSeries s(pres, order);
  if (static_cast<int>(w.size()) > order || c.is_zero()) return s;
  Accumulator acc;
  for (const auto& [nw, k] : pres->normal_order(w)) acc[nw].push_back(c * k);
  s.terms_ = collapse(acc);
  return s;
}

void NCSeries::add_term(const Word& w, RatFunc c) {
  if (c.is_zero() || static_cast<int>(w.size()) > order_) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, std::move(c));
    return;
  }
  it->second = it->second + c;
  it->second.normalize();
  if (it->second.is_zero()) terms_.erase(it);
}

RatFunc NCSeries::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

int NCSeries::valuation() const { return terms_.empty() ? order_ + 1 : static_cast<int>(terms_.begin()->first.size()); }

void NCSeries::check_same(const NCSeries& other) const {
  if (pres_ != other.pres_) {
    throw StructuralError("series over different presentations: " + pres_->name() + " vs " + other.pres_->name());
  }
}

NCSeries NCSeries::truncated(int order) const {
  NCSeries s(pres_, std::min(order, order_));
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) <= s.order_) s.terms_.emplace(w, c);
  }
  return s;
}

NCSeries NCSeries::homogeneous(int degree) const {
  NCSeries s(pres_, order_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) == degree) s.terms_.emplace(w, c);
  }
  return s;
}

NCSeries NCSeries::operator-() const {
  NCSeries s = *this;
  for (auto& [w, c] : s.terms_) c = -c;
  return s;
}

NCSeries operator+(const NCSeries& a, const NCSeries& b) {
  a.check_same(b);
  const int order = std::min(a.order_, b.order_);
  Accumulator acc;
  for (const auto* s : {&a, &b}) {
    for (const auto& [w, c] : s->terms_) {
      if (static_cast<int>(w.size()) <= order) acc[w].push_back(c);
    }
  }
  NCSeries r(a.pres_, order);
  r.terms_ = collapse(acc);
  return r;
}

NCSeries operator-(const NCSeries& a, const NCSeries& b) { return a + (-b); }

NCSeries operator*(const NCSeries& a, const NCSeries& b) {
  a.check_same(b);
  const int order = std::min(a.order_, b.order_);
  Accumulator acc;
  for (const auto& [wa, ca] : a.terms_) {
    const int da = static_cast<int>(wa.size());
    if (da > order) break;
    for (const auto& [wb, cb] : b.terms_) {
      if (da + static_cast<int>(wb.size()) > order) break;  // terms sorted by degree
      const RatFunc c = ca * cb;
      if (wb.empty() || wa.empty() || wa.back() <= wb.front()) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        acc[w].push_back(c);
        continue;
      }
      for (const auto& [w, k] : a.pres_->multiply(wa, wb)) acc[w].push_back(k.is_one() ? c : c * k);
    }
  }
  NCSeries r(a.pres_, order);
  r.terms_ = collapse(acc);
  return r;
}

NCSeries operator*(const NCSeries& a, const RatFunc& s) {
  NCSeries r(a.pres_, a.order_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) {
    RatFunc v = c * s;
    v.normalize();
    r.terms_.emplace(w, std::move(v));
  }
  return r;
}

std::string NCSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (!w.empty()) os << '*' << pres_->word_string(w);
  }
  os << " + O(" << order_ + 1 << ')';
  return os.str();
}

NCSeries series_arith(const NCSeries& a, const NCSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::scalar_mul: return a * b.constant_term();
  }
  throw DomainError("unknown series operation");
}

NCSeries inverse(const NCSeries& a) {
  const RatFunc c0 = a.constant_term();
  if (c0.is_zero()) throw ArithmeticError("series with zero constant term is not invertible");
  const RatFunc c0inv = c0.inverse();
  const int n = a.order();
  std::vector<NCSeries> a_parts, b_parts;
  for (int d = 0; d <= n; ++d) a_parts.push_back(a.homogeneous(d));
  b_parts.push_back(NCSeries::constant(a.presentation(), c0inv, n));
  // a_0 b_d + sum_{m>=1} a_m b_{d-m} = 0.
  for (int d = 1; d <= n; ++d) {
    NCSeries acc(a.presentation(), n);
    for (int m = 1; m <= d; ++m) {
      if (a_parts[m].is_zero() || b_parts[d - m].is_zero()) continue;
      acc += a_parts[m] * b_parts[d - m];
    }
    b_parts.push_back(acc * (-c0inv));
  }
  NCSeries r(a.presentation(), n);
  for (const auto& part : b_parts) r += part;
  return r;
}

NCSeries scale_variable(const NCSeries& a, std::string_view gen, const RatFunc& factor) {
  const auto g = a.presentation()->index(gen);
  NCSeries r(a.presentation(), a.order());
  std::vector<RatFunc> powers{RatFunc::constant(1)};
  for (const auto& [w, c] : a.terms()) {
    const auto k = static_cast<std::size_t>(std::count(w.begin(), w.end(), g));
    while (powers.size() <= k) powers.push_back(powers.back() * factor);
    r += NCSeries::word(a.presentation(), w, c * powers[k], a.order());
  }
  return r;
}

NCSeries drop_generator(const NCSeries& a, std::string_view gen) {
  const auto g = a.presentation()->index(gen);
  NCSeries r(a.presentation(), a.order());
  for (const auto& [w, c] : a.terms()) {
    if (std::find(w.begin(), w.end(), g) == w.end()) r += NCSeries::word(a.presentation(), w, c, a.order());
  }
  return r;
}

bool series_equal(const NCSeries& a, const NCSeries& b, std::string* mismatch) {
  if (a.presentation() != b.presentation()) {
    if (mismatch) *mismatch = "different presentations";
    return false;
  }
  const int order = std::min(a.order(), b.order());
  WordSum words;
  for (const auto* s : {&a, &b}) {
    for (const auto& [w, c] : s->terms()) {
      if (static_cast<int>(w.size()) <= order) words.emplace(w, c);
    }
  }
  for (const auto& [w, unused] : words) {
    const RatFunc ca = a.coefficient(w);
    const RatFunc cb = b.coefficient(w);
    if (!exact::ratfunc_equal(ca, cb)) {
      if (mismatch) {
        *mismatch = "coefficient of " + a.presentation()->word_string(w) + ": " + ca.to_string() + " vs " + cb.to_string();
      }
      return false;
    }
  }
  return true;
}

}  // namespace qdeform::nc
