#include "qdeform/nc/presentation.hpp"

#include <algorithm>

#include "qdeform/errors.hpp"

namespace qdeform::nc {

namespace {

void accumulate(std::map<Word, std::vector<RatFunc>, WordLess>& acc, const Word& w, RatFunc c) {
  acc[w].push_back(std::move(c));
}

WordSum collapse(std::map<Word, std::vector<RatFunc>, WordLess>& acc) {
  WordSum out;
  for (auto& [w, parts] : acc) {
    RatFunc s = parts.size() == 1 ? parts.front() : RatFunc::sum(parts, parts.front().vars());
    s.normalize();
    if (!s.is_zero()) out.emplace(w, std::move(s));
  }
  return out;
}

}  // namespace

PresentationPtr Presentation::make(std::string name, std::vector<std::string> generators, std::vector<RuleSpec> rules) {
  if (generators.empty() || generators.size() > 32) throw StructuralError("presentation needs 1..32 generators");
  std::shared_ptr<Presentation> p(new Presentation());
  p->name_ = std::move(name);
  p->generators_ = std::move(generators);
  for (std::size_t i = 0; i < p->generators_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p->generators_[i] == p->generators_[j]) throw StructuralError("duplicate generator " + p->generators_[i]);
    }
  }
  const std::size_t n = p->generators_.size();
  p->rule_index_.assign(n * n, -1);
  for (const auto& spec : rules) {
    Rule r;
    r.high = p->index(spec.high);
    r.low = p->index(spec.low);
    if (r.high <= r.low) throw StructuralError("rule " + spec.high + spec.low + " is not an out-of-order pair");
    auto& slot = p->rule_index_[r.high * n + r.low];
    if (slot >= 0) throw StructuralError("duplicate rule for " + spec.high + spec.low);
    for (const auto& t : spec.rhs) {
      Word w{p->index(t.first), p->index(t.second)};
      if (w[0] > w[1]) throw StructuralError("rule right side " + t.first + t.second + " is not normal");
      if (w[0] < r.low || w[1] > r.high) {
        throw StructuralError("rule right side " + t.first + t.second + " leaves the interval of " + spec.high + spec.low);
      }
      if (!t.coef.is_zero()) r.rhs.emplace_back(std::move(w), t.coef);
    }
    slot = static_cast<int>(p->rules_.size());
    p->rules_.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p->rule_index_[j * n + i] < 0) {
        throw StructuralError("missing rule for " + p->generators_[j] + p->generators_[i]);
      }
    }
  }
  return p;
}

std::uint8_t Presentation::index(std::string_view generator) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == generator) return static_cast<std::uint8_t>(i);
  }
  throw StructuralError("unknown generator '" + std::string(generator) + "' in " + name_);
}

const Presentation::Rule& Presentation::rule(std::uint8_t high, std::uint8_t low) const {
  return rules_.at(static_cast<std::size_t>(rule_index_.at(high * generators_.size() + low)));
}

bool Presentation::is_normal(const Word& w) const { return std::is_sorted(w.begin(), w.end()); }

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += '*';
    s += generators_.at(w[i]);
    if (j - i > 1) s += '^' + std::to_string(j - i);
    i = j;
  }
  return s;
}

WordSum Presentation::rewrite_once(const Word& w, std::size_t pos) const {
  WordSum out;
  const Rule& r = rule(w[pos], w[pos + 1]);
  for (const auto& [pair, coef] : r.rhs) {
    Word next = w;
    next[pos] = pair[0];
    next[pos + 1] = pair[1];
    out.emplace(std::move(next), coef);
  }
  return out;
}

const WordSum& Presentation::normal_order(const Word& w) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  for (auto g : w) {
    if (g >= size()) throw StructuralError("generator index out of range in " + name_);
  }
  std::size_t pos = 0;
  while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
  WordSum result;
  if (pos + 1 >= w.size()) {
    result.emplace(w, RatFunc::constant(1));
  } else {
    std::map<Word, std::vector<RatFunc>, WordLess> acc;
    for (const auto& [next, coef] : rewrite_once(w, pos)) {
      for (const auto& [nw, c] : normal_order(next)) accumulate(acc, nw, coef * c);
    }
    result = collapse(acc);
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

WordSum Presentation::normal_order(const Word& w, Strategy strategy) const {
  std::size_t pos = w.size();
  if (strategy == Strategy::leftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        pos = i;
        break;
      }
    }
  } else {
    for (std::size_t i = w.size(); i-- > 1;) {
      if (w[i - 1] > w[i]) {
        pos = i - 1;
        break;
      }
    }
  }
  if (pos >= w.size()) {
    WordSum one;
    one.emplace(w, RatFunc::constant(1));
    return one;
  }
  std::map<Word, std::vector<RatFunc>, WordLess> acc;
  for (const auto& [next, coef] : rewrite_once(w, pos)) {
    for (const auto& [nw, c] : normal_order(next, strategy)) accumulate(acc, nw, coef * c);
  }
  return collapse(acc);
}

const WordSum& Presentation::multiply(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_order(w);
}

bool presentation_equal(const Presentation& a, const Presentation& b, std::string* mismatch) {
  auto fail = [&](std::string why) {
    if (mismatch) *mismatch = std::move(why);
    return false;
  };
  if (a.generators() != b.generators()) return fail("generator lists differ");
  const auto n = static_cast<std::uint8_t>(a.size());
  for (std::uint8_t j = 0; j < n; ++j) {
    for (std::uint8_t i = 0; i < j; ++i) {
      const auto& ra = a.rule(j, i);
      const auto& rb = b.rule(j, i);
      WordSum sa(ra.rhs.begin(), ra.rhs.end());
      WordSum sb(rb.rhs.begin(), rb.rhs.end());
      for (const auto& [w, c] : sa) {
        auto it = sb.find(w);
        const RatFunc other = it == sb.end() ? RatFunc(c.vars()) : it->second;
        if (!exact::ratfunc_equal(c, other)) {
          return fail("rule " + a.generators()[j] + a.generators()[i] + ": coefficient of " + a.word_string(w) +
                      " is " + c.to_string() + " vs " + other.to_string());
        }
      }
      for (const auto& [w, c] : sb) {
        if (!sa.count(w)) {
          return fail("rule " + a.generators()[j] + a.generators()[i] + ": coefficient of " + a.word_string(w) +
                      " is 0 vs " + c.to_string());
        }
      }
    }
  }
  return true;
}

PresentationPtr q_commuting(const RatFunc& q, int generators) {
  if (generators == 2) return Presentation::make("q-commuting(u,v)", {"u", "v"}, {{"v", "u", {{q, "u", "v"}}}});
  if (generators == 3) {
    return Presentation::make("q-commuting(u,v,w)", {"u", "v", "w"},
                              {{"v", "u", {{q, "u", "v"}}}, {"w", "u", {{q, "u", "w"}}}, {"w", "v", {{q.inverse(), "v", "w"}}}});
  }
  throw StructuralError("q_commuting supports 2 or 3 generators");
}

PresentationPtr rational_xyz(const RatFunc& q, const RatFunc& eta) {
  const RatFunc two_qbar = RatFunc::constant(1) + q.inverse();
  return Presentation::make("rational(x,y,z)", {"x", "y", "z"},
                            {{"y", "x", {{q, "x", "y"}, {q * eta, "y", "y"}}},
                             {"z", "x", {{q, "x", "z"}, {q * eta * two_qbar, "y", "z"}}},
                             {"z", "y", {{q.inverse(), "y", "z"}}}});
}

PresentationPtr yangian_xyz(const RatFunc& eta) {
  const RatFunc one = RatFunc::constant(1);
  return Presentation::make("yangian(x,y,z)", {"x", "y", "z"},
                            {{"y", "x", {{one, "x", "y"}, {eta, "y", "y"}}},
                             {"z", "x", {{one, "x", "z"}, {eta * exact::BigRat(2), "y", "z"}}},
                             {"z", "y", {{one, "y", "z"}}}});
}

PresentationPtr e_variables(const RatFunc& q) {
  return Presentation::make("e-variables(E1,E0)", {"E1", "E0"}, {{"E0", "E1", {{q * q, "E1", "E0"}}}});
}

PresentationPtr f_variables(const RatFunc& q, const RatFunc& eta) {
  return Presentation::make("f-variables(f0,f1)", {"f0", "f1"},
                            {{"f1", "f0", {{(q * q).inverse(), "f0", "f1"}, {-eta, "f0", "f0"}}}});
}

PresentationPtr single(std::string name) { return Presentation::make("free(" + name + ")", {name}, {}); }

}  // namespace qdeform::nc
