#include "qdeform/nc/identities.hpp"

#include <chrono>

#include "qdeform/errors.hpp"
#include "qdeform/nc/qfunctions.hpp"
#include "qdeform/nc/substitution.hpp"

namespace qdeform::nc {

namespace {

const char* const kParamNames[] = {"q", "p", "r", "s", "eta", "alpha", "beta", "gamma"};

RatFunc one() { return RatFunc::constant(1); }

// Builders share one presentation per call so products stay within it.
struct Env {
  PresentationPtr pres;
  int order;

  NCSeries g(std::string_view name) const { return NCSeries::generator(pres, name, order); }
  NCSeries k(const RatFunc& c) const { return NCSeries::constant(pres, c, order); }
  NCSeries unit() const { return k(one()); }
};

// (T - 1)/(q^{-1} - 1): the q-bar number whose q-bar power is T.
RatFunc qbar_number(const RatFunc& t, const RatFunc& q) { return (t - one()) / (q.inverse() - one()); }

IdentityInstance series_identity(std::string id, std::vector<NCSeries> sides, bool exact = false) {
  return IdentityInstance{std::move(id), std::move(sides), exact};
}

IdentityInstance build_q_core(std::string_view id, const Params& prm, int order) {
  const RatFunc& q = prm.get("q");
  const RatFunc& p = prm.get("p");
  const RatFunc& r = prm.get("r");
  const RatFunc pinv = p.inverse();
  const std::string name(id);
  if (id == "Q10" || id == "Q11") {
    Env e{q_commuting(q, 3), order};
    const auto u = e.g("u"), v = e.g("v"), w = e.g("w");
    const auto rhs = q_power(u + v + w, p, q);
    if (id == "Q10") {
      const auto inner = inverse(e.unit() - v * pinv - u * q.inverse());
      return series_identity(name, {q_power(w * inner, p, q) * q_power(u + v, p, q), rhs});
    }
    const auto inner = inverse(e.unit() - v * q.inverse() - u * pinv);
    return series_identity(name, {q_power(u + v, p, q) * q_power(inner * w, p, q), rhs});
  }
  Env e{q_commuting(q, 2), order};
  const auto u = e.g("u"), v = e.g("v");
  if (id == "Q1") return series_identity(name, {q_power(u, p, q) * q_power(u * pinv, r, q), q_power(u, p * r, q)});
  if (id == "Q2") {
    return series_identity(name, {q_power(u, p, q) * q_power(v, p, q), q_power(u + v - u * v * pinv, p, q)});
  }
  if (id == "Q3") return series_identity(name, {q_power(v, p, q) * q_power(u, p, q), q_power(u + v - u * v, p, q)});
  if (id == "Q4") {
    const auto f = q_power(u, p, q);
    return series_identity(name, {(e.unit() - u) * f, (e.unit() - u * pinv) * scale_variable(f, "u", q)});
  }
  if (id == "Q5") {
    const RatFunc inv1mq = (one() - q).inverse();
    return series_identity(name, {q_power(u, p, q) * q_exp(u * (pinv * inv1mq), q), q_exp(u * inv1mq, q)});
  }
  if (id == "Q6") return series_identity(name, {q_exp(u, q) * q_exp(v, q), q_exp(u + v, q)});
  if (id == "Q7") {
    return series_identity(name, {q_exp(v, q) * q_exp(u, q), q_exp(u + v + (u * v) * (q - one()), q)});
  }
  if (id == "Q9") {
    return series_identity(name, {q_power(v * r.inverse() + u, p, q) * q_power(v + u * pinv, r, q), q_power(u + v, p * r, q)});
  }
  throw DomainError("unknown identity id '" + name + "'");
}

RatFunc qpow(const RatFunc& q, int k) { return q.pow(k); }

// Linear factor 1 - sum c_i g_i.
NCSeries linear(const Env& e, std::initializer_list<std::pair<RatFunc, const char*>> terms) {
  NCSeries s = e.unit();
  for (const auto& [c, g] : terms) s = s - e.g(g) * c;
  return s;
}

IdentityInstance build_proof_step(std::string_view id, const Params& prm, int n) {
  const RatFunc& q = prm.get("q");
  const std::string name(id);
  if (id == "Q12") {
    const RatFunc& p = prm.get("p");
    const RatFunc& r = prm.get("r");
    Env e{q_commuting(q, 2), 3};
    const RatFunc qi = q.inverse();
    return series_identity(name,
                           {linear(e, {{p, "v"}, {one(), "u"}}) * linear(e, {{r, "v"}, {qi, "u"}}),
                            linear(e, {{r, "v"}, {one(), "u"}}) * linear(e, {{p, "v"}, {qi, "u"}})},
                           true);
  }
  if (id == "Q12W") {
    const RatFunc& p = prm.get("p");
    const RatFunc& r = prm.get("r");
    Env e{q_commuting(q, 3), 3};
    const RatFunc qi = q.inverse();
    return series_identity(
        name,
        {linear(e, {{p, "v"}, {r, "u"}, {one(), "w"}}) * linear(e, {{q * p, "v"}, {qi * r, "u"}}),
         linear(e, {{p, "v"}, {r, "u"}}) * linear(e, {{q * p, "v"}, {qi * r, "u"}, {one(), "w"}})},
        true);
  }
  if (n < 1) throw DomainError(name + " needs a positive integer n");
  const RatFunc qn = qpow(q, n);
  if (id == "Q13") {
    Env e{q_commuting(q, 2), n + 2};
    NCSeries prod = e.unit();
    for (int i = 1; i <= n; ++i) prod = prod * linear(e, {{qpow(q, -i), "u"}});
    return series_identity(name, {q_power(e.g("u"), qn, q), prod}, true);
  }
  if (id == "Q15") {
    Env e{q_commuting(q, 2), n + 2};
    NCSeries naive = e.unit(), reordered = e.unit();
    for (int i = 1; i <= n; ++i) {
      naive = naive * linear(e, {{qpow(q, -i), "u"}, {qpow(q, -i), "v"}});
      reordered = reordered * linear(e, {{qpow(q, -(n + 1 - i)), "v"}, {qpow(q, -i), "u"}});
    }
    return series_identity(name, {q_power(e.g("u") + e.g("v"), qn, q), naive, reordered}, true);
  }
  if (id == "Q15W") {
    Env e{q_commuting(q, 3), n + 3};
    const RatFunc qi = q.inverse();
    const auto tail = linear(e, {{qi, "v"}, {qpow(q, -n - 1), "u"}});
    const auto lhs = q_power(e.g("v") * qi + e.g("u") + e.g("w") * qi, qn, q) * tail;
    NCSeries first = e.unit();
    for (int i = 1; i <= n; ++i) {
      first = first * linear(e, {{qpow(q, -(n + 2 - i)), "v"}, {qpow(q, -i), "u"}, {qpow(q, -(i + 1)), "w"}});
    }
    first = first * tail;
    NCSeries second = linear(e, {{qpow(q, -(n + 1)), "v"}, {qi, "u"}});
    for (int j = 2; j <= n + 1; ++j) {
      second = second * linear(e, {{qpow(q, -(n + 2 - j)), "v"}, {qpow(q, -j), "u"}, {qpow(q, -j), "w"}});
    }
    return series_identity(name, {lhs, first, second}, true);
  }
  throw DomainError("unknown identity id '" + name + "'");
}

IdentityInstance build_rational(std::string_view id, const Params& prm, int order) {
  const RatFunc& q = prm.get("q");
  const RatFunc& p = prm.get("p");
  const RatFunc& r = prm.get("r");
  const RatFunc& s = prm.get("s");
  const RatFunc& eta = prm.get("eta");
  const RatFunc pinv = p.inverse();
  const RatFunc qi = q.inverse();
  Env e{rational_xyz(q, eta), order};
  const auto x = e.g("x"), y = e.g("y"), z = e.g("z");
  const RatFunc c = qbar_number(s.inverse(), q);  // (c)_qbar
  const auto base = x + y * (eta * c);
  const std::string name(id);
  if (id == "R1") {
    const RatFunc cb = qbar_number((s * r).inverse(), q);  // (c+b)_qbar
    const RatFunc cma = qbar_number(p / s, q);           // (c-a)_qbar
    return series_identity(name, {q_power(base, p * r, q),
                                  q_power(x + y * (eta * cb), p, q) * q_power(x * pinv + y * (pinv * eta * cma), r, q)});
  }
  if (id == "R2") {
    const RatFunc cpa = qbar_number(q / (s * p), q);  // (c+a-1)_qbar
    const auto inner = inverse(e.unit() - x * qi - y * (eta * qi * cpa));
    return series_identity(name, {q_power(z * inner, p, q) * q_power(base, p, q), q_power(base + z, p, q)});
  }
  if (id == "R3") {
    const RatFunc cma = qbar_number(p / (s * q), q);  // (c-a+1)_qbar
    const auto inner = inverse(e.unit() - x * pinv - y * (eta * pinv * cma));
    return series_identity(name, {q_power(base, p, q) * q_power(inner * z, p, q), q_power(base + z, p, q)});
  }
  throw DomainError("unknown identity id '" + name + "'");
}

IdentityInstance build_yangian(std::string_view id, const Params& prm, int order) {
  const RatFunc& eta = prm.get("eta");
  const RatFunc& al = prm.get("alpha");
  const RatFunc& be = prm.get("beta");
  const RatFunc& ga = prm.get("gamma");
  Env e{yangian_xyz(eta), order};
  const auto x = e.g("x"), y = e.g("y"), z = e.g("z");
  const auto base = x + y * (eta * ga);
  const std::string name(id);
  if (id == "Y1") {
    return series_identity(name, {power(base, al + be),
                                  power(x + y * (eta * (ga + be)), al) * power(x + y * (eta * (ga - al)), be)});
  }
  if (id == "Y2") {
    const auto inner = inverse(e.unit() - x - y * (eta * (ga + al - one())));
    return series_identity(name, {power(z * inner, al) * power(base, al), power(base + z, al)});
  }
  if (id == "Y3") {
    const auto inner = inverse(e.unit() - x - y * (eta * (ga - al + one())));
    return series_identity(name, {power(base, al) * power(inner * z, al), power(base + z, al)});
  }
  throw DomainError("unknown identity id '" + name + "'");
}

bool is_proof_step(std::string_view id) {
  return id == "Q12" || id == "Q12W" || id == "Q13" || id == "Q15" || id == "Q15W";
}

std::string compare_sides(const IdentityInstance& inst, bool* ok) {
  std::string why;
  for (std::size_t i = 1; i < inst.sides.size(); ++i) {
    if (!series_equal(inst.sides[0], inst.sides[i], &why)) {
      *ok = false;
      return "side 0 vs side " + std::to_string(i) + ": " + why;
    }
  }
  *ok = true;
  std::size_t words = 0;
  for (const auto& s : inst.sides) words = std::max(words, s.terms().size());
  return std::to_string(words) + " words";
}

CheckResult verify_substitution(std::string_view id, const Params& prm) {
  const RatFunc& q = prm.get("q");
  const RatFunc& eta = prm.get("eta");
  CheckResult res;
  res.id = std::string(id);
  PresentationPtr source, expected;
  Substitution sub;
  if (id == "SUBQ") {
    source = q_commuting(q, 3);
    expected = rational_xyz(q, eta);
    sub.targets = {"x", "y", "z"};
    const auto u = NCSeries::generator(source, "u", 1), v = NCSeries::generator(source, "v", 1),
               w = NCSeries::generator(source, "w", 1);
    sub.images = {u + v * (eta / (q.inverse() - one())), v, w};
  } else {
    source = e_variables(q);
    expected = f_variables(q, eta);
    sub.targets = {"f0", "f1"};
    const auto e1 = NCSeries::generator(source, "E1", 1), e0 = NCSeries::generator(source, "E0", 1);
    sub.images = {e0, e1 + e0 * (eta / ((q * q).inverse() - one()))};
  }
  const auto induced = apply_substitution(source, sub);
  std::string why;
  const bool ok = presentation_equal(*induced.presentation, *expected, &why);
  res.status = ok ? CheckStatus::pass : CheckStatus::fail;
  res.detail = ok ? "induced relations match " + expected->name() + " (" + induced.detail + ")" : why;
  return res;
}

}  // namespace

Params Params::symbolic() {
  Params p;
  for (const char* n : kParamNames) p.values_.emplace(n, RatFunc::variable(n));
  return p;
}

const RatFunc& Params::get(std::string_view name) const {
  auto it = values_.find(std::string(name));
  if (it == values_.end()) throw DomainError("unknown parameter '" + std::string(name) + "'");
  return it->second;
}

Params Params::with(const std::string& name, const RatFunc& value) const {
  get(name);
  Params p = *this;
  p.values_[name] = value;
  return p;
}

bool Params::is_symbolic(const std::string& name) const {
  const auto& v = get(name);
  return !v.constant_value().has_value();
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {"Q1",  "Q2",  "Q3",  "Q4",  "Q5",   "Q6", "Q7", "Q9", "Q10", "Q11", "Q12", "Q12W",
                                               "Q13", "Q15", "Q15W", "R1", "R2",   "R3", "Y1", "Y2", "Y3",  "SUBQ", "SUBF"};
  return ids;
}

const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names = {"q-core", "rational", "yangian", "proof-steps", "all"};
  return names;
}

std::vector<std::string> catalogue(std::string_view name) {
  if (name == "q-core") return {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q9", "Q10", "Q11"};
  if (name == "rational") return {"R1", "R2", "R3", "SUBQ", "SUBF"};
  if (name == "yangian") return {"Y1", "Y2", "Y3"};
  if (name == "proof-steps") return {"Q12", "Q12W", "Q13", "Q15", "Q15W"};
  if (name == "all") return identity_ids();
  throw DomainError("unknown catalogue '" + std::string(name) + "'");
}

IdentityInstance build_identity(std::string_view id, const Params& params, int order, int n) {
  if (order < 0) throw DomainError("order must be >= 0");
  if (is_proof_step(id)) return build_proof_step(id, params, n);
  if (!id.empty() && id[0] == 'R') return build_rational(id, params, order);
  if (!id.empty() && id[0] == 'Y') return build_yangian(id, params, order);
  if (!id.empty() && id[0] == 'Q') return build_q_core(id, params, order);
  throw DomainError("unknown identity id '" + std::string(id) + "'");
}

CheckResult verify_identity(std::string_view id, int order, const Params& params) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult res;
  if (id == "SUBQ" || id == "SUBF") {
    res = verify_substitution(id, params);
  } else if (is_proof_step(id)) {
    res.id = std::string(id);
    const bool has_n = id == "Q13" || id == "Q15" || id == "Q15W";
    res.status = CheckStatus::pass;
    std::string detail;
    for (int n = 1; n <= (has_n ? 5 : 1); ++n) {
      bool ok = false;
      const auto inst = build_identity(id, params, order, n);
      const std::string d = compare_sides(inst, &ok);
      if (!ok) {
        res.status = CheckStatus::fail;
        res.detail = (has_n ? "n=" + std::to_string(n) + ": " : "") + d;
        break;
      }
      detail = has_n ? "exact for n=1..5 (" + std::to_string(inst.sides[0].order()) + "-truncation exceeds degree)"
                     : "exact polynomial identity, symbolic exponents";
    }
    if (res.passed()) res.detail = detail;
  } else {
    if (order < 1) throw DomainError("order must be >= 1");
    res.id = std::string(id);
    bool ok = false;
    const auto inst = build_identity(id, params, order);
    const std::string d = compare_sides(inst, &ok);
    res.status = ok ? CheckStatus::pass : CheckStatus::fail;
    res.detail = "order " + std::to_string(order) + ": " + d;
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace qdeform::nc
