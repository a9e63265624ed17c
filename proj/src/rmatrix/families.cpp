#include "qdeform/rmatrix/families.hpp"

#include <chrono>

#include "qdeform/errors.hpp"
#include "qdeform/sampling.hpp"

namespace qdeform::rmatrix {

namespace {

RatFunc num(long n, long d = 1) { return RatFunc::constant(exact::rat(n, d)); }
RatFunc var(std::string_view name) { return RatFunc::variable(name); }

RatFunc simp(RatFunc x) { return x.normalize(); }

TensorMatrix from_rows(const std::vector<std::vector<RatFunc>>& rows) {
  TensorMatrix m(2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = simp(rows[i][j]);
  }
  return m;
}

TensorMatrix op3(const TensorMatrix& x, const TensorMatrix& y, const TensorMatrix& z) {
  return TensorMatrix::kron(TensorMatrix::kron(x, y), z);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

CheckResult make_result(std::string id, bool ok, std::string detail, std::chrono::steady_clock::time_point t0) {
  CheckResult r;
  r.id = std::move(id);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.detail = std::move(detail);
  r.elapsed_ms = ms_since(t0);
  return r;
}

// h eigenvalue on each basis state, summed over the listed legs (state 1 -> +1, state 2 -> -1)
std::vector<int> h_values(int legs, const std::vector<int>& on) {
  std::vector<int> out;
  for (std::size_t s = 0; s < (std::size_t{1} << legs); ++s) {
    int h = 0;
    for (int leg : on) h += ((s >> (legs - 1 - leg)) & 1u) ? -1 : 1;
    out.push_back(h);
  }
  return out;
}

bool is_zero_matrix(const TensorMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!m.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

Family parse_family(std::string_view tag) {
  if (tag == "trig") return Family::trig;
  if (tag == "rat") return Family::rat;
  if (tag == "yang") return Family::yang;
  throw DomainError("unknown family '" + std::string(tag) + "' (expected trig|rat|yang)");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::trig: return "trig";
    case Family::rat: return "rat";
    case Family::yang: return "yang";
  }
  return "?";
}

Mode parse_mode(std::string_view tag) {
  if (tag == "symbolic") return Mode::symbolic;
  if (tag == "sampled") return Mode::sampled;
  throw DomainError("unknown mode '" + std::string(tag) + "' (expected symbolic|sampled)");
}

std::vector<std::string> spectral_names(Family f) {
  if (f == Family::trig) return {"z1", "z2", "z3"};
  return {"u1", "u2", "u3"};
}

std::vector<std::string> parameter_names(Family f) {
  switch (f) {
    case Family::trig: return {"q", "a", "b"};
    case Family::rat: return {"q", "eta", "xi"};
    case Family::yang: return {"eta", "xi"};
  }
  return {};
}

TensorMatrix permutation_P() { return TensorMatrix::permutation(2, 0, 1); }

TensorMatrix build_R0_trig(const RatFunc& q, const RatFunc& z1, const RatFunc& z2) {
  const RatFunc qi = q.inverse();
  const RatFunc den = qi * z1 - q * z2;
  const RatFunc pre = (z1 - z2) / den;
  const RatFunc o = num(0), l = num(1);
  return from_rows({{l, o, o, o},
                    {o, pre, (qi - q) * z2 / den, o},
                    {o, (qi - q) * z1 / den, pre, o},
                    {o, o, o, l}});
}

TensorMatrix build_R0_rat(const RatFunc& q, const RatFunc& eta, const RatFunc& u1, const RatFunc& u2) {
  const RatFunc qi = q.inverse();
  const RatFunc den = qi * u1 - q * u2 - q * eta;
  const RatFunc pre = (u1 - u2) / den;
  const RatFunc o = num(0), l = num(1);
  return from_rows({{l, o, o, o},
                    {o, pre, ((qi - q) * u2 - q * eta) / den, o},
                    {o, ((qi - q) * u1 - q * eta) / den, pre, o},
                    {o, o, o, l}});
}

TensorMatrix build_F_trig(const RatFunc& q, const RatFunc& zA, const RatFunc& a, const RatFunc& b) {
  TensorMatrix f = TensorMatrix::identity(2);
  f.at(1, 0) = simp(a * zA + b);                      // (|12>,|11>)
  f.at(3, 2) = simp(-(a * zA / q + q * b));           // (|22>,|21>)
  return f;
}

TensorMatrix build_F_rat(const RatFunc& q, const RatFunc& eta, const RatFunc& xi, const RatFunc& u) {
  TensorMatrix f = TensorMatrix::identity(2);
  f.at(1, 0) = simp(xi * u);
  f.at(3, 2) = simp(-(xi * (u / q - q * eta)));
  return f;
}

TensorMatrix twist(const TensorMatrix& R, const TensorMatrix& F_s1, const TensorMatrix& F_s2) {
  if (R.legs() != 2) throw StructuralError("twist expects a two-leg matrix");
  const TensorMatrix f21 = F_s1.leg_permute({1, 0});
  return f21 * R * F_s2.inverse();
}

TensorMatrix twisted_R0(Family f, const FamilyParams& p, const RatFunc& s1, const RatFunc& s2) {
  switch (f) {
    case Family::trig:
      return twist(build_R0_trig(p.q, s1, s2), build_F_trig(p.q, s1, p.a, p.b), build_F_trig(p.q, s2, p.a, p.b));
    case Family::rat:
      return twist(build_R0_rat(p.q, p.eta, s1, s2), build_F_rat(p.q, p.eta, p.xi, s1),
                   build_F_rat(p.q, p.eta, p.xi, s2));
    case Family::yang: {
      const RatFunc one = num(1);
      return twist(build_R0_rat(one, p.eta, s1, s2), build_F_rat(one, p.eta, p.xi, s1),
                   build_F_rat(one, p.eta, p.xi, s2));
    }
  }
  throw StructuralError("unknown family");
}

TensorMatrix build_RF(Family f, const FamilyParams& p, const RatFunc& s1, const RatFunc& s2) {
  const RatFunc o = num(0), l = num(1);
  switch (f) {
    case Family::trig: {
      const RatFunc& q = p.q;
      const RatFunc qi = q.inverse();
      const RatFunc den = qi * s1 - q * s2;
      const RatFunc pre = (s1 - s2) / den;
      const RatFunc A = p.a * s2 + p.b;
      const RatFunc B = p.a * s1 * qi + q * p.b;
      return from_rows({{l, o, o, o},
                        {-A * pre, pre, (qi - q) * s2 / den, o},
                        {B * pre, (qi - q) * s1 / den, pre, o},
                        {A * B * pre, -B * pre, A * pre, l}});
    }
    case Family::rat: {
      const RatFunc& q = p.q;
      const RatFunc qi = q.inverse();
      const RatFunc den = qi * s1 - q * s2 - q * p.eta;
      const RatFunc pre = (s1 - s2) / den;
      const RatFunc W = s1 * qi - q * p.eta;
      const RatFunc& xi = p.xi;
      return from_rows({{l, o, o, o},
                        {-xi * s2 * pre, pre, ((qi - q) * s2 - q * p.eta) / den, o},
                        {xi * W * pre, ((qi - q) * s1 - q * p.eta) / den, pre, o},
                        {xi * xi * s2 * W * pre, -xi * W * pre, xi * s2 * pre, l}});
    }
    case Family::yang: {
      FamilyParams sym = p;
      sym.q = var("q");
      const TensorMatrix r = build_RF(Family::rat, sym, s1, s2);
      return r.substitute(exact::bind(exact::VarTable::standard(), {{"q", num(1)}}));
    }
  }
  throw StructuralError("unknown family");
}

TensorMatrix build_rat_printed(const RatFunc& eta, const RatFunc& xi, const RatFunc& u1, const RatFunc& u2) {
  const TensorMatrix sz = sigma_z(), sm = sigma_minus();
  const RatFunc pre = (u1 - u2) / (u1 - u2 - eta);
  TensorMatrix body = TensorMatrix::identity(2) - permutation_P() * (eta / (u1 - u2));
  body = body - TensorMatrix::kron(sz, sm) * (xi * u2);
  body = body + TensorMatrix::kron(sm, sz) * (xi * (u1 - eta));
  body = body + TensorMatrix::kron(sz, sz) * (xi * xi * u2 * (u1 - eta));
  TensorMatrix out = body * pre;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.at(i, j).normalize();
  }
  return out;
}

bool ybe_holds(const TensorMatrix& r12, const TensorMatrix& r13, const TensorMatrix& r23, std::string* why) {
  const TensorMatrix a12 = r12.embed(3, {0, 1});
  const TensorMatrix a13 = r13.embed(3, {0, 2});
  const TensorMatrix a23 = r23.embed(3, {1, 2});
  return matrix_equal(a12 * a13 * a23, a23 * a13 * a12, why);
}

bool ybe_holds(const RBuilder& r, const RatFunc& s1, const RatFunc& s2, const RatFunc& s3, std::string* why) {
  return ybe_holds(r(s1, s2), r(s1, s3), r(s2, s3), why);
}

SampleOutcome run_sampled(const std::vector<std::string>& names, int trials, std::uint64_t seed,
                          const std::function<bool(const exact::Bindings&, std::string*)>& attempt) {
  SampleOutcome out;
  RationalSampler rng(seed);
  const auto& vars = exact::VarTable::standard();
  for (int t = 0; t < trials; ++t) {
    bool done = false;
    for (int retry = 0; retry <= 100 && !done; ++retry) {
      std::map<std::string, RatFunc> point;
      std::string shown;
      for (const auto& n : names) {
        const auto v = rng.next();
        point.emplace(n, RatFunc::constant(v));
        shown += (shown.empty() ? "" : ", ") + n + "=" + v.get_str();
      }
      try {
        std::string why;
        if (!attempt(exact::bind(vars, point), &why)) {
          out.ok = false;
          out.why = "at " + shown + ": " + why;
          return out;
        }
        done = true;
      } catch (const ArithmeticError&) {
        ++out.rejected;
      }
    }
    if (!done) {
      out.ok = false;
      out.why = "no nonsingular sample after 100 retries";
      return out;
    }
    ++out.points;
  }
  return out;
}

CheckResult verify_YBE(const std::string& id, const RBuilder& r, const std::vector<std::string>& spectral,
                       const std::vector<std::string>& params, Mode mode, int trials, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const RatFunc s1 = var(spectral.at(0)), s2 = var(spectral.at(1)), s3 = var(spectral.at(2));
  const TensorMatrix r12 = r(s1, s2), r13 = r(s1, s3), r23 = r(s2, s3);
  if (mode == Mode::symbolic) {
    std::string why;
    const bool ok = ybe_holds(r12, r13, r23, &why);
    return make_result(id, ok, ok ? "symbolic: R12 R13 R23 = R23 R13 R12 identically" : "symbolic: " + why, t0);
  }
  std::vector<std::string> names = params;
  names.insert(names.end(), spectral.begin(), spectral.end());
  const auto out = run_sampled(names, trials, seed, [&](const exact::Bindings& b, std::string* why) {
    return ybe_holds(r12.substitute(b), r13.substitute(b), r23.substitute(b), why);
  });
  std::string detail = out.ok ? "sampled: zero residual at " + std::to_string(out.points) + " points" : out.why;
  detail += " (seed " + std::to_string(seed) + ", " + std::to_string(out.rejected) + " singular draws rejected)";
  return make_result(id, out.ok, detail, t0);
}

CheckResult verify_YBE(Family f, Mode mode, int trials, std::uint64_t seed) {
  const FamilyParams p;
  RBuilder r = [f, p](const RatFunc& x, const RatFunc& y) { return build_RF(f, p, x, y); };
  return verify_YBE(std::string("ybe.") + family_name(f), r, spectral_names(f), parameter_names(f), mode, trials, seed);
}

CheckResult verify_twist_closed_form(Family f) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto names = spectral_names(f);
  const FamilyParams p;
  const RatFunc s1 = var(names[0]), s2 = var(names[1]);
  std::string why;
  const bool ok = matrix_equal(twisted_R0(f, p, s1, s2), build_RF(f, p, s1, s2), &why);
  return make_result(std::string("twist.") + family_name(f), ok,
                     ok ? "F21 R0 F^-1 equals the closed form entrywise (symbolic)" : why, t0);
}

CheckResult verify_rzz(Family f) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto names = spectral_names(f);
  const FamilyParams p;
  const TensorMatrix r = build_RF(f, p, var(names[0]), var(names[1]));
  const TensorMatrix diag = r.substitute(exact::bind(exact::VarTable::standard(), {{names[0], var(names[1])}}));
  std::string why;
  const bool ok = matrix_equal(diag, permutation_P(), &why);
  return make_result(std::string("rzz.") + family_name(f), ok, ok ? "R^F(s,s) = P12 (symbolic)" : why, t0);
}

TensorMatrix universal_series(const RatFunc& q, const std::vector<int>& hvals, const TensorMatrix& X) {
  const int legs = X.legs();
  if (hvals.size() != X.dim()) throw StructuralError("universal_series: h list does not match dimension");
  const RatFunc q2 = q * q;
  const RatFunc q2m1 = q2 - num(1);
  TensorMatrix result = TensorMatrix::identity(legs);
  TensorMatrix xk = X;
  RatFunc qfact = num(1);
  std::vector<RatFunc> coef(hvals.size(), num(1));  // running prod_{j<k}(q^{H+2j}-1)/(q^2-1) per state
  for (int k = 1; !is_zero_matrix(xk); ++k) {
    if (k > static_cast<int>(X.dim()) + 1) throw StructuralError("universal_series: argument is not nilpotent");
    RatFunc qk = num(0);
    for (int m = 0; m < k; ++m) qk = qk + q2.pow(m);  // (k)_{q^2}
    qfact = simp(qfact * qk);
    TensorMatrix ck(legs);
    for (std::size_t s = 0; s < hvals.size(); ++s) {
      coef[s] = simp(coef[s] * (q.pow(hvals[s] + 2 * (k - 1)) - num(1)) / q2m1);
      ck.at(s, s) = simp(coef[s] / qfact);
    }
    result = result + ck * xk;
    xk = xk * X;
  }
  return result;
}

CocycleSides cocycle_sides(const RatFunc& q, const RatFunc& a, const RatFunc& b, const RatFunc& z2, const RatFunc& z3,
                           const RatFunc& lambda) {
  const RatFunc A = simp(a * lambda), B = simp(b * lambda);
  const RatFunc two = num(1) + q * q;
  const TensorMatrix I = unit_2(), sm = sigma_minus();
  const TensorMatrix qm = q_power_h(q, -1), qp = q_power_h(q, 1);
  const TensorMatrix qm_sm = qm * sm;

  const TensorMatrix x12 = (op3(I, sm, I) * (A * z2) + op3(qm, qm_sm, I) * B) * two;
  const TensorMatrix x23 = (op3(I, I, sm) * (A * z3) + op3(I, qm, qm_sm) * B) * two;
  const TensorMatrix xd1 = (op3(I, I, sm) * (A * z3) + op3(qm, qm, qm_sm) * B) * two;
  const TensorMatrix xd2 = ((op3(I, sm, I) * z2 + op3(I, qp, sm) * z3) * A +
                            op3(qm, I, I) * (op3(I, qm_sm, I) + op3(I, qm, qm_sm)) * B) *
                           two;

  const TensorMatrix f12 = universal_series(q, h_values(3, {0}), x12);
  const TensorMatrix f23 = universal_series(q, h_values(3, {1}), x23);
  const TensorMatrix fd1 = universal_series(q, h_values(3, {0, 1}), xd1);
  const TensorMatrix fd2 = universal_series(q, h_values(3, {0}), xd2);
  return {f12 * fd1, f23 * fd2};
}

TensorMatrix universal_two_leg(const RatFunc& q, const RatFunc& a, const RatFunc& b, const RatFunc& z2,
                               const RatFunc& lambda) {
  const RatFunc two = num(1) + q * q;
  const TensorMatrix I = unit_2(), sm = sigma_minus(), qm = q_power_h(q, -1);
  const TensorMatrix x = (TensorMatrix::kron(I, sm) * (a * lambda * z2) +
                          TensorMatrix::kron(qm, qm * sm) * (b * lambda)) *
                         two;
  return universal_series(q, h_values(2, {0}), x);
}

RatFunc fit_cocycle_lambda() {
  const RatFunc q = var("q"), a = var("a"), b = var("b"), z2 = var("z2");
  const TensorMatrix raw = universal_two_leg(q, a, b, z2, num(1));
  const TensorMatrix target = build_F_trig(q, z2, a, b);
  return simp(target.at(1, 0) / raw.at(1, 0));
}

CheckResult verify_cocycle(Mode mode, int trials, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const RatFunc q = var("q"), a = var("a"), b = var("b"), z2 = var("z2"), z3 = var("z3");
  const RatFunc lambda = fit_cocycle_lambda();
  std::string why;
  if (!matrix_equal(universal_two_leg(q, a, b, z2, lambda), build_F_trig(q, z2, a, b), &why)) {
    return make_result("cocycle", false, "two-leg image does not match F for lambda = " + lambda.to_string() + ": " + why,
                       t0);
  }
  const std::string head = "lambda = " + lambda.to_string() + " (universal (a,b) -> lambda(a,b) reproduces F); ";
  if (mode == Mode::symbolic) {
    const auto sides = cocycle_sides(q, a, b, z2, z3, lambda);
    const bool ok = matrix_equal(sides.lhs, sides.rhs, &why);
    return make_result("cocycle", ok, head + (ok ? "F12 (D x id)F = F23 (id x D)F symbolically" : why), t0);
  }
  const std::vector<std::string> names{"q", "a", "b", "z1", "z2", "z3"};
  const auto out = run_sampled(names, trials, seed, [&](const exact::Bindings& bd, std::string* w) {
    const auto at = [&](const RatFunc& x) { return exact::substitute(x, bd).normalize(); };
    const auto sides = cocycle_sides(at(q), at(a), at(b), at(z2), at(z3), at(lambda));
    return matrix_equal(sides.lhs, sides.rhs, w);
  });
  std::string detail = head + (out.ok ? "holds at " + std::to_string(out.points) + " seeded points" : out.why);
  detail += " (seed " + std::to_string(seed) + ", " + std::to_string(out.rejected) + " singular draws rejected)";
  return make_result("cocycle", out.ok, detail, t0);
}

}  // namespace qdeform::rmatrix
