#include "qdeform/rmatrix/classical.hpp"

#include <chrono>

#include "qdeform/errors.hpp"

namespace qdeform::rmatrix {

namespace {

RatFunc num(long n, long d = 1) { return RatFunc::constant(exact::rat(n, d)); }

TensorMatrix kron(const TensorMatrix& x, const TensorMatrix& y) { return TensorMatrix::kron(x, y); }

TensorMatrix commutator(const TensorMatrix& x, const TensorMatrix& y) { return x * y - y * x; }

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ClassicalKind parse_classical_kind(std::string_view tag) {
  if (tag == "dj") return ClassicalKind::dj;
  if (tag == "ab") return ClassicalKind::ab;
  if (tag == "ab_tilde") return ClassicalKind::ab_tilde;
  if (tag == "bd") return ClassicalKind::bd;
  if (tag == "st") return ClassicalKind::st;
  throw DomainError("unknown classical kind '" + std::string(tag) + "' (expected dj|ab|ab_tilde|bd|st)");
}

const char* classical_kind_name(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::dj: return "dj";
    case ClassicalKind::ab: return "ab";
    case ClassicalKind::ab_tilde: return "ab_tilde";
    case ClassicalKind::bd: return "bd";
    case ClassicalKind::st: return "st";
  }
  return "?";
}

TensorMatrix casimir_t12() {
  const auto sp = sigma_plus(), sm = sigma_minus(), sz = sigma_z();
  return kron(sm, sp) + kron(sp, sm) + kron(sz, sz) * num(1, 2);
}

TensorMatrix build_classical(ClassicalKind kind, const RatFunc& x, const RatFunc& y, const ClassicalParams& p) {
  const auto sp = sigma_plus(), sm = sigma_minus(), sz = sigma_z();
  const TensorMatrix t12 = casimir_t12();
  if (kind == ClassicalKind::st) {
    return t12 * (x - y).inverse() + (kron(sm, sz) * x - kron(sz, sm) * y) * p.xi;
  }
  const TensorMatrix dj = (t12 * ((x + y) / (x - y)) - kron(sp, sm) + kron(sm, sp)) * num(1, 2);
  const TensorMatrix a_part = (kron(sm, sz) * x - kron(sz, sm) * y) * p.a;
  switch (kind) {
    case ClassicalKind::dj: return dj;
    case ClassicalKind::ab: return dj + a_part + (kron(sm, sz) - kron(sz, sm)) * p.b;
    case ClassicalKind::ab_tilde: return dj + a_part + kron(sm, sm) * (num(4) * p.a * p.b * (x - y));
    case ClassicalKind::bd: return dj + kron(sm, sm) * (x - y);
    case ClassicalKind::st: break;
  }
  throw StructuralError("unknown classical kind");
}

CheckResult verify_CYBE(ClassicalKind kind, const ClassicalParams& p) {
  const auto t0 = std::chrono::steady_clock::now();
  const RatFunc z1 = RatFunc::variable("z1"), z2 = RatFunc::variable("z2"), z3 = RatFunc::variable("z3");
  const TensorMatrix r12 = build_classical(kind, z1, z2, p).embed(3, {0, 1});
  const TensorMatrix r13 = build_classical(kind, z1, z3, p).embed(3, {0, 2});
  const TensorMatrix r23 = build_classical(kind, z2, z3, p).embed(3, {1, 2});
  const TensorMatrix lhs = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
  std::string why;
  const bool ok = matrix_equal(lhs, TensorMatrix(3), &why);
  CheckResult r;
  r.id = std::string("cybe.") + classical_kind_name(kind);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.detail = ok ? "[r12,r13]+[r12,r23]+[r13,r23] = 0 (symbolic)" : why;
  r.elapsed_ms = ms_since(t0);
  return r;
}

CheckResult verify_gauge_equiv(const ClassicalParams& p) {
  const auto t0 = std::chrono::steady_clock::now();
  const RatFunc z1 = RatFunc::variable("z1"), z2 = RatFunc::variable("z2");
  const TensorMatrix g = unit_2() + sigma_minus() * (num(2) * p.b);
  const TensorMatrix G = kron(g, g);
  const TensorMatrix Gi = G.inverse();
  const TensorMatrix r = build_classical(ClassicalKind::ab, z1, z2, p);
  const TensorMatrix rt = build_classical(ClassicalKind::ab_tilde, z1, z2, p);
  std::string why_fwd, why_rev;
  const bool fwd = matrix_equal(G * rt * Gi, r, &why_fwd);
  const bool rev = matrix_equal(G * r * Gi, rt, &why_rev);
  CheckResult res;
  res.id = "gauge";
  res.status = (fwd || rev) ? CheckStatus::pass : CheckStatus::fail;
  std::string d = "Ad(g)(x)Ad(g) r~_ab = r_ab: ";
  d += fwd ? "holds" : "fails (" + why_fwd + ")";
  d += "; Ad(g)(x)Ad(g) r_ab = r~_ab: ";
  d += rev ? "holds" : "fails (" + why_rev + ")";
  if (fwd && rev) {
    d += "; verdict: both directions (degenerate parameters)";
  } else if (fwd || rev) {
    d += fwd ? "; verdict: g maps r~_ab to r_ab" : "; verdict: g maps r_ab to r~_ab";
  }
  res.detail = d;
  res.elapsed_ms = ms_since(t0);
  return res;
}

}  // namespace qdeform::rmatrix
