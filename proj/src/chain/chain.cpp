#include "qdeform/chain/chain.hpp"

#include <array>
#include <chrono>
#include <cstdio>

#include "qdeform/errors.hpp"

namespace qdeform::chain {

namespace {

using exact::RatFunc;

std::string fmt_g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
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

RatFunc k(const BigRat& x) { return RatFunc::constant(x); }

const char* spectral_var(Family f) { return f == Family::trig ? "z" : "u"; }

rmatrix::TensorMatrix symbolic_R(const ChainSpec& spec) {
  return rmatrix::build_RF(spec.family, spec.params(), RatFunc::variable(spectral_var(spec.family)), k(spec.s2));
}

exact::Bindings at_point(Family f, const BigRat& z) {
  return exact::bind(exact::VarTable::standard(), {{spectral_var(f), k(z)}});
}

// op (2x2) applied at site k (1-based) from the left: (op_k X)
QMatrix apply_site(const std::array<std::array<BigRat, 2>, 2>& op, int site, int N, const QMatrix& x) {
  const std::size_t n = x.size();
  const std::size_t mask = std::size_t{1} << (N - site);
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    const int c = (r & mask) ? 1 : 0;
    for (int d = 0; d < 2; ++d) {
      const BigRat& f = op[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
      if (sgn(f) == 0) continue;
      const std::size_t src = d ? (r | mask) : (r & ~mask);
      for (std::size_t j = 0; j < n; ++j) {
        const BigRat& v = x.at(src, j);
        if (sgn(v) != 0) out.at(r, j) += f * v;
      }
    }
  }
  return out;
}

using Blocks = std::array<std::array<QMatrix, 2>, 2>;

// R_{0k} T with R indexed (aux, site)
Blocks left_multiply(const QMatrix& R, int site, int N, const Blocks& T) {
  Blocks out;
  const std::size_t n = T[0][0].size();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = QMatrix(n);
  }
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t ap = 0; ap < 2; ++ap) {
      std::array<std::array<BigRat, 2>, 2> op;
      bool any = false;
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) {
          op[c][d] = R.at(2 * a + c, 2 * ap + d);
          any = any || sgn(op[c][d]) != 0;
        }
      }
      if (!any) continue;
      for (std::size_t b = 0; b < 2; ++b) out[a][b] += apply_site(op, site, N, T[ap][b]);
    }
  }
  return out;
}

Blocks identity_blocks(std::size_t n) {
  Blocks t;
  t[0][0] = QMatrix::identity(n);
  t[1][1] = QMatrix::identity(n);
  t[0][1] = QMatrix(n);
  t[1][0] = QMatrix(n);
  return t;
}

std::string rat_str(const BigRat& x) { return x.get_str(); }

}  // namespace

rmatrix::FamilyParams ChainSpec::params() const {
  rmatrix::FamilyParams p;
  p.q = k(family == Family::yang ? BigRat(1) : q);
  p.a = k(a);
  p.b = k(b);
  p.eta = k(eta);
  p.xi = k(xi);
  return p;
}

ChainSpec ChainSpec::undeformed() const {
  ChainSpec s = *this;
  if (family == Family::trig) {
    s.a = 0;
    s.b = 0;
  } else {
    s.xi = 0;
  }
  return s;
}

std::string ChainSpec::describe() const {
  std::string d = std::string(rmatrix::family_name(family)) + " N=" + std::to_string(sites);
  if (family == Family::trig) {
    d += " q=" + rat_str(q) + " a=" + rat_str(a) + " b=" + rat_str(b) + " z2=" + rat_str(s2);
  } else {
    if (family == Family::rat) d += " q=" + rat_str(q);
    d += " eta=" + rat_str(eta) + " xi=" + rat_str(xi) + " u2=" + rat_str(s2);
  }
  return d;
}

void validate(const ChainSpec& spec, int max_sites) {
  if (spec.sites < 2 || spec.sites > max_sites) {
    throw DomainError("site count " + std::to_string(spec.sites) + " outside 2.." + std::to_string(max_sites));
  }
  if (spec.family != Family::yang && sgn(spec.q) == 0) throw SingularParameter("q = 0: q^-1 is undefined");
  if (spec.family == Family::trig && spec.q * spec.q == 1) {
    throw SingularParameter("q^2 = 1: the denominator q^-1 z - q z2 vanishes at z = z2 (R degenerates to I)");
  }
}

QMatrix local_R(const ChainSpec& spec, const BigRat& z) {
  return QMatrix::from_tensor(symbolic_R(spec).substitute(at_point(spec.family, z)));
}

QMatrix local_R_derivative(const ChainSpec& spec) {
  const auto R = symbolic_R(spec);
  const std::size_t var = exact::VarTable::standard()->index(spectral_var(spec.family));
  rmatrix::TensorMatrix d(2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) d.at(i, j) = exact::derivative(R.at(i, j), var);
  }
  return QMatrix::from_tensor(d.substitute(at_point(spec.family, spec.s2)));
}

QMatrix transfer_matrix(const ChainSpec& spec, const BigRat& z) {
  validate(spec);
  const QMatrix R = local_R(spec, z);
  const std::size_t n = std::size_t{1} << spec.sites;
  Blocks T = identity_blocks(n);
  for (int site = 1; site <= spec.sites; ++site) T = left_multiply(R, site, spec.sites, T);
  return T[0][0] + T[1][1];
}

CheckResult verify_transfer_commute(const ChainSpec& spec, const BigRat& z1, const BigRat& z2) {
  const auto t0 = std::chrono::steady_clock::now();
  const QMatrix a = transfer_matrix(spec, z1), b = transfer_matrix(spec, z2);
  const QMatrix c = commutator(a, b);
  std::string detail = spec.describe() + ", z'=" + rat_str(z1) + " z''=" + rat_str(z2) + ": ";
  if (c.is_zero()) return make_result("commute", true, detail + "[t(z'),t(z'')] = 0 exactly", t0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (sgn(c.at(i, j)) != 0) {
        return make_result("commute", false,
                           detail + "commutator entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + rat_str(c.at(i, j)),
                           t0);
      }
    }
  }
  return make_result("commute", false, detail, t0);
}

BigRat hamiltonian_prefactor(const ChainSpec& spec) {
  switch (spec.family) {
    case Family::trig: return (BigRat(1) / spec.q - spec.q) * spec.s2;
    case Family::rat: return (BigRat(1) / spec.q - spec.q) * spec.s2 - spec.q * spec.eta;
    case Family::yang: return BigRat(-spec.eta);
  }
  throw StructuralError("unknown family");
}

QMatrix hamiltonian_from_transfer(const ChainSpec& spec) {
  validate(spec);
  const QMatrix P = QMatrix::from_tensor(rmatrix::permutation_P());
  const QMatrix h = P * local_R_derivative(spec) * hamiltonian_prefactor(spec);
  const int N = spec.sites;
  QMatrix H(std::size_t{1} << N);
  for (int site = 1; site <= N; ++site) H += bond_embed(h, site, site % N + 1, N);
  return H;
}

QMatrix hamiltonian_literal(const ChainSpec& spec) {
  validate(spec);
  const QMatrix R = local_R(spec, spec.s2);
  const QMatrix dR = local_R_derivative(spec);
  const std::size_t n = std::size_t{1} << spec.sites;
  Blocks T = identity_blocks(n);
  Blocks dT;
  for (auto& row : dT) {
    for (auto& m : row) m = QMatrix(n);
  }
  for (int site = 1; site <= spec.sites; ++site) {
    Blocks a = left_multiply(dR, site, spec.sites, T);
    Blocks b = left_multiply(R, site, spec.sites, dT);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) dT[i][j] = a[i][j] + b[i][j];
    }
    T = left_multiply(R, site, spec.sites, T);
  }
  const QMatrix t = T[0][0] + T[1][1];
  const QMatrix dt = dT[0][0] + dT[1][1];
  return dt * t.inverse() * hamiltonian_prefactor(spec);
}

Couplings closed_couplings(const ChainSpec& spec, ClosedForm form) {
  const bool printed = form == ClosedForm::printed;
  Couplings c;
  const BigRat q = spec.family == Family::yang ? BigRat(1) : spec.q;
  if (sgn(q) == 0) throw SingularParameter("q = 0");
  const BigRat qi = BigRat(1) / q;
  c.delta = (q + qi) / (printed ? 2 : 4);
  switch (spec.family) {
    case Family::trig: {
      const BigRat &a = spec.a, &b = spec.b, &z2 = spec.s2;
      c.C = (q - 1) / 2 * (b - a * z2 * qi);
      c.D = (a * z2 + b) * (qi * a * z2 + q * b);
      break;
    }
    case Family::rat: {
      const BigRat &eta = spec.eta, &xi = spec.xi, &u2 = spec.s2;
      c.C = xi * (qi - 1) / 2 * u2 - (printed ? qi : q) * xi * eta / 2;
      c.D = xi * xi * u2 * (qi * u2 - q * eta);
      break;
    }
    case Family::yang: {
      const BigRat &eta = spec.eta, &xi = spec.xi, &u2 = spec.s2;
      c.C = -xi * eta / 2;
      c.D = xi * xi * u2 * (u2 - eta);
      break;
    }
  }
  return c;
}

QMatrix hamiltonian_closed(int N, const Couplings& c) {
  const QMatrix sp = sigma_plus(), sm = sigma_minus(), sz = sigma_z();
  auto two_site = [](const QMatrix& x, const QMatrix& y) {
    QMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = x.at(i / 2, j / 2) * y.at(i % 2, j % 2);
    }
    return m;
  };
  const QMatrix bond = two_site(sp, sm) + two_site(sm, sp) + two_site(sz, sz) * c.delta +
                       (two_site(sz, sm) + two_site(sm, sz)) * c.C + two_site(sm, sm) * c.D;
  QMatrix H(std::size_t{1} << N);
  for (int site = 1; site <= N; ++site) H += bond_embed(bond, site, site % N + 1, N);
  return H;
}

QMatrix hamiltonian_closed(const ChainSpec& spec, ClosedForm form) {
  validate(spec);
  return hamiltonian_closed(spec.sites, closed_couplings(spec, form));
}

std::optional<BigRat> identity_multiple(const QMatrix& diff, std::string* why) {
  const BigRat c = diff.size() ? diff.at(0, 0) : BigRat(0);
  BigRat worst = 0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    for (std::size_t j = 0; j < diff.size(); ++j) {
      BigRat dev = i == j ? BigRat(diff.at(i, j) - c) : diff.at(i, j);
      if (sgn(dev) < 0) dev = -dev;
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (sgn(worst) == 0) return c;
  if (why) {
    *why = "difference not a multiple of I: entry (" + std::to_string(wi) + "," + std::to_string(wj) + ") = " +
           rat_str(diff.at(wi, wj)) + " (max deviation " + rat_str(worst) + ")";
  }
  return std::nullopt;
}

CheckResult compare_hamiltonians(const ChainSpec& spec, const Couplings& c, const std::string& id) {
  const auto t0 = std::chrono::steady_clock::now();
  const QMatrix diff = hamiltonian_from_transfer(spec) - hamiltonian_closed(spec.sites, c);
  std::string why;
  const auto m = identity_multiple(diff, &why);
  std::string head = spec.describe() + " (delta=" + rat_str(c.delta) + " C=" + rat_str(c.C) + " D=" + rat_str(c.D) + "): ";
  if (!m) return make_result(id, false, head + why, t0);
  const BigRat per_site = *m / spec.sites;
  return make_result(id, true, head + "H_transfer - H_closed = c I, c = " + rat_str(*m) + ", c/N = " + rat_str(per_site),
                     t0);
}

CheckResult compare_hamiltonians(const ChainSpec& spec, ClosedForm form) {
  return compare_hamiltonians(spec, closed_couplings(spec, form),
                              form == ClosedForm::printed ? "hamiltonian.printed" : "hamiltonian");
}

CheckResult verify_charge_triangular(const QMatrix& h, int sites, const std::string& id) {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (charge(i, sites) > charge(j, sites) && sgn(h.at(i, j)) != 0) {
        return make_result(id, false,
                           "charge-raising entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                               rat_str(h.at(i, j)),
                           t0);
      }
    }
  }
  return make_result(id, true, "no charge-raising entries", t0);
}

CheckResult verify_isospectral(const ChainSpec& spec, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  validate(spec, 8);
  const QMatrix hd = hamiltonian_from_transfer(spec);
  const QMatrix hu = hamiltonian_from_transfer(spec.undeformed());
  const UPoly pd = charpoly(hd), pu = charpoly(hu);
  const auto ed = spectrum_float(hd), eu = spectrum_float(hu);
  const double dist = spectrum_distance(ed, eu);
  const double rootd = root_mismatch(pd, ed);
  const bool exact_ok = pd == pu;
  const bool float_ok = dist <= tol && rootd <= tol;
  std::string detail = spec.describe() + ": charpoly " + (exact_ok ? "equal" : "differs") +
                       " (deformed vs undeformed); float spectra max diff " + fmt_g(dist) +
                       ", max distance to exact charpoly roots " + fmt_g(rootd) +
                       "; all deformation terms lower total charge, so the equality holds for every C, D";
  if (!exact_ok) detail += "; deformed charpoly " + upoly_to_string(pd) + " vs " + upoly_to_string(pu);
  return make_result("isospectral", exact_ok && float_ok, detail, t0);
}

SpectrumReport chain_spectrum(const ChainSpec& spec, std::uint64_t seed) {
  validate(spec, 8);
  return jordan_report(hamiltonian_from_transfer(spec), seed);
}

CheckResult verify_jordan(const ChainSpec& spec, std::uint64_t seed, SpectrumReport* out) {
  const auto t0 = std::chrono::steady_clock::now();
  const SpectrumReport rep = chain_spectrum(spec, seed);
  // consistency: minpoly divides charpoly and shares its roots
  auto rem = exact::upoly_divmod(rep.charpoly, rep.minpoly).second;
  exact::trim(rem);
  bool ok = rem.empty();
  std::string detail = spec.describe() + ": minimal polynomial degree " + std::to_string(rep.minpoly.size() - 1) +
                       " of " + std::to_string(rep.charpoly.size() - 1) + ", ";
  detail += rep.diagonalizable ? "squarefree -> diagonalizable" : "not squarefree -> Jordan blocks present";
  int defect = 0;
  for (const auto& m : rep.rational) defect += m.algebraic - m.geometric;
  if (!rep.rational.empty()) detail += "; rational eigenvalues with total multiplicity defect " + std::to_string(defect);
  if (rep.diagonalizable && defect != 0) ok = false;
  if (!ok) detail += "; inconsistent report";
  if (out) *out = rep;
  return make_result("jordan", ok, detail, t0);
}

}  // namespace qdeform::chain
