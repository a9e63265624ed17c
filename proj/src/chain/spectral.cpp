#include "qdeform/chain/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include <gmpxx.h>

#include "qdeform/errors.hpp"
#include "qdeform/sampling.hpp"

namespace qdeform::chain {

namespace {

using exact::upoly_divmod;
using exact::upoly_gcd;
using exact::upoly_monic;
using exact::upoly_mul;

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
  const UPoly g = upoly_gcd(a, b);
  return upoly_monic(upoly_divmod(upoly_mul(a, b), g).first);
}

bool less_complex(const std::complex<double>& x, const std::complex<double>& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

// Tarjan on the pattern graph i -> j when a(i,j) != 0
std::vector<std::vector<std::size_t>> components(const QMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && sgn(a.at(i, j)) != 0) adj[i].push_back(j);
    }
  }
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] == unset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == unset) visit(v);
  }
  return out;
}

// complex arithmetic on mpf pairs; the monomial-basis polynomials here have
// coefficients spanning dozens of decades, so double precision Newton is useless
constexpr mp_bitcnt_t kNewtonBits = 512;

struct MpComplex {
  mpf_class re{0, kNewtonBits}, im{0, kNewtonBits};
};

MpComplex mp_horner(const std::vector<mpf_class>& c, const MpComplex& x) {
  MpComplex r;
  for (std::size_t i = c.size(); i-- > 0;) {
    mpf_class re(r.re * x.re - r.im * x.im + c[i], kNewtonBits);
    mpf_class im(r.re * x.im + r.im * x.re, kNewtonBits);
    r.re = re;
    r.im = im;
  }
  return r;
}

std::vector<mpf_class> to_mpf(const UPoly& p) {
  std::vector<mpf_class> c;
  for (const auto& x : p) c.emplace_back(mpf_class(x, kNewtonBits));
  return c;
}

// best rational with denominator <= maxden near x (continued fractions)
BigRat nearby_rational(double x, long maxden) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double fl = std::floor(r);
    if (std::abs(fl) > 1e12) break;
    const long a = static_cast<long>(fl);
    const long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > maxden) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - fl;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return BigRat(0);
  return exact::rat(h1, k1);
}

}  // namespace

UPoly charpoly(const QMatrix& a) {
  const std::size_t n = a.size();
  // 1-based copy
  std::vector<std::vector<BigRat>> H(n + 1, std::vector<BigRat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) H[i + 1][j + 1] = a.at(i, j);
  }
  for (std::size_t m = 2; m + 1 <= n; ++m) {
    std::size_t i = m;
    while (i <= n && sgn(H[i][m - 1]) == 0) ++i;
    if (i > n) continue;
    if (i > m) {
      std::swap(H[i], H[m]);
      for (std::size_t r = 1; r <= n; ++r) std::swap(H[r][i], H[r][m]);
    }
    const BigRat inv = BigRat(1) / H[m][m - 1];
    for (std::size_t j = m + 1; j <= n; ++j) {
      if (sgn(H[j][m - 1]) == 0) continue;
      const BigRat u = H[j][m - 1] * inv;
      for (std::size_t c = 1; c <= n; ++c) {
        if (sgn(H[m][c]) != 0) H[j][c] -= u * H[m][c];
      }
      for (std::size_t r = 1; r <= n; ++r) {
        if (sgn(H[r][j]) != 0) H[r][m] += u * H[r][j];
      }
    }
  }
  std::vector<UPoly> p(n + 1);
  p[0] = {BigRat(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = upoly_mul({BigRat(-H[m][m]), BigRat(1)}, p[m - 1]);
    BigRat t = 1;
    for (std::size_t i = 1; i + 1 <= m; ++i) {
      t *= H[m - i + 1][m - i];
      if (sgn(t) == 0) break;
      const BigRat f = t * H[m - i][m];
      if (sgn(f) == 0) continue;
      const UPoly& prev = p[m - i - 1];
      UPoly term(prev.size());
      for (std::size_t k = 0; k < prev.size(); ++k) term[k] = f * prev[k];
      p[m] = exact::upoly_sub(p[m], term);
    }
  }
  return p[n];
}

UPoly krylov_polynomial(const QMatrix& a, const std::vector<BigRat>& v) {
  const std::size_t n = a.size();
  if (v.size() != n) throw StructuralError("krylov: vector length mismatch");
  struct Row {
    std::vector<BigRat> vec;
    std::size_t pivot;
    UPoly poly;
  };
  std::vector<Row> basis;
  std::vector<BigRat> w = v;
  UPoly wp{BigRat(1)};
  for (std::size_t step = 0; step <= n; ++step) {
    for (const auto& b : basis) {
      if (sgn(w[b.pivot]) == 0) continue;
      const BigRat f = w[b.pivot] / b.vec[b.pivot];
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(b.vec[i]) != 0) w[i] -= f * b.vec[i];
      }
      UPoly fp(b.poly.size());
      for (std::size_t k = 0; k < b.poly.size(); ++k) fp[k] = f * b.poly[k];
      wp = exact::upoly_sub(wp, fp);
    }
    std::size_t piv = 0;
    while (piv < n && sgn(w[piv]) == 0) ++piv;
    if (piv == n) return upoly_monic(wp);
    basis.push_back({w, piv, wp});
    // next: A * (reduced vector), polynomial x * wp
    std::vector<BigRat> nw(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a.at(i, j)) != 0 && sgn(w[j]) != 0) nw[i] += a.at(i, j) * w[j];
      }
    }
    UPoly np(wp.size() + 1);
    for (std::size_t k = 0; k < wp.size(); ++k) np[k + 1] = wp[k];
    w = std::move(nw);
    wp = std::move(np);
  }
  throw StructuralError("krylov: no dependency found");
}

QMatrix upoly_apply(const UPoly& p, const QMatrix& a) {
  QMatrix r(a.size());
  const QMatrix I = QMatrix::identity(a.size());
  for (std::size_t i = p.size(); i-- > 0;) r = r * a + I * p[i];
  return r;
}

UPoly minpoly(const QMatrix& a, std::uint64_t seed) {
  const std::size_t n = a.size();
  RationalSampler rng(seed);
  std::vector<BigRat> v(n);
  for (auto& x : v) x = rng.next();
  UPoly p = krylov_polynomial(a, v);
  for (;;) {
    const QMatrix m = upoly_apply(p, a);
    std::size_t col = n;
    for (std::size_t j = 0; j < n && col == n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (sgn(m.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
    }
    if (col == n) return p;
    std::vector<BigRat> e(n);
    e[col] = 1;
    p = upoly_lcm(p, krylov_polynomial(a, e));
  }
}

bool squarefree(const UPoly& p) {
  const UPoly g = upoly_gcd(p, exact::upoly_derivative(p));
  return g.size() <= 1;
}

std::vector<std::complex<double>> spectrum_float(const QMatrix& a) {
  std::vector<std::complex<double>> out;
  for (const auto& comp : components(a)) {
    const auto m = static_cast<Eigen::Index>(comp.size());
    Eigen::MatrixXd block(m, m);
    bool symmetric = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        block(i, j) = a.at(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]).get_d();
      }
    }
    for (Eigen::Index i = 0; i < m && symmetric; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        if (a.at(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]) !=
            a.at(comp[static_cast<std::size_t>(j)], comp[static_cast<std::size_t>(i)])) {
          symmetric = false;
          break;
        }
      }
    }
    if (symmetric) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
      for (Eigen::Index i = 0; i < m; ++i) out.emplace_back(es.eigenvalues()(i), 0.0);
    } else {
      Eigen::EigenSolver<Eigen::MatrixXd> es(block, false);
      for (Eigen::Index i = 0; i < m; ++i) out.push_back(es.eigenvalues()(i));
    }
  }
  std::sort(out.begin(), out.end(), less_complex);
  return out;
}

double root_mismatch(const UPoly& p, const std::vector<std::complex<double>>& eig) {
  const UPoly sqf = upoly_monic(upoly_divmod(p, upoly_gcd(p, exact::upoly_derivative(p))).first);
  const auto c = to_mpf(sqf);
  const auto dc = to_mpf(exact::upoly_derivative(sqf));
  double worst = 0.0;
  const mpf_class tiny("1e-60", kNewtonBits);
  for (const auto& e : eig) {
    MpComplex x;
    x.re = e.real();
    x.im = e.imag();
    for (int it = 0; it < 200; ++it) {
      const auto f = mp_horner(c, x);
      const auto d = mp_horner(dc, x);
      const mpf_class den(d.re * d.re + d.im * d.im, kNewtonBits);
      if (den == 0) break;
      const mpf_class sre((f.re * d.re + f.im * d.im) / den, kNewtonBits);
      const mpf_class sim((f.im * d.re - f.re * d.im) / den, kNewtonBits);
      x.re -= sre;
      x.im -= sim;
      if (abs(sre) + abs(sim) < tiny) break;
    }
    const double dr = mpf_class(x.re - e.real()).get_d(), di = mpf_class(x.im - e.imag()).get_d();
    worst = std::max(worst, std::hypot(dr, di));
  }
  return worst;
}

double spectrum_distance(const std::vector<std::complex<double>>& x, const std::vector<std::complex<double>>& y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  auto a = x, b = y;
  std::sort(a.begin(), a.end(), less_complex);
  std::sort(b.begin(), b.end(), less_complex);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

SpectrumReport jordan_report(const QMatrix& a, std::uint64_t seed) {
  SpectrumReport rep;
  rep.charpoly = charpoly(a);
  rep.minpoly = minpoly(a, seed);
  rep.diagonalizable = squarefree(rep.minpoly);
  rep.eigenvalues = spectrum_float(a);
  for (const auto& e : rep.eigenvalues) {
    if (std::abs(e.imag()) > 1e-7) continue;
    const BigRat r = nearby_rational(e.real(), 10000);
    if (std::abs(r.get_d() - e.real()) > 1e-6) continue;
    bool seen = false;
    for (const auto& m : rep.rational) seen = seen || m.value == r;
    if (seen || sgn(exact::upoly_eval(rep.charpoly, r)) != 0) continue;
    EigenMultiplicity m;
    m.value = r;
    UPoly rest = rep.charpoly;
    for (;;) {
      auto [quo, rem] = upoly_divmod(rest, {BigRat(-r), BigRat(1)});
      exact::trim(rem);
      if (!rem.empty()) break;
      ++m.algebraic;
      rest = quo;
    }
    m.geometric = static_cast<int>(a.size() - (a - QMatrix::identity(a.size()) * r).rank());
    rep.rational.push_back(m);
  }
  std::sort(rep.rational.begin(), rep.rational.end(),
            [](const EigenMultiplicity& x, const EigenMultiplicity& y) { return x.value < y.value; });
  return rep;
}

std::string upoly_to_string(const UPoly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const BigRat& c = p[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const BigRat mag = neg ? BigRat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> upoly_coefficients(const UPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

}  // namespace qdeform::chain
