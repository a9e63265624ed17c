#include <doctest.h>

#include <random>

#include "qdeform/chain/chain.hpp"
#include "qdeform/errors.hpp"
#include "qdeform/sampling.hpp"

using namespace qdeform;
using namespace qdeform::chain;
using exact::rat;

namespace {

ChainSpec trig(int N, BigRat q, BigRat a, BigRat b, BigRat z2) {
  ChainSpec s;
  s.sites = N;
  s.family = Family::trig;
  s.q = q;
  s.a = a;
  s.b = b;
  s.s2 = z2;
  return s;
}

ChainSpec ratspec(Family f, int N, BigRat q, BigRat eta, BigRat xi, BigRat u2) {
  ChainSpec s;
  s.sites = N;
  s.family = f;
  s.q = q;
  s.eta = eta;
  s.xi = xi;
  s.s2 = u2;
  return s;
}

QMatrix diag(std::vector<long> d) {
  QMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

QMatrix random_matrix(std::size_t n, std::mt19937_64& g) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rat(static_cast<long>(g() % 11) - 5, static_cast<long>(g() % 3) + 1);
  return m;
}

// Faddeev-LeVerrier: independent charpoly oracle
UPoly leverrier(const QMatrix& a) {
  const std::size_t n = a.size();
  UPoly c(n + 1);
  c[n] = 1;
  QMatrix M(n);
  const QMatrix I = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    M = a * M + I * c[n - k + 1];
    c[n - k] = -(a * M).trace() / BigRat(static_cast<long>(k));
  }
  return c;
}

}  // namespace

TEST_CASE("site_embed examples") {
  const auto z1 = site_embed(sigma_z(), 1, 2);
  CHECK(z1 == diag({1, 1, -1, -1}));
  CHECK(commutator(site_embed(sigma_plus(), 1, 3), site_embed(sigma_minus(), 2, 3)).is_zero());
  const auto m = site_embed(sigma_minus(), 2, 3);
  CHECK((m * m).is_zero());
  CHECK_THROWS_AS(site_embed(sigma_z(), 0, 3), DomainError);
  CHECK_THROWS_AS(site_embed(sigma_z(), 4, 3), DomainError);
  // bond_embed of a product = product of site embeddings
  QMatrix kr(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) kr.at(i, j) = sigma_z().at(i / 2, j / 2) * sigma_minus().at(i % 2, j % 2);
  CHECK(bond_embed(kr, 3, 1, 3) == site_embed(sigma_z(), 3, 3) * site_embed(sigma_minus(), 1, 3));
  CHECK(cyclic_shift(3) * cyclic_shift(3) * cyclic_shift(3) == QMatrix::identity(8));
}

TEST_CASE("charpoly examples and oracle") {
  CHECK(charpoly(diag({1, 2})) == UPoly{BigRat(2), BigRat(-3), BigRat(1)});
  CHECK(charpoly(sigma_minus()) == UPoly{BigRat(0), BigRat(0), BigRat(1)});
  std::mt19937_64 g(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + g() % 9;
    auto a = random_matrix(n, g);
    if (t % 3 == 0) {
      // sparse / reducible shapes exercise the Hessenberg pivot search
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if ((i + 2 * j + t) % 3) a.at(i, j) = 0;
    }
    CHECK(charpoly(a) == leverrier(a));
  }
}

TEST_CASE("minimal polynomial") {
  // nilpotent control s-_1 s-_2
  const auto n = site_embed(sigma_minus(), 1, 2) * site_embed(sigma_minus(), 2, 2);
  const auto m = minpoly(n, 1);
  CHECK(m == UPoly{BigRat(0), BigRat(0), BigRat(1)});
  CHECK_FALSE(squarefree(m));
  // diag(1,1,2): (x-1)(x-2)
  CHECK(minpoly(diag({1, 1, 2}), 5) == UPoly{BigRat(2), BigRat(-3), BigRat(1)});
  // random matrices: m(A) = 0 and m divides charpoly
  std::mt19937_64 g(11);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_matrix(1 + g() % 6, g);
    const auto p = minpoly(a, static_cast<std::uint64_t>(t));
    CHECK(upoly_apply(p, a).is_zero());
    auto r = exact::upoly_divmod(charpoly(a), p).second;
    exact::trim(r);
    CHECK(r.empty());
  }
  // a Jordan block J_2(3) (+) [3]: minpoly (x-3)^2
  QMatrix j(3);
  j.at(0, 0) = 3;
  j.at(1, 1) = 3;
  j.at(2, 2) = 3;
  j.at(0, 1) = 1;
  CHECK(minpoly(j, 2) == UPoly{BigRat(9), BigRat(-6), BigRat(1)});
  const auto rep = jordan_report(j, 2);
  CHECK_FALSE(rep.diagonalizable);
  REQUIRE(rep.rational.size() == 1);
  CHECK(rep.rational[0].value == 3);
  CHECK(rep.rational[0].algebraic == 3);
  CHECK(rep.rational[0].geometric == 2);
}

TEST_CASE("float spectrum") {
  const auto e = spectrum_float(diag({3, 1, 2}));
  REQUIRE(e.size() == 3);
  CHECK(e[0].real() == doctest::Approx(1));
  CHECK(e[2].real() == doctest::Approx(3));
  const auto h = hamiltonian_closed(2, Couplings{rat(5, 6), 0, 0});
  CHECK(root_mismatch(charpoly(h), spectrum_float(h)) < 1e-9);
}

TEST_CASE("closed couplings example") {
  const auto c = closed_couplings(trig(3, 3, 1, 1, 2), ClosedForm::printed);
  CHECK(c.C == rat(1, 3));
  CHECK(c.D == 11);
  CHECK(c.delta == rat(5, 3));
  CHECK(closed_couplings(trig(3, 3, 1, 1, 2)).delta == rat(5, 6));
  // rat C at q = 1 reduces to -xi eta/2, both forms
  const auto r1 = closed_couplings(ratspec(Family::rat, 3, 1, 3, 5, 2), ClosedForm::printed);
  CHECK(r1.C == rat(-15, 2));
  CHECK(closed_couplings(ratspec(Family::yang, 3, 7, 3, 5, 2)).C == rat(-15, 2));
  // xi = 0 gives the plain chain
  const auto u = closed_couplings(ratspec(Family::yang, 3, 1, 3, 0, 2));
  CHECK(u.C == 0);
  CHECK(u.D == 0);
}

TEST_CASE("transfer matrix") {
  // t(s2) is the one-site translation
  const auto s = trig(3, 2, 1, 1, 3);
  const auto t = transfer_matrix(s, s.s2);
  CHECK((t == cyclic_shift(3) || t == cyclic_shift(3).inverse()));
  // undeformed, N = 2: symmetric under the site swap
  const auto u = trig(2, 2, 0, 0, 3);
  const auto tu = transfer_matrix(u, 5);
  const auto P = cyclic_shift(2);
  CHECK(P * tu * P == tu);
  CHECK(verify_transfer_commute(trig(3, 2, 1, 1, 3), 5, 7).passed());
  CHECK(verify_transfer_commute(trig(3, 2, 1, 1, 3), 5, 5).passed());
  CHECK(verify_transfer_commute(ratspec(Family::rat, 4, 1, 1, 1, 2), rat(1, 3), rat(-4, 5)).passed());
  CHECK(verify_transfer_commute(ratspec(Family::yang, 3, 1, 1, 1, 2), 5, 7).passed());
}

TEST_CASE("transfer matrices commute on seeded draws") {
  RationalSampler rng(2024);
  for (auto f : {Family::trig, Family::rat, Family::yang}) {
    int done = 0;
    while (done < 3) {
      ChainSpec s;
      s.sites = 2 + done;
      s.family = f;
      s.q = rng.next_nonzero();
      s.a = rng.next();
      s.b = rng.next();
      s.eta = rng.next();
      s.xi = rng.next();
      s.s2 = rng.next();
      try {
        const auto r = verify_transfer_commute(s, rng.next(), rng.next());
        INFO(r.detail);
        CHECK(r.passed());
        ++done;
      } catch (const ArithmeticError&) {
      }
    }
  }
}

TEST_CASE("hamiltonian routes agree") {
  for (const auto& s : {trig(3, 3, 1, 1, 2), ratspec(Family::rat, 3, 3, 1, 2, 5), ratspec(Family::yang, 3, 1, 1, 1, 2),
                        trig(2, rat(-2, 3), 4, rat(1, 2), 5)}) {
    CHECK(hamiltonian_from_transfer(s) == hamiltonian_literal(s));
  }
}

TEST_CASE("hamiltonian vs closed form") {
  const auto s = trig(3, 3, 1, 1, 2);
  const auto r = compare_hamiltonians(s);
  INFO(r.detail);
  CHECK(r.passed());
  CHECK(r.detail.find("c = ") != std::string::npos);
  CHECK_FALSE(compare_hamiltonians(s, ClosedForm::printed).passed());
  auto bad = closed_couplings(s);
  bad.D += 1;
  CHECK_FALSE(compare_hamiltonians(s, bad, "corrupt").passed());
  CHECK(compare_hamiltonians(ratspec(Family::yang, 3, 1, 1, 1, 2)).passed());
  // rat at q != 1: printed C fails, corrected passes
  const auto rs = ratspec(Family::rat, 3, 3, 1, 1, 2);
  CHECK(compare_hamiltonians(rs).passed());
  CHECK_FALSE(compare_hamiltonians(rs, ClosedForm::printed).passed());
  // undeformed: XXZ / XXX up to identity
  CHECK(compare_hamiltonians(trig(4, 3, 0, 0, 2)).passed());
  CHECK(compare_hamiltonians(ratspec(Family::rat, 4, 1, 2, 0, 3)).passed());
}

TEST_CASE("hamiltonian symmetries") {
  for (const auto& s : {trig(4, 3, 1, 1, 2), ratspec(Family::yang, 4, 1, 1, 1, 2)}) {
    const auto H = hamiltonian_from_transfer(s);
    CHECK(commutator(H, cyclic_shift(4)).is_zero());
    CHECK(commutator(H, transfer_matrix(s, rat(7, 3))).is_zero());
    CHECK(verify_charge_triangular(H, 4, "tri").passed());
  }
  // a charge-raising term is caught
  auto H = hamiltonian_closed(3, Couplings{1, 0, 0}) + site_embed(sigma_plus(), 1, 3);
  CHECK_FALSE(verify_charge_triangular(H, 3, "tri").passed());
}

TEST_CASE("isospectral") {
  CHECK(verify_isospectral(ratspec(Family::yang, 4, 1, 1, 0, 2)).passed());
  const auto y = verify_isospectral(ratspec(Family::yang, 4, 1, 1, 1, 2));
  INFO(y.detail);
  CHECK(y.passed());
  const auto t = verify_isospectral(trig(4, 3, 1, 1, 2));
  INFO(t.detail);
  CHECK(t.passed());
}

TEST_CASE("jordan") {
  SpectrumReport rep;
  const auto r = verify_jordan(ratspec(Family::yang, 3, 1, 1, 1, 2), 1, &rep);
  INFO(r.detail);
  CHECK(r.passed());
  CHECK(rep.charpoly.size() == 9);
  SpectrumReport und;
  CHECK(verify_jordan(ratspec(Family::yang, 3, 1, 1, 0, 2), 1, &und).passed());
  CHECK(und.diagonalizable);
}

TEST_CASE("singular points") {
  // q^2 = 1 kills the trig denominator at z = z2
  CHECK_THROWS_AS(hamiltonian_from_transfer(trig(3, 1, 1, 1, 2)), ArithmeticError);
  CHECK_THROWS_AS(transfer_matrix(trig(3, 0, 1, 1, 2), 5), ArithmeticError);
  ChainSpec s = trig(1, 3, 1, 1, 2);
  CHECK_THROWS_AS(transfer_matrix(s, 5), DomainError);
}
