#include "qdeform/chain/operator.hpp"

#include <sstream>

#include "qdeform/errors.hpp"
#include "qdeform/exact/linsolve.hpp"

namespace qdeform::chain {

namespace {

void require_same(const QMatrix& x, const QMatrix& y, const char* what) {
  if (x.size() != y.size()) throw StructuralError(std::string(what) + ": dimensions differ");
}

int site_bit(std::size_t state, int k, int N) { return static_cast<int>((state >> (N - k)) & 1u); }

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::two(const BigRat& a11, const BigRat& a12, const BigRat& a21, const BigRat& a22) {
  QMatrix m(2);
  m.at(0, 0) = a11;
  m.at(0, 1) = a12;
  m.at(1, 0) = a21;
  m.at(1, 1) = a22;
  return m;
}

QMatrix QMatrix::from_tensor(const rmatrix::TensorMatrix& t) {
  QMatrix m(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      auto e = t.at(i, j);
      e.normalize();
      const auto v = e.constant_value();
      if (!v) throw StructuralError("entry " + t.entry_label(i, j) + " is not a number: " + e.to_string());
      m.at(i, j) = *v;
    }
  }
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  require_same(x, y, "matmul");
  const std::size_t n = x.n_;
  QMatrix r(n);
  BigRat t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigRat& xik = x.at(i, k);
      if (sgn(xik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const BigRat& ykj = y.at(k, j);
        if (sgn(ykj) == 0) continue;
        t = xik * ykj;
        r.at(i, j) += t;
      }
    }
  }
  return r;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  QMatrix r = x;
  r += y;
  return r;
}

QMatrix& QMatrix::operator+=(const QMatrix& y) {
  require_same(*this, y, "add");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (sgn(y.a_[i]) != 0) a_[i] += y.a_[i];
  }
  return *this;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  require_same(x, y, "sub");
  QMatrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) {
    if (sgn(y.a_[i]) != 0) r.a_[i] -= y.a_[i];
  }
  return r;
}

QMatrix operator*(const QMatrix& x, const BigRat& s) {
  QMatrix r = x;
  for (auto& e : r.a_) {
    if (sgn(e) != 0) e *= s;
  }
  return r;
}

QMatrix QMatrix::inverse() const {
  exact::Rows<BigRat> a(n_, std::vector<BigRat>(n_)), b(n_, std::vector<BigRat>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) a[i][j] = at(i, j);
    b[i][i] = 1;
  }
  if (!exact::gauss_jordan(a, b, [](const BigRat& v) { return sgn(v) == 0; })) throw ArithmeticError("singular matrix");
  QMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = b[i][j];
  }
  return m;
}

std::size_t QMatrix::rank() const {
  std::vector<std::vector<BigRat>> a(n_, std::vector<BigRat>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) a[i][j] = at(i, j);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < n_ && r < n_; ++col) {
    std::size_t piv = r;
    while (piv < n_ && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n_) continue;
    std::swap(a[piv], a[r]);
    const BigRat inv = BigRat(1) / a[r][col];
    for (std::size_t i = r + 1; i < n_; ++i) {
      if (sgn(a[i][col]) == 0) continue;
      const BigRat f = a[i][col] * inv;
      for (std::size_t j = col; j < n_; ++j) {
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  return r;
}

BigRat QMatrix::trace() const {
  BigRat t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

QMatrix site_embed(const QMatrix& op, int k, int N) {
  if (op.size() != 2) throw StructuralError("site_embed expects a 2x2 operator");
  if (k < 1 || k > N) throw DomainError("site index " + std::to_string(k) + " out of range 1.." + std::to_string(N));
  const std::size_t n = std::size_t{1} << N;
  const std::size_t mask = std::size_t{1} << (N - k);
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (int d = 0; d < 2; ++d) {
      const std::size_t c = d ? (r | mask) : (r & ~mask);
      const auto& v = op.at(static_cast<std::size_t>(site_bit(r, k, N)), static_cast<std::size_t>(d));
      if (sgn(v) != 0) m.at(r, c) = v;
    }
  }
  return m;
}

QMatrix bond_embed(const QMatrix& op, int k, int l, int N) {
  if (op.size() != 4) throw StructuralError("bond_embed expects a 4x4 operator");
  if (k < 1 || k > N || l < 1 || l > N || k == l) throw DomainError("bad bond sites");
  const std::size_t n = std::size_t{1} << N;
  const std::size_t mk = std::size_t{1} << (N - k), ml = std::size_t{1} << (N - l);
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t lr = static_cast<std::size_t>(site_bit(r, k, N) * 2 + site_bit(r, l, N));
    for (std::size_t lc = 0; lc < 4; ++lc) {
      const auto& v = op.at(lr, lc);
      if (sgn(v) == 0) continue;
      std::size_t c = r & ~mk & ~ml;
      if (lc & 2u) c |= mk;
      if (lc & 1u) c |= ml;
      m.at(r, c) = v;
    }
  }
  return m;
}

QMatrix sigma_plus() { return QMatrix::two(0, 1, 0, 0); }
QMatrix sigma_minus() { return QMatrix::two(0, 0, 1, 0); }
QMatrix sigma_z() { return QMatrix::two(1, 0, 0, -1); }

int charge(std::size_t state, int N) {
  int c = 0;
  for (int k = 1; k <= N; ++k) c += site_bit(state, k, N) ? -1 : 1;
  return c;
}

QMatrix cyclic_shift(int N) {
  const std::size_t n = std::size_t{1} << N;
  QMatrix m(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t last = s & 1u;
    const std::size_t t = (s >> 1) | (last << (N - 1));
    m.at(t, s) = 1;
  }
  return m;
}

}  // namespace qdeform::chain
