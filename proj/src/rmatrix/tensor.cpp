#include "qdeform/rmatrix/tensor.hpp"

#include <sstream>

#include "qdeform/errors.hpp"
#include "qdeform/exact/linsolve.hpp"

namespace qdeform::rmatrix {

namespace {

RatFunc finish(std::vector<RatFunc>& parts) {
  if (parts.empty()) return RatFunc();
  RatFunc s = parts.size() == 1 ? parts.front() : RatFunc::sum(parts, parts.front().vars());
  s.normalize();
  return s;
}

int bit(std::size_t state, int leg, int legs) { return static_cast<int>((state >> (legs - 1 - leg)) & 1u); }

}  // namespace

TensorMatrix::TensorMatrix(int legs) : legs_(legs), dim_(std::size_t{1} << legs), entries_(dim_ * dim_) {
  if (legs < 1 || legs > 12) throw StructuralError("tensor matrix needs 1..12 legs");
}

TensorMatrix TensorMatrix::identity(int legs) {
  TensorMatrix m(legs);
  for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = RatFunc::constant(1);
  return m;
}

TensorMatrix TensorMatrix::single(const RatFunc& a11, const RatFunc& a12, const RatFunc& a21, const RatFunc& a22) {
  TensorMatrix m(1);
  m.at(0, 0) = a11;
  m.at(0, 1) = a12;
  m.at(1, 0) = a21;
  m.at(1, 1) = a22;
  return m;
}

TensorMatrix TensorMatrix::kron(const TensorMatrix& a, const TensorMatrix& b) {
  TensorMatrix m(a.legs_ + b.legs_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.dim_; ++k) {
        for (std::size_t l = 0; l < b.dim_; ++l) {
          if (!b.at(k, l).is_zero()) m.at(i * b.dim_ + k, j * b.dim_ + l) = a.at(i, j) * b.at(k, l);
        }
      }
    }
  }
  return m;
}

TensorMatrix TensorMatrix::permutation(int legs, int i, int j) {
  std::vector<int> perm(static_cast<std::size_t>(legs));
  for (int k = 0; k < legs; ++k) perm[static_cast<std::size_t>(k)] = k;
  std::swap(perm.at(static_cast<std::size_t>(i)), perm.at(static_cast<std::size_t>(j)));
  TensorMatrix m(legs);
  for (std::size_t s = 0; s < m.dim_; ++s) {
    std::size_t t = 0;
    for (int k = 0; k < legs; ++k) t = (t << 1) | static_cast<std::size_t>(bit(s, perm[static_cast<std::size_t>(k)], legs));
    m.at(t, s) = RatFunc::constant(1);
  }
  return m;
}

TensorMatrix operator*(const TensorMatrix& a, const TensorMatrix& b) {
  if (a.legs_ != b.legs_) throw StructuralError("matmul: leg counts differ");
  TensorMatrix m(a.legs_);
  const std::size_t n = a.dim_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<RatFunc> parts;
      for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) parts.push_back(x * y);
      }
      m.at(i, j) = finish(parts);
    }
  }
  return m;
}

TensorMatrix operator+(const TensorMatrix& a, const TensorMatrix& b) {
  if (a.legs_ != b.legs_) throw StructuralError("add: leg counts differ");
  TensorMatrix m(a.legs_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    std::vector<RatFunc> parts{a.entries_[i], b.entries_[i]};
    m.entries_[i] = finish(parts);
  }
  return m;
}

TensorMatrix operator-(const TensorMatrix& a, const TensorMatrix& b) { return a + b * RatFunc::constant(-1); }

TensorMatrix operator*(const TensorMatrix& a, const RatFunc& s) {
  TensorMatrix m(a.legs_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!a.entries_[i].is_zero()) m.entries_[i] = a.entries_[i] * s;
  }
  return m;
}

TensorMatrix TensorMatrix::leg_permute(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != legs_) throw StructuralError("leg_permute: wrong permutation length");
  std::vector<bool> seen(perm.size());
  for (int p : perm) {
    if (p < 0 || p >= legs_ || seen[static_cast<std::size_t>(p)]) throw StructuralError("leg_permute: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  // old state s maps to new state with bit k = bit perm[k] of s
  auto remap = [&](std::size_t s) {
    std::size_t t = 0;
    for (int k = 0; k < legs_; ++k) t = (t << 1) | static_cast<std::size_t>(bit(s, perm[static_cast<std::size_t>(k)], legs_));
    return t;
  };
  TensorMatrix m(legs_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m.at(remap(i), remap(j)) = at(i, j);
  }
  return m;
}

TensorMatrix TensorMatrix::embed(int total_legs, const std::vector<int>& on) const {
  if (static_cast<int>(on.size()) != legs_) throw StructuralError("embed: leg list does not match the matrix");
  TensorMatrix m(total_legs);
  std::size_t mask = 0;
  for (int leg : on) {
    if (leg < 0 || leg >= total_legs) throw StructuralError("embed: leg out of range");
    mask |= std::size_t{1} << (total_legs - 1 - leg);
  }
  auto local = [&](std::size_t s) {
    std::size_t t = 0;
    for (int leg : on) t = (t << 1) | static_cast<std::size_t>(bit(s, leg, total_legs));
    return t;
  };
  for (std::size_t i = 0; i < m.dim_; ++i) {
    for (std::size_t j = 0; j < m.dim_; ++j) {
      if ((i & ~mask) != (j & ~mask)) continue;
      const auto& v = at(local(i), local(j));
      if (!v.is_zero()) m.at(i, j) = v;
    }
  }
  return m;
}

TensorMatrix TensorMatrix::inverse() const {
  exact::Rows<RatFunc> a(dim_, std::vector<RatFunc>(dim_)), b(dim_, std::vector<RatFunc>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) a[i][j] = at(i, j);
    b[i][i] = RatFunc::constant(1);
  }
  const bool ok = exact::gauss_jordan(
      a, b, [](const RatFunc& x) { return x.is_zero(); }, [](RatFunc x) { return x.normalize(); });
  if (!ok) throw ArithmeticError("singular matrix");
  TensorMatrix m(legs_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m.at(i, j) = b[i][j];
  }
  return m;
}

TensorMatrix TensorMatrix::substitute(const exact::Bindings& bindings) const {
  TensorMatrix m(legs_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) m.entries_[i] = exact::substitute(entries_[i], bindings).normalize();
  }
  return m;
}

std::string TensorMatrix::entry_label(std::size_t r, std::size_t c) const {
  auto ket = [&](std::size_t s) {
    std::string k = "|";
    for (int leg = 0; leg < legs_; ++leg) k += static_cast<char>('1' + bit(s, leg, legs_));
    return k + ">";
  };
  return "(" + ket(r) + "," + ket(c) + ")";
}

std::string TensorMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? "\t" : "") << at(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const TensorMatrix& a, const TensorMatrix& b) {
  if (a.legs() != b.legs()) throw StructuralError("compare: leg counts differ");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!exact::ratfunc_equal(a.at(i, j), b.at(i, j))) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

bool matrix_equal(const TensorMatrix& a, const TensorMatrix& b, std::string* why) {
  const auto m = first_mismatch(a, b);
  if (m && why) {
    *why = "entry " + a.entry_label(m->first, m->second) + ": " + a.at(m->first, m->second).to_string() + " vs " +
           b.at(m->first, m->second).to_string();
  }
  return !m;
}

TensorMatrix sigma_plus() { return TensorMatrix::single(RatFunc::constant(0), RatFunc::constant(1), RatFunc::constant(0), RatFunc::constant(0)); }
TensorMatrix sigma_minus() { return TensorMatrix::single(RatFunc::constant(0), RatFunc::constant(0), RatFunc::constant(1), RatFunc::constant(0)); }
TensorMatrix sigma_z() { return TensorMatrix::single(RatFunc::constant(1), RatFunc::constant(0), RatFunc::constant(0), RatFunc::constant(-1)); }
TensorMatrix unit_2() { return TensorMatrix::identity(1); }

TensorMatrix e_unit(int i, int j) {
  TensorMatrix m(1);
  m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = RatFunc::constant(1);
  return m;
}

TensorMatrix q_power_h(const RatFunc& q, int k) {
  return TensorMatrix::single(q.pow(k), RatFunc::constant(0), RatFunc::constant(0), q.pow(-k));
}

}  // namespace qdeform::rmatrix
