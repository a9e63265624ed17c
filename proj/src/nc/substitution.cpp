#include "qdeform/nc/substitution.hpp"

#include "qdeform/errors.hpp"
#include "qdeform/exact/linsolve.hpp"

namespace qdeform::nc {

namespace {

bool rf_zero(const RatFunc& x) { return x.is_zero(); }
RatFunc rf_simplify(RatFunc x) { return x.normalize(); }

}  // namespace

InducedPresentation apply_substitution(const PresentationPtr& source, const Substitution& sub) {
  const std::size_t n = source->size();
  if (sub.targets.size() != n || sub.images.size() != n) {
    throw DomainError("substitution must give one image per source generator");
  }
  std::vector<NCSeries> images;
  exact::Rows<RatFunc> m(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i) {
    NCSeries img(source, 2);
    for (const auto& [w, c] : sub.images[i].terms()) {
      if (w.size() != 1) throw DomainError("image of " + sub.targets[i] + " is not homogeneous of degree 1");
      m[i][w[0]] = c;
      img += NCSeries::word(source, w, c, 2);
    }
    images.push_back(std::move(img));
  }
  {
    auto a = m;
    exact::Rows<RatFunc> b(n, std::vector<RatFunc>(n));
    for (std::size_t i = 0; i < n; ++i) b[i][i] = RatFunc::constant(1);
    if (!exact::gauss_jordan(a, b, rf_zero, rf_simplify)) throw DomainError("change of variables is not invertible");
  }

  // Degree-2 normal words of both sides share the same index layout (k <= l).
  std::vector<Word> pairs;
  for (std::uint8_t k = 0; k < n; ++k) {
    for (std::uint8_t l = k; l < n; ++l) pairs.push_back({k, l});
  }
  const std::size_t dim = pairs.size();
  auto coords = [&](const NCSeries& s) {
    std::vector<RatFunc> v(dim);
    for (std::size_t t = 0; t < dim; ++t) v[t] = s.coefficient(pairs[t]);
    return v;
  };
  // a[s][t] = coefficient of source word s in image_t
  exact::Rows<RatFunc> a(dim, std::vector<RatFunc>(dim));
  std::vector<std::vector<RatFunc>> image_coords;
  for (std::size_t t = 0; t < dim; ++t) {
    const auto v = coords(images[pairs[t][0]] * images[pairs[t][1]]);
    for (std::size_t s = 0; s < dim; ++s) a[s][t] = v[s];
    image_coords.push_back(v);
  }
  std::vector<std::pair<std::uint8_t, std::uint8_t>> oop;
  exact::Rows<RatFunc> b(dim);
  for (std::uint8_t j = 0; j < n; ++j) {
    for (std::uint8_t i = 0; i < j; ++i) {
      oop.emplace_back(j, i);
      const auto v = coords(images[j] * images[i]);
      for (std::size_t s = 0; s < dim; ++s) b[s].push_back(v[s]);
    }
  }
  auto a_copy = a;
  if (!exact::gauss_jordan(a_copy, b, rf_zero, rf_simplify)) {
    throw DomainError("images of the degree-2 normal words are linearly dependent");
  }

  std::vector<Presentation::RuleSpec> rules;
  std::size_t checked = 0;
  for (std::size_t r = 0; r < oop.size(); ++r) {
    const auto [j, i] = oop[r];
    Presentation::RuleSpec spec{sub.targets[j], sub.targets[i], {}};
    // Residual: sum_t c_t image_t - image_j image_i must vanish.
    const auto target = coords(images[j] * images[i]);
    for (std::size_t s = 0; s < dim; ++s) {
      std::vector<RatFunc> parts{-target[s]};
      for (std::size_t t = 0; t < dim; ++t) parts.push_back(b[t][r] * image_coords[t][s]);
      if (!RatFunc::sum(parts, exact::VarTable::standard()).is_zero()) {
        throw ArithmeticError("induced relation for " + sub.targets[j] + sub.targets[i] + " does not re-expand");
      }
      ++checked;
    }
    for (std::size_t t = 0; t < dim; ++t) {
      if (!b[t][r].is_zero()) spec.rhs.push_back({b[t][r], sub.targets[pairs[t][0]], sub.targets[pairs[t][1]]});
    }
    rules.push_back(std::move(spec));
  }
  InducedPresentation out;
  out.presentation = Presentation::make("induced(" + source->name() + ")", sub.targets, std::move(rules));
  out.detail = std::to_string(oop.size()) + " relations, " + std::to_string(checked) + " coordinates re-expanded";
  return out;
}

}  // namespace qdeform::nc
