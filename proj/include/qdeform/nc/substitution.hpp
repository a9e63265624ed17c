#pragma once

#include <string>
#include <vector>

#include "qdeform/nc/series.hpp"

namespace qdeform::nc {

/// A linear change of variables: each new generator is a degree-1 combination of the
/// source generators.
struct Substitution {
  std::vector<std::string> targets;          // new generator names, in their normal order
  std::vector<NCSeries> images;              // same length, over the source presentation
};

struct InducedPresentation {
  PresentationPtr presentation;  // relations satisfied by the images
  /// max over out-of-order pairs of the residual after re-expansion (always zero
  /// when the solve succeeded; reported for auditing).
  std::string detail;
};

/// Recomputes the pairwise relations of the images: every product image_j image_i
/// (j > i) is expanded in the source normal basis and re-expressed in the images'
/// normal degree-2 monomials. Non-linear images or a singular change of variables
/// throw DomainError.
InducedPresentation apply_substitution(const PresentationPtr& source, const Substitution& sub);

}  // namespace qdeform::nc
