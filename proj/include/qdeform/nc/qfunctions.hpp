#pragma once

#include "qdeform/nc/series.hpp"

namespace qdeform::nc {

/// (k)_q = 1 + q + ... + q^{k-1}.
RatFunc q_number(int k, const RatFunc& q);

/// k-th coefficient of the q-binomial series (1 - A)^{(a)}_q with p = q^a:
/// prod_{j<k} (q^j/p - 1)/(q - 1) / (k)_q!.
RatFunc q_power_coefficient(int k, const RatFunc& p, const RatFunc& q);

/// (1 - A)^{(a)}_q = sum_k C_k(p, q) A^k for A with zero constant term, p = q^a.
/// Numeric q with q = 1 or (k)_q = 0 throws SingularParameter.
NCSeries q_power(const NCSeries& argument, const RatFunc& p, const RatFunc& q);
NCSeries q_power(const NCSeries& argument, const RatFunc& p, const RatFunc& q, int order);

/// Ordinary binomial series (1 - A)^alpha = sum_k prod_{j<k}(j - alpha)/k! A^k.
NCSeries power(const NCSeries& argument, const RatFunc& alpha);

/// exp_q(A) = sum_k A^k / (k)_q!.
NCSeries q_exp(const NCSeries& argument, const RatFunc& q);
NCSeries q_exp(const NCSeries& argument, const RatFunc& q, int order);

}  // namespace qdeform::nc
