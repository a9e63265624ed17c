#include "qdeform/nc/qfunctions.hpp"

#include "qdeform/errors.hpp"

namespace qdeform::nc {

namespace {

void require_zero_constant(const NCSeries& a, const char* what) {
  if (!a.constant_term().is_zero()) throw DomainError(std::string(what) + ": argument has a nonzero constant term");
}

void require_nonzero(const RatFunc& x, const std::string& what) {
  if (x.is_zero()) throw SingularParameter(what + " vanishes at the given parameters");
}

// sum_k coef(k) A^k, stopping once A^k is truncated away.
template <class Coef>
NCSeries power_sum(const NCSeries& a, Coef coef) {
  const int n = a.order();
  NCSeries result = NCSeries::constant(a.presentation(), RatFunc::constant(1), n);
  NCSeries ak = result;
  for (int k = 1; k <= n; ++k) {
    ak = ak * a;
    if (ak.is_zero()) break;
    const RatFunc c = coef(k);
    if (!c.is_zero()) result += ak * c;
  }
  return result;
}

}  // namespace

RatFunc q_number(int k, const RatFunc& q) {
  RatFunc s = RatFunc::constant(0);
  RatFunc qi = RatFunc::constant(1);
  for (int i = 0; i < k; ++i) {
    s = s + qi;
    qi = qi * q;
  }
  return s;
}

RatFunc q_power_coefficient(int k, const RatFunc& p, const RatFunc& q) {
  const RatFunc one = RatFunc::constant(1);
  const RatFunc qm1 = q - one;
  require_nonzero(qm1, "q - 1");
  require_nonzero(p, "p");
  RatFunc c = one;
  RatFunc qj = one;
  for (int j = 0; j < k; ++j) {
    const RatFunc qk = q_number(j + 1, q);
    require_nonzero(qk, "(" + std::to_string(j + 1) + ")_q");
    c = c * (qj / p - one) / (qm1 * qk);
    qj = qj * q;
  }
  return c;
}

NCSeries q_power(const NCSeries& argument, const RatFunc& p, const RatFunc& q) {
  require_zero_constant(argument, "q_power");
  const RatFunc one = RatFunc::constant(1);
  const RatFunc qm1 = q - one;
  require_nonzero(qm1, "q - 1");
  require_nonzero(p, "p");
  // C_k = C_{k-1} (q^{k-1}/p - 1) / ((q - 1)(k)_q)
  RatFunc c = one;
  RatFunc qj = one;
  int done = 0;
  return power_sum(argument, [&](int k) {
    for (; done < k; ++done) {
      const RatFunc qk = q_number(done + 1, q);
      require_nonzero(qk, "(" + std::to_string(done + 1) + ")_q");
      c = c * (qj / p - one) / (qm1 * qk);
      qj = qj * q;
    }
    return c;
  });
}

NCSeries q_power(const NCSeries& argument, const RatFunc& p, const RatFunc& q, int order) {
  return q_power(argument.truncated(order), p, q);
}

NCSeries power(const NCSeries& argument, const RatFunc& alpha) {
  require_zero_constant(argument, "power");
  RatFunc c = RatFunc::constant(1);
  int done = 0;
  return power_sum(argument, [&](int k) {
    for (; done < k; ++done) c = c * (RatFunc::constant(done) - alpha) * exact::BigRat(1, done + 1);
    return c;
  });
}

NCSeries q_exp(const NCSeries& argument, const RatFunc& q) {
  require_zero_constant(argument, "q_exp");
  RatFunc c = RatFunc::constant(1);
  int done = 0;
  return power_sum(argument, [&](int k) {
    for (; done < k; ++done) {
      const RatFunc qk = q_number(done + 1, q);
      require_nonzero(qk, "(" + std::to_string(done + 1) + ")_q");
      c = c / qk;
    }
    return c;
  });
}

NCSeries q_exp(const NCSeries& argument, const RatFunc& q, int order) { return q_exp(argument.truncated(order), q); }

}  // namespace qdeform::nc
