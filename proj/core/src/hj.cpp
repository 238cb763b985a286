#include "specials/hj.hpp"

#include <numeric>
#include <stdexcept>

namespace specials {

hj_data hj_expand(long long r, long long a) {
  if (!(0 < a && a < r)) throw std::domain_error("hj_expand: need 0 < a < r");
  if (std::gcd(r, a) != 1) throw std::domain_error("hj_expand: r and a must be coprime");

  hj_data d;
  d.r = r;
  d.a = a;
  // Digit extraction: alpha = ceil(x/y), then (x, y) <- (y, alpha*y - x).
  long long x = r, y = a;
  while (y > 0) {
    long long alpha = (x + y - 1) / y;
    d.alphas.push_back(alpha);
    long long next = alpha * y - x;
    x = y;
    y = next;
  }

  d.iseries.resize(d.alphas.size() + 2);
  d.iseries[0] = r;
  d.iseries[1] = a;
  for (std::size_t t = 2; t < d.iseries.size(); ++t)
    d.iseries[t] = d.alphas[t - 2] * d.iseries[t - 1] - d.iseries[t - 2];

  // The recursion must land exactly on ..., 1, 0.
  const auto n = d.alphas.size();
  if (d.iseries[n] != 1 || d.iseries[n + 1] != 0)
    throw std::logic_error("hj_expand: i-series did not terminate at 1, 0");
  if (hj_evaluate(d.alphas) != rational(r, a))
    throw std::logic_error("hj_expand: back-evaluation mismatch");
  return d;
}

rational hj_evaluate(const std::vector<long long>& alphas) {
  if (alphas.empty()) throw std::domain_error("hj_evaluate: empty expansion");
  rational v(alphas.back());
  for (auto it = alphas.rbegin() + 1; it != alphas.rend(); ++it)
    v = rational(*it) - rational(1) / v;
  return v;
}

}  // namespace specials
