#include "cusp/swtorsion.hpp"

#include <stdexcept>

#include "cusp/curvecheck.hpp"

namespace cusp {

Rat root_sum_inverse(std::int64_t d) {
  if (d < 2) throw std::invalid_argument("root sums need d >= 2");
  return Rat(Int(-(d - 1)), Int(2));
}

Rat root_sum_inverse_square(std::int64_t d) {
  // With g(t) = (t^d - 1)/(t - 1):
  //   sum 1/(1 - xi)^2 = (g'(1)^2 - g''(1) g(1)) / g(1)^2 = (d-1)(5-d)/12.
  if (d < 2) throw std::invalid_argument("root sums need d >= 2");
  return Rat(Int((d - 1) * (5 - d)), Int(12));
}

Rat torsion(const AlexanderData& ad, std::int64_t d) {
  // sum_{xi != 1} Q(xi) = d * sum_{d | j} Q_j - Q(1)
  Int div_sum = 0;
  const auto& q = ad.q_poly.coefficients();
  for (std::size_t j = 0; j < q.size(); j += static_cast<std::size_t>(d)) div_sum += q[j];
  const Rat q_sum = Rat(Int(div_sum * d - ad.q_poly.evaluate(1)));
  const Rat total = root_sum_inverse_square(d) + Rat(ad.delta) * root_sum_inverse(d) + q_sum;
  return total / Rat(d);
}

Rat torsion(const Semigroup& sg, std::int64_t d) { return torsion(alexander_poly(sg), d); }

Rat casson_walker(const AlexanderData& ad, std::int64_t d) {
  if (d < 2) throw std::invalid_argument("casson_walker needs d >= 2");
  Int second = 0;
  const auto& c = ad.delta_poly.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const long s = static_cast<long>(j) - ad.delta;
    second += c[j] * (s * (s - 1));
  }
  return Rat(Int(-second), Int(2)) + Rat(Int((d - 1) * (d - 2)), Int(24));
}

Rat casson_walker(const Semigroup& sg, std::int64_t d) {
  return casson_walker(alexander_poly(sg), d);
}

SWReport sw_both_ways(const Semigroup& sg, std::int64_t d) {
  if (d < 3) throw std::invalid_argument("sw_both_ways needs d >= 3");
  const auto ad = alexander_poly(sg);
  SWReport r;
  r.h1_order = d;
  r.torsion = torsion(ad, d);
  r.casson_walker = casson_walker(ad, d);
  r.sw_surgery = r.torsion - r.casson_walker / Rat(d);

  Int c_sum = 0;
  for (const auto& c : c_from_q(ad, d)) c_sum += c;
  r.sw_root = Rat(superisolated_invariants(d).k2_plus_sharp, Int(8)) + Rat(c_sum);

  r.genus_valid = sg.mu() == (d - 1) * (d - 2);
  r.agree = r.sw_surgery == r.sw_root;
  if (r.genus_valid && !r.agree)
    throw ConsistencyError("sw_both_ways: surgery route " + r.sw_surgery.str() +
                           " != graded-root route " + r.sw_root.str());
  return r;
}

}  // namespace cusp
