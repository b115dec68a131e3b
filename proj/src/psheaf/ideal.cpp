#include "psheaf/ideal.hpp"

namespace psheaf {

PrincipalIdeal ideal_sum(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(gcd(a.gen(), b.gen()));
}

PrincipalIdeal ideal_intersect(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(lcm(a.gen(), b.gen()));
}

PrincipalIdeal ideal_product(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(mul(a.gen(), b.gen()));
}

PrincipalIdeal ideal_power(const PrincipalIdeal& a, unsigned long k) {
  return PrincipalIdeal(pow(a.gen(), k));
}

bool ideal_contains(const PrincipalIdeal& I, const RingElem& a) {
  require_same_ring(I.gen(), a, "ideal_contains");
  return divides(I.gen(), a);
}

bool ideal_subset(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return ideal_contains(b, a.gen());
}

PrincipalIdeal radical_ideal(const PrincipalIdeal& a) {
  return PrincipalIdeal(radical(a.gen()));
}

bool is_prime_ideal(const PrincipalIdeal& a) {
  return a.is_zero() || is_prime_elem(a.gen());
}

}  // namespace psheaf
