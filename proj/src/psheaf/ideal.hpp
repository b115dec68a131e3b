#pragma once
#include "psheaf/ring.hpp"

namespace psheaf {

// Ideal of the base ring, kept as its canonical generator (nonnegative /
// monic). gen = 0 is the zero ideal, gen = 1 the unit ideal; equality of
// ideals is equality of generators.
class PrincipalIdeal {
 public:
  explicit PrincipalIdeal(const RingElem& g) : gen_(canonical(g)) {}
  static PrincipalIdeal zero(const Ring& r) { return PrincipalIdeal(RingElem::zero(r)); }
  static PrincipalIdeal unit(const Ring& r) { return PrincipalIdeal(RingElem::one(r)); }

  const RingElem& gen() const { return gen_; }
  const Ring& ring() const { return gen_.ring(); }
  bool is_zero() const { return gen_.is_zero(); }
  bool is_unit() const { return gen_.is_one(); }

  bool operator==(const PrincipalIdeal& o) const { return gen_ == o.gen_; }
  bool operator!=(const PrincipalIdeal& o) const { return !(*this == o); }

  std::string str() const { return "(" + gen_.str() + ")"; }

 private:
  RingElem gen_;
};

PrincipalIdeal ideal_sum(const PrincipalIdeal& a, const PrincipalIdeal& b);
PrincipalIdeal ideal_intersect(const PrincipalIdeal& a, const PrincipalIdeal& b);
PrincipalIdeal ideal_product(const PrincipalIdeal& a, const PrincipalIdeal& b);
PrincipalIdeal ideal_power(const PrincipalIdeal& a, unsigned long k);
bool ideal_contains(const PrincipalIdeal& I, const RingElem& a);
bool ideal_subset(const PrincipalIdeal& a, const PrincipalIdeal& b);  // a <= b
PrincipalIdeal radical_ideal(const PrincipalIdeal& a);
bool is_prime_ideal(const PrincipalIdeal& a);

}  // namespace psheaf
