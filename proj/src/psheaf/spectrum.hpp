#pragma once
#include "psheaf/fgmod.hpp"

namespace psheaf {

// A prime submodule P of M together with its colon ideal p = (P : M).
struct PrimeSubmodule {
  Submodule sub;
  PrincipalIdeal ideal;
};

// Returns (N : M) when N is a prime submodule of M, nothing otherwise.
// Over the (principal-ideal) base ring: N != M, (N : M) must be a prime
// ideal, and when (N : M) = (0) the quotient M/N must be torsion-free.
std::optional<PrincipalIdeal> is_prime(const Submodule& n, const FgModule& m);

inline constexpr size_t kDefaultFiberGuard = 12;

// All p-prime submodules: pullbacks of the proper subspaces of M/pM.
// guard bounds the number of subspaces enumerated.
std::vector<PrimeSubmodule> spec_p(const FgModule& m, const RingElem& p,
                                   size_t guard = kDefaultFiberGuard);
// (0)-prime submodules; only defined for rank <= 1 (the set is infinite
// beyond that)
std::vector<PrimeSubmodule> spec_zero(const FgModule& m);
// the whole spectrum; torsion modules only
std::vector<PrimeSubmodule> spec_all(const FgModule& m, size_t guard = 64);

// number of proper subspaces of an n-dimensional space over a field of size
// q, by the Gaussian-binomial formula (independent of the enumeration)
mpz_class proper_subspace_count(size_t n, const mpz_class& q);
// dim of M/pM over R/(p)
size_t fiber_dimension(const FgModule& m, const RingElem& p);

// V(N) and its complement, represented by the canonical squarefree generator
// of the radical of the defining colon ideal, relative to a fixed ambient M.
class ClosedSet {
 public:
  ClosedSet(const FgModule& ambient, const RingElem& g)
      : ambient_(ambient), gen_(canonical(g)) {}
  const FgModule& ambient() const { return ambient_; }
  const RingElem& gen() const { return gen_; }
  bool contains(const PrimeSubmodule& p) const;
  bool operator==(const ClosedSet& o) const {
    return ambient_ == o.ambient_ && gen_ == o.gen_;
  }

 private:
  FgModule ambient_;
  RingElem gen_;
};

class OpenSet {
 public:
  OpenSet(const FgModule& ambient, const RingElem& g)
      : ambient_(ambient), gen_(canonical(g)) {}
  const FgModule& ambient() const { return ambient_; }
  const RingElem& gen() const { return gen_; }
  ClosedSet complement() const { return ClosedSet(ambient_, gen_); }
  bool is_empty() const;
  bool is_whole() const { return gen_.is_one(); }
  bool contains(const PrimeSubmodule& p) const;
  bool operator==(const OpenSet& o) const {
    return ambient_ == o.ambient_ && gen_ == o.gen_;
  }

 private:
  FgModule ambient_;
  RingElem gen_;
};

ClosedSet v_closed(const Submodule& n, const FgModule& m);
// X_r = Spec(M) \ V(rM); the generator is normalized through the colon ideal
// so that set equality is generator equality
OpenSet basic_open(const RingElem& r, const FgModule& m);
OpenSet whole_space(const FgModule& m);
OpenSet open_union(const OpenSet& a, const OpenSet& b);
OpenSet open_intersect(const OpenSet& a, const OpenSet& b);
bool open_subset(const OpenSet& a, const OpenSet& b);  // a contained in b
bool open_member(const PrimeSubmodule& p, const OpenSet& u);

// Supp(U) = {(P:M) : P in U}; finite and listed for torsion M, otherwise
// described as all primes avoiding the generator (plus (0))
struct SuppDescription {
  bool finite = false;
  std::vector<PrincipalIdeal> primes;  // finite case only
  bool includes_zero = false;
  RingElem avoid;  // infinite case: all primes not dividing this
};
SuppDescription supp(const OpenSet& u);

PrincipalIdeal psi(const PrimeSubmodule& p);

bool is_faithful(const FgModule& m);

// For every prime in V(Ann M), an explicit p-prime witness. Exhaustive for
// torsion M (V(Ann M) is finite); for faithful M the witness map is total
// but only sampled primes are materialized.
struct PrimefulWitnesses {
  bool primeful = true;
  bool exhaustive = false;
  std::vector<std::pair<PrincipalIdeal, Submodule>> witnesses;
};
PrimefulWitnesses is_primeful(const FgModule& m);

// T0 is equivalent to M being cyclic over a principal-ideal base; the fiber
// counting equivalence is exercised by the test suite
bool is_T0(const FgModule& m);

PrincipalIdeal zrad_colon(const Submodule& n, const FgModule& m);
Submodule zrad(const Submodule& n, const FgModule& m, size_t guard = 64);

// Greedy subcover of U together with a Bezout certificate
// gen(U)^t = sum coeffs[i] * gen(cover[indices[i]]).
struct SubcoverCertificate {
  std::vector<size_t> indices;
  unsigned t = 0;
  std::vector<RingElem> coeffs;
};
SubcoverCertificate finite_subcover(const OpenSet& u, const std::vector<OpenSet>& cover);

}  // namespace psheaf
