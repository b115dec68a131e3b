#pragma once
#include <gmpxx.h>

#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "psheaf/errors.hpp"

namespace psheaf {

// The base ring: either the rational integers or F_p[x] for a small prime p.
// Both are Euclidean domains; everything downstream (normal forms, ideal
// algebra, localization) only uses the Euclidean interface below.
class Ring {
 public:
  enum class Kind { integers, poly_mod_p };

  static Ring integers() { return Ring(Kind::integers, 0); }
  static Ring poly_mod_p(long p);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  bool is_integers() const { return kind_ == Kind::integers; }
  std::string name() const;  // "Z" or "F5[x]"

  bool operator==(const Ring& o) const = default;

 private:
  Ring(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

// Immutable ring element. Integer payloads are exact at any magnitude;
// polynomial payloads are coefficient lists (c[i] is the x^i coefficient),
// reduced mod p with no trailing zero.
class RingElem {
 public:
  RingElem() : ring_(Ring::integers()), v_(mpz_class(0)) {}
  RingElem(const Ring& ring, long value);
  static RingElem integer(const mpz_class& z) { return RingElem(Ring::integers(), z); }
  static RingElem poly(long p, std::vector<long> coeffs);
  static RingElem zero(const Ring& r) { return RingElem(r, 0); }
  static RingElem one(const Ring& r) { return RingElem(r, 1); }
  // x in F_p[x]; error on the integer ring
  static RingElem variable(const Ring& r);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_unit() const;
  bool is_one() const;
  const mpz_class& z() const { return std::get<mpz_class>(v_); }
  const std::vector<long>& coeffs() const { return std::get<std::vector<long>>(v_); }
  long degree() const;  // poly only; degree(0) = -1

  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingElem(const Ring& r, const mpz_class& z) : ring_(r), v_(z) {}
  RingElem(const Ring& r, std::vector<long> c) : ring_(r), v_(std::move(c)) {}
  friend RingElem add(const RingElem&, const RingElem&);
  friend RingElem sub(const RingElem&, const RingElem&);
  friend RingElem mul(const RingElem&, const RingElem&);
  friend RingElem neg(const RingElem&);
  friend std::pair<RingElem, RingElem> divmod(const RingElem&, const RingElem&);

  Ring ring_;
  std::variant<mpz_class, std::vector<long>> v_;
};

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);
inline RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return mul(a, b); }
inline RingElem operator-(const RingElem& a) { return neg(a); }

// Euclidean division with the canonical residue: a = q*b + r where r is the
// unique representative with 0 <= r < |b| (integers) resp. deg r < deg b.
std::pair<RingElem, RingElem> divmod(const RingElem& a, const RingElem& b);
bool divides(const RingElem& a, const RingElem& b);  // a | b; 0 | b iff b = 0
RingElem div_exact(const RingElem& a, const RingElem& b);

// canonical associate (nonnegative / monic-or-zero) and the unit carrying to it
RingElem canonical(const RingElem& a);
RingElem canonical_unit(const RingElem& a);  // a * canonical_unit(a) = canonical(a)
RingElem unit_inverse(const RingElem& u);

RingElem pow(const RingElem& a, unsigned long k);
RingElem gcd(const RingElem& a, const RingElem& b);  // canonical
RingElem lcm(const RingElem& a, const RingElem& b);  // canonical

// g = u*a + v*b with g the canonical generator of (a) + (b)
std::tuple<RingElem, RingElem, RingElem> xgcd(const RingElem& a, const RingElem& b);

// gcd of a list together with coefficients: g = sum coeffs[i] * elems[i]
std::pair<RingElem, std::vector<RingElem>> bezout_chain(const std::vector<RingElem>& elems);

// inverse of a modulo m (gcd(a, m) must be a unit); canonical residue
RingElem inv_mod(const RingElem& a, const RingElem& m);

// prime factorization of a nonzero element, desk scale (trial division /
// exhaustive monic-divisor search); primes canonical, sorted, pairwise
// non-associate
std::vector<std::pair<RingElem, int>> factor(const RingElem& a);
RingElem radical(const RingElem& a);  // squarefree kernel; radical(0)=0, radical(unit)=1
bool is_prime_elem(const RingElem& a);
int valuation(const RingElem& a, const RingElem& p);

// largest divisor of a coprime to b (canonical); a must be nonzero
RingElem coprime_part(const RingElem& a, const RingElem& b);
// largest divisor of a whose prime support lies in the support of b
RingElem supported_part(const RingElem& a, const RingElem& b);

// total order (for deterministic sorting/printing only)
int cmp(const RingElem& a, const RingElem& b);
// Euclidean size comparison for pivot selection
int cmp_size(const RingElem& a, const RingElem& b);

// canonical residues modulo m (m != 0); integers: 0..|m|-1, polys: deg < deg m
mpz_class residue_count(const RingElem& m);
std::vector<RingElem> residues_mod(const RingElem& m, const mpz_class& guard);

// the first k primes of the ring, in canonical order (2,3,5,... / monic
// irreducibles by degree then lexicographic coefficients)
std::vector<RingElem> first_primes(const Ring& r, size_t k);

RingElem parse_elem(const Ring& r, const std::string& text);

void require_same_ring(const RingElem& a, const RingElem& b, const char* who);

}  // namespace psheaf
