#pragma once
#include <memory>
#include <optional>
#include <vector>

#include "psheaf/ideal.hpp"
#include "psheaf/matrix.hpp"

namespace psheaf {

class ModuleElement;
class Submodule;

// Finitely generated module over the base ring, given by a presentation
// matrix (rows are relations between the g generators). Smith-normal-form
// invariants are computed once at construction: rank, the invariant-factor
// chain d_1 | d_2 | ... | d_k, and the change of basis used to map structure
// positions back to ambient coordinates.
class FgModule {
 public:
  FgModule(const Ring& r, size_t gens, const Matrix& relations);
  static FgModule free_module(const Ring& r, size_t rank);
  static FgModule cyclic(const Ring& r, const RingElem& d);  // R/(d)
  static FgModule from_invariants(const Ring& r, size_t rank,
                                  const std::vector<RingElem>& factors);

  const Ring& ring() const;
  size_t gens() const;
  const Matrix& relations() const;
  const HnfResult& relation_hnf() const;

  size_t rank() const;
  const std::vector<RingElem>& invariant_factors() const;
  // positions in the structure basis, aligned with invariant_factors / rank
  const std::vector<size_t>& torsion_positions() const;
  const std::vector<size_t>& free_positions() const;
  // ambient coordinates of the structure basis vector at position pos
  ModuleElement structure_gen(size_t pos) const;

  // h such that Gamma_a(M) = (0 :_M a^h) for every a: the largest prime-power
  // exponent among the invariant factors (at least 1)
  int torsion_exponent_bound() const;

  bool is_zero_module() const;
  std::optional<mpz_class> cardinality() const;  // nullopt when infinite

  bool operator==(const FgModule& o) const;
  bool operator!=(const FgModule& o) const { return !(*this == o); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Element of an FgModule, stored as the unique canonical residue of its
// coordinate tuple modulo the Hermite form of the relation lattice.
class ModuleElement {
 public:
  ModuleElement(const FgModule& m, std::vector<RingElem> coords);
  static ModuleElement zero(const FgModule& m);
  static ModuleElement generator(const FgModule& m, size_t i);

  const FgModule& module() const { return mod_; }
  const std::vector<RingElem>& coords() const { return coords_; }
  bool is_zero() const;
  bool operator==(const ModuleElement& o) const;
  bool operator!=(const ModuleElement& o) const { return !(*this == o); }
  std::string str() const;

 private:
  FgModule mod_;
  std::vector<RingElem> coords_;
};

ModuleElement add(const ModuleElement& a, const ModuleElement& b);
ModuleElement sub(const ModuleElement& a, const ModuleElement& b);
ModuleElement neg(const ModuleElement& a);
ModuleElement scale(const RingElem& r, const ModuleElement& a);

// Submodule of an ambient FgModule: a generating set normalized to the
// canonical Hermite basis of (generator preimages + ambient relations), so
// membership and equality are syntactic.
class Submodule {
 public:
  Submodule(const FgModule& ambient, std::vector<ModuleElement> gens);
  static Submodule zero(const FgModule& ambient);
  static Submodule whole(const FgModule& ambient);
  static Submodule scaled(const FgModule& ambient, const RingElem& r);  // rM
  static Submodule from_coord_rows(const FgModule& ambient, const Matrix& rows);

  const FgModule& ambient() const { return ambient_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }
  const Matrix& basis() const { return hnf_.h; }

  bool contains(const ModuleElement& x) const;
  // coefficients over generators() when x is a member
  std::optional<std::vector<RingElem>> express(const ModuleElement& x) const;

  bool operator==(const Submodule& o) const;
  bool operator!=(const Submodule& o) const { return !(*this == o); }
  bool is_zero_submodule() const;
  bool is_whole() const;
  std::string str() const;

 private:
  FgModule ambient_;
  std::vector<ModuleElement> gens_;
  HnfResult hnf_;
};

Submodule sub_sum(const Submodule& a, const Submodule& b);
Submodule sub_intersect(const Submodule& a, const Submodule& b);

FgModule quotient(const FgModule& m, const Submodule& n);
PrincipalIdeal annihilator(const FgModule& m);
PrincipalIdeal colon(const Submodule& n, const FgModule& m);

// Gamma_I(N) = union of (0 :_N I^n), as a submodule of N
Submodule torsion_gamma(const FgModule& n, const PrincipalIdeal& i);
Submodule torsion_submodule(const FgModule& m);

// a presentation of a submodule as a module in its own right
FgModule submodule_as_module(const Submodule& s);

// Localization invariants: N_a is determined up to isomorphism by its rank
// (that of N) and the invariant factors' largest divisors coprime to a.
class LocalizedModule {
 public:
  enum class Kind { at_element, at_prime };

  LocalizedModule(Kind k, const RingElem& datum, const FgModule& base, size_t rank,
                  std::vector<RingElem> factors)
      : kind_(k), datum_(datum), base_(base), rank_(rank), factors_(std::move(factors)) {}

  Kind kind() const { return kind_; }
  const RingElem& datum() const { return datum_; }  // inverted element / prime gen
  const FgModule& base() const { return base_; }
  size_t rank() const { return rank_; }
  const std::vector<RingElem>& factors() const { return factors_; }
  bool is_zero() const { return rank_ == 0 && factors_.empty(); }

  // equality of canonical invariants
  bool same_invariants(const LocalizedModule& o) const {
    return base_.ring() == o.base_.ring() && rank_ == o.rank_ && factors_ == o.factors_;
  }

 private:
  Kind kind_;
  RingElem datum_;
  FgModule base_;
  size_t rank_;
  std::vector<RingElem> factors_;
};

LocalizedModule localize(const FgModule& n, const RingElem& a);
LocalizedModule localize_at_prime(const FgModule& n, const PrincipalIdeal& p);

bool is_regular_element(const RingElem& a, const FgModule& n);
bool is_regular_sequence2(const RingElem& a1, const RingElem& a2, const FgModule& n);

// Homomorphism given by the images of the source generators; construction
// checks well-definedness (every source relation maps to zero).
class ModuleHom {
 public:
  ModuleHom(const FgModule& src, const FgModule& tgt, std::vector<ModuleElement> images);
  static ModuleHom identity(const FgModule& m);
  static ModuleHom zero(const FgModule& src, const FgModule& tgt);

  const FgModule& source() const { return src_; }
  const FgModule& target() const { return tgt_; }
  const std::vector<ModuleElement>& images() const { return images_; }
  ModuleElement apply(const ModuleElement& x) const;

 private:
  FgModule src_, tgt_;
  std::vector<ModuleElement> images_;
};

ModuleHom compose(const ModuleHom& g, const ModuleHom& h);  // g after h

// all elements of a finite module, in a fixed deterministic order
std::vector<ModuleElement> enumerate_elements(const FgModule& m, const mpz_class& guard);

}  // namespace psheaf
