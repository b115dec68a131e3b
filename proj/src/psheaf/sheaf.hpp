#pragma once
#include "psheaf/spectrum.hpp"

namespace psheaf {

// Section of the sheaf of N relative to M over a basic open with squarefree
// generator a: a fraction num / a^k in reduced form (no smaller exponent
// represents the same element of N_a; the zero section is 0 / a^0).
class Section {
 public:
  Section(const FgModule& source, const RingElem& open_gen, const ModuleElement& num,
          unsigned exponent);
  static Section zero(const FgModule& source, const RingElem& open_gen);

  const FgModule& source() const { return source_; }
  const RingElem& open_gen() const { return gen_; }
  const ModuleElement& numerator() const { return num_; }
  unsigned exponent() const { return k_; }
  bool is_zero() const { return num_.is_zero(); }
  std::string str() const;

 private:
  void reduce();
  FgModule source_;
  RingElem gen_;
  ModuleElement num_;
  unsigned k_;
};

// Module of sections over an open, carried by its localization invariants.
struct SectionModule {
  FgModule source;
  OpenSet open;
  LocalizedModule inv;
};

struct StalkDescriptor {
  PrimeSubmodule at;
  LocalizedModule inv;
};

// A(N,M)(U); requires M faithful (hence primeful) and U nonempty. Over the
// whole space this recovers the invariants of N itself.
SectionModule sections(const FgModule& n, const FgModule& m, const OpenSet& u);

Section epsilon(const FgModule& n, const OpenSet& u, const ModuleElement& m);
// ker(epsilon) = Gamma_{(K:M)}(N), K the defining submodule of U
Submodule epsilon_kernel(const FgModule& n, const OpenSet& u);

bool section_eq(const Section& s, const Section& t);
Section section_add(const Section& s, const Section& t);
Section section_scale(const RingElem& r, const Section& s);

Section restrict(const Section& s, const OpenSet& u, const OpenSet& v);
// membership in ker(rho_{WU}) = Gamma of the section module: some power of
// U's defining ideal kills s
bool in_restriction_kernel(const Section& s, const OpenSet& w, const OpenSet& u);

// minimal h with a^h * s in the image of epsilon, plus the preimage
std::pair<unsigned, ModuleElement> coker_witness(const Section& s, const OpenSet& u);

// Glue compatible sections over a cover of U into the unique section of U
// restricting to each piece: pairwise compatibility on overlaps, exponent
// normalization so the cross identities hold exactly, then a Bezout
// combination of the pieces.
Section glue(const std::vector<std::pair<OpenSet, Section>>& pieces, const OpenSet& u);

StalkDescriptor stalk(const FgModule& n, const FgModule& m, const PrimeSubmodule& p);

// functorial action on sections: apply h to the numerator
Section section_map(const ModuleHom& h, const OpenSet& u, const Section& s);

// D_I(N) realized as the localization at the generator of I; eta is epsilon
// under this identification
LocalizedModule ideal_transform(const FgModule& n, const PrincipalIdeal& i);
Section eta(const FgModule& n, const PrincipalIdeal& i, const ModuleElement& m);

// rewrite s with a denominator lying in (K:M): returns (denominator, numerator)
std::pair<RingElem, ModuleElement> normalize_denominator(const Section& s,
                                                         const Submodule& k);

// Gamma of a section module with its own defining ideal, at invariant level
bool gamma_of_sections_is_zero(const SectionModule& sm);

}  // namespace psheaf
