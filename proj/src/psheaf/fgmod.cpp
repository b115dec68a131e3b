#include "psheaf/fgmod.hpp"

#include <algorithm>
#include <sstream>

namespace psheaf {

struct FgModule::Data {
  Ring ring;
  size_t gens;
  Matrix relations;
  HnfResult rel_hnf;
  size_t rank = 0;
  std::vector<RingElem> invariant_factors;
  std::vector<RingElem> orders;  // per structure position: unit / d_i / 0
  std::vector<size_t> torsion_positions;
  std::vector<size_t> free_positions;
  Matrix vinv;  // row i = ambient coordinates of structure basis vector i
  int torsion_bound = 1;

  Data(const Ring& r, size_t g, const Matrix& rel)
      : ring(r), gens(g), relations(rel), rel_hnf(hermite_form(rel)), vinv(r, 0, 0) {}
};

FgModule::FgModule(const Ring& r, size_t gens, const Matrix& relations) {
  if (relations.cols() != gens) throw value_error("FgModule: relation width != generators");
  if (!(relations.ring() == r)) throw value_error("FgModule: mixed-ring relations");
  auto d = std::make_shared<Data>(r, gens, relations);
  SnfResult snf = smith_form(relations);
  d->vinv = snf.vinv;
  size_t diag = std::min(relations.rows(), gens);
  for (size_t j = 0; j < gens; ++j) {
    RingElem order = j < diag ? snf.d.at(j, j) : RingElem::zero(r);
    d->orders.push_back(order);
    if (order.is_zero()) {
      d->free_positions.push_back(j);
    } else if (!order.is_unit()) {
      d->torsion_positions.push_back(j);
      d->invariant_factors.push_back(order);
    }
  }
  d->rank = d->free_positions.size();
  for (const RingElem& f : d->invariant_factors)
    for (const auto& [p, e] : factor(f)) d->torsion_bound = std::max(d->torsion_bound, e);
  d_ = std::move(d);
}

FgModule FgModule::free_module(const Ring& r, size_t rank) {
  return FgModule(r, rank, Matrix(r, 0, rank));
}

FgModule FgModule::cyclic(const Ring& r, const RingElem& d) {
  Matrix rel(r, 1, 1);
  rel.set(0, 0, d);
  return FgModule(r, 1, rel);
}

FgModule FgModule::from_invariants(const Ring& r, size_t rank,
                                   const std::vector<RingElem>& factors) {
  size_t g = rank + factors.size();
  Matrix rel(r, factors.size(), g);
  for (size_t i = 0; i < factors.size(); ++i) rel.set(i, i, factors[i]);
  return FgModule(r, g, rel);
}

const Ring& FgModule::ring() const { return d_->ring; }
size_t FgModule::gens() const { return d_->gens; }
const Matrix& FgModule::relations() const { return d_->relations; }
const HnfResult& FgModule::relation_hnf() const { return d_->rel_hnf; }
size_t FgModule::rank() const { return d_->rank; }
const std::vector<RingElem>& FgModule::invariant_factors() const {
  return d_->invariant_factors;
}
const std::vector<size_t>& FgModule::torsion_positions() const {
  return d_->torsion_positions;
}
const std::vector<size_t>& FgModule::free_positions() const { return d_->free_positions; }

ModuleElement FgModule::structure_gen(size_t pos) const {
  if (pos >= d_->gens) throw value_error("structure_gen: bad position");
  return ModuleElement(*this, d_->vinv.row(pos));
}

int FgModule::torsion_exponent_bound() const { return d_->torsion_bound; }

bool FgModule::is_zero_module() const {
  return d_->rank == 0 && d_->invariant_factors.empty();
}

std::optional<mpz_class> FgModule::cardinality() const {
  if (d_->rank > 0) return std::nullopt;
  mpz_class n = 1;
  for (const RingElem& f : d_->invariant_factors) n *= residue_count(f);
  return n;
}

bool FgModule::operator==(const FgModule& o) const {
  if (d_ == o.d_) return true;
  return d_->ring == o.d_->ring && d_->gens == o.d_->gens &&
         d_->rel_hnf.h == o.d_->rel_hnf.h;
}

ModuleElement::ModuleElement(const FgModule& m, std::vector<RingElem> coords) : mod_(m) {
  if (coords.size() != m.gens()) throw value_error("ModuleElement: bad coordinate length");
  for (const RingElem& c : coords) require_same_ring(c, RingElem::zero(m.ring()), "ModuleElement");
  coords_ = reduce_row(m.relation_hnf(), std::move(coords));
}

ModuleElement ModuleElement::zero(const FgModule& m) {
  return ModuleElement(m, std::vector<RingElem>(m.gens(), RingElem::zero(m.ring())));
}

ModuleElement ModuleElement::generator(const FgModule& m, size_t i) {
  if (i >= m.gens()) throw value_error("generator: index out of range");
  std::vector<RingElem> c(m.gens(), RingElem::zero(m.ring()));
  c[i] = RingElem::one(m.ring());
  return ModuleElement(m, std::move(c));
}

bool ModuleElement::is_zero() const {
  for (const RingElem& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
  return mod_ == o.mod_ && coords_ == o.coords_;
}

std::string ModuleElement::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].str();
  os << ")";
  return os.str();
}

namespace {

void require_same_module(const ModuleElement& a, const ModuleElement& b, const char* who) {
  if (a.module() != b.module()) throw value_error(std::string(who) + ": ambient mismatch");
}

}  // namespace

ModuleElement add(const ModuleElement& a, const ModuleElement& b) {
  require_same_module(a, b, "add");
  std::vector<RingElem> c;
  for (size_t i = 0; i < a.coords().size(); ++i) c.push_back(add(a.coords()[i], b.coords()[i]));
  return ModuleElement(a.module(), std::move(c));
}

ModuleElement sub(const ModuleElement& a, const ModuleElement& b) {
  return add(a, neg(b));
}

ModuleElement neg(const ModuleElement& a) {
  std::vector<RingElem> c;
  for (const RingElem& x : a.coords()) c.push_back(neg(x));
  return ModuleElement(a.module(), std::move(c));
}

ModuleElement scale(const RingElem& r, const ModuleElement& a) {
  std::vector<RingElem> c;
  for (const RingElem& x : a.coords()) c.push_back(mul(r, x));
  return ModuleElement(a.module(), std::move(c));
}

Submodule::Submodule(const FgModule& ambient, std::vector<ModuleElement> gens)
    : ambient_(ambient), gens_(std::move(gens)), hnf_{Matrix(ambient.ring(), 0, 0), Matrix(ambient.ring(), 0, 0), {}, false} {
  const Ring& R = ambient.ring();
  for (const ModuleElement& g : gens_)
    if (g.module() != ambient_) throw value_error("Submodule: ambient mismatch");
  Matrix stacked(R, gens_.size() + ambient.relation_hnf().h.rows(), ambient.gens());
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = 0; j < ambient.gens(); ++j) stacked.set(i, j, gens_[i].coords()[j]);
  for (size_t i = 0; i < ambient.relation_hnf().h.rows(); ++i)
    for (size_t j = 0; j < ambient.gens(); ++j)
      stacked.set(gens_.size() + i, j, ambient.relation_hnf().h.at(i, j));
  hnf_ = hermite_form(stacked, /*track=*/true);
}

Submodule Submodule::zero(const FgModule& ambient) { return Submodule(ambient, {}); }

Submodule Submodule::whole(const FgModule& ambient) {
  std::vector<ModuleElement> gens;
  for (size_t i = 0; i < ambient.gens(); ++i)
    gens.push_back(ModuleElement::generator(ambient, i));
  return Submodule(ambient, std::move(gens));
}

Submodule Submodule::scaled(const FgModule& ambient, const RingElem& r) {
  std::vector<ModuleElement> gens;
  for (size_t i = 0; i < ambient.gens(); ++i)
    gens.push_back(scale(r, ModuleElement::generator(ambient, i)));
  return Submodule(ambient, std::move(gens));
}

Submodule Submodule::from_coord_rows(const FgModule& ambient, const Matrix& rows) {
  std::vector<ModuleElement> gens;
  for (size_t i = 0; i < rows.rows(); ++i) gens.push_back(ModuleElement(ambient, rows.row(i)));
  return Submodule(ambient, std::move(gens));
}

bool Submodule::contains(const ModuleElement& x) const {
  if (x.module() != ambient_) throw value_error("contains: ambient mismatch");
  std::vector<RingElem> res = reduce_row(hnf_, x.coords());
  for (const RingElem& c : res)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<std::vector<RingElem>> Submodule::express(const ModuleElement& x) const {
  if (x.module() != ambient_) throw value_error("express: ambient mismatch");
  std::vector<RingElem> q;
  std::vector<RingElem> res = reduce_row(hnf_, x.coords(), &q);
  for (const RingElem& c : res)
    if (!c.is_zero()) return std::nullopt;
  // x = q * H and H = T * [gens; relations], so the generator coefficients
  // are the first entries of q * T
  std::vector<RingElem> out(gens_.size(), RingElem::zero(ambient_.ring()));
  for (size_t j = 0; j < gens_.size(); ++j) {
    RingElem s = RingElem::zero(ambient_.ring());
    for (size_t i = 0; i < q.size(); ++i) s = add(s, mul(q[i], hnf_.transform.at(i, j)));
    out[j] = s;
  }
  return out;
}

bool Submodule::operator==(const Submodule& o) const {
  return ambient_ == o.ambient_ && hnf_.h == o.hnf_.h;
}

bool Submodule::is_zero_submodule() const {
  return hnf_.h == ambient_.relation_hnf().h;
}

bool Submodule::is_whole() const {
  for (size_t i = 0; i < ambient_.gens(); ++i)
    if (!contains(ModuleElement::generator(ambient_, i))) return false;
  return true;
}

std::string Submodule::str() const { return "span" + hnf_.h.str(); }

Submodule sub_sum(const Submodule& a, const Submodule& b) {
  if (a.ambient() != b.ambient()) throw value_error("sub_sum: ambient mismatch");
  std::vector<ModuleElement> gens = a.generators();
  for (const ModuleElement& g : b.generators()) gens.push_back(g);
  return Submodule(a.ambient(), std::move(gens));
}

Submodule sub_intersect(const Submodule& a, const Submodule& b) {
  if (a.ambient() != b.ambient()) throw value_error("sub_intersect: ambient mismatch");
  Matrix basis = lattice_intersection(a.basis(), b.basis());
  return Submodule::from_coord_rows(a.ambient(), basis);
}

FgModule quotient(const FgModule& m, const Submodule& n) {
  if (n.ambient() != m) throw value_error("quotient: ambient mismatch");
  return FgModule(m.ring(), m.gens(), n.basis());
}

PrincipalIdeal annihilator(const FgModule& m) {
  if (m.rank() > 0) return PrincipalIdeal::zero(m.ring());
  if (m.invariant_factors().empty()) return PrincipalIdeal::unit(m.ring());
  return PrincipalIdeal(m.invariant_factors().back());
}

PrincipalIdeal colon(const Submodule& n, const FgModule& m) {
  return annihilator(quotient(m, n));
}

Submodule torsion_gamma(const FgModule& n, const PrincipalIdeal& i) {
  require_same_ring(i.gen(), RingElem::zero(n.ring()), "torsion_gamma");
  if (i.is_zero()) return Submodule::whole(n);
  const RingElem& c = i.gen();
  std::vector<ModuleElement> gens;
  const auto& factors = n.invariant_factors();
  const auto& positions = n.torsion_positions();
  for (size_t k = 0; k < factors.size(); ++k) {
    RingElem supported = supported_part(factors[k], c);
    if (supported.is_unit()) continue;
    gens.push_back(scale(div_exact(factors[k], supported), n.structure_gen(positions[k])));
  }
  return Submodule(n, std::move(gens));
}

Submodule torsion_submodule(const FgModule& m) {
  std::vector<ModuleElement> gens;
  for (size_t pos : m.torsion_positions()) gens.push_back(m.structure_gen(pos));
  return Submodule(m, std::move(gens));
}

FgModule submodule_as_module(const Submodule& s) {
  const Matrix& basis = s.basis();
  Matrix rel = lattice_kernel(basis, s.ambient().relation_hnf().h);
  return FgModule(s.ambient().ring(), basis.rows(), rel);
}

LocalizedModule localize(const FgModule& n, const RingElem& a) {
  require_same_ring(a, RingElem::zero(n.ring()), "localize");
  if (a.is_zero()) throw value_error("localize: inverted element is zero");
  RingElem sq = radical(canonical(a));
  std::vector<RingElem> factors;
  for (const RingElem& d : n.invariant_factors()) {
    RingElem c = coprime_part(d, sq);
    if (!c.is_unit()) factors.push_back(c);
  }
  return LocalizedModule(LocalizedModule::Kind::at_element, sq, n, n.rank(),
                         std::move(factors));
}

LocalizedModule localize_at_prime(const FgModule& n, const PrincipalIdeal& p) {
  require_same_ring(p.gen(), RingElem::zero(n.ring()), "localize_at_prime");
  if (!is_prime_ideal(p)) throw value_error("localize_at_prime: ideal is not prime");
  std::vector<RingElem> factors;
  if (!p.is_zero()) {
    for (const RingElem& d : n.invariant_factors()) {
      RingElem part = supported_part(d, p.gen());
      if (!part.is_unit()) factors.push_back(part);
    }
  }
  return LocalizedModule(LocalizedModule::Kind::at_prime, p.gen(), n, n.rank(),
                         std::move(factors));
}

bool is_regular_element(const RingElem& a, const FgModule& n) {
  require_same_ring(a, RingElem::zero(n.ring()), "is_regular_element");
  if (n.is_zero_module()) return true;
  if (a.is_zero()) return false;
  for (const RingElem& d : n.invariant_factors())
    if (!gcd(a, d).is_unit()) return false;
  return true;
}

bool is_regular_sequence2(const RingElem& a1, const RingElem& a2, const FgModule& n) {
  if (!is_regular_element(a1, n)) return false;
  FgModule n1 = quotient(n, Submodule::scaled(n, a1));
  if (!is_regular_element(a2, n1)) return false;
  FgModule n2 = quotient(n1, Submodule::scaled(n1, a2));
  return !n2.is_zero_module();
}

ModuleHom::ModuleHom(const FgModule& src, const FgModule& tgt,
                     std::vector<ModuleElement> images)
    : src_(src), tgt_(tgt), images_(std::move(images)) {
  if (images_.size() != src.gens()) throw value_error("ModuleHom: image count mismatch");
  for (const ModuleElement& im : images_)
    if (im.module() != tgt_) throw value_error("ModuleHom: image ambient mismatch");
  const Matrix& rel = src.relation_hnf().h;
  for (size_t i = 0; i < rel.rows(); ++i) {
    ModuleElement image = ModuleElement::zero(tgt_);
    for (size_t j = 0; j < src.gens(); ++j)
      image = add(image, scale(rel.at(i, j), images_[j]));
    if (!image.is_zero()) throw value_error("ModuleHom: relation does not map to zero");
  }
}

ModuleHom ModuleHom::identity(const FgModule& m) {
  std::vector<ModuleElement> images;
  for (size_t i = 0; i < m.gens(); ++i) images.push_back(ModuleElement::generator(m, i));
  return ModuleHom(m, m, std::move(images));
}

ModuleHom ModuleHom::zero(const FgModule& src, const FgModule& tgt) {
  return ModuleHom(src, tgt,
                   std::vector<ModuleElement>(src.gens(), ModuleElement::zero(tgt)));
}

ModuleElement ModuleHom::apply(const ModuleElement& x) const {
  if (x.module() != src_) throw value_error("ModuleHom::apply: source mismatch");
  ModuleElement out = ModuleElement::zero(tgt_);
  for (size_t j = 0; j < src_.gens(); ++j) out = add(out, scale(x.coords()[j], images_[j]));
  return out;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& h) {
  if (h.target() != g.source()) throw value_error("compose: target/source mismatch");
  std::vector<ModuleElement> images;
  for (const ModuleElement& im : h.images()) images.push_back(g.apply(im));
  return ModuleHom(h.source(), g.target(), std::move(images));
}

std::vector<ModuleElement> enumerate_elements(const FgModule& m, const mpz_class& guard) {
  auto card = m.cardinality();
  if (!card) throw guard_error("enumerate_elements: module is infinite");
  if (*card > guard) throw guard_error("enumerate_elements: guard exceeded");
  const HnfResult& hnf = m.relation_hnf();
  std::vector<std::vector<RingElem>> residue_lists;
  for (size_t i = 0; i < hnf.h.rows(); ++i)
    residue_lists.push_back(residues_mod(hnf.h.at(i, hnf.pivots[i]), guard));
  std::vector<ModuleElement> out;
  std::vector<size_t> idx(residue_lists.size(), 0);
  while (true) {
    std::vector<RingElem> coords(m.gens(), RingElem::zero(m.ring()));
    for (size_t i = 0; i < idx.size(); ++i) coords[hnf.pivots[i]] = residue_lists[i][idx[i]];
    out.push_back(ModuleElement(m, std::move(coords)));
    size_t i = 0;
    while (i < idx.size() && idx[i] + 1 == residue_lists[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return out;
}

}  // namespace psheaf
