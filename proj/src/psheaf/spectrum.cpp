#include "psheaf/spectrum.hpp"

#include <algorithm>

namespace psheaf {

namespace {

// arithmetic in the residue field R/(pi), on canonical residues
struct ResidueField {
  RingElem pi;
  std::vector<RingElem> elems;

  explicit ResidueField(const RingElem& prime, const mpz_class& guard)
      : pi(canonical(prime)), elems(residues_mod(pi, guard)) {}

  RingElem reduce(const RingElem& x) const { return divmod(x, pi).second; }
  RingElem addf(const RingElem& a, const RingElem& b) const { return reduce(add(a, b)); }
  RingElem mulf(const RingElem& a, const RingElem& b) const { return reduce(mul(a, b)); }
};

// proper subspaces of F^n as reduced row-echelon bases, dimension ascending,
// pivot columns and free entries in lexicographic order
std::vector<std::vector<std::vector<RingElem>>> enumerate_proper_subspaces(
    const ResidueField& F, size_t n) {
  const Ring& R = F.pi.ring();
  std::vector<std::vector<std::vector<RingElem>>> out;
  for (size_t r = 0; r < n; ++r) {
    std::vector<size_t> pivots(r);
    auto choose = [&](auto&& self, size_t k, size_t from) -> void {
      if (k == r) {
        // free entries: (i, j) with j > pivots[i], j not a pivot column
        std::vector<std::pair<size_t, size_t>> free_pos;
        for (size_t i = 0; i < r; ++i)
          for (size_t j = pivots[i] + 1; j < n; ++j)
            if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
              free_pos.emplace_back(i, j);
        std::vector<size_t> idx(free_pos.size(), 0);
        while (true) {
          std::vector<std::vector<RingElem>> rows(
              r, std::vector<RingElem>(n, RingElem::zero(R)));
          for (size_t i = 0; i < r; ++i) rows[i][pivots[i]] = RingElem::one(R);
          for (size_t f = 0; f < free_pos.size(); ++f)
            rows[free_pos[f].first][free_pos[f].second] = F.elems[idx[f]];
          out.push_back(std::move(rows));
          size_t f = 0;
          while (f < idx.size() && idx[f] + 1 == F.elems.size()) idx[f++] = 0;
          if (f == idx.size()) break;
          ++idx[f];
        }
        return;
      }
      for (size_t c = from; c < n; ++c) {
        pivots[k] = c;
        self(self, k + 1, c + 1);
      }
    };
    choose(choose, 0, 0);
  }
  return out;
}

// structure positions of M contributing to M/pM
std::vector<size_t> fiber_positions(const FgModule& m, const RingElem& p) {
  std::vector<size_t> pos = m.free_positions();
  const auto& factors = m.invariant_factors();
  const auto& tpos = m.torsion_positions();
  for (size_t i = 0; i < factors.size(); ++i)
    if (divides(p, factors[i])) pos.push_back(tpos[i]);
  std::sort(pos.begin(), pos.end());
  return pos;
}

Submodule lift_subspace(const FgModule& m, const RingElem& p,
                        const std::vector<size_t>& positions,
                        const std::vector<std::vector<RingElem>>& rows) {
  std::vector<ModuleElement> gens;
  for (const auto& row : rows) {
    ModuleElement g = ModuleElement::zero(m);
    for (size_t j = 0; j < positions.size(); ++j)
      g = add(g, scale(row[j], m.structure_gen(positions[j])));
    gens.push_back(g);
  }
  for (size_t i = 0; i < m.gens(); ++i)
    gens.push_back(scale(p, ModuleElement::generator(m, i)));
  return Submodule(m, std::move(gens));
}

}  // namespace

std::optional<PrincipalIdeal> is_prime(const Submodule& n, const FgModule& m) {
  if (n.ambient() != m) throw value_error("is_prime: ambient mismatch");
  if (n.is_whole()) return std::nullopt;
  FgModule q = quotient(m, n);
  PrincipalIdeal i = annihilator(q);
  if (!is_prime_ideal(i)) return std::nullopt;
  if (i.is_zero() && !q.invariant_factors().empty()) return std::nullopt;
  return i;
}

mpz_class proper_subspace_count(size_t n, const mpz_class& q) {
  mpz_class total = 0;
  for (size_t r = 0; r < n; ++r) {
    mpz_class binom = 1;
    for (size_t i = 0; i < r; ++i) {
      mpz_class num, den, qn = 1, qd = 1;
      for (size_t e = 0; e < n - i; ++e) qn *= q;
      for (size_t e = 0; e < i + 1; ++e) qd *= q;
      num = qn - 1;
      den = qd - 1;
      binom = binom * num / den;
    }
    total += binom;
  }
  return total;
}

size_t fiber_dimension(const FgModule& m, const RingElem& p) {
  if (!is_prime_elem(p)) throw value_error("fiber_dimension: p is not prime");
  return fiber_positions(m, p).size();
}

std::vector<PrimeSubmodule> spec_p(const FgModule& m, const RingElem& p, size_t guard) {
  require_same_ring(p, RingElem::zero(m.ring()), "spec_p");
  if (!is_prime_elem(p)) throw value_error("spec_p: p is not a prime element");
  RingElem pc = canonical(p);
  std::vector<size_t> positions = fiber_positions(m, pc);
  mpz_class q = residue_count(pc);
  if (proper_subspace_count(positions.size(), q) > guard)
    throw guard_error("spec_p: fiber too large (guard exceeded)");
  ResidueField F(pc, q);
  std::vector<PrimeSubmodule> out;
  for (const auto& rows : enumerate_proper_subspaces(F, positions.size()))
    out.push_back({lift_subspace(m, pc, positions, rows), PrincipalIdeal(pc)});
  return out;
}

std::vector<PrimeSubmodule> spec_zero(const FgModule& m) {
  if (m.rank() == 0) return {};
  if (m.rank() >= 2)
    throw precondition_error("spec_zero: infinitely many (0)-primes for rank >= 2");
  return {{torsion_submodule(m), PrincipalIdeal::zero(m.ring())}};
}

std::vector<PrimeSubmodule> spec_all(const FgModule& m, size_t guard) {
  if (m.rank() > 0) throw guard_error("spec_all: infinite spectrum (module has rank)");
  std::vector<PrimeSubmodule> out;
  PrincipalIdeal ann = annihilator(m);
  if (ann.is_unit()) return out;  // zero module
  for (const auto& [q, e] : factor(ann.gen())) {
    auto fiber = spec_p(m, q, guard);
    out.insert(out.end(), fiber.begin(), fiber.end());
  }
  return out;
}

bool ClosedSet::contains(const PrimeSubmodule& p) const {
  return divides(p.ideal.gen(), gen_);
}

bool OpenSet::is_empty() const {
  if (gen_.is_zero()) return true;
  if (ambient_.rank() > 0) return false;
  return divides(radical(annihilator(ambient_).gen()), gen_);
}

bool OpenSet::contains(const PrimeSubmodule& p) const {
  return !divides(p.ideal.gen(), gen_);
}

ClosedSet v_closed(const Submodule& n, const FgModule& m) {
  return ClosedSet(m, radical(colon(n, m).gen()));
}

OpenSet basic_open(const RingElem& r, const FgModule& m) {
  require_same_ring(r, RingElem::zero(m.ring()), "basic_open");
  return OpenSet(m, radical(colon(Submodule::scaled(m, r), m).gen()));
}

OpenSet whole_space(const FgModule& m) {
  return basic_open(RingElem::one(m.ring()), m);
}

OpenSet open_union(const OpenSet& a, const OpenSet& b) {
  if (a.ambient() != b.ambient()) throw value_error("open_union: ambient mismatch");
  return basic_open(gcd(a.gen(), b.gen()), a.ambient());
}

OpenSet open_intersect(const OpenSet& a, const OpenSet& b) {
  if (a.ambient() != b.ambient()) throw value_error("open_intersect: ambient mismatch");
  return basic_open(mul(a.gen(), b.gen()), a.ambient());
}

bool open_subset(const OpenSet& a, const OpenSet& b) {
  if (a.ambient() != b.ambient()) throw value_error("open_subset: ambient mismatch");
  return divides(b.gen(), a.gen());
}

bool open_member(const PrimeSubmodule& p, const OpenSet& u) { return u.contains(p); }

SuppDescription supp(const OpenSet& u) {
  SuppDescription out{false, {}, false, u.gen()};
  const FgModule& m = u.ambient();
  if (m.rank() == 0) {
    out.finite = true;
    PrincipalIdeal ann = annihilator(m);
    if (!ann.is_unit()) {
      for (const auto& [q, e] : factor(ann.gen()))
        if (!divides(q, u.gen())) out.primes.emplace_back(q);
    }
    return out;
  }
  out.includes_zero = !u.gen().is_zero();
  return out;
}

PrincipalIdeal psi(const PrimeSubmodule& p) { return p.ideal; }

bool is_faithful(const FgModule& m) { return annihilator(m).is_zero(); }

PrimefulWitnesses is_primeful(const FgModule& m) {
  if (m.is_zero_module()) throw precondition_error("is_primeful: zero module");
  PrimefulWitnesses out;
  auto hyperplane_over = [&](const RingElem& q) {
    std::vector<size_t> positions = fiber_positions(m, q);
    std::vector<std::vector<RingElem>> rows;
    for (size_t i = 1; i < positions.size(); ++i) {
      std::vector<RingElem> row(positions.size(), RingElem::zero(m.ring()));
      row[i] = RingElem::one(m.ring());
      rows.push_back(std::move(row));
    }
    return lift_subspace(m, q, positions, rows);
  };
  if (is_faithful(m)) {
    out.exhaustive = false;
    out.witnesses.emplace_back(PrincipalIdeal::zero(m.ring()), torsion_submodule(m));
    for (const RingElem& q : first_primes(m.ring(), 4))
      out.witnesses.emplace_back(PrincipalIdeal(q), hyperplane_over(q));
    return out;
  }
  out.exhaustive = true;
  for (const auto& [q, e] : factor(annihilator(m).gen()))
    out.witnesses.emplace_back(PrincipalIdeal(q), hyperplane_over(q));
  return out;
}

bool is_T0(const FgModule& m) {
  if (m.rank() == 0) return m.invariant_factors().size() <= 1;
  return m.rank() == 1 && m.invariant_factors().empty();
}

PrincipalIdeal zrad_colon(const Submodule& n, const FgModule& m) {
  return PrincipalIdeal(radical(colon(n, m).gen()));
}

Submodule zrad(const Submodule& n, const FgModule& m, size_t guard) {
  if (m.rank() > 0)
    throw precondition_error("zrad: submodule form requires a torsion module");
  PrincipalIdeal c = colon(n, m);
  Submodule acc = Submodule::whole(m);
  for (const PrimeSubmodule& p : spec_all(m, guard))
    if (divides(p.ideal.gen(), c.gen())) acc = sub_intersect(acc, p.sub);
  return acc;
}

SubcoverCertificate finite_subcover(const OpenSet& u, const std::vector<OpenSet>& cover) {
  for (const OpenSet& c : cover)
    if (c.ambient() != u.ambient()) throw value_error("finite_subcover: ambient mismatch");
  const Ring& R = u.gen().ring();
  const RingElem a = u.gen();
  if (a.is_zero()) return {{}, 1, {}};  // empty open: covered by anything
  RingElem g = RingElem::zero(R);
  std::vector<size_t> indices;
  auto covered = [&] { return !g.is_zero() && divides(radical(g), a); };
  for (size_t i = 0; i < cover.size() && !covered(); ++i) {
    RingElem gi = cover[i].gen();
    RingElem g2 = gcd(g, gi);
    if (g2 != g) {
      g = g2;
      indices.push_back(i);
    }
  }
  if (!covered()) {
    std::string sep;
    if (!g.is_zero())
      for (const auto& [q, e] : factor(radical(g)))
        if (!divides(q, a)) {
          sep = q.str();
          break;
        }
    throw not_a_cover_error("finite_subcover: union does not contain the open" +
                            (sep.empty() ? std::string() : " (prime " + sep + " separates)"));
  }
  std::vector<RingElem> gens;
  for (size_t i : indices) gens.push_back(cover[i].gen());
  auto [g0, coeffs] = bezout_chain(gens);
  unsigned t = 0;
  if (!g0.is_unit())
    for (const auto& [q, e] : factor(g0)) t = std::max(t, static_cast<unsigned>(e));
  RingElem c = div_exact(pow(a, t), g0);
  for (RingElem& x : coeffs) x = mul(c, x);
  return {indices, t, coeffs};
}

}  // namespace psheaf
