#include "psheaf/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace psheaf {

namespace {

bool small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long mod_p(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

long inv_mod_p(long a, long p) {
  // extended Euclid on machine words; p is a small prime, a != 0 mod p
  long t = 0, nt = 1, r = p, nr = mod_p(a, p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return mod_p(t, p);
}

void trim(std::vector<long>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

Ring Ring::poly_mod_p(long p) {
  if (!small_prime(p) || p > (1L << 20))
    throw value_error("poly_mod_p: modulus must be a small prime");
  return Ring(Kind::poly_mod_p, p);
}

std::string Ring::name() const {
  if (kind_ == Kind::integers) return "Z";
  return "F" + std::to_string(p_) + "[x]";
}

RingElem::RingElem(const Ring& ring, long value) : ring_(ring), v_(mpz_class(0)) {
  if (ring.is_integers()) {
    v_ = mpz_class(value);
  } else {
    std::vector<long> c{mod_p(value, ring.p())};
    trim(c);
    v_ = std::move(c);
  }
}

RingElem RingElem::poly(long p, std::vector<long> coeffs) {
  Ring r = Ring::poly_mod_p(p);
  for (long& c : coeffs) c = mod_p(c, p);
  trim(coeffs);
  return RingElem(r, std::move(coeffs));
}

RingElem RingElem::variable(const Ring& r) {
  if (r.is_integers()) throw value_error("variable: integer ring has no indeterminate");
  return RingElem(r, std::vector<long>{0, 1});
}

bool RingElem::is_zero() const {
  if (ring_.is_integers()) return z() == 0;
  return coeffs().empty();
}

bool RingElem::is_unit() const {
  if (ring_.is_integers()) return z() == 1 || z() == -1;
  return coeffs().size() == 1;
}

bool RingElem::is_one() const {
  if (ring_.is_integers()) return z() == 1;
  return coeffs().size() == 1 && coeffs()[0] == 1;
}

long RingElem::degree() const {
  if (ring_.is_integers()) throw value_error("degree: integer ring");
  return static_cast<long>(coeffs().size()) - 1;
}

bool RingElem::operator==(const RingElem& o) const {
  return ring_ == o.ring_ && v_ == o.v_;
}

void require_same_ring(const RingElem& a, const RingElem& b, const char* who) {
  if (!(a.ring() == b.ring()))
    throw value_error(std::string(who) + ": mixed-ring operands");
}

RingElem add(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "add");
  if (a.ring().is_integers()) return RingElem(a.ring_, mpz_class(a.z() + b.z()));
  const long p = a.ring().p();
  std::vector<long> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] = mod_p(c[i] + b.coeffs()[i], p);
  trim(c);
  return RingElem(a.ring_, std::move(c));
}

RingElem sub(const RingElem& a, const RingElem& b) { return add(a, neg(b)); }

RingElem neg(const RingElem& a) {
  if (a.ring().is_integers()) return RingElem(a.ring_, mpz_class(-a.z()));
  const long p = a.ring().p();
  std::vector<long> c = a.coeffs();
  for (long& x : c) x = mod_p(-x, p);
  return RingElem(a.ring_, std::move(c));
}

RingElem mul(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "mul");
  if (a.ring().is_integers()) return RingElem(a.ring_, mpz_class(a.z() * b.z()));
  if (a.is_zero() || b.is_zero()) return RingElem::zero(a.ring());
  const long p = a.ring().p();
  std::vector<long> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = mod_p(c[i + j] + a.coeffs()[i] * b.coeffs()[j], p);
  trim(c);
  return RingElem(a.ring_, std::move(c));
}

std::pair<RingElem, RingElem> divmod(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "divmod");
  if (b.is_zero()) throw value_error("divmod: division by zero");
  if (a.ring().is_integers()) {
    mpz_class babs = abs(b.z());
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.z().get_mpz_t(), babs.get_mpz_t());
    if (b.z() < 0) q = -q;
    return {RingElem(a.ring_, q), RingElem(a.ring_, r)};
  }
  const long p = a.ring().p();
  const auto& d = b.coeffs();
  std::vector<long> r = a.coeffs();
  std::vector<long> q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, 0);
  long linv = inv_mod_p(d.back(), p);
  while (r.size() >= d.size()) {
    long c = mod_p(r.back() * linv, p);
    size_t shift = r.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i)
      r[shift + i] = mod_p(r[shift + i] - c * d[i], p);
    r.pop_back();  // leading coefficient cancels exactly
    trim(r);
  }
  trim(q);
  RingElem ring_q = q.empty() ? RingElem::zero(a.ring()) : RingElem::poly(p, q);
  RingElem ring_r = r.empty() ? RingElem::zero(a.ring()) : RingElem::poly(p, r);
  return {ring_q, ring_r};
}

bool divides(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "divides");
  if (a.is_zero()) return b.is_zero();
  return divmod(b, a).second.is_zero();
}

RingElem div_exact(const RingElem& a, const RingElem& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw value_error("div_exact: not divisible");
  return q;
}

RingElem canonical(const RingElem& a) { return mul(a, canonical_unit(a)); }

RingElem canonical_unit(const RingElem& a) {
  if (a.ring().is_integers())
    return RingElem(a.ring(), a.z() < 0 ? -1 : 1);
  if (a.is_zero()) return RingElem::one(a.ring());
  return RingElem(a.ring(), inv_mod_p(a.coeffs().back(), a.ring().p()));
}

RingElem unit_inverse(const RingElem& u) {
  if (!u.is_unit()) throw value_error("unit_inverse: not a unit");
  if (u.ring().is_integers()) return u;
  return RingElem(u.ring(), inv_mod_p(u.coeffs()[0], u.ring().p()));
}

RingElem pow(const RingElem& a, unsigned long k) {
  RingElem r = RingElem::one(a.ring());
  RingElem base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return r;
}

RingElem gcd(const RingElem& a, const RingElem& b) {
  return std::get<0>(xgcd(a, b));
}

RingElem lcm(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "lcm");
  if (a.is_zero() || b.is_zero()) return RingElem::zero(a.ring());
  RingElem g = gcd(a, b);
  return canonical(mul(div_exact(a, g), b));
}

std::tuple<RingElem, RingElem, RingElem> xgcd(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "xgcd");
  const Ring& R = a.ring();
  RingElem r0 = a, r1 = b;
  RingElem u0 = RingElem::one(R), u1 = RingElem::zero(R);
  RingElem v0 = RingElem::zero(R), v1 = RingElem::one(R);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    r0 = r1;
    r1 = r2;
    RingElem u2 = sub(u0, mul(q, u1));
    u0 = u1;
    u1 = u2;
    RingElem v2 = sub(v0, mul(q, v1));
    v0 = v1;
    v1 = v2;
  }
  RingElem u = canonical_unit(r0);
  return {mul(r0, u), mul(u0, u), mul(v0, u)};
}

std::pair<RingElem, std::vector<RingElem>> bezout_chain(const std::vector<RingElem>& elems) {
  if (elems.empty()) throw value_error("bezout_chain: empty list");
  RingElem g = canonical(elems[0]);
  std::vector<RingElem> coeffs{canonical_unit(elems[0])};
  for (size_t i = 1; i < elems.size(); ++i) {
    auto [g2, u, v] = xgcd(g, elems[i]);
    for (RingElem& c : coeffs) c = mul(c, u);
    coeffs.push_back(v);
    g = g2;
  }
  return {g, coeffs};
}

RingElem inv_mod(const RingElem& a, const RingElem& m) {
  auto [g, u, v] = xgcd(a, m);
  (void)v;
  if (!g.is_unit()) throw value_error("inv_mod: element not invertible modulo m");
  RingElem inv = mul(u, unit_inverse(g));
  return divmod(inv, m).second;
}

std::vector<std::pair<RingElem, int>> factor(const RingElem& a) {
  if (a.is_zero()) throw value_error("factor: zero input");
  const Ring& R = a.ring();
  std::vector<std::pair<RingElem, int>> out;
  if (R.is_integers()) {
    mpz_class n = abs(a.z());
    if (n == 1) return out;
    auto strip = [&](const mpz_class& d) {
      int e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
        n /= d;
        ++e;
      }
      if (e) out.emplace_back(RingElem::integer(d), e);
    };
    strip(2);
    const long bound = 1000000;
    for (long d = 3; d <= bound && mpz_class(d) * d <= n; d += 2) strip(d);
    if (n > 1) {
      // no divisor <= 10^6, so n is prime whenever n <= 10^12
      if (n > mpz_class(bound) * bound)
        throw guard_error("factor: integer exceeds desk-scale factoring guard");
      out.emplace_back(RingElem::integer(n), 1);
    }
    return out;
  }
  const long p = R.p();
  RingElem n = canonical(a);
  if (n.is_unit()) return out;
  while (!n.is_unit()) {
    long dn = n.degree();
    RingElem found = RingElem::zero(R);
    // smallest-degree monic divisor is irreducible
    for (long d = 1; d <= dn / 2 && found.is_zero(); ++d) {
      double count = 1;
      for (long i = 0; i < d; ++i) count *= p;
      if (count > 2e6) throw guard_error("factor: polynomial exceeds desk-scale guard");
      std::vector<long> c(d + 1, 0);
      c[d] = 1;
      while (true) {
        RingElem cand = RingElem::poly(p, c);
        if (divides(cand, n)) {
          found = cand;
          break;
        }
        long i = 0;
        while (i < d && c[i] == p - 1) c[i++] = 0;
        if (i == d) break;
        ++c[i];
      }
    }
    if (found.is_zero()) found = n;  // irreducible
    int e = 0;
    while (divides(found, n)) {
      n = div_exact(n, found);
      ++e;
    }
    out.emplace_back(found, e);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return cmp(x.first, y.first) < 0; });
  return out;
}

RingElem radical(const RingElem& a) {
  if (a.is_zero()) return a;
  if (canonical(a).is_unit()) return RingElem::one(a.ring());
  RingElem r = RingElem::one(a.ring());
  for (const auto& [p, e] : factor(a)) r = mul(r, p);
  return canonical(r);
}

bool is_prime_elem(const RingElem& a) {
  if (a.is_zero() || a.is_unit()) return false;
  auto f = factor(a);
  return f.size() == 1 && f[0].second == 1;
}

int valuation(const RingElem& a, const RingElem& p) {
  if (a.is_zero()) throw value_error("valuation: zero input");
  int v = 0;
  RingElem n = a;
  while (divides(p, n)) {
    n = div_exact(n, p);
    ++v;
  }
  return v;
}

RingElem coprime_part(const RingElem& a, const RingElem& b) {
  if (a.is_zero()) throw value_error("coprime_part: zero input");
  RingElem n = canonical(a);
  RingElem g = gcd(n, b);
  while (!g.is_unit()) {
    n = div_exact(n, g);
    g = gcd(n, b);
  }
  return canonical(n);
}

RingElem supported_part(const RingElem& a, const RingElem& b) {
  return div_exact(canonical(a), coprime_part(a, b));
}

int cmp(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "cmp");
  if (a.ring().is_integers()) return ::cmp(a.z(), b.z());
  if (a.coeffs().size() != b.coeffs().size())
    return a.coeffs().size() < b.coeffs().size() ? -1 : 1;
  for (size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i] ? -1 : 1;
  }
  return 0;
}

int cmp_size(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b, "cmp_size");
  if (a.ring().is_integers()) {
    mpz_class x = abs(a.z()), y = abs(b.z());
    return ::cmp(x, y);
  }
  long da = static_cast<long>(a.coeffs().size());
  long db = static_cast<long>(b.coeffs().size());
  return da < db ? -1 : da > db ? 1 : 0;
}

mpz_class residue_count(const RingElem& m) {
  if (m.is_zero()) throw value_error("residue_count: zero modulus");
  if (m.ring().is_integers()) return abs(m.z());
  mpz_class n = 1;
  for (long i = 0; i < m.degree(); ++i) n *= m.ring().p();
  return n;
}

std::vector<RingElem> residues_mod(const RingElem& m, const mpz_class& guard) {
  mpz_class n = residue_count(m);
  if (n > guard) throw guard_error("residues_mod: enumeration guard exceeded");
  std::vector<RingElem> out;
  if (m.ring().is_integers()) {
    for (mpz_class i = 0; i < n; ++i) out.push_back(RingElem::integer(i));
    return out;
  }
  const long p = m.ring().p();
  long d = m.degree();
  std::vector<long> c(std::max(d, 0L), 0);
  mpz_class total = n;
  for (mpz_class i = 0; i < total; ++i) {
    std::vector<long> cc = c;
    trim(cc);
    out.push_back(cc.empty() ? RingElem::zero(m.ring()) : RingElem::poly(p, cc));
    long j = 0;
    while (j < d && c[j] == p - 1) c[j++] = 0;
    if (j < d) ++c[j];
  }
  return out;
}

std::vector<RingElem> first_primes(const Ring& r, size_t k) {
  std::vector<RingElem> out;
  if (r.is_integers()) {
    for (long n = 2; out.size() < k; ++n)
      if (small_prime(n)) out.push_back(RingElem::integer(n));
    return out;
  }
  const long p = r.p();
  for (long d = 1; out.size() < k; ++d) {
    std::vector<long> c(d + 1, 0);
    c[d] = 1;
    while (out.size() < k) {
      RingElem cand = RingElem::poly(p, c);
      if (is_prime_elem(cand)) out.push_back(cand);
      long i = 0;
      while (i < d && c[i] == p - 1) c[i++] = 0;
      if (i == d) break;
      ++c[i];
    }
  }
  return out;
}

std::string RingElem::str() const {
  if (ring_.is_integers()) return z().get_str();
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs().size(); i-- > 0;) {
    long c = coeffs()[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// one term of a polynomial: [coeff][x[^exp]]
bool parse_poly_term(const std::string& t, long p, long& coeff, long& exp, std::string& err) {
  size_t i = 0;
  bool neg_term = false;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg_term = t[i++] == '-';
  std::string digits;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) digits += t[i++];
  if (i == t.size()) {
    if (digits.empty()) {
      err = "empty term";
      return false;
    }
    coeff = std::stol(digits);
    exp = 0;
  } else if (t[i] == 'x') {
    ++i;
    coeff = digits.empty() ? 1 : std::stol(digits);
    if (i == t.size()) {
      exp = 1;
    } else if (t[i] == '^') {
      ++i;
      std::string e;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) e += t[i++];
      if (e.empty() || i != t.size()) {
        err = "bad exponent";
        return false;
      }
      exp = std::stol(e);
    } else {
      err = "unexpected character in term";
      return false;
    }
  } else {
    err = "unexpected character in term";
    return false;
  }
  coeff = mod_p(neg_term ? -coeff : coeff, p);
  return true;
}

}  // namespace

RingElem parse_elem(const Ring& r, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw parse_error("empty ring element", 0, 0);
  if (r.is_integers()) {
    size_t pos = s[0] == '-' ? 1 : 0;
    if (pos == s.size()) throw parse_error("bad integer: " + text, 0, 0);
    for (size_t i = pos; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw parse_error("bad integer: " + text, 0, 0);
    return RingElem::integer(mpz_class(s));
  }
  // split into signed terms
  std::vector<std::string> terms;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && i > 0) {
      terms.push_back(cur);
      cur.clear();
    }
    cur += s[i];
  }
  terms.push_back(cur);
  std::vector<long> coeffs;
  for (const std::string& t : terms) {
    long c = 0, e = 0;
    std::string err;
    if (!parse_poly_term(t, r.p(), c, e, err))
      throw parse_error("bad polynomial \"" + text + "\": " + err, 0, 0);
    if (e > 64) throw parse_error("bad polynomial: exponent too large", 0, 0);
    if (coeffs.size() <= static_cast<size_t>(e)) coeffs.resize(e + 1, 0);
    coeffs[e] = mod_p(coeffs[e] + c, r.p());
  }
  trim(coeffs);
  return coeffs.empty() ? RingElem::zero(r) : RingElem::poly(r.p(), coeffs);
}

}  // namespace psheaf
