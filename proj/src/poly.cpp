/*
   Polynomial arithmetic over Z, Q, F_p and residue fields F_p[x]/(phi).
*/
#include "sb/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sb {

RatPoly to_rat(const IntPoly& f) {
  std::vector<Rational> c;
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

std::optional<IntPoly> to_int(const RatPoly& f) {
  std::vector<Integer> c;
  for (const auto& x : f.coeffs()) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& x : f.coeffs()) g = gcd(g, x);
  return g;
}

namespace {

template <class R>
std::string poly_string(const std::vector<R>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    R a = c[i];
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPoly& f, const std::string& var) { return poly_string(f.coeffs(), var); }
std::string to_string(const RatPoly& f, const std::string& var) { return poly_string(f.coeffs(), var); }

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& F, const IntPoly& g) {
  if (!g.is_monic()) throw ArgumentError("divmod_monic: divisor not monic");
  std::vector<Integer> r = F.coeffs();
  long dg = g.degree();
  long df = F.degree();
  if (df < dg) return {IntPoly(), F};
  std::vector<Integer> q(static_cast<size_t>(df - dg + 1), 0);
  for (long i = df; i >= dg; --i) {
    Integer c = r[static_cast<size_t>(i)];
    if (c == 0) continue;
    q[static_cast<size_t>(i - dg)] = c;
    for (long j = 0; j <= dg; ++j) r[static_cast<size_t>(i - dg + j)] -= c * g[static_cast<size_t>(j)];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& F, const RatPoly& g) {
  if (g.is_zero()) throw ArgumentError("division by zero polynomial");
  std::vector<Rational> r = F.coeffs();
  long dg = g.degree();
  long df = F.degree();
  if (df < dg) return {RatPoly(), F};
  std::vector<Rational> q(static_cast<size_t>(df - dg + 1), 0);
  Rational inv = 1 / g.lc();
  for (long i = df; i >= dg; --i) {
    Rational c = r[static_cast<size_t>(i)] * inv;
    if (c == 0) continue;
    q[static_cast<size_t>(i - dg)] = c;
    for (long j = 0; j <= dg; ++j) r[static_cast<size_t>(i - dg + j)] -= c * g[static_cast<size_t>(j)];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

IntPoly pseudo_remainder(const IntPoly& A, const IntPoly& B) {
  if (B.is_zero()) throw ArgumentError("pseudo_remainder by zero");
  std::vector<Integer> r = A.coeffs();
  long db = B.degree();
  long e = A.degree() - db + 1;
  if (e <= 0) return A;
  Integer lb = B.lc();
  while (static_cast<long>(r.size()) - 1 >= db) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (static_cast<long>(r.size()) - 1 < db) break;
    long dr = static_cast<long>(r.size()) - 1;
    Integer c = r.back();
    for (auto& x : r) x *= lb;
    for (long j = 0; j <= db; ++j) r[static_cast<size_t>(dr - db + j)] -= c * B[static_cast<size_t>(j)];
    r.pop_back();
    --e;
  }
  IntPoly R(std::move(r));
  return R.scaled(ipow(lb, static_cast<unsigned long>(std::max(e, 0L))));
}

/* ---------------- phi-adic expansion ---------------- */

RatPoly PhiExpansion::reproduce() const {
  RatPoly acc;
  for (size_t i = digits.size(); i-- > 0;) acc = acc * phi + digits[i];
  return acc;
}

std::optional<std::vector<IntPoly>> PhiExpansion::integer_digits() const {
  std::vector<IntPoly> out;
  for (const auto& d : digits) {
    auto z = to_int(d);
    if (!z) return std::nullopt;
    out.push_back(*z);
  }
  return out;
}

PhiExpansion phi_expansion(const RatPoly& F, const RatPoly& phi) {
  if (!phi.is_monic() || phi.degree() < 1) throw ArgumentError("phi must be monic of positive degree");
  PhiExpansion e{phi, {}};
  RatPoly rest = F;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, phi);
    e.digits.push_back(r);
    rest = q;
  }
  if (e.digits.empty()) e.digits.push_back(RatPoly());
  return e;
}

PhiExpansion phi_expansion(const IntPoly& F, const IntPoly& phi) {
  if (!phi.is_monic()) throw ArgumentError("phi must be monic");
  return phi_expansion(to_rat(F), to_rat(phi));
}

Valuation gauss_valuation(const IntPoly& g, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("not a prime");
  Valuation v = Valuation::infinity();
  for (const auto& c : g.coeffs())
    if (c != 0) v = std::min(v, Valuation(ord(c, p)));
  return v;
}

Valuation gauss_valuation(const RatPoly& g, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("not a prime");
  Valuation v = Valuation::infinity();
  for (const auto& c : g.coeffs())
    if (c != 0) v = std::min(v, Valuation(ord(c.get_num(), p) - ord(c.get_den(), p)));
  return v;
}

/* ---------------- F_p[x] ---------------- */

ModPoly::ModPoly(Integer p, std::vector<Integer> c) : p_(std::move(p)), c_(std::move(c)) { normalize(); }

void ModPoly::normalize() {
  for (auto& x : c_) x = mod(x, p_);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  std::vector<Integer> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-() const {
  std::vector<Integer> r = c_;
  for (auto& x : r) x = -x;
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& o) const { return *this + (-o); }

ModPoly ModPoly::operator*(const ModPoly& o) const {
  if (is_zero() || o.is_zero()) return ModPoly(p_, {});
  std::vector<Integer> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::scaled(const Integer& a) const {
  std::vector<Integer> r = c_;
  for (auto& x : r) x *= a;
  return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(sb::inverse_mod(lc(), p_));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_, {});
  std::vector<Integer> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ModPoly(p_, std::move(r));
}

bool ModPoly::operator<(const ModPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw ArgumentError("division by zero polynomial");
  const Integer& p = a.p();
  std::vector<Integer> r = a.coeffs();
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {ModPoly(p, {}), a};
  std::vector<Integer> q(static_cast<size_t>(da - db + 1), 0);
  Integer inv = inverse_mod(b.lc(), p);
  for (long i = da; i >= db; --i) {
    Integer c = mod(r[static_cast<size_t>(i)] * inv, p);
    if (c == 0) continue;
    q[static_cast<size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      Integer& t = r[static_cast<size_t>(i - db + j)];
      t = mod(t - c * b[static_cast<size_t>(j)], p);
    }
  }
  return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m) {
  ModPoly result = divmod(ModPoly::constant(m.p(), 1), m).second;
  ModPoly b = divmod(base, m).second;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

ModPoly inverse_mod(const ModPoly& a, const ModPoly& m) {
  const Integer& p = m.p();
  ModPoly r0 = m, r1 = divmod(a, m).second;
  ModPoly s0(p, {}), s1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    ModPoly s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (r0.degree() != 0) throw NoSolutionError("polynomial not invertible modulo " + to_string(m));
  return divmod(s0.scaled(sb::inverse_mod(r0.lc(), p)), m).second;
}

std::string to_string(const ModPoly& f, const std::string& var) {
  return poly_string(f.coeffs(), var);
}

ModPoly reduce_mod_p(const IntPoly& F, const Integer& p) { return ModPoly(p, F.coeffs()); }

ModPoly reduce_mod_p(const RatPoly& F, const Integer& p) {
  std::vector<Integer> c;
  for (const auto& x : F.coeffs()) c.push_back(residue(x, p));
  return ModPoly(p, std::move(c));
}

IntPoly lift_symmetric(const ModPoly& f) {
  std::vector<Integer> c;
  Integer half = f.p() / 2;
  for (const auto& x : f.coeffs()) c.push_back(x > half ? x - f.p() : x);
  return IntPoly(std::move(c));
}

/* ---------------- factorization over F_p ---------------- */

namespace {

/* Every monic polynomial of degree d over F_p, in increasing order. */
std::vector<ModPoly> monic_of_degree(const Integer& p, long d) {
  std::vector<ModPoly> out;
  unsigned long q = p.get_ui();
  unsigned long count = 1;
  for (long i = 0; i < d; ++i) count *= q;
  for (unsigned long n = 0; n < count; ++n) {
    std::vector<Integer> c(static_cast<size_t>(d + 1));
    unsigned long t = n;
    for (long i = 0; i < d; ++i) {
      c[static_cast<size_t>(i)] = t % q;
      t /= q;
    }
    c[static_cast<size_t>(d)] = 1;
    out.emplace_back(p, std::move(c));
  }
  return out;
}

ModFactorization factor_exhaustive(const ModPoly& F) {
  ModFactorization out;
  ModPoly rest = F;
  for (long d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& g : monic_of_degree(F.p(), d)) {
      int m = 0;
      for (;;) {
        auto [q, r] = divmod(rest, g);
        if (!r.is_zero()) break;
        rest = q;
        ++m;
      }
      if (m) out.emplace_back(g, m);
      if (2 * d > rest.degree()) break;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, 1);
  return out;
}

/* Square-free decomposition; valid when deg F < p. */
std::vector<std::pair<ModPoly, int>> yun(const ModPoly& F) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly d1 = F.derivative();
  ModPoly a = gcd(F, d1);
  ModPoly b = divmod(F, a).first;
  ModPoly c = divmod(d1, a).first;
  ModPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    ModPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

void equal_degree(const ModPoly& g, long d, gmp_randclass& rng, std::vector<ModPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Integer& p = g.p();
  Integer e = (ipow(p, static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    std::vector<Integer> c;
    for (long i = 0; i < g.degree(); ++i) c.push_back(rng.get_z_range(p));
    ModPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    ModPoly b = powmod(a, e, g) - ModPoly::constant(p, 1);
    ModPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

ModFactorization factor_large(const ModPoly& F) {
  const Integer& p = F.p();
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20220301UL);
  ModFactorization out;
  for (const auto& [sqf, mult] : yun(F)) {
    ModPoly g = sqf;
    ModPoly h = ModPoly::x(p);
    long d = 1;
    while (g.degree() >= 2 * d) {
      h = powmod(h, p, g);
      ModPoly t = gcd(g, h - ModPoly::x(p));
      if (t.degree() > 0) {
        std::vector<ModPoly> parts;
        equal_degree(t, d, rng, parts);
        for (auto& q : parts) out.emplace_back(q, mult);
        g = divmod(g, t).first;
        h = divmod(h, g).second;
      }
      ++d;
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), mult);
  }
  return out;
}

}  // namespace

ModFactorization factor_mod_p(const ModPoly& F) {
  if (F.is_zero()) throw ArgumentError("factor_mod_p: zero polynomial");
  ModPoly f = F.monic();
  if (f.degree() == 0) return {};
  ModFactorization out;
  if (f.p() <= 13)
    out = factor_exhaustive(f);
  else if (Integer(f.degree()) < f.p())
    out = factor_large(f);
  else
    throw ArgumentError("factor_mod_p: degree too large for p");
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool is_irreducible(const ModPoly& F) {
  if (F.degree() < 1) return false;
  auto fac = factor_mod_p(F);
  return fac.size() == 1 && fac[0].second == 1;
}

/* ---------------- F_q[Y] ---------------- */

ResidueField::ResidueField(ModPoly m) : modulus(m.monic()) {
  if (modulus.degree() < 1) throw ArgumentError("residue field modulus must have positive degree");
}

FqPoly::FqPoly(const ResidueField& F, std::vector<ModPoly> c) : F_(F), c_(std::move(c)) { normalize(); }

void FqPoly::normalize() {
  for (auto& x : c_) x = F_.reduce(x);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  ModPoly inv = F_.inv(lc());
  std::vector<ModPoly> r;
  for (const auto& x : c_) r.push_back(F_.mul(x, inv));
  return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::derivative() const {
  std::vector<ModPoly> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i].scaled(Integer(static_cast<unsigned long>(i))));
  return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  std::vector<ModPoly> r(std::max(c_.size(), o.c_.size()), F_.zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
  return FqPoly(F_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (is_zero() || o.is_zero()) return FqPoly(F_, {});
  std::vector<ModPoly> r(c_.size() + o.c_.size() - 1, F_.zero());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + F_.mul(c_[i], o.c_[j]);
  return FqPoly(F_, std::move(r));
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw ArgumentError("division by zero polynomial");
  const ResidueField& F = a.field();
  std::vector<ModPoly> r = a.coeffs();
  long db = b.degree(), da = a.degree();
  if (da < db) return {FqPoly(F, {}), a};
  std::vector<ModPoly> q(static_cast<size_t>(da - db + 1), F.zero());
  ModPoly inv = F.inv(b.lc());
  for (long i = da; i >= db; --i) {
    ModPoly c = F.mul(r[static_cast<size_t>(i)], inv);
    if (c.is_zero()) continue;
    q[static_cast<size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      ModPoly& t = r[static_cast<size_t>(i - db + j)];
      t = F.reduce(t - c * b.coeffs()[static_cast<size_t>(j)]);
    }
  }
  return {FqPoly(F, std::move(q)), FqPoly(F, std::move(r))};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

bool is_squarefree(const FqPoly& T) {
  if (T.is_zero()) return false;
  if (T.degree() <= 1) return true;
  FqPoly d = T.derivative();
  /* T' = 0 makes T a p-th power over the perfect field F_q */
  if (d.is_zero()) return false;
  return gcd(T, d).degree() == 0;
}

std::string to_string(const FqPoly& T, const std::string& var, const std::string& gen) {
  if (T.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = T.coeffs().size(); i-- > 0;) {
    const ModPoly& c = T.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c.degree() == 0 && c.lc() == 1;
    bool compound = c.coeffs().size() > 1 && std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                            [](const Integer& z) { return z != 0; }) > 1;
    if (i == 0 || !unit) os << (compound ? "(" : "") << to_string(c, gen) << (compound ? ")" : "");
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

/* ---------------- resultants ---------------- */

Integer resultant(const IntPoly& F, const IntPoly& G) {
  if (F.is_zero() || G.is_zero()) throw ArgumentError("resultant of zero polynomial");
  IntPoly A = F, B = G;
  long da = A.degree(), db = B.degree();
  if (db == 0) return ipow(B.lc(), static_cast<unsigned long>(da));
  if (da == 0) return ipow(A.lc(), static_cast<unsigned long>(db));
  Integer a = content(A), b = content(B);
  if (A.lc() < 0) a = -a;
  if (B.lc() < 0) b = -b;
  {
    std::vector<Integer> c = A.coeffs();
    for (auto& x : c) x /= a;
    A = IntPoly(std::move(c));
    c = B.coeffs();
    for (auto& x : c) x /= b;
    B = IntPoly(std::move(c));
  }
  Integer g = 1, h = 1;
  int s = 1;
  Integer t = ipow(a, static_cast<unsigned long>(db)) * ipow(b, static_cast<unsigned long>(da));
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
  }
  for (;;) {
    long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = B;
    if (R.is_zero()) return 0;
    Integer den = g * ipow(h, static_cast<unsigned long>(delta));
    std::vector<Integer> c = R.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), den.get_mpz_t());
    B = IntPoly(std::move(c));
    g = A.lc();
    /* h <- h^(1-delta) g^delta, exact */
    if (delta == 0) {
      /* unchanged */
    } else {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer hd = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), hd.get_mpz_t());
    }
    if (B.degree() == 0) {
      long dA = A.degree();
      Integer num = ipow(B.lc(), static_cast<unsigned long>(dA));
      Integer hd = ipow(h, static_cast<unsigned long>(dA - 1));
      Integer hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), hd.get_mpz_t());
      return s * t * hh;
    }
  }
}

Integer discriminant(const IntPoly& F) {
  if (!F.is_monic()) throw ArgumentError("discriminant: monic polynomial expected");
  long n = F.degree();
  Integer r = resultant(F, F.derivative());
  return ((n * (n - 1) / 2) % 2) ? Integer(-r) : r;
}

RatPoly char_poly_of_element(const IntPoly& g, const Integer& t, const IntPoly& f) {
  if (!f.is_monic()) throw ArgumentError("char_poly_of_element: f must be monic");
  if (t <= 0) throw ArgumentError("char_poly_of_element: t must be positive");
  const long n = f.degree();
  IntPoly gr = g.degree() >= n ? divmod_monic(g, f).second : g;
  /* chi(y) = Res_x(f, t*y - g)/t^n, sampled at y = 0..n and interpolated */
  std::vector<Rational> xs, ys;
  Integer tn = ipow(t, static_cast<unsigned long>(n));
  for (long k = 0; k <= n; ++k) {
    IntPoly h = IntPoly::constant(t * k) - gr;
    Integer r = h.is_zero() ? Integer(0) : resultant(f, h);
    xs.emplace_back(k);
    ys.push_back(Rational(r, tn));
    ys.back().canonicalize();
  }
  /* Newton divided differences */
  std::vector<Rational> coef = ys;
  for (long j = 1; j <= n; ++j)
    for (long i = n; i >= j; --i)
      coef[static_cast<size_t>(i)] = (coef[static_cast<size_t>(i)] - coef[static_cast<size_t>(i - 1)]) /
                                     (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - j)]);
  RatPoly P = RatPoly::constant(coef[static_cast<size_t>(n)]);
  for (long i = n - 1; i >= 0; --i) {
    P = P * RatPoly{-xs[static_cast<size_t>(i)], Rational(1)} + RatPoly::constant(coef[static_cast<size_t>(i)]);
  }
  if (!P.is_monic() || P.degree() != n) throw InternalError("characteristic polynomial not monic");
  return P;
}

}  // namespace sb
