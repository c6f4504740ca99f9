/*
   Exact arithmetic substrate.
*/
#include "sb/exact.hpp"

#include <algorithm>
#include <map>

namespace sb {

long Valuation::value() const {
  if (inf_) throw ArgumentError("valuation is infinite");
  return v_;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  if (m == 0) throw ArgumentError("modulus zero");
  Integer r;
  Integer am = abs(m);
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer r;
  Integer am = mod(a, m);
  if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NoSolutionError("not invertible: " + to_string(a) + " mod " + to_string(m));
  return r;
}

Integer numerator(const Rational& q) { return q.get_num(); }
Integer denominator(const Rational& q) { return q.get_den(); }
bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer residue(const Rational& q, const Integer& m) {
  if (m == 1) return 0;
  return mod(q.get_num() * inverse_mod(q.get_den(), m), m);
}

std::string to_string(const Integer& n) { return n.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  if (t.empty()) throw ArgumentError("empty integer");
  size_t start = (t[0] == '-') ? 1 : 0;
  if (start == t.size()) throw ArgumentError("malformed integer: " + s);
  for (size_t i = start; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') throw ArgumentError("malformed integer: " + s);
  return Integer(t, 10);
}

/* ---------------- primality ---------------- */

namespace {

const Integer& mr_limit() {
  static const Integer lim("3317044064679887385961981", 10);
  return lim;
}

bool miller_rabin(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x, a = base, nm1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr unsigned long kSieveLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> table = [] {
    const unsigned long n = kSieveLimit;
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= n; ++i) {
      if (!sieve[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return ps;
  }();
  return table;
}

}  // namespace

Primality primality(const Integer& n) {
  if (n < 2) return Primality::Composite;
  static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : bases) {
    if (n == b) return Primality::Prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return Primality::Composite;
  }
  if (n < 43 * 43) return Primality::Prime;
  if (n < mr_limit()) {
    for (unsigned long b : bases)
      if (!miller_rabin(n, b)) return Primality::Composite;
    return Primality::Prime;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) ? Primality::ProbablePrime
                                                : Primality::Composite;
}

bool is_prime(const Integer& n) { return primality(n) == Primality::Prime; }

/* ---------------- valuations ---------------- */

long ord(const Integer& n, const Integer& p) {
  if (p == 2) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
  Integer t;
  return static_cast<long>(mpz_remove(t.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer strip(const Integer& n, const Integer& p) {
  Integer t;
  mpz_remove(t.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return t;
}

Valuation vp(const Integer& n, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("not a prime: " + to_string(p));
  if (n == 0) return Valuation::infinity();
  return Valuation(ord(n, p));
}

Valuation vp(const Rational& q, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("not a prime: " + to_string(p));
  if (q == 0) return Valuation::infinity();
  return Valuation(ord(q.get_num(), p) - ord(q.get_den(), p));
}

/* ---------------- congruences ---------------- */

Integer solve_linear_congruence(const Integer& c, const Integer& d, const Integer& M) {
  if (M <= 0) throw ArgumentError("modulus must be positive");
  if (M == 1) return 0;
  Integer g = gcd(c, M);
  if (g != 1) throw NoSolutionError("gcd(c, M) != 1 in linear congruence");
  return mod(-d * inverse_mod(c, M), M);
}

Integer crt_lift(const std::vector<std::pair<Integer, Integer>>& residues) {
  Integer x = 0, m = 1;
  for (const auto& [r, n] : residues) {
    if (n <= 0) throw ArgumentError("CRT modulus must be positive");
    if (gcd(m, n) != 1) throw ArgumentError("CRT moduli not coprime");
    /* x + m*t = r mod n */
    Integer t = mod((r - x) * inverse_mod(m, n), n);
    x += m * t;
    m *= n;
    x = mod(x, m);
  }
  return x;
}

/* ---------------- factorization ---------------- */

Integer PrimeFactorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v * cofactor;
}

long PrimeFactorization::exponent(const Integer& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

namespace {

/* Brent's variant of Pollard rho; returns a nontrivial divisor or 0. */
Integer rho(const Integer& n, unsigned long& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; c < 64 && budget > 0; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys, t;
    unsigned long r = 1, m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && budget > 0) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          t = abs(x - y);
          q *= t;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        budget = budget > lim ? budget - lim : 0;
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

}  // namespace

PrimeFactorization factor(const Integer& n, const FactorBudget& budget) {
  if (n == 0) throw ArgumentError("cannot factor zero");
  PrimeFactorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);
  std::map<Integer, long> found;

  const auto& table = small_primes();
  std::vector<unsigned long> extra;
  const std::vector<unsigned long>* primes = &table;
  if (budget.trial_bound > kSieveLimit) {
    /* a larger bound than the cached table: sieve on demand */
    std::vector<bool> sieve(budget.trial_bound + 1, true);
    for (unsigned long i = 2; i <= budget.trial_bound; ++i) {
      if (!sieve[i]) continue;
      extra.push_back(i);
      for (unsigned long j = i * i; j <= budget.trial_bound; j += i) sieve[j] = false;
    }
    primes = &extra;
  }
  for (unsigned long p : *primes) {
    if (p > budget.trial_bound) break;
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      long e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      found[Integer(p)] += e;
    }
  }
  unsigned long rho_left = budget.rho_iterations;
  std::vector<std::pair<Integer, long>> stack;
  if (m > 1) stack.emplace_back(m, 1);
  Integer cofactor = 1;
  bool probable = false;
  while (!stack.empty()) {
    auto [x, mult] = stack.back();
    stack.pop_back();
    if (x == 1) continue;
    /* perfect powers first */
    bool split = false;
    for (unsigned long k = 2; Integer(1) << k <= x; ++k) {
      Integer r;
      if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), k)) {
        stack.emplace_back(r, mult * static_cast<long>(k));
        split = true;
        break;
      }
    }
    if (split) continue;
    Primality pr = primality(x);
    if (pr == Primality::Prime) {
      found[x] += mult;
      continue;
    }
    if (pr == Primality::ProbablePrime) {
      cofactor *= ipow(x, mult);
      probable = true;
      continue;
    }
    Integer d = rho(x, rho_left);
    if (d == 0) {
      cofactor *= ipow(x, mult);
      continue;
    }
    Integer e = x / d;
    Integer g = gcd(d, e);
    if (g == 1) {
      stack.emplace_back(d, mult);
      stack.emplace_back(e, mult);
    } else {
      /* keep pieces coprime so multiplicities stay additive */
      stack.emplace_back(g, 2 * mult);
      stack.emplace_back(d / g, mult);
      stack.emplace_back(e / g, mult);
    }
  }
  for (const auto& [p, e] : found) out.factors.emplace_back(p, e);
  out.cofactor = cofactor;
  out.cofactor_probable_prime = probable && primality(cofactor) == Primality::ProbablePrime;
  return out;
}

/* ---------------- matrices ---------------- */

IntMatrix hnf(const IntMatrix& generators) {
  if (generators.empty()) throw ArgumentError("hnf: empty matrix");
  const size_t n = generators[0].size();
  std::vector<std::vector<Integer>> active = generators;
  for (const auto& r : active)
    if (r.size() != n) throw ArgumentError("hnf: ragged matrix");
  IntMatrix H(n);
  for (size_t jj = n; jj-- > 0;) {
    for (;;) {
      size_t piv = active.size();
      for (size_t r = 0; r < active.size(); ++r) {
        if (active[r][jj] == 0) continue;
        if (piv == active.size() || abs(active[r][jj]) < abs(active[piv][jj])) piv = r;
      }
      if (piv == active.size()) throw ArgumentError("hnf: singular lattice");
      bool clean = true;
      for (size_t r = 0; r < active.size(); ++r) {
        if (r == piv || active[r][jj] == 0) continue;
        Integer q = floor_div(active[r][jj], active[piv][jj]);
        for (size_t c = 0; c <= jj; ++c) active[r][c] -= q * active[piv][c];
        if (active[r][jj] != 0) clean = false;
      }
      if (clean) {
        H[jj] = active[piv];
        active.erase(active.begin() + static_cast<long>(piv));
        break;
      }
    }
    if (H[jj][jj] < 0)
      for (auto& x : H[jj]) x = -x;
  }
  for (const auto& r : active)
    for (const auto& x : r)
      if (x != 0) throw InternalError("hnf: residual generator");
  for (size_t i = 1; i < n; ++i)
    for (size_t j = i; j-- > 0;) {
      Integer q = floor_div(H[i][j], H[j][j]);
      if (q != 0)
        for (size_t c = 0; c <= j; ++c) H[i][c] -= q * H[j][c];
    }
  return H;
}

ScaledHnf hnf(const RatMatrix& generators) {
  Integer den = 1;
  for (const auto& r : generators)
    for (const auto& x : r) den = lcm(den, Integer(x.get_den()));
  IntMatrix M;
  for (const auto& r : generators) {
    std::vector<Integer> row;
    for (const auto& x : r) {
      Rational y = x * den;
      row.push_back(y.get_num());
    }
    M.push_back(row);
  }
  ScaledHnf out{hnf(M), den};
  Integer g = den;
  for (const auto& r : out.H)
    for (const auto& x : r) g = gcd(g, x);
  if (g != 1) {
    for (auto& r : out.H)
      for (auto& x : r) x /= g;
    out.den /= g;
  }
  return out;
}

Integer determinant(const IntMatrix& m0) {
  IntMatrix m = m0;
  const size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational determinant(const RatMatrix& m0) {
  RatMatrix m = m0;
  const size_t n = m.size();
  Rational det = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t s = k;
    while (s < n && m[s][k] == 0) ++s;
    if (s == n) return 0;
    if (s != k) {
      std::swap(m[k], m[s]);
      det = -det;
    }
    det *= m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r;
  for (const auto& row : m) {
    std::vector<Rational> rr;
    for (const auto& x : row) rr.emplace_back(x);
    r.push_back(rr);
  }
  return r;
}

std::vector<Rational> solve_row(const RatMatrix& M, const std::vector<Rational>& v) {
  /* x M = v  <=>  M^T x^T = v^T */
  const size_t n = M.size();
  RatMatrix A(n, std::vector<Rational>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) A[i][j] = M[j][i];
    A[i][n] = v[i];
  }
  for (size_t k = 0; k < n; ++k) {
    size_t s = k;
    while (s < n && A[s][k] == 0) ++s;
    if (s == n) throw ArgumentError("solve_row: singular matrix");
    std::swap(A[k], A[s]);
    for (size_t i = 0; i < n; ++i) {
      if (i == k || A[i][k] == 0) continue;
      Rational f = A[i][k] / A[k][k];
      for (size_t j = k; j <= n; ++j) A[i][j] -= f * A[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = A[i][n] / A[i][i];
  return x;
}

}  // namespace sb
