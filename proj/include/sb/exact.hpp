/*
   Exact integer and rational substrate: valuations, linear congruences,
   CRT, factorization of discriminant-sized integers and Hermite normal
   form of integer lattices.  Integers and rationals are GMP values.
*/
#ifndef SB_EXACT_HPP
#define SB_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sb {

using Integer = mpz_class;
using Rational = mpq_class; /* gmpxx arithmetic keeps these canonical */

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoSolutionError : std::domain_error {
  using std::domain_error::domain_error;
};
/* A table transcription slip or a broken invariant. */
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr Valuation(long v) : v_(v) {}
  static constexpr Valuation infinity() {
    Valuation x;
    x.inf_ = true;
    return x;
  }
  constexpr bool is_infinite() const { return inf_; }
  long value() const;
  Valuation operator+(const Valuation& o) const {
    if (inf_ || o.inf_) return infinity();
    return Valuation(v_ + o.v_);
  }
  std::strong_ordering operator<=>(const Valuation& o) const {
    if (inf_ || o.inf_) return int(inf_) <=> int(o.inf_);
    return v_ <=> o.v_;
  }
  bool operator==(const Valuation& o) const { return (*this <=> o) == 0; }
  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  long v_ = 0;
  bool inf_ = false;
};

/* ---- scalar helpers ---- */

Integer ipow(const Integer& base, unsigned long e);
Integer mod(const Integer& a, const Integer& m); /* result in [0, |m|) */
Integer floor_div(const Integer& a, const Integer& b);
Integer inverse_mod(const Integer& a, const Integer& m); /* throws NoSolutionError */
Integer numerator(const Rational& q);
Integer denominator(const Rational& q);
bool is_integer(const Rational& q);
/* Residue class of a p-integral rational modulo m (den coprime to m). */
Integer residue(const Rational& q, const Integer& m);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
Integer parse_integer(const std::string& s); /* throws ArgumentError */

/* ---- primality ---- */

enum class Primality { Composite, Prime, ProbablePrime };
/* Deterministic below 3317044064679887385961981; BPSW verdict above it. */
Primality primality(const Integer& n);
bool is_prime(const Integer& n); /* true only for proven primes */

/* ---- valuations ---- */

Valuation vp(const Integer& n, const Integer& p);  /* p must be prime */
Valuation vp(const Rational& q, const Integer& p); /* may be negative */
/* Unchecked: p assumed prime, n assumed nonzero. */
long ord(const Integer& n, const Integer& p);
Integer strip(const Integer& n, const Integer& p); /* n / p^ord */

/* ---- congruences ---- */

/* x in [0, M) with c*x + d = 0 mod M. */
Integer solve_linear_congruence(const Integer& c, const Integer& d, const Integer& M);
/* Least non-negative x matching every (residue, modulus). */
Integer crt_lift(const std::vector<std::pair<Integer, Integer>>& residues);

/* ---- factorization ---- */

struct FactorBudget {
  unsigned long trial_bound = 1000000;
  unsigned long rho_iterations = 4000000; /* total, across all cofactors */
};

struct PrimeFactorization {
  int sign = 1;
  std::vector<std::pair<Integer, long>> factors; /* ascending, proven primes */
  Integer cofactor = 1;                          /* unresolved part, 1 if complete */
  bool cofactor_probable_prime = false;
  bool complete() const { return cofactor == 1; }
  Integer value() const;
  long exponent(const Integer& p) const;
};

PrimeFactorization factor(const Integer& n, const FactorBudget& budget = {});

/* ---- Hermite normal form ---- */

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/*
   Row-style HNF of the lattice generated by the rows (at least as many
   rows as columns, full column rank).  Result is square lower triangular
   with positive diagonal and H[i][j] in [0, H[j][j]) for j < i.
*/
IntMatrix hnf(const IntMatrix& generators);

struct ScaledHnf {
  IntMatrix H;
  Integer den; /* lattice = H / den, gcd(den, content(H)) = 1 */
  bool operator==(const ScaledHnf&) const = default;
};
ScaledHnf hnf(const RatMatrix& generators);

Integer determinant(const IntMatrix& m); /* Bareiss */
Rational determinant(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
/* Solve x * M = v for square invertible M over Q (row vector x). */
std::vector<Rational> solve_row(const RatMatrix& M, const std::vector<Rational>& v);

}  // namespace sb

#endif
