/*
   Sextic trinomials x^6 + a x + b: normalization, discriminant, the
   local case labels at each prime (E*, F*, G*, H* for p = 2, 3, 5 and
   p > 5), the p-integral bases those cases prescribe, and a proof-or-
   witness irreducibility check.
*/
#ifndef SB_SEXTIC_HPP
#define SB_SEXTIC_HPP

#include "sb/exact.hpp"
#include "sb/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sb {

struct ReducibleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct TrinomialField {
  Integer a, b;   /* normalized */
  Integer a0, b0; /* as given */
  Integer scale;  /* theta0 = scale * theta; product of the primes removed */
  std::vector<std::pair<Integer, long>> removed; /* (p, times) */
  IntPoly f;
  Integer D; /* 5^5 a^6 - 6^6 b^5 */
  bool search_complete = true; /* false if gcd(a, b) did not factor within budget */
};

/* Strip every p with p^5 | a and p^6 | b.  b = 0 throws ReducibleError. */
TrinomialField normalize(const Integer& a, const Integer& b, const FactorBudget& budget = {});
Integer trinomial_discriminant(const Integer& a, const Integer& b); /* throws ArgumentError on 0 */
IntPoly trinomial(const Integer& a, const Integer& b);

/* Named derived quantities of a case, in display order. */
struct CaseParams {
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<Rational> translations; /* lifts x - beta used by the Ore check */
  void set(const std::string& k, const std::string& v);
  std::optional<std::string> get(const std::string& k) const;
};

/* The local v_p(D) a case asserts. */
struct VpDClaim {
  enum Kind { Exact, OddAtLeast, EvenAtLeast, Odd, Even } kind;
  long value;
  bool holds(long v) const;
  std::string str() const;
};

struct Classification {
  Integer p;
  std::string label;
  long vpD;
  VpDClaim claim;
  long vp_dK;
  CaseParams params;
  bool p_divides_D;
};

Classification classify(const Integer& a, const Integer& b, const Integer& p);

/* Row i = (c[0] + c[1] theta + ... + c[i-1] theta^(i-1) + theta^i) / p^k. */
struct BasisRow {
  std::vector<Integer> c;
  long k = 0;
};

struct PAdicBasis {
  Classification cls;
  std::array<BasisRow, 6> rows;
  long sum_k() const;
  /* exponent bookkeeping, monotone k, canonical coefficient ranges */
  void validate() const;
};

PAdicBasis p_integral_basis(const Integer& a, const Integer& b, const Integer& p);

/* Reduce rows so that 0 <= c_ij < p^(k_i - k_j).  Rows are numerators of degree i, monic. */
std::array<BasisRow, 6> reduce_rows(const std::array<IntPoly, 6>& numerators, const std::array<long, 6>& k,
                                    const Integer& p);

/* Every case label the tables define, per prime class ("E", "F", "G", "H"). */
std::vector<std::string> case_labels();
/* Labels whose local index is certified by Ore's theorem with the case translations. */
bool ore_certified(const std::string& label);

/* d_K for a = 0 from the closed form; b sixth-power-free, x^6 + b irreducible. */
Integer pure_sextic_discriminant(const Integer& b, const FactorBudget& budget = {});

enum class Irreducibility { Proven, ProvenReducible, Unknown };
std::string to_string(Irreducibility v);

struct IrreducibilityResult {
  Irreducibility verdict;
  std::string method;
  std::optional<IntPoly> witness; /* monic proper factor */
};

IrreducibilityResult irreducibility_check(const Integer& a, const Integer& b, const FactorBudget& budget = {});

}  // namespace sb

#endif
