/*
   Two kinds of draws: valuation-shaped ones (a = p^i u, b = p^j w) and
   perturbations of the singular pair (-6 beta^5, 5 beta^6), which push
   v_p(D) up for the cases that need a deep discriminant.
*/
#include "sweep.hpp"

#include <random>

namespace sweep {

namespace {

using sb::Integer;

const long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

struct Rng {
  std::mt19937_64 g;
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  Integer unit(const Integer& p, long range) {
    for (;;) {
      Integer u = uniform(1, range);
      if (u % p != 0) return uniform(0, 1) ? u : Integer(-u);
    }
  }
};

long max_exp(const Integer& p, const Integer& bound) {
  long k = 0;
  Integer x = p;
  while (x <= bound) {
    x *= p;
    ++k;
  }
  return k;
}

/* some q with q^5 | a and q^6 | b; b != 0 so q^6 <= |b| */
bool scalable(const Integer& a, const Integer& b) {
  for (long q = 2; sb::ipow(Integer(q), 6) <= abs(b); ++q) {
    Integer q5 = sb::ipow(Integer(q), 5);
    if (a % q5 == 0 && b % (q5 * q) == 0) return true;
  }
  return false;
}

}  // namespace

Sweep generate(int per_case, unsigned long seed, const Integer& bound) {
  Sweep S;
  Rng R{std::mt19937_64(seed)};
  std::vector<std::string> labels = sb::case_labels();
  for (const auto& l : labels) S.hits[l] = 0;
  size_t done = 0;
  while (done < labels.size() && S.attempts < 4000000) {
    ++S.attempts;
    Integer p = kPrimes[R.uniform(0, 3) == 0 ? R.uniform(3, 13) : R.uniform(0, 2)];
    Integer a, b;
    long top = max_exp(p, bound);
    if (R.uniform(0, 2) != 0) {
      long va = R.uniform(0, std::min(8L, top));
      long vb = R.uniform(0, std::min(8L, top));
      Integer pa = sb::ipow(p, va), pb = sb::ipow(p, vb);
      long ra = std::max(1L, std::min(100000L, Integer(bound / pa).get_si()));
      long rb = std::max(1L, std::min(100000L, Integer(bound / pb).get_si()));
      a = R.uniform(0, 9) == 0 ? Integer(0) : pa * R.unit(p, ra);
      b = pb * R.unit(p, rb);
    } else {
      Integer beta = R.unit(p, 60);
      long k = R.uniform(1, std::max(1L, top - 2));
      long j = R.uniform(1, std::max(1L, top - 2));
      a = -6 * sb::ipow(beta, 5) + sb::ipow(p, k) * R.uniform(-3, 3);
      b = 5 * sb::ipow(beta, 6) + sb::ipow(p, j) * R.uniform(-3, 3);
    }
    if (b == 0 || abs(a) > bound || abs(b) > bound) continue;
    if (a % sb::ipow(p, 5) == 0 && b % sb::ipow(p, 6) == 0) continue;
    if (3125 * sb::ipow(a, 6) == 46656 * sb::ipow(b, 5)) continue;
    if (scalable(a, b)) continue;
    std::string label;
    try {
      label = sb::classify(a, b, p).label;
    } catch (const sb::InternalError&) {
      /* recorded by the checker, which re-runs classify */
      S.instances.push_back({a, b, p, "?"});
      continue;
    }
    if (S.hits[label] >= per_case) continue;
    if (sb::irreducibility_check(a, b).verdict != sb::Irreducibility::Proven) continue;
    S.instances.push_back({a, b, p, label});
    if (++S.hits[label] == per_case) ++done;
  }
  return S;
}

}  // namespace sweep
