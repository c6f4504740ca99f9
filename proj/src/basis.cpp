/*
   Combining local bases and putting lattices in Hermite form.
*/
#include "sb/basis.hpp"

namespace sb {

Integer IntegralBasis::index() const {
  Integer r = 1;
  for (const auto& x : t) r *= x;
  return r;
}

IntPoly IntegralBasis::numerator(size_t i) const {
  std::vector<Integer> v = c[i];
  v.push_back(1);
  return IntPoly(v);
}

RatMatrix IntegralBasis::matrix() const {
  RatMatrix M(6, std::vector<Rational>(6, Rational(0)));
  for (size_t i = 0; i < 6; ++i) {
    for (size_t j = 0; j < i; ++j) M[i][j] = Rational(c[i][j]) / Rational(t[i]);
    M[i][i] = Rational(1) / Rational(t[i]);
  }
  return M;
}

IntegralBasis power_basis() {
  IntegralBasis B;
  for (size_t i = 0; i < 6; ++i) {
    B.c[i].assign(i, Integer(0));
    B.t[i] = 1;
  }
  return B;
}

IntegralBasis combine(const std::vector<PAdicBasis>& local) {
  for (size_t i = 0; i < local.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (local[i].cls.p == local[j].cls.p) throw ArgumentError("combine: repeated prime");
  IntegralBasis B;
  for (size_t i = 0; i < 6; ++i) {
    B.t[i] = 1;
    std::vector<Integer> mods;
    for (const auto& L : local) {
      Integer m = ipow(L.cls.p, L.rows[i].k);
      B.t[i] *= m;
      mods.push_back(m);
    }
    for (size_t j = 0; j < i; ++j) {
      std::vector<std::pair<Integer, Integer>> res;
      for (size_t q = 0; q < local.size(); ++q) res.push_back({mod(local[q].rows[i].c[j], mods[q]), mods[q]});
      B.c[i].push_back(res.empty() ? Integer(0) : crt_lift(res));
    }
  }
  return B;
}

IntegralBasis combine(const std::vector<PAdicBasis>& local, const Integer& D) {
  IntegralBasis B = combine(local);
  field_discriminant(D, B.index());
  return B;
}

Integer field_discriminant(const Integer& D, const Integer& index) {
  Integer sq = index * index;
  if (sq == 0 || D % sq != 0) throw InternalError("index^2 does not divide D");
  return D / sq;
}

IntegralBasis from_scaled_hnf(const ScaledHnf& H) {
  IntegralBasis B;
  for (size_t i = 0; i < 6; ++i) {
    Rational d = Rational(H.H[i][i]) / Rational(H.den);
    if (numerator(d) != 1) throw InternalError("lattice does not contain Z[theta] in triangular form");
    B.t[i] = denominator(d);
    for (size_t j = 0; j < i; ++j) {
      Rational x = Rational(H.H[i][j]) / Rational(H.den) * Rational(B.t[i]);
      if (!is_integer(x)) throw InternalError("non-integral Hermite entry");
      B.c[i].push_back(numerator(x));
    }
  }
  return B;
}

IntegralBasis canonicalize(const IntegralBasis& B) { return from_scaled_hnf(hnf(B.matrix())); }

std::array<long, 6> local_exponents(const IntegralBasis& B, const Integer& p) {
  /* q L + Z^6 with q the p-free part of the index localizes to L at p and to Z^6 elsewhere */
  Integer q = strip(B.index(), p);
  RatMatrix gens = B.matrix();
  for (auto& row : gens)
    for (auto& x : row) x *= q;
  for (size_t i = 0; i < 6; ++i) {
    std::vector<Rational> e(6, Rational(0));
    e[i] = 1;
    gens.push_back(e);
  }
  IntegralBasis L = from_scaled_hnf(hnf(gens));
  std::array<long, 6> k{};
  for (size_t i = 0; i < 6; ++i) {
    if (strip(L.t[i], p) != 1) throw InternalError("local lattice has a foreign denominator");
    k[i] = L.t[i] == 1 ? 0 : ord(L.t[i], p);
  }
  return k;
}

}  // namespace sb
