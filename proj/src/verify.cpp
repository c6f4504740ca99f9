/*
   Verification oracles.  Nothing here looks at the case tables: the
   maximality test works only from the multiplication table of the order.
*/
#include "sb/verify.hpp"

namespace sb {

bool is_integral(const IntPoly& g, const Integer& t, const IntPoly& f) {
  RatPoly chi = char_poly_of_element(g, t, f);
  for (const auto& c : chi.coeffs())
    if (!is_integer(c)) return false;
  return true;
}

Integer lattice_index(const IntegralBasis& B) {
  Rational d = determinant(B.matrix());
  if (d == 0) throw ArgumentError("basis is singular");
  Rational idx = Rational(1) / abs(d);
  if (!is_integer(idx)) throw ArgumentError("lattice does not contain Z[theta] with integral index");
  return numerator(idx);
}

bool dedekind_maximal_at_p(const IntPoly& f, const Integer& p) {
  if (!f.is_monic()) throw ArgumentError("dedekind test needs a monic polynomial");
  IntPoly g = IntPoly::constant(1), h = IntPoly::constant(1);
  for (const auto& [phi, e] : factor_mod_p(reduce_mod_p(f, p))) {
    IntPoly lift = lift_symmetric(phi);
    g *= lift;
    h *= lift.pow(static_cast<unsigned>(e - 1));
  }
  IntPoly r = f - g * h;
  std::vector<Integer> c;
  for (const auto& x : r.coeffs()) {
    if (x % p != 0) throw InternalError("f - g h not divisible by p");
    c.push_back(x / p);
  }
  ModPoly F = reduce_mod_p(IntPoly(c), p);
  ModPoly common = gcd(reduce_mod_p(g, p), reduce_mod_p(h, p));
  return gcd(F, common).degree() == 0;
}

/* ---- orders ---- */

OrderPresentation make_order(const IntPoly& f, const IntegralBasis& basis) {
  if (f.degree() != 6 || !f.is_monic()) throw ArgumentError("make_order expects a monic sextic");
  OrderPresentation O{f, basis, basis.matrix(), {}};
  O.table.assign(6, std::vector<std::vector<Integer>>(6));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i; j < 6; ++j) {
      IntPoly prod = divmod_monic(basis.numerator(i) * basis.numerator(j), f).second;
      Rational den(basis.t[i] * basis.t[j]);
      std::vector<Rational> v(6);
      for (size_t k = 0; k < 6; ++k) v[k] = Rational(prod[k]) / den;
      std::vector<Rational> x = solve_row(O.B, v);
      std::vector<Integer> xi;
      for (const auto& q : x) {
        if (!is_integer(q)) throw ArgumentError("basis does not span a ring");
        xi.push_back(numerator(q));
      }
      O.table[i][j] = xi;
      O.table[j][i] = xi;
    }
  return O;
}

namespace {

using Vec = std::vector<Integer>;

Vec mul_mod(const OrderPresentation& O, const Vec& x, const Vec& y, const Integer& p) {
  Vec r(6, Integer(0));
  for (size_t i = 0; i < 6; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < 6; ++j) {
      if (y[j] == 0) continue;
      Integer s = x[i] * y[j];
      for (size_t k = 0; k < 6; ++k) r[k] += s * O.table[i][j][k];
    }
  }
  for (auto& v : r) v = mod(v, p);
  return r;
}

Vec mul_exact(const OrderPresentation& O, const Vec& x, const Vec& y) {
  Vec r(6, Integer(0));
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) {
      Integer s = x[i] * y[j];
      if (s == 0) continue;
      for (size_t k = 0; k < 6; ++k) r[k] += s * O.table[i][j][k];
    }
  return r;
}

/* basis of { x : x A = 0 } over F_p, A given as r rows of length c */
std::vector<Vec> left_kernel(const std::vector<Vec>& A, const Integer& p) {
  size_t r = A.size(), c = r ? A[0].size() : 0;
  /* columns of A become rows; solve At x = 0 */
  std::vector<Vec> M(c, Vec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) M[j][i] = mod(A[i][j], p);
  std::vector<long> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < r && row < c; ++col) {
    size_t piv = row;
    while (piv < c && M[piv][col] == 0) ++piv;
    if (piv == c) continue;
    std::swap(M[piv], M[row]);
    Integer inv = inverse_mod(M[row][col], p);
    for (auto& v : M[row]) v = mod(v * inv, p);
    for (size_t i = 0; i < c; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Integer factor = M[i][col];
      for (size_t k = 0; k < r; ++k) M[i][k] = mod(M[i][k] - factor * M[row][k], p);
    }
    pivot_col.push_back(static_cast<long>(col));
    ++row;
  }
  std::vector<Vec> basis;
  std::vector<bool> is_pivot(r, false);
  for (long pc : pivot_col) is_pivot[pc] = true;
  for (size_t free = 0; free < r; ++free) {
    if (is_pivot[free]) continue;
    Vec x(r, Integer(0));
    x[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = mod(-M[i][free], p);
    basis.push_back(x);
  }
  return basis;
}

}  // namespace

MaximalityResult maximality_test(const OrderPresentation& O, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("p must be prime");
  Integer q = p;
  while (q < 6) q *= p;

  /* p-radical: kernel of x -> x^q on O/pO */
  std::vector<Vec> frob;
  for (size_t i = 0; i < 6; ++i) {
    Vec base(6, Integer(0)), acc(6, Integer(0));
    base[i] = 1;
    acc[0] = 1; /* the first basis row is 1 */
    Integer e = q;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = mul_mod(O, acc, base, p);
      base = mul_mod(O, base, base, p);
      e >>= 1;
    }
    frob.push_back(acc);
  }
  std::vector<Vec> rad = left_kernel(frob, p);

  IntMatrix gens;
  for (size_t i = 0; i < 6; ++i) {
    Vec r(6, Integer(0));
    r[i] = p;
    gens.push_back(r);
  }
  for (const auto& v : rad) gens.push_back(v);
  IntMatrix HI = hnf(gens);
  RatMatrix HIq = to_rational(HI);

  /* O/pO -> End(I/pI) */
  std::vector<Vec> big;
  for (size_t i = 0; i < 6; ++i) {
    Vec w(6, Integer(0));
    w[i] = 1;
    Vec row;
    for (size_t j = 0; j < 6; ++j) {
      Vec prod = mul_exact(O, w, HI[j]);
      std::vector<Rational> pv(prod.begin(), prod.end());
      for (const auto& y : solve_row(HIq, pv)) {
        if (!is_integer(y)) throw InternalError("p-radical is not an ideal");
        row.push_back(mod(numerator(y), p));
      }
    }
    big.push_back(row);
  }
  std::vector<Vec> U = left_kernel(big, p);

  /* (I : I) = U / p with U = pO + lifts of the kernel */
  RatMatrix ring;
  auto to_power = [&](const Vec& x) {
    std::vector<Rational> r(6, Rational(0));
    for (size_t i = 0; i < 6; ++i)
      for (size_t k = 0; k < 6; ++k) r[k] += Rational(x[i]) * O.B[i][k];
    for (auto& v : r) v /= Rational(p);
    return r;
  };
  for (size_t i = 0; i < 6; ++i) {
    Vec r(6, Integer(0));
    r[i] = p;
    ring.push_back(to_power(r));
  }
  for (const auto& u : U) ring.push_back(to_power(u));

  return {U.empty(), static_cast<long>(rad.size()), hnf(ring)};
}

}  // namespace sb
