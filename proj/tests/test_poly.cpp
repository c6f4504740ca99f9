/*
   Polynomial layer: phi-adic digits, Gauss valuation, reduction and
   factorization mod p, residue fields, resultants, characteristic
   polynomials.
*/
#include "sb/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace sb;

namespace {

IntPoly tri(long a, long b) { return IntPoly{b, a, 0, 0, 0, 0, 1}; }

bool same_factors(ModFactorization x, ModFactorization y) {
  auto lt = [](const auto& u, const auto& v) { return u.first < v.first; };
  std::sort(x.begin(), x.end(), lt);
  std::sort(y.begin(), y.end(), lt);
  return x == y;
}

IntPoly random_poly(std::mt19937_64& g, long deg, bool monic) {
  std::vector<Integer> c(deg + 1);
  for (auto& x : c) x = static_cast<long>(g() % 41) - 20;
  if (monic) c.back() = 1;
  if (c.back() == 0) c.back() = 3;
  return IntPoly(c);
}

}  // namespace

TEST_CASE("phi_expansion in x + 1") {
  long a = 10, b = -7;
  PhiExpansion E = phi_expansion(tri(a, b), IntPoly{1, 1});
  std::vector<RatPoly> want = {RatPoly{Rational(-a + b + 1)}, RatPoly{Rational(a - 6)}, RatPoly{15}, RatPoly{-20},
                               RatPoly{15},                   RatPoly{-6},             RatPoly{1}};
  CHECK(E.digits == want);
  CHECK(E.reproduce() == to_rat(tri(a, b)));
}

TEST_CASE("phi_expansion in x^2 + x + 1") {
  long a = 6, b = 5;
  PhiExpansion E = phi_expansion(tri(a, b), IntPoly{1, 1, 1});
  REQUIRE(E.digits.size() == 4);
  CHECK(E.digits[0] == RatPoly{Rational(b + 1), Rational(a)});
  CHECK(E.digits[1] == RatPoly{-2, 2});
  CHECK(E.digits[2] == RatPoly{0, -3});
  CHECK(E.digits[3] == RatPoly{1});
}

TEST_CASE("phi_expansion of phi itself and bad input") {
  IntPoly phi{1, 0, 1};
  PhiExpansion E = phi_expansion(phi, phi);
  CHECK(E.digits == std::vector<RatPoly>{RatPoly{}, RatPoly{1}});
  CHECK_THROWS_AS(phi_expansion(tri(1, 1), IntPoly{1, 2}), ArgumentError);
}

TEST_CASE("phi_expansion reproduces random inputs") {
  std::mt19937_64 g(5);
  for (int it = 0; it < 200; ++it) {
    IntPoly F = random_poly(g, 1 + g() % 8, false);
    IntPoly phi = random_poly(g, 1 + g() % 3, true);
    PhiExpansion E = phi_expansion(F, phi);
    CHECK(E.reproduce() == to_rat(F));
    for (const auto& d : E.digits) CHECK(d.degree() < phi.degree());
    CHECK(!E.digits.back().is_zero());
  }
}

TEST_CASE("gauss_valuation") {
  CHECK(gauss_valuation(IntPoly{4, 2}, Integer(2)) == Valuation(1));
  CHECK(gauss_valuation(IntPoly{}, Integer(2)).is_infinite());
  CHECK(gauss_valuation(IntPoly{81, 9}, Integer(3)) == Valuation(2));
  CHECK(gauss_valuation(RatPoly{Rational(1, 4), 2}, Integer(2)) == Valuation(-2));
  std::mt19937_64 g(9);
  for (int it = 0; it < 200; ++it) {
    IntPoly u = random_poly(g, g() % 5, false), w = random_poly(g, g() % 5, false);
    for (long p : {2, 3, 5}) {
      Integer P(p);
      CHECK(gauss_valuation(u * w, P) == gauss_valuation(u, P) + gauss_valuation(w, P));
    }
  }
}

TEST_CASE("reduce_mod_p shapes from the sextic cases") {
  CHECK(reduce_mod_p(tri(6, 10), Integer(2)) == ModPoly(2, {0, 0, 0, 0, 0, 0, 1}));
  ModPoly q = ModPoly(2, {1, 1, 1}), l = ModPoly(2, {1, 1});
  CHECK(reduce_mod_p(tri(2, 5), Integer(2)) == q * q * l * l);
  long a = 7;
  ModPoly xa = ModPoly(5, {a, 1});
  ModPoly want = ModPoly::x(Integer(5)) * xa * xa * xa * xa * xa;
  CHECK(reduce_mod_p(tri(a, 10), Integer(5)) == want);
  CHECK(reduce_mod_p(RatPoly{Rational(1, 3), 1}, Integer(2)) == ModPoly(2, {1, 1}));
}

TEST_CASE("factor_mod_p") {
  Integer two(2), three(3);
  CHECK(same_factors(factor_mod_p(ModPoly(2, {0, 0, 0, 0, 0, 0, 1})), {{ModPoly::x(two), 6}}));
  CHECK(same_factors(factor_mod_p(reduce_mod_p(tri(9, 2), three)), {{ModPoly(3, {-1, 1}), 3}, {ModPoly(3, {1, 1}), 3}}));
  CHECK(same_factors(factor_mod_p(reduce_mod_p(tri(3, 1), three)), {{ModPoly(3, {1, 0, 1}), 3}}));
}

TEST_CASE("factor_mod_p products and irreducibility") {
  std::mt19937_64 g(13);
  for (long p : {2, 3, 5, 7, 11, 13, 101, 1009}) {
    for (int it = 0; it < 40; ++it) {
      IntPoly F = random_poly(g, 1 + g() % 6, true);
      ModPoly Fp = reduce_mod_p(F, Integer(p));
      ModPoly prod = ModPoly::constant(Integer(p), 1);
      for (const auto& [h, e] : factor_mod_p(Fp)) {
        CHECK(is_irreducible(h));
        CHECK(h.is_monic());
        for (int k = 0; k < e; ++k) prod = prod * h;
      }
      CHECK(prod == Fp);
    }
  }
}

TEST_CASE("residue field and squarefreeness") {
  ResidueField F4(ModPoly(2, {1, 1, 1}));
  ModPoly al = ModPoly::x(Integer(2));
  CHECK(F4.mul(al, al) == ModPoly(2, {1, 1}));
  CHECK(F4.mul(al, F4.inv(al)) == F4.one());
  FqPoly sq(F4, {F4.one(), F4.zero(), F4.one()}); /* Y^2 + 1 = (Y + 1)^2 */
  CHECK(!is_squarefree(sq));
  FqPoly cyc(F4, {F4.one(), F4.one(), F4.one()}); /* splits into distinct roots over F_4 */
  CHECK(is_squarefree(cyc));
  CHECK(to_string(cyc) == "Y^2 + Y + 1");
  ResidueField F3(ModPoly::x(Integer(3)));
  FqPoly cube(F3, {ModPoly(3, {-1}), F3.zero(), F3.zero(), F3.one()}); /* Y^3 - 1 = (Y - 1)^3 */
  CHECK(!is_squarefree(cube));
}

TEST_CASE("resultant") {
  IntPoly G{5, -3, 0, 2};
  for (long c : {-3, 0, 4}) CHECK(resultant(IntPoly{-c, 1}, G) == G.eval(Integer(c)));
  IntPoly f = tri(0, 12);
  CHECK(-resultant(f, f.derivative()) == -ipow(2, 16) * ipow(3, 11));
  CHECK(discriminant(f) == -ipow(2, 16) * ipow(3, 11));
  CHECK(resultant(G, G) == 0);
  CHECK_THROWS(resultant(IntPoly{}, G));
}

TEST_CASE("resultant swap sign rule") {
  std::mt19937_64 g(17);
  for (int it = 0; it < 100; ++it) {
    IntPoly F = random_poly(g, 1 + g() % 5, false), G = random_poly(g, 1 + g() % 5, false);
    long s = (F.degree() * G.degree()) % 2 ? -1 : 1;
    CHECK(resultant(F, G) == s * resultant(G, F));
  }
}

TEST_CASE("char_poly_of_element") {
  IntPoly f = tri(3, 7);
  CHECK(char_poly_of_element(IntPoly::x(), 1, f) == to_rat(f));
  RatPoly c = char_poly_of_element(IntPoly{0, 0, 0, 1}, 2, tri(4, 4));
  CHECK(to_int(c).has_value());
  RatPoly d = char_poly_of_element(IntPoly{0, 0, 0, 0, 0, 1}, 4, tri(0, 12));
  CHECK(!to_int(d).has_value());
  CHECK(d.is_monic());
  CHECK(d.degree() == 6);
}

TEST_CASE("ModPoly gcd and powmod") {
  ModPoly a = ModPoly(7, {1, 1}) * ModPoly(7, {2, 1}), b = ModPoly(7, {1, 1}) * ModPoly(7, {3, 1});
  CHECK(gcd(a, b) == ModPoly(7, {1, 1}));
  ModPoly m(7, {1, 0, 1});
  ModPoly x = ModPoly::x(Integer(7));
  /* x^(7^2) = x in F_49 */
  CHECK(powmod(x, Integer(49), m) == x);
  CHECK(lift_symmetric(ModPoly(7, {6, 4, 1})) == IntPoly{-1, -3, 1});
}
