/*
   Trinomial layer: normalization, D, local case labels and their
   parameters, p-integral bases, the pure sextic closed form and the
   irreducibility check.
*/
#include "sb/sextic.hpp"
#include "sb/verify.hpp"

#include <doctest.h>

#include <set>

using namespace sb;

namespace {

Integer param(const Classification& C, const std::string& k) {
  auto v = C.params.get(k);
  REQUIRE(v.has_value());
  return parse_integer(*v);
}

IntPoly row_poly(const BasisRow& r) {
  std::vector<Integer> c = r.c;
  c.push_back(1);
  return IntPoly(c);
}

}  // namespace

TEST_CASE("normalize") {
  TrinomialField T = normalize(0, 12);
  CHECK(T.a == 0);
  CHECK(T.b == 12);
  CHECK(T.removed.empty());
  CHECK(T.D == -ipow(2, 16) * ipow(3, 11));

  TrinomialField U = normalize(32 * 7, 64 * 5);
  CHECK(U.a == 7);
  CHECK(U.b == 5);
  CHECK(U.scale == 2);
  REQUIRE(U.removed.size() == 1);
  CHECK(U.removed[0] == std::pair<Integer, long>{2, 1});

  TrinomialField V = normalize(ipow(3, 10), ipow(3, 12));
  CHECK(V.a == 1);
  CHECK(V.b == 1);
  CHECK(V.scale == 9);
  CHECK(V.removed[0] == std::pair<Integer, long>{3, 2});

  CHECK_THROWS_AS(normalize(5, 0), ReducibleError);
}

TEST_CASE("trinomial discriminant") {
  CHECK(trinomial_discriminant(0, 12) == -ipow(2, 16) * ipow(3, 11));
  CHECK(trinomial_discriminant(4, 4) == -ipow(2, 12) * 8539);
  CHECK(trinomial_discriminant(0, 135) == -ipow(2, 6) * ipow(3, 21) * ipow(5, 5));
  CHECK_THROWS_AS(trinomial_discriminant(-6, 5), ArgumentError);
  for (long a = -20; a <= 20; ++a)
    for (long b = 1; b <= 20; ++b) {
      IntPoly f = trinomial(a, b);
      if (3125 * ipow(Integer(a), 6) == 46656 * ipow(Integer(b), 5)) continue;
      CHECK(trinomial_discriminant(a, b) == -resultant(f, f.derivative()));
    }
}

TEST_CASE("classify the worked examples") {
  Classification e20 = classify(0, 12, 2);
  CHECK(e20.label == "E20");
  CHECK(e20.vpD == 16);
  CHECK(e20.vp_dK == 4);
  Classification f26 = classify(0, 135, 3);
  CHECK(f26.label == "F26");
  CHECK(param(f26, "B") == 5);
  CHECK(classify(0, 135, 5).label == "G8");
  CHECK(classify(0, 135, 2).label == "E17");
  CHECK(classify(4, 4, 2).label == "E18");
  Classification h = classify(4, 4, 8539);
  CHECK(h.label == "H12");
  CHECK(param(h, "m") == 0);
}

TEST_CASE("primes not dividing D take the trivial label") {
  CHECK(classify(1, 1, 2).label == "E1");
  CHECK(classify(1, 1, 3).label == "F1");
  CHECK(classify(1, 1, 5).label == "G1");
  Classification h = classify(1, 1, 7);
  CHECK(h.label == "H1");
  CHECK(!h.p_divides_D);
  CHECK(p_integral_basis(1, 1, 7).sum_k() == 0);
}

TEST_CASE("E13 to E15 shift parameters") {
  /* a = 2 mod 4, b = 1 mod 4; beta = -6b/(5a), f(beta) = -bD/(5^6 a^6) */
  for (auto [a, b] : std::vector<std::pair<long, long>>{{-64078, 536874557}, {-6, 5 + 64}, {-186, 1}}) {
    Integer A(a), B(b);
    Integer D = trinomial_discriminant(A, B);
    if (A % 4 != 2 && A % 4 != -2) continue;
    if (mod(B, Integer(4)) != 1) continue;
    Classification C = classify(A, B, 2);
    CHECK((C.label == "E13" || C.label == "E14" || C.label == "E15"));
    Rational beta = Rational(-6 * B) / Rational(5 * A);
    RatPoly f = to_rat(trinomial(A, B));
    long s0 = vp(f.eval(beta), Integer(2)).value();
    long s1 = vp(f.derivative().eval(beta), Integer(2)).value();
    CHECK(s0 == C.vpD - 6);
    CHECK(s1 == s0 + 1);
    REQUIRE(!C.params.translations.empty());
    if (C.label != "E13") {
      long u = param(C, "u").get_si();
      CHECK(2 * u == s0);
      Rational delta = C.params.translations[0];
      CHECK(delta == Rational(ipow(Integer(2), u) - 3 * B) / Rational(5 * (A / 2)));
      CHECK(vp(f.derivative().eval(delta), Integer(2)) == Valuation(u + 1));
      Valuation w = vp(f.eval(delta), Integer(2));
      if (C.label == "E14") CHECK(w >= Valuation(2 * u + 2));
      else CHECK(w == Valuation(2 * u + 1));
    }
  }
}

TEST_CASE("H11 congruence parameters") {
  Integer p(7), a(1), b(47);
  Classification C = classify(a, b, p);
  REQUIRE(C.label == "H11");
  long m = param(C, "m").get_si();
  CHECK(m == C.vpD / 2);
  Integer M = ipow(p, m), A5 = 5 * a, B6 = 6 * b;
  CHECK(mod(6 * param(C, "x") - A5, M) == 0);
  CHECK(mod(ipow(A5, 4) * param(C, "y") - ipow(B6, 4), M) == 0);
  CHECK(mod(ipow(A5, 3) * param(C, "z") + ipow(B6, 3), M) == 0);
  CHECK(mod(ipow(A5, 2) * param(C, "v") - ipow(B6, 2), M) == 0);
  CHECK(mod(A5 * param(C, "w") + B6, M) == 0);
  PAdicBasis L = p_integral_basis(a, b, p);
  CHECK(L.sum_k() == m);
  CHECK(is_integral(row_poly(L.rows[5]), ipow(p, L.rows[5].k), trinomial(a, b)));
}

TEST_CASE("F19 and F21 sign conventions are not shared") {
  /* F19: eps = -1 when a = 3 mod 9; F21 the other way round */
  for (long a = -300; a <= 300; ++a)
    for (long b = -300; b <= 300; b += 7) {
      if (b == 0 || 3125 * ipow(Integer(a), 6) == 46656 * ipow(Integer(b), 5)) continue;
      if (!normalize(a, b).removed.empty()) continue;
      Classification C = classify(a, b, 3);
      if (C.label != "F19" && C.label != "F21") continue;
      long a9 = mod(Integer(a), Integer(9)).get_si();
      long eps = param(C, "eps").get_si();
      if (C.label == "F19") CHECK(eps == (a9 == 3 ? -1 : 1));
      else CHECK(eps == (a9 == 6 ? -1 : 1));
    }
}

TEST_CASE("p-integral basis of the first worked example") {
  PAdicBasis L = p_integral_basis(0, 12, 2);
  CHECK(L.cls.label == "E20");
  std::array<long, 6> k{0, 0, 0, 2, 2, 2};
  std::vector<std::vector<Integer>> c{{}, {0}, {0, 0}, {2, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0, 0}};
  for (int i = 0; i < 6; ++i) {
    CHECK(L.rows[i].k == k[i]);
    CHECK(L.rows[i].c == c[i]);
  }
  CHECK(2 * L.sum_k() + L.cls.vp_dK == L.cls.vpD);
  CHECK_NOTHROW(L.validate());
}

TEST_CASE("third prime of the second worked example") {
  PAdicBasis L = p_integral_basis(0, 135, 3);
  std::array<long, 6> k{0, 0, 1, 1, 2, 3};
  for (int i = 0; i < 6; ++i) CHECK(L.rows[i].k == k[i]);
  CHECK(L.cls.vp_dK == 7);
  IntPoly f = trinomial(0, 135);
  for (const auto& r : L.rows) CHECK(is_integral(row_poly(r), ipow(Integer(3), r.k), f));
  /* (9t + 3t^3 + t^5)/27 lies in the lattice */
  CHECK(L.rows[5].c[1] % 9 == 0);
}

TEST_CASE("reduce_rows") {
  std::array<IntPoly, 6> n{IntPoly{1}, IntPoly{0, 1}, IntPoly{0, 0, 1}, IntPoly{7, 0, 0, 1}, IntPoly{0, 7, 0, 0, 1},
                           IntPoly{0, 0, 7, 0, 0, 1}};
  auto rows = reduce_rows(n, {0, 0, 0, 2, 2, 2}, Integer(2));
  CHECK(rows[3].c == std::vector<Integer>{3, 0, 0});
  CHECK(rows[5].c == std::vector<Integer>{0, 0, 3, 0, 0});
}

TEST_CASE("case labels") {
  auto L = case_labels();
  CHECK(L.size() == 87);
  CHECK(std::set<std::string>(L.begin(), L.end()).size() == 87);
  CHECK(ore_certified("E2"));
  CHECK(ore_certified("F24"));
  CHECK(ore_certified("H12"));
  CHECK(!ore_certified("E18"));
  CHECK(!ore_certified("F26"));
}

TEST_CASE("pure sextic closed form") {
  CHECK(pure_sextic_discriminant(135) == -ipow(3, 7) * ipow(5, 5));
  CHECK(pure_sextic_discriminant(12) == -ipow(2, 4) * ipow(3, 11));
  CHECK_THROWS_AS(pure_sextic_discriminant(1), ReducibleError);
  CHECK_THROWS_AS(pure_sextic_discriminant(128), ArgumentError);
}

TEST_CASE("irreducibility check") {
  auto r = irreducibility_check(4, 4);
  CHECK(r.verdict == Irreducibility::Proven);
  CHECK(r.method.find("footnote") != std::string::npos);
  CHECK(irreducibility_check(0, 12).verdict == Irreducibility::Proven);
  auto s = irreducibility_check(2, 1);
  CHECK(s.verdict == Irreducibility::ProvenReducible);
  REQUIRE(s.witness.has_value());
  CHECK(*s.witness == IntPoly{1, 1});
  auto t = irreducibility_check(0, 1);
  CHECK(t.verdict == Irreducibility::ProvenReducible);
  REQUIRE(t.witness.has_value());
  CHECK(divmod_monic(trinomial(0, 1), *t.witness).second.is_zero());
  auto u = irreducibility_check(0, -8); /* x^6 - 8 = (x^2 - 2)(x^4 + 2x^2 + 4) */
  CHECK(u.verdict == Irreducibility::ProvenReducible);
}

TEST_CASE("irreducibility witnesses divide f") {
  for (long a = -15; a <= 15; ++a)
    for (long b = -15; b <= 15; ++b) {
      if (b == 0) continue;
      auto r = irreducibility_check(a, b);
      CHECK(r.verdict != Irreducibility::Unknown);
      if (r.verdict == Irreducibility::ProvenReducible) {
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->degree() >= 1);
        CHECK(r.witness->degree() <= 3);
        CHECK(divmod_monic(trinomial(a, b), *r.witness).second.is_zero());
      } else {
        /* no rational root */
        for (long x = -15; x <= 15; ++x) CHECK(trinomial(a, b).eval(Integer(x)) != 0);
      }
    }
}
