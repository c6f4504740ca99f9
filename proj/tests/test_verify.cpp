/*
   Oracles: element integrality, lattice index, Dedekind's criterion and
   the radical / multiplier ring maximality test.
*/
#include "sb/basis.hpp"
#include "sb/verify.hpp"

#include <doctest.h>

#include <random>

using namespace sb;

namespace {

IntegralBasis make(std::array<std::vector<Integer>, 6> c, std::array<Integer, 6> t) {
  IntegralBasis B;
  B.c = std::move(c);
  B.t = t;
  return B;
}

IntegralBasis global(const Integer& a, const Integer& b) {
  std::vector<PAdicBasis> L;
  for (const auto& [p, e] : factor(trinomial_discriminant(a, b)).factors) L.push_back(p_integral_basis(a, b, p));
  return combine(L);
}

}  // namespace

TEST_CASE("is_integral") {
  CHECK(is_integral(IntPoly{0, 0, 0, 0, 0, 1}, 2, trinomial(2, 8)));
  CHECK(is_integral(IntPoly{1, 0, 0, 1}, 2, trinomial(0, 135)));
  CHECK(!is_integral(IntPoly{0, 1}, 2, trinomial(0, 12)));
  CHECK(is_integral(IntPoly{0, 0, 0, 1}, 2, trinomial(4, 4)));
  CHECK(!is_integral(IntPoly{0, 0, 0, 0, 0, 1}, 4, trinomial(0, 12)));
}

TEST_CASE("lattice_index") {
  CHECK(lattice_index(power_basis()) == 1);
  IntegralBasis e13 = make({{{}, {0}, {0, 0}, {2, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0, 0}}}, {1, 1, 1, 4, 4, 4});
  CHECK(lattice_index(e13) == 64);
  CHECK(lattice_index(global(0, 135)) == ipow(2, 3) * ipow(3, 7));
}

TEST_CASE("Dedekind criterion") {
  CHECK(dedekind_maximal_at_p(trinomial(4, 4), Integer(8539)));
  CHECK(!dedekind_maximal_at_p(trinomial(0, 12), Integer(2)));
  CHECK(!dedekind_maximal_at_p(trinomial(4, 4), Integer(2)));
  CHECK(dedekind_maximal_at_p(trinomial(1, 1), Integer(101)));
  CHECK(dedekind_maximal_at_p(trinomial(2, 2), Integer(2))); /* Eisenstein */
}

TEST_CASE("maximality test on the worked examples") {
  IntPoly f5 = trinomial(4, 4);
  IntegralBasis b5 = make({{{}, {0}, {0, 0}, {0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0, 0}}}, {1, 1, 1, 2, 2, 2});
  CHECK(maximality_test(make_order(f5, b5), Integer(2)).maximal);

  IntPoly f3 = trinomial(0, 12);
  CHECK(!maximality_test(make_order(f3, power_basis()), Integer(2)).maximal);
  IntegralBasis b3 = make({{{}, {0}, {0, 0}, {2, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0, 0}}}, {1, 1, 1, 4, 4, 4});
  CHECK(maximality_test(make_order(f3, b3), Integer(2)).maximal);
  CHECK(maximality_test(make_order(f3, b3), Integer(3)).maximal);

  IntPoly f4 = trinomial(0, 135);
  OrderPresentation O4 = make_order(f4, global(0, 135));
  for (long p : {2, 3, 5}) CHECK(maximality_test(O4, Integer(p)).maximal);
}

TEST_CASE("a non-ring lattice is rejected") {
  /* ((t + t^3)/2)^2 has a t^2/4 term */
  IntegralBasis bad = make({{{}, {0}, {0, 0}, {0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0, 0}}}, {1, 1, 1, 2, 1, 1});
  CHECK_THROWS_AS(make_order(trinomial(0, 12), bad), ArgumentError);
}

TEST_CASE("maximality of Z[theta] matches Dedekind") {
  std::mt19937_64 g(31);
  int n = 0;
  while (n < 60) {
    long a = static_cast<long>(g() % 200) - 100, b = static_cast<long>(g() % 200) - 100;
    if (b == 0) continue;
    IntPoly f = trinomial(a, b);
    if (discriminant(f) == 0) continue;
    OrderPresentation O = make_order(f, power_basis());
    for (long p : {2, 3, 5, 7}) {
      CHECK(maximality_test(O, Integer(p)).maximal == dedekind_maximal_at_p(f, Integer(p)));
      ++n;
    }
  }
}

TEST_CASE("radical dimension") {
  /* x^6 + 2x + 2 is Eisenstein at 2: one prime, residue degree 1, so the radical has codimension 1 */
  MaximalityResult r = maximality_test(make_order(trinomial(2, 2), power_basis()), Integer(2));
  CHECK(r.maximal);
  CHECK(r.radical_dimension == 5);
}
