/*
   Independent checks of a claimed integral basis: integrality through
   characteristic polynomials, lattice index, Dedekind's criterion, and a
   p-maximality test via the multiplier ring of the p-radical.
*/
#ifndef SB_VERIFY_HPP
#define SB_VERIFY_HPP

#include "sb/basis.hpp"

#include <vector>

namespace sb {

/* g(theta)/t integral iff its characteristic polynomial has integer coefficients. */
bool is_integral(const IntPoly& g, const Integer& t, const IntPoly& f);

/* [O : Z[theta]] = 1 / |det B|. */
Integer lattice_index(const IntegralBasis& B);

/* True iff p does not divide [O_K : Z[theta]]. */
bool dedekind_maximal_at_p(const IntPoly& f, const Integer& p);

/* An order given by a basis, with its multiplication table. */
struct OrderPresentation {
  IntPoly f;
  IntegralBasis basis;
  RatMatrix B; /* basis rows in powers of theta */
  /* table[i][j] = coordinates of w_i w_j in the basis */
  std::vector<std::vector<std::vector<Integer>>> table;
};

/* Throws ArgumentError when the product of two basis elements leaves the lattice. */
OrderPresentation make_order(const IntPoly& f, const IntegralBasis& B);

struct MaximalityResult {
  bool maximal;
  long radical_dimension; /* dim_Fp of I / pO */
  ScaledHnf multiplier_ring; /* (I : I) in power-basis coordinates */
};

MaximalityResult maximality_test(const OrderPresentation& O, const Integer& p);

}  // namespace sb

#endif
