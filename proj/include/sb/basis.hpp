/*
   Global integral basis from local ones: row-wise CRT of the local
   numerators, the field discriminant d_K = D / index^2, and the
   canonical (Hermite) form of a basis.
*/
#ifndef SB_BASIS_HPP
#define SB_BASIS_HPP

#include "sb/sextic.hpp"

#include <array>
#include <vector>

namespace sb {

/* Row i = (c[0] + ... + c[i-1] theta^(i-1) + theta^i) / t[i]. */
struct IntegralBasis {
  std::array<std::vector<Integer>, 6> c;
  std::array<Integer, 6> t;
  bool operator==(const IntegralBasis&) const = default;
  Integer index() const; /* product of the t[i] */
  IntPoly numerator(size_t i) const;
  RatMatrix matrix() const; /* rows in the power basis */
};

IntegralBasis power_basis();

/* Local bases at distinct primes; the CRT residues land in [0, t_i). */
IntegralBasis combine(const std::vector<PAdicBasis>& local);
/* Same, and InternalError unless index^2 | D. */
IntegralBasis combine(const std::vector<PAdicBasis>& local, const Integer& D);

/* D / index^2, checked to be an integer. */
Integer field_discriminant(const Integer& D, const Integer& index);

/* Hermite form of the lattice spanned: 0 <= c_ij < t_i / t_j. */
IntegralBasis canonicalize(const IntegralBasis& B);

/* From a global basis, the local exponents k_i at p read off the p-part of the lattice. */
std::array<long, 6> local_exponents(const IntegralBasis& B, const Integer& p);

IntegralBasis from_scaled_hnf(const ScaledHnf& H);

}  // namespace sb

#endif
