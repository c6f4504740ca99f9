/*
   phi-Newton polygons of monic polynomials over Z_(p), phi-index,
   residual (associated) polynomials of edges, p-regularity and the
   index bound of Ore.

   Abscissa i carries the digit a_{n-i} of the phi-adic expansion, so the
   polygon starts at (0, 0) for monic F and its slopes are non-negative.
*/
#ifndef SB_NEWTON_HPP
#define SB_NEWTON_HPP

#include "sb/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sb {

struct PolygonPoint {
  long i;
  Valuation y;
};

struct Edge {
  long x0, y0, x1, y1;
  long d, e;                 /* slope d/e in lowest terms */
  std::vector<long> on_edge; /* abscissae of points on the segment, ends included */
  Rational slope() const { return Rational(d, e); }
  long length() const { return x1 - x0; }
  long t() const { return (x1 - x0) / e; }
};

struct NewtonPolygon {
  RatPoly F;
  RatPoly phi;
  Integer p;
  std::vector<RatPoly> digits; /* phi-adic digits, low order first */
  long n = 0;                  /* number of phi-adic digits minus one */
  std::vector<PolygonPoint> points;
  std::vector<std::pair<long, long>> vertices;
  std::vector<Edge> edges;

  Rational value_at(long x) const; /* ordinate on the polygon */
  std::string dump() const;        /* "(0, 0) (2, 1) ...; slope=1/2 ..." */
};

/* phi must be monic, p-integral and irreducible mod p; F monic, p-integral, phi not dividing F. */
NewtonPolygon build_polygon(const RatPoly& F, const RatPoly& phi, const Integer& p);
NewtonPolygon build_polygon(const IntPoly& F, const IntPoly& phi, const Integer& p);

long phi_index(const NewtonPolygon& polygon);

/* sum_{i=1}^{n-1} floor(i t / n), by enumeration and by the closed form */
long lattice_point_count(long n, long t);
long lattice_point_closed_form(long n, long t);

struct AssociatedPoly {
  Edge edge;
  ResidueField field;
  FqPoly T;
  long d, e, t;
};

AssociatedPoly associated_polynomial(const NewtonPolygon& polygon, size_t edge_index);

struct FactorTrace {
  ModPoly factor; /* irreducible factor of F mod p */
  int multiplicity;
  RatPoly phi; /* the lift actually used */
  NewtonPolygon polygon;
  long index;
  std::vector<AssociatedPoly> residuals; /* one per positive-slope edge */
  std::vector<bool> squarefree;
  bool regular;
};

struct OreResult {
  long lower_bound;
  bool exact; /* every residual polynomial is squarefree */
  std::vector<FactorTrace> factors;
};

/*
   Lifts: a translation beta (rational, p-integral) replaces the lift of the
   linear factor x - beta mod p; other factors use the symmetric lift.
*/
OreResult ore_index(const IntPoly& F, const Integer& p, const std::vector<Rational>& translations = {});

struct RegularityReport {
  bool regular;
  std::vector<std::string> diagnostics;
};
RegularityReport is_p_regular(const IntPoly& F, const Integer& p, const std::vector<Rational>& translations = {});

/* q_j = quotient of f by phi^j and floor of the polygon ordinate at d - j. */
struct IntegralElement {
  RatPoly numerator;
  long exponent;
};
std::vector<IntegralElement> prop3E_elements(const RatPoly& f, const RatPoly& phi, const Integer& p);
std::vector<IntegralElement> prop3E_elements(const IntPoly& f, const IntPoly& phi, const Integer& p);

}  // namespace sb

#endif
