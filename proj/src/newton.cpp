/*
   Newton polygon machinery: lower hull of the phi-adic valuation cloud,
   residual polynomials, Ore's index bound with caller-supplied
   translations for the linear factors.
*/
#include "sb/newton.hpp"

#include <numeric>
#include <sstream>

namespace sb {

namespace {

void check_p_integral(const RatPoly& g, const Integer& p, const char* what) {
  for (const auto& c : g.coeffs())
    if (c != 0 && vp(c, p) < Valuation(0)) throw ArgumentError(std::string(what) + " is not p-integral");
}

/* largest abscissa among the minimal slopes from (x0, y0) */
long next_vertex(const std::vector<PolygonPoint>& pts, long x0, long y0) {
  long best = -1;
  Rational best_slope;
  for (const auto& q : pts) {
    if (q.i <= x0 || q.y.is_infinite()) continue;
    Rational s(q.y.value() - y0, q.i - x0);
    s.canonicalize();
    if (best < 0 || s < best_slope || (s == best_slope && q.i > best)) {
      best = q.i;
      best_slope = s;
    }
  }
  return best;
}

}  // namespace

NewtonPolygon build_polygon(const RatPoly& F, const RatPoly& phi, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("p must be prime");
  if (!F.is_monic() || !phi.is_monic()) throw ArgumentError("F and phi must be monic");
  if (phi.degree() < 1) throw ArgumentError("phi must have positive degree");
  check_p_integral(F, p, "F");
  check_p_integral(phi, p, "phi");
  if (!is_irreducible(reduce_mod_p(phi, p))) throw ArgumentError("phi is not irreducible mod p");

  PhiExpansion ex = phi_expansion(F, phi);
  NewtonPolygon P;
  P.F = F;
  P.phi = phi;
  P.p = p;
  P.digits = ex.digits;
  P.n = static_cast<long>(ex.digits.size()) - 1;
  if (ex.digits[0].is_zero()) throw ArgumentError("phi divides F");

  for (long i = 0; i <= P.n; ++i) P.points.push_back({i, gauss_valuation(ex.digits[P.n - i], p)});

  long x = 0, y = P.points[0].y.value();
  P.vertices.push_back({x, y});
  while (x < P.n) {
    long nx = next_vertex(P.points, x, y);
    long ny = P.points[nx].y.value();
    Edge E;
    E.x0 = x;
    E.y0 = y;
    E.x1 = nx;
    E.y1 = ny;
    long g = std::gcd(ny - y, nx - x);
    E.d = (ny - y) / g;
    E.e = (nx - x) / g;
    for (long i = x; i <= nx; ++i) {
      const auto& q = P.points[i];
      if (!q.y.is_infinite() && Rational(q.y.value() - y) * E.e == Rational(i - x) * E.d) E.on_edge.push_back(i);
    }
    P.edges.push_back(E);
    x = nx;
    y = ny;
    P.vertices.push_back({x, y});
  }
  return P;
}

NewtonPolygon build_polygon(const IntPoly& F, const IntPoly& phi, const Integer& p) {
  return build_polygon(to_rat(F), to_rat(phi), p);
}

Rational NewtonPolygon::value_at(long x) const {
  if (x < 0 || x > n) throw ArgumentError("abscissa outside the polygon");
  for (const auto& E : edges)
    if (x >= E.x0 && x <= E.x1) return Rational(E.y0) + Rational(x - E.x0) * E.slope();
  return Rational(vertices.front().second);
}

std::string NewtonPolygon::dump() const {
  std::ostringstream os;
  os << "phi = " << to_string(phi) << "; vertices";
  for (const auto& [x, y] : vertices) os << " (" << x << ", " << y << ")";
  os << "; points";
  for (const auto& q : points) os << " (" << q.i << ", " << q.y.str() << ")";
  for (const auto& E : edges) os << "; slope=" << E.d << "/" << E.e << " length=" << E.length();
  return os.str();
}

long phi_index(const NewtonPolygon& P) {
  long s = 0;
  for (long x = 1; x < P.n; ++x) {
    Rational v = P.value_at(x);
    s += floor_div(numerator(v), denominator(v)).get_si();
  }
  return s * P.phi.degree();
}

long lattice_point_count(long n, long t) {
  if (n <= 0 || t < 0) throw ArgumentError("lattice_point_count needs n > 0, t >= 0");
  long s = 0;
  for (long i = 1; i < n; ++i) s += (i * t) / n;
  return s;
}

long lattice_point_closed_form(long n, long t) {
  if (n <= 0 || t < 0) throw ArgumentError("lattice_point_count needs n > 0, t >= 0");
  return ((n - 1) * (t - 1) + std::gcd(n, t) - 1) / 2;
}

AssociatedPoly associated_polynomial(const NewtonPolygon& P, size_t k) {
  if (k >= P.edges.size()) throw ArgumentError("edge index out of range");
  const Edge& E = P.edges[k];
  if (E.d == 0) throw ArgumentError("edge of slope 0 has no associated polynomial");
  ResidueField Fq(reduce_mod_p(P.phi, P.p));
  long t = E.t();
  std::vector<ModPoly> c(t + 1, Fq.zero());
  for (long j = 0; j <= t; ++j) {
    long i = E.x0 + E.e * j;
    const RatPoly& a = P.digits[P.n - i];
    if (a.is_zero()) continue;
    Rational scale = 1;
    long sh = E.y0 + E.d * j;
    if (gauss_valuation(a, P.p) < Valuation(sh)) throw InternalError("point below the polygon");
    Integer pk = ipow(P.p, static_cast<unsigned long>(sh));
    scale = Rational(1) / Rational(pk);
    c[t - j] = Fq.reduce(reduce_mod_p(a.scaled(scale), P.p));
  }
  FqPoly T(Fq, c);
  return AssociatedPoly{E, Fq, T.monic(), E.d, E.e, t};
}

OreResult ore_index(const IntPoly& F, const Integer& p, const std::vector<Rational>& translations) {
  if (!F.is_monic()) throw ArgumentError("ore_index needs a monic polynomial");
  OreResult R{0, true, {}};
  for (const auto& [g, mult] : factor_mod_p(reduce_mod_p(F, p))) {
    RatPoly phi = to_rat(lift_symmetric(g));
    if (g.degree() == 1) {
      for (const auto& beta : translations) {
        Integer r = residue(beta, p);
        if (ModPoly(p, {-r, 1}) == g) {
          phi = RatPoly{-beta, Rational(1)};
          break;
        }
      }
    }
    FactorTrace tr{g, mult, phi, build_polygon(to_rat(F), phi, p), 0, {}, {}, true};
    tr.index = phi_index(tr.polygon);
    for (size_t k = 0; k < tr.polygon.edges.size(); ++k) {
      if (tr.polygon.edges[k].d == 0) continue;
      tr.residuals.push_back(associated_polynomial(tr.polygon, k));
      bool sf = is_squarefree(tr.residuals.back().T);
      tr.squarefree.push_back(sf);
      tr.regular = tr.regular && sf;
    }
    R.lower_bound += tr.index;
    R.exact = R.exact && tr.regular;
    R.factors.push_back(std::move(tr));
  }
  return R;
}

RegularityReport is_p_regular(const IntPoly& F, const Integer& p, const std::vector<Rational>& translations) {
  OreResult R = ore_index(F, p, translations);
  RegularityReport rep{R.exact, {}};
  for (const auto& tr : R.factors) {
    for (size_t k = 0; k < tr.residuals.size(); ++k) {
      const auto& A = tr.residuals[k];
      std::ostringstream os;
      os << "phi=" << to_string(tr.phi) << " slope=" << A.d << "/" << A.e << " T=" << to_string(A.T)
         << (tr.squarefree[k] ? " squarefree" : " NOT squarefree");
      rep.diagnostics.push_back(os.str());
    }
  }
  return rep;
}

std::vector<IntegralElement> prop3E_elements(const RatPoly& f, const RatPoly& phi, const Integer& p) {
  check_p_integral(f, p, "f");
  check_p_integral(phi, p, "phi");
  if (!divmod(reduce_mod_p(f, p), reduce_mod_p(phi, p)).second.is_zero())
    throw ArgumentError("phi does not divide f mod p");
  NewtonPolygon P = build_polygon(f, phi, p);
  long d = f.degree() / phi.degree();
  std::vector<IntegralElement> out;
  RatPoly q = f;
  for (long j = 1; j <= d; ++j) {
    q = divmod(q, phi).first;
    Rational v = P.value_at(d - j);
    out.push_back({q, floor_div(numerator(v), denominator(v)).get_si()});
  }
  return out;
}

std::vector<IntegralElement> prop3E_elements(const IntPoly& f, const IntPoly& phi, const Integer& p) {
  return prop3E_elements(to_rat(f), to_rat(phi), p);
}

}  // namespace sb
