/*
   Polynomials over Z, Q, F_p and F_p[x]/(phi): phi-adic expansion,
   reduction and factorization mod p, resultants, characteristic
   polynomials of elements of Q[x]/(f).

   Coefficients are stored low degree first; the zero polynomial has
   degree -1.
*/
#ifndef SB_POLY_HPP
#define SB_POLY_HPP

#include "sb/exact.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sb {

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<R> c) : c_(c) { trim(); }
  static Poly constant(const R& a) { return Poly(std::vector<R>{a}); }
  static Poly monomial(const R& a, size_t k) {
    std::vector<R> c(k + 1, R(0));
    c[k] = a;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(R(1), 1); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R operator[](size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  R lc() const { return c_.empty() ? R(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), R(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<R> r = c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<R> r(c_.size() + o.c_.size() - 1, R(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  Poly scaled(const R& a) const {
    std::vector<R> r = c_;
    for (auto& x : r) x *= a;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  R eval(const R& v) const {
    R acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }
  /* Substitute a polynomial for the variable. */
  Poly compose(const Poly& g) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
    return acc;
  }
  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(r));
  }
  Poly pow(unsigned e) const {
    Poly r = constant(R(1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<R> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rat(const IntPoly& f);
std::optional<IntPoly> to_int(const RatPoly& f);
Integer content(const IntPoly& f);
std::string to_string(const IntPoly& f, const std::string& var = "x");
std::string to_string(const RatPoly& f, const std::string& var = "x");

/* Quotient and remainder on division by a monic divisor. */
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& F, const IntPoly& g);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& F, const RatPoly& g);
/* lc(B)^(deg A - deg B + 1) * A = Q*B + R */
IntPoly pseudo_remainder(const IntPoly& A, const IntPoly& B);

/* ---- phi-adic expansion ---- */

struct PhiExpansion {
  RatPoly phi;
  std::vector<RatPoly> digits; /* F = sum digits[i] * phi^i */
  RatPoly reproduce() const;
  /* the digits as integer polynomials, when they all are */
  std::optional<std::vector<IntPoly>> integer_digits() const;
};

PhiExpansion phi_expansion(const RatPoly& F, const RatPoly& phi);
PhiExpansion phi_expansion(const IntPoly& F, const IntPoly& phi);

Valuation gauss_valuation(const IntPoly& g, const Integer& p);
Valuation gauss_valuation(const RatPoly& g, const Integer& p);

/* ---- polynomials over F_p ---- */

class ModPoly {
 public:
  ModPoly() = default;
  ModPoly(Integer p, std::vector<Integer> c);
  static ModPoly constant(const Integer& p, const Integer& a) { return ModPoly(p, {a}); }
  static ModPoly x(const Integer& p) { return ModPoly(p, {0, 1}); }

  const Integer& p() const { return p_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer operator[](size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer lc() const { return c_.empty() ? Integer(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator-() const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(const Integer& a) const;
  ModPoly monic() const;
  ModPoly derivative() const;
  bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator<(const ModPoly& o) const; /* degree, then coefficients high to low */

 private:
  void normalize();
  Integer p_ = 2;
  std::vector<Integer> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly gcd(const ModPoly& a, const ModPoly& b); /* monic, or zero */
ModPoly powmod(const ModPoly& base, const Integer& e, const ModPoly& m);
/* s with s*a = g mod m where g = gcd(a, m); throws unless g = 1 */
ModPoly inverse_mod(const ModPoly& a, const ModPoly& m);
std::string to_string(const ModPoly& f, const std::string& var = "x");

ModPoly reduce_mod_p(const IntPoly& F, const Integer& p);
ModPoly reduce_mod_p(const RatPoly& F, const Integer& p); /* F p-integral */
/* Lift with symmetric residues in (-p/2, p/2]. */
IntPoly lift_symmetric(const ModPoly& f);

using ModFactorization = std::vector<std::pair<ModPoly, int>>;
/* Monic irreducible factors with multiplicity, sorted; the unit is dropped. */
ModFactorization factor_mod_p(const ModPoly& F);
bool is_irreducible(const ModPoly& F);

/* ---- polynomials over F_q = F_p[x]/(phi) ---- */

struct ResidueField {
  ModPoly modulus; /* monic irreducible over F_p */
  explicit ResidueField(ModPoly m);
  const Integer& p() const { return modulus.p(); }
  long degree() const { return modulus.degree(); }
  ModPoly reduce(const ModPoly& a) const { return divmod(a, modulus).second; }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const { return reduce(a * b); }
  ModPoly inv(const ModPoly& a) const { return inverse_mod(a, modulus); }
  ModPoly zero() const { return ModPoly(p(), {}); }
  ModPoly one() const { return ModPoly(p(), {1}); }
};

class FqPoly {
 public:
  FqPoly(const ResidueField& F, std::vector<ModPoly> c);
  const ResidueField& field() const { return F_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<ModPoly>& coeffs() const { return c_; }
  ModPoly lc() const { return c_.empty() ? F_.zero() : c_.back(); }
  FqPoly monic() const;
  FqPoly derivative() const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator*(const FqPoly& o) const;
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }

 private:
  void normalize();
  ResidueField F_;
  std::vector<ModPoly> c_;
};

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly gcd(const FqPoly& a, const FqPoly& b);
/* No repeated root over the algebraic closure. */
bool is_squarefree(const FqPoly& T);
std::string to_string(const FqPoly& T, const std::string& var = "Y", const std::string& gen = "a");

/* ---- resultants ---- */

Integer resultant(const IntPoly& F, const IntPoly& G); /* throws on zero input */
Integer discriminant(const IntPoly& F);                /* monic F */

/* Characteristic polynomial of g(theta)/t where theta is a root of monic f. */
RatPoly char_poly_of_element(const IntPoly& g, const Integer& t, const IntPoly& f);

}  // namespace sb

#endif
