/*
   Case tables for x^6 + a x + b.  Each prime class has a predicate list
   that must single out exactly one label; every label carries its v_p(D),
   v_p(d_K) and a basis template.  The templates are reduced to the
   canonical row form before they leave this file.
*/
#include "sb/sextic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sb {

namespace {

constexpr long INF = 1L << 20;

long val(const Integer& n, const Integer& p) { return n == 0 ? INF : ord(n, p); }

IntPoly th(unsigned k) { return IntPoly::monomial(Integer(1), k); }

/* (-5x^5 + x^4 t + x^3 t^2 + x^2 t^3 + x t^4 + t^5), the shape shared by several rows */
IntPoly geometric_row(const Integer& x) {
  std::vector<Integer> c(6);
  c[0] = -5 * ipow(x, 5);
  for (int i = 1; i <= 5; ++i) c[i] = ipow(x, 5 - i);
  return IntPoly(c);
}

std::string str(const Integer& n) { return to_string(n); }
std::string str(long n) { return std::to_string(n); }

}  // namespace

/* ---- normalization ---- */

IntPoly trinomial(const Integer& a, const Integer& b) { return IntPoly{b, a, 0, 0, 0, 0, 1}; }

Integer trinomial_discriminant(const Integer& a, const Integer& b) {
  Integer D = 3125 * ipow(a, 6) - 46656 * ipow(b, 5);
  if (D == 0) throw ArgumentError("discriminant of x^6 + a x + b vanishes");
  return D;
}

TrinomialField normalize(const Integer& a, const Integer& b, const FactorBudget& budget) {
  if (b == 0) throw ReducibleError("b = 0: x divides x^6 + a x");
  TrinomialField T;
  T.a0 = a;
  T.b0 = b;
  T.a = a;
  T.b = b;
  T.scale = 1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  PrimeFactorization pf = factor(g, budget);
  T.search_complete = pf.complete();
  for (const auto& [p, e] : pf.factors) {
    (void)e;
    long times = 0;
    Integer p5 = ipow(p, 5), p6 = ipow(p, 6);
    while (T.a % p5 == 0 && T.b % p6 == 0) {
      T.a /= p5;
      T.b /= p6;
      T.scale *= p;
      ++times;
    }
    if (times) T.removed.push_back({p, times});
  }
  T.f = trinomial(T.a, T.b);
  T.D = trinomial_discriminant(T.a, T.b);
  return T;
}

/* ---- parameters and claims ---- */

void CaseParams::set(const std::string& k, const std::string& v) {
  for (auto& e : entries)
    if (e.first == k) {
      e.second = v;
      return;
    }
  entries.push_back({k, v});
}

std::optional<std::string> CaseParams::get(const std::string& k) const {
  for (const auto& e : entries)
    if (e.first == k) return e.second;
  return std::nullopt;
}

bool VpDClaim::holds(long v) const {
  switch (kind) {
    case Exact: return v == value;
    case OddAtLeast: return v % 2 == 1 && v >= value;
    case EvenAtLeast: return v % 2 == 0 && v >= value;
    case Odd: return v % 2 == 1;
    case Even: return v % 2 == 0;
  }
  return false;
}

std::string VpDClaim::str() const {
  switch (kind) {
    case Exact: return std::to_string(value);
    case OddAtLeast: return "odd >= " + std::to_string(value);
    case EvenAtLeast: return "even >= " + std::to_string(value);
    case Odd: return "odd";
    case Even: return "even";
  }
  return "?";
}

namespace {

struct CaseInfo {
  VpDClaim claim;
  long dK;
};

VpDClaim ex(long v) { return {VpDClaim::Exact, v}; }

const std::map<std::string, CaseInfo>& case_table() {
  static const std::map<std::string, CaseInfo> t = {
      {"E1", {ex(0), 0}},     {"E2", {ex(6), 6}},     {"E3", {ex(11), 11}},   {"E4", {ex(6), 4}},
      {"E5", {ex(12), 4}},    {"E6", {ex(18), 6}},    {"E7", {ex(21), 9}},    {"E8", {ex(18), 4}},
      {"E9", {ex(24), 4}},    {"E10", {ex(30), 10}},  {"E11", {ex(31), 11}},  {"E12", {ex(7), 7}},
      {"E13", {{VpDClaim::OddAtLeast, 9}, 7}},        {"E14", {{VpDClaim::EvenAtLeast, 8}, 4}},
      {"E15", {{VpDClaim::EvenAtLeast, 8}, 6}},       {"E16", {ex(6), 6}},    {"E17", {ex(6), 0}},
      {"E18", {ex(12), 6}},   {"E19", {ex(16), 6}},   {"E20", {ex(16), 4}},   {"E21", {ex(16), 8}},
      {"E22", {ex(24), 4}},   {"E23", {ex(24), 6}},   {"E24", {ex(26), 6}},   {"E25", {ex(26), 4}},
      {"E26", {ex(26), 8}},

      {"F1", {ex(0), 0}},     {"F2", {ex(6), 6}},     {"F3", {ex(11), 11}},   {"F4", {ex(6), 4}},
      {"F5", {ex(12), 6}},    {"F6", {ex(16), 10}},   {"F7", {ex(12), 4}},    {"F8", {ex(18), 4}},
      {"F9", {ex(24), 8}},    {"F10", {ex(26), 10}},  {"F11", {ex(24), 4}},   {"F12", {ex(30), 10}},
      {"F13", {ex(31), 11}},  {"F14", {ex(6), 6}},    {"F15", {ex(6), 6}},    {"F16", {ex(6), 2}},
      {"F17", {ex(6), 6}},    {"F18", {ex(6), 2}},    {"F19", {ex(7), 5}},    {"F20", {ex(7), 7}},
      {"F21", {ex(8), 6}},    {"F22", {ex(9), 3}},    {"F23", {{VpDClaim::EvenAtLeast, 10}, 4}},
      {"F24", {{VpDClaim::OddAtLeast, 11}, 3}},       {"F25", {ex(18), 6}},   {"F26", {ex(21), 7}},
      {"F27", {ex(21), 3}},

      {"G1", {ex(0), 0}},     {"G2", {ex(5), 5}},     {"G3", {ex(6), 6}},     {"G4", {ex(5), 3}},
      {"G5", {ex(5), 5}},     {"G6", {{VpDClaim::OddAtLeast, 7}, 3}},         {"G7", {{VpDClaim::EvenAtLeast, 8}, 2}},
      {"G8", {ex(5), 5}},     {"G9", {ex(5), 5}},     {"G10", {ex(5), 3}},    {"G11", {ex(10), 8}},
      {"G12", {ex(10), 4}},   {"G13", {ex(11), 9}},   {"G14", {ex(15), 7}},   {"G15", {ex(15), 3}},
      {"G16", {ex(17), 9}},   {"G17", {ex(20), 6}},   {"G18", {ex(20), 4}},   {"G19", {ex(23), 9}},
      {"G20", {ex(25), 5}},   {"G21", {ex(25), 5}},   {"G22", {ex(29), 9}},

      {"H1", {ex(0), 0}},     {"H2", {ex(5), 5}},     {"H3", {ex(6), 4}},     {"H4", {ex(10), 4}},
      {"H5", {ex(12), 4}},    {"H6", {ex(15), 3}},    {"H7", {ex(18), 4}},    {"H8", {ex(20), 4}},
      {"H9", {ex(24), 4}},    {"H10", {ex(25), 5}},   {"H11", {{VpDClaim::Even, 0}, 0}},
      {"H12", {{VpDClaim::Odd, 0}, 1}},
  };
  return t;
}

using Pred = std::pair<std::string, bool>;

std::vector<Pred> predicates(const Integer& a, const Integer& b, const Integer& p, long va, long vb, long v) {
  auto m = [](const Integer& n, long k) { return mod(n, Integer(k)); };
  if (p == 2) {
    Integer b4 = m(b, 4);
    Integer D2 = m(strip(3125 * ipow(a, 6) - 46656 * ipow(b, 5), 2), 4);
    Integer bq = vb < INF ? m(strip(b, 2), 4) : Integer(0);
    return {
        {"E1", va == 0},
        {"E2", vb == 1 && va == 1},
        {"E3", vb == 1 && va >= 2},
        {"E4", vb >= 2 && va == 1},
        {"E5", vb >= 3 && va == 2},
        {"E6", vb == 3 && va == 3},
        {"E7", vb == 3 && va >= 4},
        {"E8", vb >= 4 && va == 3},
        {"E9", vb >= 5 && va == 4},
        {"E10", vb == 5 && va == 5},
        {"E11", vb == 5 && va >= 6},
        {"E12", vb == 0 && va == 1 && b4 == 3},
        {"E13", vb == 0 && va == 1 && b4 == 1 && v % 2 == 1},
        {"E14", vb == 0 && va == 1 && b4 == 1 && v % 2 == 0 && D2 == 3},
        {"E15", vb == 0 && va == 1 && b4 == 1 && v % 2 == 0 && D2 == 1},
        {"E16", vb == 0 && va >= 2 && b4 == 1},
        {"E17", vb == 0 && va >= 2 && b4 == 3},
        {"E18", vb == 2 && va == 2},
        {"E19", vb == 2 && va == 3 && bq == 3},
        {"E20", vb == 2 && va >= 4 && bq == 3},
        {"E21", vb == 2 && va >= 3 && bq == 1},
        {"E22", vb == 4 && va == 4 && bq == 1},
        {"E23", vb == 4 && va == 4 && bq == 3},
        {"E24", vb == 4 && va == 5 && bq == 3},
        {"E25", vb == 4 && va >= 6 && bq == 3},
        {"E26", vb == 4 && va >= 5 && bq == 1},
    };
  }
  if (p == 3) {
    Integer b9 = m(b, 9), a9 = m(a, 9);
    bool apm3 = a9 == 3 || a9 == 6;
    bool F26or27 = vb == 3 && va >= 4;
    long vB = 0;
    if (F26or27) {
      Integer B = b / 27;
      vB = val(B * B * B - B, 3);
    }
    return {
        {"F1", va == 0},
        {"F2", vb == 1 && va == 1},
        {"F3", vb == 1 && va >= 2},
        {"F4", vb >= 2 && va == 1},
        {"F5", vb == 2 && va == 2},
        {"F6", vb == 2 && va >= 3},
        {"F7", vb >= 3 && va == 2},
        {"F8", vb >= 4 && va == 3},
        {"F9", vb == 4 && va == 4},
        {"F10", vb == 4 && va >= 5},
        {"F11", vb >= 5 && va == 4},
        {"F12", vb == 5 && va == 5},
        {"F13", vb == 5 && va >= 6},
        {"F14", vb == 0 && va == 1 && m(b, 3) == 1},
        {"F15", vb == 0 && va >= 2 && (b9 == 4 || b9 == 7)},
        {"F16", vb == 0 && va >= 2 && b9 == 1},
        {"F17", vb == 0 && va >= 2 && (b9 == 2 || b9 == 5)},
        {"F18", vb == 0 && va >= 2 && b9 == 8},
        {"F19", b9 == 2 && apm3},
        {"F20", b9 == 8 && apm3},
        {"F21", b9 == 5 && apm3 && v == 8},
        {"F22", b9 == 5 && apm3 && v == 9},
        {"F23", b9 == 5 && apm3 && v >= 10 && v % 2 == 0},
        {"F24", b9 == 5 && apm3 && v >= 11 && v % 2 == 1},
        {"F25", vb == 3 && va == 3},
        {"F26", F26or27 && vB == 1},
        {"F27", F26or27 && vB >= 2},
    };
  }
  if (p == 5) {
    bool unit_a = va == 0;
    bool r1 = unit_a && m(ipow(a, 4), 25) != 21;
    bool s0 = unit_a && m(b - a * a + ipow(a, 6), 25) == 0; /* b = a^2 - a^6 mod 25 */
    bool sq = unit_a && vb == 1 && m(a * a - b / 5, 5) == 0;
    bool G2_7 = vb == 1 && unit_a;
    return {
        {"G1", vb == 0},
        {"G2", G2_7 && r1 && !s0 && !sq},
        {"G3", G2_7 && r1 && !s0 && sq},
        {"G4", G2_7 && r1 && s0},
        {"G5", G2_7 && !r1 && !s0},
        {"G6", G2_7 && !r1 && s0 && v % 2 == 1},
        {"G7", G2_7 && !r1 && s0 && v % 2 == 0},
        {"G8", vb == 1 && va >= 1},
        {"G9", vb >= 2 && unit_a && m(ipow(a, 4), 25) != 1},
        {"G10", vb >= 2 && unit_a && m(ipow(a, 4), 25) == 1},
        {"G11", vb == 2 && va == 1},
        {"G12", vb == 2 && va >= 2},
        {"G13", vb >= 3 && va == 1},
        {"G14", vb == 3 && va == 2},
        {"G15", vb == 3 && va >= 3},
        {"G16", vb >= 4 && va == 2},
        {"G17", vb == 4 && va == 3},
        {"G18", vb == 4 && va >= 4},
        {"G19", vb >= 5 && va == 3},
        {"G20", vb == 5 && va == 4},
        {"G21", vb == 5 && va >= 5},
        {"G22", vb >= 6 && va == 4},
    };
  }
  return {
      {"H1", (vb == 0 && va >= 1) || (va == 0 && vb >= 1)},
      {"H2", vb == 1 && va >= 1},
      {"H3", va == 1 && vb >= 2},
      {"H4", vb == 2 && va >= 2},
      {"H5", va == 2 && vb >= 3},
      {"H6", vb == 3 && va >= 3},
      {"H7", va == 3 && vb >= 4},
      {"H8", vb == 4 && va >= 4},
      {"H9", va == 4 && vb >= 5},
      {"H10", vb == 5 && va >= 5},
      {"H11", va == 0 && vb == 0 && v % 2 == 0},
      {"H12", va == 0 && vb == 0 && v % 2 == 1},
  };
}

std::string trivial_label(const Integer& p) {
  if (p == 2) return "E1";
  if (p == 3) return "F1";
  if (p == 5) return "G1";
  return "H1";
}

Rational beta_of(const Integer& a, const Integer& b) { return Rational(-6 * b) / Rational(5 * a); }

}  // namespace

std::vector<std::string> case_labels() {
  std::vector<std::string> out;
  const char* cls[] = {"E", "F", "G", "H"};
  int count[] = {26, 27, 22, 12};
  for (int c = 0; c < 4; ++c)
    for (int i = 1; i <= count[c]; ++i) out.push_back(cls[c] + std::to_string(i));
  return out;
}

bool ore_certified(const std::string& label) {
  if (label.size() < 2) return false;
  char c = label[0];
  int n = std::stoi(label.substr(1));
  if (n == 1) return false;
  if (c == 'E') return n <= 17;
  if (c == 'F') return n <= 24;
  return c == 'G' || c == 'H';
}

Classification classify(const Integer& a, const Integer& b, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError("p must be prime");
  if (b == 0) throw ReducibleError("b = 0");
  Integer D = trinomial_discriminant(a, b);
  if (a % ipow(p, 5) == 0 && b % ipow(p, 6) == 0) throw ArgumentError("(a, b) is not normalized at p");
  long va = val(a, p), vb = val(b, p), v = ord(D, p);

  Classification C;
  C.p = p;
  C.vpD = v;
  C.p_divides_D = v > 0;
  C.params.set("v_p(a)", va >= INF ? "inf" : str(va));
  C.params.set("v_p(b)", str(vb));
  C.params.set("v_p(D)", str(v));

  if (v == 0) {
    C.label = trivial_label(p);
    C.claim = ex(0);
    C.vp_dK = 0;
    return C;
  }

  std::vector<std::string> hits;
  for (const auto& [lab, ok] : predicates(a, b, p, va, vb, v))
    if (ok) hits.push_back(lab);
  if (hits.size() != 1) {
    std::string msg = "case predicates at p=" + str(p) + " matched " + std::to_string(hits.size()) + " labels:";
    for (const auto& h : hits) msg += " " + h;
    throw InternalError(msg);
  }
  C.label = hits[0];
  const CaseInfo& info = case_table().at(C.label);
  C.claim = info.claim;
  C.vp_dK = info.dK;
  if (!C.claim.holds(v))
    throw InternalError(C.label + " claims v_p(D) " + C.claim.str() + " but v_p(D) = " + str(v));

  const std::string& L = C.label;
  auto& P = C.params;
  if (L == "E13" || L == "E14" || L == "E15") {
    Integer a2 = a / 2;
    long k = L == "E13" ? (v - 7) / 2 : L == "E14" ? (v - 4) / 2 : (v - 6) / 2;
    Integer M = ipow(Integer(2), k);
    Integer x;
    if (L != "E13") {
      /* x2 for E15 still solves the beta congruence; beta = delta mod 2^k there */
      long u = (v - 6) / 2;
      Integer twou = ipow(Integer(2), u);
      x = solve_linear_congruence(5 * a2, L == "E14" ? Integer(3 * b - twou) : Integer(3 * b), M);
      Rational delta = Rational(twou - 3 * b) / Rational(5 * a2);
      P.set("u", str(u));
      P.set("delta", to_string(delta));
      P.translations.push_back(delta);
    } else {
      x = solve_linear_congruence(5 * a2, 3 * b, M);
      P.translations.push_back(beta_of(a, b));
      P.set("beta", to_string(beta_of(a, b)));
    }
    P.set("D_2 mod 4", str(mod(strip(D, 2), 4)));
    P.set("k", str(k));
    P.set(L == "E13" ? "x0" : L == "E14" ? "x1" : "x2", str(x));
  } else if (L == "F19" || L == "F21") {
    bool a3 = mod(a, 9) == 3;
    int eps = (L == "F19") == a3 ? -1 : 1;
    P.set("eps", std::to_string(eps));
    if (L == "F21") {
      P.translations.push_back(beta_of(a, b));
      P.set("beta", to_string(beta_of(a, b)));
    }
  } else if (L == "F22" || L == "F23" || L == "F24") {
    long k = L == "F22" ? 2 : L == "F23" ? (v - 6) / 2 : (v - 5) / 2;
    Integer x = solve_linear_congruence(5 * (a / 3), 2 * b, ipow(Integer(3), k));
    Rational beta = beta_of(a, b);
    Integer rb = residue(beta, 3);
    P.set("beta", to_string(beta));
    P.set("beta mod 3", rb == 2 ? "-1" : "1");
    P.set("k", str(k));
    P.set("x1", str(x));
    P.translations.push_back(beta);
  } else if (L == "F26" || L == "F27") {
    Integer B = b / 27;
    P.set("B", str(B));
    P.set("v_3(B^3-B)", str(val(B * B * B - B, 3)));
  } else if (L == "G2" || L == "G3" || L == "G4" || L == "G5" || L == "G9" || L == "G10") {
    P.translations.push_back(Rational(-a));
  } else if (L == "G6" || L == "G7") {
    long k = L == "G6" ? (v - 5) / 2 : (v - 4) / 2;
    Integer x = solve_linear_congruence(a, 6 * (b / 5), ipow(Integer(5), k));
    P.set("beta", to_string(beta_of(a, b)));
    P.set("k", str(k));
    P.set("x0", str(x));
    P.translations.push_back(beta_of(a, b));
  } else if (L == "H11" || L == "H12") {
    long mm = L == "H11" ? v / 2 : (v - 1) / 2;
    Integer M = ipow(p, mm);
    Integer A5 = 5 * a, B6 = 6 * b;
    P.set("m", str(mm));
    P.set("x", str(solve_linear_congruence(6, -A5, M)));
    P.set("y", str(solve_linear_congruence(ipow(A5, 4), -ipow(B6, 4), M)));
    P.set("z", str(solve_linear_congruence(ipow(A5, 3), ipow(B6, 3), M)));
    P.set("v", str(solve_linear_congruence(ipow(A5, 2), -ipow(B6, 2), M)));
    P.set("w", str(solve_linear_congruence(A5, B6, M)));
    P.set("beta", to_string(beta_of(a, b)));
    P.translations.push_back(beta_of(a, b));
  }
  return C;
}

/* ---- bases ---- */

long PAdicBasis::sum_k() const {
  long s = 0;
  for (const auto& r : rows) s += r.k;
  return s;
}

void PAdicBasis::validate() const {
  if (2 * sum_k() + cls.vp_dK != cls.vpD)
    throw InternalError(cls.label + ": 2*sum k + v_p(d_K) != v_p(D)");
  if (rows[0].k != 0) throw InternalError(cls.label + ": first row must be 1");
  for (size_t i = 0; i < 6; ++i) {
    if (rows[i].c.size() != i) throw InternalError(cls.label + ": row width");
    if (i && rows[i].k < rows[i - 1].k) throw InternalError(cls.label + ": exponents not monotone");
    for (size_t j = 0; j < i; ++j) {
      Integer m = ipow(cls.p, rows[i].k - rows[j].k);
      if (rows[i].c[j] < 0 || rows[i].c[j] >= m) throw InternalError(cls.label + ": row not reduced");
    }
  }
}

std::array<BasisRow, 6> reduce_rows(const std::array<IntPoly, 6>& num, const std::array<long, 6>& k,
                                    const Integer& p) {
  std::array<IntPoly, 6> n = num;
  std::array<BasisRow, 6> out;
  for (size_t i = 0; i < 6; ++i) {
    if (n[i].degree() != static_cast<long>(i) || !n[i].is_monic()) throw InternalError("template row shape");
    for (size_t j = i; j-- > 0;) {
      if (k[i] < k[j]) throw InternalError("template exponents not monotone");
      Integer m = ipow(p, k[i] - k[j]);
      Integer q = floor_div(n[i][j], m);
      if (q != 0) n[i] -= n[j].scaled(q * m);
    }
    out[i].k = k[i];
    for (size_t j = 0; j < i; ++j) out[i].c.push_back(n[i][j]);
  }
  return out;
}

PAdicBasis p_integral_basis(const Integer& a, const Integer& b, const Integer& p) {
  PAdicBasis B;
  B.cls = classify(a, b, p);
  const std::string& L = B.cls.label;
  std::array<IntPoly, 6> n;
  for (unsigned i = 0; i < 6; ++i) n[i] = th(i);
  std::array<long, 6> k{0, 0, 0, 0, 0, 0};
  auto K = [&](std::array<long, 6> kk) { k = kk; };
  auto geti = [&](const char* key) { return parse_integer(*B.cls.params.get(key)); };
  const IntPoly t = th(1);

  if (L == "E4" || L == "F4" || L == "G11" || L == "G13" || L == "H3") K({0, 0, 0, 0, 0, 1});
  else if (L == "E5" || L == "F7" || L == "G14" || L == "G16" || L == "H5") K({0, 0, 0, 1, 1, 2});
  else if (L == "E6" || L == "E7" || L == "F25" || L == "G15" || L == "H6") K({0, 0, 1, 1, 2, 2});
  else if (L == "E8" || L == "F8" || L == "G17" || L == "G19" || L == "H7") K({0, 0, 1, 1, 2, 3});
  else if (L == "E9" || L == "E10" || L == "E11" || L == "F11" || L == "F12" || L == "F13" || L == "G20" ||
           L == "G21" || L == "G22" || L == "H9" || L == "H10")
    K({0, 0, 1, 2, 3, 4});
  else if (L == "E18" || L == "F5" || L == "F6" || L == "G12" || L == "H4") K({0, 0, 0, 1, 1, 1});
  else if (L == "F9" || L == "F10" || L == "G18" || L == "H8") K({0, 0, 1, 2, 2, 3});
  else if (L == "E13" || L == "E14" || L == "E15") {
    const char* key = L == "E13" ? "x0" : L == "E14" ? "x1" : "x2";
    n[5] = geometric_row(geti(key));
    K({0, 0, 0, 0, 0, geti("k").get_si()});
  } else if (L == "E17") {
    n[3] = th(3) + th(0);
    n[4] = th(4) + th(1);
    n[5] = th(5) + th(2);
    K({0, 0, 0, 1, 1, 1});
  } else if (L == "E19") {
    n[4] = th(4) + th(1).scaled(2);
    n[5] = th(5) + th(2).scaled(2);
    K({0, 0, 0, 1, 2, 2});
  } else if (L == "E20") {
    n[3] = th(3) + th(0).scaled(2);
    n[4] = th(4) + th(1).scaled(2);
    n[5] = th(5) + th(2).scaled(2);
    K({0, 0, 0, 2, 2, 2});
  } else if (L == "E21") {
    n[5] = th(5) + th(2).scaled(2);
    K({0, 0, 0, 1, 1, 2});
  } else if (L == "E22" || L == "E23" || L == "E24" || L == "E26") {
    n[4] = th(4) + th(1).scaled(4);
    if (L == "E22") n[5] = th(5) + th(2).scaled(4) + th(1).scaled(8);
    if (L == "E23" || L == "E24") n[5] = th(5) + th(2).scaled(4);
    long k5 = L == "E22" || L == "E24" ? 4 : 3;
    K({0, 0, 1, 2, 3, k5});
  } else if (L == "E25") {
    n[3] = th(3) + th(0).scaled(4);
    n[4] = th(4) + th(1).scaled(4);
    n[5] = th(5) + th(2).scaled(4);
    K({0, 0, 1, 3, 3, 4});
  } else if (L == "F16" || L == "F18") {
    Integer s = L == "F16" ? -1 : 1;
    n[4] = th(4) + th(2).scaled(s) + th(0);
    n[5] = th(5) + th(3).scaled(s) + th(1);
    K({0, 0, 0, 0, 1, 1});
  } else if (L == "F19" || L == "F21") {
    Integer e = geti("eps");
    n[5] = th(5) + th(4).scaled(e) + th(3) + th(2).scaled(e) + th(1) + th(0).scaled(e);
    K({0, 0, 0, 0, 0, 1});
  } else if (L == "F22" || L == "F23" || L == "F24") {
    Integer rb = geti("beta mod 3");
    n[4] = th(4) - th(3).scaled(rb) + th(1).scaled(rb) - th(0);
    n[5] = geometric_row(geti("x1"));
    K({0, 0, 0, 0, 1, geti("k").get_si()});
  } else if (L == "F26" || L == "F27") {
    Integer Bv = geti("B");
    IntPoly q = th(2) + th(0).scaled(3 * Bv);
    n[2] = th(2);
    if (L == "F26") {
      n[3] = th(3);
      n[4] = th(4);
      n[5] = q * q * t;
      K({0, 0, 1, 1, 2, 3});
    } else {
      n[3] = q * t;
      n[4] = q * q;
      n[5] = q * q * t;
      K({0, 0, 1, 2, 3, 3});
    }
  } else if (L == "G4" || L == "G10") {
    n[5] = th(5) - th(4).scaled(a) + th(3).scaled(a * a) - th(2).scaled(ipow(a, 3)) + th(1);
    K({0, 0, 0, 0, 0, 1});
  } else if (L == "G6" || L == "G7") {
    n[4] = th(4) - th(3).scaled(2 * a) + th(2).scaled(3 * a * a) - th(1).scaled(4 * ipow(a, 3));
    n[5] = geometric_row(geti("x0"));
    K({0, 0, 0, 0, 1, geti("k").get_si()});
  } else if (L == "H11" || L == "H12") {
    n[5] = IntPoly{geti("x"), geti("y"), geti("z"), geti("v"), geti("w"), Integer(1)};
    K({0, 0, 0, 0, 0, geti("m").get_si()});
  }

  B.rows = reduce_rows(n, k, p);
  B.validate();
  return B;
}

/* ---- pure sextics ---- */

Integer pure_sextic_discriminant(const Integer& b, const FactorBudget& budget) {
  if (b == 0) throw ReducibleError("b = 0");
  PrimeFactorization pf = factor(b, budget);
  if (!pf.complete()) throw ArgumentError("factorization of b incomplete");
  for (const auto& [p, e] : pf.factors)
    if (e >= 6) throw ArgumentError(to_string(p) + "^6 divides b");
  if (irreducibility_check(0, b, budget).verdict == Irreducibility::ProvenReducible)
    throw ReducibleError("x^6 + " + to_string(b) + " is reducible");
  long v2 = val(b, 2), v3 = val(b, 3);
  long r1, r2;
  if (v2 == 0) r1 = mod(b + 1, 4) == 0 ? 0 : 6;
  else if (v2 == 1 || v2 == 5) r1 = 11;
  else if (v2 == 3) r1 = 9;
  else r1 = mod(strip(b, 2), 4) == 3 ? 4 : 8;
  if (v3 == 0) {
    Integer r = mod(b, 9);
    r2 = (r == 1 || r == 8) ? 2 : 6;
  } else if (v3 == 1 || v3 == 5) r2 = 11;
  else if (v3 == 2 || v3 == 4) r2 = 10;
  else {
    Integer b3 = strip(b, 3);
    r2 = mod(b3 * b3, 9) == 1 ? 3 : 7;
  }
  Integer d = ipow(Integer(2), r1) * ipow(Integer(3), r2);
  for (const auto& [p, e] : pf.factors) {
    if (p <= 3) continue;
    d *= ipow(p, 6 - std::gcd(6L, e));
  }
  return b > 0 ? Integer(-d) : d;
}

/* ---- irreducibility ---- */

std::string to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Proven: return "Proven";
    case Irreducibility::ProvenReducible: return "ProvenReducible";
    case Irreducibility::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

IntPoly symmetric(const IntPoly& g, const Integer& M) {
  std::vector<Integer> c;
  for (const auto& x : g.coeffs()) {
    Integer r = mod(x, M);
    if (2 * r > M) r -= M;
    c.push_back(r);
  }
  return IntPoly(c);
}

IntPoly lift_nonneg(const ModPoly& g) { return IntPoly(g.coeffs()); }

/* Lift f = g0 h0 mod l to a factorization mod l^N with l^N > bound; test the lift of g. */
std::optional<IntPoly> hensel_try(const IntPoly& f, const ModPoly& g0, const ModPoly& h0, const Integer& l,
                                  const Integer& bound) {
  ModPoly one = ModPoly::constant(l, 1);
  ModPoly s = inverse_mod(g0, h0);
  ModPoly t = divmod(one - s * g0, h0).first;
  IntPoly g = lift_nonneg(g0), h = lift_nonneg(h0);
  Integer pk = l;
  while (pk <= bound) {
    IntPoly e = f - g * h;
    std::vector<Integer> ec;
    for (const auto& c : e.coeffs()) {
      if (c % pk != 0) throw InternalError("Hensel step lost divisibility");
      ec.push_back(c / pk);
    }
    ModPoly eb = reduce_mod_p(IntPoly(ec), l);
    ModPoly G = divmod(eb * t, g0).second;
    ModPoly H = divmod(eb - G * h0, g0).first;
    g += lift_nonneg(G).scaled(pk);
    h += lift_nonneg(H).scaled(pk);
    pk *= l;
  }
  IntPoly cand = symmetric(g, pk);
  if (divmod_monic(f, cand).second.is_zero()) return cand;
  return std::nullopt;
}

Integer binom(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

IrreducibilityResult irreducibility_check(const Integer& a, const Integer& b, const FactorBudget& budget) {
  if (b == 0) return {Irreducibility::ProvenReducible, "b = 0", IntPoly::x()};
  IntPoly f = trinomial(a, b);
  Integer D = 3125 * ipow(a, 6) - 46656 * ipow(b, 5);
  std::vector<std::string> steps;
  if (D == 0) {
    /* double root at -6b/(5a), integral since f is monic */
    Integer r = -6 * b / (5 * a);
    return {Irreducibility::ProvenReducible, "repeated root " + str(r), IntPoly{-r, 1}};
  }

  /* sizes s in 1..5 that a proper factor could still have */
  std::set<long> S{1, 2, 3, 4, 5};

  PrimeFactorization pb = factor(b, budget);
  long best_e = 1;
  Integer best_p = 0;
  for (const auto& [p, e] : pb.factors) {
    long va = val(a, p);
    if (va < INF && 6 * va < 5 * e) continue;
    long m = 6 / std::gcd(6L, e);
    if (m > best_e) {
      best_e = m;
      best_p = p;
    }
    for (auto it = S.begin(); it != S.end();) it = (*it % m) ? S.erase(it) : std::next(it);
  }
  if (best_e > 1)
    steps.push_back("footnote degree bound at p=" + str(best_p) + " (every factor has degree divisible by " +
                    std::to_string(best_e) + ")");
  if (S.empty()) return {Irreducibility::Proven, steps.back(), std::nullopt};

  /* degree patterns mod small good primes */
  Integer search_prime = 0;
  size_t search_factors = 99;
  std::vector<long> pattern_primes;
  for (long l = 2; l <= 37 || search_prime == 0; ++l) {
    if (l > 1000) break;
    if (!is_prime(Integer(l)) || D % l == 0) continue;
    ModFactorization fl = factor_mod_p(reduce_mod_p(f, Integer(l)));
    std::vector<long> deg;
    for (const auto& [g, e] : fl)
      for (int i = 0; i < e; ++i) deg.push_back(g.degree());
    std::set<long> sums{0};
    for (long d : deg) {
      std::set<long> nxt = sums;
      for (long x : sums) nxt.insert(x + d);
      sums = nxt;
    }
    if (deg.size() < search_factors) {
      search_factors = deg.size();
      search_prime = l;
    }
    if (best_e > 1) continue; /* the degree bound leaves the rest to the search */
    size_t before = S.size();
    for (auto it = S.begin(); it != S.end();) it = sums.count(*it) ? std::next(it) : S.erase(it);
    if (deg.size() == 1) {
      steps.push_back("irreducible mod " + std::to_string(l));
      break;
    }
    if (S.size() < before) pattern_primes.push_back(l);
    if (S.empty()) break;
  }
  if (!pattern_primes.empty() && (steps.empty() || steps.back().rfind("irreducible", 0) != 0)) {
    std::string s = "factorization patterns mod";
    for (size_t i = 0; i < pattern_primes.size(); ++i) s += (i ? "," : " ") + std::to_string(pattern_primes[i]);
    steps.push_back(s);
  }
  auto joined = [&] {
    std::string m;
    for (size_t i = 0; i < steps.size(); ++i) m += (i ? " + " : "") + steps[i];
    return m;
  };
  if (S.empty()) return {Irreducibility::Proven, joined(), std::nullopt};
  if (search_prime == 0) return {Irreducibility::Unknown, joined(), std::nullopt};

  /* exhaustive p-adic search for the remaining factor degrees <= 3 */
  Integer l(search_prime);
  ModFactorization fl = factor_mod_p(reduce_mod_p(f, l));
  std::vector<ModPoly> facs;
  for (const auto& [g, e] : fl)
    for (int i = 0; i < e; ++i) facs.push_back(g);
  Integer norm = 1 + abs(a) + abs(b);
  std::vector<long> searched;
  for (long s : S) {
    if (s > 3) continue;
    searched.push_back(s);
    Integer bound = 2 * binom(s, s / 2) * norm;
    size_t r = facs.size();
    for (unsigned long mask = 1; mask + 1 < (1UL << r); ++mask) {
      ModPoly g0 = ModPoly::constant(l, 1), h0 = ModPoly::constant(l, 1);
      for (size_t i = 0; i < r; ++i) ((mask >> i) & 1 ? g0 : h0) = ((mask >> i) & 1 ? g0 : h0) * facs[i];
      if (g0.degree() != s) continue;
      if (auto w = hensel_try(f, g0, h0, l, bound)) {
        steps.push_back("factor of degree " + std::to_string(s) + " found by Hensel lifting mod " + str(l));
        return {Irreducibility::ProvenReducible, joined(), w};
      }
    }
  }
  std::string s = "no factor of degree";
  for (size_t i = 0; i < searched.size(); ++i) s += (i ? "," : " ") + std::to_string(searched[i]);
  steps.push_back(s + " (exhaustive Hensel search mod " + str(l) + ")");
  return {Irreducibility::Proven, joined(), std::nullopt};
}

}  // namespace sb
