/*
   The pipeline behind the command line tool, plus its two renderings.
*/
#include "sb/report.hpp"

#include <sstream>

namespace sb {

using json = nlohmann::ordered_json;

bool Report::verified() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string format_row(const std::vector<Integer>& c, const Integer& d, const std::string& var) {
  auto mono = [&](size_t j) -> std::string {
    if (j == 0) return "";
    return j == 1 ? var : var + "^" + std::to_string(j);
  };
  std::vector<std::string> terms;
  for (size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    std::string s = to_string(Integer(abs(c[j])));
    if (j > 0) s = c[j] == 1 || c[j] == -1 ? mono(j) : s + "*" + mono(j);
    terms.push_back((c[j] < 0 ? "-" : "") + s);
  }
  terms.push_back(c.empty() ? "1" : mono(c.size()));
  std::string num;
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string& t = terms[i];
    if (i == 0) num = t;
    else if (t[0] == '-') num += " - " + t.substr(1);
    else num += " + " + t;
  }
  if (d == 1) return num;
  if (terms.size() > 1 || num[0] == '-') num = "(" + num + ")";
  return num + "/" + to_string(d);
}

namespace {

long sum_k(const PAdicBasis& B) { return B.sum_k(); }

void add(Report& R, std::string name, bool ok, std::string detail = "") {
  R.checks.push_back({std::move(name), ok, std::move(detail)});
}

IntegralBasis single(const PAdicBasis& L) { return canonicalize(combine({L})); }

void verify_basis(Report& R, const IntegralBasis& B, const std::vector<PrimeReport>& primes, const PipelineOptions& opt) {
  const IntPoly& f = R.field.f;
  bool rows_ok = true;
  std::string bad;
  for (size_t i = 0; i < 6; ++i)
    if (!is_integral(B.numerator(i), B.t[i], f)) {
      rows_ok = false;
      bad += " row" + std::to_string(i);
    }
  add(R, "rows integral", rows_ok, bad);
  Integer idx = lattice_index(B);
  add(R, "lattice index", idx == B.index(), to_string(idx));
  for (const auto& P : primes) {
    const Integer& p = P.local.cls.p;
    auto k = local_exponents(B, p);
    bool same = true;
    for (size_t i = 0; i < 6; ++i) same = same && k[i] == P.local.rows[i].k;
    add(R, "local exponents p=" + to_string(p), same);
  }
  if (opt.verify != VerifyLevel::Full) return;
  OrderPresentation O;
  try {
    O = make_order(f, B);
  } catch (const ArgumentError& e) {
    add(R, "closed under multiplication", false, e.what());
    return;
  }
  for (const auto& P : primes) {
    const Integer& p = P.local.cls.p;
    if (!P.local.cls.p_divides_D) continue;
    MaximalityResult M = maximality_test(O, p);
    add(R, "p-maximal p=" + to_string(p), M.maximal, "radical dim " + std::to_string(M.radical_dimension));
    bool ded = dedekind_maximal_at_p(f, p);
    add(R, "Dedekind agrees p=" + to_string(p), ded == (sum_k(P.local) == 0));
    if (P.ore) {
      long s = sum_k(P.local);
      bool ok = ore_certified(P.local.cls.label) ? (P.ore->exact && P.ore->lower_bound == s)
                                                 : (P.ore->lower_bound <= s && (!P.ore->exact || P.ore->lower_bound == s));
      add(R, "Ore index p=" + to_string(p), ok,
          "bound " + std::to_string(P.ore->lower_bound) + (P.ore->exact ? " exact" : " lower") + ", table " +
              std::to_string(s));
    }
  }
}

}  // namespace

Report run_pipeline(const Integer& a, const Integer& b, const PipelineOptions& opt) {
  Report R;
  R.level = opt.verify;
  R.explain = opt.explain;
  /* b = 0 or a repeated root: no field to normalize */
  if (b == 0 || 3125 * ipow(a, 6) == 46656 * ipow(b, 5)) {
    R.field.a0 = R.field.a = a;
    R.field.b0 = R.field.b = b;
    R.field.scale = 1;
    R.irreducibility = irreducibility_check(a, b, opt.budget);
    R.exit_code = 2;
    return R;
  }
  R.field = normalize(a, b, opt.budget);
  const TrinomialField& T = R.field;
  if (!T.removed.empty()) {
    std::string s = "normalized by theta -> theta/" + to_string(T.scale);
    R.warnings.push_back(s);
  }
  if (!T.search_complete) R.warnings.push_back("gcd(a, b) not fully factored; normalization may be incomplete");

  R.irreducibility = irreducibility_check(T.a, T.b, opt.budget);
  if (R.irreducibility.verdict == Irreducibility::ProvenReducible) {
    R.exit_code = 2;
    return R;
  }
  if (R.irreducibility.verdict == Irreducibility::Unknown)
    R.warnings.push_back("irreducibility not decided; results assume f is irreducible");

  R.Dfac = factor(T.D, opt.budget);
  if (!R.Dfac.complete())
    R.warnings.push_back("discriminant cofactor " + to_string(R.Dfac.cofactor) +
                         " not factored; the basis is maximal only at the listed primes");

  std::vector<Integer> ps;
  if (opt.prime) {
    if (!is_prime(*opt.prime)) throw ArgumentError("--prime must be a prime");
    ps.push_back(*opt.prime);
  } else {
    for (const auto& [p, e] : R.Dfac.factors) ps.push_back(p);
  }
  std::vector<PAdicBasis> locals;
  for (const auto& p : ps) {
    PrimeReport P{p_integral_basis(T.a, T.b, p), std::nullopt};
    if ((opt.explain || opt.verify == VerifyLevel::Full) && P.local.cls.p_divides_D)
      P.ore = ore_index(T.f, p, P.local.cls.params.translations);
    locals.push_back(P.local);
    R.primes.push_back(std::move(P));
  }
  for (const auto& P : R.primes) {
    const auto& C = P.local.cls;
    add(R, "bookkeeping p=" + to_string(C.p), 2 * P.local.sum_k() + C.vp_dK == C.vpD,
        C.label + ": 2*" + std::to_string(P.local.sum_k()) + " + " + std::to_string(C.vp_dK) + " = " +
            std::to_string(C.vpD));
  }

  if (!opt.prime) {
    IntegralBasis B = canonicalize(combine(locals));
    R.basis = B;
    R.index = B.index();
    R.dK = field_discriminant(T.D, *R.index);
    if (opt.verify != VerifyLevel::None) verify_basis(R, B, R.primes, opt);
    if (opt.pure) {
      if (T.a != 0) R.warnings.push_back("--pure ignored: a != 0");
      else {
        try {
          Integer d = pure_sextic_discriminant(T.b, opt.budget);
          add(R, "pure sextic closed form", d == *R.dK, to_string(d));
        } catch (const ArgumentError& e) {
          R.warnings.push_back(std::string("--pure skipped: ") + e.what());
        }
      }
    }
  } else {
    R.warnings.push_back("restricted to p=" + to_string(ps[0]) + "; global basis omitted");
    if (opt.verify != VerifyLevel::None) verify_basis(R, single(locals[0]), R.primes, opt);
  }
  R.exit_code = R.verified() ? 0 : 1;
  return R;
}

/* ---- rendering ---- */

namespace {

json polygon_json(const FactorTrace& tr) {
  json j;
  j["factor"] = to_string(tr.factor);
  j["multiplicity"] = std::to_string(tr.multiplicity);
  j["phi"] = to_string(tr.phi);
  json v = json::array();
  for (const auto& [x, y] : tr.polygon.vertices) v.push_back({std::to_string(x), std::to_string(y)});
  j["vertices"] = v;
  json pts = json::array();
  for (const auto& q : tr.polygon.points) pts.push_back({std::to_string(q.i), q.y.str()});
  j["points"] = pts;
  json res = json::array();
  for (size_t k = 0; k < tr.residuals.size(); ++k) {
    const auto& A = tr.residuals[k];
    res.push_back({{"slope", std::to_string(A.d) + "/" + std::to_string(A.e)},
                   {"residual", to_string(A.T)},
                   {"squarefree", static_cast<bool>(tr.squarefree[k])}});
  }
  j["edges"] = res;
  j["index"] = std::to_string(tr.index);
  return j;
}

std::vector<std::string> row_strings(const std::array<BasisRow, 6>& rows, const Integer& p) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(format_row(r.c, ipow(p, r.k)));
  return out;
}

}  // namespace

json to_json(const Report& r) {
  const TrinomialField& T = r.field;
  json j;
  j["input"] = {{"a", to_string(T.a0)}, {"b", to_string(T.b0)}};
  json removed = json::array();
  for (const auto& [p, n] : T.removed) removed.push_back({to_string(p), std::to_string(n)});
  j["normalization"] = {{"a", to_string(T.a)}, {"b", to_string(T.b)}, {"scale", to_string(T.scale)}, {"removed", removed}};
  json irr = {{"verdict", to_string(r.irreducibility.verdict)}, {"method", r.irreducibility.method}};
  irr["witness"] = r.irreducibility.witness ? json(to_string(*r.irreducibility.witness)) : json(nullptr);
  j["irreducibility"] = irr;
  if (r.irreducibility.verdict == Irreducibility::ProvenReducible) {
    j["discriminant"] = nullptr;
    j["primes"] = json::array();
    j["integral_basis"] = nullptr;
    j["index"] = nullptr;
    j["field_discriminant"] = nullptr;
    j["verification"] = nullptr;
    j["warnings"] = r.warnings;
    return j;
  }
  json fac = json::array();
  for (const auto& [p, e] : r.Dfac.factors) fac.push_back({to_string(p), std::to_string(e)});
  j["discriminant"] = {{"value", to_string(T.D)},
                       {"factors", fac},
                       {"complete", r.Dfac.complete()},
                       {"cofactor", to_string(r.Dfac.cofactor)}};
  json primes = json::array();
  for (const auto& P : r.primes) {
    const auto& C = P.local.cls;
    json params = json::object();
    for (const auto& [k, v] : C.params.entries) params[k] = v;
    json ks = json::array();
    for (const auto& row : P.local.rows) ks.push_back(std::to_string(row.k));
    json e = {{"p", to_string(C.p)},
              {"case", C.label},
              {"v_p(D)", std::to_string(C.vpD)},
              {"v_p(D) claim", C.claim.str()},
              {"v_p(d_K)", std::to_string(C.vp_dK)},
              {"params", params},
              {"exponents", ks},
              {"rows", row_strings(P.local.rows, C.p)}};
    if (r.explain && P.ore) {
      json polys = json::array();
      for (const auto& tr : P.ore->factors) polys.push_back(polygon_json(tr));
      e["polygons"] = polys;
      e["ore"] = {{"lower_bound", std::to_string(P.ore->lower_bound)}, {"exact", P.ore->exact}};
    }
    primes.push_back(e);
  }
  j["primes"] = primes;
  if (r.basis) {
    json rows = json::array(), dens = json::array(), nums = json::array();
    for (size_t i = 0; i < 6; ++i) {
      rows.push_back(format_row(r.basis->c[i], r.basis->t[i]));
      dens.push_back(to_string(r.basis->t[i]));
      json c = json::array();
      for (const auto& x : r.basis->c[i]) c.push_back(to_string(x));
      nums.push_back(c);
    }
    j["integral_basis"] = {{"rows", rows}, {"denominators", dens}, {"numerators", nums}};
    j["index"] = to_string(*r.index);
    j["field_discriminant"] = to_string(*r.dK);
  } else {
    j["integral_basis"] = nullptr;
    j["index"] = nullptr;
    j["field_discriminant"] = nullptr;
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  const char* lv = r.level == VerifyLevel::None ? "none" : r.level == VerifyLevel::Basic ? "basic" : "full";
  j["verification"] = {{"level", lv}, {"ok", r.verified()}, {"checks", checks}};
  j["warnings"] = r.warnings;
  return j;
}

std::string to_text(const Report& r) {
  const TrinomialField& T = r.field;
  std::ostringstream os;
  os << "f = x^6 + (" << to_string(T.a0) << ")*x + (" << to_string(T.b0) << ")\n";
  if (!T.removed.empty())
    os << "normalized: a = " << to_string(T.a) << ", b = " << to_string(T.b) << " (theta = theta0/"
       << to_string(T.scale) << ")\n";
  os << "irreducibility: " << to_string(r.irreducibility.verdict);
  if (!r.irreducibility.method.empty()) os << " [" << r.irreducibility.method << "]";
  if (r.irreducibility.witness) os << " factor " << to_string(*r.irreducibility.witness);
  os << "\n";
  if (r.irreducibility.verdict == Irreducibility::ProvenReducible) {
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
  }
  os << "D = " << to_string(T.D) << " =";
  if (r.Dfac.sign < 0) os << " -1";
  for (const auto& [p, e] : r.Dfac.factors) os << " " << to_string(p) << "^" << e;
  if (!r.Dfac.complete()) os << " * [" << to_string(r.Dfac.cofactor) << "]";
  os << "\n";
  for (const auto& P : r.primes) {
    const auto& C = P.local.cls;
    os << "p = " << to_string(C.p) << ": case " << C.label << ", v_p(D) = " << C.vpD << ", v_p(d_K) = " << C.vp_dK
       << "\n";
    if (!C.params.entries.empty()) {
      os << "  params:";
      for (const auto& [k, v] : C.params.entries) os << " " << k << "=" << v;
      os << "\n";
    }
    for (const auto& s : row_strings(P.local.rows, C.p)) os << "  " << s << "\n";
    if (r.explain && P.ore) {
      for (const auto& tr : P.ore->factors) {
        os << "  polygon " << tr.polygon.dump() << "; index " << tr.index << "\n";
        for (size_t k = 0; k < tr.residuals.size(); ++k)
          os << "    slope=" << tr.residuals[k].d << "/" << tr.residuals[k].e << " residual " << to_string(tr.residuals[k].T)
             << (tr.squarefree[k] ? " squarefree" : " not squarefree") << "\n";
      }
      os << "  Ore bound " << P.ore->lower_bound << (P.ore->exact ? " (exact)" : " (lower bound)") << "\n";
    }
  }
  if (r.basis) {
    os << "integral basis (t = theta):\n";
    for (size_t i = 0; i < 6; ++i) os << "  " << format_row(r.basis->c[i], r.basis->t[i]) << "\n";
    os << "index = " << to_string(*r.index) << "\n";
    os << "d_K = " << to_string(*r.dK) << "\n";
  }
  if (r.level != VerifyLevel::None) {
    os << "verification: " << (r.verified() ? "ok" : "FAILED") << "\n";
    for (const auto& c : r.checks)
      if (!c.ok || r.level == VerifyLevel::Full)
        os << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace sb
