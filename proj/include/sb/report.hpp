/*
   End-to-end pipeline for one trinomial: normalize, decide irreducibility,
   factor D, build and combine local bases, verify, and render the result
   as text or JSON.
*/
#ifndef SB_REPORT_HPP
#define SB_REPORT_HPP

#include "sb/basis.hpp"
#include "sb/newton.hpp"
#include "sb/sextic.hpp"
#include "sb/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sb {

enum class VerifyLevel { None, Basic, Full };

struct PipelineOptions {
  std::optional<Integer> prime;
  VerifyLevel verify = VerifyLevel::Basic;
  FactorBudget budget;
  bool explain = false;
  bool pure = false;
};

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

struct PrimeReport {
  PAdicBasis local;
  std::optional<OreResult> ore; /* filled for --explain and full verification */
};

struct Report {
  TrinomialField field;
  IrreducibilityResult irreducibility;
  PrimeFactorization Dfac;
  std::vector<PrimeReport> primes;
  std::optional<IntegralBasis> basis; /* absent when reducible or restricted to one prime */
  std::optional<Integer> index, dK;
  VerifyLevel level = VerifyLevel::Basic;
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  bool explain = false;
  int exit_code = 0;
  bool verified() const;
};

Report run_pipeline(const Integer& a, const Integer& b, const PipelineOptions& opt);

/* "(c0 + c1*t + ... + t^i)/d" with zero terms dropped */
std::string format_row(const std::vector<Integer>& c, const Integer& d, const std::string& var = "t");

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace sb

#endif
