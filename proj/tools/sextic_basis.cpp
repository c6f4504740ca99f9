/*
   sextic_basis: integral basis and field discriminant of Q(theta),
   theta a root of x^6 + a x + b.

   Exit status: 0 success, 2 reducible, 1 internal failure, 64 usage.
*/
#include "sb/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Integral basis of a sextic trinomial field"};
  std::string a_str, b_str, prime_str, verify = "basic";
  unsigned long budget = 0;
  bool as_json = false, explain = false, pure = false;
  app.add_option("--a", a_str, "coefficient a")->required();
  app.add_option("--b", b_str, "coefficient b")->required();
  app.add_option("--prime", prime_str, "restrict to one prime");
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--explain", explain, "show case parameters and Newton polygons");
  app.add_option("--verify", verify, "verification level")->check(CLI::IsMember({"none", "basic", "full"}));
  app.add_option("--factor-budget", budget, "Pollard rho iterations for factoring D");
  app.add_flag("--pure", pure, "cross-check a = 0 against the pure sextic formula");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  sb::PipelineOptions opt;
  sb::Integer a, b;
  try {
    a = sb::parse_integer(a_str);
    b = sb::parse_integer(b_str);
    if (!prime_str.empty()) opt.prime = sb::parse_integer(prime_str);
  } catch (const sb::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  opt.verify = verify == "none" ? sb::VerifyLevel::None : verify == "full" ? sb::VerifyLevel::Full : sb::VerifyLevel::Basic;
  if (budget) opt.budget.rho_iterations = budget;
  opt.explain = explain;
  opt.pure = pure;

  try {
    sb::Report r = sb::run_pipeline(a, b, opt);
    if (as_json) std::cout << sb::to_json(r).dump(2) << "\n";
    else std::cout << sb::to_text(r);
    return r.exit_code;
  } catch (const sb::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
