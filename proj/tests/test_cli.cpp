/*
   The sextic_basis executable end to end: exit codes, text and JSON
   reports, determinism.
*/
#include <json.hpp>

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

/* every number in the report is a string */
bool no_json_numbers(const nlohmann::json& j) {
  if (j.is_number()) return false;
  if (j.is_array() || j.is_object())
    for (const auto& x : j)
      if (!no_json_numbers(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("cli: first worked example") {
  Run r = run("--a 0 --b 12");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "case E20"));
  CHECK(contains(r.out, "d_K = -2834352"));
  CHECK(contains(r.out, "(2 + t^3)/4"));
  CHECK(contains(r.out, "(2*t^2 + t^5)/4"));
}

TEST_CASE("cli: json for the third worked example") {
  Run r = run("--a 4 --b 4 --json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["field_discriminant"] == "-546496");
  CHECK(j["index"] == "8");
  CHECK(j["irreducibility"]["verdict"] == "Proven");
  CHECK(j["discriminant"]["value"] == "-34975744");
  CHECK(j["primes"][0]["case"] == "E18");
  CHECK(j["primes"][1]["p"] == "8539");
  CHECK(j["integral_basis"]["rows"][5] == "t^5/2");
  for (const char* k : {"input", "normalization", "irreducibility", "discriminant", "primes", "integral_basis", "index",
                        "field_discriminant", "verification", "warnings"})
    CHECK(j.contains(k));
  CHECK(no_json_numbers(j));
}

TEST_CASE("cli: single prime with explanation") {
  Run r = run("--a 0 --b 135 --prime 3 --explain");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "case F26"));
  CHECK(contains(r.out, "B=5"));
  CHECK(contains(r.out, "polygon phi = x; vertices (0, 0) (6, 3)"));
  CHECK(contains(r.out, "global basis omitted"));

  Run j = run("--a 0 --b 135 --prime 3 --explain --json");
  REQUIRE(j.status == 0);
  auto J = nlohmann::json::parse(j.out);
  CHECK(J["primes"].size() == 1);
  CHECK(J["primes"][0]["params"]["B"] == "5");
  CHECK(J["primes"][0].contains("polygons"));
  CHECK(J["integral_basis"].is_null());
  CHECK(no_json_numbers(J));
}

TEST_CASE("cli: full verification") {
  Run r = run("--a 0 --b 135 --verify full --json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verification"]["ok"] == true);
  CHECK(j["verification"]["level"] == "full");
  for (const auto& c : j["verification"]["checks"]) CHECK(c["ok"] == true);
  CHECK(j["field_discriminant"] == "-6834375");
}

TEST_CASE("cli: pure cross-check") {
  Run r = run("--a 0 --b 12 --pure --json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  bool seen = false;
  for (const auto& c : j["verification"]["checks"])
    if (c["name"] == "pure sextic closed form") seen = c["ok"] == true;
  CHECK(seen);
  Run s = run("--a 3 --b 12 --pure");
  CHECK(s.status == 0);
  CHECK(contains(s.out, "--pure ignored"));
}

TEST_CASE("cli: normalization") {
  Run r = run("--a 224 --b 320 --json");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["normalization"]["a"] == "7");
  CHECK(j["normalization"]["b"] == "5");
  CHECK(j["normalization"]["scale"] == "2");
  CHECK(!j["warnings"].empty());
}

TEST_CASE("cli: reducible input") {
  Run r = run("--a 2 --b 1");
  CHECK(r.status == 2);
  CHECK(contains(r.out, "ProvenReducible"));
  CHECK(run("--a 5 --b 0").status == 2);
  Run j = run("--a 2 --b 1 --json");
  CHECK(j.status == 2);
  CHECK(nlohmann::json::parse(j.out)["irreducibility"]["witness"] == "x + 1");
  /* zero discriminant: double root at 1 */
  Run d = run("--a -6 --b 5 --json");
  CHECK(d.status == 2);
  CHECK(nlohmann::json::parse(d.out)["irreducibility"]["witness"] == "x - 1");
}

TEST_CASE("cli: usage errors") {
  CHECK(run("--a x --b 1").status == 64);
  CHECK(run("--a 1").status == 64);
  CHECK(run("--a 1 --b 1 --verify bogus").status == 64);
  CHECK(run("--a 1 --b 1 --prime 4").status == 64);
  CHECK(run("--a 1 --b 1 --frobnicate").status == 64);
}

TEST_CASE("cli: deterministic output") {
  for (const char* args : {"--a 0 --b 135 --explain --verify full", "--a -64078 --b 536874557 --json"}) {
    Run r1 = run(args), r2 = run(args);
    CHECK(r1.status == r2.status);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("cli: unfactored discriminant is reported") {
  Run r = run("--a -64078 --b 536874557 --factor-budget 1000");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "not factored"));
}
