#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "eisenbox/cli.hpp"

namespace {

using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = eisenbox::run(args, out, err);
  return {code, out.str(), err.str()};
}

void check_error(const Outcome& o, int exit, const std::string& code) {
  CHECK(o.code == exit);
  CHECK(o.out.empty());
  REQUIRE_FALSE(o.err.empty());
  CHECK(o.err.back() == '\n');
  CHECK(o.err.find('\n') == o.err.size() - 1);
  Json e = o.error();
  CHECK(e.at("kind") == "error");
  CHECK(e.at("schema") == "eisenbox/1");
  CHECK(e.at("code") == code);
  CHECK(e.at("exit") == exit);
  CHECK(e.at("message").is_string());
}

}  // namespace

TEST_CASE("parse verb") {
  Outcome o = call({"parse", "--poly", "y^2 - (1+x)"});
  REQUIRE(o.code == 0);
  CHECK(o.err.empty());
  Json j = o.json();
  CHECK(j.at("kind") == "parsed");
  CHECK(j.at("schema") == "eisenbox/1");
  CHECK(j.at("canonical") == "-1 - x + y^2");
  CHECK(j.at("names") == Json::array({"x", "y"}));
  CHECK(j.at("polynomial").at("kind") == "polynomial");
  CHECK_FALSE(j.at("polynomial").contains("schema"));
}

TEST_CASE("expand verb") {
  Json j = call({"expand", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "4"}).json();
  CHECK(j.at("kind") == "puiseux_series");
  std::vector<std::string> c;
  for (const auto& t : j.at("terms")) c.push_back(t.at("c"));
  CHECK(c == std::vector<std::string>{"1", "1/2", "-1/8", "1/16", "-5/128"});

  Json m = call({"expand", "--poly", "y^2-(1+x1+x2)", "--seed", "1", "--cap", "3"}).json();
  CHECK(m.at("kind") == "tseries");
  CHECK(m.at("cap") == 3);
}

TEST_CASE("eisenstein verbs") {
  Json c = call({"eisenstein", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "50"}).json();
  CHECK(c.at("kind") == "certificate");
  CHECK(c.at("a_final") == 4);
  CHECK(c.at("lambda") == "2");
  CHECK(c.at("s_min") == "1/2");
  CHECK(c.at("verified_to") == 50);
  CHECK(call({"eisenstein", "certify", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "50"}).json() == c);

  Json pass = call({"eisenstein", "verify", "--poly", "y^2-(1+x)", "--seed", "1", "--a", "4", "--order", "30"}).json();
  CHECK(pass.at("pass") == true);
  CHECK(pass.at("index").is_null());
  Json fail = call({"eisenstein", "verify", "--poly", "y^2-(1+x)", "--seed", "1", "--a", "2", "--order", "30"}).json();
  CHECK(fail.at("pass") == false);
  CHECK(fail.at("index") == 4);

  Json s = call({"eisenstein", "search", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "30", "--bound", "10"}).json();
  CHECK(s.at("kind") == "search_report");
  CHECK(s.at("search").at("found") == 4);
}

TEST_CASE("puiseux verb") {
  Outcome ok = call({"puiseux", "--poly", "y^2 - x^3", "--order", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.json().at("branches").size() == 2);

  // Branches over an extension: result printed, then exit 3.
  Outcome ext = call({"puiseux", "--poly", "y^2 + x^2", "--order", "4"});
  CHECK(ext.code == 3);
  CHECK(ext.json().at("extensions").size() >= 1);
  CHECK(Json::parse(ext.err).at("code") == "extension_required");
}

TEST_CASE("graded and dfinite verbs") {
  Json g = call({"graded", "lift", "--poly", "(x1+x2)*y^2 + (x1+x2)*y - x1^2", "--seed", "0", "--omega", "1,1",
                 "--cap", "3"})
               .json();
  CHECK(g.at("kind") == "graded_series");
  Json cone = call({"graded", "cone", "--poly", "(x1+x2)*y^2 + (x1+x2)*y - x1^2", "--seed", "0", "--omega",
                    "1,1", "--cap", "6", "--direction", "1,2"})
                  .json();
  CHECK(cone.at("kind") == "cone");
  CHECK(cone.at("strongly_convex") == true);
  Json psi = call({"graded", "psi", "--lambda", "1", "--omega", "1,2", "--beta", "1,1"}).json();
  CHECK(psi.at("chi") == "4");

  Json seq = call({"dfinite", "expand", "--ode", "f' - f = 0", "--init", "1", "--count", "5"}).json();
  CHECK(seq.at("coefficients") == Json::array({"1", "1", "1/2", "1/6", "1/24"}));
  Json rec = call({"dfinite", "ode2rec", "--ode", "f' - f = 0"}).json();
  CHECK(rec.at("kind") == "recurrence");
  Json ode = call({"dfinite", "alg2ode", "--poly", "y^2-(1+x)", "--seed", "1"}).json();
  CHECK(ode.at("kind") == "linear_ode");
  Json pr = call({"dfinite", "primes", "--ode", "f' - f = 0", "--init", "1", "--count", "5"}).json();
  CHECK(pr.at("s") == Json::array({0, 0, 1, 2, 4}));
  Json pa = call({"dfinite", "padic", "--ode", "f' - f = 0", "--init", "1", "--count", "5", "--p", "2"}).json();
  CHECK(pa.at("valuations") == Json::array({0, 0, -1, -1, -3}));
}

TEST_CASE("weierstrass verbs") {
  Json d = call({"weierstrass", "divide", "--g", "x2^3", "--f", "x2^2 - x1", "--cap", "6"}).json();
  CHECK(d.at("kind") == "division");
  CHECK(d.at("q").at("terms").size() == 1);
  Json p = call({"weierstrass", "prepare", "--f", "(x2^2 - x1)*(1 + x1 + x2)", "--cap", "6"}).json();
  CHECK(p.at("kind") == "preparation");
  CHECK(p.at("d") == 2);
  check_error(call({"weierstrass", "prepare", "--f", "x1*x2", "--cap", "4"}), 3, "regularity_failure");
}

TEST_CASE("table format") {
  Outcome t = call({"--format", "table", "expand", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("kind  puiseux_series") != std::string::npos);
  CHECK(t.out.find("-1/8") != std::string::npos);
  CHECK(t.out.find('{') == std::string::npos);
  Outcome seq = call({"--format", "table", "dfinite", "primes", "--ode", "f' - f = 0", "--init", "1", "--count",
                      "4"});
  CHECK(seq.out.find("l  ratio") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
  check_error(call({}), 2, "usage");
  check_error(call({"bogus"}), 2, "usage");
  check_error(call({"expand", "--poly", "y^2-(1+x", "--seed", "1"}), 2, "syntax_error");
  check_error(call({"expand", "--poly", "y^2-(1+x)"}), 2, "missing_flag");
  check_error(call({"expand", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "abc"}), 2, "bad_value");
  check_error(call({"expand", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "-1"}), 2, "bad_value");
  check_error(call({"expand", "--poly", "y^2-(1+x)", "--seed", "1", "--order", "5000"}), 2, "too_large");
  check_error(call({"dfinite", "padic", "--ode", "f' - f = 0", "--init", "1", "--p", "6"}), 2, "bad_value");
  check_error(call({"dfinite", "expand", "--ode", "f' - f = 0", "--init", "1", "--poly", "y-x", "--seed", "0"}), 2,
              "conflicting_flags");
  check_error(call({"graded", "lift", "--poly", "(x1+x2)*y - x1^2", "--seed", "0", "--omega", "1,1,1"}), 2,
              "bad_weights");
  check_error(call({"graded", "cone", "--poly", "(x1+x2)*y - x1^2", "--seed", "0", "--omega", "1,1",
                    "--direction", "3,1"}),
              2, "bad_direction");
  check_error(call({"--format", "xml", "parse", "--poly", "y"}), 2, "usage");
}

TEST_CASE("math errors exit 3") {
  check_error(call({"expand", "--poly", "y^2-x^2", "--seed", "0", "--order", "3"}), 3, "non_simple_root");
  check_error(call({"graded", "psi", "--lambda", "1", "--omega", "1,1", "--beta", "-1,0"}), 3, "singular_map");
}

TEST_CASE("size guard override") {
  Outcome o = call({"--allow-large", "expand", "--poly", "y-1-x", "--seed", "1", "--order", "2500"});
  CHECK(o.code == 0);
}

TEST_CASE("factorization cap from the environment") {
  const std::string n = "1000036000099";  // 1000003 * 1000033
  std::vector<std::string> args{"dfinite", "primes", "--poly", n + "*y - 1 - x", "--seed", "1/" + n, "--count", "3"};
  Outcome o = call(args);
  check_error(o, 3, "unfactored_residue");
  CHECK(o.error().at("residue") == n);

  setenv("EISENBOX_FACTOR_CAP", "2000000000000", 1);
  Outcome big = call(args);
  CHECK(big.code == 0);
  CHECK(big.json().at("s") == Json::array({2, 2, 2}));
  setenv("EISENBOX_FACTOR_CAP", "abc", 1);
  check_error(call(args), 2, "bad_env");
  unsetenv("EISENBOX_FACTOR_CAP");
}

TEST_CASE("help exits 0") {
  Outcome h = call({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("Subcommands") != std::string::npos);
}
