#include <gtest/gtest.h>

#include <json.hpp>

#include "fpti/cli.hpp"

using namespace fpti;
using namespace fpti::cli;

namespace {

const char* kCusp = "char: 2\nvars: x y\nideal:\n  y^2 + x^3\n";

Options json_opts() {
  Options o;
  o.format = "json";
  return o;
}

nlohmann::json result_of(const Report& r) { return nlohmann::json::parse(r.out)["result"]; }

}  // namespace

TEST(ParseInput, Cusp) {
  auto s = parse_input(kCusp);
  EXPECT_EQ(s.p, 2u);
  EXPECT_EQ(s.vars, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(s.generators.size(), 1u);
  EXPECT_EQ(to_string(s.generators[0]), "x^3 + y^2");
  EXPECT_EQ(s.order_text, "grevlex");
}

TEST(ParseInput, OptionalFieldsAndComments) {
  auto s = parse_input("# header\nchar: 3\nvars: x, y\norder: lex pot\nideal: x*y, y^2\nc: x + y  # note\nu: y\n");
  EXPECT_EQ(s.order.mono, MonoOrder::Lex);
  EXPECT_EQ(s.generators.size(), 2u);
  EXPECT_EQ(*s.c, "x + y");
  EXPECT_EQ(*s.u, "y");
}

TEST(ParseInput, Errors) {
  auto kind = [](const std::string& text) {
    try {
      parse_input(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  };
  EXPECT_EQ(kind("char: 6\nvars: x\nideal:\n  x\n"), ErrorKind::NotPrime);
  EXPECT_EQ(kind("char: 2\nvars: x y\nideal:\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind("char: two\nvars: x\nideal:\n  x\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind("char: 2\nvars: x\nideal:\n  x^^2\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind("char: 2\nvars: x\nfoo: 1\nideal:\n  x\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind("char: 2\nvars: x x\nideal:\n  x\n"), ErrorKind::DuplicateVariable);
  EXPECT_EQ(kind("char: 2\nvars: x\n  x\n"), ErrorKind::ParseError);
  try {
    parse_input("char: 2\nvars: x\nideal:\n  x^^2\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(Run, TauOnCusp) {
  auto r = run_text("tau", kCusp, json_opts());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["command"], "tau");
  EXPECT_EQ(doc["ring"]["char"], 2);
  EXPECT_EQ(doc["ring"]["order"], "grevlex");
  EXPECT_EQ(doc["result"]["generators"], nlohmann::json::array({"x", "y"}));
}

TEST(Run, HslOnCusp) {
  Options o = json_opts();
  o.j = 1;
  o.j_set = true;
  o.emax = 5;
  auto r = run_text("hsl", kCusp, o);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto res = result_of(r);
  EXPECT_EQ(res["eta"], 1);
  EXPECT_EQ(res["loci"], nlohmann::json::array({nlohmann::json::array({"x", "y"})}));
}

TEST(Run, HslCapIsExitThreeWithPartialChain) {
  Options o = json_opts();
  o.j = 1;
  o.j_set = true;
  o.emax = 1;
  auto r = run_text("hsl", kCusp, o);
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_TRUE(result_of(r)["eta"].is_null());
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_text("tau", "char: 2\nvars: x y\nideal:\n  x^2\n", {}).exit_code, 2);
  EXPECT_EQ(run_text("tau", "char: 6\nvars: x y\nideal:\n  x^2\n", {}).exit_code, 1);
  EXPECT_EQ(run_text("bogus", kCusp, {}).exit_code, 1);
  EXPECT_EQ(run_text("ext", kCusp, {}).exit_code, 1);
  Options cap;
  cap.cap_iterations = 1;
  EXPECT_EQ(run_text("tau", kCusp, cap).exit_code, 3);
  Options big;
  big.e = 40;
  EXPECT_EQ(run_text("froot", kCusp, big).exit_code, 3);
}

TEST(Run, UserSuppliedTestElement) {
  auto r = run_text("tau", std::string(kCusp) + "c: x^4\n", json_opts());
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(result_of(r)["c_provenance"], "user-supplied");
  EXPECT_EQ(result_of(r)["generators"], nlohmann::json::array({"x", "y"}));
}

TEST(Run, EveryCommandIsDeterministicAndVerifies) {
  const std::string planes = "char: 2\nvars: x y u v\nideal:\n  x*u\n  x*v\n  y*u\n  y*v\n";
  for (const auto& input : {std::string(kCusp), planes}) {
    for (const auto& cmd : commands()) {
      Options o;
      o.verify = true;
      o.i = o.j = 1;
      o.i_set = o.j_set = true;
      auto a = run_text(cmd, input, o), b = run_text(cmd, input, o);
      EXPECT_EQ(a.exit_code, 0) << cmd << ": " << a.err;
      EXPECT_EQ(a.out, b.out) << cmd;
      EXPECT_EQ(a.out.find("verify: failed"), std::string::npos) << cmd;
    }
  }
}

TEST(Run, PrintedIdealsReparse) {
  const std::string input = "char: 3\nvars: x y z\nideal:\n  x^2*y - z^3\n  y^2 + x*z\n";
  auto r = run_text("gb", input, json_opts());
  ASSERT_EQ(r.exit_code, 0);
  auto spec = parse_input(input);
  std::vector<Polynomial> back;
  auto gens = result_of(r)["generators"];
  for (const auto& g : gens) back.push_back(parse_polynomial(spec.ring, g.get<std::string>()));
  EXPECT_TRUE(module_equal(Ideal::ideal(spec.ring, back), Ideal::ideal(spec.ring, spec.generators)));
}

TEST(Run, StarWithExplicitU) {
  auto r = run_text("star", "char: 2\nvars: x y\nideal:\n  y^2 + x^3\n  x^2\nu: y^2 + x^3\n", json_opts());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(result_of(r)["generators"], nlohmann::json::array({"x", "y"}));
  EXPECT_EQ(result_of(r)["iterations"], 3);
}
