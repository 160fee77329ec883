#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bruhatkit/cli.hpp"
#include "bruhatkit/errors.hpp"

using namespace bruhatkit;
using namespace bruhatkit::cli;

namespace {

const char* kG2 = R"(
type: G2
elliptic_coeffs: [1, -2]
involution_coweight: [0, 1]
tasks: [grade, stratify, criterion]
)";

}  // namespace

TEST(Config, ParsesFlatYaml) {
  const auto c = parse_config(kG2);
  EXPECT_EQ(c.type_label, std::optional<std::string>("G2"));
  EXPECT_EQ(c.elliptic_coeffs, (RationalVector{1, -2}));
  EXPECT_EQ(c.involution_coweight, (std::optional<std::vector<std::int64_t>>({0, 1})));
  EXPECT_EQ(c.tasks, (std::vector<Task>{Task::grade, Task::stratify, Task::criterion}));
  EXPECT_EQ(c.weyl_cap, kDefaultWeylCap);
  EXPECT_EQ(c.seed, 0u);
}

TEST(Config, RationalStringsAndMatrices) {
  const auto c = parse_config(R"(
cartan: [[2, -1], [-1, 2]]
elliptic_coeffs: ["1/2", 3/4]
tasks: [grade]
seed: 9
)");
  EXPECT_EQ(c.elliptic_coeffs, (RationalVector{Rational(1, 2), Rational(3, 4)}));
  EXPECT_EQ(c.cartan->size(), 2u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_NO_THROW(validate(c));
}

TEST(Config, ValidationErrors) {
  EXPECT_THROW(parse_config("type: [unclosed"), ValidationError);
  EXPECT_THROW(parse_config("- a\n- b\n"), ValidationError);
  EXPECT_THROW(parse_config("type: G2\nbogus: 1\n"), ValidationError);
  EXPECT_THROW(parse_config("type: G2\ntasks: [dance]\n"), ValidationError);
  EXPECT_THROW(parse_config("type: G2\nelliptic_coeffs: [x]\n"), ValidationError);
  EXPECT_THROW(parse_config("weyl_cap: 0\n"), ValidationError);
  EXPECT_THROW(validate(parse_config("type: G2\nelliptic_coeffs: [1, 0]\n")), ValidationError);
  EXPECT_THROW(validate(parse_config("type: G2\nelliptic_coeffs: [1, 0]\ntasks: [criterion]\n")), ValidationError);
  EXPECT_THROW(validate(parse_config("type: G2\nelliptic_coeffs: [1]\ntasks: [grade]\n")), ValidationError);
  EXPECT_THROW(validate(parse_config("type: X9\nelliptic_coeffs: [1]\ntasks: [grade]\n")), ValidationError);
  EXPECT_THROW(validate(parse_config("elliptic_coeffs: [1]\ntasks: [grade]\n")), ValidationError);
  EXPECT_THROW(run(parse_config("cartan: [[2, -2], [-2, 2]]\nelliptic_coeffs: [1, 0]\ntasks: [grade]\n")),
               ValidationError);
  EXPECT_NO_THROW(validate(parse_config("tasks: [lowrank_suite]\n")));
}

TEST(Run, G2Example) {
  const auto r = run(parse_config(kG2));
  EXPECT_FALSE(r.identity_failure);
  const auto& j = r.report;
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_EQ(j["grade"]["levi_size"], 2);
  EXPECT_EQ(j["stratify"]["cells"].size(), 6u);
  EXPECT_EQ(j["criterion"]["holds"], true);
  EXPECT_FALSE(j["criterion"]["note"].is_null());
  EXPECT_FALSE(j.contains("identities"));
  EXPECT_EQ(j["root_system"]["positive_roots"][3]["root"], "2a1+a2");
}

TEST(Run, CapExceeded) {
  auto c = parse_config(kG2);
  c.weyl_cap = 5;
  EXPECT_THROW(run(c), CapExceeded);
}

TEST(Run, DeterministicAndRoundTrips) {
  auto c = parse_config(kG2);
  c.tasks.push_back(Task::identities);
  c.tasks.push_back(Task::lowrank_suite);
  const auto a = run(c).report.dump(2);
  const auto b = run(c).report.dump(2);
  EXPECT_EQ(a, b);
  const auto echoed = run(c).report["config"].dump();
  EXPECT_EQ(run(parse_config(echoed)).report.dump(2), a);
}

TEST(Run, HermitianFastFailReported) {
  const auto r = run(parse_config("type: A2\nelliptic_coeffs: [0, 1]\ninvolution_coweight: [0, 1]\ntasks: [criterion]\n"));
  EXPECT_EQ(r.report["criterion"]["holds"], false);
  EXPECT_EQ(r.report["criterion"]["failure"], "hermitian_fast_fail");
}

TEST(Run, LowrankSuite) {
  const auto r = run(parse_config("tasks: [lowrank_suite]\n"));
  const auto& l = r.report["lowrank_suite"];
  EXPECT_EQ(l["signature_table"]["metrics"][5]["positives"], 6);
  EXPECT_EQ(l["a2_cross_check"]["match"], true);
  for (const auto& s : l["sl2_classes"]) EXPECT_EQ(s["ok"], true);
  EXPECT_FALSE(r.report.contains("root_system"));
}

TEST(Render, TextMentionsSections) {
  const auto text = render_text(run(parse_config(kG2)).report);
  EXPECT_NE(text.find("stratification"), std::string::npos);
  EXPECT_NE(text.find("criterion (S): holds"), std::string::npos);
}

TEST(Output, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "bruhatkit_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "report.json";
  write_atomically(path, "first");
  write_atomically(path, "second");
  std::ifstream in(path);
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "second");
  EXPECT_FALSE(std::filesystem::exists(dir / ".report.json.tmp"));
  std::filesystem::remove_all(dir);
}
