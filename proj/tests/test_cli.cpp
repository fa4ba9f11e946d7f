#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "covrough/io.hpp"
#include "covrough/reference.hpp"

using namespace covrough;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COVROUGH_TEST_DATA) + "/" + name; }

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ApproxFourElementSpace) {
  const auto r = run({"approx", "--space", data("ex1.json"), "--set", "a,d"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lower: {}\nupper: {a, b, d}\n");
  for (const char* method : {"def3", "neigh", "subcov"}) {
    const auto j = parse(run({"approx", "--space", data("ex1.json"), "--set", "a,d", "--method", method, "--json"}));
    EXPECT_EQ(j.at("upper"), nlohmann::json({"a", "b", "d"})) << method;
    EXPECT_EQ(j.at("lower"), nlohmann::json::array());
  }
}

TEST(Cli, ApproxEmptySetAndNeighborhoods) {
  const auto r = run({"approx", "--space", data("ex1.json"), "--set", ""});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "lower: {}\nupper: {}\n");
  const auto j = parse(run({"approx", "--space", data("ex1.json"), "--set", "c", "--show", "neighborhoods", "--json"}));
  EXPECT_EQ(j.at("neighborhoods").at("c"), nlohmann::json({"a", "c"}));
  EXPECT_FALSE(j.contains("upper"));
}

TEST(Cli, OpOutputs) {
  const auto t = parse(run({"op", "--space", data("ex4.json"), "--apply", "int"}));
  EXPECT_EQ(io::covering_from_json(t), covrough::Covering(reference::x_universe(4),
                                                           {0b0111, 0b1011, 0b1101, 0b1110}));
  const auto n = run({"op", "--space", data("ex1.json"), "--apply", "nei"});
  EXPECT_EQ(io::covering_from_json(nlohmann::json::parse(n.out)).to_string(), "{{a}, {b}, {a, c}, {b, d}}");
  const auto p = run({"op", "--space", data("partition.json"), "--apply", "reduct"});
  EXPECT_EQ(io::covering_from_json(nlohmann::json::parse(p.out)),
            io::covering_from_json(io::read_json_file(data("partition.json"))));
}

TEST(Cli, EmittedCoveringsReparseIdentically) {
  for (const char* op : {"reduct", "int", "nei", "closure"}) {
    const auto first = run({"op", "--space", data("ex4.json"), "--apply", op});
    ASSERT_EQ(first.code, 0);
    const auto c = io::covering_from_json(nlohmann::json::parse(first.out));
    EXPECT_EQ(io::to_json(c).dump(2) + "\n", first.out) << op;
  }
}

TEST(Cli, Combine) {
  const auto j = run({"combine", "--left", data("ex5_left.json"), "--right", data("ex5_right.json"), "--with", "join"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(io::covering_from_json(nlohmann::json::parse(j.out)).to_string(),
            "{{x1, x2}, {x1, x2, x3}, {x2, x4}, {x2, x3, x4}}");
  const auto m = run({"combine", "--left", data("ex5_left.json"), "--right", data("ex5_right.json"), "--with", "meet"});
  EXPECT_EQ(io::covering_from_json(nlohmann::json::parse(m.out)).to_string(),
            "{{x2}, {x1, x2}, {x2, x3}, {x2, x4}}");
  const auto same = run({"combine", "--left", data("ex1.json"), "--right", data("ex1.json"), "--with", "join"});
  EXPECT_EQ(io::covering_from_json(nlohmann::json::parse(same.out)), reference::ex1_covering());
  const auto bad = run({"combine", "--left", data("ex1.json"), "--right", data("other_universe.json"), "--with", "join"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("UniverseMismatch"), std::string::npos);
}

TEST(Cli, Equiv) {
  const auto j = parse(run({"equiv", "--left", data("ex3_left.json"), "--right", data("ex3_right.json"), "--json"}));
  EXPECT_TRUE(j.at("same_lower").get<bool>());
  EXPECT_TRUE(j.at("same_upper").get<bool>());
  EXPECT_EQ(j.at("reduct_left"), j.at("reduct_right"));
  const auto self = parse(run({"equiv", "--left", data("ex4.json"), "--right", data("ex4.json"), "--json"}));
  EXPECT_TRUE(self.at("same_lower").get<bool>());
  const auto w = parse(run({"equiv", "--left", data("converse_left.json"), "--right", data("converse_right.json"), "--json"}));
  EXPECT_TRUE(w.at("same_upper").get<bool>());
  EXPECT_FALSE(w.at("same_lower").get<bool>());
}

TEST(Cli, Hom) {
  const std::vector<std::string> base{"hom", "--source", data("rmk5_source.json"), "--target",
                                      data("rmk5_target.json"), "--map", data("rmk5_map.json")};
  auto args = base;
  args.insert(args.end(), {"--mode", "definable", "--set", "x2,x4", "--json"});
  const auto j = parse(run(args));
  EXPECT_TRUE(j.at("hom").get<bool>());
  EXPECT_FALSE(j.at("iso").get<bool>());
  EXPECT_FALSE(j.at("upper_equal").get<bool>());
  EXPECT_EQ(j.at("f_upper_x"), nlohmann::json({"y2", "y3", "y4"}));
  EXPECT_EQ(j.at("upper_f_x"), nlohmann::json({"y1", "y2", "y3"}));

  args = base;
  args.insert(args.end(), {"--mode", "strict", "--json"});
  EXPECT_FALSE(parse(run(args)).at("hom").get<bool>());

  const auto id = parse(run({"hom", "--source", data("ex1.json"), "--target", data("ex1.json"), "--map",
                             data("ex1_identity.json"), "--json"}));
  EXPECT_TRUE(id.at("iso").get<bool>());
}

TEST(Cli, Counting) {
  EXPECT_EQ(run({"count-coverings", "--n", "4"}).out, "32297\n");
  EXPECT_EQ(run({"count-coverings", "--n", "5"}).out, "2147321017\n");
  EXPECT_EQ(run({"count-coverings", "--n", "9"}).code, 2);
  const auto e = run({"enumerate-coverings", "--n", "3"});
  ASSERT_EQ(e.code, 0);
  std::istringstream lines(e.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    (void)io::covering_from_json(nlohmann::json::parse(line));
    ++count;
  }
  EXPECT_EQ(count, 109U);
}

TEST(Cli, Check) {
  const auto c = run({"check", "--law", "COUNT_A003465"});
  EXPECT_EQ(c.code, 0) << c.out;
  const auto ex5 = parse(run({"check", "--law", "EX5", "--json"}));
  EXPECT_TRUE(ex5.at("passed").get<bool>());
  EXPECT_FALSE(ex5.at("laws")[0].at("note").get<std::string>().empty());
  const auto many = parse(run({"check", "--law", "THM1", "--law", "PROP2", "--max-n", "3", "--seeds", "5", "--json"}));
  EXPECT_EQ(many.at("laws").size(), 2U);
  EXPECT_EQ(many.at("scope").at("max_n"), 3);
  EXPECT_EQ(run({"check", "--law", "NOPE"}).code, 2);
  EXPECT_EQ(run({"check", "--max-n", "40"}).code, 2);
}

TEST(Cli, CheckHonoursEnvironmentCap) {
  ::setenv("COVROUGH_MAX_N", "2", 1);
  const auto j = parse(run({"check", "--law", "THM1", "--json"}));
  ::unsetenv("COVROUGH_MAX_N");
  EXPECT_EQ(j.at("scope").at("max_n"), 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"approx", "--space", data("ex1.json")}).code, 1);
  EXPECT_EQ(run({"approx", "--space", data("ex1.json"), "--set", "a", "--bogus"}).code, 1);
  EXPECT_EQ(run({"approx", "--space", data("ex1.json"), "--set", "a", "--method", "magic"}).code, 1);
  EXPECT_EQ(run({"approx", "--space", data("bad_syntax.json"), "--set", "a"}).code, 1);
  EXPECT_EQ(run({"approx", "--space", data("missing.json"), "--set", "a"}).code, 1);
  EXPECT_EQ(run({"approx", "--space", data("ex1.json"), "--set", "z"}).code, 2);
  EXPECT_EQ(run({"approx", "--space", data("not_covering.json"), "--set", "a"}).code, 2);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("approx"), std::string::npos);
}
