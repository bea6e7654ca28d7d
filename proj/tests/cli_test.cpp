#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "support.hpp"

namespace ccc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_main(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::string> kTwisted{"--ring", "x,y,z,w", "--ideal", test::kTwistedCubic};

std::vector<std::string> with(std::string command, std::vector<std::string> rest,
                              std::vector<std::string> extra = {}) {
  std::vector<std::string> args{std::move(command)};
  args.insert(args.end(), rest.begin(), rest.end());
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

std::vector<BigInt> parse_list(const std::string& text) {
  std::vector<BigInt> out;
  std::string body = text.substr(text.find('{') + 1);
  body = body.substr(0, body.find('}'));
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(' ') != std::string::npos) out.emplace_back(item.substr(item.find_first_not_of(' ')));
  }
  return out;
}

TEST(Cli, ChernTwistedCubic) {
  auto list = run_cli(with("chern", kTwisted, {"--seed", "1"}));
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_EQ(list.out, "{3, 2}\n");
  EXPECT_NE(list.err.find("seed=1"), std::string::npos);
  auto poly = run_cli(with("chern", kTwisted, {"--seed", "1", "--format", "poly"}));
  EXPECT_EQ(poly.out, "3*H^2 + 2*H^3\n");
}

TEST(Cli, JsonSchemaKeyOrder) {
  auto res = run_cli(with("chern", kTwisted, {"--seed", "9", "--format", "json"}));
  ASSERT_EQ(res.code, kExitOk);
  EXPECT_EQ(res.out,
            "{\"command\":\"chern\",\"n\":3,\"k\":1,\"d\":2,\"degrees\":[3,2],"
            "\"poly\":\"3*H^2 + 2*H^3\",\"seed\":9,\"retries\":0,\"prime\":32003}\n");
  auto csm = run_cli(with("csm", kTwisted, {"--seed", "9", "--format", "json"}));
  auto j = nlohmann::ordered_json::parse(csm.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "n", "k", "degrees", "poly", "euler", "seed",
                                            "retries", "prime"}));
  EXPECT_EQ(j["euler"], 2);
}

TEST(Cli, WhitneySingularLocus) {
  auto res = run_cli({"segre", "--ring", "x,y,z,w", "--ideal", test::kWhitney, "--singular-locus",
                      "--seed", "4"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_EQ(res.out, "{1, 0}\n");
  auto two = run_cli({"segre", "--ring", "x,y,z,w", "--ideal", "x, y", "--singular-locus"});
  EXPECT_EQ(two.code, kExitInvalid);
}

TEST(Cli, EulerFromIdealFile) {
  auto path = write_temp("ccc_censoring.txt",
                         "# random censoring model\nring: p0, p1, p2, p12\nprime: 32003\nideal:\n" +
                             std::string(test::kCensoring) + "\n");
  auto res = run_cli({"euler", "--ring", "p0,p1,p2,p12", "--ideal-file", path.string(), "--seed", "3"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_EQ(res.out, "5\n");
  auto json = run_cli({"euler", "--ideal-file", path.string(), "--seed", "3", "--format", "json"});
  EXPECT_EQ(json.out, "{\"command\":\"euler\",\"n\":3,\"euler\":5,\"seed\":3,\"retries\":0,\"prime\":32003}\n");
  auto mismatch = run_cli({"euler", "--ring", "a,b,c,d", "--ideal-file", path.string()});
  EXPECT_EQ(mismatch.code, kExitInvalid);
}

TEST(Cli, EulerComplement) {
  auto res = run_cli({"euler-complement", "--ring", "p0,p1,p2,p12", "--ideal", test::kCensoring,
                      "--ideal2", test::kBoundary, "--seed", "5", "--jobs", "4"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_EQ(res.out, "3\n");
  auto missing = run_cli({"euler-complement", "--ring", "x,y", "--ideal", "x"});
  EXPECT_EQ(missing.code, kExitInvalid);
  auto stray = run_cli({"euler", "--ring", "x,y", "--ideal", "x", "--ideal2", "y"});
  EXPECT_EQ(stray.code, kExitInvalid);
}

TEST(Cli, ParseRequest) {
  Request req = parse_request(with("chern", kTwisted));
  EXPECT_EQ(req.command, Command::Chern);
  EXPECT_EQ(req.ring->num_variables(), 4u);
  EXPECT_EQ(req.ideal.size(), 3u);
  EXPECT_EQ(req.ring->field().prime(), 32003u);
  EXPECT_EQ(req.format, OutputFormat::List);
  EXPECT_EQ(req.policy.max_retries, 5);
  EXPECT_FALSE(req.policy.verify);
  Request zero = parse_request({"csm", "--ring", "x,y,z", "--ideal", "0"});
  EXPECT_TRUE(zero.ideal.empty());
}

TEST(Cli, ValidationErrors) {
  auto inhomogeneous = run_cli({"segre", "--ring", "x,y", "--ideal", "x + 1"});
  EXPECT_EQ(inhomogeneous.code, kExitInvalid);
  EXPECT_NE(inhomogeneous.err.find("generator 1 is not homogeneous"), std::string::npos);

  auto syntax = run_cli({"segre", "--ring", "x,y", "--ideal", "x +"});
  EXPECT_EQ(syntax.code, kExitInvalid);
  EXPECT_NE(syntax.err.find("line 1, column 4"), std::string::npos);

  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal", "x^3", "--prime", "3"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal", "x", "--prime", "4"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,x", "--ideal", "x"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal", ""}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ideal", "x"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"mystery", "--ring", "x,y", "--ideal", "x"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal", "q"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal", "x", "--format", "xml"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal", "x", "--bogus"}).code, kExitInvalid);
  EXPECT_EQ(run_cli({"segre", "--ring", "x,y", "--ideal-file", "/nonexistent/file"}).code, kExitInvalid);
}

TEST(Cli, IdealFileErrorsNameTheLine) {
  auto path = write_temp("ccc_bad.txt", "ring: x, y, z\nideal:\nx*y\nx + y^2\n");
  auto res = run_cli({"segre", "--ideal-file", path.string()});
  EXPECT_EQ(res.code, kExitInvalid);
  EXPECT_NE(res.err.find("generator 2"), std::string::npos);
  auto syntax = write_temp("ccc_syntax.txt", "ring: x, y, z\nideal:\nx*y\nx +* y\n");
  auto res2 = run_cli({"segre", "--ideal-file", syntax.string()});
  EXPECT_EQ(res2.code, kExitInvalid);
  EXPECT_NE(res2.err.find(":4:"), std::string::npos);
  EXPECT_THROW(parse_ideal_file("ring: x\nbogus: 1\nideal:\nx\n"), UsageError);
  EXPECT_THROW(parse_ideal_file("ring: x\n"), UsageError);
}

TEST(Cli, ParseIdealFile) {
  auto f = parse_ideal_file("ring: x, y, z, w\n\nprime: 101\nideal:\ny^2 - x*z,\n  y*z - x*w\n# done\n");
  EXPECT_EQ(f.ring, (std::vector<std::string>{"x", "y", "z", "w"}));
  EXPECT_EQ(f.prime, 101u);
  ASSERT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(f.generators[0].first, 5u);
  EXPECT_EQ(f.generators[1].second, "y*z - x*w");
}

TEST(Cli, GenericityExhaustionExitsWithThree) {
  auto res = run_cli(with("segre", kTwisted, {"--prime", "5", "--retries", "0", "--seed", "3"}));
  EXPECT_EQ(res.code, kExitGenericity);
  EXPECT_NE(res.err.find("seed 3"), std::string::npos);
}

TEST(Cli, VerificationMismatchExitsWithFour) {
  auto res = run_cli(with("segre", kTwisted, {"--prime", "5", "--verify", "--seed", "1"}));
  EXPECT_EQ(res.code, kExitInternal);
}

TEST(Cli, ByteIdenticalReruns) {
  for (const std::string& format : {"list", "poly", "json"}) {
    auto a = run_cli(with("csm", kTwisted, {"--seed", "123", "--format", format}));
    auto b = run_cli(with("csm", kTwisted, {"--seed", "123", "--format", format, "--jobs", "3"}));
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, ListAndPolyEncodeTheSameReport) {
  const std::vector<std::vector<std::string>> cases{
      with("segre", kTwisted), with("chern", kTwisted), with("csm", kTwisted),
      {"segre", "--ring", "x,y,z,w", "--ideal", test::kWhitney, "--singular-locus"},
      {"csm", "--ring", "x,y,z", "--ideal", "y^2*z - x^3 - x^2*z"},
      {"chern", "--ring", "x,y,z,w", "--ideal", "x, y"}};
  for (auto args : cases) {
    args.insert(args.end(), {"--seed", "17"});
    auto list_args = args, poly_args = args, json_args = args;
    poly_args.insert(poly_args.end(), {"--format", "poly"});
    json_args.insert(json_args.end(), {"--format", "json"});
    auto list = run_cli(list_args), poly = run_cli(poly_args), json = run_cli(json_args);
    ASSERT_EQ(list.code, kExitOk);
    auto j = nlohmann::json::parse(json.out);
    const int n = j["n"], k = j["k"];
    ChowClass chow = parse_chow(poly.out.substr(0, poly.out.size() - 1), n);
    EXPECT_EQ(parse_list(list.out), degrees_from_chow(chow, k));
    EXPECT_EQ(j["poly"].get<std::string>() + "\n", poly.out);
  }
}

TEST(Cli, HelpExitsCleanly) {
  auto res = run_cli({"--help"});
  EXPECT_EQ(res.code, kExitOk);
  EXPECT_NE(res.out.find("usage: ccc"), std::string::npos);
}

std::pair<int, std::string> run_binary(const std::string& args) {
  std::string cmd = std::string(CCC_EXECUTABLE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

TEST(Cli, ExecutableExitCodesAndStableOutput) {
  const std::string tc = "--ring x,y,z,w --ideal 'y^2-x*z, y*z-x*w, z^2-y*w'";
  auto first = run_binary("chern " + tc + " --seed 77 --format json");
  auto second = run_binary("chern " + tc + " --seed 77 --format json");
  EXPECT_EQ(first.first, 0);
  EXPECT_EQ(first.second, second.second);
  EXPECT_EQ(run_binary("segre --ring x,y --ideal 'x + 1'").first, 2);
  EXPECT_EQ(run_binary("segre " + tc + " --prime 5 --retries 0 --seed 3").first, 3);
  EXPECT_EQ(run_binary("segre " + tc + " --prime 5 --verify --seed 1").first, 4);
}

TEST(Cli, EntropySeedIsEchoed) {
  auto res = run_cli(with("chern", kTwisted, {"--format", "json"}));
  ASSERT_EQ(res.code, kExitOk);
  auto j = nlohmann::json::parse(res.out);
  EXPECT_NE(res.err.find("seed=" + std::to_string(j["seed"].get<std::uint64_t>())), std::string::npos);
}

}  // namespace
}  // namespace ccc::cli
