#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "weavekh/cli.hpp"

using namespace weavekh;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("jones text and json") {
  const auto r = call({"jones", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "t^-2 - t^-1 + 1 - t + t^2\n");
  const auto j = nlohmann::json::parse(call({"jones", "-n", "5", "--format", "json"}).out);
  CHECK(j["span"] == 10);
  CHECK(j["min_deg"] == -5);
  CHECK(j["is_knot"] == true);
  CHECK(j["palindromic"] == true);
  CHECK(j["jones"]["var"] == "t");
}

TEST_CASE("links warn for jones and are refused for kh") {
  const auto j = call({"jones", "-n", "6"});
  CHECK(j.code == 0);
  CHECK(j.err.find("3-component link") != std::string::npos);
  CHECK(call({"kh", "-n", "6"}).code == cli::kExitUsage);
  CHECK(call({"fit", "-n", "9"}).code == cli::kExitUsage);
}

TEST_CASE("kh outputs") {
  const auto text = call({"kh", "-n", "2"});
  CHECK(text.out == "t^-2*Q^-5 + t^-1*Q^-1 + Q^-1 + Q + t*Q + t^2*Q^5\n");
  const auto j = nlohmann::json::parse(call({"kh", "-n", "10", "--format", "json"}).out);
  CHECK(j["total"] == "7563");
  CHECK(j["h01"] == "971");
  CHECK(j["h01_paired"] == "970");
  CHECK(j["betti_line"].size() == 20);
  const auto csv = call({"betti", "-n", "4", "--format", "csv"}).out;
  CHECK(csv.rfind("i,rank\n-3,1\n", 0) == 0);
}

TEST_CASE("fit output and density file") {
  const auto path = std::filesystem::temp_directory_path() / "weavekh_density_test.csv";
  const auto r = call({"fit", "-n", "10", "--format", "json", "--emit-density", path.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sigma"].get<double>() == doctest::Approx(2.640883).epsilon(1e-6));
  CHECK(j["fit_point_set"] == "nonzero_support");
  CHECK(j["fit_points"].size() == 20);
  const auto dens = slurp(path);
  CHECK(dens.rfind("x,rho,d\n", 0) == 0);
  CHECK(dens.find("\n0,") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("table csv") {
  const auto r = call({"table", "--residue", "1", "--start", "10", "--end", "22", "--threads", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "# weavekh 1.0.0 fit_point_set=nonzero_support dim_H01=paired\n"
        "n,total_dimension,dim_H01,sigma,l2_comparison,l1_comparison,total_dimension_sci,"
        "dim_H01_sci\n"
        "10,7563,970,2.64088,0.0405098,0.134968,,\n"
        "13,135721,15418,2.95616,0.0411329,0.150609,,\n"
        "16,2435423,250828,3.24564,0.0407917,0.155996,,\n"
        "19,43701901,4146351,3.51339,0.0401449,0.161336,,\n"
        "22,784198803,69337015,3.76322,0.0394131,0.165763,,\n");
  const auto full = call({"table", "--residue", "2", "--start", "11", "--end", "11", "--no-meta",
                          "--h01", "full"});
  CHECK(full.out.find("\n11,19801,2432,") != std::string::npos);
  CHECK(full.out.rfind("n,", 0) == 0);
}

TEST_CASE("table scientific columns") {
  const auto r = call({"table", "--residue", "1", "--start", "49", "--end", "52", "--no-meta"});
  CHECK(r.out.find(",1.51272e20,9.04765e18\n") != std::string::npos);
  CHECK(r.out.find(",2.71447e21,1.57670e20\n") != std::string::npos);
}

TEST_CASE("thread count does not change the table") {
  const std::vector<std::string> base{"table", "--residue", "2", "--start", "2", "--end", "200", "--threads"};
  auto with = [&](const char* k) {
    auto a = base;
    a.emplace_back(k);
    return call(a);
  };
  const auto one = with("1");
  const auto four = with("4");
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == with("0").out);
}

TEST_CASE("empty range and invalid ranges") {
  const auto empty = call({"table", "--residue", "1", "--start", "10", "--end", "4", "--no-meta"});
  CHECK(empty.code == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);
  CHECK(call({"table", "--residue", "0", "--start", "3", "--end", "9"}).code == cli::kExitUsage);
  CHECK(call({"table", "--residue", "1", "--start", "5", "--end", "9"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"bogus"}).code == cli::kExitUsage);
  CHECK(call({"jones"}).code == cli::kExitUsage);
  CHECK(call({"jones", "-n", "x"}).code == cli::kExitUsage);
  CHECK(call({"jones", "-n", "0"}).code == cli::kExitUsage);
  CHECK(call({"jones", "-n", "2", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(call({"signature", "-p", "1", "-q", "2"}).code == cli::kExitUsage);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("signature command") {
  CHECK(call({"signature", "-p", "4", "-q", "5"}).out == "-4\n");
  const auto j = nlohmann::json::parse(
      call({"signature", "-p", "3", "-q", "10", "--check-diagram", "--format", "json"}).out);
  CHECK(j["o"] == 11);
  CHECK(j["agree"] == true);
}

TEST_CASE("verify reports failures through the exit code") {
  const auto good = call({"verify", "--n-max", "8"});
  CHECK(good.code == 0);
  CHECK(good.out.find("FAIL") == std::string::npos);
  const auto bad = call({"verify", "--n-max", "4", "--inject-fault"});
  CHECK(bad.code == cli::kExitVerifyFailed);
  CHECK(bad.out.find("FAIL hecke recursion") != std::string::npos);
}

TEST_CASE("thread resolution") {
  ::unsetenv("WEAVEKH_THREADS");
  CHECK(cli::resolve_threads(3) == 3);
  CHECK(cli::resolve_threads(0) >= 1);
  ::setenv("WEAVEKH_THREADS", "2", 1);
  CHECK(cli::resolve_threads(7) == 2);
  ::setenv("WEAVEKH_THREADS", "junk", 1);
  CHECK(cli::resolve_threads(5) == 5);
  ::unsetenv("WEAVEKH_THREADS");
}
