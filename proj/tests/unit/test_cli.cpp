#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args)
{
  std::ostringstream out, err;
  const int code = gralg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s)
{
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

void check_error_line(const Run& r, int code)
{
  CHECK(r.code == code);
  CHECK(count_lines(r.err) == 1);
  const auto j = nlohmann::json::parse(r.err);
  CHECK(j.contains("error"));
  CHECK(j["exit_code"] == code);
}

} // namespace

TEST_SUITE("cli")
{
  TEST_CASE("semigroups")
  {
    const auto r = run({"semigroups"});
    CHECK(r.code == 0);
    for (const char* tag : {"T1 ", "T2 ", "T3 ", "T3op ", "Z2 "})
      CHECK(r.out.find(tag) != std::string::npos);
    const auto j = nlohmann::json::parse(run({"semigroups", "--order", "1", "--format", "json"}).out);
    CHECK(j["classes"].size() == 1);
    check_error_line(run({"semigroups", "--order", "5"}), 3);
  }

  TEST_CASE("codim csv has one row per n")
  {
    const auto r = run({"codim", "--catalog", "thm_T1_fractional", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 5);
    CHECK(r.out.rfind("n,c_n,certification,seconds\n", 0) == 0);
    CHECK(r.out.find("\n4,359,") != std::string::npos);
  }

  TEST_CASE("output is reproducible across runs and thread counts")
  {
    const std::vector<std::string> base{"codim", "--catalog", "thm_T3_fractional", "--n-max", "4", "--format", "json"};
    const auto a = run(base);
    auto threaded = base;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(a.out == run(base).out);
    CHECK(a.out == run(threaded).out);
    const auto p1 = run({"phimax", "--q", "6", "--format", "json", "--seed", "4"});
    const auto p2 = run({"phimax", "--q", "6", "--format", "json", "--seed", "4", "--threads", "2"});
    CHECK(p1.out == p2.out);
  }

  TEST_CASE("radical of the first example")
  {
    const auto r = run({"radical", "--catalog", "catalog:exampleT1(2)", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 1);
    CHECK(j["graded"] == false);
    const std::string v = j["basis"][0];
    CHECK(v.find("(e12,0)") != std::string::npos);
    CHECK(v.find("(e12,e12)") != std::string::npos);
  }

  TEST_CASE("phimax")
  {
    const auto r = run({"phimax", "--q", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("max 6.82842712") != std::string::npos);
    check_error_line(run({"phimax", "--q", "3"}), 2);
  }

  TEST_CASE("algebra files")
  {
    const std::string path = "cli_test_algebra.txt";
    {
      std::ofstream f(path);
      f << "algebra ut2\nsemigroup inline t\nrow t\nbasis e11 e12 e22\ndegrees t t t\nproducts\n"
           "0 0 0 1\n0 1 1 1\n1 2 1 1\n2 2 2 1\nend\nunit 1 0 1\n";
    }
    const auto c = run({"check", "--input", path});
    CHECK(c.code == 0);
    CHECK(c.out.find("ok") != std::string::npos);
    const auto e = run({"exponent", "--input", path, "--format", "json"});
    CHECK(nlohmann::json::parse(e.out)["ordinary_d"] == 2);
    {
      std::ofstream f(path);
      f << "algebra broken\nsemigroup inline t\nrow t\nbasis a b\ndegrees t t\nproducts\n"
           "0 0 1 1\n0 1 0 1\n1 1 1 1\nend\n";
    }
    const auto bad = run({"check", "--input", path});
    CHECK(bad.code == 1);
    CHECK(count_lines(bad.err) == 1);
    std::remove(path.c_str());
  }

  TEST_CASE("usage and resource errors")
  {
    check_error_line(run({}), 2);
    check_error_line(run({"codim"}), 2);
    check_error_line(run({"codim", "--catalog", "no_such_algebra"}), 2);
    check_error_line(run({"codim", "--catalog", "field", "--format", "xml"}), 2);
    check_error_line(run({"codim", "--catalog", "field", "--caps", "block-entries=0"}), 2);
    check_error_line(run({"codim", "--catalog", "thm_T1_fractional", "--n-max", "3", "--caps", "block-entries=5"}),
                     3);
    check_error_line(run({"multiplicity", "--catalog", "field", "--partition", "1,1,1,1,1,1"}), 3);
    check_error_line(run({"radical", "--catalog", "field", "--format", "csv"}), 2);
    check_error_line(run({"verify-paper", "--sections", "nothing"}), 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("multiplicity certificates")
  {
    const auto r = run({"multiplicity", "--catalog", "thm_T3_fractional", "--partition", "2^5,1", "--variant", "T3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certificate nonzero") != std::string::npos);
    const auto e = run({"multiplicity", "--catalog", "field", "--partition", "3", "--format", "json"});
    CHECK(nlohmann::json::parse(e.out)["multiplicity"] == 1);
  }

  TEST_CASE("verify-paper filtering and output file")
  {
    const std::string path = "cli_test_verify.txt";
    const auto r = run({"verify-paper", "--sections", "polytopes", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    CHECK(text.find("PASS C7") != std::string::npos);
    CHECK(text.find("PASS C10") != std::string::npos);
    CHECK(text.find("C5") == std::string::npos);
    CHECK(text.find("checks passed") != std::string::npos);
    std::remove(path.c_str());
  }
}
