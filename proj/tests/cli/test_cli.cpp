#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "qhz/errors.hpp"
#include "qhz_cli/app.hpp"
#include "qhz_cli/format.hpp"

using namespace qhz;
using namespace qhz::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qzeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("complex argument syntax") {
  CHECK(parse_complex("2.5") == Complex(2.5, 0.0));
  CHECK(parse_complex("-1,0.25") == Complex(-1.0, 0.25));
  CHECK(parse_complex("1e-3,-2") == Complex(1e-3, -2.0));
  CHECK_THROWS_AS(parse_complex(""), DomainError);
  CHECK_THROWS_AS(parse_complex("1,2,3"), DomainError);
  CHECK_THROWS_AS(parse_complex("abc"), DomainError);
  CHECK_THROWS_AS(parse_complex("1,"), DomainError);
  CHECK_THROWS_AS(parse_complex("nan"), DomainError);
}

TEST_CASE("number formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, 0.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_complex(Complex(1.5, -2.0)) == "1.5-2i");
  CHECK(format_complex(Complex(1.5, 0.0)) == "1.5");
}

TEST_CASE("eval emits the value record") {
  const Run r = run({"eval", "--q", "0.5", "--nu", "1", "--s", "4", "--z", "1", "--method", "direct"});
  CHECK(r.code == kOk);
  const Json j = Json::parse(r.out);
  CHECK(j["method"] == "direct");
  CHECK(std::abs(j["value"]["re"].get<double>() - 0.12831687402105256) < 1e-14);
  CHECK(j.contains("abs_err"));
  CHECK(j.contains("terms_used"));
  CHECK(run({"eval", "--s", "4", "--method", "from-Z"}).code == kOk);
  CHECK(run({"eval", "--s", "4", "--z", "2", "--method", "from-Z"}).code == kDomain);
}

TEST_CASE("exit statuses") {
  const Run pole = run({"eval", "--q", "0.5", "--s", "1", "--method", "binomial"});
  CHECK(pole.code == kNearPole);
  const Json e = Json::parse(pole.out)["error"];
  CHECK(e["pole"]["n"] == 1);
  CHECK(e["pole"]["m"] == 0);
  CHECK(std::abs(e["pole"]["residue"]["re"].get<double>() - 0.5 / std::log(2.0)) < 1e-15);
  CHECK(run({"eval", "--q", "1.5", "--s", "2"}).code == kDomain);
  CHECK(run({"eval", "--s", "2,x"}).code == kDomain);
  CHECK(run({"eval"}).code == kDomain);
  CHECK(run({"frobnicate"}).code == kDomain);
  CHECK(run({"eval", "--s", "1.5", "--nu", "2", "--method", "direct"}).code == kDomain);
  CHECK(run({"eval", "--s", "4", "--max-terms", "3", "--method", "direct"}).code == kConvergence);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("formats and determinism") {
  const Run a = run({"bernoulli", "--nu", "2", "--max-m", "3", "--z", "0.7"});
  const Run b = run({"bernoulli", "--nu", "2", "--max-m", "3", "--z", "0.7"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  const Json arr = Json::parse(a.out);
  CHECK(arr.size() == 4);
  CHECK(arr[0]["terms"].empty());
  const Run csv = run({"bernoulli", "--nu", "1", "--max-m", "2", "--format", "csv"});
  CHECK(csv.out.rfind("nu,m,kind,k,re,im\n", 0) == 0);
  const Run sweep = run({"limit-sweep", "--nu", "1", "--s", "2.5", "--z", "1.3", "--k-max", "1"});
  CHECK(sweep.out.rfind("k,q,q_value,classical_value,abs_error\n1,0.5,", 0) == 0);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 2);
  CHECK(run({"limit-sweep", "--k-max", "0"}).code == kDomain);
}

TEST_CASE("verify is reproducible and filterable") {
  const Run a = run({"verify", "--suite", "functional", "--seed", "7"});
  const Run b = run({"verify", "--suite", "functional", "--seed", "7"});
  const Run c = run({"verify", "--suite", "functional", "--seed", "8"});
  CHECK(a.code == kOk);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const Json j = Json::parse(run({"verify", "--suite", "poisson"}).out);
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "poisson");
  CHECK(j["summary"]["failed"] == 0);
  CHECK(run({"verify", "--suite", "nope"}).code == kDomain);
}

TEST_CASE("poles, special values and Z") {
  const Json p = Json::parse(run({"poles", "--nu", "2", "--n-min", "0", "--m-max", "1"}).out);
  CHECK(p.size() == 2 + 3 + 3);
  const Json s = Json::parse(run({"special-values", "--nu", "1", "--max-m", "2"}).out);
  CHECK(s[0]["s"] == 0);
  const Json z = Json::parse(run({"zq", "--s", "1.5", "--t", "3", "--ladders", "2"}).out);
  CHECK(z["ladders"].size() == 5);
  CHECK(std::abs(z["log_series"]["value"]["re"].get<double>() -
                 z["product"]["log_value"]["re"].get<double>()) < 1e-12);
}
