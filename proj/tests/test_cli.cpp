#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "svrasym/asymptotics.hpp"
#include "svrasym/cli/commands.hpp"
#include "svrasym/cli/csv.hpp"
#include "svrasym/cli/figures.hpp"
#include "svrasym/dataset.hpp"
#include "svrasym/estimators.hpp"
#include "svrasym/montecarlo.hpp"

using namespace svrasym;
using namespace svrasym::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  Table table() const {
    std::istringstream in(out);
    return read_csv(in);
  }
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "svrasym_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

double parsed(double v) { return std::stod(format_number(v)); }

}  // namespace

TEST_CASE("csv round trip keeps metadata, empty cells and non-finite values") {
  Table t;
  t.metadata = {{"tool", "x"}, {"config", "a=1"}};
  t.columns = {"a", "b", "c"};
  t.add_row({1.5, Cell{}, 1.0 / 3.0});
  t.add_row({-2e-12, HUGE_VAL, 7.0});
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
  std::stringstream s;
  write_csv(s, t);
  const Table r = read_csv(s);
  CHECK(r.metadata == t.metadata);
  CHECK(r.columns == t.columns);
  REQUIRE(r.rows.size() == 2);
  CHECK(*r.at(0, "a") == 1.5);
  CHECK_FALSE(r.at(0, "b"));
  CHECK(*r.at(0, "c") == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(std::isinf(*r.at(1, "b")));
  CHECK_THROWS_AS(r.at(0, "zzz"), std::out_of_range);
  CHECK(format_number(0.123456789012) == "0.123456789");
}

TEST_CASE("malformed csv is rejected") {
  for (const std::string text : {"", "# only: metadata\n", "a,b\n1\n", "a,b\n1,x\n", "a\n1\n# late: meta\n"}) {
    std::istringstream in(text);
    CAPTURE(text);
    CHECK_THROWS_AS(read_csv(in), std::runtime_error);
  }
  std::istringstream bad_header("y,z1\n1,2\n");
  CHECK_THROWS_AS(read_data_csv(bad_header), std::runtime_error);
  std::istringstream missing("y,x1\n1,\n");
  CHECK_THROWS_AS(read_data_csv(missing), std::runtime_error);
}

TEST_CASE("data csv round trip is exact") {
  const auto d = generate_dataset(5, 2.0, 1.0, 1.0, NoiseModel::gaussian(), 3);
  std::stringstream s;
  write_data_csv(s, d.features, d.responses);
  const auto r = read_data_csv(s);
  CHECK(r.features == d.features);
  CHECK(r.responses == d.responses);
}

TEST_CASE("grid parsing") {
  CHECK(parse_grid("1,2.5,4") == std::vector<double>{1.0, 2.5, 4.0});
  const auto g = parse_grid("0.1:0.1:0.5");
  REQUIRE(g.size() == 5);
  CHECK(g.back() == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_grid("1:0:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("a,b"), std::invalid_argument);
}

TEST_CASE("delta-star command") {
  auto r = call({"delta-star", "--eps", "0", "--sigma", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(*r.table().at(0, "delta_star") == doctest::Approx(1.0).epsilon(1e-9));
  // scale invariance shows through the printed digits
  const auto a = call({"delta-star", "--eps", "0.1", "--sigma", "0.1"}).table();
  const auto b = call({"delta-star", "--eps", "0.2", "--sigma", "0.2"}).table();
  CHECK(*a.at(0, "delta_star") == *b.at(0, "delta_star"));
  // wrapper identity
  r = call({"delta-star", "--eps", "1", "--sigma", "1", "--noise", "gaussian"});
  CHECK(*r.table().at(0, "delta_star") == parsed(delta_star(1.0, 1.0, NoiseModel::gaussian())));
  r = call({"delta-star", "--eps", "0.5", "--noise", "t3"});
  CHECK(*r.table().at(0, "delta_star") == parsed(delta_star(0.5, 1.0, NoiseModel::scale_mixture(3.0))));
  const auto meta = r.table().metadata;
  CHECK(meta.at(0) == std::pair<std::string, std::string>{"tool", std::string("svrasym ") + kToolVersion});
}

TEST_CASE("risk command") {
  auto r = call({"risk", "hsvr", "--delta", "1", "--sigma", "0.5", "--beta", "1", "--eps", "0.4"});
  REQUIRE(r.code == kExitOk);
  const auto sol = hsvr_risk({1.0, 0.5, 1.0, 0.4, NoiseModel::gaussian()});
  CHECK(*r.table().at(0, "risk") == parsed(sol.risk));
  CHECK(*r.table().at(0, "risk") == doctest::Approx(0.43336).epsilon(0.005));

  r = call({"risk", "hsvr", "--delta", "10", "--sigma", "1", "--beta", "1", "--eps", "0.1"});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.err.find("infeasible") != std::string::npos);
  CHECK(*r.table().at(0, "feasible") == 0.0);
  CHECK_FALSE(r.table().at(0, "risk"));

  r = call({"risk", "ssvr", "--delta", "1e-4", "--sigma", "1", "--beta", "1.3", "--eps", "0.5", "--cost", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(*r.table().at(0, "risk") == doctest::Approx(1.69).epsilon(0.01));
}

TEST_CASE("tune command") {
  auto r = call({"tune", "ridge", "--delta", "2", "--sigma", "1", "--beta", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(*r.table().at(0, "risk") == parsed(ridge_optimal_risk(2.0, 1.0, 1.0, NoiseModel::gaussian())));
  CHECK(*r.table().at(0, "lambda") == doctest::Approx(0.5));
  r = call({"tune", "hsvr", "--delta", "5"});
  REQUIRE(r.code == kExitOk);
  CHECK(*r.table().at(0, "risk") == doctest::Approx(0.43891).epsilon(0.005));
}

TEST_CASE("solve command and data files") {
  const auto path = scratch("solve.csv").string();
  auto r = call({"solve", "ssvr", "--p", "40", "--delta", "2", "--eps", "0.6", "--cost", "2.4", "--seed", "9",
                 "--save-data", path});
  REQUIRE(r.code == kExitOk);
  const auto t = r.table();
  CHECK(*t.at(0, "converged") == 1.0);
  CHECK(*t.at(0, "duality_gap") <= 1e-8);
  const auto d = generate_dataset(40, 2.0, 1.0, 1.0, NoiseModel::gaussian(), 9);
  const auto fit = solve_soft_svr(d, 0.6, 2.4);
  CHECK(*t.at(0, "risk") == parsed(prediction_risk(fit.weights, d.truth)));
  // the saved file reproduces the fit, without a truth to compare against
  r = call({"solve", "ssvr", "--data", path, "--eps", "0.6", "--cost", "2.4"});
  REQUIRE(r.code == kExitOk);
  CHECK(*r.table().at(0, "weight_norm") == parsed(fit.weights.norm()));
  CHECK_FALSE(r.table().at(0, "risk"));

  r = call({"solve", "hsvr", "--p", "30", "--delta", "4", "--eps", "0.05", "--seed", "8"});
  CHECK(r.code == kExitInfeasible);
  CHECK(*r.table().at(0, "infeasible") == 1.0);

  r = call({"solve", "ridge", "--data", path});
  CHECK(r.code == kExitUsage);
  r = call({"solve", "ridge", "--data", path, "--lambda", "0.5"});
  CHECK(r.code == kExitOk);
  r = call({"solve", "hsvr", "--data", scratch("does_not_exist.csv").string()});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("estimate command") {
  // noiseless data
  auto d = generate_dataset(20, 2.0, 1.0, 0.0, NoiseModel::gaussian(), 2);
  const auto clean = scratch("clean.csv");
  {
    std::ofstream f(clean);
    write_data_csv(f, d.features, d.responses);
  }
  auto r = call({"estimate", "--data", clean.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(std::abs(*r.table().at(0, "sigma2")) <= 1e-10);

  // consistency, averaged over 20 generated files
  double s2 = 0.0, b2 = 0.0;
  const auto file = scratch("est.csv");
  for (int seed = 1; seed <= 20; ++seed) {
    d = generate_dataset(300, 2.0, 1.0, 1.0, NoiseModel::gaussian(), static_cast<std::uint64_t>(seed));
    {
      std::ofstream f(file);
      write_data_csv(f, d.features, d.responses);
    }
    r = call({"estimate", "--data", file.string()});
    REQUIRE(r.code == kExitOk);
    const auto lib = estimate_noise_signal(d.features, d.responses);
    CHECK(*r.table().at(0, "sigma2") == parsed(lib.sigma2));
    s2 += *r.table().at(0, "sigma2") / 20.0;
    b2 += *r.table().at(0, "beta2") / 20.0;
  }
  CHECK(s2 == doctest::Approx(1.0).epsilon(0.05));
  CHECK(b2 == doctest::Approx(1.0).epsilon(0.05));

  // p >= n
  d = generate_dataset(20, 1.0, 1.0, 1.0, NoiseModel::gaussian(), 2);
  {
    std::ofstream f(file);
    write_data_csv(f, d.features, d.responses);
  }
  r = call({"estimate", "--data", file.string()});
  CHECK(r.code == kExitInfeasible);
  CHECK(r.err.find("n = 20 <= p = 20") != std::string::npos);
}

TEST_CASE("sweep command matches the library and ignores the thread count") {
  const std::vector<std::string> args{"sweep", "--estimator", "hsvr", "--grid", "0.5,1", "--eps", "1",
                                      "--p",   "60",          "--trials", "4", "--seed", "3"};
  auto one = args;
  one.insert(one.begin(), {"--threads", "1"});
  auto three = args;
  three.insert(three.begin(), {"--threads", "3"});
  const auto a = call(one), b = call(three);
  REQUIRE(a.code == kExitOk);
  REQUIRE(b.code == kExitOk);
  const auto ta = a.table(), tb = b.table();
  CHECK(ta.columns == tb.columns);
  CHECK(ta.rows == tb.rows);
  CHECK(ta.columns == std::vector<std::string>{"delta", "theory_risk", "theory_cosine", "mean_risk", "stderr_risk",
                                               "mean_cosine", "feasibility_rate", "trials_used", "unconverged"});
  SweepSpec s;
  s.grid = {0.5, 1.0};
  s.eps = 1.0;
  s.p = 60;
  s.trials = 4;
  s.base_seed = 3;
  const auto rows = run_sweep(s);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(*ta.at(i, "mean_risk") == parsed(*rows[i].mean_risk));
    CHECK(*ta.at(i, "theory_risk") == parsed(*rows[i].theory_risk));
  }
}

TEST_CASE("usage errors exit 1, help exits 0") {
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({"delta-star"}).code == kExitUsage);
  CHECK(call({"delta-star", "--eps", "abc"}).code == kExitUsage);
  CHECK(call({"delta-star", "--eps", "1", "--sigma", "-1"}).code == kExitUsage);
  CHECK(call({"delta-star", "--eps", "1", "--noise", "t1"}).code == kExitUsage);
  CHECK(call({"risk", "lasso"}).code == kExitUsage);
  CHECK(call({"figure", "9"}).code == kExitUsage);
  CHECK(call({"sweep", "--grid", "1,0.5"}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);
  const auto v = call({"--version"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find(kToolVersion) != std::string::npos);
}

TEST_CASE("config file: values, sections and unknown keys") {
  const auto cfg = scratch("run.ini");
  {
    std::ofstream f(cfg);
    f << "[risk]\ndelta=1\nsigma=0.5\nbeta=1\neps=0.4\n";
  }
  auto r = call({"--config", cfg.string(), "risk", "hsvr"});
  REQUIRE(r.code == kExitOk);
  CHECK(*r.table().at(0, "risk") == parsed(hsvr_risk({1.0, 0.5, 1.0, 0.4, NoiseModel::gaussian()}).risk));
  // the full configuration is echoed
  int echoed = 0;
  for (const auto& [k, v] : r.table().metadata)
    if (k == "config" && v.rfind("risk.", 0) == 0) ++echoed;
  CHECK(echoed >= 5);
  // flags override the file
  r = call({"--config", cfg.string(), "risk", "hsvr", "--eps", "1.0"});
  CHECK(*r.table().at(0, "eps") == 1.0);
  {
    std::ofstream f(cfg);
    f << "[risk]\ndelta=1\nbogus=3\n";
  }
  CHECK(call({"--config", cfg.string(), "risk", "hsvr"}).code == kExitUsage);
  {
    std::ofstream f(cfg);
    f << "nonsense=1\n";
  }
  CHECK(call({"--config", cfg.string(), "delta-star", "--eps", "1"}).code == kExitUsage);
}

TEST_CASE("figure 1 and 4 columns, --output") {
  const auto out = scratch("fig1.csv");
  auto r = call({"--output", out.string(), "figure", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const Table t1 = read_csv(in);
  CHECK(t1.columns == std::vector<std::string>{"eps", "delta_star_sigma0.1", "delta_star_sigma0.2",
                                               "delta_star_sigma0.5", "delta_star_sigma1"});
  CHECK(*t1.at(0, "delta_star_sigma1") == doctest::Approx(1.0));
  r = call({"figure", "4"});
  REQUIRE(r.code == kExitOk);
  const Table t4 = r.table();
  CHECK(t4.columns == std::vector<std::string>{"delta", "risk_eps1", "risk_eps1.2", "risk_eps1.5", "risk_opt"});
  for (std::size_t i = 0; i < t4.rows.size(); ++i) {
    for (const char* c : {"risk_eps1", "risk_eps1.2", "risk_eps1.5"}) {
      if (const auto v = t4.at(i, c)) CHECK(*t4.at(i, "risk_opt") <= *v + 1e-6);
    }
  }
  CHECK(label("risk_eps", 1.2) == "risk_eps1.2");
}

TEST_CASE("figure 7a with a small empirical run") {
  const auto r = call({"figure", "7a", "--p", "30", "--trials", "2"});
  REQUIRE(r.code == kExitOk);
  const Table t = r.table();
  for (const char* c : {"delta", "hsvr", "ssvr", "ridge", "emp_hsvr", "emp_ssvr", "emp_ridge"})
    CHECK(t.column_index(c));
  CHECK(*t.at(t.rows.size() - 1, "delta") == doctest::Approx(3.8));
  // tuned soft SVR never loses to the tuned hard one
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(*t.at(i, "ssvr") <= *t.at(i, "hsvr") + 1e-6);
}
