#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cache.hpp"
#include "cli.hpp"

namespace tfh::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tf_hankel");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cell += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += c;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("tfh_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    std::filesystem::remove_all(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TEST(Cache, RoundTripPreservesEveryCoefficient) {
  for (auto kind : {EquationKind::Atom, EquationKind::MagneticField}) {
    const SeriesTable t = expand(kind, 30);
    std::stringstream buf;
    write_cache(buf, t);
    EXPECT_EQ(read_cache(buf), t);
  }
}

TEST(Cache, RejectsDamagedFiles) {
  std::stringstream buf;
  write_cache(buf, expand(EquationKind::Atom, 8));
  const std::string good = buf.str();

  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_cache(in);
  };
  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("format 1"), 8, "format 9");
  EXPECT_THROW(read(wrong_version), std::runtime_error);
  EXPECT_THROW(read(good.substr(0, good.rfind('\n', good.size() - 2) + 1)), std::runtime_error);
  EXPECT_THROW(read(good + "11 1/2\n"), std::runtime_error);
  EXPECT_THROW(read(good + "9 1/0\n"), std::runtime_error);
}

TEST(Cache, StoreThenLoad) {
  TempDir dir;
  const SeriesTable t = expand(EquationKind::MagneticField, 12);
  store_cached(dir.path(), t);
  EXPECT_EQ(load_cached(dir.path(), EquationKind::MagneticField, 12), t);
  EXPECT_FALSE(load_cached(dir.path(), EquationKind::MagneticField, 13).has_value());
  EXPECT_EQ(cache_file_name(EquationKind::Atom, 33), "atom_order33_v1.tfseries");
}

TEST(Cli, SlopeCsvLayout) {
  const Result r = invoke({"slope", "--equation", "atom", "--d", "3", "--D-max", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"D", "d", "s_root", "slope", "L_base10"}));
  EXPECT_EQ(rows[1][0], "2");
  EXPECT_EQ(rows[1][3], "-1.1151262143158926682");
  EXPECT_EQ(rows[1][4], "");
  EXPECT_NE(rows[2][4], "");
}

TEST(Cli, JsonCarriesTheSameCells) {
  const std::vector<std::string> base{"converge", "--equation", "magnetic", "--d", "4", "--d", "5", "--D-max", "5"};
  const Result csv = invoke(base);
  auto with_json = base;
  with_json.insert(with_json.end(), {"--format", "json"});
  const Result json = invoke(with_json);
  ASSERT_EQ(csv.code, kExitOk);
  ASSERT_EQ(json.code, kExitOk);
  const auto rows = parse_csv(csv.out);
  const auto doc = nlohmann::json::parse(json.out);
  ASSERT_EQ(doc["results"].size(), rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
      EXPECT_EQ(doc["results"][i - 1][rows[0][c]].get<std::string>(), rows[i][c]);
    }
  }
  EXPECT_EQ(doc["metadata"]["log_base"], "10");
  EXPECT_EQ(doc["config"]["d"], nlohmann::json::array({4, 5}));
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"slope", "--equation", "magnetic", "--d", "4", "--D-max", "6", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, WarmCacheGivesIdenticalOutput) {
  TempDir dir;
  const std::vector<std::string> args{"slope", "--d", "4", "--D-max", "6", "--cache", dir.path().string()};
  const Result cold = invoke(args);
  ASSERT_EQ(cold.code, kExitOk);
  ASSERT_TRUE(std::filesystem::exists(dir.path() / cache_file_name(EquationKind::Atom, 15)));
  const Result warm = invoke(args);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_NE(warm.err.find("from cache"), std::string::npos);
}

TEST(Cli, DamagedCacheIsRecomputed) {
  TempDir dir;
  std::filesystem::create_directories(dir.path());
  std::ofstream(dir.path() / cache_file_name(EquationKind::Atom, 15)) << "format 1\nequation atom\norder 15\n0 1/1\n";
  const std::vector<std::string> args{"slope", "--d", "4", "--D-max", "6", "--cache", dir.path().string()};
  const Result r = invoke(args);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(r.out, invoke({"slope", "--d", "4", "--D-max", "6"}).out);
}

TEST(Cli, TableAtGivenSlope) {
  const Result r = invoke({"table", "--slope", "-1.588071022611375313", "--x", "0,1,100", "--digits", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"0", "1", "ok"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"1", "0.42400806", "ok"}));
  EXPECT_EQ(rows[3][2], "ok");
}

TEST(Cli, UsageErrorsExitWithOne) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"slope", "--d", "2"},
           {"slope", "--d", "7"},
           {"slope", "--equation", "molecule"},
           {"slope", "--precision", "8"},
           {"slope", "--d", "3", "--d", "4"},
           {"table", "--pade", "8/5"},
           {"table", "--pade", "five"},
           {"table", "--x", "-1"},
           {"oracle", "--tol", "0"},
           {"oracle", "--bracket", "-2"},
           {"slope", "--format", "xml"},
       }) {
    const Result r = invoke(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "(none)" : args[0] + " " + (args.size() > 1 ? args[1] : ""));
    EXPECT_NE(r.err.find("fix:"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, OffsetErrorExplainsTheBound) {
  const Result r = invoke({"converge", "--d", "2"});
  EXPECT_NE(r.err.find("d >= 3"), std::string::npos);
}

TEST(Cli, ComputationFailuresExitWithTwo) {
  const Result r = invoke({"oracle", "--bracket", "-1.2,-1.0", "--tol", "1e-4"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, OracleReportsSupportedDigits) {
  const Result r = invoke({"oracle", "--equation", "magnetic", "--tol", "1e-6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][0], "magnetic");
  EXPECT_EQ(rows[1][1], "-0.938967");
  EXPECT_EQ(rows[1][3], "-2");
  EXPECT_EQ(rows[1][4], "-0.5");
}

}  // namespace
}  // namespace tfh::cli
