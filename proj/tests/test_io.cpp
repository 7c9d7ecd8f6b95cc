#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fracrsv/csv.hpp"
#include "fracrsv/error.hpp"
#include "fracrsv/plot_script.hpp"
#include "fracrsv/report.hpp"
#include "fracrsv/run_config.hpp"

using namespace fracrsv;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fracrsv_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + needle.size())) ++n;
  return n;
}

Trajectory initial_only(std::size_t n) {
  Trajectory t(make_grid(0.995, 5.0, n), 4, state_labels());
  const auto y0 = florida_initial_state().as_array();
  for (std::size_t i = 0; i < 4; ++i) t(i, 0) = y0[i];
  return t;
}

}  // namespace

TEST(FormatValue, NineDecimals) {
  EXPECT_EQ(format_value(0.426282), "0.426282000");
  EXPECT_EQ(format_value(0.0), "0.000000000");
  EXPECT_EQ(format_value(5.0), "5.000000000");
  EXPECT_EQ(format_value(-0.25), "-0.250000000");
}

TEST(TrajectoryCsv, FirstRowIsInitialState) {
  const std::string text = trajectory_csv(initial_only(400));
  std::istringstream in(text);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "t,S,E,I,R");
  EXPECT_EQ(first, "0.000000000,0.426282000,0.010956600,0.027507600,0.535254000");
}

TEST(TrajectoryCsv, TwoNodeZeroTrajectory) {
  const Trajectory t(make_grid(1.0, 1.0, 2), 4);
  EXPECT_EQ(trajectory_csv(t),
            "t,S,E,I,R\n"
            "0.000000000,0.000000000,0.000000000,0.000000000,0.000000000\n"
            "1.000000000,0.000000000,0.000000000,0.000000000,0.000000000\n");
}

TEST(TrajectoryCsv, RoundTripWithinPrintedPrecision) {
  TempDir dir;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    Trajectory t(make_grid(0.8, 2.0 + trial, 30 + trial), 4, state_labels());
    for (std::size_t j = 0; j < t.size(); ++j)
      for (std::size_t i = 0; i < 4; ++i) t(i, j) = u(rng);
    const fs::path file = dir.path / "round.csv";
    write_trajectory_csv(t, file);
    const Trajectory back = read_trajectory_csv(file, 0.8);
    ASSERT_TRUE(back.grid().same_as(t.grid()));
    ASSERT_EQ(back.labels(), t.labels());
    for (std::size_t k = 0; k < t.raw().size(); ++k)
      EXPECT_NEAR(back.raw()[k], t.raw()[k], 5e-10 * std::max(1.0, std::abs(t.raw()[k])));
  }
}

TEST(TrajectoryCsv, WritesAreByteIdentical) {
  TempDir dir;
  const Trajectory t = initial_only(50);
  write_trajectory_csv(t, dir.path / "a.csv");
  write_trajectory_csv(t, dir.path / "b.csv");
  EXPECT_EQ(slurp(dir.path / "a.csv"), slurp(dir.path / "b.csv"));
}

TEST(TrajectoryCsv, UnwritablePath) {
  try {
    write_trajectory_csv(initial_only(3), "/nonexistent-dir/x/y.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

TEST(ParseCsv, ColumnsAndErrors) {
  const CsvTable t = parse_csv("t,S\n0,1.5\n1,2.5\n");
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "S"}));
  EXPECT_EQ(t.column("S"), (std::vector<double>{1.5, 2.5}));
  try {
    t.column_index("Q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownColumn);
  }
  EXPECT_THROW(parse_csv("t,S\n0,abc\n"), Error);
  EXPECT_THROW(parse_csv("t,S\n0\n"), Error);
}

TEST(CompareReport, IdenticalRunsGiveZeroNorms) {
  const Trajectory t = initial_only(10);
  const CompareReport r = compare_report(t, t, t);
  for (const auto* table : {&r.euler, &r.pece})
    for (const auto& n : table->norms) {
      EXPECT_EQ(n.l1, 0.0);
      EXPECT_EQ(n.l2, 0.0);
      EXPECT_EQ(n.linf, 0.0);
    }
  const std::string csv = r.csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "method,norm,S,E,I,R");
  EXPECT_EQ(count(csv, "\n"), 7u);
  EXPECT_NE(r.text().find("euler"), std::string::npos);
}

TEST(CompareReport, KnownDifference) {
  const Trajectory ref = initial_only(3);
  Trajectory e = ref;
  e(1, 1) = 3.0;
  e(1, 2) = -4.0;
  const CompareReport r = compare_report(e, ref, ref);
  EXPECT_DOUBLE_EQ(r.euler.norms[1].l1, 7.0);
  EXPECT_DOUBLE_EQ(r.euler.norms[1].l2, 5.0);
  EXPECT_DOUBLE_EQ(r.euler.norms[1].linf, 4.0);
  EXPECT_EQ(r.euler.norms[0].l1, 0.0);
}

TEST(CompareReport, GridMismatch) {
  EXPECT_THROW(compare_report(initial_only(3), initial_only(4), initial_only(3)), Error);
}

class PlotTest : public ::testing::Test {
 protected:
  TempDir dir;
  fs::path csv_a, csv_b;
  void SetUp() override {
    csv_a = dir.path / "euler.csv";
    csv_b = dir.path / "pece.csv";
    write_trajectory_csv(initial_only(5), csv_a);
    write_trajectory_csv(initial_only(5), csv_b);
  }
};

TEST_F(PlotTest, SingleCurve) {
  const std::vector<PlotSource> src{{csv_a, ""}};
  const std::vector<std::string> cols{"S"};
  const std::string gp = plot_script(src, cols, dir.path / "s.gp");
  EXPECT_NE(gp.find("set datafile separator ','"), std::string::npos);
  EXPECT_NE(gp.find("'S(t)'"), std::string::npos);
  EXPECT_NE(gp.find("s.png"), std::string::npos);
  EXPECT_NE(gp.find("'euler.csv'"), std::string::npos);
  EXPECT_EQ(count(gp, "using 1:"), 1u);
}

TEST_F(PlotTest, OverlayHasOneCurvePerSource) {
  const std::vector<PlotSource> src{{csv_a, "euler"}, {csv_b, "pece"}};
  const std::vector<std::string> cols{"I"};
  const std::string gp = plot_script(src, cols, dir.path / "i.gp");
  EXPECT_EQ(count(gp, "using 1:4"), 2u);
  EXPECT_NE(gp.find("I(t) euler"), std::string::npos);
  EXPECT_NE(gp.find("I(t) pece"), std::string::npos);
}

TEST_F(PlotTest, EmitWritesFile) {
  const std::vector<std::string> cols{"S", "R"};
  emit_plot_script(csv_a, cols, dir.path / "sr.gp");
  EXPECT_EQ(count(slurp(dir.path / "sr.gp"), "using 1:"), 2u);
}

TEST_F(PlotTest, Errors) {
  const std::vector<PlotSource> src{{csv_a, ""}};
  try {
    plot_script(src, std::vector<std::string>{}, dir.path / "x.gp");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownColumn);
  }
  try {
    plot_script(src, std::vector<std::string>{"Q"}, dir.path / "x.gp");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownColumn);
  }
  const std::vector<PlotSource> missing{{dir.path / "nope.csv", ""}};
  try {
    plot_script(missing, std::vector<std::string>{"S"}, dir.path / "x.gp");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

TEST(ConfigText, ParsesEntries) {
  const auto m = parse_config_text("# run\nalpha = 0.9\n\n  n=800  # fine grid\nmethod = euler\n");
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(m.at("alpha"), "0.9");
  EXPECT_EQ(m.at("n"), "800");
  EXPECT_EQ(m.at("method"), "euler");
}

TEST(ConfigText, ReportsLine) {
  try {
    parse_config_text("alpha = 0.9\nnot a pair\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  EXPECT_THROW(parse_config_text(" = 3\n"), Error);
}

TEST(RunConfig, Validation) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.alpha = 1.2;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.n_points = 1;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.alpha = 0.7;
  EXPECT_EQ(c.params().alpha, 0.7);
  EXPECT_EQ(c.params().b0, 85.0);
}
