// Deterministic text emission: number rendering, the path/segment/dataset
// CSV layouts, and file writing.
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <lags/core_data.hpp>
#include <lags/io.hpp>
#include <lags/lags_core.hpp>
#include <lags/weights.hpp>

using namespace lags;

namespace {

GradientSystem toy_system() {
    GradientSystem sys;
    sys.M.resize(4, 1);
    sys.M << 2, 3, 5, 7;
    sys.rhs.resize(4);
    sys.rhs << 7, 2, 4, 2;
    return sys;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("doubles render round-trippably with a locale-independent dot") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.0) == "-2");
    CHECK(format_double(0.0) == "0");
    const double third = 1.0 / 3.0;
    CHECK(std::strtod(format_double(third).c_str(), nullptr) == third);
    const double tiny = 1.2345678901234567e-12;
    CHECK(std::strtod(format_double(tiny).c_str(), nullptr) == tiny);
}

TEST_CASE("the path table has one row per grid point and variable") {
    const PathResult r = fit_path(toy_system(), {5.0, 2.0, 1.0}, uniform_weights(1));
    const std::string csv = emit_path_csv(r, {"x1"});
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "lambda,variable,coefficient,segment_id");
    CHECK(lines[1] == "5,x1," + format_double(2.0 / 7.0) + ",0");
    CHECK(lines[2] == "2,x1," + format_double(2.0 / 3.0) + ",1");
    CHECK(lines[3] == "1,x1," + format_double(2.0 / 3.0) + ",1");
}

TEST_CASE("a single fit with two variables emits exactly two data rows") {
    GradientSystem sys;
    sys.M = Eigen::MatrixXd::Identity(2, 2);
    sys.rhs.resize(2);
    sys.rhs << 1, 2;
    const PathResult r = fit_path(sys, {0.25}, uniform_weights(2));
    const auto lines = split_lines(emit_path_csv(r, {"a", "b"}));
    REQUIRE(lines.size() == 3);
    CHECK(lines[1].rfind("0.25,a,", 0) == 0);
    CHECK(lines[2].rfind("0.25,b,", 0) == 0);
}

TEST_CASE("an empty path emits only the header") {
    const PathResult empty;
    CHECK(emit_path_csv(empty, {}) == "lambda,variable,coefficient,segment_id\n");
    CHECK(emit_segments_csv(empty) ==
          "segment_id,lambda_high,lambda_low,first_index,last_index\n");
}

TEST_CASE("the emitter rejects a name list of the wrong length") {
    const PathResult r = fit_path(toy_system(), {1.0}, uniform_weights(1));
    CHECK_THROWS_AS(emit_path_csv(r, {"a", "b"}), InvalidArgument);
    CHECK_THROWS_AS(emit_path_csv(r, {}), InvalidArgument);
}

TEST_CASE("the segment table mirrors the detected runs") {
    const PathResult r = fit_path(toy_system(), {5.0, 2.0, 1.0}, uniform_weights(1));
    const auto lines = split_lines(emit_segments_csv(r));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "segment_id,lambda_high,lambda_low,first_index,last_index");
    CHECK(lines[1] == "0,5,5,0,0");
    CHECK(lines[2] == "1,2,1,1,2");
}

TEST_CASE("datasets round-trip through their CSV rendering") {
    Dataset d;
    d.X.resize(2, 2);
    d.X << 1, 0, 0, 2;
    d.y.resize(2);
    d.y << 3.5, -1.25;
    d.column_names = {"u", "v"};
    d.response_name = "y";
    const std::string csv = emit_dataset_csv(d);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "y,u,v");
    const Dataset back = parse_csv(csv, "y");
    CHECK((back.X - d.X).cwiseAbs().maxCoeff() == 0.0);
    CHECK((back.y - d.y).cwiseAbs().maxCoeff() == 0.0);
    CHECK(back.column_names == d.column_names);
}

TEST_CASE("benchmark rows carry the full design and result record") {
    CHECK(bench_csv_header() ==
          "method,n,p,p0,rho,snr,seed,nonzeros,train_err,test_err,"
          "support_recovered,l2_err_sq\n");
    SimDesign d;
    d.n = 10;
    d.p = 3;
    d.p0 = 1;
    d.rho = 0.5;
    d.snr = 2.0;
    d.beta_true = pattern_beta(3, 1);
    d.seed = 77;
    BenchResult r;
    r.method = "lags";
    r.nonzeros = 2;
    r.train_err = 0.25;
    r.test_err = 0.5;
    r.support_recovered = true;
    r.l2_err_sq = 0.125;
    r.chosen_lambda = 0.75;
    CHECK(bench_csv_row(r, d) == "lags,10,3,1,0.5,2,77,2,0.25,0.5,1,0.125\n");
}

TEST_CASE("write_file creates files and reports unwritable paths") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "io_write_check.txt";
    write_file(path.string(), "payload\n");
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "payload\n");
    fs::remove(path);
    CHECK_THROWS_AS(write_file("/no_such_dir_anywhere/x/file.txt", "y"), IoError);
}
