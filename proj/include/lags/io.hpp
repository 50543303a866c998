// Deterministic text output: locale-independent number rendering and the
// CSV emitters shared by the command-line tool and the test suites.
#pragma once

#include <string>
#include <vector>

#include "lags/core_data.hpp"
#include "lags/errors.hpp"
#include "lags/lags_core.hpp"
#include "lags/synth_bench.hpp"

namespace lags {

// 17-significant-digit decimal rendering (round-trips every double), always
// with '.' as the separator regardless of locale.
std::string format_double(double v);

// Header `lambda,variable,coefficient,segment_id`, one row per
// (lambda, variable) in descending-lambda then variable order.  Grid points
// whose solve failed contribute no rows (their segment id is still consumed).
std::string emit_path_csv(const PathResult& r, const std::vector<std::string>& names);

// Companion table: segment_id,lambda_high,lambda_low,first_index,last_index.
std::string emit_segments_csv(const PathResult& r);

// Dataset as a CSV with the response first: y,<x names>.
std::string emit_dataset_csv(const Dataset& d);

std::string bench_csv_header();
std::string bench_csv_row(const BenchResult& r, const SimDesign& d);

// Writes `content` to `path`, throwing IoError on failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace lags
