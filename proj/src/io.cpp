#include "lags/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

namespace lags {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string emit_path_csv(const PathResult& r, const std::vector<std::string>& names) {
    std::string out = "lambda,variable,coefficient,segment_id\n";
    for (std::size_t seg = 0; seg < r.segments.size(); ++seg) {
        const PathSegment& s = r.segments[seg];
        for (int i = s.first_index; i <= s.last_index; ++i) {
            const PathPoint& pt = r.points[static_cast<std::size_t>(i)];
            if (!pt.fit.has_value()) continue;
            const Eigen::VectorXd& beta = pt.fit->beta;
            if (static_cast<Eigen::Index>(names.size()) != beta.size()) {
                throw InvalidArgument("variable name list does not match coefficient count");
            }
            for (Eigen::Index j = 0; j < beta.size(); ++j) {
                out += format_double(pt.lambda);
                out += ',';
                out += names[static_cast<std::size_t>(j)];
                out += ',';
                out += format_double(beta(j));
                out += ',';
                out += std::to_string(seg);
                out += '\n';
            }
        }
    }
    return out;
}

std::string emit_segments_csv(const PathResult& r) {
    std::string out = "segment_id,lambda_high,lambda_low,first_index,last_index\n";
    for (std::size_t seg = 0; seg < r.segments.size(); ++seg) {
        const PathSegment& s = r.segments[seg];
        out += std::to_string(seg);
        out += ',';
        out += format_double(s.lambda_high);
        out += ',';
        out += format_double(s.lambda_low);
        out += ',';
        out += std::to_string(s.first_index);
        out += ',';
        out += std::to_string(s.last_index);
        out += '\n';
    }
    return out;
}

std::string emit_dataset_csv(const Dataset& d) {
    std::string out = d.response_name.empty() ? std::string("y") : d.response_name;
    for (const auto& name : d.column_names) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (Eigen::Index i = 0; i < d.n(); ++i) {
        out += format_double(d.y(i));
        for (Eigen::Index j = 0; j < d.p(); ++j) {
            out += ',';
            out += format_double(d.X(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string bench_csv_header() {
    return "method,n,p,p0,rho,snr,seed,nonzeros,train_err,test_err,support_recovered,"
           "l2_err_sq\n";
}

std::string bench_csv_row(const BenchResult& r, const SimDesign& d) {
    std::string out = r.method;
    out += ',';
    out += std::to_string(d.n);
    out += ',';
    out += std::to_string(d.p);
    out += ',';
    out += std::to_string(d.p0);
    out += ',';
    out += format_double(d.rho);
    out += ',';
    out += format_double(d.snr);
    out += ',';
    out += std::to_string(d.seed);
    out += ',';
    out += std::to_string(r.nonzeros);
    out += ',';
    out += format_double(r.train_err);
    out += ',';
    out += format_double(r.test_err);
    out += ',';
    out += r.support_recovered ? "1" : "0";
    out += ',';
    out += format_double(r.l2_err_sq);
    out += '\n';
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace lags
