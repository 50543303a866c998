#include "lags/core_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lags {

namespace {

// Splits one CSV record on commas.  Fields here are numbers and plain header
// labels, so the only quoting handled is a surrounding pair of double quotes.
std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.pop_back();
        if (f.size() >= 2 && f.front() == '"' && f.back() == '"') f = f.substr(1, f.size() - 2);
    }
    return fields;
}

double parse_number(const std::string& field, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty()) {
        throw ParseError(row, col, "expected a number, got \"" + field + "\"");
    }
    if (!std::isfinite(value)) {
        throw ParseError(row, col, "non-finite value");
    }
    return value;
}

}  // namespace

Dataset parse_csv(const std::string& text, const std::string& response,
                  const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw EmptyData();
    const std::vector<std::string> header = split_record(line);

    std::ptrdiff_t response_col = -1;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (header[j] == response) {
            response_col = static_cast<std::ptrdiff_t>(j);
            break;
        }
    }
    if (response_col < 0) throw MissingColumn(response + " (in " + origin + ")");

    std::vector<std::string> names;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (static_cast<std::ptrdiff_t>(j) != response_col) names.push_back(header[j]);
    }
    if (names.empty()) throw EmptyData();  // a dataset needs at least one predictor

    std::vector<double> yv;
    std::vector<double> xv;  // row-major, p entries per row
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_record(line);
        if (fields.size() != header.size()) {
            throw ParseError(row, fields.size() + 1,
                             "expected " + std::to_string(header.size()) + " fields, got " +
                                 std::to_string(fields.size()));
        }
        for (std::size_t j = 0; j < fields.size(); ++j) {
            const double v = parse_number(fields[j], row, j + 1);
            if (static_cast<std::ptrdiff_t>(j) == response_col) {
                yv.push_back(v);
            } else {
                xv.push_back(v);
            }
        }
    }
    if (yv.empty()) throw EmptyData();

    const Eigen::Index n = static_cast<Eigen::Index>(yv.size());
    const Eigen::Index p = static_cast<Eigen::Index>(names.size());
    Dataset d;
    d.y = Eigen::Map<const Eigen::VectorXd>(yv.data(), n);
    d.X.resize(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            d.X(i, j) = xv[static_cast<std::size_t>(i * p + j)];
        }
    }
    d.column_names = std::move(names);
    d.response_name = response;
    return d;
}

Dataset load_csv(const std::string& path, const std::string& response) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFound(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), response, path);
}

StandardizedDesign standardize(const Dataset& d) {
    if (d.n() == 0) throw EmptyData();
    const Eigen::Index n = d.n();
    const Eigen::Index p = d.p();

    StandardizedDesign s;
    s.col_means = d.X.colwise().mean();
    s.Xs = d.X.rowwise() - s.col_means.transpose();
    s.col_scales.resize(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        const double var = s.Xs.col(j).squaredNorm() / static_cast<double>(n);
        if (var <= 0.0 || !std::isfinite(var)) throw ConstantColumn(static_cast<std::size_t>(j));
        s.col_scales(j) = std::sqrt(var);
        s.Xs.col(j) /= s.col_scales(j);
    }
    s.y_mean = d.y.mean();
    s.yc = d.y.array() - s.y_mean;
    return s;
}

GramCache gram_raw(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    if (X.rows() == 0) throw EmptyData();
    GramCache g;
    g.n = X.rows();
    const double inv_n = 1.0 / static_cast<double>(g.n);
    g.C = (X.transpose() * X) * inv_n;
    g.C = 0.5 * (g.C + g.C.transpose().eval());  // exact symmetry
    g.xty = (X.transpose() * y) * inv_n;
    g.inf_norm = g.C.cwiseAbs().rowwise().sum().maxCoeff();
    return g;
}

GramCache gram(const StandardizedDesign& s) { return gram_raw(s.Xs, s.yc); }

Eigen::VectorXd correlations(const StandardizedDesign& s) {
    const double ynorm = s.yc.norm();
    if (ynorm <= 0.0) throw ZeroResponse();
    Eigen::VectorXd c(s.p());
    for (Eigen::Index j = 0; j < s.p(); ++j) {
        c(j) = s.Xs.col(j).dot(s.yc) / (s.Xs.col(j).norm() * ynorm);
    }
    return c;
}

RescaledFit destandardize(const Eigen::VectorXd& beta_s, const StandardizedDesign& s) {
    if (beta_s.size() != s.p()) {
        throw InvalidArgument("coefficient length does not match the design");
    }
    RescaledFit f;
    f.beta = beta_s.cwiseQuotient(s.col_scales);
    f.intercept = s.y_mean - f.beta.dot(s.col_means);
    return f;
}

}  // namespace lags
