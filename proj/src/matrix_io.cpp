#include <cmath>
#include <fstream>
#include <sstream>

#include "phm/cli.hpp"

namespace phm::cli {
namespace {

double finite_number(const Json& v, const char* what) {
    if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
    return x;
}

} // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix document must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw ParseError("field `n` must be an integer");
    const auto n = doc["n"].get<std::int64_t>();
    if (n < 1) throw ParseError("field `n` must be positive");
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("field `entries` must be an array");
    const Json& rows = doc["entries"];
    if (static_cast<std::int64_t>(rows.size()) != n) {
        throw ParseError("`entries` has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
    }
    ComplexMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || static_cast<std::int64_t>(row.size()) != n) {
            throw ParseError("row " + std::to_string(i) + " must hold " + std::to_string(n) + " entries");
        }
        for (std::int64_t j = 0; j < n; ++j) {
            const Json& z = row[j];
            if (!z.is_array() || z.size() != 2) {
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") must be [re, im]");
            }
            m(i, j) = Complex(finite_number(z[0], "real part"), finite_number(z[1], "imaginary part"));
        }
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

Json matrix_entries(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_document(const ComplexMatrix& m) {
    return {{"n", m.rows()}, {"entries", matrix_entries(m)}};
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

} // namespace phm::cli
