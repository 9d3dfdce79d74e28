#include "opcert/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace opcert {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            data.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("data")) {
        throw JsonFormatError("matrix JSON must be an object with rows, cols, data");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
        throw JsonFormatError("rows and cols must be integers");
    }
    const auto rows = j["rows"].get<Index>();
    const auto cols = j["cols"].get<Index>();
    if (rows <= 0 || cols <= 0) {
        throw JsonFormatError("rows and cols must be positive");
    }
    const json& data = j["data"];
    if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols) {
        throw JsonFormatError("data must hold exactly rows*cols [re, im] pairs");
    }
    ComplexMatrix m(rows, cols);
    Index idx = 0;
    for (Index i = 0; i < rows; ++i) {
        for (Index j2 = 0; j2 < cols; ++j2, ++idx) {
            const json& entry = data[static_cast<std::size_t>(idx)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw JsonFormatError("each data entry must be an [re, im] pair");
            }
            m(i, j2) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw JsonFormatError(path + ": " + e.what());
    }
    return matrix_from_json(j);
}

json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        out.push_back({v(i).real(), v(i).imag()});
    }
    return out;
}

json certificate_to_json(const ClassCertificate& cert) {
    json j{{"verdict", to_string(cert.verdict)},
           {"defect", cert.defect},
           {"restarts_used", cert.diagnostics.restarts_used}};
    j["witness"] = cert.witness ? vector_to_json(*cert.witness) : json(nullptr);
    return j;
}

json pf_report_to_json(const PfReport& report) {
    json labels = json::object();
    for (const auto& [key, value] : report.labels) labels[key] = value;
    return json{{"forward", report.forward_residual},
                {"adjoint", report.adjoint_residual},
                {"x_norm", report.x_norm},
                {"labels", std::move(labels)}};
}

json head_report_to_json(const TwoDimHeadReport& report) {
    return json{{"samples", report.samples},
                {"max_head_error", report.max_head_error},
                {"min_head_discriminant", report.min_head_discriminant},
                {"max_tail_error", report.max_tail_error},
                {"pass", report.pass}};
}

}  // namespace opcert
