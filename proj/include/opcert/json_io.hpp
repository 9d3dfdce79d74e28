#pragma once

#include "opcert/bandop.hpp"
#include "opcert/classes.hpp"
#include "opcert/intertwine.hpp"
#include "opcert/matrix.hpp"

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>

namespace opcert {

struct JsonFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shared matrix format: {"rows": n, "cols": m, "data": [[re, im], ...]}
/// with data in row-major order, exactly rows*cols pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexMatrix read_matrix_file(const std::string& path);

nlohmann::json vector_to_json(const ComplexVector& v);

nlohmann::json certificate_to_json(const ClassCertificate& cert);
nlohmann::json pf_report_to_json(const PfReport& report);
nlohmann::json head_report_to_json(const TwoDimHeadReport& report);

}  // namespace opcert
