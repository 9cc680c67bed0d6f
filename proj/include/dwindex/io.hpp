#pragma once

#include "dwindex/certifier.hpp"
#include "dwindex/index_search.hpp"
#include "dwindex/lp_shell.hpp"
#include "dwindex/metrics.hpp"
#include "dwindex/polytope.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace dwindex::io {

using Json = nlohmann::json;

// {"dim": d, "vertices": [[...], ...], "tol": t, "symmetrize": bool}
// "tol" defaults to 1e-9; with "symmetrize" missing negations are appended.
PolyhedralSpace space_from_json(const Json& j);
// Writes dim, tol, vertices and (informational) facets.
Json space_to_json(const PolyhedralSpace& space);

// {"matrix": [[...], ...]} row-major.
Operator operator_from_json(const Json& j);
Json operator_to_json(const Operator& t);

// {"matrix_re": [[...]], "matrix_im": [[...]]}; "matrix_im" may be omitted.
shell::ComplexOperator complex_operator_from_json(const Json& j);
Json complex_operator_to_json(const shell::ComplexOperator& t);

Json radius_report_to_json(const RadiusReport& report, RadiusKind kind);
Json index_estimate_to_json(const IndexEstimate& estimate);
Json vertex_certificate_to_json(const VertexCertificate& cert);

Json witness_to_json(const std::optional<shell::ConvexityWitness>& witness, double tol);
void write_shell_csv(std::ostream& out, const shell::ShellSample& sample);

// Parses text, mapping parse failures to Error{Parse}.
Json parse(const std::string& text);
std::string read_file(const std::string& path);

} // namespace dwindex::io
