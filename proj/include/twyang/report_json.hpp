#pragma once

#include <json.hpp>

#include "twyang/diagrams.hpp"
#include "twyang/irreducibility.hpp"
#include "twyang/matrix.hpp"
#include "twyang/rational.hpp"

namespace twyang {

using json = nlohmann::ordered_json;

/// Row-major array of rows of rational strings.
json matrix_to_json(const Matrix<Rational>& m);
/// Accepts strings or integers as entries; throws ParseError on ragged or malformed input.
Matrix<Rational> matrix_from_json(const json& j);

/// {"lambda": [...], "mu": [...]}.
json diagram_to_json(const SkewDiagram& d);
SkewDiagram diagram_from_json(const json& j);

json report_to_json(const IrreducibilityReport& r);
/// Inverse of report_to_json; throws ParseError on missing or mistyped keys.
IrreducibilityReport report_from_json(const json& j);

}  // namespace twyang
