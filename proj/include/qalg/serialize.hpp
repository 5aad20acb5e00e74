#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qalg/glelem.hpp"

namespace qalg {

/// QScalar: list of [s-exponent, "num/den"] pairs, exponents strictly
/// increasing. AlgElem: {"n", "terms": [{"coeff", "word": [[i,j],...]}]}.
/// GLElem adds "det_power". TensorElem: {"arity", "terms": [{"coeff",
/// "left", ("mid",) "right"}]} with slots as GLElem JSON.
nlohmann::json json_of(const QScalar& c);
nlohmann::json json_of(const AlgElem& a);
nlohmann::json json_of(const GLElem& a);
nlohmann::json json_of(const TensorElem& t);

/// Graded families render as {"components": {"<degree>": <GLElem>}}.
nlohmann::json json_of_graded(const std::map<int, GLElem>& parts);

/// Inverses of the element encoders; canonical values round-trip to
/// equality. Malformed input raises bad_argument.
QScalar qscalar_of_json(const nlohmann::json& j);
AlgElem algelem_of_json(const nlohmann::json& j);
GLElem glelem_of_json(const nlohmann::json& j);

/// Human rendering: coefficients in q where possible, generators as
/// x[i,j], det_q^{-k} spelled detq^-k. Deterministic term order.
std::string pretty(const GLElem& a);

}  // namespace qalg
