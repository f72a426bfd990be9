#pragma once

#include <json.hpp>

#include "axial/classifier.hpp"

namespace axial {

using Json = nlohmann::ordered_json;

/// {labels: [...], sc: [[[scalar-string, ...], ...], ...]} using the scalar
/// text grammar; round-trips exactly.
Json algebra_to_json(const Algebra& alg);

/// Loader; validates the commutativity invariant sc[i][j] = sc[j][i].
Algebra algebra_from_json(const Json& j);

Json gram_to_json(const Mat<Scalar>& g);
Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

Json params_to_json(const ParameterTuple& p);
ParameterTuple params_from_json(const Json& j);

/// Full model envelope: algebra, generators, Gram, provenance, notes.
Json model_to_json(const ModelAlgebra& m);

Json row_match_to_json(const ParameterTuple& p, const RowMatch& m);
Json row_verification_to_json(const RowVerification& v);
Json table_report_to_json(const TableReport& r);
Json generic_verification_to_json(const GenericVerification& v);

}  // namespace axial
