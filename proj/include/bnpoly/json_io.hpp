#pragma once

// JSON forms of the library's values. Rationals are "p/q" strings, subsets are
// label strings ("abc"), family indices are "a|bc", DAGs map each node to its
// parent string ({"a": "", "b": "a"}).

#include <string_view>

#include <json.hpp>

#include "bnpoly/dags.hpp"
#include "bnpoly/ground_model.hpp"
#include "bnpoly/inequalities.hpp"
#include "bnpoly/polyhedra.hpp"
#include "bnpoly/verify.hpp"

namespace bnpoly {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "bnpoly/1";

/// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);
inline Json rational_to_json(const Rational& q) { return format_rational(q); }

Json to_json(const GroundSet& gs, const FamVector& v);
Json to_json(const GroundSet& gs, const CharVector& v);
Json to_json(const GroundSet& gs, const SetFunction& v);
Json to_json(const GroundSet& gs, const Dag& g);
Json to_json(const GroundSet& gs, const FamInequality& ineq);
Json to_json(const GroundSet& gs, const CharInequality& ineq);

FamVector fam_vector_from_json(const GroundSet& gs, const Json& j);
CharVector char_vector_from_json(const GroundSet& gs, const Json& j);
SetFunction set_function_from_json(const GroundSet& gs, const Json& j);
FamInequality fam_inequality_from_json(const GroundSet& gs, const Json& j);
CharInequality char_inequality_from_json(const GroundSet& gs, const Json& j);

/// "abcd" or ["x1","x2"].
GroundSet ground_set_from_json(const Json& j);

/// Ground set from the keys of a DAG object.
GroundSet ground_set_of_dag_json(const Json& j);
Dag dag_from_json(const GroundSet& gs, const Json& j);

/// Dense representations, with the coordinate keys spelled out.
Json to_json(const GroundSet& gs, const VRep& v);
Json to_json(const GroundSet& gs, const HRep& h);
VRep vrep_from_json(const Json& j);
HRep hrep_from_json(const Json& j);

Json to_json(const VerificationReport& report);

/// Keys of the ambient index family, formatted.
std::vector<std::string> coordinate_names(const GroundSet& gs, IndexFamily family);

}  // namespace bnpoly
