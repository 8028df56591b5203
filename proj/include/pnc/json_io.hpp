#pragma once

#include <json.hpp>

#include "pnc/classify.hpp"
#include "pnc/geometry.hpp"
#include "pnc/normalform.hpp"

namespace pnc {

using json = nlohmann::json;

json to_json(const Integer& v);  // number when it fits, decimal string otherwise
json to_json(const Rational& q);  // [num, den]
json to_json(const KeySequence& omega);
json to_json(const LaurentPoly& f);       // [[num, den, ex, ey], ...]
json to_json(const GenericSeries& s);     // {"body": [[an,ad,en,ed],...], "r": [n,d]}
json to_json(const BasisExpansion& e);
json to_json(const SequenceClass& c);
json to_json(const GcdLadder& lad);
json to_json(const BoundedRep& rep);
json to_json(const SemigroupDecision& dec);
json to_json(const KeyFormSet& kf);
json to_json(const FormalPairs& fp);
json to_json(const SingularityReport& rep);
json to_json(const EmbeddingEquations& eq);
json to_json(const CurveAtInfinityReport& rep);
json to_json(const BrentonResult& rep);
json to_json(const AutDescriptor& d);
json to_json(const ModuliReport& rep);
json to_json(const G2aReport& rep);
json to_json(const CoordinateChange& t);
json to_json(const NormalizeResult& r);

Rational rational_from_json(const json& j);  // number or [num, den]
KeySequence omega_from_json(const json& j);
ThetaVector theta_from_json(const json& j);
LaurentPoly poly_from_json(const json& j);
GenericSeries series_from_json(const json& j);

}  // namespace pnc
