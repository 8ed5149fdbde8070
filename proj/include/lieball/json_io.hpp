#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lieball/classify.hpp"
#include "lieball/domains.hpp"
#include "lieball/groups.hpp"
#include "lieball/hforms.hpp"
#include "lieball/jets.hpp"
#include "lieball/maps.hpp"
#include "lieball/metrics.hpp"

namespace lieball {

using Json = nlohmann::ordered_json;

/// All readers throw Error(ParseError) on schema violations.

Json matrix_to_json(const ComplexMatrix& m);
Json matrix_to_json(const RealMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json domain_to_json(const DomainSpec& d);
DomainSpec domain_from_json(const Json& j);

/// {"re", "im", "exact": [re(a), im(a), re(b), im(b)]} for a + b sqrt 2.
Json exact_to_json(const ExactScalar& c);
ExactScalar exact_from_json(const Json& j);

Json expr_to_json(const HoloExpr& e);
HoloExpr expr_from_json(const Json& j);

/// A catalog key string or {"name", "source", "target", "components"}.
Json map_to_json(const HoloMap& f);
HoloMap map_from_json(const Json& j);

/// {"group": {"name", "domain"}, "matrix"}.
Json automorphism_to_json(const Automorphism& a);
Automorphism automorphism_from_json(const Json& j);

/// {"n", "monomials", "coeff"}.
Json form_to_json(const HermitianForm& h);
HermitianForm form_from_json(const Json& j);

Json series_to_json(const ExactSeries& s, const std::vector<std::string>& names);

Json to_json(const IsometryVerdict& v);
Json to_json(const ProperVerdict& v);
Json to_json(const SignatureResult& s);
Json to_json(const CanonicalForm& c);
Json to_json(const WitnessPair& w);
Json to_json(const Classification& c);
Json to_json(const MappingResidual& r, int n);
Json to_json(const NormalFormReport& r, int n);

Json read_json_file(const std::string& path);

}  // namespace lieball
