#pragma once

#include <json.hpp>
#include <string>

#include "cdl/bounds.hpp"
#include "cdl/design.hpp"
#include "cdl/grouprep.hpp"
#include "cdl/scheme.hpp"

namespace cdl {

using Json = nlohmann::json;

Json to_json(const BiDegree& d);
Json to_json(const LowerSet& s);
Json to_json(Complex z);
Json to_json(const Rational& r);  // {"num": "...", "den": "...", "decimal": x}
Json to_json(const DesignReport& rep);
Json to_json(const AngleSet& a);
Json to_json(const BoundCertificate& cert);
Json to_json(const TightnessReport& rep);
Json to_json(const SchemeReport& rep);
Json to_json(const MolienTable& t);
Json to_json(const InvarianceReport& rep);

// stable plain-text rendering used for golden tests
std::string text_report(const Json& j, int indent = 0);

}  // namespace cdl
