#pragma once

// JSON documents "h8cert/1" and "d4cert/1": integers as decimal strings,
// rationals as "num/den", field elements as a base plus coordinate strings.

#include <string>

#include "json.hpp"

#include "h8ext/construct.hpp"
#include "h8ext/dihedral.hpp"

namespace h8ext {

nlohmann::json element_to_json(const MultiquadElement& x);
MultiquadElement element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtensionCertificate& cert);
nlohmann::json to_json(const D4Certificate& cert);

/// Throw InvalidInput on a wrong schema tag or malformed fields. Values are
/// taken as written; use verify_certificate / d4_check to validate them.
ExtensionCertificate h8_certificate_from_json(const nlohmann::json& j);
D4Certificate d4_certificate_from_json(const nlohmann::json& j);

}  // namespace h8ext
