#pragma once

#include <json.hpp>

#include "gpslice/almansi.hpp"
#include "gpslice/regular.hpp"

namespace gpslice {

using Json = nlohmann::ordered_json;

// Every parser throws InputError on a malformed document.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"0x0": "1", "0x3": "-1/2"}
Json to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

// {"vars": [...], "terms": [{"exp": [...], "coeff": <multivector>}]}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"p": .., "q": .., "F1": <polynomial>, "F2": <polynomial>}
Json to_json(const StemPair& s);
StemPair stem_from_json(const Json& j);

Json to_json(const JetBasis& b);
JetBasis jet_basis_from_json(const Json& j);

// Parses text, mapping syntax errors to InputError.
Json parse_json(std::string_view text);

}  // namespace gpslice
