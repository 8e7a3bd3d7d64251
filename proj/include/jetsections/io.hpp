#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "jetsections/basis.hpp"

namespace jetsections {

using Json = nlohmann::ordered_json;

Json space_to_json(const VarSpace& s);
VarSpace space_from_json(const Json& j);

/// {"space": {...}, "terms": [{"coeff": "p/q", "mono": [[coord, order, exp], ...]}]}
/// with terms in increasing monomial order and factors from the smallest up.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"N": n, "blocks": [[...], ...]}, block 1 first.
Json to_json(const TupleBNPlus& t);
/// Accepts the object form or a bare array of arrays (N = number of blocks).
TupleBNPlus tuple_from_json(const Json& j);

Json to_json(const RationalSection& s);
Json to_json(const RationalTerm& t);
Json to_json(const JetMatrix& m);

/// Text form: terms like `2*x[1]^(1)^2 - x[1]*x[1]^(2)` or `3/2*X[0]*X[1]^(1)`.
/// `x[c]^(l)` is an affine jet in `chart`, `X[c]^(l)` a homogeneous one; a
/// trailing `^e` is a power. N defaults to the largest coordinate seen.
Polynomial parse_polynomial_text(std::string_view text, std::optional<int> n, int chart = 0);

/// JSON when the text starts with '{', the text form otherwise.
Polynomial parse_polynomial(std::string_view text, std::optional<int> n, int chart = 0);

/// Parses a JSON tuple literal, rethrowing JSON errors as InvalidArgument.
TupleBNPlus parse_tuple(std::string_view text);

}  // namespace jetsections
