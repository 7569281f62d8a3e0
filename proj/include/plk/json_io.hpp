#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "plk/multivector.hpp"

namespace plk {

// {"dim": n, "grade": k, "dual": bool, "terms": [{"indices": [...], "coeff": "p/q"}]}
// Throws InputError naming the offending term on malformed input.
Multivector multivector_from_json(const nlohmann::json& j);
// Keys in the documented order: dim, grade, dual, terms.
nlohmann::ordered_json to_json(const Multivector& m);

Multivector parse_multivector(std::string_view text);
// A JSON array of multivector objects.
std::vector<Multivector> parse_multivector_list(std::string_view text);

// Canonical text: terms in lexicographic index order, lowest-term coefficients.
std::string emit(const Multivector& m);

}  // namespace plk
