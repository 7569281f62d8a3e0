#include "plk/json_io.hpp"

#include <set>

#include "plk/errors.hpp"

namespace plk {
namespace {

using nlohmann::json;

std::string term_name(std::size_t i) { return "term " + std::to_string(i + 1); }

Rational coeff_from_json(const json& c, const std::string& where) {
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (c.is_number_integer()) return Rational(c.get<long>());
  throw InputError(where + ": coeff must be an integer or a \"p/q\" string");
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw InputError(std::string("missing or non-integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

}  // namespace

Multivector multivector_from_json(const json& j) {
  if (!j.is_object()) throw InputError("multivector must be a JSON object");
  const int dim = int_field(j, "dim");
  const int grade = int_field(j, "grade");
  if (dim < 1 || dim > kMaxDim) throw InputError("dim must lie in [1, 64]");
  if (grade < 0 || grade > dim) throw InputError("grade must lie in [0, dim]");
  bool dual = false;
  if (j.contains("dual")) {
    if (!j.at("dual").is_boolean()) throw InputError("field \"dual\" must be a boolean");
    dual = j.at("dual").get<bool>();
  }
  if (!j.contains("terms") || !j.at("terms").is_array()) throw InputError("missing array \"terms\"");
  Multivector m(dim, grade, dual);
  std::set<Mask> seen;
  const auto& terms = j.at("terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string where = term_name(i);
    if (!t.is_object() || !t.contains("indices") || !t.at("indices").is_array() || !t.contains("coeff")) {
      throw InputError(where + ": expected {\"indices\": [...], \"coeff\": ...}");
    }
    const auto& idx = t.at("indices");
    if (static_cast<int>(idx.size()) != grade) {
      throw InputError(where + ": has " + std::to_string(idx.size()) + " indices, grade is " +
                       std::to_string(grade));
    }
    Mask key = 0;
    int prev = 0;
    for (const auto& v : idx) {
      if (!v.is_number_integer()) throw InputError(where + ": indices must be integers");
      const int i1 = v.get<int>();
      if (i1 < 1 || i1 > dim) throw InputError(where + ": index " + std::to_string(i1) + " out of range");
      if (i1 <= prev) throw InputError(where + ": indices must be strictly increasing");
      prev = i1;
      key |= bit(i1);
    }
    if (!seen.insert(key).second) throw InputError(where + ": duplicate index set");
    m.add_term(key, coeff_from_json(t.at("coeff"), where));
  }
  return m;
}

nlohmann::ordered_json to_json(const Multivector& m) {
  using ojson = nlohmann::ordered_json;
  ojson terms = ojson::array();
  for (const auto& [key, c] : m.terms()) {
    terms.push_back(ojson{{"indices", indices_of(key)}, {"coeff", to_string(c)}});
  }
  return ojson{{"dim", m.dim()}, {"grade", m.grade()}, {"dual", m.is_dual()}, {"terms", terms}};
}

Multivector parse_multivector(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return multivector_from_json(j);
}

std::vector<Multivector> parse_multivector_list(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_array()) throw InputError("expected a JSON array of multivectors");
  std::vector<Multivector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(multivector_from_json(j[i]));
    } catch (const InputError& e) {
      throw InputError("member " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

std::string emit(const Multivector& m) { return to_json(m).dump(); }

}  // namespace plk
