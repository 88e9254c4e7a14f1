#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "isotropy.hpp"

namespace rackiso {

using IsoElem = std::variant<QuandleIsoElem, RackIsoElem>;

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// [[letter, exponent], ...]
inline nlohmann::json word_to_json(const GroupWord& w) {
  auto arr = nlohmann::json::array();
  for (const auto& l : w.letters) arr.push_back({l.letter.str(), to_int(l.exp)});
  return arr;
}

inline GroupWord word_from_json(const nlohmann::json& j, std::uint32_t n) {
  if (!j.is_array()) throw SchemaError("word must be an array of [letter, exponent] pairs");
  GroupWord w;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
      throw SchemaError("word entries must be [letter, exponent] pairs");
    const int e = p[1].get<int>();
    if (e != 1 && e != -1) throw SchemaError("exponent must be 1 or -1");
    w.letters.push_back({parse_letter(p[0].get<std::string>(), n), e == 1 ? Sign::Pos : Sign::Neg});
  }
  return w;
}

inline nlohmann::json to_json(const QuandleIsoElem& a) {
  return {{"theory", "quandle"}, {"word", word_to_json(a.word)}};
}

inline nlohmann::json to_json(const RackIsoElem& a) {
  return {{"theory", "rack"}, {"z", a.z}, {"word", word_to_json(a.word)}};
}

inline nlohmann::json to_json(const IsoElem& a) {
  return std::visit([](const auto& e) { return to_json(e); }, a);
}

// Reads an element; the word is reduced and must use generators y1..yn.
inline IsoElem elem_from_json(const nlohmann::json& j, std::uint32_t n) {
  if (!j.is_object() || !j.contains("theory") || !j["theory"].is_string() ||
      !j.contains("word"))
    throw SchemaError("element must be an object with \"theory\" and \"word\"");
  const std::string th = j["theory"].get<std::string>();
  GroupWord w = reduce(word_from_json(j["word"], n));
  if (!is_generator_only(w)) throw SchemaError("element words use generators only");
  if (th == "quandle") {
    if (j.contains("z")) throw SchemaError("quandle elements have no \"z\"");
    return QuandleIsoElem{std::move(w)};
  }
  if (th == "rack") {
    if (!j.contains("z") || !j["z"].is_number_integer())
      throw SchemaError("rack elements need an integer \"z\"");
    return RackIsoElem{j["z"].get<long>(), std::move(w)};
  }
  throw SchemaError("unknown theory '" + th + "'");
}

}  // namespace rackiso
