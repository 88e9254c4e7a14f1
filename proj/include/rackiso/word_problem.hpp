#pragma once

#include <string>
#include <string_view>

#include "translation.hpp"

namespace rackiso {

enum class Theory { Quandle, Rack };

inline std::string_view theory_name(Theory th) {
  return th == Theory::Quandle ? "quandle" : "rack";
}

// Provable equality in the free quandle: equal free-group images.
inline bool quandle_equal(const Term& s, const Term& t) {
  return quandle_word(s) == quandle_word(t);
}

// Provable equality in the free rack: same head and equivalent tails.
inline bool rack_equal(const Term& s, const Term& t) {
  return rack_normal_form(s) == rack_normal_form(t);
}

inline bool theory_equal(Theory th, const Term& s, const Term& t) {
  return th == Theory::Quandle ? quandle_equal(s, t) : rack_equal(s, t);
}

}  // namespace rackiso
