#pragma once

#include "free_group.hpp"
#include "term.hpp"

namespace rackiso {

// Image of a quandle term in the free group: atoms map to themselves,
// s |> t to E(t)^-1 E(s) E(t) and s |>~ t to E(t) E(s) E(t)^-1.
inline GroupWord quandle_word(const Term& t) {
  if (t.is_atom()) return GroupWord::of(t.letter());
  const GroupWord s = quandle_word(t.left());
  const GroupWord c = quandle_word(t.right());
  if (t.op() == Sign::Pos) return multiply(inverse(c), s, c);
  return multiply(c, s, inverse(c));
}

// Image of a rack term in the half-conjugation model X x F_X.
struct RackNF {
  Letter head;
  GroupWord tail;  // reduced

  friend bool operator==(const RackNF&, const RackNF&) = default;
};

// (s, [u]) |>^e (y, [v]) = (s, [u v^-1 y^e v]); atoms map to (l, e).
inline RackNF rack_normal_form(const Term& t) {
  if (t.is_atom()) return {t.letter(), {}};
  RackNF a = rack_normal_form(t.left());
  const RackNF b = rack_normal_form(t.right());
  a.tail = multiply(a.tail, inverse(b.tail), GroupWord::of(b.head, t.op()), b.tail);
  return a;
}

// tail^-1 * head * tail
inline GroupWord rack_conjugate(const Term& t) {
  const RackNF nf = rack_normal_form(t);
  return multiply(inverse(nf.tail), GroupWord::of(nf.head), nf.tail);
}

}  // namespace rackiso
