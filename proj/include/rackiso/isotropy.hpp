#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "word_problem.hpp"

namespace rackiso {

// Element of the isotropy group of the free quandle on n generators, stored
// as the reduced generator word w = y_{i1}^{e1} ... y_{im}^{em} read along
// the canonical chain x |>^{e1} y_{i1} ... |>^{em} y_{im}. Empty is [x].
struct QuandleIsoElem {
  GroupWord word;
  friend bool operator==(const QuandleIsoElem&, const QuandleIsoElem&) = default;
  friend auto operator<=>(const QuandleIsoElem&, const QuandleIsoElem&) = default;
};

// Element of the isotropy group of the free rack: z leading self-actions
// x |>^{sign z} x (|z| times) followed by the generator chain for word.
struct RackIsoElem {
  long z = 0;
  GroupWord word;
  friend bool operator==(const RackIsoElem&, const RackIsoElem&) = default;
  friend auto operator<=>(const RackIsoElem&, const RackIsoElem&) = default;
};

inline std::uint32_t max_generator(const GroupWord& w) {
  std::uint32_t m = 0;
  for (const auto& l : w.letters)
    if (l.letter.is_gen()) m = std::max(m, l.letter.index());
  return m;
}

// The generator images of the identity endomorphism of the free model on n.
inline std::vector<Term> identity_images(std::uint32_t n) {
  std::vector<Term> out;
  for (std::uint32_t i = 1; i <= n; ++i) out.push_back(atom(Letter::gen(i)));
  return out;
}

// ---------------------------------------------------------------------------
// Membership

// Decides t[x0 |>^e x1/x] = t[x0/x] |>^e t[x1/x] for both e in the theory.
inline bool check_generic_commutation(const Term& t, Theory th, std::uint32_t n) {
  require_generators(t, n);
  const Term x0 = atom(Letter::x0());
  const Term x1 = atom(Letter::x1());
  const Term at0 = subst_term(t, x0, Letter::x());
  const Term at1 = subst_term(t, x1, Letter::x());
  for (Sign s : {Sign::Pos, Sign::Neg}) {
    const Term lhs = subst_term(t, act(s, x0, x1), Letter::x());
    if (!theory_equal(th, lhs, act(s, at0, at1))) return false;
  }
  return true;
}

// Some(elem) iff the reduced image of t is u^-1 x u with u a reduced
// generator word; elem.word = u.
inline std::optional<QuandleIsoElem> quandle_canonical(const Term& t, std::uint32_t n) {
  require_generators(t, n);
  const GroupWord w = quandle_word(t);
  std::size_t at = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].letter.is_gen()) continue;
    if (!w[i].letter.is_x() || w[i].exp != Sign::Pos || at != w.size())
      return std::nullopt;
    at = i;
  }
  if (at == w.size()) return std::nullopt;
  GroupWord prefix(std::vector<SignedLetter>(w.letters.begin(),
                                             w.letters.begin() + static_cast<long>(at)));
  GroupWord suffix(std::vector<SignedLetter>(w.letters.begin() + static_cast<long>(at) + 1,
                                             w.letters.end()));
  if (inverse(suffix) != prefix) return std::nullopt;
  return QuandleIsoElem{std::move(suffix)};
}

// Some((z, w)) iff the head is x and the tail is x^z w with w a reduced
// generator word.
inline std::optional<RackIsoElem> rack_canonical(const Term& t, std::uint32_t n) {
  require_generators(t, n);
  const RackNF nf = rack_normal_form(t);
  if (!nf.head.is_x()) return std::nullopt;
  RackIsoElem e;
  e.z = strip_leading_power(nf.tail, Letter::x(), e.word);
  if (!is_generator_only(e.word)) return std::nullopt;
  return e;
}

// ---------------------------------------------------------------------------
// Group structure. The product a*b is the class of t_a[t_b/x].

inline QuandleIsoElem multiply(const QuandleIsoElem& a, const QuandleIsoElem& b) {
  return {multiply(b.word, a.word)};
}

inline RackIsoElem multiply(const RackIsoElem& a, const RackIsoElem& b) {
  return {a.z + b.z, multiply(b.word, a.word)};
}

inline QuandleIsoElem inverse(const QuandleIsoElem& a) { return {inverse(a.word)}; }

inline RackIsoElem inverse(const RackIsoElem& a) { return {-a.z, inverse(a.word)}; }

// Left-associated canonical term.
inline Term to_term(const QuandleIsoElem& a) {
  Term t = atom(Letter::x());
  for (const auto& l : a.word.letters) t = act(l.exp, std::move(t), atom(l.letter));
  return t;
}

inline Term to_term(const RackIsoElem& a) {
  const Term x = atom(Letter::x());
  Term t = x;
  const Sign s = sign_of(a.z);
  for (long i = 0; i < (a.z < 0 ? -a.z : a.z); ++i) t = act(s, std::move(t), x);
  for (const auto& l : a.word.letters) t = act(l.exp, std::move(t), atom(l.letter));
  return t;
}

// Isomorphism F_n -> isotropy group sending y_i to [x |> y_i].
inline QuandleIsoElem quandle_from_free_group(const GroupWord& u) {
  if (!is_generator_only(u))
    throw std::invalid_argument("free group element must use generators only");
  return {reverse_letters(reduce(u))};
}

// Anti-isomorphism Z x F_n -> isotropy group: (z, u) to the chain with z
// self-actions followed by u read left to right.
inline RackIsoElem rack_from_free_group(long z, const GroupWord& u) {
  if (!is_generator_only(u))
    throw std::invalid_argument("free group element must use generators only");
  return {z, reduce(u)};
}

// ---------------------------------------------------------------------------
// Action on models

namespace detail {
template <typename Elem>
Term apply_inner_impl(const Elem& a, const std::vector<Term>& images, const Term& q,
                      std::uint32_t n) {
  if (images.size() != n) throw ArityMismatch(n, images.size());
  if (max_generator(a.word) > n) throw ArityMismatch(max_generator(a.word), n);
  std::map<Letter, Term> sub;
  for (std::uint32_t i = 1; i <= n; ++i) sub.emplace(Letter::gen(i), images[i - 1]);
  return subst_term(subst_many(to_term(a), sub), q, Letter::x());
}
}  // namespace detail

// Substitutes images[i] for y_{i+1}, then q for x, in the canonical term.
inline Term apply_inner(const QuandleIsoElem& a, const std::vector<Term>& images,
                        const Term& q, std::uint32_t n) {
  return detail::apply_inner_impl(a, images, q, n);
}

inline Term apply_inner(const RackIsoElem& a, const std::vector<Term>& images,
                        const Term& q, std::uint32_t n) {
  return detail::apply_inner_impl(a, images, q, n);
}

// ---------------------------------------------------------------------------
// Inner automorphism decision

// Some(w) iff y_i |-> images[i] is s |-> s |> w. Each image must reduce to a
// conjugate c_i^-1 y_i c_i; w is searched in the coset y_1^k c_1.
inline std::optional<QuandleIsoElem> quandle_inner_witness(const std::vector<Term>& images,
                                                           std::uint32_t n) {
  if (images.size() != n) throw ArityMismatch(n, images.size());
  if (n == 0) return QuandleIsoElem{};
  std::vector<GroupWord> targets;
  std::vector<GroupWord> conjugators;
  for (std::uint32_t i = 1; i <= n; ++i) {
    require_generators(images[i - 1], n);
    GroupWord r = quandle_word(images[i - 1]);
    GroupWord core, conj;
    conjugate_split(r, core, conj);
    if (core != GroupWord::of(Letter::gen(i))) return std::nullopt;
    targets.push_back(std::move(r));
    conjugators.push_back(std::move(conj));
  }
  auto induces = [&](const GroupWord& w) {
    for (std::uint32_t i = 1; i <= n; ++i)
      if (multiply(inverse(w), GroupWord::of(Letter::gen(i)), w) != targets[i - 1])
        return false;
    return true;
  };
  const long bound =
      n == 1 ? 0
             : static_cast<long>(conjugators[0].size() + conjugators[1].size() + 2);
  std::optional<QuandleIsoElem> found;
  for (long k = 0; k <= bound && !found; ++k) {
    for (long sk : {k, -k}) {
      GroupWord w = multiply(power(Letter::gen(1), sk), conjugators[0]);
      if (induces(w)) {
        found = QuandleIsoElem{std::move(w)};
        break;
      }
      if (k == 0) break;
    }
  }
  if (found) {
    const auto id = identity_images(n);
    for (std::uint32_t i = 1; i <= n; ++i)
      if (!quandle_equal(apply_inner(*found, id, id[i - 1], n), images[i - 1]))
        throw std::logic_error("quandle inner witness failed verification");
  }
  return found;
}

// Some((z, w)) iff each image has head y_i and tail y_i^z w. For n = 1 the
// split is not unique; the maximal leading power is returned.
inline std::optional<RackIsoElem> rack_inner_witness(const std::vector<Term>& images,
                                                     std::uint32_t n) {
  if (images.size() != n) throw ArityMismatch(n, images.size());
  if (n == 0) return RackIsoElem{};
  std::vector<GroupWord> tails;
  for (std::uint32_t i = 1; i <= n; ++i) {
    require_generators(images[i - 1], n);
    RackNF nf = rack_normal_form(images[i - 1]);
    if (nf.head != Letter::gen(i)) return std::nullopt;
    tails.push_back(std::move(nf.tail));
  }
  RackIsoElem e;
  if (n == 1) {
    e.z = strip_leading_power(tails[0], Letter::gen(1), e.word);
  } else {
    // v_1 v_2^-1 must be y_1^z y_2^-z.
    GroupWord rest1, rest2;
    const long a = strip_leading_power(multiply(tails[0], inverse(tails[1])),
                                       Letter::gen(1), rest1);
    const long b = strip_leading_power(rest1, Letter::gen(2), rest2);
    if (!rest2.empty() || a != -b) return std::nullopt;
    e.z = a;
    e.word = multiply(power(Letter::gen(1), -e.z), tails[0]);
  }
  for (std::uint32_t i = 1; i <= n; ++i)
    if (multiply(power(Letter::gen(i), e.z), e.word) != tails[i - 1]) return std::nullopt;
  const auto id = identity_images(n);
  for (std::uint32_t i = 1; i <= n; ++i)
    if (!rack_equal(apply_inner(e, id, id[i - 1], n), images[i - 1]))
      throw std::logic_error("rack inner witness failed verification");
  return e;
}

}  // namespace rackiso
