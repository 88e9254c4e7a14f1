#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "free_group.hpp"
#include "term.hpp"

namespace rackiso {

using Rng = std::mt19937_64;

namespace detail {
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}
}  // namespace detail

// Random term of size <= max_size. The shape is grown top-down: a node is
// built with probability 2/3 while the budget allows.
inline Term random_term(Rng& rng, std::span<const Letter> alphabet, std::size_t max_size) {
  if (max_size < 3 || std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    return atom(alphabet[detail::uniform_index(rng, alphabet.size())]);
  // Split the remaining budget between the children.
  const std::size_t budget = max_size - 1;
  const std::size_t left_budget = 1 + detail::uniform_index(rng, budget - 1);
  const Sign s = std::uniform_int_distribution<int>(0, 1)(rng) ? Sign::Pos : Sign::Neg;
  Term l = random_term(rng, alphabet, left_budget);
  Term r = random_term(rng, alphabet, budget - l.size());
  return act(s, std::move(l), std::move(r));
}

// head |>^{e1} z1 ... |>^{em} zm with m uniform in [0, max_len].
inline Term random_chain(Rng& rng, Letter head, std::span<const Letter> alphabet,
                         std::size_t max_len) {
  Term t = atom(head);
  const std::size_t m = detail::uniform_index(rng, max_len + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Sign s = std::uniform_int_distribution<int>(0, 1)(rng) ? Sign::Pos : Sign::Neg;
    t = act(s, std::move(t), atom(alphabet[detail::uniform_index(rng, alphabet.size())]));
  }
  return t;
}

// Replaces the leftmost atom of t by l.
inline Term with_leftmost(const Term& t, Letter l) {
  if (t.is_atom()) return atom(l);
  return act(t.op(), with_leftmost(t.left(), l), t.right());
}

// Every reduced word of length <= max_len over the alphabet, shortlex order.
inline std::vector<GroupWord> enumerate_reduced_words(std::span<const Letter> alphabet,
                                                      std::size_t max_len) {
  std::vector<SignedLetter> letters;
  for (Letter l : alphabet) {
    letters.push_back(pos(l));
    letters.push_back(neg(l));
  }
  std::sort(letters.begin(), letters.end());
  std::vector<GroupWord> out = {GroupWord{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const SignedLetter& l : letters) {
        if (!out[i].empty() && cancels(out[i].letters.back(), l)) continue;
        GroupWord w = out[i];
        w.letters.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

inline GroupWord random_reduced_word(Rng& rng, std::span<const Letter> alphabet,
                                     std::size_t max_len) {
  const std::size_t m = detail::uniform_index(rng, max_len + 1);
  GroupWord w;
  while (w.size() < m) {
    const Letter l = alphabet[detail::uniform_index(rng, alphabet.size())];
    const SignedLetter sl{l, std::uniform_int_distribution<int>(0, 1)(rng) ? Sign::Pos
                                                                          : Sign::Neg};
    if (!w.empty() && cancels(w.letters.back(), sl)) continue;
    w.letters.push_back(sl);
  }
  return w;
}

}  // namespace rackiso
