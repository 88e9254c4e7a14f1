#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "letter.hpp"

namespace rackiso {

struct SignedLetter {
  Letter letter;
  Sign exp = Sign::Pos;

  SignedLetter inverse() const noexcept { return {letter, negate(exp)}; }

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
  // Letter first, then +1 before -1.
  friend std::strong_ordering operator<=>(const SignedLetter& a, const SignedLetter& b) {
    if (auto c = a.letter <=> b.letter; c != 0) return c;
    return compare_sign(a.exp, b.exp);
  }

  std::string str() const {
    return exp == Sign::Pos ? letter.str() : letter.str() + "^-1";
  }
};

inline bool cancels(const SignedLetter& a, const SignedLetter& b) noexcept {
  return a.letter == b.letter && a.exp != b.exp;
}

// A word in the free group on Letter. The empty word is the identity. Words
// returned by the operations below are always reduced.
struct GroupWord {
  std::vector<SignedLetter> letters;

  GroupWord() = default;
  GroupWord(std::initializer_list<SignedLetter> ls) : letters(ls) {}
  explicit GroupWord(std::vector<SignedLetter> ls) : letters(std::move(ls)) {}

  static GroupWord of(Letter l, Sign e = Sign::Pos) { return GroupWord{{l, e}}; }

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }
  const SignedLetter& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord& a, const GroupWord& b) {
    return std::lexicographical_compare_three_way(
        a.letters.begin(), a.letters.end(), b.letters.begin(), b.letters.end());
  }
};

inline SignedLetter pos(Letter l) { return {l, Sign::Pos}; }
inline SignedLetter neg(Letter l) { return {l, Sign::Neg}; }

inline bool is_reduced(const GroupWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (cancels(w[i - 1], w[i])) return false;
  return true;
}

// Single left-to-right stack pass.
inline GroupWord reduce(const GroupWord& w) {
  std::vector<SignedLetter> out;
  out.reserve(w.size());
  for (const SignedLetter& l : w.letters) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return GroupWord(std::move(out));
}

// Concatenation without reduction.
inline GroupWord concat(const GroupWord& u, const GroupWord& v) {
  GroupWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

inline GroupWord multiply(const GroupWord& u, const GroupWord& v) {
  return reduce(concat(u, v));
}

template <typename... Ws>
GroupWord multiply(const GroupWord& u, const GroupWord& v, const Ws&... rest) {
  return multiply(multiply(u, v), rest...);
}

inline GroupWord inverse(const GroupWord& u) {
  GroupWord out;
  out.letters.reserve(u.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    out.letters.push_back(it->inverse());
  return reduce(out);
}

// u[v/target]: positive occurrences become v, negative ones v^-1.
inline GroupWord substitute(const GroupWord& u, const GroupWord& v, Letter target) {
  const GroupWord vinv = inverse(v);
  GroupWord out;
  for (const SignedLetter& l : u.letters) {
    if (l.letter != target) {
      out.letters.push_back(l);
      continue;
    }
    const GroupWord& img = l.exp == Sign::Pos ? v : vinv;
    out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
  }
  return reduce(out);
}

inline bool equivalent(const GroupWord& u, const GroupWord& v) {
  return reduce(u) == reduce(v);
}

// Number of occurrences of l, either exponent.
inline std::size_t count_letter(const GroupWord& w, Letter l) {
  return static_cast<std::size_t>(std::count_if(
      w.letters.begin(), w.letters.end(),
      [&](const SignedLetter& s) { return s.letter == l; }));
}

inline bool is_generator_only(const GroupWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [](const SignedLetter& s) { return s.letter.is_gen(); });
}

// Same letters in reverse order, exponents kept.
inline GroupWord reverse_letters(const GroupWord& w) {
  return GroupWord(std::vector<SignedLetter>(w.letters.rbegin(), w.letters.rend()));
}

// l^k as a reduced word.
inline GroupWord power(Letter l, long k) {
  GroupWord out;
  const Sign s = sign_of(k);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out.letters.push_back({l, s});
  return out;
}

// Splits a reduced word as l^k * rest with |k| maximal; returns k.
inline long strip_leading_power(const GroupWord& w, Letter l, GroupWord& rest) {
  std::size_t i = 0;
  long k = 0;
  while (i < w.size() && w[i].letter == l) {
    k += to_int(w[i].exp);
    ++i;
  }
  rest = GroupWord(std::vector<SignedLetter>(w.letters.begin() + static_cast<long>(i),
                                             w.letters.end()));
  return k;
}

// Writes a reduced word r as conj^-1 * core * conj with core cyclically
// reduced, by peeling matching inverse pairs off both ends.
inline void conjugate_split(const GroupWord& r, GroupWord& core, GroupWord& conj) {
  std::size_t i = 0;
  std::size_t j = r.size();
  while (j - i >= 2 && r[i] == r[j - 1].inverse()) {
    ++i;
    --j;
  }
  core = GroupWord(std::vector<SignedLetter>(r.letters.begin() + static_cast<long>(i),
                                             r.letters.begin() + static_cast<long>(j)));
  conj = GroupWord(std::vector<SignedLetter>(r.letters.begin() + static_cast<long>(j),
                                             r.letters.end()));
}

// ---------------------------------------------------------------------------
// Text form: space-separated "y1", "y1^-1", "x", "x^-1"; "e" is the identity.

inline std::string render_word(const GroupWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].str();
  }
  return out;
}

inline Letter parse_letter(std::string_view tok, std::uint32_t n, std::size_t pos = 0) {
  if (tok == "x") return Letter::x();
  if (tok == "x0") return Letter::x0();
  if (tok == "x1") return Letter::x1();
  if (tok.size() >= 2 && tok[0] == 'y') {
    std::uint64_t idx = 0;
    auto digits = tok.substr(1);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (p != digits.data() + digits.size())
      throw SyntaxError(pos, "malformed generator '" + std::string(tok) + "'");
    if (ec == std::errc::result_out_of_range || idx < 1 || idx > n)
      throw UnknownGenerator(ec == std::errc() ? idx : UINT64_MAX);
    return Letter::gen(static_cast<std::uint32_t>(idx));
  }
  throw SyntaxError(pos, "unknown letter '" + std::string(tok) + "'");
}

// The result is not reduced automatically; callers decide.
inline GroupWord parse_word(std::string_view text, std::uint32_t n) {
  GroupWord out;
  std::size_t i = 0;
  bool saw_e = false;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    std::string_view tok = text.substr(start, i - start);
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    Sign s = Sign::Pos;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      s = Sign::Neg;
      tok = tok.substr(0, tok.size() - 3);
    } else if (tok.find('^') != std::string_view::npos) {
      throw SyntaxError(start, "exponent must be ^-1");
    }
    out.letters.push_back({parse_letter(tok, n, start), s});
  }
  if (out.empty() && !saw_e) throw SyntaxError(0, "empty word (spell the identity as 'e')");
  return out;
}

}  // namespace rackiso
