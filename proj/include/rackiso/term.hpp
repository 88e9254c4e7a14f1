#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letter.hpp"

namespace rackiso {

// Closed term over {|>, |>~} with Letter constants. Immutable; copies share
// structure.
class Term {
 public:
  static Term atom(Letter l);
  static Term node(Sign op, Term left, Term right);

  bool is_atom() const noexcept;
  Letter letter() const noexcept;  // atoms only
  Sign op() const noexcept;        // nodes only
  const Term& left() const noexcept;
  const Term& right() const noexcept;

  // Number of Atom and Node constructors.
  std::size_t size() const noexcept;

  // Order: size, then for atoms the letter, for nodes the operation
  // (|> first), then left, then right.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Letter letter;
  Sign op = Sign::Pos;
  bool atom = true;
  std::size_t size = 1;
  std::vector<Term> kids;  // empty for atoms, {left, right} for nodes
};

inline Term Term::atom(Letter l) {
  auto n = std::make_shared<Node>();
  n->letter = l;
  return Term(std::move(n));
}

inline Term Term::node(Sign op, Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->atom = false;
  n->op = op;
  n->size = 1 + left.size() + right.size();
  n->kids = {std::move(left), std::move(right)};
  return Term(std::move(n));
}

inline bool Term::is_atom() const noexcept { return node_->atom; }
inline Letter Term::letter() const noexcept { return node_->letter; }
inline Sign Term::op() const noexcept { return node_->op; }
inline const Term& Term::left() const noexcept { return node_->kids[0]; }
inline const Term& Term::right() const noexcept { return node_->kids[1]; }
inline std::size_t Term::size() const noexcept { return node_->size; }

inline std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a.is_atom()) return a.letter() <=> b.letter();
  if (auto c = compare_sign(a.op(), b.op()); c != 0) return c;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

inline bool operator==(const Term& a, const Term& b) {
  return (a <=> b) == 0;
}

// Shorthands for building terms in code.
inline Term atom(Letter l) { return Term::atom(l); }
inline Term act(Term a, Term b) { return Term::node(Sign::Pos, std::move(a), std::move(b)); }
inline Term act_inv(Term a, Term b) { return Term::node(Sign::Neg, std::move(a), std::move(b)); }
inline Term act(Sign s, Term a, Term b) { return Term::node(s, std::move(a), std::move(b)); }

// Left-associated chain head |>^{s1} z1 |>^{s2} z2 ...
inline Term chain(Term head, std::span<const std::pair<Sign, Term>> steps) {
  for (const auto& [s, z] : steps) head = act(s, std::move(head), z);
  return head;
}

// ---------------------------------------------------------------------------
// Parsing and printing

struct ParseOptions {
  // x0 and x1 may be rejected in user input; they are reserved for generic
  // commutation checks.
  bool allow_aux = true;
};

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, std::uint32_t n, ParseOptions opts)
      : text_(text), n_(n), opts_(opts) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool lookahead_op(Sign& s, std::size_t& len) {
    skip_ws();
    if (text_.substr(pos_, 3) == "|>~") {
      s = Sign::Neg;
      len = 3;
      return true;
    }
    if (text_.substr(pos_, 2) == "|>") {
      s = Sign::Pos;
      len = 2;
      return true;
    }
    return false;
  }

  Term term() {
    Term t = factor();
    Sign s;
    std::size_t len;
    while (lookahead_op(s, len)) {
      pos_ += len;
      t = act(s, std::move(t), factor());
    }
    return t;
  }

  Term factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected a term");
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return t;
    }
    return atom_();
  }

  static bool is_ident(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  Term atom_() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.empty()) throw SyntaxError(start, "expected an atom");
    if (tok == "x") return atom(Letter::x());
    if (tok == "x0" || tok == "x1") {
      if (!opts_.allow_aux)
        throw SyntaxError(start, "auxiliary constant '" + std::string(tok) +
                                     "' is not allowed here");
      return atom(tok == "x0" ? Letter::x0() : Letter::x1());
    }
    if (tok.size() >= 2 && tok[0] == 'y') {
      std::string_view digits = tok.substr(1);
      std::uint64_t idx = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
      if (p != digits.data() + digits.size())
        throw SyntaxError(start, "malformed generator '" + std::string(tok) + "'");
      if (ec == std::errc::result_out_of_range || idx < 1 || idx > n_)
        throw UnknownGenerator(ec == std::errc() ? idx : UINT64_MAX);
      return atom(Letter::gen(static_cast<std::uint32_t>(idx)));
    }
    throw SyntaxError(start, "unknown atom '" + std::string(tok) + "'");
  }

  std::string_view text_;
  std::uint32_t n_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Operators are left-associative with equal precedence.
inline Term parse_term(std::string_view text, std::uint32_t n,
                       ParseOptions opts = {}) {
  return detail::TermParser(text, n, opts).parse();
}

namespace detail {
inline void render_into(const Term& t, std::string& out) {
  if (t.is_atom()) {
    out += t.letter().str();
    return;
  }
  render_into(t.left(), out);
  out += t.op() == Sign::Pos ? " |> " : " |>~ ";
  if (t.right().is_atom()) {
    render_into(t.right(), out);
  } else {
    out += '(';
    render_into(t.right(), out);
    out += ')';
  }
}
}  // namespace detail

inline std::string render_term(const Term& t) {
  std::string out;
  detail::render_into(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Structural operations

// t[s/target]
inline Term subst_term(const Term& t, const Term& s, Letter target) {
  if (t.is_atom()) return t.letter() == target ? s : t;
  Term l = subst_term(t.left(), s, target);
  Term r = subst_term(t.right(), s, target);
  if (l == t.left() && r == t.right()) return t;
  return act(t.op(), std::move(l), std::move(r));
}

// Simultaneous substitution; letters absent from the map are kept.
inline Term subst_many(const Term& t, const std::map<Letter, Term>& images) {
  if (t.is_atom()) {
    auto it = images.find(t.letter());
    return it == images.end() ? t : it->second;
  }
  return act(t.op(), subst_many(t.left(), images), subst_many(t.right(), images));
}

// The leftmost letter.
inline Letter left_of(const Term& t) {
  const Term* cur = &t;
  while (!cur->is_atom()) cur = &cur->left();
  return cur->letter();
}

// Calls f on every atom letter of t, left to right.
template <typename F>
void for_each_letter(const Term& t, F&& f) {
  if (t.is_atom()) {
    f(t.letter());
    return;
  }
  for_each_letter(t.left(), f);
  for_each_letter(t.right(), f);
}

inline bool contains_letter(const Term& t, Letter l) {
  bool found = false;
  for_each_letter(t, [&](Letter a) { found = found || a == l; });
  return found;
}

// Throws UnknownGenerator if t mentions y_k with k > n.
inline void require_generators(const Term& t, std::uint32_t n) {
  for_each_letter(t, [&](Letter a) {
    if (a.is_gen() && a.index() > n) throw UnknownGenerator(a.index());
  });
}

// The alphabet {y1..yn}, optionally prefixed by x.
inline std::vector<Letter> generator_alphabet(std::uint32_t n, bool with_x = false) {
  std::vector<Letter> out;
  if (with_x) out.push_back(Letter::x());
  for (std::uint32_t i = 1; i <= n; ++i) out.push_back(Letter::gen(i));
  return out;
}

// Every term of size <= max_size over the alphabet, each once, sorted by
// the Term order (size first).
inline std::vector<Term> enumerate_terms(std::span<const Letter> alphabet,
                                         std::size_t max_size) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size >= 1) {
    std::vector<Letter> letters(alphabet.begin(), alphabet.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    for (Letter l : letters) by_size[1].push_back(atom(l));
  }
  for (std::size_t k = 3; k <= max_size; k += 2) {
    for (Sign s : {Sign::Pos, Sign::Neg})
      for (std::size_t i = 1; i + 1 < k; ++i)
        for (const Term& l : by_size[i])
          for (const Term& r : by_size[k - 1 - i]) by_size[k].push_back(act(s, l, r));
  }
  std::vector<Term> out;
  for (auto& v : by_size)
    for (auto& t : v) out.push_back(std::move(t));
  return out;
}

}  // namespace rackiso
