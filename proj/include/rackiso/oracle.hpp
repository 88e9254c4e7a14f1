#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "word_problem.hpp"

namespace rackiso {

// Axioms of the two theories. The rack theory has the first four.
enum class Axiom : std::uint8_t {
  DistPos,    // (x |> y) |> z = (x |> z) |> (y |> z)
  DistNeg,    // (x |>~ y) |>~ z = (x |>~ z) |>~ (y |>~ z)
  CancelPos,  // (x |> y) |>~ y = x
  CancelNeg,  // (x |>~ y) |> y = x
  IdemPos,    // x |> x = x
  IdemNeg,    // x |>~ x = x
};

inline std::vector<Axiom> axioms_of(Theory th) {
  std::vector<Axiom> out = {Axiom::DistPos, Axiom::DistNeg, Axiom::CancelPos,
                            Axiom::CancelNeg};
  if (th == Theory::Quandle) {
    out.push_back(Axiom::IdemPos);
    out.push_back(Axiom::IdemNeg);
  }
  return out;
}

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::DistPos: return "dist+";
    case Axiom::DistNeg: return "dist-";
    case Axiom::CancelPos: return "cancel+-";
    case Axiom::CancelNeg: return "cancel-+";
    case Axiom::IdemPos: return "idem+";
    case Axiom::IdemNeg: return "idem-";
  }
  return "?";
}

enum class Direction : std::uint8_t { LeftToRight, RightToLeft };

// Path into a term: 0 = left child, 1 = right child.
using Position = std::vector<std::uint8_t>;

struct RewriteStep {
  Axiom axiom;
  Direction direction;
  Position position;
};

// Both sides of an axiom instantiated with the given terms (z is ignored by
// the two-variable axioms).
inline std::pair<Term, Term> axiom_instance(Axiom a, const Term& x, const Term& y,
                                            const Term& z) {
  switch (a) {
    case Axiom::DistPos: return {act(act(x, y), z), act(act(x, z), act(y, z))};
    case Axiom::DistNeg:
      return {act_inv(act_inv(x, y), z), act_inv(act_inv(x, z), act_inv(y, z))};
    case Axiom::CancelPos: return {act_inv(act(x, y), y), x};
    case Axiom::CancelNeg: return {act(act_inv(x, y), y), x};
    case Axiom::IdemPos: return {act(x, x), x};
    case Axiom::IdemNeg: return {act_inv(x, x), x};
  }
  return {x, x};
}

namespace detail {

// One-step rewrites at the root of u.
inline void root_rewrites(const Term& u, Theory th,
                          const std::function<void(Axiom, Direction, Term)>& emit) {
  if (!u.is_atom()) {
    const Sign s = u.op();
    const Term& a = u.left();
    const Term& r = u.right();
    const Axiom dist = s == Sign::Pos ? Axiom::DistPos : Axiom::DistNeg;
    // (a |>s b) |>s c  ->  (a |>s c) |>s (b |>s c)
    if (!a.is_atom() && a.op() == s)
      emit(dist, Direction::LeftToRight, act(s, act(s, a.left(), r), act(s, a.right(), r)));
    // (a |>s c) |>s (b |>s c)  ->  (a |>s b) |>s c
    if (!a.is_atom() && a.op() == s && !r.is_atom() && r.op() == s && a.right() == r.right())
      emit(dist, Direction::RightToLeft, act(s, act(s, a.left(), r.left()), a.right()));
    // (a' |>-s b) |>s b  ->  a'
    if (!a.is_atom() && a.op() == negate(s) && a.right() == r)
      emit(s == Sign::Neg ? Axiom::CancelPos : Axiom::CancelNeg, Direction::LeftToRight,
           a.left());
    if (th == Theory::Quandle && a == r)
      emit(s == Sign::Pos ? Axiom::IdemPos : Axiom::IdemNeg, Direction::LeftToRight, a);
  }
  // Cancellation right-to-left would need a fresh subterm and is not applied.
  if (th == Theory::Quandle) {
    emit(Axiom::IdemPos, Direction::RightToLeft, act(u, u));
    emit(Axiom::IdemNeg, Direction::RightToLeft, act_inv(u, u));
  }
}

inline void all_rewrites(const Term& t, Theory th, Position& path,
                         const std::function<void(const RewriteStep&, Term)>& emit) {
  root_rewrites(t, th, [&](Axiom a, Direction d, Term r) {
    emit(RewriteStep{a, d, path}, std::move(r));
  });
  if (t.is_atom()) return;
  path.push_back(0);
  all_rewrites(t.left(), th, path, [&](const RewriteStep& st, Term l) {
    emit(st, act(t.op(), std::move(l), t.right()));
  });
  path.back() = 1;
  all_rewrites(t.right(), th, path, [&](const RewriteStep& st, Term r) {
    emit(st, act(t.op(), t.left(), std::move(r)));
  });
  path.pop_back();
}

}  // namespace detail

// Every single axiom application at any position, with its step.
inline std::vector<std::pair<RewriteStep, Term>> rewrite_steps(const Term& t, Theory th) {
  std::vector<std::pair<RewriteStep, Term>> out;
  Position path;
  detail::all_rewrites(t, th, path, [&](const RewriteStep& st, Term r) {
    out.emplace_back(st, std::move(r));
  });
  return out;
}

inline std::set<Term> rewrite_neighbors(const Term& t, Theory th) {
  std::set<Term> out;
  for (auto& [st, r] : rewrite_steps(t, th)) out.insert(std::move(r));
  return out;
}

inline std::size_t default_closure_size(const Term& t) { return 2 * t.size() + 4; }

// Terms reachable from t in at most max_steps rewrites, never passing
// through a term larger than max_size. Always contains t.
inline std::set<Term> rewrite_closure(const Term& t, Theory th, std::size_t max_steps,
                                      std::size_t max_size) {
  std::set<Term> seen = {t};
  std::vector<Term> frontier = {t};
  for (std::size_t step = 0; step < max_steps && !frontier.empty(); ++step) {
    std::vector<Term> next;
    for (const Term& u : frontier)
      for (auto& [st, r] : rewrite_steps(u, th))
        if (r.size() <= max_size && seen.insert(r).second) next.push_back(std::move(r));
    frontier = std::move(next);
  }
  return seen;
}

struct CrossValidationReport {
  Theory theory = Theory::Quandle;
  std::size_t terms = 0;
  std::size_t rewrites_checked = 0;
  // (t, u) with u reached from t by rewriting but judged different.
  std::vector<std::pair<Term, Term>> violations;
  // Informational: unordered decider-equal pairs inside the enumeration and
  // how many of them bounded rewriting connected.
  std::size_t equal_pairs = 0;
  std::size_t connected_pairs = 0;

  bool ok() const noexcept { return violations.empty(); }

  std::string text() const {
    std::ostringstream os;
    os << "theory: " << theory_name(theory) << "\n"
       << "terms: " << terms << "\n"
       << "rewrites checked: " << rewrites_checked << "\n"
       << "violations: " << violations.size() << "\n";
    for (const auto& [a, b] : violations)
      os << "  violation: " << render_term(a) << "  ~>  " << render_term(b) << "\n";
    os << "decider-equal pairs: " << equal_pairs << "\n"
       << "connected by rewriting: " << connected_pairs << "\n";
    return os.str();
  }
};

// Every term reachable by bounded rewriting from an enumerated term must be
// judged equal to it by the decider of the theory.
inline CrossValidationReport cross_validate(Theory th, std::span<const Letter> alphabet,
                                            std::size_t max_size, std::size_t max_steps,
                                            std::optional<std::size_t> closure_size = {}) {
  CrossValidationReport rep;
  rep.theory = th;
  const std::vector<Term> terms = enumerate_terms(alphabet, max_size);
  rep.terms = terms.size();
  std::vector<std::set<Term>> closures;
  closures.reserve(terms.size());
  for (const Term& t : terms) {
    auto cl = rewrite_closure(t, th, max_steps, closure_size.value_or(default_closure_size(t)));
    for (const Term& u : cl) {
      ++rep.rewrites_checked;
      if (!theory_equal(th, t, u)) rep.violations.emplace_back(t, u);
    }
    closures.push_back(std::move(cl));
  }
  // Decider images, computed once.
  std::vector<RackNF> images;
  images.reserve(terms.size());
  for (const Term& t : terms)
    images.push_back(th == Theory::Quandle ? RackNF{Letter::x(), quandle_word(t)}
                                           : rack_normal_form(t));
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (images[i] != images[j]) continue;
      ++rep.equal_pairs;
      if (closures[i].count(terms[j]) || closures[j].count(terms[i])) ++rep.connected_pairs;
    }
  return rep;
}

}  // namespace rackiso
