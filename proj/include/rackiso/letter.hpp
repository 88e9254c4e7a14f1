#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rackiso {

// Exponent of a group letter, or the orientation of a rack operation:
// Pos is the action |> (and exponent +1), Neg is |>~ (exponent -1).
enum class Sign : std::int8_t { Pos = 1, Neg = -1 };

constexpr Sign negate(Sign s) noexcept {
  return s == Sign::Pos ? Sign::Neg : Sign::Pos;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign sign_of(long v) noexcept { return v < 0 ? Sign::Neg : Sign::Pos; }

// Pos orders before Neg.
constexpr std::strong_ordering compare_sign(Sign a, Sign b) noexcept {
  return -to_int(a) <=> -to_int(b);
}

// An alphabet symbol. X is the distinguished variable of isotropy terms,
// X0/X1 are the auxiliary constants used by generic commutation checks and
// Gen(i) is the generator y_i (1-based).
class Letter {
 public:
  enum class Kind : std::uint8_t { X, X0, X1, Gen };

  constexpr Letter() noexcept = default;

  static constexpr Letter x() noexcept { return Letter(Kind::X, 0); }
  static constexpr Letter x0() noexcept { return Letter(Kind::X0, 0); }
  static constexpr Letter x1() noexcept { return Letter(Kind::X1, 0); }
  static Letter gen(std::uint32_t index) {
    if (index == 0) throw std::invalid_argument("generator index must be >= 1");
    return Letter(Kind::Gen, index);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint32_t index() const noexcept { return index_; }
  constexpr bool is_gen() const noexcept { return kind_ == Kind::Gen; }
  constexpr bool is_x() const noexcept { return kind_ == Kind::X; }
  constexpr bool is_aux() const noexcept {
    return kind_ == Kind::X0 || kind_ == Kind::X1;
  }

  // x < x0 < x1 < y1 < y2 < ...
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
  friend constexpr bool operator==(const Letter&, const Letter&) = default;

  std::string str() const {
    switch (kind_) {
      case Kind::X: return "x";
      case Kind::X0: return "x0";
      case Kind::X1: return "x1";
      case Kind::Gen: return "y" + std::to_string(index_);
    }
    return "?";
  }

 private:
  constexpr Letter(Kind k, std::uint32_t i) noexcept : kind_(k), index_(i) {}

  Kind kind_ = Kind::X;
  std::uint32_t index_ = 0;
};

// Thrown when a generator index falls outside 1..n.
class UnknownGenerator : public std::invalid_argument {
 public:
  explicit UnknownGenerator(std::uint64_t index)
      : std::invalid_argument("unknown generator y" + std::to_string(index)),
        index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

// Thrown for malformed term or word text; position is a 0-based byte offset.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : std::invalid_argument("syntax error at position " +
                              std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Thrown when a list of generator images does not match the generator count.
class ArityMismatch : public std::invalid_argument {
 public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("arity mismatch: expected " +
                              std::to_string(expected) + " images, got " +
                              std::to_string(got)),
        expected_(expected),
        got_(got) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

}  // namespace rackiso
