#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cohen/braid.hpp"
#include "cohen/pure_word.hpp"

namespace cohen {

/// Syntax error with the byte offset where it was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::invalid_argument("offset " + std::to_string(offset) + ": " + msg),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parsed braid expression.
///
/// Grammar, tokens optionally separated by whitespace:
///   expr    := term+
///   term    := primary ( '^' int | '\'' )*
///   primary := 's' int | 'a' int '.' int | 'D' | 'e'
///            | '(' expr ')' | '[' expr ( ',' expr )+ ']'
/// Brackets are left-normed commutators [a,b] = a^-1 b^-1 a b. Powers may be
/// negative but not zero.
struct Expr {
  enum class Kind { Sigma, AGen, Delta, Identity, Power, Concat, Commutator };

  Kind kind = Kind::Identity;
  int i = 0;
  int j = 0;
  std::int64_t exp = 1;  // Power exponent; sign of a Sigma letter.
  std::vector<Expr> kids;
};

/// Index checks use n: s_i needs 1 <= i < n, a_{i.j} needs 1 <= i < j <= n.
Expr parse(std::string_view text, int n);

/// Prints in the input grammar; parse(print(e)) gives back e.
std::string print(const Expr& e);

BraidWord to_braid(const Expr& e, int n);
/// The A-word when the expression uses no sigma letters and no D.
std::optional<PureAWord> to_aword(const Expr& e, int n);

}  // namespace cohen
