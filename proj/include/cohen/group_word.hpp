#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cohen {

/// Index of a generator inside its alphabet: (i) for x_i, (s,t) for A_{s,t}.
/// For single-index alphabets `second` is zero.
struct GenSym {
  int first = 0;
  int second = 0;

  friend auto operator<=>(const GenSym&, const GenSym&) = default;
};

enum class AlphabetKind : std::uint8_t { Indexed, Pairs };

/// A finite generator alphabet. Indexed alphabets hold c_1..c_rank; pair
/// alphabets hold c_{s,t} for 1 <= s < t <= rank.
///
/// Pair generators get dense ids ordered by (t, s), so the ids of
/// {c_{s,t} : t <= k} do not depend on the rank. This keeps the inclusion
/// P_k -> P_n a plain relabeling of the alphabet.
class Alphabet {
 public:
  constexpr Alphabet() = default;

  static constexpr Alphabet indexed(char symbol, int rank) {
    return Alphabet(symbol, AlphabetKind::Indexed, rank);
  }
  static constexpr Alphabet pairs(char symbol, int rank) {
    return Alphabet(symbol, AlphabetKind::Pairs, rank);
  }
  /// x_1..x_n, the free group acted on by B_n.
  static constexpr Alphabet free(int rank) { return indexed('x', rank); }
  /// A_{s,t}, the pure braid generators of P_n.
  static constexpr Alphabet pure(int n) { return pairs('a', n); }

  constexpr char symbol() const { return symbol_; }
  constexpr AlphabetKind kind() const { return kind_; }
  constexpr int rank() const { return rank_; }

  constexpr int size() const {
    return kind_ == AlphabetKind::Indexed ? rank_ : rank_ * (rank_ - 1) / 2;
  }

  bool contains(GenSym g) const;
  /// Throws IndexError when `g` is outside the alphabet.
  int id_of(GenSym g) const;
  GenSym sym_of(int id) const;

  /// Same symbol and kind, rank changed.
  constexpr Alphabet with_rank(int rank) const {
    return Alphabet(symbol_, kind_, rank);
  }

  std::string name(GenSym g) const;
  std::string describe() const;

  friend constexpr bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  constexpr Alphabet(char symbol, AlphabetKind kind, int rank)
      : symbol_(symbol), kind_(kind), rank_(rank) {}

  char symbol_ = 'x';
  AlphabetKind kind_ = AlphabetKind::Indexed;
  int rank_ = 0;
};

/// Dense id of A_{s,t} in any pair alphabet of rank >= t.
constexpr int pair_id(int s, int t) { return (t - 1) * (t - 2) / 2 + (s - 1); }

/// One exponent run g^exp, exp != 0.
struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct Letter {
  GenSym sym;
  std::int64_t exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letter tagged with its alphabet, the input to `reduce`.
struct RawLetter {
  Alphabet alphabet;
  GenSym sym;
  std::int64_t exp = 0;
};

/// Stack-based free reducer. Appending keeps the buffer freely reduced.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(std::size_t reserve) { syl_.reserve(reserve); }

  void push(int gen, std::int64_t exp);
  void push(Syllable s) { push(s.gen, s.exp); }
  void append(std::span<const Syllable> w) {
    for (const auto& s : w) push(s);
  }
  /// Appends the inverse of `w`.
  void append_inverse(std::span<const Syllable> w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) push(it->gen, -it->exp);
  }

  std::size_t size() const { return syl_.size(); }
  std::vector<Syllable> take() && { return std::move(syl_); }

 private:
  std::vector<Syllable> syl_;
};

/// Freely reduced word over a fixed alphabet. Immutable value.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(Alphabet alphabet) : alphabet_(alphabet) {}

  /// Reduces `syllables`; generator ids must be valid for `alphabet`.
  GroupWord(Alphabet alphabet, std::vector<Syllable> syllables);

  static GroupWord generator(Alphabet alphabet, GenSym g, std::int64_t exp = 1);

  Alphabet alphabet() const { return alphabet_; }
  std::span<const Syllable> syllables() const { return syl_; }
  std::vector<Letter> letters() const;

  bool empty() const { return syl_.empty(); }
  /// Number of exponent runs.
  std::size_t size() const { return syl_.size(); }
  /// Sum of |exp|, the length as a word in single letters.
  std::int64_t length() const;

  /// Same letters over `target`; every generator must exist there.
  GroupWord relabel(Alphabet target) const;

  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Syllable> syl_;
};

/// Free reduction of a raw letter sequence; zero exponents are dropped.
GroupWord reduce(std::span<const RawLetter> letters);

GroupWord multiply(const GroupWord& a, const GroupWord& b);
GroupWord invert(const GroupWord& a);
GroupWord power(const GroupWord& a, std::int64_t k);
/// by^-1 a by
GroupWord conjugate(const GroupWord& a, const GroupWord& by);
/// a^-1 b^-1 a b
GroupWord commutator(const GroupWord& a, const GroupWord& b);
/// Left-normed [[...[w1, w2], ...], wk]; a single entry is returned as is.
GroupWord commutator(std::span<const GroupWord> entries);

inline GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  return multiply(a, b);
}

/// Letterwise image under the endomorphism g -> image(g), reduced.
/// `image` must return words over `target`.
GroupWord substitute(const GroupWord& w, Alphabet target,
                     const std::function<GroupWord(GenSym)>& image);

using SymbolMap = std::map<GenSym, GroupWord>;
/// Throws PreconditionError on a generator missing from `map`.
GroupWord substitute(const GroupWord& w, Alphabet target, const SymbolMap& map);

/// Exponent sums indexed by dense generator id.
std::vector<std::int64_t> abelianize(const GroupWord& w);

}  // namespace cohen
