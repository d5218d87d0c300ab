#pragma once

#include <cstdint>
#include <string>

#include "cohen/braid.hpp"
#include "cohen/group_word.hpp"

namespace cohen {

/// Element of P_n written in the generators A_{s,t}.
class PureAWord {
 public:
  explicit PureAWord(int n = 1) : word_(Alphabet::pure(n)) {}
  /// Throws AlphabetMismatch unless `w` is over a pure alphabet.
  explicit PureAWord(GroupWord w);

  static PureAWord gen(int s, int t, int n, std::int64_t exp = 1);

  int strands() const { return word_.alphabet().rank(); }
  const GroupWord& word() const { return word_; }
  bool empty() const { return word_.empty(); }

  /// Same word viewed in P_m, m >= largest index used.
  PureAWord embed(int m) const { return PureAWord(word_.relabel(Alphabet::pure(m))); }

  std::string to_string() const { return word_.to_string(); }

  friend bool operator==(const PureAWord&, const PureAWord&) = default;

 private:
  GroupWord word_;
};

inline PureAWord operator*(const PureAWord& a, const PureAWord& b) {
  return PureAWord(multiply(a.word(), b.word()));
}
inline PureAWord invert(const PureAWord& a) { return PureAWord(invert(a.word())); }
inline PureAWord power(const PureAWord& a, std::int64_t k) {
  return PureAWord(power(a.word(), k));
}
inline PureAWord commutator(const PureAWord& a, const PureAWord& b) {
  return PureAWord(commutator(a.word(), b.word()));
}
inline PureAWord conjugate(const PureAWord& a, const PureAWord& by) {
  return PureAWord(conjugate(a.word(), by.word()));
}

/// Expands every A_{s,t} through a_gen.
BraidWord expand(const PureAWord& w);

/// Letterwise face d_i into P_{n-1}.
PureAWord face_on_aword(const PureAWord& w, int i);
/// Letterwise coface d^i into P_{n+1}.
PureAWord coface_on_aword(const PureAWord& w, int i);

/// True iff every letter of `w` has second index k.
bool in_fiber(const GroupWord& w, int k);

}  // namespace cohen
