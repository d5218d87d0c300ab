#include "cohen/pure_word.hpp"

#include <cstdlib>

#include "cohen/delta.hpp"
#include "cohen/errors.hpp"

namespace cohen {

PureAWord::PureAWord(GroupWord w) : word_(std::move(w)) {
  const Alphabet a = word_.alphabet();
  if (a.kind() != AlphabetKind::Pairs || a.symbol() != 'a')
    throw AlphabetMismatch("pure braid word over " + a.describe());
}

PureAWord PureAWord::gen(int s, int t, int n, std::int64_t exp) {
  return PureAWord(GroupWord::generator(Alphabet::pure(n), {s, t}, exp));
}

BraidWord expand(const PureAWord& w) {
  const int n = w.strands();
  std::vector<int> out;
  const Alphabet a = w.word().alphabet();
  for (const auto& s : w.word().syllables()) {
    const GenSym g = a.sym_of(s.gen);
    BraidWord base = a_gen(g.first, g.second, n);
    if (s.exp < 0) base = invert_braid(base);
    for (std::int64_t r = 0; r < std::llabs(s.exp); ++r)
      out.insert(out.end(), base.letters().begin(), base.letters().end());
  }
  return BraidWord(n, std::move(out));
}

PureAWord face_on_aword(const PureAWord& w, int i) {
  const int n = w.strands();
  const Alphabet target = Alphabet::pure(n - 1);
  return PureAWord(substitute(w.word(), target, [&](GenSym g) {
    return face_on_pure_gen(i, g.first, g.second, n);
  }));
}

PureAWord coface_on_aword(const PureAWord& w, int i) {
  const int n = w.strands();
  if (i < 1 || i > n + 1)
    throw IndexError("coface_on_aword: index " + std::to_string(i) +
                     " outside [1, " + std::to_string(n + 1) + "]");
  const Alphabet target = Alphabet::pure(n + 1);
  return PureAWord(substitute(w.word(), target, [&](GenSym g) {
    auto [s, t] = coface_on_pure_gen(i, g.first, g.second);
    return GroupWord::generator(target, {s, t});
  }));
}

bool in_fiber(const GroupWord& w, int k) {
  const Alphabet a = w.alphabet();
  for (const auto& s : w.syllables())
    if (a.sym_of(s.gen).second != k) return false;
  return true;
}

}  // namespace cohen
