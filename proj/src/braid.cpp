#include "cohen/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cohen/errors.hpp"
#include "cohen/limits.hpp"

namespace cohen {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1)
    throw IndexError("braid needs at least one strand, got " +
                     std::to_string(strands));
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : BraidWord(strands) {
  for (int l : letters)
    if (l == 0 || std::abs(l) >= strands)
      throw IndexError("letter s" + std::to_string(std::abs(l)) +
                       " outside B_" + std::to_string(strands));
  letters_ = std::move(letters);
}

BraidWord BraidWord::freely_reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  BraidWord r(strands_);
  r.letters_ = std::move(out);
  return r;
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  std::size_t k = 0;
  while (k < letters_.size()) {
    std::size_t run = 1;
    while (k + run < letters_.size() && letters_[k + run] == letters_[k]) ++run;
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(std::abs(letters_[k]));
    long e = static_cast<long>(run) * (letters_[k] > 0 ? 1 : -1);
    if (e == -1)
      out += '\'';
    else if (e != 1)
      out += '^' + std::to_string(e);
    k += run;
  }
  return out;
}

namespace {

void require_strands(const BraidWord& a, const BraidWord& b, const char* op) {
  if (a.strands() != b.strands())
    throw PreconditionError(std::string(op) + ": strand counts " +
                            std::to_string(a.strands()) + " and " +
                            std::to_string(b.strands()));
}

}  // namespace

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  require_strands(a, b, "compose");
  std::vector<int> l(a.letters().begin(), a.letters().end());
  l.insert(l.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(l));
}

BraidWord invert_braid(const BraidWord& a) {
  std::vector<int> l;
  l.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it)
    l.push_back(-*it);
  return BraidWord(a.strands(), std::move(l));
}

BraidWord braid_power(const BraidWord& a, long k) {
  const BraidWord b = k < 0 ? invert_braid(a) : a;
  std::vector<int> l;
  l.reserve(b.length() * static_cast<std::size_t>(std::labs(k)));
  for (long r = 0; r < std::labs(k); ++r)
    l.insert(l.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(l));
}

BraidWord compose_all(std::span<const BraidWord> words) {
  if (words.empty()) return BraidWord();
  std::vector<int> l;
  for (const auto& w : words) {
    require_strands(words.front(), w, "compose_all");
    l.insert(l.end(), w.letters().begin(), w.letters().end());
  }
  return BraidWord(words.front().strands(), std::move(l));
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)])
      throw PreconditionError("not a permutation of 1.." +
                              std::to_string(size()));
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Perm::is_reversal() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != size() + 1 - i) return false;
  return true;
}

Perm Perm::then(const Perm& next) const {
  if (next.size() != size())
    throw PreconditionError("permutation sizes differ");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= size(); ++i)
    v[static_cast<std::size_t>(i - 1)] = next((*this)(i));
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 1; i <= size(); ++i)
    v[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Perm(std::move(v));
}

std::string Perm::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(images_[k]);
  }
  return out + ")";
}

Perm perm_of(const BraidWord& b) {
  // pos[p] = starting strand currently at position p.
  std::vector<int> pos(static_cast<std::size_t>(b.strands()));
  std::iota(pos.begin(), pos.end(), 1);
  for (int l : b.letters()) {
    auto j = static_cast<std::size_t>(std::abs(l));
    std::swap(pos[j - 1], pos[j]);
  }
  std::vector<int> images(pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p)
    images[static_cast<std::size_t>(pos[p] - 1)] = static_cast<int>(p + 1);
  return Perm(std::move(images));
}

bool is_pure(const BraidWord& b) { return perm_of(b).is_identity(); }

BraidWord half_twist(int n) {
  std::vector<int> l;
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) l.push_back(i);
  return BraidWord(n, std::move(l));
}

BraidWord a_gen(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw IndexError("A_{" + std::to_string(i) + "," + std::to_string(j) +
                     "} outside P_" + std::to_string(n));
  std::vector<int> l;
  for (int k = j - 1; k > i; --k) l.push_back(k);
  l.push_back(i);
  l.push_back(i);
  for (int k = i + 1; k < j; ++k) l.push_back(-k);
  return BraidWord(n, std::move(l));
}

FreeEndo::FreeEndo(std::vector<GroupWord> images) : images_(std::move(images)) {
  for (const auto& w : images_)
    if (!(w.alphabet() == Alphabet::free(rank())))
      throw AlphabetMismatch("FreeEndo image over " + w.alphabet().describe());
}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<GroupWord> v;
  for (int i = 1; i <= rank; ++i)
    v.push_back(GroupWord::generator(Alphabet::free(rank), {i, 0}));
  return FreeEndo(std::move(v));
}

bool FreeEndo::images_are_conjugates() const {
  for (const auto& w : images_) {
    auto s = w.syllables();
    if (s.empty() || s.size() % 2 == 0) return false;
    std::size_t mid = s.size() / 2;
    if (s[mid].exp != 1) return false;
    for (std::size_t k = 0; k < mid; ++k) {
      const auto& l = s[k];
      const auto& r = s[s.size() - 1 - k];
      if (l.gen != r.gen || l.exp != -r.exp) return false;
    }
  }
  return true;
}

bool FreeEndo::preserves_boundary() const {
  const Alphabet a = Alphabet::free(rank());
  WordBuilder prod;
  for (const auto& w : images_) prod.append(w.syllables());
  std::vector<Syllable> want;
  for (int i = 0; i < rank(); ++i) want.push_back({i, 1});
  return GroupWord(a, std::move(prod).take()) == GroupWord(a, std::move(want));
}

namespace {

// Applies the action of one Artin letter to a free word; ids are x_k -> k-1.
std::vector<Syllable> act(std::span<const Syllable> w, int letter) {
  const int i = std::abs(letter) - 1;  // id of x_i
  const int i1 = i + 1;                // id of x_{i+1}
  WordBuilder out(w.size() + 2);
  for (const auto& s : w) {
    if (letter > 0) {
      if (s.gen == i) {
        out.push(i, 1);
        out.push(i1, s.exp);
        out.push(i, -1);
      } else if (s.gen == i1) {
        out.push(i, s.exp);
      } else {
        out.push(s);
      }
    } else {
      if (s.gen == i) {
        out.push(i1, s.exp);
      } else if (s.gen == i1) {
        out.push(i1, -1);
        out.push(i, s.exp);
        out.push(i1, 1);
      } else {
        out.push(s);
      }
    }
  }
  return std::move(out).take();
}

}  // namespace

GroupWord artin_image(const BraidWord& b, int i) {
  if (i < 1 || i > b.strands())
    throw IndexError("generator x" + std::to_string(i) + " outside F_" +
                     std::to_string(b.strands()));
  const std::size_t budget = word_budget();
  std::vector<Syllable> w{{i - 1, 1}};
  for (int l : b.letters()) {
    w = act(w, l);
    if (w.size() > budget) throw ResourceError("Artin image", w.size(), budget);
  }
  return GroupWord(Alphabet::free(b.strands()), std::move(w));
}

FreeEndo artin_endo(const BraidWord& b) {
  std::vector<GroupWord> v;
  v.reserve(static_cast<std::size_t>(b.strands()));
  for (int i = 1; i <= b.strands(); ++i) v.push_back(artin_image(b, i));
  return FreeEndo(std::move(v));
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  require_strands(a, b, "braids_equal");
  BraidWord ra = a.freely_reduced();
  BraidWord rb = b.freely_reduced();
  if (ra == rb) return true;
  if (perm_of(ra) != perm_of(rb)) return false;
  for (int i = 1; i <= a.strands(); ++i)
    if (artin_image(ra, i) != artin_image(rb, i)) return false;
  return true;
}

bool is_trivial(const BraidWord& b) {
  BraidWord r = b.freely_reduced();
  if (r.empty()) return true;
  if (!is_pure(r)) return false;
  for (int i = 1; i <= b.strands(); ++i) {
    auto img = artin_image(r, i);
    if (img.size() != 1 || img.syllables()[0].gen != i - 1 ||
        img.syllables()[0].exp != 1)
      return false;
  }
  return true;
}

}  // namespace cohen
