#include "cohen/group_word.hpp"

#include <cstdlib>
#include <sstream>

#include "cohen/errors.hpp"

namespace cohen {

bool Alphabet::contains(GenSym g) const {
  if (kind_ == AlphabetKind::Indexed)
    return g.second == 0 && g.first >= 1 && g.first <= rank_;
  return g.first >= 1 && g.first < g.second && g.second <= rank_;
}

int Alphabet::id_of(GenSym g) const {
  if (!contains(g))
    throw IndexError("generator " + name(g) + " outside alphabet " +
                     describe());
  if (kind_ == AlphabetKind::Indexed) return g.first - 1;
  return pair_id(g.first, g.second);
}

GenSym Alphabet::sym_of(int id) const {
  if (id < 0 || id >= size())
    throw IndexError("generator id " + std::to_string(id) +
                     " outside alphabet " + describe());
  if (kind_ == AlphabetKind::Indexed) return {id + 1, 0};
  int t = 2;
  while (pair_id(1, t + 1) <= id) ++t;
  return {id - pair_id(1, t) + 1, t};
}

std::string Alphabet::name(GenSym g) const {
  std::string out(1, symbol_);
  out += std::to_string(g.first);
  if (kind_ == AlphabetKind::Pairs) out += "." + std::to_string(g.second);
  return out;
}

std::string Alphabet::describe() const {
  std::ostringstream os;
  os << (kind_ == AlphabetKind::Indexed ? "indexed" : "pairs") << "('"
     << symbol_ << "', rank " << rank_ << ")";
  return os.str();
}

void WordBuilder::push(int gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({gen, exp});
}

GroupWord::GroupWord(Alphabet alphabet, std::vector<Syllable> syllables)
    : alphabet_(alphabet) {
  WordBuilder b(syllables.size());
  for (const auto& s : syllables) {
    if (s.gen < 0 || s.gen >= alphabet.size())
      throw IndexError("generator id " + std::to_string(s.gen) +
                       " outside alphabet " + alphabet.describe());
    b.push(s);
  }
  syl_ = std::move(b).take();
}

GroupWord GroupWord::generator(Alphabet alphabet, GenSym g, std::int64_t exp) {
  GroupWord w(alphabet);
  int id = alphabet.id_of(g);
  if (exp != 0) w.syl_.push_back({id, exp});
  return w;
}

std::vector<Letter> GroupWord::letters() const {
  std::vector<Letter> out;
  out.reserve(syl_.size());
  for (const auto& s : syl_) out.push_back({alphabet_.sym_of(s.gen), s.exp});
  return out;
}

std::int64_t GroupWord::length() const {
  std::int64_t n = 0;
  for (const auto& s : syl_) n += std::llabs(s.exp);
  return n;
}

GroupWord GroupWord::relabel(Alphabet target) const {
  if (target.kind() != alphabet_.kind() || target.symbol() != alphabet_.symbol())
    throw AlphabetMismatch("cannot relabel " + alphabet_.describe() + " as " +
                           target.describe());
  for (const auto& s : syl_)
    if (s.gen >= target.size())
      throw IndexError("generator " + alphabet_.name(alphabet_.sym_of(s.gen)) +
                       " missing from " + target.describe());
  GroupWord w(target);
  w.syl_ = syl_;
  return w;
}

std::string GroupWord::to_string() const {
  if (syl_.empty()) return "e";
  std::string out;
  for (const auto& s : syl_) {
    if (!out.empty()) out += ' ';
    out += alphabet_.name(alphabet_.sym_of(s.gen));
    if (s.exp == -1)
      out += '\'';
    else if (s.exp != 1)
      out += '^' + std::to_string(s.exp);
  }
  return out;
}

GroupWord reduce(std::span<const RawLetter> letters) {
  if (letters.empty()) return GroupWord();
  Alphabet a = letters.front().alphabet;
  std::vector<Syllable> syl;
  syl.reserve(letters.size());
  for (const auto& l : letters) {
    if (!(l.alphabet == a))
      throw AlphabetMismatch("letters from " + a.describe() + " and " +
                             l.alphabet.describe());
    syl.push_back({a.id_of(l.sym), l.exp});
  }
  return GroupWord(a, std::move(syl));
}

namespace {

void require_same(const GroupWord& a, const GroupWord& b, const char* op) {
  if (!(a.alphabet() == b.alphabet()))
    throw AlphabetMismatch(std::string(op) + ": " + a.alphabet().describe() +
                           " vs " + b.alphabet().describe());
}

GroupWord build(Alphabet a, WordBuilder&& b) {
  return GroupWord(a, std::move(b).take());
}

}  // namespace

GroupWord multiply(const GroupWord& a, const GroupWord& b) {
  require_same(a, b, "multiply");
  WordBuilder w(a.size() + b.size());
  w.append(a.syllables());
  w.append(b.syllables());
  return build(a.alphabet(), std::move(w));
}

GroupWord invert(const GroupWord& a) {
  WordBuilder w(a.size());
  w.append_inverse(a.syllables());
  return build(a.alphabet(), std::move(w));
}

GroupWord power(const GroupWord& a, std::int64_t k) {
  if (k == 0 || a.empty()) return GroupWord(a.alphabet());
  if (k < 0) return power(invert(a), -k);
  if (a.size() == 1) {
    auto s = a.syllables().front();
    return GroupWord(a.alphabet(), {{s.gen, s.exp * k}});
  }
  GroupWord result(a.alphabet());
  GroupWord base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

GroupWord conjugate(const GroupWord& a, const GroupWord& by) {
  require_same(a, by, "conjugate");
  WordBuilder w(a.size() + 2 * by.size());
  w.append_inverse(by.syllables());
  w.append(a.syllables());
  w.append(by.syllables());
  return build(a.alphabet(), std::move(w));
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
  require_same(a, b, "commutator");
  WordBuilder w(2 * (a.size() + b.size()));
  w.append_inverse(a.syllables());
  w.append_inverse(b.syllables());
  w.append(a.syllables());
  w.append(b.syllables());
  return build(a.alphabet(), std::move(w));
}

GroupWord commutator(std::span<const GroupWord> entries) {
  if (entries.empty()) return GroupWord();
  GroupWord acc = entries.front();
  for (std::size_t k = 1; k < entries.size(); ++k)
    acc = commutator(acc, entries[k]);
  return acc;
}

GroupWord substitute(const GroupWord& w, Alphabet target,
                     const std::function<GroupWord(GenSym)>& image) {
  const Alphabet src = w.alphabet();
  std::vector<GroupWord> cache(static_cast<std::size_t>(src.size()));
  std::vector<bool> known(cache.size(), false);
  WordBuilder out(w.size());
  for (const auto& s : w.syllables()) {
    auto idx = static_cast<std::size_t>(s.gen);
    if (!known[idx]) {
      cache[idx] = image(src.sym_of(s.gen));
      if (!(cache[idx].alphabet() == target) && !cache[idx].empty())
        throw AlphabetMismatch("substitute: image of " +
                               src.name(src.sym_of(s.gen)) + " lives in " +
                               cache[idx].alphabet().describe() +
                               ", expected " + target.describe());
      known[idx] = true;
    }
    const GroupWord& img = cache[idx];
    if (img.size() == 1) {
      auto g = img.syllables().front();
      out.push(g.gen, g.exp * s.exp);
      continue;
    }
    auto reps = s.exp > 0 ? s.exp : -s.exp;
    for (std::int64_t r = 0; r < reps; ++r) {
      if (s.exp > 0)
        out.append(img.syllables());
      else
        out.append_inverse(img.syllables());
    }
  }
  return GroupWord(target, std::move(out).take());
}

GroupWord substitute(const GroupWord& w, Alphabet target, const SymbolMap& map) {
  return substitute(w, target, [&](GenSym g) {
    auto it = map.find(g);
    if (it == map.end())
      throw PreconditionError("substitute: no image for " +
                              w.alphabet().name(g));
    return it->second;
  });
}

std::vector<std::int64_t> abelianize(const GroupWord& w) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.alphabet().size()), 0);
  for (const auto& s : w.syllables()) v[static_cast<std::size_t>(s.gen)] += s.exp;
  return v;
}

}  // namespace cohen
