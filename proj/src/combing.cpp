#include "cohen/combing.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>

#include "cohen/delta.hpp"
#include "cohen/errors.hpp"
#include "cohen/limits.hpp"

namespace cohen {

ConjPattern classify(int r, int s, int i) {
  if (i < r) return ConjPattern::Enclosing;
  if (i == r) return ConjPattern::SharesFirst;
  if (i < s) return ConjPattern::Interleaved;
  if (i == s) return ConjPattern::SharesSecond;
  return ConjPattern::Disjoint;
}

std::string to_string(ConjPattern p) {
  switch (p) {
    case ConjPattern::Enclosing: return "i<r";
    case ConjPattern::SharesFirst: return "i=r";
    case ConjPattern::Interleaved: return "r<i<s";
    case ConjPattern::SharesSecond: return "i=s";
    case ConjPattern::Disjoint: return "s<i";
  }
  return "?";
}

namespace {

using enum ConjRole;

// Output of derive_conj_rule for every pattern and sign, frozen.
// Index: [pattern][sign == -1].
const std::array<std::array<std::vector<RoleSyllable>, 2>, 5> kConjTable = {{
    // i < r: commutes
    {{{{I, 1}}, {{I, 1}}}},
    // i == r
    {{{{I, 1}, {S, 1}, {I, 1}, {S, -1}, {I, -1}},
      {{S, -1}, {I, 1}, {S, 1}}}},
    // r < i < s
    {{{{R, 1}, {S, 1}, {R, -1}, {S, -1}, {I, 1}, {S, 1}, {R, 1}, {S, -1}, {R, -1}},
      {{S, -1}, {R, -1}, {S, 1}, {R, 1}, {I, 1}, {R, -1}, {S, -1}, {R, 1}, {S, 1}}}},
    // i == s
    {{{{R, 1}, {I, 1}, {R, -1}},
      {{I, -1}, {R, -1}, {I, 1}, {R, 1}, {I, 1}}}},
    // s < i: commutes
    {{{{I, 1}}, {{I, 1}}}},
}};

std::size_t pattern_index(ConjPattern p) { return static_cast<std::size_t>(p); }

struct Instance {
  int r, s, i, j;
};

Instance canonical_instance(ConjPattern p) {
  switch (p) {
    case ConjPattern::Enclosing: return {2, 3, 1, 4};
    case ConjPattern::SharesFirst: return {1, 2, 1, 3};
    case ConjPattern::Interleaved: return {1, 3, 2, 4};
    case ConjPattern::SharesSecond: return {1, 2, 2, 3};
    case ConjPattern::Disjoint: return {1, 2, 3, 4};
  }
  return {1, 2, 3, 4};
}

int role_index(ConjRole role, int r, int s, int i) {
  switch (role) {
    case R: return r;
    case S: return s;
    case I: return i;
  }
  return i;
}

// Literal (A_{r,s}^sign)^-1 A_{i,j} A_{r,s}^sign as a braid on j strands.
BraidWord literal_conjugate(int r, int s, int sign, int i, int j) {
  BraidWord g = a_gen(r, s, j);
  if (sign < 0) g = invert_braid(g);
  return invert_braid(g) * a_gen(i, j, j) * g;
}

}  // namespace

std::span<const RoleSyllable> conj_table(ConjPattern p, int sign) {
  if (sign != 1 && sign != -1)
    throw PreconditionError("conj_table: sign must be +-1");
  return kConjTable[pattern_index(p)][sign < 0 ? 1 : 0];
}

GroupWord instantiate(std::span<const RoleSyllable> rule, int r, int s, int i,
                      int j, int n) {
  const Alphabet a = Alphabet::pure(n);
  std::vector<Syllable> syl;
  syl.reserve(rule.size());
  for (const auto& rs : rule)
    syl.push_back({a.id_of({role_index(rs.role, r, s, i), j}), rs.exp});
  return GroupWord(a, std::move(syl));
}

std::optional<std::vector<RoleSyllable>> derive_conj_rule_at(int r, int s, int i,
                                                             int j, int sign,
                                                             int max_conjugator) {
  if (!(1 <= r && r < s && s < j && 1 <= i && i < j))
    throw PreconditionError("derive_conj_rule: need r < s < j and i < j");
  const BraidWord target = literal_conjugate(r, s, sign, i, j);

  // Distinct roles; a role equal to I as a generator is folded into I.
  std::vector<ConjRole> roles{I};
  if (r != i) roles.push_back(R);
  if (s != i) roles.push_back(S);
  std::sort(roles.begin(), roles.end());

  const Alphabet role_alpha = Alphabet::indexed('r', 3);
  auto to_rule = [&](const GroupWord& w) {
    std::vector<RoleSyllable> out;
    for (const auto& syl : w.syllables())
      out.push_back({static_cast<ConjRole>(syl.gen), static_cast<int>(syl.exp)});
    return out;
  };

  // Breadth-first over reduced conjugators; letters ordered by role, then
  // positive before negative.
  std::vector<std::vector<Syllable>> layer{{}};
  for (int len = 0; len <= max_conjugator; ++len) {
    for (const auto& w : layer) {
      WordBuilder b;
      b.append_inverse(w);
      b.push(static_cast<int>(I), 1);
      b.append(w);
      GroupWord cand(role_alpha, std::move(b).take());
      auto rule = to_rule(cand);
      BraidWord got = expand(PureAWord(instantiate(rule, r, s, i, j, j)));
      if (braids_equal(got, target)) return rule;
    }
    std::vector<std::vector<Syllable>> next;
    for (const auto& w : layer)
      for (ConjRole role : roles)
        for (int e : {1, -1}) {
          const int g = static_cast<int>(role);
          if (!w.empty() && w.back().gen == g && w.back().exp == -e) continue;
          auto v = w;
          v.push_back({g, e});
          next.push_back(std::move(v));
        }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::optional<std::vector<RoleSyllable>> derive_conj_rule(ConjPattern p, int sign,
                                                          int max_conjugator) {
  auto in = canonical_instance(p);
  return derive_conj_rule_at(in.r, in.s, in.i, in.j, sign, max_conjugator);
}

GroupWord conj_rule(int r, int s, int sign, int i, int j, int n) {
  if (!(1 <= r && r < s && s < j && 1 <= i && i < j && j <= n))
    throw PreconditionError("conj_rule: need r < s < j <= n and i < j");
  if (sign != 1 && sign != -1)
    throw PreconditionError("conj_rule: sign must be +-1");
  GroupWord out = instantiate(conj_table(classify(r, s, i), sign), r, s, i, j, n);
  if (verify_mode()) {
    BraidWord lhs = expand(PureAWord(out));
    BraidWord rhs = literal_conjugate(r, s, sign, i, j);
    std::vector<int> up(rhs.letters().begin(), rhs.letters().end());
    if (!braids_equal(lhs, BraidWord(n, std::move(up))))
      throw VerificationError("conj_rule mismatch at r=" + std::to_string(r) +
                              " s=" + std::to_string(s) + " i=" +
                              std::to_string(i) + " j=" + std::to_string(j));
  }
  return out;
}

CombedForm::CombedForm(int n) : n_(n) {
  if (n < 1) throw IndexError("CombedForm needs n >= 1");
  for (int k = 2; k <= n; ++k) u_.emplace_back(Alphabet::pure(n));
}

void CombedForm::set_component(int k, GroupWord w) {
  if (k < 2 || k > n_)
    throw IndexError("CombedForm: component " + std::to_string(k));
  if (!(w.alphabet() == Alphabet::pure(n_)) || !in_fiber(w, k))
    throw PreconditionError("CombedForm: component " + std::to_string(k) +
                            " must be a word in U_" + std::to_string(k));
  u_[static_cast<std::size_t>(k - 2)] = std::move(w);
}

bool CombedForm::is_trivial() const {
  for (const auto& w : u_)
    if (!w.empty()) return false;
  return true;
}

PureAWord CombedForm::to_aword() const {
  WordBuilder b;
  for (const auto& w : u_) b.append(w.syllables());
  return PureAWord(GroupWord(Alphabet::pure(n_), std::move(b).take()));
}

std::string CombedForm::to_string() const {
  std::string out;
  for (int k = 2; k <= n_; ++k) {
    if (k > 2) out += "; ";
    out += "u" + std::to_string(k) + " = " + component(k).to_string();
  }
  return out;
}

namespace {

// Conjugation by A_{r,s}^sign as an automorphism of U_j, images cached.
class FiberConjugator {
 public:
  FiberConjugator(int j, int n) : j_(j), n_(n) {}

  const std::vector<GroupWord>& images(int r, int s, int sign) {
    auto key = std::array<int, 3>{r, s, sign};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<GroupWord> img;
    for (int i = 1; i < j_; ++i) img.push_back(conj_rule(r, s, sign, i, j_, n_));
    return cache_.emplace(key, std::move(img)).first->second;
  }

 private:
  int j_, n_;
  std::map<std::array<int, 3>, std::vector<GroupWord>> cache_;
};

GroupWord push_through(const GroupWord& c, const std::vector<GroupWord>& img) {
  const Alphabet a = c.alphabet();
  return substitute(c, a, [&](GenSym g) {
    return img[static_cast<std::size_t>(g.first - 1)];
  });
}

}  // namespace

CombedForm comb(const PureAWord& w) {
  const int n = w.strands();
  const Alphabet a = Alphabet::pure(n);
  const std::size_t budget = comb_budget();
  CombedForm out(n);
  std::vector<FiberConjugator> conj;
  for (int j = 0; j <= n; ++j) conj.emplace_back(j, n);

  auto syl = w.word().syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    const GenSym g = a.sym_of(it->gen);
    const int j = g.second;
    GroupWord c = GroupWord::generator(a, g);
    for (int k = 2; k < j; ++k) {
      for (const auto& v : out.component(k).syllables()) {
        const GenSym h = a.sym_of(v.gen);
        const int sign = v.exp > 0 ? 1 : -1;
        const auto& img = conj[static_cast<std::size_t>(j)].images(h.first, h.second, sign);
        for (std::int64_t rep = 0; rep < std::llabs(v.exp); ++rep) {
          c = push_through(c, img);
          if (c.size() > budget) throw ResourceError("comb conjugate", c.size(), budget);
        }
      }
    }
    GroupWord uj = multiply(power(c, it->exp), out.component(j));
    if (uj.size() > budget) throw ResourceError("comb component", uj.size(), budget);
    out.set_component(j, std::move(uj));
  }
  return out;
}

BraidWord expand(const CombedForm& c) { return expand(c.to_aword()); }

bool pure_equal(const PureAWord& a, const PureAWord& b) {
  if (a.strands() != b.strands())
    throw PreconditionError("pure_equal: strand counts differ");
  if (a == b) return true;
  // Combed forms are unique; combing each side separately avoids the
  // blowup of pushing a^-1 through b before anything cancels.
  return comb(a) == comb(b);
}

bool pure_trivial(const PureAWord& w) { return w.empty() || comb(w).is_trivial(); }

bool is_harmonic(const PureAWord& w) {
  const int n = w.strands();
  if (n < 3) return true;
  CombedForm c = comb(w);
  for (int i = 3; i <= n; ++i) {
    PureAWord face = face_on_aword(PureAWord(c.component(i)), 1);
    PureAWord prev_low(c.component(i - 1).relabel(Alphabet::pure(n - 1)));
    if (!braids_equal(expand(face), expand(prev_low))) return false;
  }
  return true;
}

}  // namespace cohen
