#include "cohen/brunnian.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cohen/combing.hpp"
#include "cohen/delta.hpp"
#include "cohen/errors.hpp"

namespace cohen {

namespace {

std::string pair_text(std::pair<int, int> p) {
  return "d" + std::to_string(p.first) + " != d" + std::to_string(p.second);
}

}  // namespace

FaceReport face_report(const BraidWord& b) {
  FaceReport r;
  const int n = b.strands();
  if (n < 2) return r;
  for (int i = 1; i <= n; ++i) r.faces.push_back(delete_strand(b, i));
  for (int j = 2; j <= n && !r.violation; ++j)
    if (!braids_equal(r.faces[0], r.faces[static_cast<std::size_t>(j - 1)]))
      r.violation = std::pair{1, j};
  return r;
}

bool is_cohen(const BraidWord& b) { return !face_report(b).violation; }

BraidWord common_face(const BraidWord& b) {
  if (b.strands() < 2) throw PreconditionError("common_face: needs n >= 2");
  FaceReport r = face_report(b);
  if (r.violation)
    throw PreconditionError("common_face: not Cohen, " + pair_text(*r.violation));
  return r.faces.front();
}

bool is_brunnian(const BraidWord& b) {
  for (int i = 1; i <= b.strands() && b.strands() >= 2; ++i)
    if (!is_trivial(delete_strand(b, i))) return false;
  return true;
}

PureFaceReport face_report(const PureAWord& w) {
  PureFaceReport r;
  const int n = w.strands();
  if (n < 2) return r;
  for (int i = 1; i <= n; ++i) r.faces.push_back(face_on_aword(w, i));
  for (int j = 2; j <= n && !r.violation; ++j)
    if (!pure_equal(r.faces[0], r.faces[static_cast<std::size_t>(j - 1)]))
      r.violation = std::pair{1, j};
  return r;
}

bool is_cohen(const PureAWord& w) { return !face_report(w).violation; }

PureAWord common_face(const PureAWord& w) {
  if (w.strands() < 2) throw PreconditionError("common_face: needs n >= 2");
  PureFaceReport r = face_report(w);
  if (r.violation)
    throw PreconditionError("common_face: not Cohen, " + pair_text(*r.violation));
  return r.faces.front();
}

bool is_brunnian(const PureAWord& w) {
  for (int i = 1; i <= w.strands() && w.strands() >= 2; ++i)
    if (!pure_trivial(face_on_aword(w, i))) return false;
  return true;
}

StrandPartition::StrandPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::set<int> seen;
  for (const auto& block : blocks_) {
    if (block.empty()) throw PreconditionError("StrandPartition: empty block");
    for (int i : block) {
      if (i < 1 || i > n)
        throw PreconditionError("StrandPartition: strand " + std::to_string(i) +
                                " outside [1, " + std::to_string(n) + "]");
      if (!seen.insert(i).second)
        throw PreconditionError("StrandPartition: strand " + std::to_string(i) +
                                " in two blocks");
    }
  }
}

bool is_generalized_cohen(const BraidWord& b, const StrandPartition& p) {
  if (p.strands() != b.strands())
    throw PreconditionError("is_generalized_cohen: partition is for " +
                            std::to_string(p.strands()) + " strands");
  for (const auto& block : p.blocks()) {
    if (block.size() < 2) continue;
    const BraidWord first = delete_strand(b, block.front());
    for (std::size_t k = 1; k < block.size(); ++k)
      if (!braids_equal(first, delete_strand(b, block[k]))) return false;
  }
  return true;
}

namespace {

BraidWord cycle_word(int n) {
  std::vector<int> letters;
  for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

}  // namespace

bool is_unary(const BraidWord& b) {
  const int n = b.strands();
  if (n < 2) return false;
  return perm_of(b)(1) == n && is_trivial(delete_strand(b, 1));
}

BraidWord unary_factor(const BraidWord& b) {
  if (!is_unary(b)) throw PreconditionError("unary_factor: braid is not unary");
  BraidWord out = (b * invert_braid(cycle_word(b.strands()))).freely_reduced();
  if (!is_pure(out)) throw VerificationError("unary_factor: factor is not pure");
  return out;
}

PureAWord alpha(std::int64_t l, std::int64_t m) {
  return commutator(PureAWord::gen(1, 3, 3, l), PureAWord::gen(2, 3, 3, m));
}

PureAWord brunnian_generator(int n, const std::vector<int>& perm,
                             const std::vector<GroupWord>& conjugators) {
  if (n < 2) throw PreconditionError("brunnian_generator: needs n >= 2");
  const auto m = static_cast<std::size_t>(n - 1);
  if (perm.size() != m || conjugators.size() != m)
    throw PreconditionError("brunnian_generator: need n-1 indices and conjugators");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < m; ++k)
    if (sorted[k] != static_cast<int>(k) + 1)
      throw PreconditionError("brunnian_generator: not a permutation of 1..n-1");
  const Alphabet a = Alphabet::pure(n);
  std::vector<GroupWord> entries;
  for (std::size_t k = 0; k < m; ++k) {
    const GroupWord& u = conjugators[k];
    if (!(u.alphabet() == a) || !in_fiber(u, n))
      throw PreconditionError("brunnian_generator: conjugator " +
                              std::to_string(k + 1) + " is not a U_" +
                              std::to_string(n) + " word");
    entries.push_back(conjugate(GroupWord::generator(a, {perm[k], n}), u));
  }
  return PureAWord(commutator(entries));
}

CommExpr CommExpr::leaf(int s, int t, std::int64_t k) {
  if (!(1 <= s && s < t)) throw IndexError("CommExpr: bad generator index");
  CommExpr e;
  e.s_ = s;
  e.t_ = t;
  e.k_ = k;
  return e;
}

CommExpr CommExpr::bracket(CommExpr a, CommExpr b) {
  CommExpr e;
  e.left_ = std::make_shared<const CommExpr>(std::move(a));
  e.right_ = std::make_shared<const CommExpr>(std::move(b));
  return e;
}

PureAWord CommExpr::evaluate(int n) const {
  if (is_leaf()) return PureAWord::gen(s_, t_, n, k_);
  return commutator(left_->evaluate(n), right_->evaluate(n));
}

std::vector<int> CommExpr::indices() const {
  if (is_leaf()) return {s_, t_};
  std::vector<int> out = left_->indices();
  for (int i : right_->indices()) out.push_back(i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string CommExpr::to_string() const {
  if (is_leaf()) {
    std::string s = "a" + std::to_string(s_) + "." + std::to_string(t_);
    if (k_ != 1) s += "^" + std::to_string(k_);
    return s;
  }
  return "[ " + left_->to_string() + " , " + right_->to_string() + " ]";
}

CommutatorCheck all_indices_commutator_check(const CommExpr& e, int n) {
  CommutatorCheck out;
  const std::vector<int> idx = e.indices();
  out.covers_all = static_cast<int>(idx.size()) == n && idx.front() == 1 &&
                   idx.back() == n;
  out.brunnian = is_brunnian(e.evaluate(n));
  if (out.covers_all && !out.brunnian)
    throw VerificationError("commutator over all indices is not Brunnian: " +
                            e.to_string());
  return out;
}

PureAWord delta_square_word(int n, std::int64_t k) {
  if (n < 1) throw PreconditionError("delta_square_word: needs n >= 1");
  PureAWord out(n);
  for (int t = 2; t <= n; ++t) {
    PureAWord block(n);
    for (int s = 1; s < t; ++s) block = block * PureAWord::gen(s, t, n);
    out = out * power(block, k);
  }
  return out;
}

PureAWord separated_cohen_word(int n, std::int64_t k) {
  if (n < 1) throw PreconditionError("separated_cohen_word: needs n >= 1");
  PureAWord out(n);
  for (int t = 2; t <= n; ++t)
    for (int s = 1; s < t; ++s) out = out * PureAWord::gen(s, t, n, k);
  return out;
}

std::variant<P3Decomposition, P3Refusal> cohen_p3_decompose(const PureAWord& b) {
  if (b.strands() != 3) throw PreconditionError("cohen_p3_decompose: needs P_3");
  const CombedForm c = comb(b);
  const auto u2 = abelianize(c.component(2));
  const std::int64_t k = u2[static_cast<std::size_t>(pair_id(1, 2))];
  // Delta_3^{2k} is central, so removing it leaves a word in U_3.
  const PureAWord rest = delta_square_word(3, -k) * b;
  const CombedForm cr = comb(rest);
  if (!cr.component(2).empty())
    throw VerificationError("cohen_p3_decompose: residual U_2 part after twist");
  const auto ab = abelianize(cr.component(3));
  const std::int64_t e13 = ab[static_cast<std::size_t>(pair_id(1, 3))];
  const std::int64_t e23 = ab[static_cast<std::size_t>(pair_id(2, 3))];
  if (e13 != 0 || e23 != 0) return P3Refusal{k, e13, e23};
  return P3Decomposition{k, PureAWord(cr.component(3))};
}

bool cohen_commutator_certificate(const PureAWord& b) {
  const int n = b.strands();
  if (n < 2) return true;
  const CombedForm c = comb(b);
  const std::int64_t k =
      abelianize(c.component(2))[static_cast<std::size_t>(pair_id(1, 2))];
  const CombedForm rest = comb(delta_square_word(n, -k) * b);
  for (int t = 2; t <= n; ++t)
    for (std::int64_t e : abelianize(rest.component(t)))
      if (e != 0) return false;
  return true;
}

}  // namespace cohen
