#include "cohen/lifting.hpp"

#include <algorithm>
#include <string>

#include "cohen/brunnian.hpp"
#include "cohen/delta.hpp"
#include "cohen/errors.hpp"

namespace cohen {

int f_index(int i, int k) { return k < i ? k : k + 1; }

std::vector<int> f_map(int i, int n) {
  if (i < 1 || i > n)
    throw IndexError("f_map: index " + std::to_string(i) + " outside [1, " +
                     std::to_string(n) + "]");
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) out.push_back(f_index(i, k));
  return out;
}

namespace {

int fiber_rank(const GroupWord& w, const char* op) {
  const Alphabet a = w.alphabet();
  if (a.kind() != AlphabetKind::Pairs || a.symbol() != 'a')
    throw AlphabetMismatch(std::string(op) + ": expected a pure braid word");
  const int n = a.rank();
  if (!in_fiber(w, n))
    throw PreconditionError(std::string(op) + ": word is not in U_" +
                            std::to_string(n));
  return n;
}

// r-subsets of 1..n as increasing tuples, in left-lexicographic order.
std::vector<std::vector<int>> subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int p = 0; p < r; ++p) idx[static_cast<std::size_t>(p)] = p + 1;
  while (true) {
    out.push_back(idx);
    int p = r - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - (r - 1 - p)) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < r; ++q)
      idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

GroupWord tau_unchecked(int m, int k, const GroupWord& alpha) {
  if (k == m) return alpha;
  WordBuilder b;
  for (const auto& idx : subsets(k - m, k - 1))
    b.append(apply_f(alpha, idx).syllables());
  return GroupWord(Alphabet::pure(k), std::move(b).take());
}

void require_brunnian(const GroupWord& w, const char* op) {
  if (!is_brunnian(PureAWord(w)))
    throw PreconditionError(std::string(op) + ": input is not Brunnian");
}

template <class Word, class Coface>
Word hopf_product(int k, int n, const Word& b, Word identity, Coface coface) {
  Word out = std::move(identity);
  for (const auto& tuple : hopf_tuples(n - k, n)) {
    Word w = b;
    for (int i : tuple) w = coface(w, i);
    out = out * w;
  }
  return out;
}

PureAWord hopf_pure(int k, int n, const PureAWord& b) {
  return hopf_product(k, n, b, PureAWord(n), [](const PureAWord& w, int i) {
    return coface_on_aword(w, i);
  });
}

BraidWord hopf_braid(int k, int n, const BraidWord& b) {
  return hopf_product(k, n, b, BraidWord(n), [](const BraidWord& w, int i) {
    return insert_strand(w, i);
  });
}

void check_hopf_args(int k, int n, int strands) {
  if (strands != k)
    throw PreconditionError("james_hopf: braid has " + std::to_string(strands) +
                            " strands, expected " + std::to_string(k));
  if (k < 1 || k > n) throw PreconditionError("james_hopf: needs 1 <= k <= n");
}

}  // namespace

GroupWord apply_f(const GroupWord& w, int i) {
  const int n = fiber_rank(w, "apply_f");
  if (i < 1 || i > n)
    throw IndexError("apply_f: f_" + std::to_string(i) + " on U_" +
                     std::to_string(n));
  const Alphabet target = Alphabet::pure(n + 1);
  return substitute(w, target, [&](GenSym g) {
    return GroupWord::generator(target, {f_index(i, g.first), f_index(i, g.second)});
  });
}

GroupWord apply_f(const GroupWord& w, const std::vector<int>& indices) {
  GroupWord out = w;
  for (int i : indices) out = apply_f(out, i);
  return out;
}

PureAWord tilde_lift(const GroupWord& w) {
  const int n = fiber_rank(w, "tilde_lift");
  require_brunnian(w, "tilde_lift");
  return PureAWord(tau_unchecked(n, n, w).relabel(Alphabet::pure(n + 1)) *
                   tau_unchecked(n, n + 1, w));
}

GroupWord tau(int m, int k, const GroupWord& alpha) {
  const int r = fiber_rank(alpha, "tau");
  if (r != m) throw PreconditionError("tau: word is not over P_" + std::to_string(m));
  if (k < m) throw PreconditionError("tau: needs m <= k");
  require_brunnian(alpha, "tau");
  return tau_unchecked(m, k, alpha);
}

PureAWord big_t(int m, int n, const GroupWord& alpha) {
  const int r = fiber_rank(alpha, "T");
  if (r != m) throw PreconditionError("T: word is not over P_" + std::to_string(m));
  if (m > n) throw PreconditionError("T: needs m <= n");
  require_brunnian(alpha, "T");
  const Alphabet target = Alphabet::pure(n);
  WordBuilder b;
  for (int k = m; k <= n; ++k) b.append(tau_unchecked(m, k, alpha).syllables());
  return PureAWord(GroupWord(target, std::move(b).take()));
}

std::vector<std::vector<int>> hopf_tuples(int r, int n) {
  std::vector<std::vector<int>> out = subsets(r, n);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

PureAWord james_hopf(int k, int n, const PureAWord& b) {
  check_hopf_args(k, n, b.strands());
  if (!is_brunnian(b)) throw PreconditionError("james_hopf: input is not Brunnian");
  return hopf_pure(k, n, b);
}

BraidWord james_hopf(int k, int n, const BraidWord& b) {
  check_hopf_args(k, n, b.strands());
  if (!is_brunnian(b)) throw PreconditionError("james_hopf: input is not Brunnian");
  return hopf_braid(k, n, b);
}

PureAWord hopf_assemble(const std::vector<PureAWord>& deltas) {
  const int n = static_cast<int>(deltas.size());
  PureAWord out(std::max(n, 1));
  for (int k = 1; k <= n; ++k)
    out = out * hopf_pure(k, n, deltas[static_cast<std::size_t>(k - 1)]);
  return out;
}

BraidWord hopf_assemble(const std::vector<BraidWord>& deltas) {
  const int n = static_cast<int>(deltas.size());
  BraidWord out(std::max(n, 1));
  for (int k = 1; k <= n; ++k)
    out = out * hopf_braid(k, n, deltas[static_cast<std::size_t>(k - 1)]);
  return out;
}

std::vector<PureAWord> hopf_decompose(const PureAWord& alpha) {
  const int n = alpha.strands();
  if (n == 1) return {alpha};
  if (n == 2) return {PureAWord(1), alpha};
  std::vector<PureAWord> deltas = hopf_decompose(common_face(alpha));
  PureAWord prefix(n);
  for (int k = 1; k < n; ++k)
    prefix = prefix * hopf_pure(k, n, deltas[static_cast<std::size_t>(k - 1)]);
  PureAWord top = invert(prefix) * alpha;
  if (!is_brunnian(top))
    throw VerificationError("hopf_decompose: delta_" + std::to_string(n) +
                            " is not Brunnian");
  deltas.push_back(std::move(top));
  return deltas;
}

std::vector<BraidWord> hopf_decompose(const BraidWord& alpha) {
  const int n = alpha.strands();
  if (!is_pure(alpha)) throw PreconditionError("hopf_decompose: braid is not pure");
  if (n == 1) return {alpha};
  if (n == 2) return {BraidWord(1), alpha};
  std::vector<BraidWord> deltas = hopf_decompose(common_face(alpha));
  BraidWord prefix(n);
  for (int k = 1; k < n; ++k)
    prefix = prefix * hopf_braid(k, n, deltas[static_cast<std::size_t>(k - 1)]);
  BraidWord top = invert_braid(prefix) * alpha;
  if (!is_brunnian(top))
    throw VerificationError("hopf_decompose: delta_" + std::to_string(n) +
                            " is not Brunnian");
  deltas.push_back(std::move(top));
  return deltas;
}

SolveResult solve_cohen_system(const BraidWord& alpha, int n) {
  if (n < 2 || alpha.strands() != n - 1)
    throw PreconditionError("solve_cohen_system: alpha must have n-1 strands, n >= 2");
  SolveResult out;
  FaceReport faces = face_report(alpha);
  if (faces.violation) {
    out.faces = std::move(faces.faces);
    out.violation = faces.violation;
    return out;
  }

  BraidWord beta(n);
  if (n == 2) {
    beta = BraidWord(2);
  } else if (is_pure(alpha)) {
    std::vector<BraidWord> deltas = hopf_decompose(alpha);
    for (int k = 1; k < n; ++k)
      beta = beta * hopf_braid(k, n, deltas[static_cast<std::size_t>(k - 1)]);
  } else {
    if (!perm_of(alpha).is_reversal())
      throw VerificationError("solve_cohen_system: Cohen braid with permutation " +
                              perm_of(alpha).to_string());
    SolveResult inner = solve_cohen_system(half_twist(n - 1) * alpha, n);
    if (!inner.solved())
      throw VerificationError("solve_cohen_system: twisted system unsolvable");
    beta = invert_braid(half_twist(n)) * *inner.beta;
  }

  for (int i = 1; i <= n; ++i)
    if (!braids_equal(delete_strand(beta, i), alpha))
      throw VerificationError("solve_cohen_system: face d" + std::to_string(i) +
                              " of the solution differs from alpha");
  out.beta = beta.freely_reduced();
  return out;
}

}  // namespace cohen
