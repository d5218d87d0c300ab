#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cohen/braid.hpp"
#include "cohen/pure_word.hpp"

namespace cohen {

/// Faces d_1 .. d_n of a braid, plus the first pair (1, j) that disagrees.
/// `violation` is empty exactly when all faces coincide.
struct FaceReport {
  std::vector<BraidWord> faces;
  std::optional<std::pair<int, int>> violation;
};

FaceReport face_report(const BraidWord& b);

/// All faces pairwise equal under the Artin oracle. Vacuous for n <= 1.
bool is_cohen(const BraidWord& b);
/// d_1(b); throws PreconditionError naming the violating pair when b is not
/// Cohen.
BraidWord common_face(const BraidWord& b);
/// Every face trivial.
bool is_brunnian(const BraidWord& b);

// The same predicates on A-words. Faces are taken letterwise and compared
// through combed forms, which stays cheap where Artin images explode.
struct PureFaceReport {
  std::vector<PureAWord> faces;
  std::optional<std::pair<int, int>> violation;
};
PureFaceReport face_report(const PureAWord& w);
bool is_cohen(const PureAWord& w);
PureAWord common_face(const PureAWord& w);
bool is_brunnian(const PureAWord& w);

/// Disjoint nonempty blocks of {1..n}. Strands outside every block are
/// unconstrained.
class StrandPartition {
 public:
  /// Throws PreconditionError on empty, overlapping or out-of-range blocks.
  StrandPartition(int n, std::vector<std::vector<int>> blocks);

  int strands() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Faces agree within every block.
bool is_generalized_cohen(const BraidWord& b, const StrandPartition& p);

/// Strand 1 ends at position n and d_1 is trivial.
bool is_unary(const BraidWord& b);
/// b (s_1 ... s_{n-1})^-1. Throws PreconditionError unless b is unary.
/// Only purity of the factor is checked.
BraidWord unary_factor(const BraidWord& b);

/// [A_{1,3}^l, A_{2,3}^m] in P_3.
PureAWord alpha(std::int64_t l, std::int64_t m);

/// Left-normed [A_{p(1),n}^{u_1}, ..., A_{p(n-1),n}^{u_{n-1}}] with
/// x^u = u^-1 x u. `perm` is a permutation of 1..n-1 and each conjugator a
/// word in U_n over the pure alphabet of rank n. Throws PreconditionError
/// otherwise.
PureAWord brunnian_generator(int n, const std::vector<int>& perm,
                             const std::vector<GroupWord>& conjugators);

/// Commutator expression with leaves A_{s,t}^k.
class CommExpr {
 public:
  static CommExpr leaf(int s, int t, std::int64_t k = 1);
  static CommExpr bracket(CommExpr a, CommExpr b);

  bool is_leaf() const { return !left_; }
  PureAWord evaluate(int n) const;
  /// Union of the leaf indices.
  std::vector<int> indices() const;
  std::string to_string() const;

 private:
  int s_ = 0, t_ = 0;
  std::int64_t k_ = 0;
  std::shared_ptr<const CommExpr> left_, right_;
};

struct CommutatorCheck {
  bool covers_all = false;
  bool brunnian = false;
};

/// Evaluates `e` in P_n and tests the Brunnian property. When the indices
/// cover {1..n} a negative result throws VerificationError.
CommutatorCheck all_indices_commutator_check(const CommExpr& e, int n);

/// A_{12}^k (A_{13} A_{23})^k ... (A_{1n} ... A_{n-1,n})^k.
PureAWord delta_square_word(int n, std::int64_t k);
/// A_{12}^k (A_{13}^k A_{23}^k) ... (A_{1n}^k ... A_{n-1,n}^k).
PureAWord separated_cohen_word(int n, std::int64_t k);

/// Decomposition of a Cohen element of P_3 as Delta_3^{2k} gamma.
struct P3Decomposition {
  std::int64_t k = 0;
  PureAWord gamma{3};
};
/// Refusal: exponent sums of A_{13}, A_{23} left after removing the twist.
struct P3Refusal {
  std::int64_t k = 0;
  std::int64_t e13 = 0;
  std::int64_t e23 = 0;
};
std::variant<P3Decomposition, P3Refusal> cohen_p3_decompose(const PureAWord& b);

/// Necessary condition for Cohen: after removing Delta_n^{2k}, every combed
/// component has zero abelianization.
bool cohen_commutator_certificate(const PureAWord& b);

}  // namespace cohen
