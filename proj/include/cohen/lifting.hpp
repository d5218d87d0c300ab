#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cohen/braid.hpp"
#include "cohen/pure_word.hpp"

namespace cohen {

/// f_i(k) = k for k < i, k + 1 otherwise.
int f_index(int i, int k);
/// (f_i(1), ..., f_i(n)) for 1 <= i <= n.
std::vector<int> f_map(int i, int n);

/// w^{f_i}: A_{k,n} -> A_{f_i(k), f_i(n)}, taking a U_n word over the pure
/// alphabet of rank n to a U_{n+1} word over rank n + 1.
GroupWord apply_f(const GroupWord& w, int i);
/// w^{f_{i_1} f_{i_2} ...}, with f_{i_1} applied first.
GroupWord apply_f(const GroupWord& w, const std::vector<int>& indices);

/// w w^{f_1} ... w^{f_n} in P_{n+1}. Throws PreconditionError unless w lies
/// in U_n and is Brunnian.
PureAWord tilde_lift(const GroupWord& w);

/// tau_{m,k}(alpha): product of alpha^{f_{i_1} ... f_{i_{k-m}}} over
/// 1 <= i_1 < ... < i_{k-m} <= k-1 in lexicographic order, as a U_k word.
GroupWord tau(int m, int k, const GroupWord& alpha);

/// T_{m,n}(alpha) = tau_{m,m} tau_{m,m+1} ... tau_{m,n} in P_n.
PureAWord big_t(int m, int n, const GroupWord& alpha);

/// Index tuples 1 <= i_1 < ... < i_r <= n ordered by the reversed tuple
/// (rightmost entry most significant), the factor order of H_{k,n}.
std::vector<std::vector<int>> hopf_tuples(int r, int n);

/// H_{k,n}(b) = product over hopf_tuples(n-k, n) of d^{i_r} ... d^{i_1}(b),
/// d^{i_1} applied first. The Brunnian precondition is checked.
PureAWord james_hopf(int k, int n, const PureAWord& b);
BraidWord james_hopf(int k, int n, const BraidWord& b);

/// delta_1 .. delta_n with alpha = H_{1,n}(delta_1) ... H_{n,n}(delta_n) and
/// delta_k Brunnian in P_k. Requires alpha pure and Cohen.
std::vector<PureAWord> hopf_decompose(const PureAWord& alpha);
std::vector<BraidWord> hopf_decompose(const BraidWord& alpha);

/// Product H_{1,n}(delta_1) ... H_{n,n}(delta_n) without Brunnian checks.
PureAWord hopf_assemble(const std::vector<PureAWord>& deltas);
BraidWord hopf_assemble(const std::vector<BraidWord>& deltas);

/// Either a solution beta of d_1 beta = ... = d_n beta = alpha, or the faces
/// of alpha with the first pair that disagrees.
struct SolveResult {
  std::optional<BraidWord> beta;
  std::vector<BraidWord> faces;
  std::optional<std::pair<int, int>> violation;

  bool solved() const { return beta.has_value(); }
};

/// alpha in B_{n-1}. Every face of the returned beta is checked against
/// alpha before returning.
SolveResult solve_cohen_system(const BraidWord& alpha, int n);

}  // namespace cohen
