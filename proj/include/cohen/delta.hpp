#pragma once

#include <utility>

#include "cohen/braid.hpp"
#include "cohen/group_word.hpp"

namespace cohen {

/// Face d_i: forgets the strand that starts at position i.
///
/// Walks the letters tracking the current position p of that strand.
/// A crossing involving p is dropped and moves p; every other letter is
/// renumbered into B_{n-1}. Purely syntactic, no normalization.
BraidWord delete_strand(const BraidWord& b, int i);

/// Coface d^i: inserts a straight strand at position i, 1 <= i <= n+1.
BraidWord insert_strand(const BraidWord& b, int i);

/// d_i(A_{s,t}) in P_n as a word over the pure alphabet of rank n-1.
/// Trivial when i is s or t.
GroupWord face_on_pure_gen(int i, int s, int t, int n);

/// d^i(A_{s,t}) = A_{s',t'}.
std::pair<int, int> coface_on_pure_gen(int i, int s, int t);

/// Deletes i from the domain and pi(i) from the codomain.
Perm perm_face(const Perm& pi, int i);

}  // namespace cohen
