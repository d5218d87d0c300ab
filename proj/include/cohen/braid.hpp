#pragma once

#include <span>
#include <string>
#include <vector>

#include "cohen/group_word.hpp"

namespace cohen {

/// Word in the Artin generators of B_n. A letter is a signed generator
/// index: +i for sigma_i, -i for sigma_i^-1. Letters act left to right, so
/// the leftmost letter happens first in time.
///
/// Words are kept exactly as built; nothing here reduces implicitly.
class BraidWord {
 public:
  BraidWord() = default;
  /// Identity braid on `strands` strands.
  explicit BraidWord(int strands);
  /// Throws IndexError on a letter outside [1, strands-1].
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Cancels adjacent sigma_i sigma_i^-1 pairs.
  BraidWord freely_reduced() const;

  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

/// a then b.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert_braid(const BraidWord& a);
BraidWord braid_power(const BraidWord& a, long k);
/// Concatenation of any number of words with equal strand counts.
BraidWord compose_all(std::span<const BraidWord> words);

inline BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  return compose(a, b);
}

/// images[i-1] = i.beta, the end position of the strand starting at i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// One-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  /// Order reversal i -> n+1-i.
  bool is_reversal() const;

  /// First this, then `next`.
  Perm then(const Perm& next) const;
  Perm inverse() const;

  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

Perm perm_of(const BraidWord& b);
bool is_pure(const BraidWord& b);

/// (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1 s2) s1
BraidWord half_twist(int n);

/// s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1 on n strands.
BraidWord a_gen(int i, int j, int n);

/// Images of x_1..x_n under the Artin action of a braid.
class FreeEndo {
 public:
  explicit FreeEndo(std::vector<GroupWord> images);
  static FreeEndo identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const GroupWord& image(int i) const {
    return images_[static_cast<std::size_t>(i - 1)];
  }
  std::span<const GroupWord> images() const { return images_; }

  /// Every image has the shape w x_j w^-1.
  bool images_are_conjugates() const;
  /// Image of x_1 x_2 ... x_n is x_1 x_2 ... x_n.
  bool preserves_boundary() const;

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  std::vector<GroupWord> images_;
};

/// Image of x_i under the Artin action of `b`, built one letter at a time:
/// sigma_i sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i, and each
/// letter is applied to the image accumulated so far.
///
/// Throws ResourceError once an intermediate word exceeds word_budget().
GroupWord artin_image(const BraidWord& b, int i);
FreeEndo artin_endo(const BraidWord& b);

/// Equality in B_n, decided by comparing Artin images generator by
/// generator. Throws PreconditionError on a strand-count mismatch.
bool braids_equal(const BraidWord& a, const BraidWord& b);
bool is_trivial(const BraidWord& b);

}  // namespace cohen
