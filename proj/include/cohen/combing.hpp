#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohen/braid.hpp"
#include "cohen/pure_word.hpp"

namespace cohen {

/// Position of i relative to r < s, all below j, for the conjugate
/// (A_{r,s}^e)^-1 A_{i,j} A_{r,s}^e.
enum class ConjPattern : std::uint8_t {
  Enclosing,     // i < r
  SharesFirst,   // i == r
  Interleaved,   // r < i < s
  SharesSecond,  // i == s
  Disjoint,      // s < i
};

inline constexpr ConjPattern kAllConjPatterns[] = {
    ConjPattern::Enclosing, ConjPattern::SharesFirst, ConjPattern::Interleaved,
    ConjPattern::SharesSecond, ConjPattern::Disjoint};

ConjPattern classify(int r, int s, int i);
std::string to_string(ConjPattern p);

/// Stand-in generators of a rule: R = A_{r,j}, S = A_{s,j}, I = A_{i,j}.
enum class ConjRole : std::uint8_t { R, S, I };

struct RoleSyllable {
  ConjRole role;
  int exp;

  friend bool operator==(const RoleSyllable&, const RoleSyllable&) = default;
};

/// Frozen rewrite of (A_{r,s}^sign)^-1 A_{i,j} A_{r,s}^sign, sign = +-1, as a
/// word in the roles. The table was produced by derive_conj_rule.
std::span<const RoleSyllable> conj_table(ConjPattern p, int sign);

/// Bounded search for the rewrite: tries w^-1 I w for reduced conjugators w
/// over the roles, shortest first, up to `max_conjugator` letters, and
/// accepts the first candidate the Artin oracle equates with the literal
/// conjugate. Indices are instantiated with j = 4 (j = 3 when i meets r or s),
/// or at the explicit `r, s, i, j` given.
std::optional<std::vector<RoleSyllable>> derive_conj_rule(ConjPattern p, int sign,
                                                          int max_conjugator = 4);
std::optional<std::vector<RoleSyllable>> derive_conj_rule_at(int r, int s, int i,
                                                             int j, int sign,
                                                             int max_conjugator = 4);

/// Instantiates a role word at concrete indices, over the pure alphabet of
/// rank n.
GroupWord instantiate(std::span<const RoleSyllable> rule, int r, int s, int i,
                      int j, int n);

/// (A_{r,s}^sign)^-1 A_{i,j} A_{r,s}^sign rewritten inside U_j, over the pure
/// alphabet of rank n. Requires r < s < j, i < j, sign = +-1.
GroupWord conj_rule(int r, int s, int sign, int i, int j, int n);

/// Combed normal form u_2 u_3 ... u_n, u_k over {A_{1,k}, ..., A_{k-1,k}}.
class CombedForm {
 public:
  explicit CombedForm(int n);

  int strands() const { return n_; }
  /// 2 <= k <= n.
  const GroupWord& component(int k) const {
    return u_[static_cast<std::size_t>(k - 2)];
  }
  void set_component(int k, GroupWord w);

  bool is_trivial() const;
  /// u_2 u_3 ... u_n as one A-word.
  PureAWord to_aword() const;
  std::string to_string() const;

  friend bool operator==(const CombedForm&, const CombedForm&) = default;

 private:
  int n_;
  std::vector<GroupWord> u_;
};

/// Combs an A-word. Letters are consumed right to left; each one is pushed
/// through u_2 ... u_{j-1} with conj_rule and prepended to u_j.
/// Throws ResourceError when a component outgrows comb_budget().
CombedForm comb(const PureAWord& w);

BraidWord expand(const CombedForm& c);

/// Equality in P_n via combed forms.
bool pure_equal(const PureAWord& a, const PureAWord& b);
bool pure_trivial(const PureAWord& w);

/// d_1(u_i) equals u_{i-1} for 3 <= i <= n.
bool is_harmonic(const PureAWord& w);

}  // namespace cohen
