#include "cohen/delta.hpp"

#include <cstdlib>
#include <string>

#include "cohen/errors.hpp"

namespace cohen {

namespace {

void require_strand(int i, int lo, int hi, const char* op) {
  if (i < lo || i > hi)
    throw IndexError(std::string(op) + ": strand " + std::to_string(i) +
                     " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
}

}  // namespace

BraidWord delete_strand(const BraidWord& b, int i) {
  const int n = b.strands();
  if (n < 2) throw IndexError("delete_strand: B_1 has no face");
  require_strand(i, 1, n, "delete_strand");
  std::vector<int> out;
  out.reserve(b.length());
  int p = i;
  for (int l : b.letters()) {
    const int j = std::abs(l);
    if (j == p) {
      ++p;
    } else if (j == p - 1) {
      --p;
    } else if (j > p) {
      out.push_back(l > 0 ? j - 1 : -(j - 1));
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(n - 1, std::move(out));
}

BraidWord insert_strand(const BraidWord& b, int i) {
  const int n = b.strands();
  require_strand(i, 1, n + 1, "insert_strand");
  std::vector<int> out;
  out.reserve(b.length());
  for (int l : b.letters()) {
    const int j = std::abs(l);
    const int sign = l > 0 ? 1 : -1;
    if (j < i - 1) {
      out.push_back(l);
    } else if (j == i - 1) {
      // sigma_i sigma_{i-1}^{+-1} sigma_i^-1
      out.push_back(i);
      out.push_back(sign * (i - 1));
      out.push_back(-i);
    } else {
      out.push_back(sign * (j + 1));
    }
  }
  return BraidWord(n + 1, std::move(out));
}

GroupWord face_on_pure_gen(int i, int s, int t, int n) {
  require_strand(i, 1, n, "face_on_pure_gen");
  if (!(1 <= s && s < t && t <= n))
    throw IndexError("face_on_pure_gen: A_{" + std::to_string(s) + "," +
                     std::to_string(t) + "} outside P_" + std::to_string(n));
  const Alphabet target = Alphabet::pure(n - 1);
  if (i == s || i == t) return GroupWord(target);
  const int s1 = s > i ? s - 1 : s;
  const int t1 = t > i ? t - 1 : t;
  return GroupWord::generator(target, {s1, t1});
}

std::pair<int, int> coface_on_pure_gen(int i, int s, int t) {
  if (!(1 <= s && s < t))
    throw IndexError("coface_on_pure_gen: bad pair (" + std::to_string(s) +
                     "," + std::to_string(t) + ")");
  if (i < 1) throw IndexError("coface_on_pure_gen: index below 1");
  if (i <= s) return {s + 1, t + 1};
  if (i <= t) return {s, t + 1};
  return {s, t};
}

Perm perm_face(const Perm& pi, int i) {
  const int n = pi.size();
  require_strand(i, 1, n, "perm_face");
  const int gone = pi(i);
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    const int img = pi(k);
    v.push_back(img > gone ? img - 1 : img);
  }
  return Perm(std::move(v));
}

}  // namespace cohen
