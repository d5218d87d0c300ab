// Samples pairs of Brunnian words w1, w2 in U_n and tests whether
// lift(w1 w2)^-1 lift(w1) lift(w2) is Brunnian in P_{n+1}. Prints one line
// per sample and a summary; it answers nothing in general.
//
// Usage: lift_product_experiment [samples] [seed] [comb budget]
#include <iostream>
#include <random>
#include <string>

#include "cohen/brunnian.hpp"
#include "cohen/combing.hpp"
#include "cohen/lifting.hpp"
#include "cohen/limits.hpp"

using namespace cohen;

namespace {

GroupWord random_fiber_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
  const Alphabet a = Alphabet::pure(n);
  GroupWord w(a);
  for (int k = 0; k < len; ++k)
    w = w * GroupWord::generator(a, {gen(rng), n}, sign(rng) ? 1 : -1);
  return w;
}

PureAWord random_brunnian(std::mt19937& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  for (int k = 0; k < n - 1; ++k) perm[static_cast<std::size_t>(k)] = k + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<GroupWord> conj;
  std::uniform_int_distribution<int> len(0, 2);
  for (int k = 0; k < n - 1; ++k) conj.push_back(random_fiber_word(rng, n, len(rng)));
  return brunnian_generator(n, perm, conj);
}

}  // namespace

int main(int argc, char** argv) {
  const int samples = argc > 1 ? std::stoi(argv[1]) : 20;
  const unsigned seed = argc > 2 ? static_cast<unsigned>(std::stoul(argv[2])) : 7u;
  if (argc > 3) set_comb_budget(static_cast<std::size_t>(std::stoul(argv[3])));
  std::mt19937 rng(seed);
  int brunnian = 0, trivial = 0, failed = 0;
  for (int s = 0; s < samples; ++s) {
    const int n = s % 2 == 0 ? 3 : 4;
    const PureAWord w1 = random_brunnian(rng, n);
    const PureAWord w2 = random_brunnian(rng, n);
    try {
      const PureAWord lhs = tilde_lift((w1 * w2).word());
      const PureAWord rhs = tilde_lift(w1.word()) * tilde_lift(w2.word());
      // The difference is Brunnian iff the faces of both sides agree,
      // since every d_i is a homomorphism on pure braids.
      const bool triv = pure_equal(lhs, rhs);
      bool brun = true;
      for (int i = 1; i <= n + 1 && brun; ++i)
        brun = pure_equal(face_on_aword(lhs, i), face_on_aword(rhs, i));
      trivial += triv;
      brunnian += brun;
      std::cout << "n=" << n << " trivial=" << triv << " brunnian=" << brun << '\n';
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "n=" << n << " skipped: " << e.what() << '\n';
    }
  }
  std::cout << "samples=" << samples << " brunnian_difference=" << brunnian
            << " trivial_difference=" << trivial << " skipped=" << failed << '\n';
  return 0;
}
