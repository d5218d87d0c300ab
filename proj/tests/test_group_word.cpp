#include <doctest.h>

#include <random>

#include "cohen/errors.hpp"
#include "cohen/group_word.hpp"
#include "oracle.hpp"

using namespace cohen;

namespace {

const Alphabet X = Alphabet::free(4);
const Alphabet Y = Alphabet::indexed('y', 4);

GroupWord x(int i, std::int64_t e = 1) { return GroupWord::generator(X, {i, 0}, e); }
GroupWord a(int s, int t, int n, std::int64_t e = 1) {
  return GroupWord::generator(Alphabet::pure(n), {s, t}, e);
}

// Library word as signed single letters (generator id + 1).
oracle::Word flatten(const GroupWord& w) {
  oracle::Word out;
  for (const auto& s : w.syllables())
    for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k)
      out.push_back(s.exp > 0 ? s.gen + 1 : -(s.gen + 1));
  return out;
}

GroupWord random_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> g(1, 4), e(-2, 2);
  std::vector<RawLetter> raw;
  for (int k = 0; k < len; ++k) raw.push_back({X, {g(rng), 0}, e(rng)});
  return reduce(raw);
}

}  // namespace

TEST_CASE("reduce: cancellation and merging") {
  std::vector<RawLetter> r1{{X, {1, 0}, 1}, {X, {1, 0}, -1}};
  CHECK(reduce(r1).empty());
  std::vector<RawLetter> r2{{X, {1, 0}, 2}, {X, {1, 0}, 3}};
  CHECK(reduce(r2) == x(1, 5));
  std::vector<RawLetter> r3{{X, {1, 0}, 1}, {X, {2, 0}, 1}, {X, {2, 0}, -1}, {X, {1, 0}, 1}};
  CHECK(reduce(r3) == x(1, 2));
  std::vector<RawLetter> mixed{{X, {1, 0}, 1}, {Y, {1, 0}, 1}};
  CHECK_THROWS_AS(reduce(mixed), AlphabetMismatch);
}

TEST_CASE("group operations on small words") {
  const GroupWord w = x(1) * x(2, -3) * x(4);
  CHECK(commutator(w, w).empty());
  CHECK(conjugate(x(1), x(2)) == x(2, -1) * x(1) * x(2));
  CHECK(multiply(x(1) * x(2), x(2, -1) * x(1)) == x(1, 2));
  CHECK(commutator(x(1), x(2)).to_string() == "x1' x2' x1 x2");
  CHECK(power(x(1) * x(2), 3).to_string() == "x1 x2 x1 x2 x1 x2");
  CHECK(power(x(1) * x(2), -1) == invert(x(1) * x(2)));
  CHECK(power(x(3), 0).empty());
  CHECK_THROWS_AS(multiply(x(1), GroupWord::generator(Y, {1, 0})), AlphabetMismatch);
}

TEST_CASE("left-normed iterated commutator") {
  std::vector<GroupWord> e{x(1), x(2), x(3)};
  CHECK(commutator(e) == commutator(commutator(x(1), x(2)), x(3)));
  std::vector<GroupWord> one{x(2)};
  CHECK(commutator(one) == x(2));
}

TEST_CASE("substitute: renaming, index shift, identity") {
  const GroupWord w = x(1) * x(2, -1);
  SymbolMap rename{{{1, 0}, GroupWord::generator(Y, {1, 0})},
                   {{2, 0}, GroupWord::generator(Y, {2, 0})}};
  CHECK(substitute(w, Y, rename).to_string() == "y1 y2'");

  const GroupWord c = commutator(a(1, 3, 3), a(2, 3, 3));
  const Alphabet P4 = Alphabet::pure(4);
  auto shifted = substitute(c, P4, [&](GenSym g) {
    return GroupWord::generator(P4, {g.first + 1, 4});
  });
  CHECK(shifted == commutator(a(2, 4, 4), a(3, 4, 4)));

  auto same = substitute(c, Alphabet::pure(3), [&](GenSym g) {
    return GroupWord::generator(Alphabet::pure(3), g);
  });
  CHECK(same == c);

  SymbolMap partial{{{1, 0}, x(1)}};
  CHECK_THROWS_AS(substitute(w, X, partial), PreconditionError);
}

TEST_CASE("abelianize") {
  CHECK(abelianize(commutator(a(1, 3, 3), a(2, 3, 3))) == std::vector<std::int64_t>{0, 0, 0});
  const auto v = abelianize(a(1, 3, 3, 2) * a(2, 3, 3, -1));
  CHECK(v[pair_id(1, 3)] == 2);
  CHECK(v[pair_id(2, 3)] == -1);
  CHECK(v[pair_id(1, 2)] == 0);
  CHECK(abelianize(GroupWord(X)) == std::vector<std::int64_t>(4, 0));
}

TEST_CASE("pair ids do not depend on the rank") {
  for (int n = 2; n <= 7; ++n) {
    const Alphabet p = Alphabet::pure(n);
    CHECK(p.size() == n * (n - 1) / 2);
    for (int t = 2; t <= n; ++t)
      for (int s = 1; s < t; ++s) {
        CHECK(p.id_of({s, t}) == pair_id(s, t));
        CHECK(p.sym_of(pair_id(s, t)) == GenSym{s, t});
      }
  }
  CHECK_THROWS_AS(Alphabet::pure(3).id_of({2, 2}), IndexError);
  CHECK_THROWS_AS(Alphabet::pure(3).id_of({1, 4}), IndexError);
}

TEST_CASE("randomized laws against the stack reducer") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> g(1, 4), e(-2, 2), len(0, 100);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<RawLetter> raw;
    oracle::Word flat;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) {
      const int gen = g(rng), ex = e(rng);
      raw.push_back({X, {gen, 0}, ex});
      for (int r = 0; r < std::abs(ex); ++r) flat.push_back(ex > 0 ? gen : -gen);
    }
    const GroupWord w = reduce(raw);
    CHECK(flatten(w) == oracle::reduce(flat));
    // Idempotence: reducing the letters of a reduced word changes nothing.
    std::vector<RawLetter> again;
    for (const auto& s : w.syllables()) again.push_back({X, X.sym_of(s.gen), s.exp});
    CHECK(reduce(again) == w);
    CHECK((w * invert(w)).empty());
    CHECK(w.length() <= static_cast<std::int64_t>(flat.size()));
  }
}

TEST_CASE("randomized substitution and abelianization laws") {
  std::mt19937 rng(12);
  const Alphabet P = Alphabet::pure(4);
  auto image = [&](GenSym g) {
    return GroupWord::generator(P, {g.first == 4 ? 2 : g.first, g.first == 4 ? 3 : 4}) *
           GroupWord::generator(P, {1, 4}, -g.first);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const GroupWord u = random_word(rng, 20), v = random_word(rng, 20);
    CHECK(substitute(u * v, P, image) == substitute(u, P, image) * substitute(v, P, image));
    CHECK(abelianize(commutator(u, v)) == std::vector<std::int64_t>(4, 0));
    auto au = abelianize(u), av = abelianize(v), auv = abelianize(u * v);
    for (std::size_t k = 0; k < 4; ++k) CHECK(auv[k] == au[k] + av[k]);
  }
}

TEST_CASE("printing") {
  CHECK(GroupWord(X).to_string() == "e");
  CHECK((x(1, 2) * x(3, -1) * x(2, -4)).to_string() == "x1^2 x3' x2^-4");
  CHECK(a(1, 3, 3, 2).to_string() == "a1.3^2");
}
