#include <random>

#include "doctest.h"
#include "parafact/word.hpp"

using namespace parafact;

namespace {

Word random_word(std::mt19937& rng, int ngens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, ngens - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.push_back({gen(rng), sgn(rng) ? +1 : -1});
  return w;
}

}  // namespace

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
  const Word w{{0, +1}, {0, -1}, {1, +1}};
  CHECK(free_reduce(w) == Word{{1, +1}});
}

TEST_CASE("free_reduce of the empty word is empty") {
  CHECK(free_reduce({}).empty());
}

TEST_CASE("free_reduce exposes inner cancellations only") {
  // t1 t2 t2^-1 t1 -> t1 t1
  const Word w{{0, +1}, {1, +1}, {1, -1}, {0, +1}};
  CHECK(free_reduce(w) == Word{{0, +1}, {0, +1}});
}

TEST_CASE("free_reduce is idempotent and length-nonincreasing") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 4, 30);
    const Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("relation_length on braid-style pairs") {
  const Word u{{0, +1}, {1, +1}, {0, +1}};
  const Word v{{1, +1}, {0, +1}, {1, +1}};
  CHECK(relation_length(u, v) == 6);
}

TEST_CASE("relation_length against the empty word") {
  CHECK(relation_length(Word{{0, +1}}, {}) == 1);
}

TEST_CASE("relation_length on cycle-style pairs") {
  const Word u{{0, +1}, {1, +1}, {2, +1}, {0, +1}};
  const Word v{{1, +1}, {2, +1}, {0, +1}, {1, +1}};
  CHECK(relation_length(u, v) == 8);
}

TEST_CASE("relation_length is symmetric") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_word(rng, 3, 12);
    const Word v = random_word(rng, 3, 12);
    CHECK(relation_length(u, v) == relation_length(v, u));
  }
}

TEST_CASE("a word cancels against its inverse") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 4, 15);
    CHECK(inverse(inverse(w)) == w);
    Word ww = w;
    const Word wi = inverse(w);
    ww.insert(ww.end(), wi.begin(), wi.end());
    CHECK(free_reduce(ww).empty());
  }
}
