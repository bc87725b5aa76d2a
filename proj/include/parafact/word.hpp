#ifndef PARAFACT_WORD_HPP
#define PARAFACT_WORD_HPP

#include <cstddef>
#include <vector>

namespace parafact {

// One letter of a word: a generator index with a sign. Sign -1 denotes the
// inverse letter x^-1.
struct Letter {
  int gen = 0;
  int sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Words are plain letter sequences over X u X^-1; all syntactic word
// operations live here, group semantics live in CayleyGraph.
using Word = std::vector<Letter>;

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

Word inverse(const Word& w);

// True iff no adjacent pair cancels.
bool is_freely_reduced(const Word& w);

// The unique freely reduced form; idempotent.
Word free_reduce(const Word& w);

// Length of free_reduce(u . v^-1): the length of the relation u = v.
std::size_t relation_length(const Word& u, const Word& v);

}  // namespace parafact

#endif
