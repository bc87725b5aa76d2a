#ifndef PARAFACT_PRESENTATION_HPP
#define PARAFACT_PRESENTATION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parafact/word.hpp"

namespace parafact {

struct Generator {
  std::string name;
  int index = 0;
};

// A finite group presentation <X | R>. Relators are stored freely reduced
// but not cyclically reduced; a relation u = v is kept as the relator
// u v^-1. The two condition flags are syntactic:
//   involution_condition: every generator x has a relator that reduces to
//                          exactly the positive word x x;
//   even_condition: every relator has even length.
class Presentation {
public:
  std::vector<Generator> generators;
  std::vector<Word> relators;
  bool involution_condition = false;
  bool even_condition = false;

  std::size_t num_generators() const { return generators.size(); }

  // -1 when the name is unknown.
  int generator_index(std::string_view name) const;

  // Throws ParseError when a letter refers to a generator outside range.
  void validate_word(const Word& w) const;
};

// Parses the line-oriented presentation grammar:
//   # comment to end of line
//   gens: name name ...
//   rel: word [= word]*       (word = letters, letter = name or name^-1,
//                              the empty word is written `e`)
// A chained relation u1 = u2 = ... = uk yields the k-1 relators of the
// adjacent pairs. A standalone word means u = e. Condition flags are
// computed before returning.
Presentation parse_presentation(const std::string& text);

// Emits the same grammar; parse(serialize(p)) reproduces p exactly.
std::string serialize(const Presentation& p);

// Recomputes and stores the two condition flags.
std::pair<bool, bool> check_conditions(Presentation& p);

// Word <-> string in the grammar's letter syntax ("t1 t2^-1", "e").
std::string word_to_string(const Presentation& p, const Word& w);
Word parse_word(const Presentation& p, const std::string& text);

}  // namespace parafact

#endif
