#ifndef PARAFACT_CAYLEY_GRAPH_HPP
#define PARAFACT_CAYLEY_GRAPH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "parafact/coset_table.hpp"
#include "parafact/permutation.hpp"
#include "parafact/presentation.hpp"
#include "parafact/word.hpp"

namespace parafact {

enum class Side { left, right };

// The group realised on its regular representation: element 0 is the
// identity, lengths are BFS distances from it, and every element carries
// the lexicographically least geodesic word (letters ordered by column:
// generators by index, a generator before its inverse). Immutable after
// build; all queries are pure.
class CayleyGraph {
public:
  // The table must come from a trivial-subgroup enumeration.
  static CayleyGraph build(const CosetTable& table);

  std::size_t order() const { return order_; }
  int ngens() const { return ngens_; }
  bool involutions_aliased() const { return aliased_; }
  int num_cols() const { return aliased_ ? ngens_ : 2 * ngens_; }

  int column(Letter l) const {
    return aliased_ ? l.gen : 2 * l.gen + (l.sign < 0 ? 1 : 0);
  }
  int inverse_column(int col) const { return aliased_ ? col : (col ^ 1); }
  Letter letter_of_column(int col) const {
    return aliased_ ? Letter{col, +1} : Letter{col / 2, col % 2 ? -1 : +1};
  }

  int right(int g, int col) const { return right_[col][g]; }
  int right(int g, Letter l) const { return right_[column(l)][g]; }
  int left(int g, int col) const { return left_[col][g]; }
  int left(int g, Letter l) const { return left_[column(l)][g]; }

  int length(int g) const { return length_[g]; }
  int element_inverse(int g) const { return inverse_[g]; }
  const Word& canonical_word(int g) const { return canonical_[g]; }

  int eval_word(const Word& w) const;
  int multiply(int g, int h) const;

  // Generator indices that shorten g on the given side, ascending.
  std::vector<int> descents(int g, Side side) const;

  // All geodesic words for g, in lexicographic column order. Throws
  // LimitExceeded when the set would exceed `cap`.
  std::vector<Word> reduced_expressions(int g, std::size_t cap = 10'000) const;
  unsigned long long reduced_expression_count(int g) const;

private:
  std::size_t order_ = 0;
  int ngens_ = 0;
  bool aliased_ = true;
  std::vector<std::vector<int>> right_;  // [col][id]
  std::vector<std::vector<int>> left_;   // [col][id]
  std::vector<int> length_;
  std::vector<int> inverse_;
  std::vector<Word> canonical_;
};

// Checks the sign homomorphism x -> -1: defined only under the even
// condition, it must flip parity across every edge, hit -1 somewhere,
// and give every generator order exactly 2 when the involution condition
// also holds.
struct ParityReport {
  bool even_condition = false;
  bool multiplicative = false;
  bool surjective = false;
  bool involution_condition = false;
  bool generators_order_two = false;
  std::string detail;

  bool pass() const {
    return even_condition && multiplicative && surjective &&
           (!involution_condition || generators_order_two);
  }
};

ParityReport parity_check(const CayleyGraph& g, const Presentation& p);

// Undirected DOT rendering; one node per element labelled with its
// canonical word (and its image under `annotations` in cycle notation,
// when given), one edge per {g, g.x} with the generator name as label.
// Node and edge order are fixed, so output is byte-stable.
std::string export_dot(const CayleyGraph& g, const Presentation& p,
                       const PermutationMap* annotations = nullptr);

}  // namespace parafact

#endif
