#ifndef PARAFACT_PERMUTATION_HPP
#define PARAFACT_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "parafact/presentation.hpp"
#include "parafact/word.hpp"

namespace parafact {

// One-line form on 0-based points. Products compose left to right:
// compose(p, q) applies p first, then q, so coset-table images multiply
// like the group elements they represent.
using Permutation = std::vector<int>;

Permutation identity_permutation(int degree);
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);
int permutation_order(const Permutation& p);

// Cycle notation on 1-based points, fixed points omitted: "(1, 2)(3, 4)".
// The identity prints as "()".
std::string cycle_notation(const Permutation& p);

// Parses the notation above; points must lie in 1..degree.
Permutation parse_cycles(const std::string& text, int degree);

// Images of each generator under a homomorphism to a symmetric group.
struct PermutationMap {
  int degree = 0;
  std::vector<Permutation> images;  // images[i] = image of generator i
};

// Evaluates a word under the map (inverse letters use inverse images).
Permutation eval_word(const PermutationMap& m, const Word& w);

// True iff every relator of p evaluates to the identity permutation.
// Throws ParseError on mismatched degrees or image counts.
bool verify_images(const Presentation& p, const PermutationMap& m);

// Size of the permutation group generated by the images, by breadth-first
// closure. Throws LimitExceeded past `bound` elements.
std::size_t group_order_via_closure(const PermutationMap& m,
                                    std::size_t bound = 5'000'000);

}  // namespace parafact

#endif
