#ifndef PARAFACT_PARABOLIC_HPP
#define PARAFACT_PARABOLIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parafact/cayley_graph.hpp"
#include "parafact/presentation.hpp"
#include "parafact/word.hpp"

namespace parafact {

// A subset I of the generating set, as a bitset over generator indices.
struct ParabolicSubset {
  std::uint64_t bits = 0;

  static ParabolicSubset none() { return {}; }
  static ParabolicSubset all(int ngens) {
    return {ngens >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ngens) - 1};
  }
  static ParabolicSubset of(std::initializer_list<int> xs) {
    ParabolicSubset s;
    for (int x : xs) s.add(x);
    return s;
  }

  bool contains(int x) const { return bits >> x & 1; }
  void add(int x) { bits |= std::uint64_t{1} << x; }
  int count() const { return __builtin_popcountll(bits); }

  std::vector<int> indices(int ngens) const {
    std::vector<int> out;
    for (int x = 0; x < ngens; ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
};

// Elements of the subgroup generated by I, ascending ids.
std::vector<int> subgroup_elements(const CayleyGraph& g, ParabolicSubset I);

// Elements with no descent in I on the given side, ascending ids. The
// right version is the set of elements all of whose products with I
// generators get longer; the left version mirrors it.
std::vector<int> upper_set(const CayleyGraph& g, ParabolicSubset I, Side side);

// w = a.b with a in the upper set, b in the subgroup, lengths additive.
struct Factorization {
  int a = 0;
  int b = 0;
  Word a_word;  // canonical reduced words
  Word b_word;
};

// Greedy right-descent stripping, smallest generator index first. Under
// the involution and even-length conditions this always terminates in a
// valid factorisation; otherwise it may stall outside the upper set, in
// which case it throws NoDescentButNotUpper.
Factorization factorize(const CayleyGraph& g, ParabolicSubset I, int w);

// Mirror factorisation w = b.a with b in the subgroup and a upper on the
// left, obtained by factorising the inverse.
struct LeftFactorization {
  int b = 0;
  int a = 0;
  Word b_word;
  Word a_word;
};

LeftFactorization factorize_left(const CayleyGraph& g, ParabolicSubset I, int w);

// Every additive factorisation of w, sorted by length of the a-part.
// The a-parts range over the intersection of the coset w.G_I with the
// upper set.
std::vector<Factorization> all_factorizations(const CayleyGraph& g,
                                              ParabolicSubset I, int w);

struct CosetReport {
  std::vector<int> coset;                    // w.G_I, ascending ids
  std::vector<int> min_length_elements;      // minimal-length members
  std::vector<int> intersection_with_upper;  // coset intersect upper set
};

CosetReport coset_report(const CayleyGraph& g, ParabolicSubset I, int w);

// True iff some additive factorisation exists; makes no assumptions on
// the presentation (brute force over the upper set).
bool exists_factorization(const CayleyGraph& g, ParabolicSubset I, int w);

struct ScanWitness {
  ParabolicSubset I;
  int w = 0;
  int count = 0;
};

// Exhaustive factorisation census over every subset I (binary-counting
// order) and every element. Witnesses are the (I, w) with more than one
// additive factorisation.
struct ScanReport {
  int ngens = 0;
  std::size_t pairs_checked = 0;
  std::vector<ScanWitness> witnesses;
  std::size_t existence_failures = 0;      // pairs with no factorisation
  std::size_t unique_case_violations = 0;  // |I| <= 1 or I = X with count != 1
  std::size_t nonadditive_decompositions = 0;  // diagnostic: ab = w, lengths not additive

  bool ok() const { return existence_failures == 0 && unique_case_violations == 0; }
};

ScanReport uniqueness_scan(const CayleyGraph& g);

std::string scan_to_text(const ScanReport& r, const CayleyGraph& g,
                         const Presentation& p);
std::string scan_to_json(const ScanReport& r, const CayleyGraph& g,
                         const Presentation& p);

}  // namespace parafact

#endif
