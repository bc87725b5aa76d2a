#ifndef PARAFACT_COSET_TABLE_HPP
#define PARAFACT_COSET_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "parafact/permutation.hpp"
#include "parafact/presentation.hpp"
#include "parafact/word.hpp"

namespace parafact {

struct EnumerationLimits {
  std::size_t max_cosets = 100'000;
  std::size_t max_steps = 10'000'000;
};

// A complete, collapsed, BFS-standardised coset table. Row 0 is the
// subgroup; with the trivial subgroup the table is the regular
// representation. When the presentation satisfies the involution
// condition, each generator's column doubles as its inverse's column;
// otherwise generator and inverse columns interleave as
// [g0, g0^-1, g1, g1^-1, ...].
class CosetTable {
public:
  CosetTable(int ngens, bool involutions_aliased, std::size_t rows,
             std::vector<int> data, bool regular, std::size_t cosets_allocated);

  std::size_t rows() const { return rows_; }
  int ngens() const { return ngens_; }
  bool involutions_aliased() const { return aliased_; }
  int num_cols() const { return aliased_ ? ngens_ : 2 * ngens_; }

  int column(Letter l) const {
    return aliased_ ? l.gen : 2 * l.gen + (l.sign < 0 ? 1 : 0);
  }
  int inverse_column(int col) const { return aliased_ ? col : (col ^ 1); }

  int act(int row, int col) const { return data_[row * num_cols() + col]; }
  int act(int row, Letter l) const { return act(row, column(l)); }
  int trace(int row, const Word& w) const;

  // True iff the table was enumerated over the trivial subgroup.
  bool regular() const { return regular_; }
  std::size_t cosets_allocated() const { return allocated_; }

  // One row per coset, 0-based entries, columns in column order.
  std::string dump() const;

private:
  int ngens_;
  bool aliased_;
  std::size_t rows_;
  std::vector<int> data_;
  bool regular_;
  std::size_t allocated_;
};

// HLT-style enumeration of the cosets of <subgroup> in the presented
// group, with immediate coincidence handling. Deterministic; throws
// LimitExceeded when either limit is hit.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup = {},
                        const EnumerationLimits& limits = {});

// The right action of each generator on the table rows.
PermutationMap permutation_images(const CosetTable& t);

}  // namespace parafact

#endif
