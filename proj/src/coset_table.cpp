#include "parafact/coset_table.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "parafact/errors.hpp"

namespace parafact {

namespace {

constexpr int kUndef = -1;

// Working state of the enumeration. Rows are never deleted; a coincidence
// folds the higher-numbered row into the lower one through a union-find
// forest, and reads resolve entries through find() lazily.
struct Enumerator {
  int ncols;
  bool aliased;
  EnumerationLimits limits;

  std::vector<int> table;   // nrows * ncols, kUndef where unset
  std::vector<int> parent;  // union-find; parent[c] == c iff c is live
  std::deque<int> pending;  // dead rows whose entries await folding
  std::size_t steps = 0;

  explicit Enumerator(int ncols_, bool aliased_, EnumerationLimits lim)
      : ncols(ncols_), aliased(aliased_), limits(lim) {
    new_coset();
  }

  std::size_t allocated() const { return parent.size(); }
  int inv_col(int col) const { return aliased ? col : (col ^ 1); }

  int find(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  int raw(int c, int col) const { return table[std::size_t(c) * ncols + col]; }
  void set_raw(int c, int col, int v) { table[std::size_t(c) * ncols + col] = v; }

  // Entry of the live row of c, resolved to a live row; kUndef if unset.
  int lookup(int c, int col) {
    const int e = raw(find(c), col);
    return e == kUndef ? kUndef : find(e);
  }

  int new_coset() {
    if (allocated() >= limits.max_cosets) {
      throw LimitExceeded("coset limit of " + std::to_string(limits.max_cosets) +
                              " exceeded (group may be infinite or limits too small)",
                          allocated());
    }
    const int c = static_cast<int>(allocated());
    parent.push_back(c);
    table.resize(table.size() + ncols, kUndef);
    return c;
  }

  void count_step() {
    if (++steps > limits.max_steps) {
      throw LimitExceeded("step limit of " + std::to_string(limits.max_steps) +
                              " exceeded (group may be infinite or limits too small)",
                          allocated());
    }
  }

  // Records that a and b name the same coset. The smaller index survives.
  void enqueue_union(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    pending.push_back(b);
  }

  // Folds every queued dead row into its representative, transferring
  // edges and queueing any secondary coincidences they expose.
  void process_pending() {
    while (!pending.empty()) {
      const int d = pending.front();
      pending.pop_front();
      for (int col = 0; col < ncols; ++col) {
        const int e = raw(d, col);
        if (e == kUndef) continue;
        set_raw(d, col, kUndef);
        const int live_e = find(e);
        const int rep = find(d);
        const int cur = raw(rep, col);
        if (cur != kUndef) {
          enqueue_union(cur, live_e);
        } else {
          set_raw(rep, col, live_e);
          const int ic = inv_col(col);
          const int mirror = raw(live_e, ic);
          if (mirror != kUndef) {
            enqueue_union(mirror, rep);
          } else {
            set_raw(live_e, ic, rep);
          }
        }
      }
    }
  }

  void coincide(int a, int b) {
    enqueue_union(a, b);
    process_pending();
  }

  // Records c.col = d together with its mirror, merging on conflict.
  void deduce(int c, int col, int d) {
    c = find(c);
    d = find(d);
    const int e = raw(c, col);
    if (e != kUndef) {
      coincide(e, d);
      return;
    }
    set_raw(c, col, d);
    const int ic = inv_col(col);
    const int mirror = raw(d, ic);
    if (mirror != kUndef) {
      coincide(mirror, c);
    } else {
      set_raw(d, ic, c);
    }
  }

  void define(int c, int col) {
    c = find(c);
    const int d = new_coset();
    set_raw(c, col, d);
    set_raw(d, inv_col(col), c);
  }

  // Traces the column word from c both ways, defining new cosets across
  // any gap wider than one entry and closing the final entry as a
  // deduction or coincidence. On return the relator trace from c is
  // closed (c itself may have died in the process).
  void scan_and_fill(int c, const std::vector<int>& cols) {
    int f = find(c);
    int b = f;
    int i = 0;
    int j = static_cast<int>(cols.size()) - 1;
    while (true) {
      while (i <= j) {
        const int e = lookup(f, cols[i]);
        if (e == kUndef) break;
        f = e;
        ++i;
        count_step();
      }
      if (i > j) {
        if (f != b) coincide(f, b);
        return;
      }
      while (j >= i) {
        const int e = lookup(b, inv_col(cols[j]));
        if (e == kUndef) break;
        b = e;
        --j;
        count_step();
      }
      if (j < i) {  // scans overlapped
        coincide(f, b);
        return;
      }
      if (i == j) {  // exactly one gap
        deduce(f, cols[i], b);
        return;
      }
      define(f, cols[i]);
      count_step();
    }
  }
};

std::vector<int> word_to_columns(const CosetTable& shape, const Word& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (const Letter& l : w) cols.push_back(shape.column(l));
  return cols;
}

}  // namespace

CosetTable::CosetTable(int ngens, bool involutions_aliased, std::size_t rows,
                       std::vector<int> data, bool regular,
                       std::size_t cosets_allocated)
    : ngens_(ngens),
      aliased_(involutions_aliased),
      rows_(rows),
      data_(std::move(data)),
      regular_(regular),
      allocated_(cosets_allocated) {}

int CosetTable::trace(int row, const Word& w) const {
  for (const Letter& l : w) row = act(row, l);
  return row;
}

std::string CosetTable::dump() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << r << ':';
    for (int c = 0; c < num_cols(); ++c) out << ' ' << act(static_cast<int>(r), c);
    out << '\n';
  }
  return out.str();
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        const EnumerationLimits& limits) {
  if (limits.max_cosets == 0 || limits.max_steps == 0) {
    throw std::invalid_argument("enumeration limits must be positive");
  }
  const int ngens = static_cast<int>(p.num_generators());
  const bool aliased = p.involution_condition;
  const int ncols = aliased ? ngens : 2 * ngens;

  // Column words are precomputed once; the dummy table provides the
  // letter-to-column mapping.
  const CosetTable shape(ngens, aliased, 0, {}, false, 0);
  std::vector<std::vector<int>> relator_cols;
  relator_cols.reserve(p.relators.size());
  for (const Word& r : p.relators) {
    p.validate_word(r);
    relator_cols.push_back(word_to_columns(shape, r));
  }
  std::vector<std::vector<int>> subgroup_cols;
  subgroup_cols.reserve(subgroup.size());
  for (const Word& w : subgroup) {
    p.validate_word(w);
    subgroup_cols.push_back(word_to_columns(shape, w));
  }

  Enumerator en(ncols, aliased, limits);
  for (const auto& cols : subgroup_cols) en.scan_and_fill(0, cols);

  for (int c = 0; c < static_cast<int>(en.allocated()); ++c) {
    if (en.find(c) != c) continue;
    for (const auto& cols : relator_cols) {
      en.scan_and_fill(c, cols);
      if (en.find(c) != c) break;  // c died; its representative covers it
    }
    if (en.find(c) != c) continue;
    for (int col = 0; col < ncols; ++col) {
      if (en.lookup(c, col) == kUndef) en.define(c, col);
    }
  }

  // BFS renumbering from the subgroup row, columns in order.
  std::vector<int> order;  // live reps in discovery order
  std::vector<int> new_index(en.allocated(), kUndef);
  order.push_back(en.find(0));
  new_index[en.find(0)] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int col = 0; col < ncols; ++col) {
      const int e = en.lookup(order[head], col);
      if (e != kUndef && new_index[e] == kUndef) {
        new_index[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }
  }

  std::size_t live = 0;
  for (int c = 0; c < static_cast<int>(en.allocated()); ++c) {
    if (en.find(c) == c) ++live;
  }
  if (live != order.size()) {
    throw std::logic_error("enumeration produced an intransitive table");
  }

  std::vector<int> data(order.size() * ncols, kUndef);
  for (std::size_t r = 0; r < order.size(); ++r) {
    for (int col = 0; col < ncols; ++col) {
      const int e = en.lookup(order[r], col);
      if (e == kUndef) {
        throw std::logic_error("enumeration left an undefined entry");
      }
      data[r * ncols + col] = new_index[e];
    }
  }

  return CosetTable(ngens, aliased, order.size(), std::move(data),
                    subgroup.empty(), en.allocated());
}

PermutationMap permutation_images(const CosetTable& t) {
  PermutationMap m;
  m.degree = static_cast<int>(t.rows());
  m.images.reserve(t.ngens());
  for (int g = 0; g < t.ngens(); ++g) {
    Permutation im(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
      im[r] = t.act(static_cast<int>(r), Letter{g, +1});
    }
    m.images.push_back(std::move(im));
  }
  return m;
}

}  // namespace parafact
