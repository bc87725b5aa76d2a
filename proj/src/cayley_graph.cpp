#include "parafact/cayley_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "parafact/errors.hpp"

namespace parafact {

CayleyGraph CayleyGraph::build(const CosetTable& table) {
  if (!table.regular()) {
    throw std::invalid_argument(
        "Cayley graph requires a trivial-subgroup (regular) coset table");
  }
  CayleyGraph g;
  g.order_ = table.rows();
  g.ngens_ = table.ngens();
  g.aliased_ = table.involutions_aliased();
  const int ncols = g.num_cols();
  const std::size_t n = g.order_;

  g.right_.assign(ncols, std::vector<int>(n));
  for (int col = 0; col < ncols; ++col) {
    for (std::size_t id = 0; id < n; ++id) {
      g.right_[col][id] = table.act(static_cast<int>(id), col);
    }
  }

  // Single-source BFS from the identity; first discovery fixes both the
  // length and the lexicographically least geodesic.
  g.length_.assign(n, -1);
  g.canonical_.assign(n, Word{});
  std::vector<int> bfs_order;
  bfs_order.reserve(n);
  bfs_order.push_back(0);
  g.length_[0] = 0;
  std::vector<std::pair<int, int>> via(n, {-1, -1});  // (parent, col)
  for (std::size_t head = 0; head < bfs_order.size(); ++head) {
    const int h = bfs_order[head];
    for (int col = 0; col < ncols; ++col) {
      const int e = g.right_[col][h];
      if (g.length_[e] < 0) {
        g.length_[e] = g.length_[h] + 1;
        via[e] = {h, col};
        bfs_order.push_back(e);
      }
    }
  }
  if (bfs_order.size() != n) {
    throw std::logic_error("coset table is not transitive");
  }
  for (const int id : bfs_order) {
    if (id == 0) continue;
    Word w = g.canonical_[via[id].first];
    w.push_back(g.letter_of_column(via[id].second));
    g.canonical_[id] = std::move(w);
  }

  // Left actions propagate along the BFS tree: x.(h.y) = (x.h).y.
  g.left_.assign(ncols, std::vector<int>(n));
  for (int col = 0; col < ncols; ++col) {
    g.left_[col][0] = g.right_[col][0];
    for (const int id : bfs_order) {
      if (id == 0) continue;
      const auto [parent, pcol] = via[id];
      g.left_[col][id] = g.right_[pcol][g.left_[col][parent]];
    }
  }

  g.inverse_.assign(n, -1);
  for (std::size_t id = 0; id < n; ++id) {
    g.inverse_[id] = g.eval_word(inverse(g.canonical_[id]));
  }
  return g;
}

int CayleyGraph::eval_word(const Word& w) const {
  int id = 0;
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= ngens_) {
      throw std::invalid_argument("word contains an invalid generator index");
    }
    id = right(id, l);
  }
  return id;
}

int CayleyGraph::multiply(int g, int h) const {
  for (const Letter& l : canonical_[h]) g = right(g, l);
  return g;
}

std::vector<int> CayleyGraph::descents(int g, Side side) const {
  std::vector<int> out;
  for (int x = 0; x < ngens_; ++x) {
    const Letter l{x, +1};
    const int image = side == Side::right ? right(g, l) : left(g, l);
    if (length_[image] < length_[g]) out.push_back(x);
  }
  return out;
}

std::vector<Word> CayleyGraph::reduced_expressions(int g, std::size_t cap) const {
  std::map<int, std::vector<Word>> memo;
  auto enumerate = [&](auto&& self, int id) -> const std::vector<Word>& {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    std::vector<Word> words;
    if (id == 0) {
      words.push_back({});
    } else {
      for (int col = 0; col < num_cols(); ++col) {
        const int pred = right(id, inverse_column(col));
        if (length_[pred] != length_[id] - 1) continue;
        for (const Word& prefix : self(self, pred)) {
          Word w = prefix;
          w.push_back(letter_of_column(col));
          words.push_back(std::move(w));
          if (words.size() > cap) {
            throw LimitExceeded("reduced-expression set exceeds cap of " +
                                    std::to_string(cap),
                                words.size());
          }
        }
      }
    }
    return memo.emplace(id, std::move(words)).first->second;
  };
  std::vector<Word> out = enumerate(enumerate, g);
  std::sort(out.begin(), out.end(), [this](const Word& a, const Word& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [this](Letter x, Letter y) { return column(x) < column(y); });
  });
  return out;
}

unsigned long long CayleyGraph::reduced_expression_count(int g) const {
  std::vector<int> ids(order_);
  for (std::size_t i = 0; i < order_; ++i) ids[i] = static_cast<int>(i);
  std::sort(ids.begin(), ids.end(),
            [this](int a, int b) { return length_[a] < length_[b]; });
  std::vector<unsigned long long> count(order_, 0);
  count[0] = 1;
  for (const int id : ids) {
    if (id == 0) continue;
    unsigned long long total = 0;
    for (int col = 0; col < num_cols(); ++col) {
      const int pred = right(id, inverse_column(col));
      if (length_[pred] == length_[id] - 1) total += count[pred];
    }
    count[id] = total;
  }
  return count[g];
}

ParityReport parity_check(const CayleyGraph& g, const Presentation& p) {
  ParityReport r;
  r.even_condition = p.even_condition;
  r.involution_condition = p.involution_condition;
  if (!r.even_condition) {
    for (const Word& rel : p.relators) {
      if (rel.size() % 2 != 0) {
        r.detail = "sign homomorphism undefined: relator '" +
                   word_to_string(p, rel) + "' has odd length " +
                   std::to_string(rel.size());
        break;
      }
    }
    return r;
  }

  r.multiplicative = true;
  for (std::size_t id = 0; id < g.order() && r.multiplicative; ++id) {
    for (int col = 0; col < g.num_cols(); ++col) {
      const int e = g.right(static_cast<int>(id), col);
      if ((g.length(static_cast<int>(id)) + g.length(e)) % 2 != 1) {
        r.multiplicative = false;
        r.detail = "edge " + std::to_string(id) + " -> " + std::to_string(e) +
                   " does not flip parity";
        break;
      }
    }
  }

  for (std::size_t id = 0; id < g.order(); ++id) {
    if (g.length(static_cast<int>(id)) % 2 == 1) {
      r.surjective = true;
      break;
    }
  }
  if (!r.surjective && r.detail.empty()) {
    r.detail = "no element of odd length: sign homomorphism not surjective";
  }

  if (r.involution_condition) {
    r.generators_order_two = true;
    for (int x = 0; x < g.ngens(); ++x) {
      const int im = g.eval_word({Letter{x, +1}});
      const int sq = g.eval_word({Letter{x, +1}, Letter{x, +1}});
      if (im == 0 || sq != 0) {
        r.generators_order_two = false;
        r.detail = "generator " + p.generators[x].name + " does not have order 2";
        break;
      }
    }
  }
  return r;
}

std::string export_dot(const CayleyGraph& g, const Presentation& p,
                       const PermutationMap* annotations) {
  std::ostringstream out;
  out << "graph cayley {\n";
  for (std::size_t id = 0; id < g.order(); ++id) {
    out << "  n" << id << " [label=\""
        << word_to_string(p, g.canonical_word(static_cast<int>(id)));
    if (annotations != nullptr) {
      out << "\\n"
          << cycle_notation(
                 eval_word(*annotations, g.canonical_word(static_cast<int>(id))));
    }
    out << "\"];\n";
  }
  std::set<std::tuple<int, int, int>> edges;  // (min id, max id, generator)
  for (std::size_t id = 0; id < g.order(); ++id) {
    for (int x = 0; x < g.ngens(); ++x) {
      const int e = g.right(static_cast<int>(id), Letter{x, +1});
      edges.emplace(std::min<int>(id, e), std::max<int>(id, e), x);
    }
  }
  for (const auto& [a, b, x] : edges) {
    out << "  n" << a << " -- n" << b << " [label=\"" << p.generators[x].name
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace parafact
