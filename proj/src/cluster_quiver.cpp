#include "parafact/cluster_quiver.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "parafact/errors.hpp"

namespace parafact {

namespace {

Word braid_relator(int a, int b) {
  // t_a t_b t_a = t_b t_a t_b as the relator u v^-1
  return {Letter{a, +1}, Letter{b, +1}, Letter{a, +1},
          Letter{b, -1}, Letter{a, -1}, Letter{b, -1}};
}

Word commutation_relator(int a, int b) {
  // (t_a t_b)^2 = e
  return {Letter{a, +1}, Letter{b, +1}, Letter{a, +1}, Letter{b, +1}};
}

Word cycle_word(int a, int b, int c) {
  return {Letter{a, +1}, Letter{b, +1}, Letter{c, +1}, Letter{a, +1}};
}

std::string vertex_list(const std::vector<int>& vs) {
  std::string out;
  for (const int v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  Quiver q;
  bool have_vertices = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string extra;
    if (key == "vertices:") {
      if (have_vertices) throw ParseError("duplicate vertices: line", line_no, 1);
      if (!(ls >> q.vertices) || q.vertices <= 0 || (ls >> extra)) {
        throw ParseError("vertices: needs a single positive count", line_no, 1);
      }
      have_vertices = true;
    } else if (key == "arrow:") {
      if (!have_vertices) throw ParseError("arrow: before vertices:", line_no, 1);
      int i = 0, j = 0;
      if (!(ls >> i >> j) || (ls >> extra)) {
        throw ParseError("arrow: needs exactly two vertex ids", line_no, 1);
      }
      if (i < 1 || i > q.vertices || j < 1 || j > q.vertices) {
        throw ParseError("arrow endpoint outside 1.." + std::to_string(q.vertices),
                         line_no, 1);
      }
      q.arrows.emplace_back(i - 1, j - 1);
    } else {
      throw ParseError("expected 'vertices:' or 'arrow:', got '" + key + "'",
                       line_no, 1);
    }
  }
  if (!have_vertices) throw ParseError("no vertices: line", line_no, 1);
  return q;
}

Presentation quiver_to_presentation(const Quiver& q) {
  const int n = q.vertices;
  std::set<std::pair<int, int>> arrow_set;
  for (const auto& [i, j] : q.arrows) {
    if (i == j) throw UnsupportedQuiver("loop at vertex " + std::to_string(i + 1));
    if (arrow_set.count({j, i})) {
      throw UnsupportedQuiver("2-cycle between vertices " + std::to_string(i + 1) +
                              " and " + std::to_string(j + 1));
    }
    if (!arrow_set.insert({i, j}).second) {
      throw UnsupportedQuiver("parallel arrows between vertices " +
                              std::to_string(i + 1) + " and " + std::to_string(j + 1));
    }
  }

  // Undirected components, each required to be a path or an oriented
  // 3-cycle.
  std::vector<std::vector<int>> adj(n);
  std::vector<int> outdeg(n, 0), indeg(n, 0);
  for (const auto& [i, j] : arrow_set) {
    adj[i].push_back(j);
    adj[j].push_back(i);
    ++outdeg[i];
    ++indeg[j];
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> components;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> members{v};
    comp[v] = static_cast<int>(components.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const int u : adj[members[head]]) {
        if (comp[u] < 0) {
          comp[u] = comp[v];
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }

  std::vector<std::array<int, 3>> cycles;  // (i, j, k) following the arrows
  for (const auto& members : components) {
    std::size_t edges = 0;
    int max_deg = 0;
    for (const int v : members) {
      edges += adj[v].size();
      max_deg = std::max(max_deg, static_cast<int>(adj[v].size()));
    }
    edges /= 2;
    if (edges + 1 == members.size() && max_deg <= 2) continue;  // path or vertex
    if (members.size() == 3 && edges == 3) {
      const bool oriented = std::all_of(members.begin(), members.end(), [&](int v) {
        return outdeg[v] == 1 && indeg[v] == 1;
      });
      if (!oriented) {
        throw UnsupportedQuiver("triangle on vertices " + vertex_list(members) +
                                " is not an oriented 3-cycle");
      }
      const int i = members[0];
      const int j = *std::find_if(adj[i].begin(), adj[i].end(), [&](int u) {
        return arrow_set.count({i, u}) > 0;
      });
      const int k = members[0] + members[1] + members[2] - i - j;
      cycles.push_back({i, j, k});
      continue;
    }
    throw UnsupportedQuiver("component on vertices " + vertex_list(members) +
                            " is not a path or an oriented 3-cycle");
  }

  Presentation p;
  for (int v = 0; v < n; ++v) {
    p.generators.push_back({"t" + std::to_string(v + 1), v});
  }
  for (int v = 0; v < n; ++v) {
    p.relators.push_back({Letter{v, +1}, Letter{v, +1}});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (arrow_set.count({a, b}) || arrow_set.count({b, a})) {
        p.relators.push_back(braid_relator(a, b));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!arrow_set.count({a, b}) && !arrow_set.count({b, a})) {
        p.relators.push_back(commutation_relator(a, b));
      }
    }
  }
  for (const auto& [i, j, k] : cycles) {
    const Word w1 = cycle_word(i, j, k);
    const Word w2 = cycle_word(j, k, i);
    const Word w3 = cycle_word(k, i, j);
    Word r1 = w1;
    const Word w2i = inverse(w2);
    r1.insert(r1.end(), w2i.begin(), w2i.end());
    Word r2 = w2;
    const Word w3i = inverse(w3);
    r2.insert(r2.end(), w3i.begin(), w3i.end());
    p.relators.push_back(free_reduce(r1));
    p.relators.push_back(free_reduce(r2));
  }
  check_conditions(p);
  return p;
}

Presentation a3_cluster_presentation() {
  Quiver triangle;
  triangle.vertices = 3;
  triangle.arrows = {{0, 1}, {1, 2}, {2, 0}};
  return quiver_to_presentation(triangle);
}

PermutationMap pi_map() {
  PermutationMap m;
  m.degree = 4;
  m.images = {
      {1, 0, 2, 3},  // (1, 2)
      {0, 2, 1, 3},  // (2, 3)
      {0, 3, 2, 1},  // (2, 4)
  };
  return m;
}

bool derived_relation_check(const CayleyGraph& g) {
  if (g.ngens() != 3) {
    throw std::invalid_argument("derived relation check expects three generators");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        if (i == j || j == k || i == k) continue;
        const Word lhs{Letter{i, +1}, Letter{j, +1}, Letter{i, +1}, Letter{k, +1}};
        const Word rhs{Letter{k, +1}, Letter{i, +1}, Letter{j, +1}, Letter{i, +1}};
        if (g.eval_word(lhs) != g.eval_word(rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace parafact
