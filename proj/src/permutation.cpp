#include "parafact/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "parafact/errors.hpp"

namespace parafact {

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int permutation_order(const Permutation& p) {
  long long ord = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out << ", ";
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = identity_permutation(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',') {
        ++i;
        skip_ws();
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point number in cycle notation");
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) {
        throw ParseError("cycle point " + std::to_string(v) + " outside 1.." +
                         std::to_string(degree));
      }
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    skip_ws();
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (p[from] != from) throw ParseError("point repeated in cycle notation");
      p[from] = to;
    }
  }
  if (!is_permutation(p)) throw ParseError("cycles do not define a permutation");
  return p;
}

Permutation eval_word(const PermutationMap& m, const Word& w) {
  Permutation p = identity_permutation(m.degree);
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= static_cast<int>(m.images.size())) {
      throw ParseError("letter refers to generator index " + std::to_string(l.gen) +
                       " with no image");
    }
    p = compose(p, l.sign > 0 ? m.images[l.gen] : inverse(m.images[l.gen]));
  }
  return p;
}

bool verify_images(const Presentation& p, const PermutationMap& m) {
  if (m.images.size() != p.generators.size()) {
    throw ParseError("image count does not match generator count");
  }
  for (const Permutation& im : m.images) {
    if (static_cast<int>(im.size()) != m.degree || !is_permutation(im)) {
      throw ParseError("images act on mismatched point sets");
    }
  }
  const Permutation id = identity_permutation(m.degree);
  for (const Word& r : p.relators) {
    if (eval_word(m, r) != id) return false;
  }
  return true;
}

std::size_t group_order_via_closure(const PermutationMap& m, std::size_t bound) {
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  seen.insert(identity_permutation(m.degree));
  frontier.push_back(identity_permutation(m.degree));
  while (!frontier.empty()) {
    const Permutation p = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : m.images) {
      Permutation q = compose(p, g);
      if (seen.insert(q).second) {
        if (seen.size() > bound) {
          throw LimitExceeded("permutation closure exceeds bound of " +
                                  std::to_string(bound),
                              seen.size());
        }
        frontier.push_back(std::move(q));
      }
    }
  }
  return seen.size();
}

}  // namespace parafact
