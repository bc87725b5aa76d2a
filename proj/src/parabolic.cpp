#include "parafact/parabolic.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "parafact/errors.hpp"

namespace parafact {

namespace {

std::vector<bool> subgroup_mask(const CayleyGraph& g, ParabolicSubset I) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (const int id : frontier) {
      for (int x = 0; x < g.ngens(); ++x) {
        if (!I.contains(x)) continue;
        const int e = g.right(id, Letter{x, +1});
        if (!in[e]) {
          in[e] = true;
          next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  return in;
}

bool in_upper(const CayleyGraph& g, ParabolicSubset I, int id, Side side) {
  for (int x = 0; x < g.ngens(); ++x) {
    if (!I.contains(x)) continue;
    const Letter l{x, +1};
    const int image = side == Side::right ? g.right(id, l) : g.left(id, l);
    if (g.length(image) <= g.length(id)) return false;
  }
  return true;
}

std::string subset_names(ParabolicSubset I, const Presentation& p) {
  std::string out;
  for (int x = 0; x < static_cast<int>(p.num_generators()); ++x) {
    if (!I.contains(x)) continue;
    if (!out.empty()) out += ',';
    out += p.generators[x].name;
  }
  return out.empty() ? "-" : out;
}

}  // namespace

std::vector<int> subgroup_elements(const CayleyGraph& g, ParabolicSubset I) {
  const std::vector<bool> in = subgroup_mask(g, I);
  std::vector<int> out;
  for (std::size_t id = 0; id < g.order(); ++id) {
    if (in[id]) out.push_back(static_cast<int>(id));
  }
  return out;
}

std::vector<int> upper_set(const CayleyGraph& g, ParabolicSubset I, Side side) {
  std::vector<int> out;
  for (std::size_t id = 0; id < g.order(); ++id) {
    if (in_upper(g, I, static_cast<int>(id), side)) out.push_back(static_cast<int>(id));
  }
  return out;
}

Factorization factorize(const CayleyGraph& g, ParabolicSubset I, int w) {
  int a = w;
  Word b_letters;  // built back to front
  while (true) {
    int descent = -1;
    for (int x = 0; x < g.ngens(); ++x) {
      if (!I.contains(x)) continue;
      if (g.length(g.right(a, Letter{x, +1})) < g.length(a)) {
        descent = x;
        break;
      }
    }
    if (descent < 0) break;
    a = g.right(a, Letter{descent, +1});
    b_letters.push_back(Letter{descent, +1});
  }
  if (!in_upper(g, I, a, Side::right)) {
    throw NoDescentButNotUpper(
        "greedy loop stalled outside the upper set (element " + std::to_string(a) +
        "); the presentation violates the involution or even-length condition");
  }
  Factorization f;
  f.a = a;
  f.b = g.eval_word(Word(b_letters.rbegin(), b_letters.rend()));
  f.a_word = g.canonical_word(f.a);
  f.b_word = g.canonical_word(f.b);
  return f;
}

LeftFactorization factorize_left(const CayleyGraph& g, ParabolicSubset I, int w) {
  const Factorization f = factorize(g, I, g.element_inverse(w));
  LeftFactorization lf;
  lf.b = g.element_inverse(f.b);
  lf.a = g.element_inverse(f.a);
  lf.b_word = g.canonical_word(lf.b);
  lf.a_word = g.canonical_word(lf.a);
  return lf;
}

std::vector<Factorization> all_factorizations(const CayleyGraph& g,
                                              ParabolicSubset I, int w) {
  const std::vector<bool> in_sub = subgroup_mask(g, I);
  std::vector<Factorization> out;
  for (std::size_t h = 0; h < g.order(); ++h) {
    if (!in_sub[h]) continue;
    const int a = g.multiply(w, g.element_inverse(static_cast<int>(h)));
    if (!in_upper(g, I, a, Side::right)) continue;
    if (g.length(a) + g.length(static_cast<int>(h)) != g.length(w)) continue;
    Factorization f;
    f.a = a;
    f.b = static_cast<int>(h);
    f.a_word = g.canonical_word(a);
    f.b_word = g.canonical_word(static_cast<int>(h));
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [&g](const Factorization& x, const Factorization& y) {
    if (g.length(x.a) != g.length(y.a)) return g.length(x.a) < g.length(y.a);
    return x.a < y.a;
  });
  return out;
}

CosetReport coset_report(const CayleyGraph& g, ParabolicSubset I, int w) {
  CosetReport r;
  const std::vector<bool> in_sub = subgroup_mask(g, I);
  std::vector<bool> in_coset(g.order(), false);
  for (std::size_t h = 0; h < g.order(); ++h) {
    if (in_sub[h]) in_coset[g.multiply(w, static_cast<int>(h))] = true;
  }
  int min_len = -1;
  for (std::size_t id = 0; id < g.order(); ++id) {
    if (!in_coset[id]) continue;
    r.coset.push_back(static_cast<int>(id));
    if (min_len < 0 || g.length(static_cast<int>(id)) < min_len) {
      min_len = g.length(static_cast<int>(id));
    }
  }
  for (const int id : r.coset) {
    if (g.length(id) == min_len) r.min_length_elements.push_back(id);
    if (in_upper(g, I, id, Side::right)) r.intersection_with_upper.push_back(id);
  }
  return r;
}

bool exists_factorization(const CayleyGraph& g, ParabolicSubset I, int w) {
  const std::vector<bool> in_sub = subgroup_mask(g, I);
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (!in_upper(g, I, static_cast<int>(a), Side::right)) continue;
    const int b = g.multiply(g.element_inverse(static_cast<int>(a)), w);
    if (in_sub[b] && g.length(static_cast<int>(a)) + g.length(b) == g.length(w)) {
      return true;
    }
  }
  return false;
}

ScanReport uniqueness_scan(const CayleyGraph& g) {
  if (g.ngens() > 20) {
    throw std::invalid_argument("exhaustive scan supports at most 20 generators");
  }
  ScanReport r;
  r.ngens = g.ngens();
  const std::uint64_t total = std::uint64_t{1} << g.ngens();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const ParabolicSubset I{bits};
    const std::vector<bool> in_sub = subgroup_mask(g, I);
    std::vector<bool> upper(g.order());
    for (std::size_t id = 0; id < g.order(); ++id) {
      upper[id] = in_upper(g, I, static_cast<int>(id), Side::right);
    }
    const bool unique_case = I.count() <= 1 || I == ParabolicSubset::all(g.ngens());
    for (std::size_t w = 0; w < g.order(); ++w) {
      int count = 0;
      for (std::size_t h = 0; h < g.order(); ++h) {
        if (!in_sub[h]) continue;
        const int a = g.multiply(static_cast<int>(w),
                                 g.element_inverse(static_cast<int>(h)));
        if (!upper[a]) continue;
        if (g.length(a) + g.length(static_cast<int>(h)) ==
            g.length(static_cast<int>(w))) {
          ++count;
        } else {
          ++r.nonadditive_decompositions;
        }
      }
      ++r.pairs_checked;
      if (count == 0) ++r.existence_failures;
      if (count > 1) r.witnesses.push_back({I, static_cast<int>(w), count});
      if (unique_case && count != 1) ++r.unique_case_violations;
    }
  }
  return r;
}

std::string scan_to_text(const ScanReport& r, const CayleyGraph& g,
                         const Presentation& p) {
  std::ostringstream out;
  for (const ScanWitness& wit : r.witnesses) {
    out << "WITNESS " << subset_names(wit.I, p) << ' '
        << word_to_string(p, g.canonical_word(wit.w)) << ' ' << wit.count << '\n';
  }
  out << "SUMMARY pairs=" << r.pairs_checked << " witnesses=" << r.witnesses.size()
      << " existence_failures=" << r.existence_failures
      << " unique_case_violations=" << r.unique_case_violations
      << " nonadditive=" << r.nonadditive_decompositions << '\n';
  return out.str();
}

std::string scan_to_json(const ScanReport& r, const CayleyGraph& g,
                         const Presentation& p) {
  nlohmann::json j;
  j["witnesses"] = nlohmann::json::array();
  for (const ScanWitness& wit : r.witnesses) {
    j["witnesses"].push_back({{"I", subset_names(wit.I, p)},
                              {"w", word_to_string(p, g.canonical_word(wit.w))},
                              {"count", wit.count}});
  }
  j["pairs"] = r.pairs_checked;
  j["existence_failures"] = r.existence_failures;
  j["unique_case_violations"] = r.unique_case_violations;
  j["nonadditive"] = r.nonadditive_decompositions;
  return j.dump(2) + "\n";
}

}  // namespace parafact
