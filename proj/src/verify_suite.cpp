#include "parafact/verify_suite.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "parafact/cluster_quiver.hpp"
#include "parafact/errors.hpp"
#include "parafact/parabolic.hpp"

namespace parafact {

namespace checks {

namespace {

std::vector<int> letter_images(const CayleyGraph& g) {
  std::set<int> ids;
  for (int col = 0; col < g.num_cols(); ++col) {
    ids.insert(g.right(0, col));
  }
  return {ids.begin(), ids.end()};
}

}  // namespace

std::string length_properties(const CayleyGraph& g) {
  const int n = static_cast<int>(g.order());
  const std::vector<int> gen_images = letter_images(g);
  for (int a = 0; a < n; ++a) {
    if (g.length(a) != g.length(g.element_inverse(a))) {
      return "length differs from inverse's length at element " + std::to_string(a);
    }
    const bool is_gen = std::binary_search(gen_images.begin(), gen_images.end(), a);
    if ((g.length(a) == 1) != is_gen) {
      return "length-1 elements are not exactly the generators at element " +
             std::to_string(a);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = g.multiply(a, b);
      if (g.length(ab) > g.length(a) + g.length(b)) {
        return "length superadditive at pair (" + std::to_string(a) + ", " +
               std::to_string(b) + ")";
      }
      if (g.length(ab) < g.length(a) - g.length(b)) {
        return "length difference bound fails at pair (" + std::to_string(a) + ", " +
               std::to_string(b) + ")";
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int x = 0; x < g.ngens(); ++x) {
      const Letter l{x, +1};
      if (std::abs(g.length(g.right(a, l)) - g.length(a)) != 1) {
        return "right edge does not change length by one at (" + std::to_string(a) +
               ", x" + std::to_string(x) + ")";
      }
      if (g.length(g.left(a, l)) == g.length(a)) {
        return "left product keeps length at (" + std::to_string(a) + ", x" +
               std::to_string(x) + ")";
      }
    }
  }
  return {};
}

std::string descent_prefix_property(const CayleyGraph& g) {
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    const std::vector<Word> words = g.reduced_expressions(a);
    for (int x = 0; x < g.ngens(); ++x) {
      const bool descent = g.length(g.left(a, Letter{x, +1})) < g.length(a);
      const bool has_prefix =
          std::any_of(words.begin(), words.end(), [x](const Word& w) {
            return !w.empty() && w.front() == Letter{x, +1};
          });
      if (descent != has_prefix) {
        return "left descent / geodesic prefix mismatch at element " +
               std::to_string(a) + ", generator index " + std::to_string(x);
      }
    }
  }
  return {};
}

std::string upper_complement_property(const CayleyGraph& g) {
  for (int x = 0; x < g.ngens(); ++x) {
    ParabolicSubset I = ParabolicSubset::all(g.ngens());
    I.bits &= ~(std::uint64_t{1} << x);
    const std::vector<int> left_upper = upper_set(g, I, Side::left);
    const std::vector<int> right_upper = upper_set(g, I, Side::right);
    for (int a = 1; a < static_cast<int>(g.order()); ++a) {
      const std::vector<Word> words = g.reduced_expressions(a);
      const bool all_start = std::all_of(words.begin(), words.end(), [x](const Word& w) {
        return !w.empty() && w.front() == Letter{x, +1};
      });
      const bool all_end = std::all_of(words.begin(), words.end(), [x](const Word& w) {
        return !w.empty() && w.back() == Letter{x, +1};
      });
      const bool in_left =
          std::binary_search(left_upper.begin(), left_upper.end(), a);
      const bool in_right =
          std::binary_search(right_upper.begin(), right_upper.end(), a);
      if (in_left != all_start) {
        return "left upper set does not match forced first letter at element " +
               std::to_string(a) + ", excluded generator " + std::to_string(x);
      }
      if (in_right != all_end) {
        return "right upper set does not match forced last letter at element " +
               std::to_string(a) + ", excluded generator " + std::to_string(x);
      }
    }
  }
  return {};
}

std::string parity_multiplicative(const CayleyGraph& g) {
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if ((g.length(g.multiply(a, b)) + g.length(a) + g.length(b)) % 2 != 0) {
        return "sign homomorphism not multiplicative at pair (" + std::to_string(a) +
               ", " + std::to_string(b) + ")";
      }
    }
  }
  return {};
}

std::string factorization_sweep(const CayleyGraph& g) {
  const std::uint64_t total = std::uint64_t{1} << g.ngens();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const ParabolicSubset I{bits};
    const std::vector<int> sub = subgroup_elements(g, I);
    const std::vector<int> upper = upper_set(g, I, Side::right);
    for (int w = 0; w < static_cast<int>(g.order()); ++w) {
      Factorization f;
      try {
        f = factorize(g, I, w);
      } catch (const NoDescentButNotUpper&) {
        return "factorisation stalled at subset " + std::to_string(bits) +
               ", element " + std::to_string(w);
      }
      const bool ok = std::binary_search(upper.begin(), upper.end(), f.a) &&
                      std::binary_search(sub.begin(), sub.end(), f.b) &&
                      g.multiply(f.a, f.b) == w &&
                      g.length(f.a) + g.length(f.b) == g.length(w);
      if (!ok) {
        return "invalid factorisation at subset " + std::to_string(bits) +
               ", element " + std::to_string(w);
      }
      const std::vector<Factorization> all = all_factorizations(g, I, w);
      const bool listed = std::any_of(all.begin(), all.end(), [&](const Factorization& x) {
        return x.a == f.a && x.b == f.b;
      });
      if (!listed) {
        return "greedy factorisation missing from the exhaustive list at subset " +
               std::to_string(bits) + ", element " + std::to_string(w);
      }
    }
  }
  return {};
}

std::string unique_case_sweep(const CayleyGraph& g) {
  std::vector<ParabolicSubset> subsets{ParabolicSubset::none(),
                                       ParabolicSubset::all(g.ngens())};
  for (int x = 0; x < g.ngens(); ++x) subsets.push_back(ParabolicSubset::of({x}));
  for (const ParabolicSubset& I : subsets) {
    for (int w = 0; w < static_cast<int>(g.order()); ++w) {
      const std::size_t count = all_factorizations(g, I, w).size();
      if (count != 1) {
        return "expected a unique factorisation, found " + std::to_string(count) +
               " at subset bits " + std::to_string(I.bits) + ", element " +
               std::to_string(w);
      }
    }
  }
  return {};
}

}  // namespace checks

namespace {

const char* kKleinText =
    "gens: i j k\n"
    "rel: i i\n"
    "rel: j j\n"
    "rel: k k\n"
    "rel: i j k\n";

struct Fixture {
  Presentation pres;
  CayleyGraph graph;
};

Fixture make_fixture(Presentation p, const EnumerationLimits& limits) {
  const CosetTable t = todd_coxeter(p, {}, limits);
  return {std::move(p), CayleyGraph::build(t)};
}

int eval(const Fixture& f, const std::string& word) {
  return f.graph.eval_word(parse_word(f.pres, word));
}

std::set<int> eval_set(const Fixture& f, const std::vector<std::string>& words) {
  std::set<int> out;
  for (const auto& w : words) out.insert(eval(f, w));
  return out;
}

std::string word_list(const Fixture& f, const std::vector<int>& ids) {
  std::string out;
  for (const int id : ids) {
    if (!out.empty()) out += ", ";
    out += word_to_string(f.pres, f.graph.canonical_word(id));
  }
  return out;
}

}  // namespace

std::vector<VerifyStep> run_verify_suite(const VerifyOptions& opts) {
  std::vector<VerifyStep> steps;
  auto add = [&steps](std::string name, bool pass, std::string detail) {
    steps.push_back({std::move(name), pass, std::move(detail)});
  };

  const Presentation a3_pres = a3_cluster_presentation();
  const CosetTable a3_table = todd_coxeter(a3_pres, {}, opts.limits);
  const Fixture a3{a3_pres, CayleyGraph::build(a3_table)};

  Quiver path2;
  path2.vertices = 2;
  path2.arrows = {{0, 1}};
  const Fixture a2 = make_fixture(quiver_to_presentation(path2), opts.limits);

  const Fixture klein = make_fixture(parse_presentation(kKleinText), opts.limits);

  // Images of the three generators as transpositions of four points.
  const PermutationMap pi = pi_map();
  add("pi-images-satisfy-relators", verify_images(a3.pres, pi),
      "checked all " + std::to_string(a3.pres.relators.size()) + " relators");

  const std::size_t expected_order = opts.inject_failure ? 23 : 24;
  const std::size_t closure = group_order_via_closure(pi);
  add("group-order",
      a3_table.rows() == expected_order && closure == expected_order &&
          a3_table.rows() == closure,
      "enumeration: " + std::to_string(a3_table.rows()) +
          " cosets, image closure: " + std::to_string(closure));

  add("derived-relation-all-triples", derived_relation_check(a3.graph),
      "t_i t_j t_i t_k = t_k t_i t_j t_i over all six ordered triples");

  const ParabolicSubset I12 = ParabolicSubset::of({0, 1});
  const std::vector<int> sub = subgroup_elements(a3.graph, I12);
  const std::set<int> sub_expected =
      eval_set(a3, {"e", "t1", "t2", "t1 t2", "t2 t1", "t1 t2 t1"});
  add("subgroup-listing",
      std::set<int>(sub.begin(), sub.end()) == sub_expected &&
          eval(a3, "t1 t2 t1") == eval(a3, "t2 t1 t2"),
      "subgroup of {t1, t2}: " + word_list(a3, sub));

  const std::vector<int> upper = upper_set(a3.graph, I12, Side::right);
  const std::set<int> upper_expected =
      eval_set(a3, {"e", "t3", "t1 t3", "t2 t3", "t1 t2 t3", "t2 t1 t3"});
  add("upper-set-listing",
      std::set<int>(upper.begin(), upper.end()) == upper_expected,
      "right upper set of {t1, t2}: " + word_list(a3, upper));

  const int w_unique = eval(a3, "t1 t2 t3");
  const CosetReport coset = coset_report(a3.graph, I12, w_unique);
  const std::set<int> coset_expected = eval_set(
      a3, {"t1 t2 t3", "t1 t2 t3 t1", "t1 t2 t3 t2", "t2 t3 t1", "t2 t3 t2", "t2 t3"});
  add("coset-listing",
      std::set<int>(coset.coset.begin(), coset.coset.end()) == coset_expected &&
          coset.min_length_elements == std::vector<int>{eval(a3, "t2 t3")},
      "coset of t1 t2 t3: " + word_list(a3, coset.coset) + "; minimal: " +
          word_list(a3, coset.min_length_elements));

  const int w_two = eval(a3, "t2 t3 t1 t2");
  const std::vector<Factorization> two = all_factorizations(a3.graph, I12, w_two);
  const bool two_ok =
      two.size() == 2 && two[0].a == eval(a3, "t2 t3") && two[0].b == eval(a3, "t1 t2") &&
      a3.graph.length(two[0].a) == 2 && a3.graph.length(two[0].b) == 2 &&
      two[1].a == eval(a3, "t1 t2 t3") && two[1].b == eval(a3, "t1") &&
      a3.graph.length(two[1].a) == 3 && a3.graph.length(two[1].b) == 1;
  std::string two_detail;
  for (const Factorization& fx : two) {
    if (!two_detail.empty()) two_detail += "; ";
    two_detail += "(" + word_to_string(a3.pres, fx.a_word) + ") * (" +
                  word_to_string(a3.pres, fx.b_word) + ")";
  }
  add("two-distinct-factorisations", two_ok, "t2 t3 t1 t2 = " + two_detail);

  const std::vector<Factorization> unique_f = all_factorizations(a3.graph, I12, w_unique);
  const bool min_ok =
      unique_f.size() == 1 && unique_f[0].a == w_unique && unique_f[0].b == 0 &&
      std::none_of(unique_f.begin(), unique_f.end(),
                   [&](const Factorization& fx) { return fx.a == eval(a3, "t2 t3"); });
  add("minimal-coset-element-not-a-factor", min_ok,
      "t1 t2 t3 factorises only as itself times identity; the minimal coset "
      "element t2 t3 yields none");

  const bool klein_flags =
      klein.pres.involution_condition && !klein.pres.even_condition;
  const bool klein_neg =
      !exists_factorization(klein.graph, ParabolicSubset::of({0}), eval(klein, "j"));
  const bool klein_pos =
      exists_factorization(klein.graph, ParabolicSubset::of({0}), eval(klein, "i"));
  add("odd-relator-counterexample", klein_flags && klein_neg && klein_pos,
      "order " + std::to_string(klein.graph.order()) +
          "; j admits no additive factorisation over {i}, i itself does");

  const std::string unique_sweep = checks::unique_case_sweep(a3.graph);
  add("unique-case-sweep", unique_sweep.empty(),
      unique_sweep.empty() ? "full and singleton subsets give unique factorisations"
                           : unique_sweep);

  const std::string sweep = checks::factorization_sweep(a3.graph);
  add("factorisation-sweep", sweep.empty(),
      sweep.empty() ? "all subsets x all elements factorise with additive lengths"
                    : sweep);

  const std::string len_a3 = checks::length_properties(a3.graph);
  const std::string len_a2 = checks::length_properties(a2.graph);
  add("length-properties", len_a3.empty() && len_a2.empty(),
      len_a3.empty() && len_a2.empty() ? "triangle and path fixtures"
                                       : len_a3 + len_a2);

  const std::string prefix_a3 = checks::descent_prefix_property(a3.graph);
  const std::string prefix_a2 = checks::descent_prefix_property(a2.graph);
  add("descent-prefix-property", prefix_a3.empty() && prefix_a2.empty(),
      prefix_a3.empty() && prefix_a2.empty() ? "triangle and path fixtures"
                                             : prefix_a3 + prefix_a2);

  const std::string complement_a3 = checks::upper_complement_property(a3.graph);
  const std::string complement_a2 = checks::upper_complement_property(a2.graph);
  add("upper-complement-property", complement_a3.empty() && complement_a2.empty(),
      complement_a3.empty() && complement_a2.empty() ? "triangle and path fixtures"
                                                     : complement_a3 + complement_a2);

  const ParityReport parity = parity_check(a3.graph, a3.pres);
  const std::string parity_pairs = checks::parity_multiplicative(a3.graph);
  add("parity-homomorphism", parity.pass() && parity_pairs.empty(),
      parity.pass() && parity_pairs.empty()
          ? "multiplicative over all pairs, surjective, generators of order 2"
          : parity.detail + parity_pairs);

  return steps;
}

bool all_passed(const std::vector<VerifyStep>& steps) {
  return std::all_of(steps.begin(), steps.end(),
                     [](const VerifyStep& s) { return s.pass; });
}

std::string transcript_text(const std::vector<VerifyStep>& steps) {
  std::ostringstream out;
  for (const VerifyStep& s : steps) {
    out << (s.pass ? "PASS" : "FAIL") << ' ' << s.name << ": " << s.detail << '\n';
  }
  out << "RESULT " << (all_passed(steps) ? "pass" : "fail") << '\n';
  return out.str();
}

std::string transcript_json(const std::vector<VerifyStep>& steps) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const VerifyStep& s : steps) {
    j["steps"].push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
  }
  j["pass"] = all_passed(steps);
  return j.dump(2) + "\n";
}

}  // namespace parafact
