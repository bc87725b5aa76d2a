// parafact: condition checks, coset enumeration, length and descent
// queries, parabolic factorisations, exhaustive uniqueness scans and DOT
// export for finitely presented groups with involution generators.
//
// Exit codes: 0 success, 1 assertion or condition failure, 2 input error,
// 3 resource limit hit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parafact/cayley_graph.hpp"
#include "parafact/cluster_quiver.hpp"
#include "parafact/coset_table.hpp"
#include "parafact/errors.hpp"
#include "parafact/parabolic.hpp"
#include "parafact/verify_suite.hpp"

namespace {

using namespace parafact;

struct Config {
  std::string input;
  std::string subset;
  std::string word;
  std::string format = "text";
  std::string output;
  std::vector<std::string> perms;
  std::size_t max_cosets = 100'000;
  std::size_t max_steps = 10'000'000;
  bool inject_failure = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_out(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + cfg.output + "'");
  out << text;
}

Presentation load_presentation(const Config& cfg) {
  return parse_presentation(read_file(cfg.input));
}

EnumerationLimits limits_of(const Config& cfg) {
  return {cfg.max_cosets, cfg.max_steps};
}

CayleyGraph load_graph(const Config& cfg, Presentation& pres) {
  pres = load_presentation(cfg);
  return CayleyGraph::build(todd_coxeter(pres, {}, limits_of(cfg)));
}

ParabolicSubset parse_subset(const Presentation& p, const std::string& names) {
  ParabolicSubset I;
  std::stringstream ss(names);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const int idx = p.generator_index(name);
    if (idx < 0) throw ParseError("unknown generator '" + name + "' in subset");
    I.add(idx);
  }
  return I;
}

std::string describe(const Presentation& p, const CayleyGraph& g, int id) {
  return word_to_string(p, g.canonical_word(id)) + " (length " +
         std::to_string(g.length(id)) + ")";
}

int cmd_check(const Config& cfg) {
  const Presentation p = load_presentation(cfg);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["generators"] = nlohmann::json::array();
    for (const Generator& g : p.generators) j["generators"].push_back(g.name);
    j["relators"] = nlohmann::json::array();
    for (const Word& r : p.relators) {
      j["relators"].push_back(
          {{"word", word_to_string(p, r)}, {"length", r.size()}});
    }
    j["involutions"] = p.involution_condition;
    j["even"] = p.even_condition;
    write_out(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "generators: " << p.num_generators() << "\n";
    for (const Word& r : p.relators) {
      out << "relator: " << word_to_string(p, r) << " (length " << r.size()
          << ")\n";
    }
    out << "involutions: " << (p.involution_condition ? "true" : "false") << "\n";
    out << "even: " << (p.even_condition ? "true" : "false") << "\n";
    write_out(cfg, out.str());
  }
  return p.involution_condition && p.even_condition ? 0 : 1;
}

int cmd_order(const Config& cfg) {
  const Presentation p = load_presentation(cfg);
  const CosetTable t = todd_coxeter(p, {}, limits_of(cfg));
  if (cfg.format == "json") {
    write_out(cfg, nlohmann::json{{"order", t.rows()}}.dump(2) + "\n");
  } else {
    write_out(cfg, "order: " + std::to_string(t.rows()) + "\n");
  }
  return 0;
}

int cmd_lengths(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  std::map<int, int> histogram;
  for (std::size_t id = 0; id < g.order(); ++id) ++histogram[g.length(id)];
  if (cfg.format == "json") {
    nlohmann::json j;
    j["order"] = g.order();
    j["histogram"] = nlohmann::json::object();
    for (const auto& [len, count] : histogram) {
      j["histogram"][std::to_string(len)] = count;
    }
    j["elements"] = nlohmann::json::array();
    for (std::size_t id = 0; id < g.order(); ++id) {
      j["elements"].push_back(
          {{"id", id},
           {"word", word_to_string(p, g.canonical_word(static_cast<int>(id)))},
           {"length", g.length(static_cast<int>(id))}});
    }
    write_out(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "order: " << g.order() << "\n";
    out << "lengths:";
    for (const auto& [len, count] : histogram) out << ' ' << len << ':' << count;
    out << "\n";
    for (std::size_t id = 0; id < g.order(); ++id) {
      out << 'n' << id << ' '
          << word_to_string(p, g.canonical_word(static_cast<int>(id))) << ' '
          << g.length(static_cast<int>(id)) << "\n";
    }
    write_out(cfg, out.str());
  }
  return 0;
}

int cmd_reduced(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  const int id = g.eval_word(parse_word(p, cfg.word));
  const std::vector<Word> words = g.reduced_expressions(id);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["element"] = word_to_string(p, g.canonical_word(id));
    j["length"] = g.length(id);
    j["count"] = words.size();
    j["expressions"] = nlohmann::json::array();
    for (const Word& w : words) j["expressions"].push_back(word_to_string(p, w));
    write_out(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "element: " << word_to_string(p, g.canonical_word(id)) << "\n";
    out << "length: " << g.length(id) << "\n";
    out << "count: " << words.size() << "\n";
    for (const Word& w : words) out << word_to_string(p, w) << "\n";
    write_out(cfg, out.str());
  }
  return 0;
}

int cmd_descents(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  const int id = g.eval_word(parse_word(p, cfg.word));
  auto names = [&p](const std::vector<int>& xs) {
    std::string out;
    for (const int x : xs) {
      if (!out.empty()) out += ' ';
      out += p.generators[x].name;
    }
    return out.empty() ? "-" : out;
  };
  const std::vector<int> left = g.descents(id, Side::left);
  const std::vector<int> right = g.descents(id, Side::right);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["element"] = word_to_string(p, g.canonical_word(id));
    j["left"] = nlohmann::json::array();
    for (const int x : left) j["left"].push_back(p.generators[x].name);
    j["right"] = nlohmann::json::array();
    for (const int x : right) j["right"].push_back(p.generators[x].name);
    write_out(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "element: " << word_to_string(p, g.canonical_word(id)) << "\n";
    out << "left: " << names(left) << "\n";
    out << "right: " << names(right) << "\n";
    write_out(cfg, out.str());
  }
  return 0;
}

int cmd_factorize(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  const ParabolicSubset I = parse_subset(p, cfg.subset);
  const int w = g.eval_word(parse_word(p, cfg.word));

  std::optional<Factorization> greedy;
  std::string stall;
  try {
    greedy = factorize(g, I, w);
  } catch (const NoDescentButNotUpper& e) {
    stall = e.what();
  }
  const std::vector<Factorization> all = all_factorizations(g, I, w);

  if (cfg.format == "json") {
    nlohmann::json j;
    j["element"] = word_to_string(p, g.canonical_word(w));
    j["length"] = g.length(w);
    if (greedy) {
      j["greedy"] = {{"a", word_to_string(p, greedy->a_word)},
                     {"b", word_to_string(p, greedy->b_word)},
                     {"a_length", g.length(greedy->a)},
                     {"b_length", g.length(greedy->b)}};
    } else {
      j["greedy"] = nullptr;
      j["greedy_error"] = stall;
    }
    j["factorizations"] = nlohmann::json::array();
    for (const Factorization& f : all) {
      j["factorizations"].push_back({{"a", word_to_string(p, f.a_word)},
                                     {"b", word_to_string(p, f.b_word)},
                                     {"a_length", g.length(f.a)},
                                     {"b_length", g.length(f.b)}});
    }
    write_out(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "element: " << word_to_string(p, g.canonical_word(w)) << "\n";
    out << "length: " << g.length(w) << "\n";
    if (greedy) {
      out << "greedy: a = " << describe(p, g, greedy->a)
          << ", b = " << describe(p, g, greedy->b) << "\n";
    } else {
      out << "greedy: stalled: " << stall << "\n";
    }
    out << "factorizations: " << all.size() << "\n";
    for (const Factorization& f : all) {
      out << "a = " << describe(p, g, f.a) << ", b = " << describe(p, g, f.b)
          << "\n";
    }
    write_out(cfg, out.str());
  }
  return greedy.has_value() && !all.empty() ? 0 : 1;
}

int cmd_coset(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  const ParabolicSubset I = parse_subset(p, cfg.subset);
  const int w = g.eval_word(parse_word(p, cfg.word));
  const CosetReport r = coset_report(g, I, w);
  auto listing = [&](const std::vector<int>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (const int id : ids) arr.push_back(word_to_string(p, g.canonical_word(id)));
    return arr;
  };
  if (cfg.format == "json") {
    nlohmann::json j;
    j["element"] = word_to_string(p, g.canonical_word(w));
    j["coset"] = listing(r.coset);
    j["min_length_elements"] = listing(r.min_length_elements);
    j["intersection_with_upper"] = listing(r.intersection_with_upper);
    write_out(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "element: " << word_to_string(p, g.canonical_word(w)) << "\n";
    out << "coset (" << r.coset.size() << "):\n";
    for (const int id : r.coset) out << "  " << describe(p, g, id) << "\n";
    out << "minimal length:\n";
    for (const int id : r.min_length_elements) out << "  " << describe(p, g, id) << "\n";
    out << "in upper set:\n";
    for (const int id : r.intersection_with_upper) {
      out << "  " << describe(p, g, id) << "\n";
    }
    write_out(cfg, out.str());
  }
  return 0;
}

int cmd_scan(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  const ScanReport r = uniqueness_scan(g);
  write_out(cfg, cfg.format == "json" ? scan_to_json(r, g, p) : scan_to_text(r, g, p));
  return r.ok() ? 0 : 1;
}

int cmd_dot(const Config& cfg) {
  Presentation p;
  const CayleyGraph g = load_graph(cfg, p);
  std::optional<PermutationMap> annotations;
  if (!cfg.perms.empty()) {
    if (cfg.perms.size() != p.num_generators()) {
      throw ParseError("need one --perm per generator (" +
                       std::to_string(p.num_generators()) + ")");
    }
    int degree = 1;
    for (const std::string& s : cfg.perms) {
      int value = 0;
      for (const char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          value = value * 10 + (c - '0');
        } else {
          degree = std::max(degree, value);
          value = 0;
        }
      }
      degree = std::max(degree, value);
    }
    PermutationMap m;
    m.degree = degree;
    for (const std::string& s : cfg.perms) m.images.push_back(parse_cycles(s, m.degree));
    annotations = std::move(m);
  }
  write_out(cfg, export_dot(g, p, annotations ? &*annotations : nullptr));
  return 0;
}

int cmd_verify(const Config& cfg) {
  VerifyOptions opts;
  opts.limits = limits_of(cfg);
  opts.inject_failure = cfg.inject_failure;
  const std::vector<VerifyStep> steps = run_verify_suite(opts);
  write_out(cfg, cfg.format == "json" ? transcript_json(steps) : transcript_text(steps));
  return all_passed(steps) ? 0 : 1;
}

int cmd_quiver(const Config& cfg) {
  const Quiver q = parse_quiver(read_file(cfg.input));
  const Presentation p = quiver_to_presentation(q);
  write_out(cfg, serialize(p));
  return 0;
}

int cmd_table(const Config& cfg) {
  const Presentation p = load_presentation(cfg);
  std::vector<Word> subgroup;
  if (!cfg.subset.empty()) {
    const ParabolicSubset I = parse_subset(p, cfg.subset);
    for (int x = 0; x < static_cast<int>(p.num_generators()); ++x) {
      if (I.contains(x)) subgroup.push_back({Letter{x, +1}});
    }
  }
  const CosetTable t = todd_coxeter(p, subgroup, limits_of(cfg));
  write_out(cfg, t.dump());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented groups with involution generators: "
               "enumeration, lengths, parabolic factorisations"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("PARAFACT_MAX_COSETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cfg.max_cosets = v;
  }

  auto add_common = [&cfg](CLI::App* sub, bool with_input = true) {
    if (with_input) {
      sub->add_option("input", cfg.input, "presentation file")->required();
    }
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", cfg.output, "write to file instead of stdout");
    sub->add_option("--max-cosets", cfg.max_cosets, "enumeration coset limit");
    sub->add_option("--max-steps", cfg.max_steps, "enumeration step limit");
  };

  int (*run)(const Config&) = nullptr;
  auto bind = [&run](int (*fn)(const Config&)) { return [&run, fn] { run = fn; }; };

  add_common(app.add_subcommand("check", "condition flags and relator lengths")
                 ->callback(bind(cmd_check)));
  add_common(app.add_subcommand("order", "group order by coset enumeration")
                 ->callback(bind(cmd_order)));
  add_common(app.add_subcommand("lengths", "length of every element")
                 ->callback(bind(cmd_lengths)));

  CLI::App* reduced = app.add_subcommand("reduced", "all geodesic words of an element");
  add_common(reduced->callback(bind(cmd_reduced)));
  reduced->add_option("--word", cfg.word, "element as a word")->required();

  CLI::App* descents = app.add_subcommand("descents", "left/right descent sets");
  add_common(descents->callback(bind(cmd_descents)));
  descents->add_option("--word", cfg.word, "element as a word")->required();

  CLI::App* factorize = app.add_subcommand(
      "factorize", "greedy and exhaustive parabolic factorisations");
  add_common(factorize->callback(bind(cmd_factorize)));
  factorize->add_option("--I", cfg.subset, "subset as comma-separated names")
      ->required();
  factorize->add_option("--word", cfg.word, "element as a word")->required();

  CLI::App* coset = app.add_subcommand("coset", "coset listing and minima");
  add_common(coset->callback(bind(cmd_coset)));
  coset->add_option("--I", cfg.subset, "subset as comma-separated names")->required();
  coset->add_option("--word", cfg.word, "element as a word")->required();

  add_common(app.add_subcommand("scan", "factorisation census over all subsets")
                 ->callback(bind(cmd_scan)));

  CLI::App* dot = app.add_subcommand("dot", "Cayley graph in DOT format");
  add_common(dot->callback(bind(cmd_dot)));
  dot->add_option("--perm", cfg.perms,
                  "cycle-notation image of each generator, for node labels");

  CLI::App* verify =
      app.add_subcommand("verify", "run the built-in reproduction suite");
  add_common(verify->callback(bind(cmd_verify)), /*with_input=*/false);
  verify->add_flag("--inject-failure", cfg.inject_failure)->group("");

  CLI::App* quiver =
      app.add_subcommand("quiver", "presentation of a supported quiver");
  add_common(quiver->callback(bind(cmd_quiver)));

  CLI::App* table = app.add_subcommand("table", "coset table dump");
  add_common(table->callback(bind(cmd_table)));
  table->add_option("--subgroup", cfg.subset,
                    "generators of the subgroup, comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(cfg);
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << " (" << e.allocated()
              << " cosets allocated at abort)\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedQuiver& e) {
    std::cerr << "unsupported quiver: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
