#include "parafact/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "parafact/errors.hpp"

namespace parafact {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based start position
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#') {
      ++j;
    }
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

// A letter token is a generator name with an optional ^-1 suffix.
Letter parse_letter(const Presentation& p, const Token& tok, int line_no) {
  std::string name = tok.text;
  int sign = +1;
  if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
    sign = -1;
    name.resize(name.size() - 3);
  }
  const int idx = p.generator_index(name);
  if (idx < 0) {
    throw ParseError("unknown generator token '" + name + "'", line_no, tok.column);
  }
  return {idx, sign};
}

// Splits a rel: payload on `=` tokens into words; `e` is the empty word.
std::vector<Word> parse_relation_words(const Presentation& p,
                                       const std::vector<Token>& toks,
                                       std::size_t first, int line_no) {
  std::vector<Word> words;
  Word current;
  bool saw_any_token = false;
  for (std::size_t i = first; i < toks.size(); ++i) {
    const Token& tok = toks[i];
    if (tok.text == "=") {
      if (!saw_any_token) {
        throw ParseError("relation starts with '='", line_no, tok.column);
      }
      words.push_back(std::move(current));
      current.clear();
      saw_any_token = false;
      continue;
    }
    saw_any_token = true;
    if (tok.text == "e") continue;  // identity contributes no letters
    current.push_back(parse_letter(p, tok, line_no));
  }
  if (!saw_any_token) {
    const int col = toks.empty() ? 1 : toks.back().column;
    throw ParseError("empty word at end of relation", line_no, col);
  }
  words.push_back(std::move(current));
  return words;
}

}  // namespace

int Presentation::generator_index(std::string_view name) const {
  for (const Generator& g : generators) {
    if (g.name == name) return g.index;
  }
  return -1;
}

void Presentation::validate_word(const Word& w) const {
  for (const Letter& l : w) {
    if (l.gen < 0 || l.gen >= static_cast<int>(generators.size())) {
      throw ParseError("letter refers to generator index " + std::to_string(l.gen) +
                       " outside the presentation");
    }
  }
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0].text == "gens:") {
      if (have_gens) {
        throw ParseError("duplicate gens: line", line_no, toks[0].column);
      }
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string& name = toks[i].text;
        if (name == "e" || name == "=" || name.find('^') != std::string::npos) {
          throw ParseError("reserved or malformed generator name '" + name + "'",
                           line_no, toks[i].column);
        }
        if (p.generator_index(name) >= 0) {
          throw ParseError("duplicate generator name '" + name + "'", line_no,
                           toks[i].column);
        }
        p.generators.push_back({name, static_cast<int>(i) - 1});
      }
      if (p.generators.empty()) {
        throw ParseError("empty generator list", line_no, toks[0].column);
      }
      have_gens = true;
      continue;
    }

    if (toks[0].text == "rel:") {
      if (!have_gens) {
        throw ParseError("rel: before gens:", line_no, toks[0].column);
      }
      const std::vector<Word> words = parse_relation_words(p, toks, 1, line_no);
      if (words.size() == 1) {
        p.relators.push_back(free_reduce(words[0]));  // standalone u means u = e
      } else {
        for (std::size_t i = 0; i + 1 < words.size(); ++i) {
          Word rel = words[i];
          const Word vi = inverse(words[i + 1]);
          rel.insert(rel.end(), vi.begin(), vi.end());
          p.relators.push_back(free_reduce(rel));
        }
      }
      continue;
    }

    throw ParseError("expected 'gens:' or 'rel:', got '" + toks[0].text + "'",
                     line_no, toks[0].column);
  }

  if (!have_gens) {
    throw ParseError("no gens: line", line_no, 1);
  }
  check_conditions(p);
  return p;
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const Generator& g : p.generators) out << ' ' << g.name;
  out << '\n';
  for (const Word& r : p.relators) {
    out << "rel: " << word_to_string(p, r) << '\n';
  }
  return out.str();
}

std::pair<bool, bool> check_conditions(Presentation& p) {
  std::vector<bool> has_square(p.generators.size(), false);
  bool even = true;
  for (const Word& r : p.relators) {
    if (r.size() % 2 != 0) even = false;
    if (r.size() == 2 && r[0].gen == r[1].gen && r[0].sign == +1 && r[1].sign == +1) {
      has_square[r[0].gen] = true;
    }
  }
  const bool invol =
      std::all_of(has_square.begin(), has_square.end(), [](bool b) { return b; });
  p.involution_condition = invol;
  p.even_condition = even;
  return {invol, even};
}

std::string word_to_string(const Presentation& p, const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << p.generators[w[i].gen].name;
    if (w[i].sign < 0) out << "^-1";
  }
  return out.str();
}

Word parse_word(const Presentation& p, const std::string& text) {
  const std::vector<Token> toks = tokenize(text);
  Word w;
  for (const Token& tok : toks) {
    if (tok.text == "e") continue;
    w.push_back(parse_letter(p, tok, 0));
  }
  return w;
}

}  // namespace parafact
