#include "parafact/word.hpp"

namespace parafact {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].gen == w[i - 1].gen && w[i].sign == -w[i - 1].sign) return false;
  }
  return true;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::size_t relation_length(const Word& u, const Word& v) {
  Word uv = u;
  const Word vi = inverse(v);
  uv.insert(uv.end(), vi.begin(), vi.end());
  return free_reduce(uv).size();
}

}  // namespace parafact
