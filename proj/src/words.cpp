#include "ietk/words.hpp"

#include <algorithm>
#include <sstream>

#include "ietk/errors.hpp"

namespace ietk {

Word parse_word(const std::string& s) {
  Word w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw ValidationError("bad word symbol in \"" + s + "\"");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  bool small = std::all_of(w.begin(), w.end(), [](int s) { return s >= 1 && s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (small)
      out += static_cast<char>('0' + w[i]);
    else
      out += (i ? "," : "") + std::to_string(w[i]);
  }
  return out;
}

IntVector population(const Word& w, int m) {
  IntVector l(m, 0);
  for (int s : w) {
    if (s < 1 || s > m) throw ValidationError("word symbol out of range");
    ++l[s - 1];
  }
  return l;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word shifted(const Word& w, int by) {
  Word r = w;
  for (auto& s : r) s += by;
  return r;
}

bool canonical_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace ietk
