#pragma once

#include <string>
#include <vector>

#include "ietk/int_matrix.hpp"

namespace ietk {

// Symbols are 1..m.
using Word = std::vector<int>;

Word parse_word(const std::string& s);  // "1525" or "1,5,2,5"
std::string to_string(const Word& w);   // digits when every symbol < 10, else comma separated

IntVector population(const Word& w, int m);

Word concat(const Word& a, const Word& b);
Word shifted(const Word& w, int by);  // every symbol + by

// Length first, then lexicographic.
bool canonical_less(const Word& a, const Word& b);

}  // namespace ietk
