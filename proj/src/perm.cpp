#include "ietk/perm.hpp"

#include <algorithm>
#include <sstream>

#include "ietk/errors.hpp"
#include "ietk/rational_linalg.hpp"

namespace ietk {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)), inv_(image_.size(), 0) {
  int m = size();
  if (m < 1) throw ValidationError("permutation must have at least one entry");
  for (int i = 0; i < m; ++i) {
    int v = image_[i];
    if (v < 1 || v > m || inv_[v - 1] != 0) throw ValidationError("not a permutation of 1..m: " + to_string());
    inv_[v - 1] = i + 1;
  }
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << ')';
  return os.str();
}

Label label_from_char(char c) {
  if (c == 'a') return Label::a;
  if (c == 'b') return Label::b;
  throw ValidationError(std::string("bad Rauzy label: ") + c);
}

bool is_irreducible(const Permutation& p) {
  int m = p.size();
  int mx = 0;
  for (int k = 1; k < m; ++k) {
    mx = std::max(mx, p(k));
    if (mx == k) return false;
  }
  return true;
}

Permutation apply_a(const Permutation& p) {
  int m = p.size();
  int k = p.inverse(m);
  std::vector<int> r(m);
  for (int i = 1; i <= m; ++i) {
    if (i <= k)
      r[i - 1] = p(i);
    else if (i == k + 1)
      r[i - 1] = p(m);
    else
      r[i - 1] = p(i - 1);
  }
  return Permutation(std::move(r));
}

Permutation apply_b(const Permutation& p) {
  int m = p.size();
  int pm = p(m);
  std::vector<int> r(m);
  for (int i = 1; i <= m; ++i) {
    int v = p(i);
    if (v <= pm)
      r[i - 1] = v;
    else if (v < m)
      r[i - 1] = v + 1;
    else
      r[i - 1] = pm + 1;
  }
  return Permutation(std::move(r));
}

Permutation apply(Label c, const Permutation& p) { return c == Label::a ? apply_a(p) : apply_b(p); }

std::vector<int> eta(const Permutation& p) {
  int m = p.size();
  std::vector<int> e(m + 1);
  for (int i = 0; i <= m; ++i) {
    if (i == 0)
      e[i] = p.inverse(1) - 1;
    else if (i == p.inverse(m))
      e[i] = m;
    else
      e[i] = p.inverse(p(i) + 1) - 1;
  }
  return e;
}

bool CyclicSet::contains(int i) const { return std::binary_search(members.begin(), members.end(), i); }

std::string CyclicSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << '}';
  return os.str();
}

std::vector<CyclicSet> cyclic_sets(const Permutation& p) {
  auto e = eta(p);
  int m = p.size();
  std::vector<char> seen(m + 1, 0);
  std::vector<CyclicSet> out;
  for (int s = 0; s <= m; ++s) {
    if (seen[s]) continue;
    CyclicSet c;
    for (int i = s; !seen[i]; i = e[i]) {
      seen[i] = 1;
      c.members.push_back(i);
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

IntVector b_vector(const CyclicSet& s, int m) {
  IntVector b(m);
  for (int i = 1; i <= m; ++i) b[i - 1] = (s.contains(i - 1) ? 1 : 0) - (s.contains(i) ? 1 : 0);
  return b;
}

int predicted_b_sum(const CyclicSet& s, int m) {
  bool z = s.contains(0), t = s.contains(m);
  if (z && !t) return 1;
  if (!z && t) return -1;
  return 0;
}

IntMatrix L_matrix(const Permutation& p) {
  int m = p.size();
  IntMatrix l(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i < j && p(i) > p(j)) l(i - 1, j - 1) = 1;
      if (i > j && p(i) < p(j)) l(i - 1, j - 1) = -1;
    }
  return l;
}

bool H_membership(const IntVector& h, const Permutation& p) {
  int m = p.size();
  for (const auto& k : integer_kernel(to_qmatrix(L_matrix(p)), m))
    if (dot(h, k) != 0) return false;
  return true;
}

bool H_membership_via_b(const IntVector& h, const Permutation& p) {
  for (const auto& s : cyclic_sets(p))
    if (dot(h, b_vector(s, p.size())) != 0) return false;
  return true;
}

bool in_tilde_class(const Permutation& p) {
  for (const auto& s : cyclic_sets(p)) {
    auto t = sum(b_vector(s, p.size()));
    if (t != 1 && t != -1) return false;
  }
  return true;
}

Permutation tau_sym(int m) {
  if (m < 2) throw BadSize("tau_sym needs m >= 2");
  std::vector<int> r(m);
  for (int i = 0; i < m; ++i) r[i] = m - i;
  return Permutation(std::move(r));
}

Permutation tau(int m) {
  if (m < 5 || m % 2 == 0) throw BadSize("tau needs odd m >= 5");
  std::vector<int> r{m - 1, 1};
  for (int v = m - 2; v >= 3; --v) r.push_back(v);
  r.push_back(m);
  r.push_back(2);
  return Permutation(std::move(r));
}

bool reduction_identity_check(int m) {
  Permutation p = apply_a(tau_sym(m));
  for (int i = 0; i < m - 3; ++i) p = apply_b(p);
  return p == tau(m);
}

}  // namespace ietk
