#include "ietk/rauzy.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

#include "ietk/errors.hpp"

namespace ietk {

IntMatrix elementary_matrix(Label c, const Permutation& p) {
  int m = p.size();
  int k = p.inverse(m);
  IntMatrix a(m);
  if (c == Label::b) {
    a = IntMatrix::identity(m);
    a(m - 1, k - 1) += 1;
    return a;
  }
  for (int i = 1; i <= m; ++i) {
    if (i < k)
      a(i - 1, i - 1) = 1;
    else if (i == k) {
      a(i - 1, k - 1) = 1;
      a(i - 1, k) = 1;
    } else if (i < m)
      a(i - 1, i) = 1;
    else
      a(m - 1, k) = 1;
  }
  return a;
}

RauzyPath::RauzyPath(Permutation s, const std::string& l) : start(std::move(s)) {
  for (char ch : l) labels.push_back(label_from_char(ch));
}

std::string RauzyPath::label_string() const {
  std::string s;
  for (auto c : labels) s += to_char(c);
  return s;
}

RauzyPath RauzyPath::repeated(int times) const {
  RauzyPath r(start, std::vector<Label>{});
  for (int i = 0; i < times; ++i) r.labels.insert(r.labels.end(), labels.begin(), labels.end());
  return r;
}

ComposedPath compose_path(const RauzyPath& path) {
  if (!is_irreducible(path.start)) throw ValidationError("path start is reducible: " + path.start.to_string());
  ComposedPath r{IntMatrix::identity(path.start.size()), path.start, {path.start}};
  for (auto c : path.labels) {
    r.matrix = r.matrix * elementary_matrix(c, r.end);
    r.end = apply(c, r.end);
    r.visited.push_back(r.end);
  }
  return r;
}

RauzyClass::RauzyClass(const Permutation& root) {
  if (!is_irreducible(root)) throw ValidationError("Rauzy class of a reducible permutation");
  vertices_.push_back(root);
  index_[root] = 0;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    std::array<int, 2> nx{};
    for (int s = 0; s < 2; ++s) {
      Permutation q = apply(s == 0 ? Label::a : Label::b, vertices_[v]);
      auto it = index_.find(q);
      if (it == index_.end()) {
        it = index_.emplace(q, static_cast<int>(vertices_.size())).first;
        vertices_.push_back(q);
      }
      nx[s] = it->second;
    }
    next_.push_back(nx);
  }
}

int RauzyClass::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Label> RauzyClass::shortest_path(const Permutation& from, const Permutation& to) const {
  int s = index_of(from), t = index_of(to);
  if (s < 0 || t < 0) throw NotFound("shortest_path: permutation outside the class");
  std::vector<int> prev(size(), -1), via(size(), -1);
  std::deque<int> q{s};
  prev[s] = s;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == t) break;
    for (int c = 0; c < 2; ++c) {
      int w = next_[v][c];
      if (prev[w] >= 0) continue;
      prev[w] = v;
      via[w] = c;
      q.push_back(w);
    }
  }
  std::vector<Label> path;
  for (int v = t; v != s; v = prev[v]) path.push_back(via[v] == 0 ? Label::a : Label::b);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> RauzyClass::distances_to(int target) const {
  std::vector<std::vector<int>> rev(size());
  for (std::size_t v = 0; v < size(); ++v)
    for (int c = 0; c < 2; ++c) rev[next_[v][c]].push_back(static_cast<int>(v));
  std::vector<int> d(size(), -1);
  std::deque<int> q{target};
  d[target] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : rev[v])
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
  }
  return d;
}

std::string RauzyClass::to_dot() const {
  std::ostringstream os;
  os << "digraph rauzy {\n";
  for (std::size_t v = 0; v < size(); ++v) {
    os << "  v" << v << " [label=\"";
    const auto& im = vertices_[v].image();
    for (std::size_t i = 0; i < im.size(); ++i) os << (i ? " " : "") << im[i];
    os << "\"];\n";
  }
  for (std::size_t v = 0; v < size(); ++v)
    for (int c = 0; c < 2; ++c)
      os << "  v" << v << " -> v" << next_[v][c] << " [label=\"" << (c == 0 ? 'a' : 'b') << "\"];\n";
  os << "}\n";
  return os.str();
}

RauzyClass rauzy_class(const Permutation& p) { return RauzyClass(p); }

mpq_class nu(const IntMatrix& e) {
  if (!e.all_positive()) throw NonPositiveEntry("nu: matrix has a non-positive entry");
  mpq_class best = 0;
  for (int i = 0; i < e.dim(); ++i) {
    std::int64_t mx = e(i, 0), mn = e(i, 0);
    for (int j = 1; j < e.dim(); ++j) {
      mx = std::max(mx, e(i, j));
      mn = std::min(mn, e(i, j));
    }
    mpq_class r(static_cast<long>(mx), static_cast<unsigned long>(mn));
    r.canonicalize();
    if (r > best) best = r;
  }
  return best;
}

namespace {

using Rows = std::vector<std::uint64_t>;  // boolean matrix, bit j of row i

Rows bool_rows(const IntMatrix& a) {
  Rows r(a.dim(), 0);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a(i, j)) r[i] |= std::uint64_t{1} << j;
  return r;
}

Rows bool_mul(const Rows& p, const Rows& a) {
  Rows r(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t l = 0; l < p.size(); ++l)
      if (p[i] >> l & 1) r[i] |= a[l];
  return r;
}

bool bool_primitive(const Rows& a) {
  std::size_t m = a.size();
  std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  Rows cur = a;
  for (std::size_t k = 1; k <= m * m; ++k) {
    bool pos = true;
    for (auto r : cur) pos = pos && r == full;
    if (pos) return true;
    cur = bool_mul(cur, a);
  }
  return false;
}

}  // namespace

std::vector<RauzyPath> find_closed_primitive_paths(const Permutation& p, int max_len, std::size_t max_results) {
  std::vector<RauzyPath> out;
  if (max_len <= 0) return out;
  if (p.size() > 64) throw BadSize("path search supports m <= 64");
  RauzyClass cls(p);
  int start = cls.index_of(p);
  auto dist = cls.distances_to(start);
  std::vector<std::array<Rows, 2>> elem(cls.size());
  for (std::size_t v = 0; v < cls.size(); ++v)
    for (int c = 0; c < 2; ++c)
      elem[v][c] = bool_rows(elementary_matrix(c == 0 ? Label::a : Label::b, cls.vertices()[v]));

  std::vector<Label> labels;
  std::vector<Rows> prod{bool_rows(IntMatrix::identity(p.size()))};
  bool done = false;
  // Preorder DFS with a before b yields lexicographic order directly.
  auto dfs = [&](auto&& self, int v) -> void {
    if (done) return;
    if (!labels.empty() && v == start && bool_primitive(prod.back())) {
      out.emplace_back(p, labels);
      if (max_results && out.size() >= max_results) {
        done = true;
        return;
      }
    }
    int remaining = max_len - static_cast<int>(labels.size());
    if (remaining == 0) return;
    for (int c = 0; c < 2 && !done; ++c) {
      int w = cls.successor(v, c == 0 ? Label::a : Label::b);
      if (dist[w] < 0 || dist[w] > remaining - 1) continue;
      labels.push_back(c == 0 ? Label::a : Label::b);
      prod.push_back(bool_mul(prod.back(), elem[v][c]));
      self(self, w);
      prod.pop_back();
      labels.pop_back();
    }
  };
  dfs(dfs, start);
  std::sort(out.begin(), out.end(), [](const RauzyPath& x, const RauzyPath& y) {
    return x.label_string() < y.label_string();
  });
  return out;
}

IetPair::IetPair(BasisPtr b, std::vector<LinearForm> l, Permutation p, bool allow_zero)
    : basis(std::move(b)), lengths(std::move(l)), perm(std::move(p)) {
  if (static_cast<int>(lengths.size()) != perm.size()) throw ValidationError("IET: lengths/permutation size mismatch");
  if (!is_irreducible(perm)) throw ValidationError("IET: permutation is reducible: " + perm.to_string());
  for (const auto& f : lengths) {
    if (f.dim() != basis->dim()) throw ValidationError("IET: length form dimension mismatch");
    Sign s = basis->sign(f);
    if (s == Sign::Positive) continue;
    if (s == Sign::Zero && allow_zero) continue;
    if (s == Sign::Unknown) throw AmbiguousComparison("IET: length sign undetermined");
    throw ValidationError("IET: lengths must be strictly positive");
  }
}

LinearForm IetPair::total() const {
  LinearForm t = LinearForm::zero(basis->dim());
  for (const auto& f : lengths) t = t + f;
  return t;
}

IetPair make_iet(std::vector<CertifiedReal> lengths, Permutation p, std::vector<IntVector> relations, int max_bits) {
  std::size_t m = lengths.size();
  auto basis = std::make_shared<const LengthBasis>(std::move(lengths), std::move(relations), max_bits);
  std::vector<LinearForm> f;
  for (std::size_t i = 0; i < m; ++i) f.push_back(LinearForm::unit(m, i));
  return IetPair(basis, std::move(f), std::move(p));
}

InductionRecord induction_step(const IetPair& t) {
  int m = t.m();
  int k = t.perm.inverse(m);
  const LinearForm& lm = t.lengths[m - 1];
  const LinearForm& lk = t.lengths[k - 1];
  Sign s = t.basis->sign(lm - lk);
  if (s == Sign::Zero || s == Sign::Unknown)
    throw AmbiguousComparison("induction: lambda_m and lambda_k not separated (IDOC violation)");
  Label c = s == Sign::Negative ? Label::a : Label::b;
  std::vector<LinearForm> nl = t.lengths;
  if (c == Label::a) {
    // lambda'_k = lambda_k - lambda_m, lambda'_{k+1} = lambda_m, later ones shift right.
    nl[k - 1] = lk - lm;
    nl[k] = lm;
    for (int i = k + 1; i < m; ++i) nl[i] = t.lengths[i - 1];
  } else {
    nl[m - 1] = lm - lk;
  }
  InductionRecord r{c, elementary_matrix(c, t.perm), IetPair()};
  r.next.basis = t.basis;
  r.next.lengths = std::move(nl);
  r.next.perm = apply(c, t.perm);
  return r;
}

InductionRun induce(const IetPair& t, int steps) {
  InductionRun run{{}, IntMatrix::identity(t.m()), t};
  for (int i = 0; i < steps; ++i) {
    auto rec = induction_step(run.end);
    run.labels.push_back(rec.label);
    run.matrix = run.matrix * rec.matrix;
    run.end = std::move(rec.next);
  }
  return run;
}

}  // namespace ietk
