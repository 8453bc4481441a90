#pragma once

#include <map>
#include <string>
#include <vector>

#include "ietk/int_matrix.hpp"
#include "ietk/length_basis.hpp"
#include "ietk/perm.hpp"

namespace ietk {

IntMatrix elementary_matrix(Label c, const Permutation& p);

struct RauzyPath {
  Permutation start;
  std::vector<Label> labels;

  RauzyPath() = default;
  RauzyPath(Permutation s, std::vector<Label> l) : start(std::move(s)), labels(std::move(l)) {}
  RauzyPath(Permutation s, const std::string& labels);
  std::size_t size() const { return labels.size(); }
  std::string label_string() const;
  RauzyPath repeated(int times) const;
};

struct ComposedPath {
  IntMatrix matrix;
  Permutation end;
  std::vector<Permutation> visited;  // pi_0 .. pi_n
};

// A(c_1, pi_0) ... A(c_n, pi_{n-1}) and the end permutation.
ComposedPath compose_path(const RauzyPath& path);

class RauzyClass {
 public:
  explicit RauzyClass(const Permutation& root);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Permutation>& vertices() const { return vertices_; }
  int index_of(const Permutation& p) const;  // -1 if absent
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
  int successor(int v, Label c) const { return next_[v][c == Label::a ? 0 : 1]; }

  // Shortest label sequence from one vertex to another (a before b on ties).
  std::vector<Label> shortest_path(const Permutation& from, const Permutation& to) const;
  // BFS distance from every vertex to the target vertex along directed edges.
  std::vector<int> distances_to(int target) const;

  std::string to_dot() const;

 private:
  std::vector<Permutation> vertices_;
  std::map<Permutation, int> index_;
  std::vector<std::array<int, 2>> next_;
};

RauzyClass rauzy_class(const Permutation& p);

// max_{i,j,k} E_ij / E_ik for a strictly positive matrix.
mpq_class nu(const IntMatrix& e);

// Closed paths at p of length 1..max_len whose composed matrix is primitive,
// in lexicographic label order. max_results = 0 means no cap; with a cap the
// lexicographically first paths are returned.
std::vector<RauzyPath> find_closed_primitive_paths(const Permutation& p, int max_len,
                                                   std::size_t max_results = 0);

// An IET as data: lengths are forms over a shared basis.
struct IetPair {
  BasisPtr basis;
  std::vector<LinearForm> lengths;
  Permutation perm;

  IetPair() = default;
  IetPair(BasisPtr b, std::vector<LinearForm> l, Permutation p, bool allow_zero = false);

  int m() const { return perm.size(); }
  LinearForm total() const;
};

// Lengths given directly by the basis values: lambda_i = basis_i.
IetPair make_iet(std::vector<CertifiedReal> lengths, Permutation p, std::vector<IntVector> relations = {},
                 int max_bits = kDefaultMaxBits);

struct InductionRecord {
  Label label;
  IntMatrix matrix;
  IetPair next;
};

InductionRecord induction_step(const IetPair& t);

struct InductionRun {
  std::vector<Label> labels;
  IntMatrix matrix;  // A^(n)
  IetPair end;
};

InductionRun induce(const IetPair& t, int steps);

}  // namespace ietk
