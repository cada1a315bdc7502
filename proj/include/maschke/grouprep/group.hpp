#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "maschke/algebra/rational.hpp"
#include "maschke/traceformula/traceformula.hpp"

namespace maschke::grouprep {

using algebra::BigRational;
using algebra::GaussRational;

using GaussMatrix = std::array<std::array<GaussRational, 4>, 4>;

// exact 4x4 matrix stored as (Gaussian integer matrix) / 2^shift with the
// smallest possible shift; this normal form doubles as the hash key
class GroupElement {
 public:
  GroupElement();  // identity
  // throws std::invalid_argument unless every denominator is a power of two
  explicit GroupElement(const GaussMatrix& m);

  static GroupElement identity() { return GroupElement(); }
  static GroupElement scalar_i();

  GaussRational entry(int i, int j) const;
  GaussMatrix matrix() const;
  GaussRational trace() const;
  GaussRational det() const;
  GroupElement operator*(const GroupElement& o) const;
  bool operator==(const GroupElement& o) const { return shift_ == o.shift_ && num_ == o.num_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  std::size_t hash() const;
  std::string to_string() const;

  // raw access: real and imaginary numerators, row-major
  const std::array<std::int64_t, 32>& numerators() const { return num_; }
  int shift() const { return shift_; }

 private:
  void normalize();
  std::array<std::int64_t, 32> num_{};
  int shift_ = 0;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

class GroupTable {
 public:
  // BFS closure; throws std::length_error past the bound
  static GroupTable generate(const std::vector<GroupElement>& generators, std::size_t bound = 1000000);

  std::size_t order() const { return elements_.size(); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::optional<std::size_t> find(const GroupElement& g) const;
  std::size_t index_of(const GroupElement& g) const;  // throws if absent
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::size_t>& generator_indices() const { return gens_; }

 private:
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, ElementHash> index_;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> inverse_;
};

struct ConjugacyClass {
  std::size_t representative;  // element index
  std::size_t size;
};

struct ClassPartition {
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;  // element index to class index
  std::vector<std::size_t> inverse_class;
};

// orbits of conjugation by the generators; exact, since conjugation by the
// generators generates the full inner automorphism action
ClassPartition conjugacy_classes(const GroupTable& table);

// eigenvalue multiplicities over Q(zeta_d), d divisible by 4
traceformula::MultSpec eig_mults(const GroupElement& g, unsigned d, unsigned n = 2, unsigned r = 2);

// named elements
GroupElement maschke_g1();
GroupElement maschke_g2();
// h_{abcd}: (a,b) the translation part, (c,d) the sign part
GroupElement heisenberg_generator(int a, int b, int c, int d);
GroupElement heisenberg_element(int a, int b, int c, int d);  // U_{(a,b),(c,d)}
std::vector<GroupElement> heisenberg_generators();  // h_0001, h_0010, h_0100, h_1000, c

// symplectic pairing on F_2^4 with vectors (x, x*), x = (a,b), x* = (c,d)
int symplectic_form(const std::array<int, 4>& v, const std::array<int, 4>& w);

}  // namespace maschke::grouprep
