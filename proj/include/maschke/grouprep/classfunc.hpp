#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "maschke/grouprep/group.hpp"

namespace maschke::grouprep {

// a finite group with its class partition, shared by class functions
struct GroupData {
  GroupTable table;
  ClassPartition classes;
};

using GroupDataPtr = std::shared_ptr<const GroupData>;

GroupDataPtr make_group_data(const std::vector<GroupElement>& generators);

class ClassFunction {
 public:
  ClassFunction(GroupDataPtr group, std::vector<BigRational> values);
  static ClassFunction trivial(GroupDataPtr group);

  const GroupDataPtr& group() const { return group_; }
  const std::vector<BigRational>& values() const { return values_; }
  const BigRational& at_class(std::size_t c) const { return values_[c]; }
  const BigRational& at_element(std::size_t e) const { return values_[group_->classes.class_of[e]]; }
  ClassFunction operator+(const ClassFunction& o) const;

 private:
  GroupDataPtr group_;
  std::vector<BigRational> values_;
};

// (1/|G|) sum_g t1(g) t2(g^-1), evaluated class by class
BigRational class_inner(const ClassFunction& t1, const ClassFunction& t2);

struct TraceFunctions {
  ClassFunction t_S;  // trace on primitive H^2 of the octic surface
  ClassFunction t_X;  // trace on H^3 of the double cover
};

// per-class evaluation of the two trace formulas, d = 8, n = 2, r = 2
TraceFunctions trace_class_functions(const GroupDataPtr& group, unsigned workers = 1);

// det as a class function; throws std::domain_error if it is not +-1 valued
ClassFunction determinant_character(const GroupDataPtr& group);

// characters of H factoring through H/mu_4 = (Z/2)^4, indexed by w in F_2^4;
// dims[w] = (1/64) sum_h chi_w(h) t(h) for t given on elements of H
struct IsotypicResult {
  std::map<std::array<int, 4>, BigRational> dims;
  BigRational total;
};

// restricts t_X to the Heisenberg subgroup inside the group of t_X
IsotypicResult h_isotypic_dims(const ClassFunction& t_X);

}  // namespace maschke::grouprep
