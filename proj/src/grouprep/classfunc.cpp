#include "maschke/grouprep/classfunc.hpp"

#include <future>
#include <stdexcept>

namespace maschke::grouprep {

GroupDataPtr make_group_data(const std::vector<GroupElement>& generators) {
  auto data = std::make_shared<GroupData>();
  data->table = GroupTable::generate(generators);
  data->classes = conjugacy_classes(data->table);
  return data;
}

ClassFunction::ClassFunction(GroupDataPtr group, std::vector<BigRational> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->classes.classes.size()) throw std::invalid_argument("one value per class required");
}

ClassFunction ClassFunction::trivial(GroupDataPtr group) {
  std::vector<BigRational> v(group->classes.classes.size(), BigRational(1));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group_ != o.group_) throw std::invalid_argument("class functions on different groups");
  std::vector<BigRational> v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
  return ClassFunction(group_, std::move(v));
}

BigRational class_inner(const ClassFunction& t1, const ClassFunction& t2) {
  if (t1.group() != t2.group()) throw std::invalid_argument("class functions on different groups");
  const auto& part = t1.group()->classes;
  BigRational acc = 0;
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    acc += BigRational(static_cast<unsigned long>(part.classes[c].size)) * t1.at_class(c) *
           t2.at_class(part.inverse_class[c]);
  return BigRational(acc / BigRational(static_cast<unsigned long>(t1.group()->table.order())));
}

TraceFunctions trace_class_functions(const GroupDataPtr& group, unsigned workers) {
  const auto& classes = group->classes.classes;
  const std::size_t n = classes.size();
  std::vector<BigRational> ts(n), tx(n);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      auto spec = eig_mults(group->table.element(classes[c].representative), 8, 2, 2);
      ts[c] = traceformula::chenevert_hypersurface(spec);
      tx[c] = traceformula::chenevert_cover(spec);
    }
  };
  if (workers <= 1) {
    work(0, n);
  } else {
    // disjoint class ranges, results written by index
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t b = 0; b < n; b += chunk) jobs.push_back(std::async(std::launch::async, work, b, std::min(n, b + chunk)));
    for (auto& j : jobs) j.get();
  }
  return {ClassFunction(group, ts), ClassFunction(group, tx)};
}

ClassFunction determinant_character(const GroupDataPtr& group) {
  std::vector<BigRational> v;
  for (const auto& c : group->classes.classes) {
    GaussRational d = group->table.element(c.representative).det();
    if (sgn(d.im) != 0 || (d.re != 1 && d.re != -1)) throw std::domain_error("determinant is not +-1 valued");
    v.push_back(d.re);
  }
  return ClassFunction(group, std::move(v));
}

IsotypicResult h_isotypic_dims(const ClassFunction& t_X) {
  const auto& table = t_X.group()->table;
  IsotypicResult res;
  res.total = 0;
  // H = { i^s U_{abcd} }, labelled by (a,b,c,d) in F_2^4
  std::vector<std::pair<std::array<int, 4>, BigRational>> samples;
  GroupElement scalar = GroupElement::scalar_i();
  for (int bits = 0; bits < 16; ++bits) {
    std::array<int, 4> v = {(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
    GroupElement u = heisenberg_element(v[0], v[1], v[2], v[3]);
    for (int s = 0; s < 4; ++s) {
      auto idx = table.find(u);
      if (!idx) throw std::domain_error("Heisenberg element outside the group");
      samples.emplace_back(v, t_X.at_element(*idx));
      u = u * scalar;
    }
  }
  for (int wbits = 0; wbits < 16; ++wbits) {
    std::array<int, 4> w = {(wbits >> 3) & 1, (wbits >> 2) & 1, (wbits >> 1) & 1, wbits & 1};
    BigRational acc = 0;
    for (const auto& [v, val] : samples) {
      int dot = (w[0] * v[0] + w[1] * v[1] + w[2] * v[2] + w[3] * v[3]) & 1;
      acc += dot ? BigRational(-val) : val;
    }
    BigRational dim = acc / 64;
    if (!algebra::is_integral(dim)) throw std::domain_error("non-integral isotypic dimension");
    res.dims[w] = dim;
    res.total += dim;
  }
  return res;
}

}  // namespace maschke::grouprep
