#include "maschke/grouprep/group.hpp"

#include <deque>
#include <stdexcept>

#include "maschke/algebra/int_matrix.hpp"
#include "maschke/algebra/quotient.hpp"

namespace maschke::grouprep {

using algebra::BigInt;
using algebra::QPoly;
using algebra::QuotElem;

namespace {

int log2_exact(const BigInt& den) {
  if (sgn(den) <= 0) throw std::invalid_argument("bad denominator");
  int k = 0;
  BigInt d = den;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++k;
  }
  if (d != 1) throw std::invalid_argument("matrix entry denominator is not a power of two");
  return k;
}

std::int64_t scaled(const BigRational& v, int shift) {
  BigInt n = v.get_num() * (BigInt(1) << shift) / v.get_den();
  return algebra::to_int64(n);
}

}  // namespace

GroupElement::GroupElement() {
  for (int i = 0; i < 4; ++i) num_[8 * i + 2 * i] = 1;
}

GroupElement::GroupElement(const GaussMatrix& m) {
  int shift = 0;
  for (const auto& row : m)
    for (const auto& e : row) shift = std::max({shift, log2_exact(e.re.get_den()), log2_exact(e.im.get_den())});
  shift_ = shift;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      num_[8 * i + 2 * j] = scaled(m[i][j].re, shift);
      num_[8 * i + 2 * j + 1] = scaled(m[i][j].im, shift);
    }
  normalize();
}

GroupElement GroupElement::scalar_i() {
  GroupElement g;
  g.num_.fill(0);
  for (int i = 0; i < 4; ++i) g.num_[8 * i + 2 * i + 1] = 1;
  return g;
}

void GroupElement::normalize() {
  while (shift_ > 0) {
    for (auto v : num_)
      if (v % 2 != 0) return;
    for (auto& v : num_) v /= 2;
    --shift_;
  }
}

GaussRational GroupElement::entry(int i, int j) const {
  BigInt den = BigInt(1) << shift_;
  return {algebra::make_rational(BigInt(static_cast<long>(num_[8 * i + 2 * j])), den),
          algebra::make_rational(BigInt(static_cast<long>(num_[8 * i + 2 * j + 1])), den)};
}

GaussMatrix GroupElement::matrix() const {
  GaussMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = entry(i, j);
  return m;
}

GaussRational GroupElement::trace() const {
  GaussRational t;
  for (int i = 0; i < 4; ++i) t += entry(i, i);
  return t;
}

GaussRational GroupElement::det() const {
  // Gaussian elimination over Q(i)
  GaussMatrix a = matrix();
  GaussRational d(1);
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    while (piv < 4 && a[piv][c].is_zero()) ++piv;
    if (piv == 4) return GaussRational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    GaussRational inv = a[c][c].inverse();
    for (int r = c + 1; r < 4; ++r) {
      GaussRational f = a[r][c] * inv;
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  GroupElement r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t re = 0, im = 0;
      for (int k = 0; k < 4; ++k) {
        std::int64_t ar = num_[8 * i + 2 * k], ai = num_[8 * i + 2 * k + 1];
        std::int64_t br = o.num_[8 * k + 2 * j], bi = o.num_[8 * k + 2 * j + 1];
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      r.num_[8 * i + 2 * j] = re;
      r.num_[8 * i + 2 * j + 1] = im;
    }
  r.shift_ = shift_ + o.shift_;
  r.normalize();
  return r;
}

std::size_t GroupElement::hash() const {
  std::size_t h = static_cast<std::size_t>(shift_) * 0x9e3779b97f4a7c15ull;
  for (auto v : num_) h = (h ^ static_cast<std::size_t>(v + 0x51)) * 0x100000001b3ull;
  return h;
}

std::string GroupElement::to_string() const {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 4; ++j) s += (j ? ", " : "") + algebra::to_string(entry(i, j));
  }
  return s + "]";
}

GroupTable GroupTable::generate(const std::vector<GroupElement>& generators, std::size_t bound) {
  GroupTable t;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  t.elements_.push_back(GroupElement::identity());
  t.index_.emplace(GroupElement::identity(), 0);
  parent.push_back(0);
  via.push_back(0);
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      GroupElement x = t.elements_[head] * generators[g];
      if (t.index_.count(x)) continue;
      if (t.elements_.size() >= bound) throw std::length_error("group closure exceeded bound");
      t.index_.emplace(x, t.elements_.size());
      t.elements_.push_back(x);
      parent.push_back(head);
      via.push_back(g);
    }
  }
  for (const auto& g : generators) t.gens_.push_back(t.index_of(g));

  // generator inverses by powering, then inv(parent * g) = inv(g) * inv(parent)
  std::vector<GroupElement> gen_inv;
  for (const auto& g : generators) {
    GroupElement prev = GroupElement::identity();
    GroupElement cur = g;
    while (cur != GroupElement::identity()) {
      prev = cur;
      cur = cur * g;
    }
    gen_inv.push_back(prev);
  }
  t.inverse_.assign(t.elements_.size(), 0);
  for (std::size_t e = 1; e < t.elements_.size(); ++e)
    t.inverse_[e] = t.index_of(gen_inv[via[e]] * t.elements_[t.inverse_[parent[e]]]);
  return t;
}

std::optional<std::size_t> GroupTable::find(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::index_of(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("element not in group: " + g.to_string());
  return it->second;
}

std::size_t GroupTable::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements_[a] * elements_[b]);
}

ClassPartition conjugacy_classes(const GroupTable& table) {
  const std::size_t n = table.order();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  ClassPartition part;
  part.class_of.assign(n, none);
  const auto& gens = table.generator_indices();
  for (std::size_t x = 0; x < n; ++x) {
    if (part.class_of[x] != none) continue;
    const std::size_t cls = part.classes.size();
    std::size_t size = 0;
    std::deque<std::size_t> queue{x};
    part.class_of[x] = cls;
    while (!queue.empty()) {
      std::size_t y = queue.front();
      queue.pop_front();
      ++size;
      for (std::size_t g : gens) {
        std::size_t z = table.multiply(table.multiply(g, y), table.inverse(g));
        if (part.class_of[z] == none) {
          part.class_of[z] = cls;
          queue.push_back(z);
        }
      }
    }
    part.classes.push_back({x, size});
  }
  for (const auto& c : part.classes) part.inverse_class.push_back(part.class_of[table.inverse(c.representative)]);
  return part;
}

namespace {

QPoly cyclotomic(unsigned d) {
  std::vector<BigRational> c(d + 1, BigRational(0));
  c[0] = -1;
  c[d] = 1;
  QPoly f(c);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) f = QPoly::divrem(f, cyclotomic(e)).first;
  return f;
}

}  // namespace

traceformula::MultSpec eig_mults(const GroupElement& g, unsigned d, unsigned n, unsigned r) {
  if (d % 4 != 0) throw std::invalid_argument("eig_mults needs 4 | d so that i lies in Q(zeta_d)");
  auto ring = algebra::make_quot_ring(cyclotomic(d), "z");
  QuotElem zeta = QuotElem::generator(ring);
  QuotElem iu = QuotElem(ring, QPoly::monomial(BigRational(1), d / 4));
  std::array<std::array<QuotElem, 4>, 4> m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      GaussRational e = g.entry(a, b);
      m[a][b] = QuotElem(ring, QPoly::constant(e.re)) + QuotElem(ring, QPoly::constant(e.im)) * iu;
    }
  traceformula::MultSpec spec;
  spec.d = d;
  spec.n = n;
  spec.r = r;
  spec.mults.assign(d, 0);
  QuotElem zk = QuotElem(ring, QPoly::constant(BigRational(1)));
  for (unsigned k = 0; k < d; ++k) {
    std::vector<std::vector<QuotElem>> rows(4, std::vector<QuotElem>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) rows[a][b] = a == b ? m[a][b] - zk : m[a][b];
    spec.mults[k] = 4 - static_cast<unsigned>(algebra::field_rank(rows));
    zk = zk * zeta;
  }
  return spec;
}

namespace {

GroupElement from_rows(const std::array<std::array<std::pair<long, long>, 4>, 4>& rows, long den) {
  GaussMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m[i][j] = GaussRational(algebra::make_rational(rows[i][j].first, den),
                              algebra::make_rational(rows[i][j].second, den));
  return GroupElement(m);
}

}  // namespace

GroupElement maschke_g1() {
  return from_rows({{{{{1, 0}, {0, 0}, {0, 0}, {0, 0}}},
                     {{{0, 0}, {1, 0}, {0, 0}, {0, 0}}},
                     {{{0, 0}, {0, 0}, {0, 1}, {0, 0}}},
                     {{{0, 0}, {0, 0}, {0, 0}, {0, 1}}}}},
                   1);
}

GroupElement maschke_g2() {
  return from_rows({{{{{-1, 0}, {0, -1}, {0, -1}, {-1, 0}}},
                     {{{0, 1}, {1, 0}, {-1, 0}, {0, -1}}},
                     {{{0, 1}, {-1, 0}, {1, 0}, {0, -1}}},
                     {{{1, 0}, {0, -1}, {0, -1}, {1, 0}}}}},
                   2);
}

GroupElement heisenberg_element(int a, int b, int c, int d) {
  // basis index u = 2*u1 + u2; translate by (a,b), then sign (-1)^(c*u1 + d*u2)
  GaussMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = GaussRational(0);
  for (int u = 0; u < 4; ++u) {
    int u1 = u >> 1, u2 = u & 1;
    int src = ((u1 ^ a) << 1) | (u2 ^ b);
    int sign = ((c & u1) ^ (d & u2)) ? -1 : 1;
    // new x_u = sign * x_src
    m[u][src] = GaussRational(sign);
  }
  return GroupElement(m);
}

GroupElement heisenberg_generator(int a, int b, int c, int d) { return heisenberg_element(a, b, c, d); }

std::vector<GroupElement> heisenberg_generators() {
  return {heisenberg_element(0, 0, 0, 1), heisenberg_element(0, 0, 1, 0), heisenberg_element(0, 1, 0, 0),
          heisenberg_element(1, 0, 0, 0), GroupElement::scalar_i()};
}

int symplectic_form(const std::array<int, 4>& v, const std::array<int, 4>& w) {
  // v = (x, x*), w = (y, y*): E = y*.x + x*.y mod 2
  return ((w[2] * v[0] + w[3] * v[1] + v[2] * w[0] + v[3] * w[1]) & 1);
}

}  // namespace maschke::grouprep
