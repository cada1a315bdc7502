#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "maschke/algebra/int_matrix.hpp"
#include "maschke/ffield/field.hpp"
#include "maschke/grouprep/group.hpp"

namespace maschke::nslattice {

using ffield::FqElem;
using Vec4 = std::array<FqElem, 4>;
using Mat4 = std::array<Vec4, 4>;

// a line of P^3(F_q) by the reduced row echelon form of a 2x4 spanning matrix
struct LineFq {
  Vec4 u, v;

  static LineFq through(const Vec4& a, const Vec4& b);  // throws if a, b dependent
  std::array<std::uint64_t, 8> key() const;
  bool operator==(const LineFq& o) const { return key() == o.key(); }
  // p01, p02, p03, p12, p13, p23, first nonzero entry 1
  std::array<FqElem, 6> plucker() const;
  bool meets(const LineFq& o) const;
  LineFq frobenius() const;
  LineFq apply(const Mat4& g) const;
  std::string to_string() const;
};

struct KeyHash {
  std::size_t operator()(const std::array<std::uint64_t, 8>& k) const;
};

class LineSet {
 public:
  void add(const LineFq& l);
  bool contains(const LineFq& l) const { return index_.count(l.key()) != 0; }
  std::size_t index_of(const LineFq& l) const;  // throws if absent
  std::size_t size() const { return lines_.size(); }
  const std::vector<LineFq>& lines() const { return lines_; }
  const LineFq& operator[](std::size_t i) const { return lines_[i]; }

 private:
  std::vector<LineFq> lines_;
  std::unordered_map<std::array<std::uint64_t, 8>, std::size_t, KeyHash> index_;
};

FqElem eval_F(const Vec4& x);
// the binary octic F(s u + t v) vanishes identically
bool line_on_S(const LineFq& l);

// every line of P^3(F_q) on S, by pairing points of S(F_q) in echelon shape
LineSet enumerate_lines(const ffield::FieldPtr& ctx);

struct SeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// fixed embedding of the constants into F_q: sqrt(-1), sqrt(5), sqrt(-3)
struct Embedding {
  FqElem i, sqrt5, sqrt_m3;
};
Embedding embed_constants(const ffield::FieldPtr& ctx);  // throws SeedError

enum class Seed { l3, l5 };
LineFq seed_line(Seed s, const ffield::FieldPtr& ctx, const Embedding& e);
Mat4 reduce(const grouprep::GroupElement& g, const ffield::FieldPtr& ctx, const Embedding& e);

// closure of the seed under the reduced generators g1, g2
LineSet orbit_lines(Seed s, const ffield::FieldPtr& ctx);
LineSet orbit_lines(const LineFq& seed, const std::vector<Mat4>& generators);

// diagonal -6, off-diagonal 1 for meeting lines
algebra::IntMatrix gram_matrix(const LineSet& lines);

// permutation of the lines by x -> x^p
std::vector<std::size_t> frobenius_permutation(const LineSet& lines);

// trace of a permutation commuting with the Gram matrix on its column space,
// computed mod a 30-bit prime where the rank is preserved; the trace is an
// integer of absolute value at most the rank
std::int64_t trace_on_column_space(const algebra::IntMatrix& gram, const std::vector<std::size_t>& perm);

struct GaloisSample {
  std::uint64_t p;
  std::array<int, 3> signs;  // sigma_100, sigma_010, sigma_001 at p
  std::size_t lines;
  std::size_t rank;
  std::int64_t trace;
};

struct GaloisResult {
  std::vector<GaloisSample> samples;
  // indexed by (a, b, c) -> 4a + 2b + c
  std::array<std::int64_t, 8> multiplicity;
};

// smallest prime > 5 of each Frobenius class in Gal(Q(i, sqrt(-3), sqrt(5))/Q)
std::vector<std::uint64_t> signature_primes();
// lines realized over F_{p^2} for each sample prime
GaloisSample galois_sample(std::uint64_t p);
GaloisResult galois_multiplicities(const std::vector<std::uint64_t>& primes);

}  // namespace maschke::nslattice
