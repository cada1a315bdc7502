#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maschke/ffield/field.hpp"
#include "maschke/ffield/zech.hpp"

namespace maschke::counting {

enum class VarietyId { S, Sbar, X, U, Utilde, W, Wtilde, Z, Y, Cplus, Cminus, Ctilde, C3, Cbar, C7 };
enum class Ambient { P3, P4, P5, P1xP1, WeightedDoubleCover, SuperellipticOverBase };
enum class Kernel { naive, structured };

struct VarietySpec {
  VarietyId id;
  std::string name;
  Ambient ambient;
  std::string equation;
  bool resolved;  // resolved models are handled by lefschetz corrections only
};

const VarietySpec& variety_spec(VarietyId id);
const std::vector<VarietyId>& all_varieties();
std::optional<VarietyId> parse_variety(const std::string& name);
std::string to_string(VarietyId id);
std::string to_string(Kernel k);
std::optional<Kernel> parse_kernel(const std::string& s);

struct CountRecord {
  VarietyId id;
  std::uint32_t p;
  unsigned k;
  std::uint64_t q;
  std::int64_t count;
  Kernel kernel;
  double ms;
};

// exact #V(F_q) on the singular model; throws std::invalid_argument for p <= 5
// or for the resolved ids Utilde, Wtilde
CountRecord count_points(VarietyId id, const ffield::FieldPtr& ctx, Kernel kernel = Kernel::structured,
                         unsigned workers = 1);

// S by quartic-in-x0^2 root counting over the P^2 of (x1:x2:x3), k <= 2
CountRecord structured_kernel_S(const ffield::FieldPtr& ctx);

// (#C+(F_p), #C~+(F_p))
std::pair<std::int64_t, std::int64_t> count_curve_pair(std::uint32_t p);

// #X by enumerating (x, w) != 0 in F_q^5 with w^2 = F(x), divided by q - 1
std::int64_t count_X_weighted_oracle(const ffield::FieldPtr& ctx);

// fiber product {s^2 = Q^2 - 4P^2, t^2 = A} over the y-line, by direct
// enumeration of (y, s, t); genus 13 with quotients C3, Cbar, C7
std::int64_t count_C13(const ffield::FieldPtr& ctx);

std::uint64_t projective_size(std::uint64_t q, unsigned n);

namespace detail {

using E = ffield::ZechField::E;

// direct evaluation of the defining polynomials, arguments in log form
class Evaluator {
 public:
  explicit Evaluator(const ffield::ZechField& f);
  const ffield::ZechField& field() const { return f_; }
  E F(const E x[4]) const;
  E Fbar(const E s[4]) const;
  E W(const E y[4]) const;
  E GI(const E y[5]) const;
  E GM(const E y[5]) const;
  E c(int v) const;  // small integer constants

 private:
  const ffield::ZechField& f_;
  std::vector<E> small_;  // v + 200 for |v| <= 200
};

std::int64_t naive_count(VarietyId id, const ffield::ZechField& f);
std::int64_t structured_count(VarietyId id, const ffield::ZechField& f, unsigned workers);
std::int64_t curve_count(VarietyId id, const ffield::ZechField& f, bool naive);

}  // namespace detail

}  // namespace maschke::counting

#include <iosfwd>

namespace maschke::counting {

struct SweepTask {
  VarietyId id;
  std::uint32_t p;
  unsigned k;
};

struct SweepOptions {
  Kernel kernel = Kernel::structured;
  unsigned workers = 1;
  std::string checkpoint;  // empty: no checkpointing
};

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// runs every task once, in a pool of workers; results come back in task order.
// tasks already recorded in the checkpoint are not recounted, and every
// finished task is appended to it
std::vector<CountRecord> run_sweep(const std::vector<SweepTask>& tasks, const SweepOptions& opt);

void write_counts_csv(std::ostream& out, const std::vector<CountRecord>& rows, bool with_timing = true);

}  // namespace maschke::counting
