#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace resurgix {

// Arbitrary-precision real. Precision (binary digits) is owned by a
// thread-local context; freshly constructed values and operation results
// pick up the current working precision.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Working precision in bits for the calling thread. Default 128.
unsigned working_bits();
void set_working_bits(unsigned bits);

// RAII guard: raises/sets working precision for a scope.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;
  ~PrecisionGuard();

 private:
  unsigned saved_;
};

// Constants at the current working precision.
Real pi();
Real two_pi();
Real real_eps();          // 2^{-working_bits}
Real pow2(long e);        // 2^e

Real to_real(const Rat& r);
Real to_real(const Int& n);

// Decimal digits that faithfully represent the working precision.
unsigned working_digits10();

// Full-precision decimal string (round-trips at the same precision).
std::string to_string_full(const Real& x);

// Parses a decimal string at working precision.
Real real_from_string(const std::string& s);

// Exact Bernoulli numbers B_0..B_n (B_1 = -1/2 convention).
std::vector<Rat> bernoulli_upto(unsigned n);

// zeta(-n) for n >= 1, exact: -B_{n+1}/(n+1). zeta(0) = -1/2.
Rat zeta_neg(unsigned n);

// Deterministic parallel map: applies fn(i) for i in [0, n) on a small
// thread pool; results are slotted by index. Each worker inherits the
// caller's working precision. Falls back to serial for small n.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Thread count used by parallel_for (settable once by the CLI).
unsigned worker_threads();
void set_worker_threads(unsigned n);

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace resurgix
