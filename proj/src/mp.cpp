#include "resurgix/mp.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace resurgix {

namespace {
thread_local unsigned g_bits = 0;  // 0 = uninitialized

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
}

void apply_bits(unsigned bits) {
  Real::thread_default_precision(digits10_for_bits(bits));
}
}  // namespace

unsigned working_bits() {
  if (g_bits == 0) {
    g_bits = 128;
    apply_bits(g_bits);
  }
  return g_bits;
}

void set_working_bits(unsigned bits) {
  if (bits < 24) throw NumericError("precision below 24 bits refused");
  g_bits = bits;
  apply_bits(bits);
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(working_bits()) {
  set_working_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { set_working_bits(saved_); }

Real pi() {
  working_bits();
  Real r = 0;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real two_pi() { return 2 * pi(); }

Real real_eps() { return pow2(-static_cast<long>(working_bits())); }

Real pow2(long e) {
  working_bits();
  Real r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

Real to_real(const Rat& r) {
  return Real(boost::multiprecision::numerator(r).str()) /
         Real(boost::multiprecision::denominator(r).str());
}

Real to_real(const Int& n) { return Real(n.str()); }

unsigned working_digits10() { return digits10_for_bits(working_bits()); }

std::string to_string_full(const Real& x) { return x.str(working_digits10()); }

Real real_from_string(const std::string& s) {
  working_bits();
  return Real(s);
}

std::vector<Rat> bernoulli_upto(unsigned n) {
  // B_m via the standard recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0.
  std::vector<Rat> b(n + 1);
  b[0] = 1;
  std::vector<Int> binom(n + 2);
  for (unsigned m = 1; m <= n; ++m) {
    // binomials C(m+1, k)
    Int c = 1;
    Rat acc = 0;
    for (unsigned k = 0; k < m; ++k) {
      // c = C(m+1, k)
      if (k == 0)
        c = 1;
      else
        c = c * (m + 2 - k) / k;
      acc += Rat(c) * b[k];
    }
    b[m] = -acc / Rat(m + 1);
  }
  return b;
}

Rat zeta_neg(unsigned n) {
  if (n == 0) return Rat(-1, 2);
  auto b = bernoulli_upto(n + 1);
  return -b[n + 1] / Rat(n + 1);
}

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned worker_threads() {
  unsigned t = g_threads.load();
  if (t == 0) {
    t = std::thread::hardware_concurrency();
    if (t == 0 || t > 8) t = 8;
    g_threads.store(t);
  }
  return t;
}

void set_worker_threads(unsigned n) { g_threads.store(n == 0 ? 1 : n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  unsigned nt = worker_threads();
  if (n == 0) return;
  if (nt <= 1 || n < 4) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned bits = working_bits();
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&]() {
    set_working_bits(bits);
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(nt, n));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace resurgix
