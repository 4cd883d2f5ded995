#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace divcor {

// Smallest-prime-factor table for 2..limit. spf(p) = p for primes, spf(n) is
// the least prime dividing n, so factoring any n <= limit takes O(log n).
class FactorSieve {
 public:
  explicit FactorSieve(uint64_t limit);
  uint64_t limit() const { return limit_; }
  uint32_t spf(uint64_t n) const;

 private:
  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

struct Factor {
  uint64_t p;
  uint32_t e;
};

// A u64 has at most 15 distinct prime factors, so factorizations fit in a
// fixed array and never allocate.
struct Factorization {
  std::array<Factor, 15> f{};
  int count = 0;
  const Factor* begin() const { return f.data(); }
  const Factor* end() const { return f.data() + count; }
};

Factorization factorize(uint64_t n);                          // trial division
Factorization factorize(uint64_t n, const FactorSieve& sv);   // n <= sv.limit()

int mobius(uint64_t n);
int mobius(const Factorization& f);
uint64_t euler_phi(uint64_t n);
uint64_t euler_phi(const Factorization& f);

// Inverse of a modulo c (c >= 1). Throws validation_error if gcd(a, c) != 1.
uint64_t mod_inverse(int64_t a, uint64_t c);

// Ramanujan sum r_d(n) = mu(d/g) phi(d) / phi(d/g) with g = gcd(d, n).
int64_t ramanujan_sum(uint64_t d, uint64_t n);
int64_t ramanujan_sum(uint64_t d, uint64_t n, const FactorSieve& sv);

// Direct exponential sum over primitive residues b mod d, rounded to the
// nearest integer. Test oracle for ramanujan_sum; throws numeric_error when
// the rounding residue exceeds 1e-6. Intended for d <= 1e6.
int64_t ramanujan_sum_bruteforce(uint64_t d, uint64_t n);

// Kloosterman sum S(a, b; c) = sum over units x mod c of
// cos(2 pi (a x + b xbar) / c). The sine parts cancel under x <-> -x, so the
// value is real.
double kloosterman(int64_t a, int64_t b, uint64_t c);

// Precomputed unit/inverse/cosine tables for one modulus; evaluates many
// (a, b) pairs cheaply.
class KloostermanPlan {
 public:
  explicit KloostermanPlan(uint64_t c);
  uint64_t modulus() const { return c_; }
  size_t unit_count() const { return units_.size(); }
  double operator()(int64_t a, int64_t b) const;
  // Sine-side companion sum (should vanish to rounding); used by tests.
  double imag_part(int64_t a, int64_t b) const;

 private:
  uint64_t c_;
  std::vector<uint32_t> units_;
  std::vector<uint32_t> inv_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

// Logarithmic divisor moments sum_{d | n} (log d)^j / d for j = 0, 1, 2.
struct LogMoments {
  double s0, s1, s2;
};
double sigma_log_moment(int j, uint64_t n);
LogMoments sigma_log_moments(uint64_t n);
LogMoments sigma_log_moments(const Factorization& f);

// Values of the k-fold divisor function tau_k on an integer window [lo, hi].
// Entries are 32-bit; construction fails with numeric_error if a value does
// not fit.
struct DivisorWindow {
  uint32_t k = 0;
  uint64_t lo = 0, hi = 0;
  std::vector<uint32_t> values;
  uint32_t at(uint64_t n) const { return values[static_cast<size_t>(n - lo)]; }
};

struct TauWindowOptions {
  // Windows with hi at or below this use one smallest-prime-factor sieve over
  // [1, hi]; larger windows switch to a segmented sieve by primes <= sqrt(hi).
  uint64_t whole_range_threshold = 100000000ULL;
};

DivisorWindow tau_k_window(uint32_t k, uint64_t lo, uint64_t hi,
                           const TauWindowOptions& opts = {});

// tau_k at a single point, by trial-division factorization.
uint64_t tau_k_of(uint32_t k, uint64_t n);
uint64_t tau_k_of(uint32_t k, const Factorization& f);

}  // namespace divcor
