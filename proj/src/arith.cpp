#include "divcor/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "divcor/errors.hpp"

namespace divcor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// C(n, r) in u64 with overflow detection; the denominator always cancels
// because the running value C(n-r+i, i) is an integer.
uint64_t binomial_checked(uint64_t n, uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  uint64_t c = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    uint64_t num = n - r + i;
    uint64_t den = i;
    uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    g = std::gcd(c, den);
    c /= g;
    den /= g;  // den == 1 now
    uint64_t out;
    if (__builtin_mul_overflow(c, num, &out))
      throw numeric_error("binomial overflow in tau_k");
    c = out;
  }
  return c;
}

}  // namespace

FactorSieve::FactorSieve(uint64_t limit) : limit_(limit) {
  if (limit < 2) throw validation_error("FactorSieve: limit must be >= 2");
  if (limit > 0xFFFFFFFFULL)
    throw validation_error("FactorSieve: limit must fit in 32 bits");
  spf_.assign(static_cast<size_t>(limit) + 1, 0);
  std::vector<uint32_t> primes;
  primes.reserve(static_cast<size_t>(limit > 100 ? limit / 10 : 16));
  for (uint64_t i = 2; i <= limit; ++i) {
    if (spf_[static_cast<size_t>(i)] == 0) {
      spf_[static_cast<size_t>(i)] = static_cast<uint32_t>(i);
      primes.push_back(static_cast<uint32_t>(i));
    }
    uint32_t s = spf_[static_cast<size_t>(i)];
    for (uint32_t p : primes) {
      if (p > s || i * p > limit) break;
      spf_[static_cast<size_t>(i * p)] = p;
    }
  }
}

uint32_t FactorSieve::spf(uint64_t n) const {
  if (n < 2 || n > limit_)
    throw validation_error("FactorSieve::spf: n out of range");
  return spf_[static_cast<size_t>(n)];
}

Factorization factorize(uint64_t n) {
  if (n == 0) throw validation_error("factorize: n must be >= 1");
  Factorization out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.f[out.count++] = {p, e};
    }
  }
  if (n > 1) out.f[out.count++] = {n, 1};
  return out;
}

Factorization factorize(uint64_t n, const FactorSieve& sv) {
  if (n == 0) throw validation_error("factorize: n must be >= 1");
  if (n > sv.limit()) throw validation_error("factorize: n exceeds sieve limit");
  Factorization out;
  while (n > 1) {
    uint64_t p = sv.spf(n);
    uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.f[out.count++] = {p, e};
  }
  return out;
}

int mobius(const Factorization& f) {
  int m = 1;
  for (const auto& pe : f) {
    if (pe.e >= 2) return 0;
    m = -m;
  }
  return m;
}

int mobius(uint64_t n) { return mobius(factorize(n)); }

uint64_t euler_phi(const Factorization& f) {
  uint64_t r = 1;
  for (const auto& pe : f) {
    r *= pe.p - 1;
    for (uint32_t i = 1; i < pe.e; ++i) r *= pe.p;
  }
  return r;
}

uint64_t euler_phi(uint64_t n) {
  if (n == 0) throw validation_error("euler_phi: n must be >= 1");
  return euler_phi(factorize(n));
}

uint64_t mod_inverse(int64_t a, uint64_t c) {
  if (c == 0) throw validation_error("mod_inverse: modulus must be >= 1");
  if (c == 1) return 0;
  int64_t m = static_cast<int64_t>(c);
  int64_t r0 = m, r1 = ((a % m) + m) % m;
  int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw validation_error("mod_inverse: arguments not coprime");
  return static_cast<uint64_t>(((t0 % m) + m) % m);
}

namespace {

int64_t ramanujan_from_parts(uint64_t d, uint64_t n, const Factorization& fd,
                             const Factorization& fm) {
  (void)d;
  (void)n;
  int mu = mobius(fm);
  if (mu == 0) return 0;
  uint64_t q = euler_phi(fd) / euler_phi(fm);  // exact: m | d forces phi(m) | phi(d)
  return mu * static_cast<int64_t>(q);
}

}  // namespace

int64_t ramanujan_sum(uint64_t d, uint64_t n) {
  if (d == 0 || n == 0) throw validation_error("ramanujan_sum: d, n must be >= 1");
  uint64_t g = std::gcd(d, n);
  return ramanujan_from_parts(d, n, factorize(d), factorize(d / g));
}

int64_t ramanujan_sum(uint64_t d, uint64_t n, const FactorSieve& sv) {
  if (d == 0 || n == 0) throw validation_error("ramanujan_sum: d, n must be >= 1");
  if (d == 1) return 1;
  uint64_t g = std::gcd(d, n);
  uint64_t m = d / g;
  Factorization fd = factorize(d, sv);
  Factorization fm = m == 1 ? Factorization{} : factorize(m, sv);
  return ramanujan_from_parts(d, n, fd, fm);
}

int64_t ramanujan_sum_bruteforce(uint64_t d, uint64_t n) {
  if (d == 0 || n == 0)
    throw validation_error("ramanujan_sum_bruteforce: d, n must be >= 1");
  if (d > 1000000)
    throw validation_error("ramanujan_sum_bruteforce: d above oracle scale");
  if (d == 1) return 1;
  double s = 0.0;
  uint64_t nr = n % d;
  for (uint64_t b = 1; b < d; ++b) {
    if (std::gcd(b, d) != 1) continue;
    uint64_t t = (nr * b) % d;
    s += std::cos(kTwoPi * static_cast<double>(t) / static_cast<double>(d));
  }
  double rounded = std::nearbyint(s);
  if (std::abs(s - rounded) > 1e-6)
    throw numeric_error("ramanujan_sum_bruteforce: rounding residue " +
                        std::to_string(std::abs(s - rounded)));
  return static_cast<int64_t>(rounded);
}

KloostermanPlan::KloostermanPlan(uint64_t c) : c_(c) {
  if (c == 0) throw validation_error("KloostermanPlan: c must be >= 1");
  if (c > 1000000000ULL)
    throw validation_error("KloostermanPlan: c above supported range");
  cos_.resize(static_cast<size_t>(c));
  sin_.resize(static_cast<size_t>(c));
  for (uint64_t t = 0; t < c; ++t) {
    double ang = kTwoPi * static_cast<double>(t) / static_cast<double>(c);
    cos_[static_cast<size_t>(t)] = std::cos(ang);
    sin_[static_cast<size_t>(t)] = std::sin(ang);
  }
  if (c == 1) {
    units_.push_back(0);
    inv_.push_back(0);
    return;
  }
  for (uint64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    units_.push_back(static_cast<uint32_t>(x));
    inv_.push_back(static_cast<uint32_t>(mod_inverse(static_cast<int64_t>(x), c)));
  }
}

double KloostermanPlan::operator()(int64_t a, int64_t b) const {
  if (c_ == 1) return 1.0;
  uint64_t ar = static_cast<uint64_t>(((a % static_cast<int64_t>(c_)) +
                                       static_cast<int64_t>(c_)) %
                                      static_cast<int64_t>(c_));
  uint64_t br = static_cast<uint64_t>(((b % static_cast<int64_t>(c_)) +
                                       static_cast<int64_t>(c_)) %
                                      static_cast<int64_t>(c_));
  double s = 0.0;
  for (size_t i = 0; i < units_.size(); ++i) {
    uint64_t t = (ar * units_[i] + br * inv_[i]) % c_;
    s += cos_[static_cast<size_t>(t)];
  }
  return s;
}

double KloostermanPlan::imag_part(int64_t a, int64_t b) const {
  if (c_ == 1) return 0.0;
  uint64_t ar = static_cast<uint64_t>(((a % static_cast<int64_t>(c_)) +
                                       static_cast<int64_t>(c_)) %
                                      static_cast<int64_t>(c_));
  uint64_t br = static_cast<uint64_t>(((b % static_cast<int64_t>(c_)) +
                                       static_cast<int64_t>(c_)) %
                                      static_cast<int64_t>(c_));
  double s = 0.0;
  for (size_t i = 0; i < units_.size(); ++i) {
    uint64_t t = (ar * units_[i] + br * inv_[i]) % c_;
    s += sin_[static_cast<size_t>(t)];
  }
  return s;
}

double kloosterman(int64_t a, int64_t b, uint64_t c) {
  if (c == 0) throw validation_error("kloosterman: c must be >= 1");
  if (c == 1) return 1.0;
  uint64_t ar = static_cast<uint64_t>(((a % static_cast<int64_t>(c)) +
                                       static_cast<int64_t>(c)) %
                                      static_cast<int64_t>(c));
  uint64_t br = static_cast<uint64_t>(((b % static_cast<int64_t>(c)) +
                                       static_cast<int64_t>(c)) %
                                      static_cast<int64_t>(c));
  double s = 0.0;
  for (uint64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    uint64_t xi = mod_inverse(static_cast<int64_t>(x), c);
    uint64_t t = (ar * x + br * xi) % c;
    s += std::cos(kTwoPi * static_cast<double>(t) / static_cast<double>(c));
  }
  return s;
}

LogMoments sigma_log_moments(const Factorization& fn) {
  // Enumerate divisors d = prod p^a with running (1/d, log d); no allocation
  // after warmup.
  thread_local std::vector<std::pair<double, double>> divs;
  divs.clear();
  divs.emplace_back(1.0, 0.0);
  for (const auto& pe : fn) {
    size_t base = divs.size();
    double lp = std::log(static_cast<double>(pe.p));
    double invp = 1.0 / static_cast<double>(pe.p);
    double inv = 1.0, lg = 0.0;
    for (uint32_t a = 1; a <= pe.e; ++a) {
      inv *= invp;
      lg += lp;
      for (size_t i = 0; i < base; ++i)
        divs.emplace_back(divs[i].first * inv, divs[i].second + lg);
    }
  }
  LogMoments m{0.0, 0.0, 0.0};
  for (const auto& [inv, lg] : divs) {
    m.s0 += inv;
    m.s1 += inv * lg;
    m.s2 += inv * lg * lg;
  }
  return m;
}

LogMoments sigma_log_moments(uint64_t n) {
  if (n == 0) throw validation_error("sigma_log_moments: n must be >= 1");
  return sigma_log_moments(factorize(n));
}

double sigma_log_moment(int j, uint64_t n) {
  if (j < 0 || j > 2) throw validation_error("sigma_log_moment: j must be 0..2");
  LogMoments m = sigma_log_moments(n);
  return j == 0 ? m.s0 : j == 1 ? m.s1 : m.s2;
}

uint64_t tau_k_of(uint32_t k, const Factorization& f) {
  if (k == 0) throw validation_error("tau_k_of: k must be >= 1");
  uint64_t v = 1;
  for (const auto& pe : f) {
    uint64_t b = binomial_checked(pe.e + k - 1, k - 1);
    uint64_t out;
    if (__builtin_mul_overflow(v, b, &out))
      throw numeric_error("tau_k overflow");
    v = out;
  }
  return v;
}

uint64_t tau_k_of(uint32_t k, uint64_t n) {
  if (n == 0) throw validation_error("tau_k_of: n must be >= 1");
  return tau_k_of(k, factorize(n));
}

namespace {

uint32_t narrow_tau(uint64_t v) {
  if (v > 0xFFFFFFFFULL)
    throw numeric_error("tau_k value does not fit 32 bits");
  return static_cast<uint32_t>(v);
}

DivisorWindow tau_window_whole_range(uint32_t k, uint64_t lo, uint64_t hi) {
  DivisorWindow w;
  w.k = k;
  w.lo = lo;
  w.hi = hi;
  w.values.resize(static_cast<size_t>(hi - lo + 1));
  FactorSieve sv(std::max<uint64_t>(hi, 2));
  for (uint64_t n = lo; n <= hi; ++n) {
    w.values[static_cast<size_t>(n - lo)] =
        n == 1 ? 1 : narrow_tau(tau_k_of(k, factorize(n, sv)));
  }
  return w;
}

DivisorWindow tau_window_segmented(uint32_t k, uint64_t lo, uint64_t hi) {
  DivisorWindow w;
  w.k = k;
  w.lo = lo;
  w.hi = hi;
  size_t len = static_cast<size_t>(hi - lo + 1);
  w.values.assign(len, 1);
  std::vector<uint64_t> rem(len);
  for (size_t i = 0; i < len; ++i) rem[i] = lo + i;

  // primes up to sqrt(hi)
  uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi)));
  while ((root + 1) * (root + 1) <= hi) ++root;
  while (root * root > hi) --root;
  std::vector<bool> comp(static_cast<size_t>(root) + 1, false);
  std::vector<uint64_t> tmp64(len, 1);
  for (uint64_t p = 2; p <= root; ++p) {
    if (comp[static_cast<size_t>(p)]) continue;
    for (uint64_t q = p * p; q <= root; q += p) comp[static_cast<size_t>(q)] = true;
    uint64_t start = ((lo + p - 1) / p) * p;
    for (uint64_t m = start; m <= hi; m += p) {
      size_t i = static_cast<size_t>(m - lo);
      uint32_t e = 0;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        ++e;
      }
      uint64_t out;
      if (__builtin_mul_overflow(tmp64[i], binomial_checked(e + k - 1, k - 1), &out))
        throw numeric_error("tau_k overflow");
      tmp64[i] = out;
    }
  }
  for (size_t i = 0; i < len; ++i) {
    uint64_t v = tmp64[i];
    if (rem[i] > 1) v *= k;  // single remaining prime factor
    w.values[i] = narrow_tau(v);
  }
  return w;
}

}  // namespace

DivisorWindow tau_k_window(uint32_t k, uint64_t lo, uint64_t hi,
                           const TauWindowOptions& opts) {
  if (k == 0) throw validation_error("tau_k_window: k must be >= 1");
  if (lo == 0 || lo > hi) throw validation_error("tau_k_window: need 1 <= lo <= hi");
  if (k == 1) {
    DivisorWindow w;
    w.k = 1;
    w.lo = lo;
    w.hi = hi;
    w.values.assign(static_cast<size_t>(hi - lo + 1), 1);
    return w;
  }
  if (hi <= opts.whole_range_threshold) return tau_window_whole_range(k, lo, hi);
  return tau_window_segmented(k, lo, hi);
}

}  // namespace divcor
