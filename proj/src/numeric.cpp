#include "primeveil/numeric.hpp"

#include <array>
#include <atomic>

namespace primeveil {

namespace {

// primes below 256; doubles as the trial-division table for n < 2^16
constexpr std::array<unsigned, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

// strong-pseudoprime witnesses covering everything below the deterministic bound
constexpr std::array<unsigned, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                 19, 23, 29, 31, 37, 41};

std::atomic<std::uint64_t> g_probabilistic_answers{0};

bool strong_probable_prime(const Nat& n, unsigned long base) {
  // n odd, n > 3
  Nat n_minus_1 = n - 1;
  unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  Nat d = n_minus_1 >> s;

  Nat a(base);
  Nat x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// halve mod odd n
void halve_mod(Nat& v, const Nat& n) {
  if (mpz_odd_p(v.get_mpz_t())) v += n;
  v >>= 1;
}

// Strong Lucas probable-prime test with Selfridge parameters (P = 1,
// Q = (1 - D) / 4, D the first of 5, -7, 9, -11, ... with Jacobi(D, n) = -1).
// n must be odd, > 2, coprime to small primes, and not a perfect square.
bool strong_lucas_probable_prime(const Nat& n) {
  long d_abs = 5;
  int sign = 1;
  Nat D;
  for (;;) {
    D = sign * d_abs;
    int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) return n == d_abs;  // shares a factor with D
    d_abs += 2;
    sign = -sign;
    if (d_abs > 1'000'000) return false;  // unreachable for non-squares
  }
  Nat Q = (1 - D) / 4;

  Nat n_plus_1 = n + 1;
  unsigned long s = mpz_scan1(n_plus_1.get_mpz_t(), 0);
  Nat d = n_plus_1 >> s;

  // compute U_d, V_d, Q^d (mod n) walking d's bits from the top; P = 1
  Nat U = 1, V = 1, qk = Q % n;
  if (qk < 0) qk += n;
  long bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  for (long i = bits - 2; i >= 0; --i) {
    // double: (U, V, q) -> (U*V, V^2 - 2q, q^2)
    U = (U * V) % n;
    V = (V * V - 2 * qk) % n;
    if (V < 0) V += n;
    qk = (qk * qk) % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      // advance by one: U' = (U + V)/2, V' = (D*U + V)/2, q' = q*Q
      Nat u2 = (U + V) % n;
      Nat v2 = (D * U + V) % n;
      if (v2 < 0) v2 += n;
      halve_mod(u2, n);
      halve_mod(v2, n);
      U = u2;
      V = v2;
      qk = (qk * Q) % n;
      if (qk < 0) qk += n;
    }
  }

  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = (V * V - 2 * qk) % n;
    if (V < 0) V += n;
    if (V == 0) return true;
    qk = (qk * qk) % n;
  }
  return false;
}

}  // namespace

const Nat kDeterministicPrimalityBound("3317044064679887385961981");

Nat gcd(const Nat& a, const Nat& b) {
  Nat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Nat gcd3(const Nat& a, const Nat& b, const Nat& c) {
  return gcd(gcd(a, b), c);
}

Primality classify_prime(const Nat& n) {
  if (n < 2) return {false, false};

  if (mpz_fits_ulong_p(n.get_mpz_t()) && n < 65536) {
    unsigned long v = mpz_get_ui(n.get_mpz_t());
    for (unsigned p : kSmallPrimes) {
      if (static_cast<unsigned long>(p) * p > v) break;
      if (v % p == 0) return {v == p, false};
    }
    return {true, false};
  }

  for (unsigned p : kSmallPrimes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return {false, false};
  }

  for (unsigned w : kWitnesses) {
    if (!strong_probable_prime(n, w)) return {false, false};
  }
  if (n < kDeterministicPrimalityBound) return {true, false};

  // combined strong/Lucas test beyond the deterministic range; base-2 strong
  // test already ran as part of the witness loop
  if (mpz_perfect_square_p(n.get_mpz_t())) return {false, false};
  if (!strong_lucas_probable_prime(n)) return {false, false};
  g_probabilistic_answers.fetch_add(1, std::memory_order_relaxed);
  return {true, true};
}

bool is_prime(const Nat& n) { return classify_prime(n).is_prime; }

std::uint64_t probabilistic_primality_answers() {
  return g_probabilistic_answers.load(std::memory_order_relaxed);
}

}  // namespace primeveil
