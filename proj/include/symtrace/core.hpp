#ifndef SYMTRACE_CORE_HPP
#define SYMTRACE_CORE_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symtrace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class errc {
  not_prime,
  bad_characteristic,
  no_root_of_unity,
  division_by_zero,
  context_mismatch,
  unsupported,
  even_input,
  zero_scalar,
  path_disagreement,
  bad_pairing,
  algebra_mismatch,
  wrong_degree_mod4,
  zero_parameter,
  hypothesis_violated,
  degenerate_input,
  out_of_range,
  budget_exceeded,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::bad_characteristic: return "BadCharacteristic";
    case errc::no_root_of_unity: return "NoRootOfUnity";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::unsupported: return "Unsupported";
    case errc::even_input: return "EvenInput";
    case errc::zero_scalar: return "ZeroScalar";
    case errc::path_disagreement: return "PathDisagreement";
    case errc::bad_pairing: return "BadPairing";
    case errc::algebra_mismatch: return "AlgebraMismatch";
    case errc::wrong_degree_mod4: return "WrongDegreeMod4";
    case errc::zero_parameter: return "ZeroParameter";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::out_of_range: return "OutOfRange";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Machine-word number theory. Moduli up to 2^61 are supported; anything that
// needs enumeration (square tables, factor scans) is bounded elsewhere.
namespace nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m || s < a) s -= m;
  return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, valid for all inputs below 2^64.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Prime factorization with multiplicities. Trial division up to 10^6 and a
/// primality test on the cofactor; inputs whose cofactor is a large composite
/// are out of scope and rejected.
inline std::vector<std::pair<u64, int>> factorize(u64 n) {
  require(n >= 1, errc::out_of_range, "factorize(0)");
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d <= 1000000 && d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) {
    require(is_prime(n), errc::out_of_range, "cofactor too large to factor: " + std::to_string(n));
    out.emplace_back(n, 1);
  }
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (auto [p, e] : factorize(n)) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

/// Smallest generator of GF(p)^x.
inline u64 smallest_primitive_root(u64 p) {
  if (p == 2) return 1;
  auto fac = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : fac) {
      (void)e;
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(errc::not_prime, "no primitive root mod " + std::to_string(p));
}

/// The `count` smallest odd primes p with p = 1 (mod n) and lo < p <= hi.
inline std::vector<u64> primes_one_mod(u64 n, int count, u64 lo, u64 hi = 10000) {
  std::vector<u64> out;
  u64 start = (lo / n) * n + 1;
  if (start <= lo) start += n;
  for (u64 p = start; p <= hi && static_cast<int>(out.size()) < count; p += n) {
    if (p > 2 && is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace nt
}  // namespace symtrace

#endif  // SYMTRACE_CORE_HPP
