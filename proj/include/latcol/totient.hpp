#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latcol/checked.hpp"
#include "latcol/error.hpp"
#include "latcol/lattice.hpp"

namespace latcol {

struct PrimePower {
  Int prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  Int n = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes
};

// Trial division. factorize(1) has no factors.
inline Factorization factorize(Int n) {
  if (n < 1) throw DomainError("factorize requires n >= 1, got " + std::to_string(n));
  Factorization out{n, {}};
  Int rest = n;
  for (Int p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

// 1 if p | m, else 2. Every p divides 0.
inline Int epsilon(Int p, Int m) { return m % p == 0 ? 1 : 2; }

// phi(k, m) = k prod (1 - eps(p, m)/p), evaluated as
// prod (p - eps(p, m)) * prod p^(c - 1) so that it stays integral.
inline Int generalized_totient(Int k, Int m) {
  if (k < 1) throw DomainError("generalized_totient requires k >= 1, got " + std::to_string(k));
  if (m < 0) throw DomainError("generalized_totient requires m >= 0, got " + std::to_string(m));
  Int result = 1;
  for (const auto& [p, c] : factorize(k).factors) {
    result = checked::mul(result, p - epsilon(p, m));
    for (int i = 1; i < c; ++i) result = checked::mul(result, p);
  }
  return result;
}

inline Int euler_totient(Int k) { return generalized_totient(k, 0); }

inline Int schemmel(Int k) { return generalized_totient(k, 1); }

// |{a in [0, n) : gcd(a, n) = gcd(a - 1, n) = 1}| by direct counting.
inline Int schemmel_bruteforce(Int n) {
  if (n < 1) throw DomainError("schemmel_bruteforce requires n >= 1, got " + std::to_string(n));
  Int count = 0;
  for (Int a = 0; a < n; ++a)
    if (gcd(a, n) == 1 && gcd(a - 1, n) == 1) ++count;
  return count;
}

}  // namespace latcol
