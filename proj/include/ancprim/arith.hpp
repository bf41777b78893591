#pragma once

#include "ancprim/common.hpp"

#include <utility>
#include <vector>

namespace ancprim {

// Prime factorization with strictly increasing primes and exponents >= 1.
// factor(1) has an empty factor list.
struct Factorization {
    std::vector<std::pair<Int, int>> factors;
};

Factorization factor(Int n);

bool is_prime(Int p);

// p-adic valuation nu_p(n); p must be prime, n >= 1.
int nu(Int p, Int n);

int nu2(Int n);
Int odd_part(Int n);

Int euler_phi(Int n);

// Divisors of n in increasing order.
std::vector<Int> divisors(Int n);

bool is_squarefree(Int n);

Int pow_mod(Int a, Int e, Int m);
Int inv_mod(Int a, Int m);

// Multiplicative order of a mod m; requires gcd(a, m) = 1. ord_mod(a, 1) = 1.
Int ord_mod(Int a, Int m);

enum class Parity { even, odd };

// Parity of ord(2 mod m) for odd m, computed prime-wise: even iff
// ord(2 mod p) is even for some prime p | m.
Parity ord2_parity(Int m);

// n | aug(a), where aug(a) = a * prod{ p prime : nu_p(a) = 0 }.
// aug(a) is supernatural and never materialized; only this predicate exists.
bool divides_aug(Int n, Int a);

} // namespace ancprim
