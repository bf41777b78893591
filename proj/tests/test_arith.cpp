#include "ancprim/arith.hpp"

#include <doctest.h>

#include <numeric>

using namespace ancprim;

namespace {

// Direct power iteration, independent of the order computation in the library.
Int ord_brute(Int a, Int m) {
    if (m == 1) return 1;
    Int x = a % m, t = 1;
    while (x != 1) {
        x = x * a % m;
        ++t;
    }
    return t;
}

int valuation(Int p, Int n) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Valuation-by-valuation reading of n | aug(a), scanning every prime up to n.
bool divides_aug_oracle(Int n, Int a) {
    for (Int p = 2; p <= n; ++p) {
        bool prime = true;
        for (Int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        const int vn = valuation(p, n);
        if (vn == 0) continue;
        const int va = valuation(p, a);
        if (vn > (va > 0 ? va : 1)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("factor") {
    CHECK(factor(1).factors.empty());
    CHECK(factor(12).factors == std::vector<std::pair<Int, int>>{{2, 2}, {3, 1}});
    CHECK(factor(240).factors == std::vector<std::pair<Int, int>>{{2, 4}, {3, 1}, {5, 1}});
    CHECK_THROWS_AS(factor(0), std::invalid_argument);

    for (Int n = 1; n <= 2000; ++n) {
        Int prod = 1;
        Int prev = 1;
        for (const auto& [p, e] : factor(n).factors) {
            CHECK(p > prev);
            prev = p;
            CHECK(e >= 1);
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("nu") {
    CHECK(nu(2, 40) == 3);
    CHECK(nu(3, 40) == 0);
    CHECK(nu(2, 1) == 0);
    CHECK_THROWS_AS(nu(4, 12), std::invalid_argument);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(56) == 24);
    CHECK(euler_phi(5) == 4);

    for (Int n = 1; n <= 500; ++n) {
        Int count = 0;
        for (Int u = 1; u <= n; ++u)
            if (std::gcd(u, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("ord_mod") {
    CHECK(ord_mod(2, 3) == 2);
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(2, 21) == 6); // frozen from direct power iteration
    CHECK(ord_mod(5, 1) == 1);
    CHECK_THROWS_AS(ord_mod(2, 4), std::invalid_argument);

    for (Int m = 1; m <= 300; ++m)
        for (Int a = 1; a <= m; ++a)
            if (std::gcd(a, m) == 1) CHECK(ord_mod(a, m) == ord_brute(a, m));
}

TEST_CASE("ord2_parity examples") {
    CHECK(ord2_parity(7) == Parity::odd);
    CHECK(ord2_parity(3) == Parity::even);
    CHECK(ord2_parity(1) == Parity::odd);
    CHECK_THROWS_AS(ord2_parity(6), std::invalid_argument);
}

TEST_CASE("ord2_parity agrees with ord_mod parity for all odd m <= 1e5") {
    for (Int m = 1; m <= 100000; m += 2) {
        const Parity direct = ord_mod(2, m) % 2 == 0 ? Parity::even : Parity::odd;
        CHECK(ord2_parity(m) == direct);
    }
}

TEST_CASE("divides_aug") {
    CHECK(divides_aug(30, 1));  // n | aug(1) means n squarefree
    CHECK(!divides_aug(12, 2)); // frozen: nu_2(12)=2 > nu_2(aug 2)=1
    CHECK(divides_aug(12, 4));  // frozen: nu_2(aug 4)=2, nu_3(aug 4)=1

    for (Int n = 1; n <= 500; ++n) {
        CHECK(divides_aug(n, n));
        for (Int a = 1; a <= 500; ++a) CHECK(divides_aug(n, a) == divides_aug_oracle(n, a));
    }
}

TEST_CASE("divides_aug is monotone in a under divisibility") {
    for (Int n = 1; n <= 300; ++n)
        for (Int a = 1; a <= 300; ++a) {
            if (!divides_aug(n, a)) continue;
            for (Int b = a; b <= 300; b += a) CHECK(divides_aug(n, b));
        }
}
