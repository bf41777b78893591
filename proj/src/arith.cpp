#include "ancprim/arith.hpp"

#include <algorithm>
#include <numeric>

namespace ancprim {

Factorization factor(Int n) {
    if (n < 1) throw std::invalid_argument("factor: n must be positive");
    Factorization f;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

bool is_prime(Int p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

int nu(Int p, Int n) {
    if (!is_prime(p)) throw std::invalid_argument("nu: p must be prime");
    if (n < 1) throw std::invalid_argument("nu: n must be positive");
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

int nu2(Int n) {
    int e = 0;
    while (n % 2 == 0) { n /= 2; ++e; }
    return e;
}

Int odd_part(Int n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

Int euler_phi(Int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    Int phi = 1;
    for (const auto& [p, e] : factor(n).factors) {
        Int pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

std::vector<Int> divisors(Int n) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factor(n).factors) {
        const std::size_t sz = ds.size();
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t k = 0; k < sz; ++k) ds.push_back(ds[k] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

bool is_squarefree(Int n) {
    for (const auto& [p, e] : factor(n < 0 ? -n : n).factors)
        if (e > 1) return false;
    return true;
}

Int pow_mod(Int a, Int e, Int m) {
    if (m < 1) throw std::invalid_argument("pow_mod: bad modulus");
    if (m == 1) return 0;
    a %= m;
    if (a < 0) a += m;
    Int r = 1;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

Int inv_mod(Int a, Int m) {
    Int t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
    while (nr != 0) {
        Int q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return t < 0 ? t + m : t;
}

Int ord_mod(Int a, Int m) {
    if (m < 1) throw std::invalid_argument("ord_mod: m must be positive");
    if (m == 1) return 1;
    Int ar = ((a % m) + m) % m;
    if (std::gcd(ar, m) != 1) throw std::invalid_argument("ord_mod: gcd(a, m) != 1");
    Int t = euler_phi(m);
    for (const auto& [p, e] : factor(t).factors) {
        (void)e;
        while (t % p == 0 && pow_mod(ar, t / p, m) == 1) t /= p;
    }
    return t;
}

Parity ord2_parity(Int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("ord2_parity: m must be odd and positive");
    for (const auto& [p, e] : factor(m).factors) {
        (void)e;
        if (ord_mod(2, p) % 2 == 0) return Parity::even;
    }
    return Parity::odd;
}

bool divides_aug(Int n, Int a) {
    if (n < 1 || a < 1) throw std::invalid_argument("divides_aug: arguments must be positive");
    for (const auto& [p, e] : factor(n).factors) {
        int cap = a % p == 0 ? nu(p, a) : 1;
        if (e > cap) return false;
    }
    return true;
}

} // namespace ancprim
