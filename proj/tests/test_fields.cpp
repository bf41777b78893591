#include "ancprim/fields.hpp"

#include "ancprim/arith.hpp"
#include "naive_fields.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ancprim;

namespace {

AbelianField e(Int n, Flavor f = Flavor::plain) { return make_cyclotomic({n, f}); }

// Deterministic subgroup fields for property tests.
std::vector<AbelianField> random_fields(int count, Int max_modulus, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::vector<AbelianField> out;
    while (static_cast<int>(out.size()) < count) {
        const Int f = 1 + static_cast<Int>(rng() % static_cast<unsigned long long>(max_modulus));
        std::vector<Int> gens;
        const int k = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            Int u = 1 + static_cast<Int>(rng() % static_cast<unsigned long long>(f));
            while (std::gcd(u, f) != 1) u = 1 + (u % f);
            gens.push_back(u);
        }
        out.push_back(canonicalize(f, gens));
    }
    return out;
}

} // namespace

TEST_CASE("unit_group") {
    CHECK(unit_group(1) == std::vector<Int>{1});
    CHECK(unit_group(8) == std::vector<Int>{1, 3, 5, 7});
    CHECK(unit_group(5) == std::vector<Int>{1, 2, 3, 4});
}

TEST_CASE("canonicalize examples") {
    CHECK(canonicalize(12, {1, 5, 7, 11}) == rationals());

    // Q(sqrt 5): residues = +-1 mod 5 inside (Z/20)^x
    const AbelianField sqrt5 = canonicalize(20, {1, 9, 11, 19});
    CHECK(sqrt5 == AbelianField{5, {1, 4}});
    CHECK(degree(sqrt5) == 2);

    // {1,9,13,17} is the kernel of reduction mod 4, so it fixes E_4 = Q(i)
    CHECK(canonicalize(20, {1, 9, 13, 17}) == AbelianField{4, {1}});

    CHECK(canonicalize(8, {1, 7}) == AbelianField{8, {1, 7}});
    CHECK_THROWS_AS(canonicalize(8, {2}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent and presentation independent") {
    std::mt19937_64 rng(7);
    for (const AbelianField& k : random_fields(40, 150, 11)) {
        CHECK(canonicalize(k.modulus, k.subgroup) == k);
        // re-present the full subgroup at a multiple of the modulus
        const Int big = k.modulus * (1 + static_cast<Int>(rng() % 4));
        std::vector<Int> gens;
        for (Int u = 1; u <= big; ++u) {
            if (std::gcd(u, big) != 1) continue;
            if (k.contains_residue(u)) gens.push_back(u);
        }
        CHECK(canonicalize(big, gens) == k);
    }
}

TEST_CASE("make_cyclotomic") {
    CHECK(e(8, Flavor::plus) == AbelianField{8, {1, 7}}); // Q(sqrt 2)
    CHECK(e(4, Flavor::minus) == rationals());            // E_4^{+-} = E_1
    // E_24^-: fixed by the CRT element u = 3 mod 8, u = 1 mod 3, i.e. u = 19
    CHECK(e(24, Flavor::minus) == AbelianField{24, {1, 19}});
    CHECK(degree(e(24, Flavor::minus)) == 4);
    CHECK(e(6) == e(3)); // E_r = E_2r for odd r
}

TEST_CASE("intersect examples") {
    CHECK(intersect(e(12), e(8)) == e(4));
    CHECK(intersect(e(8, Flavor::plus), e(8, Flavor::minus)) == rationals());
    for (Int n : {5, 8, 24, 40})
        CHECK(intersect(e(n), e(n)) == e(n));
}

TEST_CASE("compositum examples") {
    CHECK(compositum(e(8), e(12)) == e(24));
    CHECK(compositum(rationals(), e(7)) == e(7));
    CHECK(compositum(e(8, Flavor::plus), e(4)) == e(8));
}

TEST_CASE("is_subfield examples") {
    CHECK(is_subfield(canonicalize(20, {1, 9, 11, 19}), e(5)));
    CHECK(!is_subfield(e(8, Flavor::minus), e(8, Flavor::plus)));
    CHECK(is_subfield(e(40), e(40)));
}

TEST_CASE("degree examples") {
    CHECK(degree(rationals()) == 1);
    CHECK(degree(e(5)) == 4);
    CHECK(degree(e(16, Flavor::plus)) == 4);
}

TEST_CASE("rel_cyclotomic_degree") {
    CHECK(rel_cyclotomic_degree(rationals(), {5, Flavor::plain}) == 4);
    CHECK(rel_cyclotomic_degree(canonicalize(20, {1, 9, 11, 19}), {5, Flavor::plain}) == 2);
    CHECK(rel_cyclotomic_degree(e(3), {12, Flavor::plain}) == 2);

    for (const AbelianField& k : random_fields(10, 60, 3))
        for (Int n = 1; n <= 60; ++n) {
            const Int r = rel_cyclotomic_degree(k, {n, Flavor::plain});
            CHECK(euler_phi(n) % r == 0);
            CHECK(rel_cyclotomic_degree(rationals(), {n, Flavor::plain}) == euler_phi(n));
        }
}

TEST_CASE("totally_imaginary") {
    CHECK(!totally_imaginary(rationals()));
    CHECK(totally_imaginary(e(5)));
    CHECK(!totally_imaginary(AbelianField{8, {1, 7}})); // Q(sqrt 2)
}

TEST_CASE("local_degree_at_2") {
    CHECK(local_degree_at_2(e(7)) == 3);                  // ord(2 mod 7)
    CHECK(local_degree_at_2(canonicalize(17, {2})) == 1); // Q(sqrt 17): 2 splits
    CHECK(local_degree_at_2(e(4)) == 2);                  // 2 ramifies in Q(i)
}

TEST_CASE("Galois correspondence: deg(meet) * deg(join) = deg * deg") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Int f = 3 + static_cast<Int>(rng() % 238);
        auto pick = [&] {
            std::vector<Int> gens;
            const int k = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < k; ++i) {
                Int u = 1 + static_cast<Int>(rng() % static_cast<unsigned long long>(f));
                while (std::gcd(u, f) != 1) u = 1 + (u % f);
                gens.push_back(u);
            }
            return canonicalize(f, gens);
        };
        const AbelianField l1 = pick(), l2 = pick();
        CHECK(degree(intersect(l1, l2)) * degree(compositum(l1, l2)) == degree(l1) * degree(l2));
    }
}

TEST_CASE("coprime composita multiply flavor-wise") {
    for (Int n = 1; n <= 240; ++n)
        for (Int m = n + 1; n * m <= 240; ++m) {
            if (std::gcd(n, m) != 1) continue;
            for (Flavor f : {Flavor::plain, Flavor::plus, Flavor::minus})
                CHECK(compositum(e(n, f), e(m, f)) == e(n * m, f));
        }
}

TEST_CASE("E_n is E_n^pm with sqrt(-1) adjoined, 4 | n") {
    for (Int n = 4; n <= 240; n += 4) {
        CHECK(compositum(e(n, Flavor::plus), e(4)) == e(n));
        CHECK(compositum(e(n, Flavor::minus), e(4)) == e(n));
    }
}

TEST_CASE("production field calculus agrees with the naive oracle") {
    for (Int n = 1; n <= 40; ++n)
        for (Int m = 1; m <= 40; ++m)
            for (Flavor fn : {Flavor::plain, Flavor::plus, Flavor::minus})
                for (Flavor fm : {Flavor::plain, Flavor::minus}) {
                    const AbelianField a = e(n, fn), b = e(m, fm);
                    CHECK(intersect(a, b) == naive::intersect(a, b));
                    CHECK(is_subfield(a, b) == naive::is_subfield(a, b));
                }

    const auto fields = random_fields(14, 90, 77);
    for (const AbelianField& a : fields)
        for (const AbelianField& b : fields) {
            CHECK(intersect(a, b) == naive::intersect(a, b));
            CHECK(compositum(a, b) == naive::compositum(a, b));
            CHECK(is_subfield(a, b) == naive::is_subfield(a, b));
        }
}

TEST_CASE("modulus budget is enforced") {
    CHECK_THROWS_AS(unit_group(1000000), budget_exceeded);
    CHECK_THROWS_AS(canonicalize(2000000, {1}), budget_exceeded);
}
