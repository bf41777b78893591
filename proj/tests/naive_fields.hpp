#pragma once

// Test-only oracle for the conductor-subgroup calculus: everything is done by
// literally materializing lifted subgroups at the lcm modulus and closing
// products element by element. Deliberately shares no code path with the
// library implementation beyond the AbelianField value type.

#include "ancprim/fields.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace naive {

using ancprim::AbelianField;
using ancprim::Int;

inline std::vector<Int> lift(const AbelianField& l, Int big) {
    std::vector<Int> out;
    for (Int u = 1; u <= big; ++u) {
        if (std::gcd(u, big) != 1) continue;
        Int r = u % l.modulus;
        if (r == 0) r = l.modulus;
        if (std::binary_search(l.subgroup.begin(), l.subgroup.end(), r)) out.push_back(u);
    }
    return out;
}

inline std::vector<Int> close_products(Int f, std::vector<Int> elems) {
    std::set<Int> s(elems.begin(), elems.end());
    s.insert(1);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Int> now(s.begin(), s.end());
        for (Int a : now) {
            for (Int b : now) {
                Int p = (a * b) % f;
                if (p == 0) p = f;
                if (s.insert(p).second) grew = true;
            }
        }
    }
    return {s.begin(), s.end()};
}

inline AbelianField conductor_reduce(Int f, const std::vector<Int>& subgroup) {
    std::set<Int> h(subgroup.begin(), subgroup.end());
    for (Int fp = 1; fp <= f; ++fp) {
        if (f % fp != 0) continue;
        bool kernel_ok = true;
        for (Int u = 1; u <= f; ++u) {
            if (std::gcd(u, f) != 1) continue;
            const bool in_kernel = fp == 1 || u % fp == 1;
            if (in_kernel && h.find(u) == h.end()) {
                kernel_ok = false;
                break;
            }
        }
        if (!kernel_ok) continue;
        std::set<Int> img;
        for (Int u : h) {
            Int r = u % fp;
            if (r == 0) r = fp;
            img.insert(r);
        }
        Int fc = fp;
        if (fc % 4 == 2) {
            fc /= 2;
            std::set<Int> img2;
            for (Int u : img) {
                Int r = u % fc;
                if (r == 0) r = fc;
                img2.insert(r);
            }
            img = img2;
        }
        return AbelianField{fc, {img.begin(), img.end()}};
    }
    return AbelianField{f, {h.begin(), h.end()}};
}

inline AbelianField intersect(const AbelianField& l1, const AbelianField& l2) {
    const Int big = std::lcm(l1.modulus, l2.modulus);
    std::vector<Int> a = lift(l1, big);
    std::vector<Int> b = lift(l2, big);
    a.insert(a.end(), b.begin(), b.end());
    return conductor_reduce(big, close_products(big, a));
}

inline AbelianField compositum(const AbelianField& l1, const AbelianField& l2) {
    const Int big = std::lcm(l1.modulus, l2.modulus);
    std::vector<Int> a = lift(l1, big);
    std::vector<Int> b = lift(l2, big);
    std::vector<Int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return conductor_reduce(big, both);
}

inline bool is_subfield(const AbelianField& l1, const AbelianField& l2) {
    const Int big = std::lcm(l1.modulus, l2.modulus);
    std::vector<Int> a = lift(l1, big);
    std::vector<Int> b = lift(l2, big);
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace naive
