#include "ancprim/fields.hpp"

#include "ancprim/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace ancprim {

namespace {

// Residue representative in [1, f]; only f = 1 maps 0 to 1.
Int norm_res(Int x, Int f) {
    Int r = x % f;
    if (r <= 0) r += f;
    return r;
}

Int mul_res(Int a, Int b, Int f) {
    Int r = (a * b) % f;
    return r == 0 ? f : r;
}

// Closure of {1} u gens under multiplication mod f. Extending a closed set S
// by a generator g gives S * <g>, which is closed again (the group is abelian).
std::vector<Int> close_under_mul(Int f, const std::vector<Int>& gens) {
    std::vector<char> member(static_cast<std::size_t>(f) + 1, 0);
    std::vector<Int> elems{1};
    member[1] = 1;
    for (Int g : gens) {
        if (member[static_cast<std::size_t>(g)]) continue;
        std::vector<Int> powers;
        for (Int p = g; p != 1; p = mul_res(p, g, f)) powers.push_back(p);
        const std::vector<Int> base = elems;
        for (Int e : base) {
            for (Int q : powers) {
                Int x = mul_res(e, q, f);
                if (!member[static_cast<std::size_t>(x)]) {
                    member[static_cast<std::size_t>(x)] = 1;
                    elems.push_back(x);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

// Minimal divisor f' of f whose reduction kernel lies in the (closed)
// subgroup; returns the image subgroup at f'. The set of admissible divisors
// is closed under gcd, so the first hit of an ascending scan is the minimum.
AbelianField reduce_to_conductor(Int f, const std::vector<Int>& subgroup) {
    std::vector<char> member(static_cast<std::size_t>(f) + 1, 0);
    for (Int h : subgroup) member[static_cast<std::size_t>(h)] = 1;

    for (Int fp : divisors(f)) {
        bool kernel_inside = true;
        for (Int u = 1 + fp; u <= f; u += fp) {
            if (std::gcd(u, f) == 1 && !member[static_cast<std::size_t>(u)]) {
                kernel_inside = false;
                break;
            }
        }
        if (!kernel_inside) continue;

        Int fc = fp;
        std::vector<Int> img;
        {
            std::vector<char> seen(static_cast<std::size_t>(fp) + 1, 0);
            for (Int h : subgroup) {
                Int r = norm_res(h, fp);
                if (!seen[static_cast<std::size_t>(r)]) {
                    seen[static_cast<std::size_t>(r)] = 1;
                    img.push_back(r);
                }
            }
        }
        if (fc % 4 == 2) {
            // E_r = E_2r for odd r; fold onto the odd modulus.
            fc /= 2;
            std::vector<char> seen(static_cast<std::size_t>(fc) + 1, 0);
            std::vector<Int> img2;
            for (Int h : img) {
                Int r = norm_res(h, fc);
                if (!seen[static_cast<std::size_t>(r)]) {
                    seen[static_cast<std::size_t>(r)] = 1;
                    img2.push_back(r);
                }
            }
            img = std::move(img2);
        }
        std::sort(img.begin(), img.end());
        return AbelianField{fc, std::move(img)};
    }
    throw std::logic_error("reduce_to_conductor: no admissible divisor");
}

Int crt(Int a1, Int m1, Int a2, Int m2) {
    // coprime moduli
    Int t = ((a2 - a1) % m2 + m2) % m2;
    Int x = a1 + m1 * (t * inv_mod(m1 % m2, m2) % m2);
    return norm_res(x, m1 * m2);
}

std::size_t hash_field(const AbelianField& k) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](Int v) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    };
    mix(k.modulus);
    for (Int u : k.subgroup) mix(u);
    return h;
}

struct CycKey {
    Int n;
    Flavor flavor;
    bool operator==(const CycKey&) const = default;
};

struct CycKeyHash {
    std::size_t operator()(const CycKey& k) const {
        return static_cast<std::size_t>(k.n) * 31 + static_cast<std::size_t>(k.flavor);
    }
};

struct PairKey {
    AbelianField a, b;
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        return hash_field(k.a) * 1000003 ^ hash_field(k.b);
    }
};

bool field_less(const AbelianField& a, const AbelianField& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.subgroup < b.subgroup;
}

} // namespace

bool AbelianField::contains_residue(Int u) const {
    Int r = norm_res(u, modulus);
    return std::binary_search(subgroup.begin(), subgroup.end(), r);
}

AbelianField rationals() { return AbelianField{}; }

std::vector<Int> unit_group(Int f) {
    if (f < 1) throw std::invalid_argument("unit_group: f must be positive");
    check_modulus_budget(f);
    std::vector<Int> units;
    for (Int u = 1; u <= f; ++u)
        if (std::gcd(u, f) == 1) units.push_back(u);
    return units;
}

AbelianField canonicalize(Int f, std::vector<Int> generators) {
    if (f < 1) throw std::invalid_argument("canonicalize: f must be positive");
    check_modulus_budget(f);
    for (Int& g : generators) {
        g = norm_res(g, f);
        if (std::gcd(g, f) != 1)
            throw std::invalid_argument("canonicalize: generator not coprime to modulus");
    }
    return reduce_to_conductor(f, close_under_mul(f, generators));
}

AbelianField make_cyclotomic(CycSpec spec) {
    if (spec.n < 1) throw std::invalid_argument("make_cyclotomic: n must be positive");

    static std::unordered_map<CycKey, AbelianField, CycKeyHash> cache;
    static std::mutex mtx;
    const CycKey key{spec.n, spec.flavor};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const Int n = spec.n;
    const int j = nu2(n);
    const Int m = odd_part(n);
    AbelianField result;
    if (spec.flavor == Flavor::plain) {
        result = canonicalize(n, {});
    } else if (j >= 3) {
        const Int two_part = Int{1} << j;
        const Int u2 = spec.flavor == Flavor::plus ? two_part - 1 : two_part / 2 - 1;
        result = canonicalize(n, {m == 1 ? u2 : crt(u2, two_part, 1, m)});
    } else {
        // E_n^{+-} = E_m for nu_2(n) <= 2
        check_modulus_budget(n);
        std::vector<Int> gens;
        for (Int u = 1; u <= n; u += m)
            if (std::gcd(u, n) == 1) gens.push_back(u);
        result = canonicalize(n, std::move(gens));
    }

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, result);
    return result;
}

AbelianField intersect(const AbelianField& l1, const AbelianField& l2) {
    if (l1.modulus == 1) return rationals();
    if (l2.modulus == 1) return rationals();
    if (l1 == l2) return l1;

    static std::unordered_map<PairKey, AbelianField, PairKeyHash> cache;
    static std::mutex mtx;
    const PairKey key = field_less(l1, l2) ? PairKey{l1, l2} : PairKey{l2, l1};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    const Int m_lcm = std::lcm(l1.modulus, l2.modulus);
    check_modulus_budget(m_lcm);

    // The generated subgroup at lcm contains the full kernel over side A, so
    // the computation collapses to modulus fA: reduce the lift of the other
    // subgroup into (Z/fA)^x, multiply by HA, and conductor-reduce there.
    // Enumerating the lift of B costs |HB| * (M/fB); pick B to minimize it.
    const AbelianField* a = &l1;
    const AbelianField* b = &l2;
    {
        auto cost = [m_lcm](const AbelianField& side) {
            return static_cast<double>(side.subgroup.size()) *
                   (static_cast<double>(m_lcm) / static_cast<double>(side.modulus));
        };
        if (cost(*a) < cost(*b)) std::swap(a, b);
    }
    const Int fa = a->modulus;

    std::vector<char> image_mark(static_cast<std::size_t>(fa) + 1, 0);
    std::vector<Int> image;
    for (Int h : b->subgroup) {
        for (Int u = h; u <= m_lcm; u += b->modulus) {
            if (std::gcd(u, m_lcm) != 1) continue;
            Int r = norm_res(u, fa);
            if (!image_mark[static_cast<std::size_t>(r)]) {
                image_mark[static_cast<std::size_t>(r)] = 1;
                image.push_back(r);
            }
        }
    }

    std::vector<char> prod_mark(static_cast<std::size_t>(fa) + 1, 0);
    std::vector<Int> prod;
    for (Int x : a->subgroup) {
        for (Int s : image) {
            Int r = mul_res(x, s, fa);
            if (!prod_mark[static_cast<std::size_t>(r)]) {
                prod_mark[static_cast<std::size_t>(r)] = 1;
                prod.push_back(r);
            }
        }
    }
    std::sort(prod.begin(), prod.end());

    AbelianField result = reduce_to_conductor(fa, prod);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, result);
    return result;
}

AbelianField compositum(const AbelianField& l1, const AbelianField& l2) {
    const Int m_lcm = std::lcm(l1.modulus, l2.modulus);
    check_modulus_budget(m_lcm);
    std::vector<Int> both;
    for (Int u = 1; u <= m_lcm; ++u) {
        if (std::gcd(u, m_lcm) != 1) continue;
        if (l1.contains_residue(u) && l2.contains_residue(u)) both.push_back(u);
    }
    return reduce_to_conductor(m_lcm, both);
}

bool is_subfield(const AbelianField& l1, const AbelianField& l2) {
    if (l1.modulus == 1) return true;
    const Int f1 = l1.modulus, f2 = l2.modulus;
    const Int m_lcm = std::lcm(f1, f2);
    check_modulus_budget(m_lcm);

    // l1 inside l2 iff the lift of H2 to lcm lies in the lift of H1. The lift
    // of H1 is the full preimage of H1, so only generators of the lift of H2
    // need testing: the kernel of reduction to f2 (whose image mod f1 is by
    // CRT exactly the kernel of reduction to gcd(f1, f2)) and one unit
    // preimage per element of H2.
    std::vector<char> member1(static_cast<std::size_t>(f1) + 1, 0);
    for (Int h : l1.subgroup) member1[static_cast<std::size_t>(h)] = 1;

    const Int g = std::gcd(f1, f2);
    for (Int v = 1; v <= f1; v += g) {
        if (std::gcd(v, f1) == 1 && !member1[static_cast<std::size_t>(v)]) return false;
    }
    for (Int h : l2.subgroup) {
        Int u = h;
        while (std::gcd(u, m_lcm) != 1) u += f2;
        if (!member1[static_cast<std::size_t>(norm_res(u, f1))]) return false;
    }
    return true;
}

Int degree(const AbelianField& l) {
    return euler_phi(l.modulus) / static_cast<Int>(l.subgroup.size());
}

Int rel_cyclotomic_degree(const AbelianField& k, CycSpec spec) {
    const AbelianField e = make_cyclotomic(spec);
    return degree(e) / degree(intersect(k, e));
}

bool totally_imaginary(const AbelianField& k) {
    if (k.modulus == 1) return false;
    return !k.contains_residue(k.modulus - 1);
}

Int local_degree_at_2(const AbelianField& k) {
    const Int f = k.modulus;
    if (f == 1) return 1;
    const Int fo = odd_part(f);

    // Decomposition group at 2 in (Z/f)^x: inertia = units congruent to 1 mod
    // the odd part, Frobenius = 2 on the odd part and 1 on the 2-part.
    std::vector<Int> gens(k.subgroup);
    for (Int u = 1; u <= f; u += fo)
        if (std::gcd(u, f) == 1) gens.push_back(u);
    if (fo > 1) {
        const Int two_part = f / fo;
        gens.push_back(two_part == 1 ? norm_res(2, fo) : crt(1, two_part, norm_res(2, fo), fo));
    }
    const std::vector<Int> dh = close_under_mul(f, gens);
    return static_cast<Int>(dh.size()) / static_cast<Int>(k.subgroup.size());
}

} // namespace ancprim
