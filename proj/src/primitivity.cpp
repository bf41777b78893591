#include "ancprim/primitivity.hpp"

#include "ancprim/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ancprim {

namespace {

Verdict seal(std::string route, std::vector<Condition> conditions) {
    Verdict v;
    v.route = std::move(route);
    v.conditions = std::move(conditions);
    v.primitive = std::all_of(v.conditions.begin(), v.conditions.end(),
                              [](const Condition& c) { return c.ok; });
    return v;
}

struct ConditionList {
    std::vector<Condition> items;
    void add(std::string id, bool ok, std::string detail) {
        items.push_back(Condition{std::move(id), ok, std::move(detail)});
    }
};

std::string show(Int v) { return std::to_string(v); }

std::vector<Int> prime_divisors(Int n) {
    std::vector<Int> ps;
    for (const auto& [p, e] : factor(n).factors) {
        (void)e;
        ps.push_back(p);
    }
    return ps;
}

bool valid_for_kind(GroupKind kind, Int n) {
    switch (kind) {
    case GroupKind::cyclic: return true;
    case GroupKind::dihedral:
    case GroupKind::semidihedral: return nu2(n) >= 3;
    case GroupKind::quaternion: return nu2(n) >= 2;
    }
    return false;
}

} // namespace

Verdict cyclic_primitive(const FieldDescriptor& k, Int n) {
    if (n < 1) throw std::invalid_argument("cyclic_primitive: n must be positive");
    const Int c = cyclometer(k.k_ab, n, Flavor::plain);
    ConditionList cs;
    cs.add("n_divides_aug_c", divides_aug(n, c),
           "n=" + show(n) + " c_K(n)=" + show(c));
    return seal("char", std::move(cs.items));
}

Verdict cyclic_primitive_raw(const FieldDescriptor& k, Int n) {
    if (n < 1) throw std::invalid_argument("cyclic_primitive_raw: n must be positive");
    const Int deg_n = rel_cyclotomic_degree(k.k_ab, {n, Flavor::plain});
    ConditionList cs;
    for (Int p : prime_divisors(n)) {
        const Int ratio = deg_n / rel_cyclotomic_degree(k.k_ab, {n / p, Flavor::plain});
        cs.add("index_at_" + show(p), ratio != p,
               "[E_nK:E_{n/" + show(p) + "}K]=" + show(ratio));
    }
    return seal("raw", std::move(cs.items));
}

Verdict decide(const AncGroup& g, const FieldDescriptor& k) {
    if (g.kind == GroupKind::cyclic) return cyclic_primitive(k, g.n);
    if (!valid_for_kind(g.kind, g.n)) throw std::invalid_argument("decide: invalid ANC group");

    const Int n = g.n;
    const int j = g.two_exponent();
    const Int m = g.odd_part_m();
    const AbelianField& f = k.k_ab;
    const Int c_n = cyclometer(f, n, Flavor::plain);
    ConditionList cs;

    switch (g.kind) {
    case GroupKind::dihedral: {
        const Int cp = cyclometer(f, n, Flavor::plus);
        cs.add("c_plus_nonzero", cp != 0, "c+(n)=" + show(cp));
        cs.add("n_divides_aug_c", divides_aug(n, c_n), "n=" + show(n) + " c(n)=" + show(c_n));
        break;
    }
    case GroupKind::semidihedral: {
        const Int cm = cyclometer(f, n, Flavor::minus);
        cs.add("c_minus_divides_n", cm != 0 && n % cm == 0, "c-(n)=" + show(cm));
        cs.add("n_divides_aug_c", divides_aug(n, c_n), "n=" + show(n) + " c(n)=" + show(c_n));
        break;
    }
    case GroupKind::quaternion: {
        const Int cp = cyclometer(f, n, Flavor::plus);
        cs.add("c_plus_nonzero", cp != 0, "c+(n)=" + show(cp));
        if (j >= 4) {
            cs.add("n_divides_aug_c", divides_aug(n, c_n), "n=" + show(n) + " c(n)=" + show(c_n));
            cs.add("imaginary_or_odd_part", k.totally_imaginary || m > 1,
                   "imaginary=" + show(k.totally_imaginary) + " m=" + show(m));
        } else {
            const Int c_m = cyclometer(f, m, Flavor::plain);
            cs.add("m_divides_aug_c", divides_aug(m, c_m), "m=" + show(m) + " c(m)=" + show(c_m));
            const bool local_even = ord2_parity(m) == Parity::even || k.local_deg2_even;
            if (j == 2) {
                cs.add("local_product_even", local_even,
                       "ord(2 mod m) or local degrees at 2 even");
                cs.add("imaginary_or_odd_part", k.totally_imaginary || m > 1,
                       "imaginary=" + show(k.totally_imaginary) + " m=" + show(m));
            } else { // j == 3
                cs.add("imaginary_or_odd_part", k.totally_imaginary || m > 1,
                       "imaginary=" + show(k.totally_imaginary) + " m=" + show(m));
                cs.add("ramified_two_index", !local_even || (n / c_n) % 2 == 1,
                       "n/c(n)=" + show(n / c_n));
            }
        }
        break;
    }
    case GroupKind::cyclic: break;
    }
    return seal("char", std::move(cs.items));
}

Verdict decide_raw(const AncGroup& g, const FieldDescriptor& k) {
    if (g.kind == GroupKind::cyclic)
        throw std::invalid_argument("decide_raw: use cyclic_primitive_raw for cyclic groups");
    if (!valid_for_kind(g.kind, g.n)) throw std::invalid_argument("decide_raw: invalid ANC group");

    const Int n = g.n;
    const int j = g.two_exponent();
    const Int m = g.odd_part_m();
    const AbelianField& f = k.k_ab;
    const Flavor o = character_flavor(g);

    const Int deg_n = rel_cyclotomic_degree(f, {n, Flavor::plain});
    const Int deg_o = rel_cyclotomic_degree(f, {n, o});
    ConditionList cs;

    // A primitive group has all its index-2 subgroups irreducible; the
    // cyclic maximal subgroup is irreducible iff it is homogeneous and the
    // Schur-index obstruction vanishes.
    cs.add("maximal_cyclic_homogeneous", deg_n != deg_o,
           "[E_nK:K]=" + show(deg_n) + " [E_n^oK:K]=" + show(deg_o));
    const bool soluble =
        theta(g) == 1 || sum_of_two_squares_is_minus_one(k, m, j >= 3);
    cs.add("maximal_cyclic_irreducible", soluble,
           theta(g) == 1 ? "theta=+1" : "x^2+y^2=-1 soluble: " + show(soluble));

    const bool odd_primes_only = g.kind == GroupKind::quaternion && j <= 3;
    for (Int p : prime_divisors(n)) {
        if (odd_primes_only && p == 2) continue;
        const Int ratio = deg_n / rel_cyclotomic_degree(f, {n / p, Flavor::plain});
        cs.add("index_at_" + show(p), ratio != p,
               "[E_nK:E_{n/" + show(p) + "}K]=" + show(ratio));
    }
    if (g.kind == GroupKind::quaternion && j == 3) {
        const bool local_even = ord2_parity(m) == Parity::even || k.local_deg2_even;
        const Int ratio2 = deg_n / rel_cyclotomic_degree(f, {n / 2, Flavor::plain});
        cs.add("two_part_index", !local_even || ratio2 != 2,
               "[E_nK:E_{n/2}K]=" + show(ratio2));
    }
    return seal("raw", std::move(cs.items));
}

Verdict cyclotomic_family(Int r, const AncGroup& g) {
    if (r < 1 || r % 4 == 2)
        throw std::invalid_argument("cyclotomic_family: r must be positive and not 2 mod 4");

    const Int n = g.n;
    const int j = g.two_exponent();
    const Int m = g.odd_part_m();
    ConditionList cs;

    if (g.kind == GroupKind::cyclic) {
        cs.add("n_divides_aug_r", divides_aug(n, r), "n=" + show(n) + " r=" + show(r));
    } else if (g.kind == GroupKind::quaternion && (j == 2 || j == 3)) {
        const bool r_odd = r % 2 == 1;
        cs.add("r_odd", r_odd, "r=" + show(r));
        cs.add("m_divides_aug_r", divides_aug(m, r), "m=" + show(m));
        cs.add("rm_gt_1", r * m > 1, "rm=" + show(r * m));
        const bool even_needed = j == 2;
        bool parity_ok = false;
        if (r_odd)
            parity_ok = (ord2_parity(r * m) == Parity::even) == even_needed;
        cs.add(even_needed ? "ord2_rm_even" : "ord2_rm_odd", parity_ok,
               "ord(2 mod " + show(r * m) + ") parity");
    } else {
        cs.add("kind_in_family", false, "not a primitive kind over cyclotomic fields");
    }
    return seal("family-cyclotomic", std::move(cs.items));
}

Verdict quadratic_family(Int d, const AncGroup& g) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw std::invalid_argument("quadratic_family: d must be squarefree and not 0 or 1");

    const Int ad = d < 0 ? -d : d;
    const Int dm8 = ((d % 8) + 8) % 8;
    const Int cond = dm8 % 4 == 1 ? ad : 4 * ad;
    const Int n = g.n;
    const int j = g.two_exponent();
    const Int m = g.odd_part_m();
    ConditionList cs;

    switch (g.kind) {
    case GroupKind::cyclic:
        cs.add("squarefree_or_conductor_window",
               is_squarefree(n) || (n % cond == 0 && divides_aug(n, cond)),
               "n=" + show(n) + " f=" + show(cond));
        break;
    case GroupKind::dihedral:
        cs.add("two_part_order_16", j == 3, "j=" + show(j));
        cs.add("d_2_mod_8", dm8 == 2, "d=" + show(d));
        cs.add("m_squarefree", is_squarefree(m), "m=" + show(m));
        cs.add("d_divides_2m", (2 * m) % ad == 0, "2m=" + show(2 * m));
        break;
    case GroupKind::semidihedral:
        cs.add("two_part_order_16", j == 3, "j=" + show(j));
        cs.add("d_6_mod_8", dm8 == 6, "d=" + show(d));
        cs.add("m_squarefree", is_squarefree(m), "m=" + show(m));
        cs.add("d_divides_2m", (2 * m) % ad == 0, "2m=" + show(2 * m));
        break;
    case GroupKind::quaternion:
        if (j == 2) {
            cs.add("m_squarefree", is_squarefree(m), "m=" + show(m));
            cs.add("positive_needs_odd_part", d < 0 || m > 1, "d=" + show(d) + " m=" + show(m));
            cs.add("split_ord_even", dm8 != 1 || ord2_parity(m) == Parity::even,
                   "d mod 8=" + show(dm8));
            cs.add("ramified_coprime", dm8 % 4 != 3 || m % ad != 0, "d=" + show(d));
        } else if (j == 3) {
            cs.add("m_squarefree", is_squarefree(m), "m=" + show(m));
            cs.add("positive_needs_odd_part", d < 0 || m > 1, "d=" + show(d) + " m=" + show(m));
            cs.add("residue_case",
                   (dm8 == 1 && ord2_parity(m) == Parity::odd) ||
                       (dm8 == 2 && (2 * m) % ad == 0),
                   "d mod 8=" + show(dm8));
        } else {
            cs.add("kind_in_family", false, "|G_2| > 16 is never primitive over quadratic fields");
        }
        break;
    }
    return seal("family-quadratic", std::move(cs.items));
}

FieldDescriptor quadratic_field(Int d) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw std::invalid_argument("quadratic_field: d must be squarefree and not 0 or 1");

    const Int ad = d < 0 ? -d : d;
    const Int dm4 = ((d % 4) + 4) % 4;
    const Int cond = dm4 == 1 ? ad : 4 * ad;
    const Int target = euler_phi(cond) / 2;

    // The subgroup fixing Q(sqrt d) is generated by the residues of split
    // primes; odd primes p with legendre(d, p) = 1 generate it.
    std::vector<Int> gens;
    AbelianField field = canonicalize(cond, {});
    for (Int p = 3; static_cast<Int>(field.subgroup.size()) < target; p += 2) {
        if (p > 200 * cond + 1000)
            throw std::logic_error("quadratic_field: split primes not found");
        if (!is_prime(p) || cond % p == 0) continue;
        const Int dd = ((d % p) + p) % p;
        if (pow_mod(dd, (p - 1) / 2, p) != 1) continue;
        gens.push_back(p % cond);
        field = canonicalize(cond, gens);
        if (field.modulus != cond) {
            // Split primes always land in the index-2 kernel, whose conductor
            // is exactly cond; a smaller conductor means a generator bug.
            throw std::logic_error("quadratic_field: conductor mismatch");
        }
    }
    return describe_field(field);
}

FieldDescriptor witness_field(const AncGroup& g) {
    switch (g.kind) {
    case GroupKind::cyclic:
        return describe_field(make_cyclotomic({g.n, Flavor::plain}));
    case GroupKind::dihedral:
        return describe_field(make_cyclotomic({g.n, Flavor::plus}));
    case GroupKind::semidihedral:
        return describe_field(make_cyclotomic({g.n, Flavor::minus}));
    case GroupKind::quaternion: {
        Int ell = 3;
        while (std::gcd(ell, g.n) != 1 || ord2_parity(ell) != Parity::even) ell += 2;
        return describe_field(make_cyclotomic({g.n * ell, Flavor::plus}));
    }
    }
    throw std::invalid_argument("witness_field: invalid group");
}

std::vector<std::pair<AncGroup, Verdict>> enumerate_degree(const FieldDescriptor& k, Int d) {
    if (d < 1) throw std::invalid_argument("enumerate_degree: d must be positive");
    const Int base_degree = degree(k.k_ab);
    const Int bound = 2 * (d * base_degree) * (d * base_degree);

    std::vector<std::pair<AncGroup, Verdict>> out;
    for (GroupKind kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::semidihedral,
                           GroupKind::quaternion}) {
        if (kind != GroupKind::cyclic && d % 2 != 0) continue; // non-cyclic degrees are even
        for (Int n = 1; n <= bound; ++n) {
            if (!valid_for_kind(kind, n)) continue;
            const AncGroup g = make_anc(kind, n);
            if (degree_of_GK(g, k) != d) continue;
            Verdict v = decide(g, k);
            if (v.primitive) out.emplace_back(g, std::move(v));
        }
    }
    return out;
}

} // namespace ancprim
