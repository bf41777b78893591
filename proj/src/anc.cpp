#include "ancprim/anc.hpp"

#include "ancprim/arith.hpp"

namespace ancprim {

int AncGroup::two_exponent() const { return nu2(n); }
Int AncGroup::odd_part_m() const { return odd_part(n); }
Int AncGroup::order() const { return kind == GroupKind::cyclic ? n : 2 * n; }

AncGroup make_anc(GroupKind kind, Int n) {
    if (n < 1) throw std::invalid_argument("make_anc: n must be positive");
    const int j = nu2(n);
    switch (kind) {
    case GroupKind::cyclic:
        break;
    case GroupKind::dihedral:
    case GroupKind::semidihedral:
        if (j < 3)
            throw std::invalid_argument("make_anc: (semi)dihedral 2-part must have order >= 16");
        break;
    case GroupKind::quaternion:
        if (j < 2)
            throw std::invalid_argument("make_anc: quaternion 2-part must have order >= 8");
        break;
    }
    return AncGroup{kind, n};
}

namespace {
void require_non_cyclic(const AncGroup& g, const char* who) {
    if (g.kind == GroupKind::cyclic)
        throw std::invalid_argument(std::string(who) + ": group must be non-cyclic");
}
} // namespace

int theta(const AncGroup& g) {
    require_non_cyclic(g, "theta");
    return g.kind == GroupKind::quaternion ? -1 : 1;
}

int delta(const AncGroup& g) {
    require_non_cyclic(g, "delta");
    return g.kind == GroupKind::semidihedral ? -1 : 1;
}

Flavor character_flavor(const AncGroup& g) {
    require_non_cyclic(g, "character_flavor");
    return g.kind == GroupKind::semidihedral ? Flavor::minus : Flavor::plus;
}

// ---------------------------------------------------------------------------
// Cyclotomic integers Z[x]/(x^{2^{j-1}} + 1)
// ---------------------------------------------------------------------------

CycInt CycInt::zero(int two_exp) {
    CycInt z;
    z.two_exp = two_exp;
    z.coeff.assign(std::size_t{1} << (two_exp - 1), 0);
    return z;
}

CycInt CycInt::one(int two_exp) {
    CycInt z = zero(two_exp);
    z.coeff[0] = 1;
    return z;
}

CycInt CycInt::zeta_pow(int two_exp, Int e) {
    CycInt z = zero(two_exp);
    const Int full = Int{1} << two_exp;
    const Int half = full / 2;
    Int r = ((e % full) + full) % full;
    if (r < half)
        z.coeff[static_cast<std::size_t>(r)] = 1;
    else
        z.coeff[static_cast<std::size_t>(r - half)] = -1;
    return z;
}

bool CycInt::is_zero() const {
    for (Int c : coeff)
        if (c != 0) return false;
    return true;
}

CycInt CycInt::galois(Int u) const {
    CycInt z = zero(two_exp);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] == 0) continue;
        CycInt t = zeta_pow(two_exp, static_cast<Int>(i) * u);
        for (std::size_t k = 0; k < z.coeff.size(); ++k) z.coeff[k] += coeff[i] * t.coeff[k];
    }
    return z;
}

CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt z = a;
    for (std::size_t i = 0; i < z.coeff.size(); ++i) z.coeff[i] += b.coeff[i];
    return z;
}

CycInt operator-(const CycInt& a, const CycInt& b) {
    CycInt z = a;
    for (std::size_t i = 0; i < z.coeff.size(); ++i) z.coeff[i] -= b.coeff[i];
    return z;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    CycInt z = CycInt::zero(a.two_exp);
    const std::size_t n = z.coeff.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeff[i] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (b.coeff[k] == 0) continue;
            const Int p = a.coeff[i] * b.coeff[k];
            const std::size_t idx = i + k;
            if (idx < n)
                z.coeff[idx] += p; // negacyclic: x^n = -1
            else
                z.coeff[idx - n] -= p;
        }
    }
    return z;
}

CycInt CycInt::operator-() const {
    CycInt z = *this;
    for (Int& c : z.coeff) c = -c;
    return z;
}

Mat2 Mat2::identity(int two_exp) {
    return Mat2{CycInt::one(two_exp), CycInt::zero(two_exp), CycInt::zero(two_exp),
                CycInt::one(two_exp)};
}

Mat2 Mat2::diag(CycInt a, CycInt d) {
    const int te = a.two_exp;
    return Mat2{std::move(a), CycInt::zero(te), CycInt::zero(te), std::move(d)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{e00 * o.e00 + e01 * o.e10, e00 * o.e01 + e01 * o.e11,
                e10 * o.e00 + e11 * o.e10, e10 * o.e01 + e11 * o.e11};
}

Mat2 Mat2::operator-() const { return Mat2{-e00, -e01, -e10, -e11}; }

Mat2 Mat2::pow(Int k) const {
    Mat2 r = identity(e00.two_exp);
    Mat2 b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

CycInt Mat2::trace() const { return e00 + e11; }

// ---------------------------------------------------------------------------
// Standard representations and presentation checks
// ---------------------------------------------------------------------------

Rep2 standard_rep(const AncGroup& g, Int k) {
    require_non_cyclic(g, "standard_rep");
    const int j = g.two_exponent();
    if (k % 2 == 0 || k <= 0 || k >= (Int{1} << j))
        throw std::invalid_argument("standard_rep: k must be odd with 0 < k < 2^j");
    const int d = delta(g);
    const int t = theta(g);

    CycInt lower = CycInt::zeta_pow(j, -k);
    if (d == -1) lower = -lower;
    Rep2 rep;
    rep.a_mat = Mat2::diag(CycInt::zeta_pow(j, k), std::move(lower));
    rep.g_mat = Mat2{CycInt::zero(j), CycInt::one(j),
                     t == 1 ? CycInt::one(j) : -CycInt::one(j), CycInt::zero(j)};
    rep.j = j;
    rep.k = k;
    return rep;
}

PresentationCheck verify_presentation(const Rep2& rep, const AncGroup& g) {
    PresentationCheck res;
    auto fail = [&res](const std::string& what) {
        res.ok = false;
        res.failures.push_back(what);
    };
    require_non_cyclic(g, "verify_presentation");
    const int j = rep.j;
    const Int half_order = Int{1} << (j - 1);
    const Mat2 id = Mat2::identity(j);

    const Mat2 a_half = rep.a_mat.pow(half_order);
    if (a_half == id || !(a_half * a_half == id))
        fail("a does not have multiplicative order 2^j");

    const Mat2 g2 = rep.g_mat * rep.g_mat;
    if (theta(g) == 1) {
        if (!(g2 == id)) fail("g^2 != 1");
    } else {
        if (!(g2 == a_half)) fail("g^2 != a^(2^(j-1))");
        if (!(a_half == -id)) fail("a^(2^(j-1)) != -1");
    }

    // g^-1 a g = a^-1 (delta = 1) or a^(2^(j-1)-1) (delta = -1),
    // checked multiplicatively as a*g = g*target.
    const Mat2 target =
        delta(g) == 1 ? rep.a_mat.pow(2 * half_order - 1) : rep.a_mat.pow(half_order - 1);
    if (!(rep.a_mat * rep.g_mat == rep.g_mat * target)) fail("conjugation relation fails");

    CycInt expected = CycInt::zeta_pow(j, rep.k);
    CycInt second = CycInt::zeta_pow(j, -rep.k);
    expected = delta(g) == 1 ? expected + second : expected - second;
    if (!(rep.a_mat.trace() == expected)) fail("trace of a is not zeta^k + delta zeta^-k");

    return res;
}

AbelianField field_generated(const CycInt& value) {
    const Int f = Int{1} << value.two_exp;
    std::vector<Int> stab;
    for (Int u = 1; u < f; u += 2)
        if (value.galois(u) == value) stab.push_back(u);
    return canonicalize(f, std::move(stab));
}

// ---------------------------------------------------------------------------
// Schur indices and degrees
// ---------------------------------------------------------------------------

bool sum_of_two_squares_is_minus_one(const FieldDescriptor& k, Int m, bool adjoin_sqrt2) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("sum_of_two_squares_is_minus_one: m must be odd");
    const bool imaginary_or_m = k.totally_imaginary || m > 1;
    if (adjoin_sqrt2) return imaginary_or_m; // local degrees even via sqrt(2)
    const bool local_even = ord2_parity(m) == Parity::even || k.local_deg2_even;
    return local_even && imaginary_or_m;
}

int schur_index(const AncGroup& g, const FieldDescriptor& k) {
    require_non_cyclic(g, "schur_index");
    if (theta(g) == 1) return 1;
    return sum_of_two_squares_is_minus_one(k, g.odd_part_m(), g.two_exponent() >= 3) ? 1 : 2;
}

Int degree_of_GK(const AncGroup& g, const FieldDescriptor& k) {
    if (g.kind == GroupKind::cyclic)
        return rel_cyclotomic_degree(k.k_ab, {g.n, Flavor::plain});
    const Int deg_n = rel_cyclotomic_degree(k.k_ab, {g.n, Flavor::plain});
    const Int deg_o = rel_cyclotomic_degree(k.k_ab, {g.n, character_flavor(g)});
    if (deg_n == deg_o) return 2 * deg_n; // sqrt(-1) in E_n^o K
    return schur_index(g, k) * deg_n;
}

} // namespace ancprim
