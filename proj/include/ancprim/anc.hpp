#pragma once

#include "ancprim/field_descriptor.hpp"

#include <string>
#include <vector>

namespace ancprim {

enum class GroupKind { cyclic, dihedral, semidihedral, quaternion };

// A finite nilpotent group whose abelian normal subgroups are all cyclic:
// C_n, or (D/SD/Q of order 2^{j+1}) x C_m with n = 2^j m the order of the
// distinguished cyclic subgroup (index 2 unless the group is cyclic).
struct AncGroup {
    GroupKind kind = GroupKind::cyclic;
    Int n = 1;

    int two_exponent() const; // j = nu_2(n)
    Int odd_part_m() const;   // m
    Int order() const;        // n for cyclic, 2n otherwise
};

// Validates the classification constraints: dihedral/semidihedral need a
// 2-part of order >= 16 (j >= 3), quaternion of order >= 8 (j >= 2).
AncGroup make_anc(GroupKind kind, Int n);

// +1 for (semi)dihedral 2-part, -1 for generalised quaternion.
int theta(const AncGroup& g);
// +1 for dihedral/quaternion 2-part, -1 for semidihedral.
int delta(const AncGroup& g);
// plus for dihedral/quaternion, minus for semidihedral.
Flavor character_flavor(const AncGroup& g);

// Element of Z[zeta] for zeta a primitive 2^two_exp-th root of unity,
// as a polynomial in Z[x]/(x^{2^{two_exp-1}} + 1). Exact integer arithmetic.
struct CycInt {
    int two_exp = 1;
    std::vector<Int> coeff;

    static CycInt zero(int two_exp);
    static CycInt one(int two_exp);
    static CycInt zeta_pow(int two_exp, Int e);

    bool is_zero() const;
    CycInt galois(Int u) const; // zeta -> zeta^u for odd u

    friend CycInt operator+(const CycInt& a, const CycInt& b);
    friend CycInt operator-(const CycInt& a, const CycInt& b);
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt operator-() const;
    bool operator==(const CycInt&) const = default;
};

struct Mat2 {
    CycInt e00, e01, e10, e11;

    static Mat2 identity(int two_exp);
    static Mat2 diag(CycInt a, CycInt d);

    Mat2 operator*(const Mat2& o) const;
    Mat2 operator-() const;
    Mat2 pow(Int k) const;
    CycInt trace() const;
    bool operator==(const Mat2&) const = default;
};

// The standard 2-dimensional representation of the 2-part:
// a -> diag(zeta^k, delta zeta^-k), g -> [[0,1],[theta,0]].
struct Rep2 {
    Mat2 a_mat, g_mat;
    int j = 2; // a has order 2^j
    Int k = 1; // odd, 0 < k < 2^j
};

Rep2 standard_rep(const AncGroup& g, Int k);

struct PresentationCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

// Exact check of the defining relations and the trace of a against the
// expected character value.
PresentationCheck verify_presentation(const Rep2& rep, const AncGroup& g);

// Fixed field of the stabilizer of the value under zeta -> zeta^u, as an
// abelian field. Used to pin character fields.
AbelianField field_generated(const CycInt& value);

// Solubility of x^2 + y^2 = -1 in E_m K (adjoin_sqrt2 = false) or in E_n^+ K
// for 8 | n (adjoin_sqrt2 = true), m odd.
bool sum_of_two_squares_is_minus_one(const FieldDescriptor& k, Int m, bool adjoin_sqrt2);

// Schur index of the faithful irreducible characters; always 1 or 2.
int schur_index(const AncGroup& g, const FieldDescriptor& k);

// Degree of the unique irreducible realization G(K).
Int degree_of_GK(const AncGroup& g, const FieldDescriptor& k);

} // namespace ancprim
