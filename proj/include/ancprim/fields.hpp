#pragma once

#include "ancprim/common.hpp"

#include <vector>

namespace ancprim {

enum class Flavor { plain, plus, minus };

// A labeled cyclotomic field E_n, E_n^+ or E_n^-.
struct CycSpec {
    Int n = 1;
    Flavor flavor = Flavor::plain;
};

// An abelian number field K, encoded conductor-canonically as the subgroup
// H = Gal(E_f/K) of (Z/f)^x fixing K.
//
// Invariants: subgroup is sorted, multiplicatively closed, contains 1;
// no proper divisor f' of f has ker((Z/f)^x -> (Z/f')^x) inside the subgroup;
// the modulus is never = 2 mod 4 (E_r = E_2r for odd r). Residues are stored
// in [1, f]; for f = 1 the trivial group is {1}.
struct AbelianField {
    Int modulus = 1;
    std::vector<Int> subgroup{1};

    bool operator==(const AbelianField&) const = default;
    bool contains_residue(Int u) const;
};

AbelianField rationals();

// All units in [1, f]; unit_group(1) = {1}.
std::vector<Int> unit_group(Int f);

// Closes the generators under multiplication mod f and reduces the modulus
// to the conductor of the resulting subgroup.
AbelianField canonicalize(Int f, std::vector<Int> generators);

AbelianField make_cyclotomic(CycSpec spec);

// Largest field contained in both (subgroup generated by the lifted
// subgroups at lcm of the moduli, conductor-reduced).
AbelianField intersect(const AbelianField& l1, const AbelianField& l2);

// Smallest field containing both (intersection of the lifted subgroups).
AbelianField compositum(const AbelianField& l1, const AbelianField& l2);

// True iff l1 is a subfield of l2.
bool is_subfield(const AbelianField& l1, const AbelianField& l2);

Int degree(const AbelianField& l);

// [E_spec K : K], valid because E_spec/Q is abelian Galois.
Int rel_cyclotomic_degree(const AbelianField& k, CycSpec spec);

// -1 mod f not in the subgroup; false for Q.
bool totally_imaginary(const AbelianField& k);

// The common local degree [K_p : Q_2] over all primes p | 2 of K.
Int local_degree_at_2(const AbelianField& k);

} // namespace ancprim
