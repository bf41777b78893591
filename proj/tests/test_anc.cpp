#include "ancprim/anc.hpp"

#include "ancprim/arith.hpp"

#include <doctest.h>

using namespace ancprim;

namespace {

AncGroup quat(Int n) { return make_anc(GroupKind::quaternion, n); }
AncGroup dih(Int n) { return make_anc(GroupKind::dihedral, n); }
AncGroup sdih(Int n) { return make_anc(GroupKind::semidihedral, n); }

FieldDescriptor q_field() { return describe_field(rationals()); }

} // namespace

TEST_CASE("make_anc validation") {
    CHECK(make_anc(GroupKind::cyclic, 1).order() == 1);
    CHECK(quat(4).order() == 8);   // Q_8
    CHECK(dih(8).order() == 16);   // D_16
    CHECK(sdih(24).order() == 48); // SD_16 x C_3
    CHECK(sdih(24).odd_part_m() == 3);
    CHECK_THROWS_AS(make_anc(GroupKind::dihedral, 4), std::invalid_argument);  // D_8 excluded
    CHECK_THROWS_AS(make_anc(GroupKind::quaternion, 6), std::invalid_argument);
}

TEST_CASE("theta, delta, character_flavor") {
    CHECK(theta(quat(4)) == -1);
    CHECK(delta(quat(4)) == 1);
    CHECK(theta(sdih(8)) == 1);
    CHECK(delta(sdih(8)) == -1);
    CHECK(theta(dih(8)) == 1);
    CHECK(delta(dih(8)) == 1);
    CHECK(character_flavor(dih(8)) == Flavor::plus);
    CHECK(character_flavor(quat(8)) == Flavor::plus);
    CHECK(character_flavor(sdih(8)) == Flavor::minus);
    CHECK_THROWS_AS(theta(make_anc(GroupKind::cyclic, 8)), std::invalid_argument);
}

TEST_CASE("cyclotomic integer ring") {
    // Z[x]/(x^2 + 1), x = zeta_4
    const CycInt i = CycInt::zeta_pow(2, 1);
    CHECK(i * i == -CycInt::one(2));
    CHECK(i * CycInt::zeta_pow(2, -1) == CycInt::one(2));

    const CycInt z8 = CycInt::zeta_pow(3, 1);
    CHECK(z8 * z8 * z8 * z8 == -CycInt::one(3));
    CHECK(CycInt::zeta_pow(3, 5) == -z8);

    // galois action is multiplicative on a sample
    const CycInt v = CycInt::zeta_pow(4, 3) + CycInt::zeta_pow(4, -3);
    const CycInt w = CycInt::zeta_pow(4, 1) - CycInt::one(4);
    for (Int u = 1; u < 16; u += 2) CHECK((v * w).galois(u) == v.galois(u) * w.galois(u));
}

TEST_CASE("standard_rep entries") {
    // Q_8, k = 1: a = diag(zeta_4, zeta_4^-1), g = [[0,1],[-1,0]]
    const Rep2 r8 = standard_rep(quat(4), 1);
    CHECK(r8.a_mat.e00 == CycInt::zeta_pow(2, 1));
    CHECK(r8.a_mat.e11 == CycInt::zeta_pow(2, -1));
    CHECK(r8.a_mat.e01.is_zero());
    CHECK(r8.g_mat.e01 == CycInt::one(2));
    CHECK(r8.g_mat.e10 == -CycInt::one(2));

    const Rep2 rd = standard_rep(dih(8), 1);
    CHECK(rd.a_mat.e00 == CycInt::zeta_pow(3, 1));
    CHECK(rd.a_mat.e11 == CycInt::zeta_pow(3, -1));
    CHECK(rd.g_mat.e10 == CycInt::one(3));

    const Rep2 rs = standard_rep(sdih(8), 3);
    CHECK(rs.a_mat.e00 == CycInt::zeta_pow(3, 3));
    CHECK(rs.a_mat.e11 == -CycInt::zeta_pow(3, -3));
    CHECK(rs.g_mat.e10 == CycInt::one(3));

    CHECK_THROWS_AS(standard_rep(quat(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(standard_rep(quat(4), 5), std::invalid_argument);
}

TEST_CASE("verify_presentation") {
    CHECK(verify_presentation(standard_rep(quat(4), 1), quat(4)).ok);
    CHECK(verify_presentation(standard_rep(sdih(8), 1), sdih(8)).ok);
    CHECK(verify_presentation(standard_rep(dih(8), 3), dih(8)).ok);

    // flipping theta on D_16 breaks g^2 = 1
    Rep2 flipped = standard_rep(dih(8), 1);
    flipped.g_mat.e10 = -flipped.g_mat.e10;
    const PresentationCheck pc = verify_presentation(flipped, dih(8));
    CHECK(!pc.ok);
    CHECK(!pc.failures.empty());
}

TEST_CASE("presentations hold exhaustively up to 2-part order 256") {
    for (GroupKind kind : {GroupKind::dihedral, GroupKind::semidihedral, GroupKind::quaternion}) {
        const int j_min = kind == GroupKind::quaternion ? 2 : 3;
        for (int j = j_min; j <= 7; ++j) {
            const AncGroup g = make_anc(kind, Int{1} << j);
            for (Int k = 1; k < (Int{1} << j); k += 2)
                CHECK(verify_presentation(standard_rep(g, k), g).ok);
        }
    }
}

TEST_CASE("character field of the trace is E_{2^j}^pm, independent of k") {
    for (GroupKind kind : {GroupKind::dihedral, GroupKind::semidihedral, GroupKind::quaternion}) {
        const int j_min = kind == GroupKind::quaternion ? 2 : 3;
        for (int j = j_min; j <= 6; ++j) {
            const AncGroup g = make_anc(kind, Int{1} << j);
            const Flavor expected_flavor = delta(g) == 1 ? Flavor::plus : Flavor::minus;
            const AbelianField expected = make_cyclotomic({Int{1} << j, expected_flavor});
            for (Int k = 1; k < (Int{1} << j); k += 2) {
                const Rep2 rep = standard_rep(g, k);
                CHECK(field_generated(rep.a_mat.trace()) == expected);
            }
        }
    }
}

TEST_CASE("sum_of_two_squares_is_minus_one") {
    CHECK(sum_of_two_squares_is_minus_one(q_field(), 3, false));
    CHECK(!sum_of_two_squares_is_minus_one(q_field(), 1, false));
    CHECK(sum_of_two_squares_is_minus_one(q_field(), 7, true));
    CHECK_THROWS_AS(sum_of_two_squares_is_minus_one(q_field(), 4, false), std::invalid_argument);
}

TEST_CASE("schur_index") {
    CHECK(schur_index(dih(8), q_field()) == 1);
    CHECK(schur_index(quat(4), q_field()) == 2);  // classical Q_8 over Q
    CHECK(schur_index(quat(12), q_field()) == 1); // Q_8 x C_3
    for (Int n : {8, 16, 24, 40})
        CHECK(schur_index(sdih(n), q_field()) == 1); // theta = +1 forces index 1
}

TEST_CASE("degree_of_GK") {
    CHECK(degree_of_GK(make_anc(GroupKind::cyclic, 5), q_field()) == 4);
    CHECK(degree_of_GK(quat(4), q_field()) == 4); // rational quaternion group
    CHECK(degree_of_GK(dih(8), q_field()) == 4);

    const FieldDescriptor e8 = describe_field(make_cyclotomic({8, Flavor::plain}));
    for (Int n = 4; n <= 96; n += 4) {
        for (GroupKind kind : {GroupKind::dihedral, GroupKind::semidihedral,
                               GroupKind::quaternion}) {
            if (kind != GroupKind::quaternion && nu2(n) < 3) continue;
            const AncGroup g = make_anc(kind, n);
            for (const FieldDescriptor& k : {q_field(), e8}) {
                const Int deg = degree_of_GK(g, k);
                const Int base = rel_cyclotomic_degree(k.k_ab, {n, Flavor::plain});
                CHECK(deg % 2 == 0);
                CHECK((deg == base || deg == 2 * base));
            }
        }
    }
}
