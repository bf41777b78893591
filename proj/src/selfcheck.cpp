#include "ancprim/selfcheck.hpp"

#include "ancprim/arith.hpp"
#include "ancprim/literals.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ancprim {

namespace {

class Suite {
public:
    explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) {
        result_.name = std::move(name);
    }

    void check(bool ok, const std::string& what) {
        ++result_.checks;
        if (ok) return;
        ++result_.failures;
        if (result_.notes.size() < 5) result_.notes.push_back(what);
    }

    SuiteResult finish() {
        result_.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

private:
    SuiteResult result_;
    std::chrono::steady_clock::time_point start_;
};

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::plain: return "plain";
    case Flavor::plus: return "plus";
    case Flavor::minus: return "minus";
    }
    return "?";
}

const std::vector<Flavor> kAllFlavors{Flavor::plain, Flavor::plus, Flavor::minus};

std::vector<GroupKind> kinds_for(Int n) {
    std::vector<GroupKind> ks{GroupKind::cyclic};
    if (nu2(n) >= 3) {
        ks.push_back(GroupKind::dihedral);
        ks.push_back(GroupKind::semidihedral);
    }
    if (nu2(n) >= 2) ks.push_back(GroupKind::quaternion);
    return ks;
}

} // namespace

CheckOptions CheckOptions::full() { return CheckOptions{}; }

CheckOptions CheckOptions::fast() {
    CheckOptions o;
    o.corpus_quadratic_bound = 15;
    o.corpus_cyclotomic_bound = 24;
    o.corpus_random_count = 8;
    o.quad_table_bound = 20;
    o.cyclo_r_max = 24;
    o.cyclo_n_max = 96;
    o.agreement_n_max = 96;
    o.epm_bound = 48;
    o.dpm_n_max = 48;
    o.lemma_n_max = 96;
    o.presentation_max_order = 64;
    o.witness_n_max = 96;
    o.enumeration_degrees = {1, 2, 4, 6};
    o.local_degree_d_bound = 20;
    o.local_degree_r_max = 24;
    return o;
}

std::vector<CorpusField> standard_corpus(const CheckOptions& opt) {
    std::vector<CorpusField> corpus;
    std::map<std::pair<Int, std::vector<Int>>, std::size_t> seen;
    auto push = [&](FieldDescriptor k, std::string label, std::optional<Int> r,
                    std::optional<Int> d) {
        auto [it, inserted] = seen.insert({{k.k_ab.modulus, k.k_ab.subgroup}, corpus.size()});
        if (!inserted) {
            // same field reached twice (e.g. Q(sqrt,-1) = E_4): keep both oracle tags
            CorpusField& have = corpus[it->second];
            if (r && !have.cyclotomic_r) have.cyclotomic_r = r;
            if (d && !have.quadratic_d) have.quadratic_d = d;
            return;
        }
        corpus.push_back(CorpusField{std::move(k), std::move(label), r, d});
    };

    for (Int a = 1; a <= opt.corpus_quadratic_bound; ++a) {
        for (Int d : {a, -a}) {
            if (d == 1 || !is_squarefree(d)) continue;
            push(quadratic_field(d), "Q(sqrt," + std::to_string(d) + ")", std::nullopt, d);
        }
    }
    for (Int r = 1; r <= opt.corpus_cyclotomic_bound; ++r) {
        if (r % 4 == 2) continue;
        push(describe_field(make_cyclotomic({r, Flavor::plain})), "E(" + std::to_string(r) + ")",
             r, std::nullopt);
        if (nu2(r) >= 3) {
            push(describe_field(make_cyclotomic({r, Flavor::plus})),
                 "E+(" + std::to_string(r) + ")", std::nullopt, std::nullopt);
            push(describe_field(make_cyclotomic({r, Flavor::minus})),
                 "E-(" + std::to_string(r) + ")", std::nullopt, std::nullopt);
        }
    }

    // Deterministic sample of subgroup fields (raw engine output avoids
    // library-specific RNG distributions).
    std::mt19937_64 rng(opt.corpus_seed);
    int produced = 0;
    while (produced < opt.corpus_random_count) {
        const Int f = 1 + static_cast<Int>(rng() % static_cast<unsigned long long>(
                                                       opt.corpus_random_modulus));
        std::vector<Int> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) {
            Int u = 1 + static_cast<Int>(rng() % static_cast<unsigned long long>(f));
            while (std::gcd(u, f) != 1) u = 1 + (u % f);
            gens.push_back(u);
        }
        AbelianField k = canonicalize(f, gens);
        const auto before = seen.size();
        push(describe_field(k), format_field(k), std::nullopt, std::nullopt);
        if (seen.size() > before) ++produced;
    }
    return corpus;
}

// --- criterion: quadratic cyclometer tables reproduce the closed form -----

SuiteResult check_quadratic_cyclometers(const CheckOptions& opt) {
    Suite suite("quadratic cyclometer tables");
    for (Int a = 2; a <= opt.quad_table_bound; ++a) {
        for (Int d : {a, -a}) {
            if (!is_squarefree(d)) continue;
            const FieldDescriptor k = quadratic_field(d);
            const Int dm8 = ((d % 8) + 8) % 8;
            const Int cond = dm8 % 4 == 1 ? a : 4 * a;
            suite.check(k.k_ab.modulus == cond,
                        "conductor of Q(sqrt," + std::to_string(d) + ")");

            const CyclometerTable table = cyclometer_table(k.k_ab);
            Int want_plus = 0, want_minus = 0;
            if (dm8 == 1 || dm8 == 5) { want_plus = cond; want_minus = cond; }
            else if (dm8 == 2) { want_plus = cond; want_minus = 2 * cond; }
            else if (dm8 == 6) { want_plus = 0; want_minus = cond; }
            const CyclometerEntry& top = table.at_divisor(cond);
            suite.check(top == CyclometerEntry{cond, want_plus, want_minus},
                        "c(f) row for d=" + std::to_string(d));

            for (const auto& [n, e] : table.entries) {
                if (n == cond) continue;
                suite.check(e == CyclometerEntry{1, 1, 1},
                            "proper divisor row n=" + std::to_string(n) +
                                " for d=" + std::to_string(d));
            }
            for (Int n : {cond + 1, 2 * cond, 3 * cond, Int{7}}) {
                for (Flavor fl : kAllFlavors) {
                    const Int direct = cyclometer(k.k_ab, n, fl);
                    const CyclometerEntry via = table.lookup(n);
                    const Int expect = fl == Flavor::plain  ? via.c_plain
                                       : fl == Flavor::plus ? via.c_plus
                                                            : via.c_minus;
                    suite.check(direct == expect, "periodic lookup d=" + std::to_string(d) +
                                                      " n=" + std::to_string(n));
                }
            }
        }
    }
    return suite.finish();
}

// --- criterion: cyclometers of cyclotomic fields match the closed forms ---

SuiteResult check_cyclotomic_cyclometers(const CheckOptions& opt) {
    Suite suite("cyclotomic cyclometer formulas");
    for (Int r = 1; r <= opt.cyclo_r_max; ++r) {
        if (r % 4 == 2) continue;
        const AbelianField k = make_cyclotomic({r, Flavor::plain});
        for (Int n = 1; n <= opt.cyclo_n_max; ++n) {
            const Int g = std::gcd(r, n);
            const Int want_plain = g % 4 == 2 ? g / 2 : g;
            const Int want_pm = (g % 4 == 1 || g % 4 == 3) ? g : (g % 4 == 2 ? g / 2 : 0);
            const std::string at = "r=" + std::to_string(r) + " n=" + std::to_string(n);
            suite.check(cyclometer(k, n, Flavor::plain) == want_plain, "c " + at);
            suite.check(cyclometer(k, n, Flavor::plus) == want_pm, "c+ " + at);
            suite.check(cyclometer(k, n, Flavor::minus) == want_pm, "c- " + at);
        }
    }
    return suite.finish();
}

// --- criterion: the three decision routes agree ---------------------------

SuiteResult check_route_agreement(const CheckOptions& opt) {
    Suite suite("route agreement");
    const auto corpus = standard_corpus(opt);
    for (const CorpusField& cf : corpus) {
        for (Int n = 1; n <= opt.agreement_n_max; ++n) {
            for (GroupKind kind : kinds_for(n)) {
                const AncGroup g = make_anc(kind, n);
                const bool via_char = kind == GroupKind::cyclic
                                          ? cyclic_primitive(cf.k, n).primitive
                                          : decide(g, cf.k).primitive;
                const bool via_raw = kind == GroupKind::cyclic
                                         ? cyclic_primitive_raw(cf.k, n).primitive
                                         : decide_raw(g, cf.k).primitive;
                const std::string at = cf.label + " " + format_group(g);
                suite.check(via_char == via_raw, "char vs raw at " + at);
                if (cf.cyclotomic_r)
                    suite.check(via_char == cyclotomic_family(*cf.cyclotomic_r, g).primitive,
                                "char vs cyclotomic family at " + at);
                if (cf.quadratic_d)
                    suite.check(via_char == quadratic_family(*cf.quadratic_d, g).primitive,
                                "char vs quadratic family at " + at);
            }
        }
    }
    return suite.finish();
}

// --- criterion: E^{+-} intersection formulas -------------------------------

SuiteResult check_epm_intersections(const CheckOptions& opt) {
    Suite suite("E^pm intersection formulas");
    auto e = [](Int n, Flavor f) { return make_cyclotomic({n, f}); };
    for (Int n = 1; n <= opt.epm_bound; ++n) {
        for (Int m = 1; m <= opt.epm_bound; ++m) {
            const Int g = std::gcd(n, m);
            const int vn = nu2(n), vm = nu2(m);
            const std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m);

            suite.check(intersect(e(n, Flavor::plus), e(m, Flavor::plus)) == e(g, Flavor::plus),
                        "E+ n E+ at " + at);
            suite.check(intersect(e(n, Flavor::plus), e(m, Flavor::plain)) == e(g, Flavor::plus),
                        "E+ n E at " + at);

            const AbelianField want_pm = (0 < vm && vm <= vn) ? e(g / 2, Flavor::plus)
                                                              : e(g, Flavor::plus);
            suite.check(intersect(e(n, Flavor::plus), e(m, Flavor::minus)) == want_pm,
                        "E+ n E- at " + at);

            const AbelianField want_mm = (vn != 0 && vm != 0 && vn != vm)
                                             ? e(g / 2, Flavor::plus)
                                             : e(g, Flavor::minus);
            suite.check(intersect(e(n, Flavor::minus), e(m, Flavor::minus)) == want_mm,
                        "E- n E- at " + at);

            const AbelianField want_em =
                vn >= vm ? e(g, Flavor::minus) : e(g, Flavor::plus);
            suite.check(intersect(e(n, Flavor::plain), e(m, Flavor::minus)) == want_em,
                        "E n E- at " + at);
        }
    }
    return suite.finish();
}

// --- criterion: structure of the sets D_K^o(n) ----------------------------

SuiteResult check_dpm_properties(const CheckOptions& opt) {
    Suite suite("D-set structure");
    const auto corpus = standard_corpus(opt);
    for (const CorpusField& cf : corpus) {
        const AbelianField& k = cf.k.k_ab;
        for (Int n = 1; n <= opt.dpm_n_max; ++n) {
            const Int bound = 4 * n;
            const std::string at = cf.label + " n=" + std::to_string(n);

            std::vector<std::vector<Int>> sets;
            std::vector<Int> cs;
            for (Flavor fl : kAllFlavors) {
                sets.push_back(brute_D(k, n, fl, bound));
                cs.push_back(cyclometer(k, n, fl));
            }

            for (std::size_t i = 0; i < 3; ++i) {
                const auto& set = sets[i];
                const Int c = cs[i];
                const std::string fat = at + " " + flavor_name(kAllFlavors[i]);
                if (c == 0) {
                    suite.check(set.empty(), "empty D has c=0 at " + fat);
                    continue;
                }
                suite.check(!set.empty() && set.front() == c, "min(D)=c at " + fat);
                suite.check(std::all_of(set.begin(), set.end(),
                                        [c](Int d) { return d % c == 0; }),
                            "D inside c*N at " + fat);
                if (kAllFlavors[i] != Flavor::minus) {
                    suite.check(n % c == 0, "c | n at " + fat);
                    std::vector<Int> multiples;
                    for (Int d = c; d <= bound; d += c) multiples.push_back(d);
                    suite.check(set == multiples, "D = c*N at " + fat);
                }
            }

            // d in D^- implies (d,n) or 2(d,n) in D^-
            for (Int d : sets[2]) {
                const Int g = std::gcd(d, n);
                suite.check(in_D(k, n, Flavor::minus, g) || in_D(k, n, Flavor::minus, 2 * g),
                            "gcd closure of D- at " + at);
            }

            // odd parts of the three sets coincide
            auto odds = [](const std::vector<Int>& v) {
                std::vector<Int> o;
                for (Int d : v)
                    if (d % 2 == 1) o.push_back(d);
                return o;
            };
            suite.check(odds(sets[0]) == odds(sets[1]) && odds(sets[1]) == odds(sets[2]),
                        "odd slices agree at " + at);

            if (cs[1] == 0 && cs[2] != 0) {
                suite.check(cs[2] % 8 == 0, "8 | c- at " + at);
                std::vector<Int> odd_multiples;
                for (Int d = cs[2]; d <= bound; d += 2 * cs[2]) odd_multiples.push_back(d);
                suite.check(sets[2] == odd_multiples, "D- = c-*(2N-1) at " + at);
            }
            if (cs[1] != 0) {
                std::vector<Int> want, got;
                for (Int d : sets[1])
                    if (2 * d <= bound) want.push_back(2 * d);
                for (Int d : sets[2])
                    if (d % 2 == 0) got.push_back(d);
                suite.check(want == got, "even D- = 2 D+ at " + at);
            }

            // periodicity through the conductor
            for (Flavor fl : kAllFlavors) {
                suite.check(cyclometer(k, n, fl) ==
                                cyclometer(k, std::gcd(n, k.modulus), fl),
                            "conductor periodicity at " + at);
            }
        }
    }
    return suite.finish();
}

// --- criterion: degree and sqrt(-1) membership lemmas ----------------------

SuiteResult check_degree_membership_lemmas(const CheckOptions& opt) {
    Suite suite("relative degree and sqrt(-1) lemmas");
    const auto corpus = standard_corpus(opt);
    for (const CorpusField& cf : corpus) {
        const AbelianField& k = cf.k.k_ab;
        for (Int n = 1; n <= opt.lemma_n_max; ++n) {
            const std::string at = cf.label + " n=" + std::to_string(n);
            const Int deg_n = rel_cyclotomic_degree(k, {n, Flavor::plain});
            const Int c_n = cyclometer(k, n, Flavor::plain);

            for (const auto& [p, e] : factor(n).factors) {
                (void)e;
                const bool drop_p =
                    deg_n / rel_cyclotomic_degree(k, {n / p, Flavor::plain}) == p;
                const bool formula = n % (p * p) == 0 && (n / c_n) % p == 0;
                suite.check(drop_p == formula,
                            "index formula p=" + std::to_string(p) + " at " + at);
            }

            if (n % 4 == 0) {
                const Int cp = cyclometer(k, n, Flavor::plus);
                const Int cm = cyclometer(k, n, Flavor::minus);
                const bool no_i_plus = deg_n != rel_cyclotomic_degree(k, {n, Flavor::plus});
                suite.check(no_i_plus == (cp != 0), "sqrt(-1) in E+ at " + at);

                const bool no_i_minus = deg_n != rel_cyclotomic_degree(k, {n, Flavor::minus});
                const bool via_plus = cp != 0 && n % (2 * cp) == 0;
                const bool via_minus = cm != 0 && n % cm == 0 && n % (2 * cm) != 0;
                suite.check(no_i_minus == (via_plus || via_minus), "sqrt(-1) in E- at " + at);
            }
        }
    }
    return suite.finish();
}

// --- criterion: presentation relations hold exactly ------------------------

SuiteResult check_presentations(const CheckOptions& opt) {
    Suite suite("presentation checks");
    for (GroupKind kind : {GroupKind::dihedral, GroupKind::semidihedral, GroupKind::quaternion}) {
        const int j_min = kind == GroupKind::quaternion ? 2 : 3;
        for (int j = j_min; (Int{2} << j) <= opt.presentation_max_order; ++j) {
            const AncGroup g = make_anc(kind, Int{1} << j);
            for (Int k = 1; k < (Int{1} << j); k += 2) {
                const PresentationCheck pc = verify_presentation(standard_rep(g, k), g);
                std::string msg = format_group(g) + " k=" + std::to_string(k);
                for (const auto& f : pc.failures) msg += "; " + f;
                suite.check(pc.ok, msg);
            }
        }
    }
    return suite.finish();
}

// --- criterion: witness fields certify every group -------------------------

SuiteResult check_witnesses(const CheckOptions& opt) {
    Suite suite("witness soundness");
    for (Int n = 1; n <= opt.witness_n_max; ++n) {
        for (GroupKind kind : kinds_for(n)) {
            const AncGroup g = make_anc(kind, n);
            suite.check(decide(g, witness_field(g)).primitive,
                        "witness fails for " + format_group(g));
        }
    }
    return suite.finish();
}

// --- criterion: enumeration equals brute force over Q ----------------------

SuiteResult check_enumeration(const CheckOptions& opt) {
    Suite suite("degree enumeration over Q");
    const FieldDescriptor q = describe_field(rationals());
    for (Int d : opt.enumeration_degrees) {
        const auto got = enumerate_degree(q, d);

        std::vector<std::pair<GroupKind, Int>> brute;
        for (GroupKind kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::semidihedral,
                               GroupKind::quaternion}) {
            for (Int n = 1; n <= 2 * d * d; ++n) {
                const int j = nu2(n);
                if ((kind == GroupKind::dihedral || kind == GroupKind::semidihedral) && j < 3)
                    continue;
                if (kind == GroupKind::quaternion && j < 2) continue;
                const AncGroup g = make_anc(kind, n);
                if (degree_of_GK(g, q) == d && decide(g, q).primitive)
                    brute.emplace_back(kind, n);
            }
        }
        std::vector<std::pair<GroupKind, Int>> got_pairs;
        for (const auto& [g, v] : got) {
            (void)v;
            got_pairs.emplace_back(g.kind, g.n);
        }
        suite.check(got_pairs == brute, "enumeration vs scan at d=" + std::to_string(d));

        std::vector<Int> cyclic_expected;
        for (Int n = 1; n <= 2 * d * d; ++n)
            if (is_squarefree(n) && euler_phi(n) == d) cyclic_expected.push_back(n);
        std::vector<Int> cyclic_got;
        for (const auto& [g, v] : got) {
            (void)v;
            if (g.kind == GroupKind::cyclic) cyclic_got.push_back(g.n);
        }
        suite.check(cyclic_got == cyclic_expected,
                    "cyclic sublist vs phi fibers at d=" + std::to_string(d));
    }
    return suite.finish();
}

// --- criterion: local degrees at 2 -----------------------------------------

SuiteResult check_local_degrees(const CheckOptions& opt) {
    Suite suite("local degrees at 2");
    for (Int a = 2; a <= opt.local_degree_d_bound; ++a) {
        for (Int d : {a, -a}) {
            if (!is_squarefree(d)) continue;
            const Int ld = local_degree_at_2(quadratic_field(d).k_ab);
            const bool split = ((d % 8) + 8) % 8 == 1;
            suite.check((ld == 1) == split,
                        "quadratic local degree d=" + std::to_string(d) + " got " +
                            std::to_string(ld));
        }
    }
    for (Int r = 1; r <= opt.local_degree_r_max; r += 2) {
        const Int ld = local_degree_at_2(make_cyclotomic({r, Flavor::plain}));
        suite.check(ld == ord_mod(2, r),
                    "cyclotomic local degree r=" + std::to_string(r));
    }
    return suite.finish();
}

std::vector<SuiteResult> run_all_checks(const CheckOptions& opt) {
    return {check_quadratic_cyclometers(opt), check_cyclotomic_cyclometers(opt),
            check_route_agreement(opt),       check_epm_intersections(opt),
            check_dpm_properties(opt),        check_degree_membership_lemmas(opt),
            check_presentations(opt),         check_witnesses(opt),
            check_enumeration(opt),           check_local_degrees(opt)};
}

} // namespace ancprim
