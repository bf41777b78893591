#include "ancprim/arith.hpp"
#include "ancprim/literals.hpp"
#include "ancprim/selfcheck.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using namespace ancprim;
using nlohmann::json;

int run_cyclometer(const std::string& field_lit, Int n, bool has_n, bool as_json) {
    const ParsedField pf = parse_field(field_lit);
    if (has_n) {
        if (n < 1) throw std::invalid_argument("n must be positive");
        const Int c = cyclometer(pf.field, n, Flavor::plain);
        const Int cp = cyclometer(pf.field, n, Flavor::plus);
        const Int cm = cyclometer(pf.field, n, Flavor::minus);
        if (as_json)
            std::cout << json{{"n", n}, {"c", c}, {"c_plus", cp}, {"c_minus", cm}}.dump() << '\n';
        else
            std::cout << c << '\t' << cp << '\t' << cm << '\n';
        return 0;
    }
    const CyclometerTable table = cyclometer_table(pf.field);
    if (as_json)
        std::cout << json{{"field", field_lit}, {"entries", table_json(table)}}.dump() << '\n';
    else
        std::cout << table_tsv(table);
    return 0;
}

int run_decide(const std::string& group_lit, const std::string& field_lit,
               const std::string& route, int imaginary_override, int local_override) {
    const AncGroup g = parse_group(group_lit);
    const ParsedField pf = parse_field(field_lit);
    FieldDescriptor k = describe_field(pf.field);
    if (imaginary_override >= 0 || local_override >= 0) {
        k = override_field(pf.field,
                           imaginary_override >= 0 ? imaginary_override != 0
                                                   : k.totally_imaginary,
                           local_override >= 0 ? local_override != 0 : k.local_deg2_even);
    }

    const bool cyclic = g.kind == GroupKind::cyclic;
    auto run_char = [&] { return cyclic ? cyclic_primitive(k, g.n) : decide(g, k); };
    auto run_raw = [&] { return cyclic ? cyclic_primitive_raw(k, g.n) : decide_raw(g, k); };
    auto run_family = [&]() -> Verdict {
        if (pf.cyclotomic_r) return cyclotomic_family(*pf.cyclotomic_r, g);
        if (pf.quadratic_d) return quadratic_family(*pf.quadratic_d, g);
        throw std::invalid_argument("family route needs an E(r) or Q(sqrt,d) field literal");
    };

    if (route == "char" || route == "raw" || route == "family") {
        const Verdict v = route == "char" ? run_char() : route == "raw" ? run_raw() : run_family();
        std::cout << verdict_json(v, group_lit, field_lit).dump() << '\n';
        return 0;
    }
    if (route != "all") throw std::invalid_argument("unknown route '" + route + "'");

    std::vector<Verdict> verdicts{run_char(), run_raw()};
    if (pf.cyclotomic_r || pf.quadratic_d) verdicts.push_back(run_family());
    json out = json::array();
    bool agree = true;
    for (const Verdict& v : verdicts) {
        agree = agree && v.primitive == verdicts.front().primitive;
        out.push_back(verdict_json(v, group_lit, field_lit));
    }
    std::cout << out.dump() << '\n';
    if (!agree) {
        std::cerr << "routes disagree\n";
        return 3;
    }
    return 0;
}

int run_enumerate(const std::string& field_lit, Int d, bool as_json) {
    const ParsedField pf = parse_field(field_lit);
    const auto found = enumerate_degree(describe_field(pf.field), d);
    if (as_json) {
        json out = json::array();
        for (const auto& [g, v] : found)
            out.push_back(verdict_json(v, format_group(g), field_lit));
        std::cout << out.dump() << '\n';
    } else {
        for (const auto& [g, v] : found) {
            (void)v;
            std::cout << format_group(g) << '\n';
        }
    }
    return 0;
}

int run_table_cyclotomic(Int r, Int n_max, bool as_json) {
    if (r < 1 || n_max < 1) throw std::invalid_argument("arguments must be positive");
    if (r % 4 == 2) r /= 2;
    std::vector<std::string> rows;
    for (Int n = 1; n <= n_max; ++n) {
        for (GroupKind kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::semidihedral,
                               GroupKind::quaternion}) {
            const int j = nu2(n);
            if ((kind == GroupKind::dihedral || kind == GroupKind::semidihedral) && j < 3)
                continue;
            if (kind == GroupKind::quaternion && j < 2) continue;
            const AncGroup g = make_anc(kind, n);
            if (cyclotomic_family(r, g).primitive) rows.push_back(format_group(g));
        }
    }
    if (as_json)
        std::cout << json{{"field", "E(" + std::to_string(r) + ")"}, {"groups", rows}}.dump()
                  << '\n';
    else
        for (const auto& row : rows) std::cout << row << '\n';
    return 0;
}

int run_table_quadratic(Int d_max, Int n_max, bool as_json) {
    if (d_max < 2 || n_max < 1) throw std::invalid_argument("arguments out of range");
    json out = json::array();
    for (Int a = 2; a <= d_max; ++a) {
        for (Int d : {a, -a}) {
            if (!is_squarefree(d)) continue;
            std::vector<std::string> rows;
            for (Int n = 1; n <= n_max; ++n) {
                for (GroupKind kind : {GroupKind::cyclic, GroupKind::dihedral,
                                       GroupKind::semidihedral, GroupKind::quaternion}) {
                    const int j = nu2(n);
                    if ((kind == GroupKind::dihedral || kind == GroupKind::semidihedral) && j < 3)
                        continue;
                    if (kind == GroupKind::quaternion && j < 2) continue;
                    const AncGroup g = make_anc(kind, n);
                    if (quadratic_family(d, g).primitive) rows.push_back(format_group(g));
                }
            }
            if (as_json) {
                const Int dm8 = ((d % 8) + 8) % 8;
                out.push_back({{"d", d},
                               {"conductor", dm8 % 4 == 1 ? a : 4 * a},
                               {"groups", rows}});
            } else {
                for (const auto& row : rows) std::cout << d << '\t' << row << '\n';
            }
        }
    }
    if (as_json) std::cout << out.dump() << '\n';
    return 0;
}

int run_selfcheck(bool fast) {
    const CheckOptions opt = fast ? CheckOptions::fast() : CheckOptions::full();
    bool all_ok = true;
    for (const SuiteResult& r : run_all_checks(opt)) {
        all_ok = all_ok && r.passed();
        std::printf("%-40s checks=%-8lld failures=%-6lld (%.2fs)\n", r.name.c_str(), r.checks,
                    r.failures, r.seconds);
        for (const auto& note : r.notes) std::printf("    %s\n", note.c_str());
    }
    std::printf("%s\n", all_ok ? "all checks passed" : "FAILURES present");
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclometer invariants and primitivity of nilpotent linear groups "
                 "over abelian number fields"};
    app.require_subcommand(1);

    std::string field_lit, group_lit, route = "char";
    Int n = 0, d = 0, r = 0, n_max = 0, d_max = 0;
    bool as_json = false, fast = false;
    int imaginary_override = -1, local_override = -1;

    auto* cyc = app.add_subcommand("cyclometer", "Cyclometer triple at n or table");
    cyc->add_option("field", field_lit, "Field literal")->required();
    auto* n_opt = cyc->add_option("n", n, "Evaluate at n (omit for the conductor table)");
    cyc->add_flag("--json", as_json, "JSON output");

    auto* dec = app.add_subcommand("decide", "Decide primitivity of G(K)");
    dec->add_option("group", group_lit, "Group literal")->required();
    dec->add_option("field", field_lit, "Field literal")->required();
    dec->add_option("--route", route, "char|raw|family|all")->capture_default_str();
    dec->add_option("--totally-imaginary", imaginary_override,
                    "Override the totally-imaginary flag (0 or 1)");
    dec->add_option("--local-deg2-even", local_override,
                    "Override the even-local-degrees-at-2 flag (0 or 1)");

    auto* enu = app.add_subcommand("enumerate", "Primitive groups of a given degree");
    enu->add_option("field", field_lit, "Field literal")->required();
    enu->add_option("degree", d, "Degree")->required();
    enu->add_flag("--json", as_json, "JSON output");

    auto* tc = app.add_subcommand("table-cyclotomic", "Primitive groups over E(r)");
    tc->add_option("r", r, "Cyclotomic index")->required();
    tc->add_option("n_max", n_max, "Bound on n")->required();
    tc->add_flag("--json", as_json, "JSON output");

    auto* tq = app.add_subcommand("table-quadratic", "Primitive groups over Q(sqrt,d)");
    tq->add_option("d_max", d_max, "Bound on |d|")->required();
    tq->add_option("n_max", n_max, "Bound on n")->required();
    tq->add_flag("--json", as_json, "JSON output");

    auto* sc = app.add_subcommand("selfcheck", "Run the property-test corpus");
    sc->add_flag("--fast", fast, "Smaller corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (cyc->parsed()) return run_cyclometer(field_lit, n, n_opt->count() > 0, as_json);
        if (dec->parsed())
            return run_decide(group_lit, field_lit, route, imaginary_override, local_override);
        if (enu->parsed()) return run_enumerate(field_lit, d, as_json);
        if (tc->parsed()) return run_table_cyclotomic(r, n_max, as_json);
        if (tq->parsed()) return run_table_quadratic(d_max, n_max, as_json);
        if (sc->parsed()) return run_selfcheck(fast);
    } catch (const budget_exceeded& e) {
        std::cerr << "compute budget exceeded: " << e.what() << '\n';
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
