#include "ancprim/literals.hpp"

#include "ancprim/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ancprim {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    return t;
}

[[noreturn]] void bad(const std::string& what, const std::string& text) {
    throw std::invalid_argument(what + ": '" + text + "'");
}

// Parses a (possibly signed) integer covering [pos, end-of-number).
Int read_int(const std::string& s, std::size_t& pos, const std::string& ctx) {
    std::size_t idx = 0;
    Int v = 0;
    try {
        v = std::stoll(s.substr(pos), &idx);
    } catch (const std::exception&) {
        bad("expected an integer", ctx);
    }
    pos += idx;
    return v;
}

void expect(const std::string& s, std::size_t& pos, char c, const std::string& ctx) {
    if (pos >= s.size() || s[pos] != c) bad(std::string("expected '") + c + "'", ctx);
    ++pos;
}

} // namespace

ParsedField parse_field(const std::string& text) {
    const std::string s = strip_spaces(text);
    ParsedField out;

    if (s == "Q") {
        out.field = rationals();
        return out;
    }
    if (s.rfind("Q(sqrt,", 0) == 0) {
        std::size_t pos = 7;
        Int d = read_int(s, pos, text);
        expect(s, pos, ')', text);
        if (pos != s.size()) bad("trailing characters in field literal", text);
        out.field = quadratic_field(d).k_ab;
        out.quadratic_d = d;
        return out;
    }
    if (s.rfind("E(", 0) == 0 || s.rfind("E+(", 0) == 0 || s.rfind("E-(", 0) == 0) {
        Flavor flavor = Flavor::plain;
        std::size_t pos = 2;
        if (s[1] == '+') { flavor = Flavor::plus; pos = 3; }
        if (s[1] == '-') { flavor = Flavor::minus; pos = 3; }
        Int n = read_int(s, pos, text);
        expect(s, pos, ')', text);
        if (pos != s.size()) bad("trailing characters in field literal", text);
        if (n < 1) bad("cyclotomic index must be positive", text);
        out.field = make_cyclotomic({n, flavor});
        if (flavor == Flavor::plain) out.cyclotomic_r = n % 4 == 2 ? n / 2 : n; // E_r = E_2r
        return out;
    }
    if (s.rfind("sub(", 0) == 0) {
        std::size_t pos = 4;
        Int f = read_int(s, pos, text);
        expect(s, pos, ';', text);
        std::vector<Int> gens;
        while (true) {
            gens.push_back(read_int(s, pos, text));
            if (pos < s.size() && s[pos] == ',') { ++pos; continue; }
            break;
        }
        expect(s, pos, ')', text);
        if (pos != s.size()) bad("trailing characters in field literal", text);
        if (f < 1) bad("modulus must be positive", text);
        out.field = canonicalize(f, gens);
        return out;
    }
    bad("unrecognized field literal", text);
}

AncGroup parse_group(const std::string& text) {
    const std::string s = strip_spaces(text);
    std::size_t pos = 0;
    GroupKind kind;

    if (s.rfind("SD(", 0) == 0) { kind = GroupKind::semidihedral; pos = 3; }
    else if (s.rfind("C(", 0) == 0) { kind = GroupKind::cyclic; pos = 2; }
    else if (s.rfind("D(", 0) == 0) { kind = GroupKind::dihedral; pos = 2; }
    else if (s.rfind("Q(", 0) == 0) { kind = GroupKind::quaternion; pos = 2; }
    else bad("unrecognized group literal", text);

    Int first = read_int(s, pos, text);
    expect(s, pos, ')', text);

    if (kind == GroupKind::cyclic) {
        if (pos != s.size()) bad("trailing characters in group literal", text);
        if (first < 1) bad("cyclic order must be positive", text);
        return make_anc(kind, first);
    }

    Int m = 1;
    if (pos != s.size()) {
        if (s.compare(pos, 3, "xC(") != 0) bad("expected xC(m)", text);
        pos += 3;
        m = read_int(s, pos, text);
        expect(s, pos, ')', text);
        if (pos != s.size()) bad("trailing characters in group literal", text);
    }

    const Int order2 = first;
    if (order2 < 2 || (order2 & (order2 - 1)) != 0)
        bad("2-part order must be a power of two", text);
    if (m < 1 || m % 2 == 0) bad("odd part must be a positive odd number", text);
    const Int n2 = order2 / 2; // order of the distinguished cyclic subgroup's 2-part
    return make_anc(kind, n2 * m);
}

std::string format_group(const AncGroup& g) {
    if (g.kind == GroupKind::cyclic) return "C(" + std::to_string(g.n) + ")";
    const Int order2 = Int{2} << g.two_exponent();
    std::string head;
    switch (g.kind) {
    case GroupKind::dihedral: head = "D"; break;
    case GroupKind::semidihedral: head = "SD"; break;
    case GroupKind::quaternion: head = "Q"; break;
    case GroupKind::cyclic: break;
    }
    std::string out = head + "(" + std::to_string(order2) + ")";
    if (g.odd_part_m() > 1) out += "xC(" + std::to_string(g.odd_part_m()) + ")";
    return out;
}

std::string format_field(const AbelianField& k) {
    if (k.modulus == 1) return "Q";
    std::ostringstream os;
    os << "sub(" << k.modulus << "; ";
    for (std::size_t i = 0; i < k.subgroup.size(); ++i) {
        if (i > 0) os << ',';
        os << k.subgroup[i];
    }
    os << ")";
    return os.str();
}

nlohmann::json verdict_json(const Verdict& v, const std::string& group_literal,
                            const std::string& field_literal) {
    nlohmann::json conditions = nlohmann::json::array();
    for (const Condition& c : v.conditions)
        conditions.push_back({{"id", c.id}, {"ok", c.ok}, {"detail", c.detail}});
    return nlohmann::json{{"group", group_literal},
                          {"field", field_literal},
                          {"primitive", v.primitive},
                          {"route", v.route},
                          {"conditions", conditions}};
}

} // namespace ancprim
