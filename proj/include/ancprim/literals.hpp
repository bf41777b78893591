#pragma once

#include "ancprim/primitivity.hpp"

#include <optional>
#include <string>

#include <json.hpp>

namespace ancprim {

// A parsed field literal: "Q", "E(n)", "E+(n)", "E-(n)", "Q(sqrt,d)",
// "sub(f; g1,g2,...)". The cyclotomic/quadratic parameters are kept so the
// family oracles know when they apply.
struct ParsedField {
    AbelianField field;
    std::optional<Int> cyclotomic_r; // set for E(n); normalized to r != 2 mod 4
    std::optional<Int> quadratic_d;  // set for Q(sqrt,d)
};

ParsedField parse_field(const std::string& text);

// Group literals: "C(n)", "D(2^t)[xC(m)]", "SD(2^t)[xC(m)]", "Q(2^t)[xC(m)]"
// with the order of the 2-part as argument.
AncGroup parse_group(const std::string& text);

std::string format_group(const AncGroup& g);
std::string format_field(const AbelianField& k);

nlohmann::json verdict_json(const Verdict& v, const std::string& group_literal,
                            const std::string& field_literal);

} // namespace ancprim
