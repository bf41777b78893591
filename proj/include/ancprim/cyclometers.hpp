#pragma once

#include "ancprim/fields.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace ancprim {

struct CyclometerEntry {
    Int c_plain = 0;
    Int c_plus = 0;
    Int c_minus = 0;
    bool operator==(const CyclometerEntry&) const = default;
};

// Cyclometer values of a field at every divisor of its conductor; values for
// arbitrary n reduce through gcd(n, conductor).
struct CyclometerTable {
    AbelianField field;
    std::vector<std::pair<Int, CyclometerEntry>> entries; // sorted by divisor

    const CyclometerEntry& at_divisor(Int n) const;
    CyclometerEntry lookup(Int n) const;
};

// d in D_K^flavor(n), i.e. K n E_n is a subfield of E_d^flavor.
bool in_D(const AbelianField& k, Int n, Flavor flavor, Int d);

// gcd of D_K^flavor(n), with 0 encoding the empty set.
Int cyclometer(const AbelianField& k, Int n, Flavor flavor);

CyclometerTable cyclometer_table(const AbelianField& k);

// Enumeration oracle: { d <= bound : in_D(k, n, flavor, d) }.
std::vector<Int> brute_D(const AbelianField& k, Int n, Flavor flavor, Int bound);

// Rows (n, c, c_plus, c_minus) sorted by n; gcd(empty) printed literally as 0.
std::string table_tsv(const CyclometerTable& table);
nlohmann::json table_json(const CyclometerTable& table);

} // namespace ancprim
