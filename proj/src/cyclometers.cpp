#include "ancprim/cyclometers.hpp"

#include "ancprim/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ancprim {

namespace {

std::size_t hash_field(const AbelianField& k) {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](Int v) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    };
    mix(k.modulus);
    for (Int u : k.subgroup) mix(u);
    return h;
}

struct CmKey {
    AbelianField field;
    Int n;
    Flavor flavor;
    bool operator==(const CmKey&) const = default;
};

struct CmKeyHash {
    std::size_t operator()(const CmKey& k) const {
        return hash_field(k.field) * 131 + static_cast<std::size_t>(k.n) * 3 +
               static_cast<std::size_t>(k.flavor);
    }
};

} // namespace

bool in_D(const AbelianField& k, Int n, Flavor flavor, Int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("in_D: n and d must be positive");
    const AbelianField meet = intersect(k, make_cyclotomic({n, Flavor::plain}));
    return is_subfield(meet, make_cyclotomic({d, flavor}));
}

Int cyclometer(const AbelianField& k, Int n, Flavor flavor) {
    if (n < 1) throw std::invalid_argument("cyclometer: n must be positive");

    static std::unordered_map<CmKey, Int, CmKeyHash> cache;
    static std::mutex mtx;
    const CmKey key{k, n, flavor};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Int result = 0;
    if (flavor != Flavor::minus) {
        // D is an upward-closed multiple set with c | n, so scanning the
        // divisors of n finds the minimum (n itself always works for plain).
        for (Int d : divisors(n)) {
            if (in_D(k, n, flavor, d)) {
                result = d;
                break;
            }
        }
    } else {
        const Int cp = cyclometer(k, n, Flavor::plus);
        if (cp != 0) {
            result = cp % 2 == 0 ? 2 * cp : cp;
        } else {
            Int g = 0;
            for (Int d : divisors(n))
                if (in_D(k, n, Flavor::minus, d)) g = std::gcd(g, d);
            result = g;
        }
    }

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(key, result);
    return result;
}

CyclometerTable cyclometer_table(const AbelianField& k) {
    CyclometerTable t;
    t.field = k;
    for (Int n : divisors(k.modulus)) {
        t.entries.emplace_back(n, CyclometerEntry{cyclometer(k, n, Flavor::plain),
                                                  cyclometer(k, n, Flavor::plus),
                                                  cyclometer(k, n, Flavor::minus)});
    }
    return t;
}

const CyclometerEntry& CyclometerTable::at_divisor(Int n) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), n,
                               [](const auto& e, Int v) { return e.first < v; });
    if (it == entries.end() || it->first != n)
        throw std::invalid_argument("cyclometer table: n is not a divisor of the conductor");
    return it->second;
}

CyclometerEntry CyclometerTable::lookup(Int n) const {
    if (n < 1) throw std::invalid_argument("cyclometer table: n must be positive");
    return at_divisor(std::gcd(n, field.modulus));
}

std::vector<Int> brute_D(const AbelianField& k, Int n, Flavor flavor, Int bound) {
    std::vector<Int> ds;
    for (Int d = 1; d <= bound; ++d)
        if (in_D(k, n, flavor, d)) ds.push_back(d);
    return ds;
}

std::string table_tsv(const CyclometerTable& table) {
    std::ostringstream os;
    for (const auto& [n, e] : table.entries)
        os << n << '\t' << e.c_plain << '\t' << e.c_plus << '\t' << e.c_minus << '\n';
    return os.str();
}

nlohmann::json table_json(const CyclometerTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [n, e] : table.entries) {
        rows.push_back({{"n", n}, {"c", e.c_plain}, {"c_plus", e.c_plus}, {"c_minus", e.c_minus}});
    }
    return rows;
}

} // namespace ancprim
