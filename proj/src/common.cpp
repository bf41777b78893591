#include "ancprim/common.hpp"

#include <cstdlib>

namespace ancprim {

Int max_modulus() {
    static const Int cap = [] {
        const char* env = std::getenv("ANCPRIM_MAX_MODULUS");
        if (env == nullptr) return Int{100000};
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || v < 1) return Int{100000};
        return static_cast<Int>(v);
    }();
    return cap;
}

void check_modulus_budget(Int m) {
    if (m > max_modulus()) {
        throw budget_exceeded("modulus " + std::to_string(m) +
                              " exceeds ANCPRIM_MAX_MODULUS=" + std::to_string(max_modulus()));
    }
}

} // namespace ancprim
