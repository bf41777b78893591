#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ancprim {

using Int = std::int64_t;

// Thrown when an operation would need a unit group larger than the
// configured cap (environment variable ANCPRIM_MAX_MODULUS, default 100000).
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Int max_modulus();
void check_modulus_budget(Int m);

} // namespace ancprim
