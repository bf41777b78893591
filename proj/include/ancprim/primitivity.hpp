#pragma once

#include "ancprim/anc.hpp"
#include "ancprim/cyclometers.hpp"

#include <string>
#include <vector>

namespace ancprim {

struct Condition {
    std::string id;
    bool ok = false;
    std::string detail;
};

// Outcome of one decision route; primitive is the conjunction of the
// conditions, which are kept so routes can be diffed condition by condition.
struct Verdict {
    bool primitive = false;
    std::string route;
    std::vector<Condition> conditions;
};

// Cyclic C_n over K: primitive iff n | aug(c_K(n)).
Verdict cyclic_primitive(const FieldDescriptor& k, Int n);

// Independent route via relative cyclotomic degrees [E_n K : E_{n/p} K].
Verdict cyclic_primitive_raw(const FieldDescriptor& k, Int n);

// Cyclometer-based decision for any ANC group (route "char").
Verdict decide(const AncGroup& g, const FieldDescriptor& k);

// Independent route via homogeneity, irreducibility and degree conditions
// (route "raw"); non-cyclic groups only.
Verdict decide_raw(const AncGroup& g, const FieldDescriptor& k);

// Closed-form family oracle for K = E_r, r != 2 mod 4.
Verdict cyclotomic_family(Int r, const AncGroup& g);

// Closed-form family oracle for K = Q(sqrt d), d squarefree, d != 0, 1.
Verdict quadratic_family(Int d, const AncGroup& g);

// Q(sqrt d) as conductor-subgroup data plus computed flags.
FieldDescriptor quadratic_field(Int d);

// An abelian field over which G is guaranteed primitive.
FieldDescriptor witness_field(const AncGroup& g);

// All G with degree_of_GK(G, K) = d and G(K) primitive, ordered by
// (kind, n); one entry per conjugacy class.
std::vector<std::pair<AncGroup, Verdict>> enumerate_degree(const FieldDescriptor& k, Int d);

} // namespace ancprim
