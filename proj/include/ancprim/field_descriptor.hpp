#pragma once

#include "ancprim/fields.hpp"

namespace ancprim {

// The data about a number field K consumed by the primitivity criteria: its
// maximal abelian subfield plus two facts that cannot be recovered from it
// when K itself is not abelian.
struct FieldDescriptor {
    enum class Provenance { computed, user_override };

    AbelianField k_ab;
    bool totally_imaginary = false;
    bool local_deg2_even = false; // every [K_p : Q_2] for p | 2 is even
    Provenance provenance = Provenance::computed;
};

// Descriptor of an abelian field; both flags are computed.
FieldDescriptor describe_field(const AbelianField& k);

// Descriptor for a (possibly non-abelian) K given by its maximal abelian
// subfield and user-supplied flags.
FieldDescriptor override_field(AbelianField k_ab, bool totally_imaginary, bool local_deg2_even);

} // namespace ancprim
