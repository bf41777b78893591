#include "ancprim/field_descriptor.hpp"

namespace ancprim {

FieldDescriptor describe_field(const AbelianField& k) {
    FieldDescriptor d;
    d.k_ab = k;
    d.totally_imaginary = totally_imaginary(k);
    d.local_deg2_even = local_degree_at_2(k) % 2 == 0;
    d.provenance = FieldDescriptor::Provenance::computed;
    return d;
}

FieldDescriptor override_field(AbelianField k_ab, bool totally_imaginary, bool local_deg2_even) {
    FieldDescriptor d;
    d.k_ab = std::move(k_ab);
    d.totally_imaginary = totally_imaginary;
    d.local_deg2_even = local_deg2_even;
    d.provenance = FieldDescriptor::Provenance::user_override;
    return d;
}

} // namespace ancprim
