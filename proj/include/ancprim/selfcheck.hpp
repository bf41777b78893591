#pragma once

#include "ancprim/primitivity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ancprim {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> notes; // first few failure descriptions
    double seconds = 0.0;

    bool passed() const { return failures == 0; }
};

// A corpus field together with the closed-form oracles that apply to it.
struct CorpusField {
    FieldDescriptor k;
    std::string label;
    std::optional<Int> cyclotomic_r;
    std::optional<Int> quadratic_d;
};

struct CheckOptions {
    // corpus
    int corpus_quadratic_bound = 30;
    int corpus_cyclotomic_bound = 48;
    int corpus_random_count = 20;
    int corpus_random_modulus = 120;
    unsigned corpus_seed = 0x5eedULL;
    // per-suite sizes
    int quad_table_bound = 60;
    int cyclo_r_max = 48;
    Int cyclo_n_max = 200;
    Int agreement_n_max = 240;
    Int epm_bound = 120;
    Int dpm_n_max = 100;
    Int lemma_n_max = 200;
    Int presentation_max_order = 128; // largest 2-part order
    Int witness_n_max = 200;
    std::vector<Int> enumeration_degrees = {1, 2, 4, 6, 8, 12, 16};
    int local_degree_d_bound = 60;
    int local_degree_r_max = 48;

    static CheckOptions full();
    static CheckOptions fast();
};

std::vector<CorpusField> standard_corpus(const CheckOptions& opt);

SuiteResult check_quadratic_cyclometers(const CheckOptions& opt);
SuiteResult check_cyclotomic_cyclometers(const CheckOptions& opt);
SuiteResult check_route_agreement(const CheckOptions& opt);
SuiteResult check_epm_intersections(const CheckOptions& opt);
SuiteResult check_dpm_properties(const CheckOptions& opt);
SuiteResult check_degree_membership_lemmas(const CheckOptions& opt);
SuiteResult check_presentations(const CheckOptions& opt);
SuiteResult check_witnesses(const CheckOptions& opt);
SuiteResult check_enumeration(const CheckOptions& opt);
SuiteResult check_local_degrees(const CheckOptions& opt);

// All ten suites in a fixed order.
std::vector<SuiteResult> run_all_checks(const CheckOptions& opt);

} // namespace ancprim
