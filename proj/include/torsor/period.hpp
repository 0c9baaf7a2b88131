#pragma once

#include <vector>

#include "abelian/json_io.hpp"
#include "fermat/homology_model.hpp"

namespace torsor {

// Certificate for the period of the degree-m torsor group: the monodromy
// invariants of the homology model give the fiber size of the degree map on
// sections, and counting against the m section classes of the tautological
// subgroup pins the image, cyclic of the same order.
struct PeriodCertificate {
    int m = 0;
    std::vector<abelian::Int> invariants_factors;
    abelian::Int period;                 // order of the invariants group
    abelian::Int degree_image_generator; // = period
    std::vector<abelian::Int> torsor_group_factors; // = [period]
    bool oracle_checked = false; // exhaustive enumeration ran and agreed
    // counting identities behind the image step
    abelian::Int section_classes; // = m
    abelian::Int image_index;     // = m / period: 1 for odd m, 2 for even m
};

// requires m >= 3; period must come out m for odd m and m/2 for even m, and
// any other outcome is flagged as an internal failure
PeriodCertificate compute_period(int m, long budget = fermat::kDefaultEnumerationBudget);

// one certificate per m in [m_from, m_to]; every row is cross-checked against
// the degree-0 cohomology of the same module, and against enumeration where
// the budget permits. parallel bounds the number of concurrent rows.
std::vector<PeriodCertificate> period_table(int m_from, int m_to,
                                            long budget = fermat::kDefaultEnumerationBudget,
                                            int parallel = 1);

abelian::Json encode_certificate(const PeriodCertificate& cert);

std::string certificate_csv_header();
std::string certificate_csv_row(const PeriodCertificate& cert);

// recomputes the certificate for the stored m and compares every field
// bit-exactly after re-serialization; oracle_checked is carried over from the
// stored certificate since it only reflects the enumeration budget
bool verify_certificate(const abelian::Json& stored);

} // namespace torsor
