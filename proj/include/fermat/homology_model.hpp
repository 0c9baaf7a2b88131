#pragma once

#include "abelian/homomorphism.hpp"
#include "abelian/json_io.hpp"

namespace fermat {

// Matrix model of the first homology of the degree-m Fermat curve with Z/level
// coefficients. The ambient group is the m x m matrices over Z/level, entry
// (i, j) flattened to index i*m + j with both indices mod m. The open subgroup
// is the part with zero row and column sums, the boundary subgroup is spanned
// by the circulant differences J^k - I, and the closed quotient open/boundary
// carries two commuting shifts: sigma from A -> J*A and tau from A -> A*J.
//
// The open subgroup is coordinatized by the corner tetrads
//   v_ij = E_ij - E_i0 - E_0j + E_00   (i, j in 1..m-1),
// which form a basis of the zero-sum part: such a matrix is determined freely
// by its (i, j >= 1) entries. All presentation matrices below are explicit in
// these coordinates.
struct FermatHomologyModel {
    int m = 0;
    int level = 0; // coefficient modulus; m unless built for a level sweep

    abelian::FgAbelianGroup ambient;
    abelian::SubgroupWithInclusion open_subgroup;     // basis v_ij
    abelian::IntegerMatrix boundary_generators;       // J^k - I in v-coordinates
    abelian::SubgroupWithInclusion boundary_subgroup; // inside the open subgroup
    abelian::QuotientWithProjection closed_quotient;  // open / boundary
    abelian::IntegerMatrix shift;                     // J, the m x m cycle
    abelian::Homomorphism sigma;                      // A -> J*A on the closed quotient
    abelian::Homomorphism tau;                        // A -> A*J on the closed quotient
};

// level 0 means level = m
FermatHomologyModel build_model(int m, int level = 0);

// helpers exposed for cross-checks: the two shifts as permutations of the
// ambient entries, and their matrices in v-coordinates on the open subgroup
abelian::IntegerMatrix ambient_row_shift(int m);
abelian::IntegerMatrix ambient_col_shift(int m);
abelian::IntegerMatrix open_row_shift(int m);
abelian::IntegerMatrix open_col_shift(int m);

// fixed subgroup of the closed quotient under sigma and tau, computed as the
// kernel of x -> ((sigma - 1)x, (tau - 1)x)
abelian::SubgroupWithInclusion invariants_subgroup(const FermatHomologyModel& model);
abelian::FgAbelianGroup invariants_group(const FermatHomologyModel& model);

inline constexpr long kDefaultEnumerationBudget = 10'000'000;

// number of classes a brute-force scan of the closed quotient visits:
// level^((m-1)(m-2))
abelian::Int quotient_class_count(const FermatHomologyModel& model);

// the same fixed subgroup by exhaustive scan of quotient representatives;
// throws BudgetError naming the required class count when it exceeds budget
abelian::FgAbelianGroup invariants_bruteforce(const FermatHomologyModel& model,
                                              long budget = kDefaultEnumerationBudget);

// {"m", "open_order", "boundary_order", "quotient_factors", "invariants_factors"}
// with orders as decimal strings
abelian::Json model_report(const FermatHomologyModel& model);

} // namespace fermat
