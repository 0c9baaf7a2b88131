#pragma once

#include "abelian/homomorphism.hpp"

namespace koszul {

// A finite abelian group with two commuting automorphisms: coefficients for
// the cohomology of Z^2 via the two-step complex
//   M --d0--> M + M --d1--> M,
//   d0(x) = ((sigma-1)x, (tau-1)x),  d1(x, y) = (tau-1)x - (sigma-1)y.
struct ModuleWithAction {
    abelian::FgAbelianGroup module;
    abelian::Homomorphism sigma;
    abelian::Homomorphism tau;
};

// validates finiteness, commutativity, and invertibility of both actions
ModuleWithAction make_module(const abelian::FgAbelianGroup& module,
                             abelian::IntegerMatrix sigma_matrix,
                             abelian::IntegerMatrix tau_matrix);

struct Cohomology {
    abelian::FgAbelianGroup h0; // joint fixed points
    abelian::FgAbelianGroup h1;
    abelian::FgAbelianGroup h2; // coinvariants M / ((sigma-1)M + (tau-1)M)
};

Cohomology koszul_cohomology(const ModuleWithAction& mod);

// H0 alone, as the kernel of d0; cheaper than the full complex
abelian::FgAbelianGroup fixed_points(const ModuleWithAction& mod);

// |H0| * |H2| == |H1|, which pins the order bookkeeping of the complex
bool euler_check(const ModuleWithAction& mod);

} // namespace koszul
