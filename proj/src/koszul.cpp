#include "koszul/cohomology.hpp"

#include "abelian/errors.hpp"

namespace koszul {

using namespace abelian;

ModuleWithAction make_module(const FgAbelianGroup& module, IntegerMatrix sigma_matrix,
                             IntegerMatrix tau_matrix) {
    if (!module.is_finite()) throw PreconditionError("coefficient module must be finite");
    Homomorphism sigma(module, module, std::move(sigma_matrix));
    Homomorphism tau(module, module, std::move(tau_matrix));
    if (!sigma.is_injective() || !sigma.is_surjective())
        throw PreconditionError("sigma is not an automorphism of the module");
    if (!tau.is_injective() || !tau.is_surjective())
        throw PreconditionError("tau is not an automorphism of the module");
    if (!equal_maps(compose(sigma, tau), compose(tau, sigma)))
        throw PreconditionError("sigma and tau do not commute");
    return ModuleWithAction{module, std::move(sigma), std::move(tau)};
}

namespace {

IntegerMatrix d0_matrix(const ModuleWithAction& mod) {
    IntegerMatrix id = IntegerMatrix::identity(mod.module.ambient_rank());
    return vstack(mod.sigma.matrix() - id, mod.tau.matrix() - id);
}

IntegerMatrix d1_matrix(const ModuleWithAction& mod) {
    IntegerMatrix id = IntegerMatrix::identity(mod.module.ambient_rank());
    return hstack(mod.tau.matrix() - id, -(mod.sigma.matrix() - id));
}

} // namespace

Cohomology koszul_cohomology(const ModuleWithAction& mod) {
    const FgAbelianGroup& m = mod.module;
    FgAbelianGroup mm = direct_sum(m, m);
    Homomorphism d0(m, mm, d0_matrix(mod));
    Homomorphism d1(mm, m, d1_matrix(mod));
    if (!compose(d1, d0).is_zero_map())
        throw InternalError("koszul differential composite is nonzero");

    FgAbelianGroup h0 = kernel(d0).group;
    FgAbelianGroup h1 = subquotient(kernel(d1), d0.matrix());
    FgAbelianGroup h2 = cokernel(d1).group;
    return Cohomology{std::move(h0), std::move(h1), std::move(h2)};
}

FgAbelianGroup fixed_points(const ModuleWithAction& mod) {
    return kernel_into_lattice(mod.module, d0_matrix(mod),
                               block_diagonal(mod.module.relations(), mod.module.relations()))
        .group;
}

bool euler_check(const ModuleWithAction& mod) {
    Cohomology h = koszul_cohomology(mod);
    return h.h0.order() * h.h2.order() == h.h1.order();
}

} // namespace koszul
