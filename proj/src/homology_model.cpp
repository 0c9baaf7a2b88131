#include "fermat/homology_model.hpp"

#include <string>

#include "abelian/errors.hpp"

namespace fermat {

using namespace abelian;

namespace {

// ambient index of entry (i, j), both taken mod m
int aidx(int m, int i, int j) {
    int r = ((i % m) + m) % m;
    int c = ((j % m) + m) % m;
    return r * m + c;
}

// open-subgroup coordinate of v_ij, i, j in 1..m-1
int lidx(int m, int i, int j) { return (i - 1) * (m - 1) + (j - 1); }

IntegerMatrix open_basis(int m) {
    IntegerMatrix basis(m * m, (m - 1) * (m - 1));
    for (int i = 1; i < m; i++)
        for (int j = 1; j < m; j++) {
            int c = lidx(m, i, j);
            basis(aidx(m, i, j), c) += 1;
            basis(aidx(m, i, 0), c) -= 1;
            basis(aidx(m, 0, j), c) -= 1;
            basis(aidx(m, 0, 0), c) += 1;
        }
    return basis;
}

// J^k - I in v-coordinates: the (i, j >= 1) entries of the circulant
IntegerMatrix boundary_columns(int m) {
    IntegerMatrix b((m - 1) * (m - 1), m - 1);
    for (int k = 1; k < m; k++)
        for (int i = 1; i < m; i++)
            for (int j = 1; j < m; j++) {
                Int& e = b(lidx(m, i, j), k - 1);
                if (((i - j - k) % m + m) % m == 0) e += 1;
                if (i == j) e -= 1;
            }
    return b;
}

} // namespace

IntegerMatrix ambient_row_shift(int m) {
    IntegerMatrix s(m * m, m * m);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) s(aidx(m, i + 1, j), aidx(m, i, j)) = 1;
    return s;
}

IntegerMatrix ambient_col_shift(int m) {
    IntegerMatrix s(m * m, m * m);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) s(aidx(m, i, j + 1), aidx(m, i, j)) = 1;
    return s;
}

// sigma(v_ij) = v_{i+1,j} - v_{1,j}, reading v_{m,j} as 0
IntegerMatrix open_row_shift(int m) {
    int n = (m - 1) * (m - 1);
    IntegerMatrix s(n, n);
    for (int i = 1; i < m; i++)
        for (int j = 1; j < m; j++) {
            int c = lidx(m, i, j);
            if (i + 1 < m) s(lidx(m, i + 1, j), c) += 1;
            s(lidx(m, 1, j), c) -= 1;
        }
    return s;
}

IntegerMatrix open_col_shift(int m) {
    int n = (m - 1) * (m - 1);
    IntegerMatrix s(n, n);
    for (int i = 1; i < m; i++)
        for (int j = 1; j < m; j++) {
            int c = lidx(m, i, j);
            if (j + 1 < m) s(lidx(m, i, j + 1), c) += 1;
            s(lidx(m, i, 1), c) -= 1;
        }
    return s;
}

FermatHomologyModel build_model(int m, int level) {
    if (m < 2) throw PreconditionError("degree must be at least 2, got " + std::to_string(m));
    if (level == 0) level = m;
    if (level < 2)
        throw PreconditionError("coefficient level must be at least 2, got " +
                                std::to_string(level));

    FgAbelianGroup ambient = FgAbelianGroup::power(level, m * m);
    FgAbelianGroup open_group = FgAbelianGroup::power(level, (m - 1) * (m - 1));
    Homomorphism inclusion(open_group, ambient, open_basis(m));

    IntegerMatrix boundary = boundary_columns(m);
    SubgroupWithInclusion boundary_sub = subgroup_generated(open_group, boundary);
    QuotientWithProjection quotient = quotient_by(open_group, boundary);

    IntegerMatrix shift(m, m);
    for (int c = 0; c < m; c++) shift((c + 1) % m, c) = 1;

    Homomorphism sigma(quotient.group, quotient.group, open_row_shift(m));
    Homomorphism tau(quotient.group, quotient.group, open_col_shift(m));

    return FermatHomologyModel{m,
                               level,
                               std::move(ambient),
                               {std::move(open_group), std::move(inclusion)},
                               std::move(boundary),
                               std::move(boundary_sub),
                               std::move(quotient),
                               std::move(shift),
                               std::move(sigma),
                               std::move(tau)};
}

SubgroupWithInclusion invariants_subgroup(const FermatHomologyModel& model) {
    const FgAbelianGroup& q = model.closed_quotient.group;
    IntegerMatrix id = IntegerMatrix::identity(q.ambient_rank());
    IntegerMatrix stacked = vstack(model.sigma.matrix() - id, model.tau.matrix() - id);
    return kernel_into_lattice(q, stacked, block_diagonal(q.relations(), q.relations()));
}

FgAbelianGroup invariants_group(const FermatHomologyModel& model) {
    return invariants_subgroup(model).group;
}

Int quotient_class_count(const FermatHomologyModel& model) {
    Int classes;
    mpz_pow_ui(classes.get_mpz_t(), Int(model.level).get_mpz_t(),
               static_cast<unsigned long>(model.m - 1) * (model.m - 2));
    return classes;
}

FgAbelianGroup invariants_bruteforce(const FermatHomologyModel& model, long budget) {
    const FgAbelianGroup& q = model.closed_quotient.group;
    Int classes = quotient_class_count(model);
    if (classes > budget)
        throw BudgetError("exhaustive scan of the closed quotient needs " + classes.get_str() +
                              " classes, budget is " + std::to_string(budget),
                          classes.get_str());

    std::vector<std::vector<Int>> fixed;
    std::vector<Int> c = q.first_element();
    do {
        if (model.sigma.apply_coords(c) == c && model.tau.apply_coords(c) == c)
            fixed.push_back(q.lift(c));
    } while (q.next_element(c));

    IntegerMatrix gens(q.ambient_rank(), int(fixed.size()));
    for (int j = 0; j < int(fixed.size()); j++) gens.set_column(j, fixed[j]);
    return subgroup_generated(q, gens).group;
}

Json model_report(const FermatHomologyModel& model) {
    Json j;
    j["m"] = model.m;
    j["open_order"] = model.open_subgroup.group.order().get_str();
    j["boundary_order"] = model.boundary_subgroup.group.order().get_str();
    j["quotient_factors"] = encode_factors(model.closed_quotient.group.invariant_factors());
    j["invariants_factors"] = encode_factors(invariants_group(model).invariant_factors());
    return j;
}

} // namespace fermat
