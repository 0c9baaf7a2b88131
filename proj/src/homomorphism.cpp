#include "abelian/homomorphism.hpp"

#include <sstream>

#include "abelian/errors.hpp"

namespace abelian {

Homomorphism::Homomorphism(FgAbelianGroup domain, FgAbelianGroup codomain, IntegerMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.ambient_rank() || matrix_.cols() != domain_.ambient_rank())
        throw PreconditionError("matrix shape does not match domain and codomain ranks");
    const IntegerMatrix& rel = domain_.relations();
    if (rel.cols() == 0) return;
    // each relator image must lie in the codomain's relation lattice; one
    // echelon of that lattice makes the membership tests cheap
    ColumnEchelon cod_lattice(codomain_.relations(), 0);
    for (int j = 0; j < rel.cols(); j++) {
        if (!cod_lattice.in_span(mul(matrix_, rel.column(j)))) {
            std::ostringstream os;
            os << "map is not well defined: relator " << j << " (";
            for (int i = 0; i < rel.rows(); i++) os << (i ? " " : "") << rel(i, j);
            os << ") has nonzero image";
            throw PreconditionError(os.str());
        }
    }
}

Homomorphism Homomorphism::identity(const FgAbelianGroup& g) {
    return Homomorphism(g, g, IntegerMatrix::identity(g.ambient_rank()));
}

Homomorphism Homomorphism::zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain) {
    return Homomorphism(domain, codomain,
                        IntegerMatrix(codomain.ambient_rank(), domain.ambient_rank()));
}

Homomorphism Homomorphism::scalar(const FgAbelianGroup& g, const Int& c) {
    return Homomorphism(g, g, IntegerMatrix::scalar(g.ambient_rank(), c));
}

std::vector<Int> Homomorphism::apply(const std::vector<Int>& ambient) const {
    return mul(matrix_, ambient);
}

std::vector<Int> Homomorphism::apply_coords(const std::vector<Int>& domain_coords) const {
    return codomain_.coords(mul(matrix_, domain_.lift(domain_coords)));
}

bool Homomorphism::is_zero_map() const {
    for (int j = 0; j < matrix_.cols(); j++)
        if (!codomain_.is_zero_element(matrix_.column(j))) return false;
    return true;
}

bool Homomorphism::is_injective() const { return kernel(*this).group.is_trivial(); }
bool Homomorphism::is_surjective() const { return cokernel(*this).group.is_trivial(); }

Homomorphism Homomorphism::operator+(const Homomorphism& o) const {
    if (!same_quotient(domain_, o.domain_) || !same_quotient(codomain_, o.codomain_))
        throw PreconditionError("sum of maps with different endpoints");
    return Homomorphism(domain_, codomain_, matrix_ + o.matrix_);
}

Homomorphism Homomorphism::operator-(const Homomorphism& o) const {
    if (!same_quotient(domain_, o.domain_) || !same_quotient(codomain_, o.codomain_))
        throw PreconditionError("difference of maps with different endpoints");
    return Homomorphism(domain_, codomain_, matrix_ - o.matrix_);
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
    if (!same_quotient(f.codomain(), g.domain()))
        throw PreconditionError("composition endpoints do not match");
    return Homomorphism(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

bool equal_maps(const Homomorphism& f, const Homomorphism& g) {
    return (f - g).is_zero_map();
}

SubgroupWithInclusion subgroup_generated(const FgAbelianGroup& parent,
                                         const IntegerMatrix& generators) {
    if (generators.rows() != parent.ambient_rank())
        throw PreconditionError("generators must be ambient columns of the parent");
    ColumnEchelon lattice(hstack(generators, parent.relations()), /*v_rows=*/0);
    IntegerMatrix basis = lattice.lattice_basis();
    ColumnEchelon solver(basis);
    auto rel = solver.solve_matrix(parent.relations());
    if (!rel) throw InternalError("subgroup lattice does not span the parent relations");
    FgAbelianGroup sub(basis.cols(), std::move(*rel));
    return {sub, Homomorphism(sub, parent, basis)};
}

QuotientWithProjection quotient_by(const FgAbelianGroup& parent, const IntegerMatrix& generators) {
    if (generators.rows() != parent.ambient_rank())
        throw PreconditionError("generators must be ambient columns of the parent");
    FgAbelianGroup q(parent.ambient_rank(), hstack(parent.relations(), generators));
    return {q, Homomorphism(parent, q, IntegerMatrix::identity(parent.ambient_rank()))};
}

SubgroupWithInclusion kernel_into_lattice(const FgAbelianGroup& domain,
                                          const IntegerMatrix& matrix,
                                          const IntegerMatrix& codomain_relations) {
    int n = domain.ambient_rank();
    // x is in the kernel iff matrix * x falls in the codomain's relation span
    ColumnEchelon ech(hstack(matrix, codomain_relations), /*v_rows=*/n);
    return subgroup_generated(domain, ech.kernel_basis());
}

SubgroupWithInclusion kernel(const Homomorphism& f) {
    return kernel_into_lattice(f.domain(), f.matrix(), f.codomain().relations());
}

SubgroupWithInclusion image(const Homomorphism& f) {
    return subgroup_generated(f.codomain(), f.matrix());
}

QuotientWithProjection cokernel(const Homomorphism& f) {
    return quotient_by(f.codomain(), f.matrix());
}

FgAbelianGroup subquotient(const SubgroupWithInclusion& s, const IntegerMatrix& sub_generators) {
    ColumnEchelon solver(s.inclusion.matrix());
    auto pre = solver.solve_matrix(sub_generators);
    if (!pre) throw PreconditionError("generators lie outside the subgroup lattice");
    return FgAbelianGroup(s.group.ambient_rank(), hstack(s.group.relations(), *pre));
}

Homomorphism induced_map(const Homomorphism& f, const SubgroupWithInclusion& dom,
                         const SubgroupWithInclusion& cod) {
    ColumnEchelon solver(cod.inclusion.matrix());
    auto x = solver.solve_matrix(f.matrix() * dom.inclusion.matrix());
    if (!x) throw PreconditionError("map does not carry the subgroup into the target subgroup");
    return Homomorphism(dom.group, cod.group, std::move(*x));
}

std::string ExactnessWitness::describe() const {
    if (exact) return "exact";
    std::ostringstream os;
    os << (in_kernel_not_image ? "kernel class missed by the image: ("
                               : "image class outside the kernel: (");
    for (size_t i = 0; i < element.size(); i++) os << (i ? " " : "") << element[i];
    os << ")";
    return os.str();
}

ExactnessWitness is_exact_at(const Homomorphism& f, const Homomorphism& g) {
    if (!same_quotient(f.codomain(), g.domain()))
        throw PreconditionError("exactness check with mismatched endpoints");
    const FgAbelianGroup& mid = f.codomain();
    int n = mid.ambient_rank();

    ColumnEchelon kech(hstack(g.matrix(), g.codomain().relations()), /*v_rows=*/n);
    ColumnEchelon ker_lattice(hstack(kech.kernel_basis(), mid.relations()), /*v_rows=*/0);
    ColumnEchelon im_lattice(hstack(f.matrix(), mid.relations()), /*v_rows=*/0);

    IntegerMatrix im_basis = im_lattice.lattice_basis();
    for (int j = 0; j < im_basis.cols(); j++) {
        std::vector<Int> c = im_basis.column(j);
        if (!ker_lattice.in_span(c)) return {false, std::move(c), false};
    }
    IntegerMatrix ker_basis = ker_lattice.lattice_basis();
    for (int j = 0; j < ker_basis.cols(); j++) {
        std::vector<Int> c = ker_basis.column(j);
        if (!im_lattice.in_span(c)) return {false, std::move(c), true};
    }
    return {};
}

} // namespace abelian
