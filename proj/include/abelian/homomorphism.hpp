#pragma once

#include <string>

#include "abelian/group.hpp"

namespace abelian {

// Map between presented groups, given by a matrix sending ambient generators
// of the domain to ambient vectors of the codomain. Construction verifies the
// matrix kills every domain relator in the codomain.
class Homomorphism {
public:
    Homomorphism(FgAbelianGroup domain, FgAbelianGroup codomain, IntegerMatrix matrix);

    static Homomorphism identity(const FgAbelianGroup& g);
    static Homomorphism zero(const FgAbelianGroup& domain, const FgAbelianGroup& codomain);
    // multiplication by c as a map g -> g
    static Homomorphism scalar(const FgAbelianGroup& g, const Int& c);

    const FgAbelianGroup& domain() const { return domain_; }
    const FgAbelianGroup& codomain() const { return codomain_; }
    const IntegerMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& ambient) const;
    std::vector<Int> apply_coords(const std::vector<Int>& domain_coords) const;

    bool is_zero_map() const;
    bool is_injective() const;
    bool is_surjective() const;

    Homomorphism operator+(const Homomorphism& o) const;
    Homomorphism operator-(const Homomorphism& o) const;

private:
    FgAbelianGroup domain_;
    FgAbelianGroup codomain_;
    IntegerMatrix matrix_;
};

// g after f
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
bool equal_maps(const Homomorphism& f, const Homomorphism& g);

struct SubgroupWithInclusion {
    FgAbelianGroup group;
    Homomorphism inclusion;
};

struct QuotientWithProjection {
    FgAbelianGroup group;
    Homomorphism projection;
};

// subgroup of parent generated by the given ambient columns (the parent's
// relations are folded in); inclusion matrix holds a lattice basis
SubgroupWithInclusion subgroup_generated(const FgAbelianGroup& parent,
                                         const IntegerMatrix& generators);
QuotientWithProjection quotient_by(const FgAbelianGroup& parent, const IntegerMatrix& generators);

SubgroupWithInclusion kernel(const Homomorphism& f);
// kernel of the map x -> matrix * x from domain into Z^rows(matrix) modulo the
// given relation lattice, without materializing the codomain group
SubgroupWithInclusion kernel_into_lattice(const FgAbelianGroup& domain,
                                          const IntegerMatrix& matrix,
                                          const IntegerMatrix& codomain_relations);
SubgroupWithInclusion image(const Homomorphism& f);
QuotientWithProjection cokernel(const Homomorphism& f);

// quotient of a subgroup by classes of the given ambient columns, which must
// lie in the subgroup's lattice
FgAbelianGroup subquotient(const SubgroupWithInclusion& s, const IntegerMatrix& sub_generators);

// matrix of f restricted to given subgroups of its domain and codomain;
// rejects f if it does not carry the one lattice into the other
Homomorphism induced_map(const Homomorphism& f, const SubgroupWithInclusion& dom,
                         const SubgroupWithInclusion& cod);

struct ExactnessWitness {
    bool exact = true;
    // when not exact: ambient vector of the middle group lying in exactly one
    // of (kernel of the outgoing map) / (image of the incoming map)
    std::vector<Int> element;
    bool in_kernel_not_image = false;
    std::string describe() const;
};

// exactness of (f, g) at codomain(f) = domain(g)
ExactnessWitness is_exact_at(const Homomorphism& f, const Homomorphism& g);

} // namespace abelian
