#pragma once

#include <memory>
#include <vector>

#include "abelian/smith.hpp"

namespace abelian {

// Finitely generated abelian group Z^ambient_rank / (column span of relations),
// normalized once on construction. Immutable; copies share state.
class FgAbelianGroup {
public:
    FgAbelianGroup();
    FgAbelianGroup(int ambient_rank, IntegerMatrix relations);

    static FgAbelianGroup from_factors(const std::vector<Int>& factors);
    static FgAbelianGroup cyclic(const Int& n);
    // (Z/n)^count
    static FgAbelianGroup power(const Int& n, int count);

    int ambient_rank() const;
    const IntegerMatrix& relations() const;
    // d_i | d_{i+1}, no entry 1, 0 encodes a free factor (free factors last)
    const std::vector<Int>& invariant_factors() const;
    bool is_finite() const;
    // product of the invariant factors; group must be finite
    Int order() const;
    bool is_trivial() const;

    // canonical coordinates: one slot per invariant factor, torsion slots in
    // [0, d), free slots unconstrained
    int coord_count() const;
    std::vector<Int> coords(const std::vector<Int>& ambient) const;
    std::vector<Int> lift(const std::vector<Int>& coords) const;
    bool is_zero_element(const std::vector<Int>& ambient) const;
    bool elements_equal(const std::vector<Int>& a, const std::vector<Int>& b) const;

    // odometer over all canonical coordinate tuples; finite groups only
    std::vector<Int> first_element() const;
    bool next_element(std::vector<Int>& c) const;

    // change of basis between ambient vectors and canonical coordinates:
    // coords = reduce(to_coords_matrix * ambient), ambient = from_coords_matrix * coords
    const IntegerMatrix& to_coords_matrix() const;
    const IntegerMatrix& from_coords_matrix() const;

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

// block sum: ambient ranks add, relations sit in separate blocks
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

// identical ambient rank and relation matrix
bool same_presentation(const FgAbelianGroup& a, const FgAbelianGroup& b);
// identical ambient rank and mutually contained relation spans: the same
// quotient of the same free group
bool same_quotient(const FgAbelianGroup& a, const FgAbelianGroup& b);
// equal invariant factors
bool isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b);

} // namespace abelian
