#include "abelian/group.hpp"

#include "abelian/errors.hpp"

namespace abelian {

struct FgAbelianGroup::Data {
    int ambient_rank = 0;
    IntegerMatrix relations;
    std::vector<Int> diag;        // SNF diagonal padded with 0 to ambient_rank
    IntegerMatrix u, u_inv;       // y = u*x are normal-form coordinates
    std::vector<int> significant; // positions with diag != 1
    std::vector<Int> factors;
    IntegerMatrix to_coords;      // rows of u at significant positions
    IntegerMatrix from_coords;    // cols of u_inv at significant positions
    bool finite = true;
    Int order = 1;
};

namespace {

// diagonal relation matrices with a valid divisibility chain skip the SNF
bool diagonal_with_chain(const IntegerMatrix& r) {
    int n = std::min(r.rows(), r.cols());
    for (int i = 0; i < r.rows(); i++)
        for (int j = 0; j < r.cols(); j++)
            if (i != j && r(i, j) != 0) return false;
    Int prev = -1; // sentinel: unset
    for (int i = 0; i < n; i++) {
        if (r(i, i) < 0) return false;
        if (i > 0) {
            if (prev == 0 && r(i, i) != 0) return false;
            if (prev > 0 && r(i, i) != 0 &&
                mpz_divisible_p(r(i, i).get_mpz_t(), prev.get_mpz_t()) == 0)
                return false;
        }
        prev = r(i, i);
    }
    // rows past the diagonal are free (diag 0); a zero before a nonzero broke the chain above
    return true;
}

} // namespace

FgAbelianGroup::FgAbelianGroup() : FgAbelianGroup(0, IntegerMatrix(0, 0)) {}

FgAbelianGroup::FgAbelianGroup(int ambient_rank, IntegerMatrix relations) {
    if (relations.rows() != ambient_rank)
        throw PreconditionError("relation columns must live in the ambient free group");
    auto d = std::make_shared<Data>();
    d->ambient_rank = ambient_rank;
    d->relations = std::move(relations);
    d->diag.assign(ambient_rank, Int(0));
    if (diagonal_with_chain(d->relations)) {
        int n = std::min(ambient_rank, d->relations.cols());
        for (int i = 0; i < n; i++) d->diag[i] = d->relations(i, i);
        d->u = IntegerMatrix::identity(ambient_rank);
        d->u_inv = d->u;
    } else {
        SmithDecomposition snf = smith_normal_form(d->relations, /*track_v=*/false);
        int n = std::min(ambient_rank, d->relations.cols());
        for (int i = 0; i < n; i++) d->diag[i] = snf.s(i, i);
        d->u = std::move(snf.u);
        d->u_inv = std::move(snf.u_inv);
    }
    for (int i = 0; i < ambient_rank; i++)
        if (d->diag[i] != 1) d->significant.push_back(i);
    for (int p : d->significant) {
        d->factors.push_back(d->diag[p]);
        if (d->diag[p] == 0)
            d->finite = false;
        else
            d->order *= d->diag[p];
    }
    int s = int(d->significant.size());
    d->to_coords = IntegerMatrix(s, ambient_rank);
    d->from_coords = IntegerMatrix(ambient_rank, s);
    for (int k = 0; k < s; k++) {
        int p = d->significant[k];
        for (int j = 0; j < ambient_rank; j++) {
            d->to_coords(k, j) = d->u(p, j);
            d->from_coords(j, k) = d->u_inv(j, p);
        }
    }
    d_ = std::move(d);
}

FgAbelianGroup FgAbelianGroup::from_factors(const std::vector<Int>& factors) {
    return FgAbelianGroup(int(factors.size()), IntegerMatrix::diagonal(factors));
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int& n) {
    return from_factors({n});
}

FgAbelianGroup FgAbelianGroup::power(const Int& n, int count) {
    return FgAbelianGroup(count, IntegerMatrix::scalar(count, n));
}

int FgAbelianGroup::ambient_rank() const { return d_->ambient_rank; }
const IntegerMatrix& FgAbelianGroup::relations() const { return d_->relations; }
const std::vector<Int>& FgAbelianGroup::invariant_factors() const { return d_->factors; }
bool FgAbelianGroup::is_finite() const { return d_->finite; }

Int FgAbelianGroup::order() const {
    if (!d_->finite) throw PreconditionError("order of an infinite group");
    return d_->order;
}

bool FgAbelianGroup::is_trivial() const { return d_->factors.empty(); }
int FgAbelianGroup::coord_count() const { return int(d_->significant.size()); }
const IntegerMatrix& FgAbelianGroup::to_coords_matrix() const { return d_->to_coords; }
const IntegerMatrix& FgAbelianGroup::from_coords_matrix() const { return d_->from_coords; }

std::vector<Int> FgAbelianGroup::coords(const std::vector<Int>& ambient) const {
    if (int(ambient.size()) != d_->ambient_rank)
        throw PreconditionError("ambient vector has the wrong rank");
    std::vector<Int> c = mul(d_->to_coords, ambient);
    for (int k = 0; k < int(c.size()); k++) {
        const Int& m = d_->factors[k];
        if (m != 0) mpz_fdiv_r(c[k].get_mpz_t(), c[k].get_mpz_t(), m.get_mpz_t());
    }
    return c;
}

std::vector<Int> FgAbelianGroup::lift(const std::vector<Int>& coords) const {
    if (int(coords.size()) != coord_count())
        throw PreconditionError("coordinate vector has the wrong length");
    return mul(d_->from_coords, coords);
}

bool FgAbelianGroup::is_zero_element(const std::vector<Int>& ambient) const {
    for (const Int& c : coords(ambient))
        if (c != 0) return false;
    return true;
}

bool FgAbelianGroup::elements_equal(const std::vector<Int>& a, const std::vector<Int>& b) const {
    return coords(a) == coords(b);
}

std::vector<Int> FgAbelianGroup::first_element() const {
    if (!d_->finite) throw PreconditionError("cannot enumerate an infinite group");
    return std::vector<Int>(coord_count());
}

bool FgAbelianGroup::next_element(std::vector<Int>& c) const {
    for (int k = int(c.size()) - 1; k >= 0; k--) {
        c[k] += 1;
        if (c[k] < d_->factors[k]) return true;
        c[k] = 0;
    }
    return false;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return FgAbelianGroup(a.ambient_rank() + b.ambient_rank(),
                          block_diagonal(a.relations(), b.relations()));
}

bool same_presentation(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.ambient_rank() == b.ambient_rank() && a.relations() == b.relations();
}

bool same_quotient(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    if (a.ambient_rank() != b.ambient_rank()) return false;
    if (a.relations() == b.relations()) return true;
    for (int j = 0; j < a.relations().cols(); j++)
        if (!b.is_zero_element(a.relations().column(j))) return false;
    for (int j = 0; j < b.relations().cols(); j++)
        if (!a.is_zero_element(b.relations().column(j))) return false;
    return true;
}

bool isomorphic(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.invariant_factors() == b.invariant_factors();
}

} // namespace abelian
