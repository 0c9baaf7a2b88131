#include "snake/brauer_fixture.hpp"

#include "abelian/errors.hpp"

namespace snake {

using namespace abelian;

namespace {

bool is_prime(long l) {
    if (l < 2) return false;
    for (long d = 2; d * d <= l; d++)
        if (l % d == 0) return false;
    return true;
}

} // namespace

LadderDiagram fermat_brauer_ladder(int m, long l, int r) {
    if (m < 1) throw PreconditionError("degree must be positive, got " + std::to_string(m));
    if (!is_prime(l)) throw PreconditionError(std::to_string(l) + " is not prime");
    if (r < 1) throw PreconditionError("level exponent must be at least 1, got " +
                                       std::to_string(r));

    Int n;
    mpz_pow_ui(n.get_mpz_t(), Int(l).get_mpz_t(), static_cast<unsigned long>(r));

    FgAbelianGroup b_top = FgAbelianGroup::power(n, 3);
    FgAbelianGroup c_top = FgAbelianGroup::power(n, 2);
    FgAbelianGroup b_bottom = FgAbelianGroup::power(n, 3);
    FgAbelianGroup c_bottom = FgAbelianGroup::power(n, 4);

    Homomorphism i1(b_top, c_top, IntegerMatrix::from_rows({{1, 0, -1}, {-1, 1, 0}}));
    Homomorphism i2(b_bottom, c_bottom,
                    IntegerMatrix::from_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, -1}, {-1, 1, 0}}));

    SubgroupWithInclusion a_top = kernel(i1);
    SubgroupWithInclusion a_bottom = kernel(i2);

    Homomorphism mid(b_top, b_bottom, IntegerMatrix::scalar(3, m));
    Homomorphism right(c_top, c_bottom,
                       IntegerMatrix::from_rows({{0, 0}, {0, 0}, {long(m), 0}, {0, long(m)}}));
    Homomorphism left = induced_map(mid, a_top, a_bottom);

    LadderDiagram ladder;
    ladder.top_labels = {"A", "B", "C"};
    ladder.bottom_labels = {"A'", "B'", "C'"};
    ladder.top_row = {a_top.inclusion, i1};
    ladder.bottom_row = {a_bottom.inclusion, i2};
    ladder.verticals = {std::move(left), std::move(mid), std::move(right)};
    return ladder;
}

} // namespace snake
