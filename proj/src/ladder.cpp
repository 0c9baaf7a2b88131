#include "snake/ladder.hpp"

#include <sstream>

#include "abelian/errors.hpp"

namespace snake {

using namespace abelian;

namespace {

const FgAbelianGroup& node_group(const std::vector<Homomorphism>& row,
                                 const std::vector<Homomorphism>& verticals, bool top, size_t i) {
    if (i < row.size()) return row[i].domain();
    if (!row.empty()) return row.back().codomain();
    return top ? verticals[i].domain() : verticals[i].codomain();
}

std::string describe_vector(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); i++) os << (i ? " " : "") << v[i];
    os << ")";
    return os.str();
}

} // namespace

LadderReport verify_ladder(const LadderDiagram& ladder) {
    auto fail = [](std::string detail) { return LadderReport{false, std::move(detail)}; };

    size_t nodes = ladder.verticals.size();
    if (nodes == 0) return fail("ladder has no columns");
    if (ladder.top_row.size() + 1 != nodes || ladder.bottom_row.size() + 1 != nodes)
        return fail("row lengths do not match the number of verticals");
    if (!ladder.top_labels.empty() && ladder.top_labels.size() != nodes)
        return fail("top label count does not match the number of columns");
    if (!ladder.bottom_labels.empty() && ladder.bottom_labels.size() != nodes)
        return fail("bottom label count does not match the number of columns");

    for (size_t i = 0; i + 1 < ladder.top_row.size(); i++) {
        if (!same_quotient(ladder.top_row[i].codomain(), ladder.top_row[i + 1].domain()))
            return fail("top row maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                        " do not compose");
        if (!same_quotient(ladder.bottom_row[i].codomain(), ladder.bottom_row[i + 1].domain()))
            return fail("bottom row maps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                        " do not compose");
    }
    for (size_t i = 0; i < nodes; i++) {
        if (!same_quotient(ladder.verticals[i].domain(),
                           node_group(ladder.top_row, ladder.verticals, true, i)))
            return fail("vertical " + std::to_string(i) + " does not start at top node " +
                        std::to_string(i));
        if (!same_quotient(ladder.verticals[i].codomain(),
                           node_group(ladder.bottom_row, ladder.verticals, false, i)))
            return fail("vertical " + std::to_string(i) + " does not end at bottom node " +
                        std::to_string(i));
    }

    for (size_t i = 0; i + 1 < nodes; i++) {
        IntegerMatrix down_then_right = ladder.bottom_row[i].matrix() * ladder.verticals[i].matrix();
        IntegerMatrix right_then_down = ladder.verticals[i + 1].matrix() * ladder.top_row[i].matrix();
        IntegerMatrix diff = right_then_down - down_then_right;
        const FgAbelianGroup& target = ladder.verticals[i + 1].codomain();
        for (int j = 0; j < diff.cols(); j++) {
            if (!target.is_zero_element(diff.column(j)))
                return fail("square " + std::to_string(i) + " does not commute: top generator " +
                            std::to_string(j) + " differs by " + describe_vector(diff.column(j)));
        }
    }

    for (size_t i = 1; i + 1 < nodes; i++) {
        ExactnessWitness top = is_exact_at(ladder.top_row[i - 1], ladder.top_row[i]);
        if (!top.exact)
            return fail("top row is not exact at node " + std::to_string(i) + ": " +
                        top.describe());
        ExactnessWitness bottom = is_exact_at(ladder.bottom_row[i - 1], ladder.bottom_row[i]);
        if (!bottom.exact)
            return fail("bottom row is not exact at node " + std::to_string(i) + ": " +
                        bottom.describe());
    }

    return LadderReport{};
}

SixTermSequence snake(const LadderDiagram& ladder) {
    LadderReport report = verify_ladder(ladder);
    if (!report.valid) throw PreconditionError("invalid ladder: " + report.detail);
    if (ladder.verticals.size() != 3)
        throw PreconditionError("snake requires a three-column ladder, got " +
                                std::to_string(ladder.verticals.size()) + " columns");

    const Homomorphism& f = ladder.top_row[0];
    const Homomorphism& g = ladder.top_row[1];
    const Homomorphism& fp = ladder.bottom_row[0];
    const Homomorphism& gp = ladder.bottom_row[1];
    const Homomorphism& a = ladder.verticals[0];
    const Homomorphism& b = ladder.verticals[1];
    const Homomorphism& c = ladder.verticals[2];

    if (!g.is_surjective())
        throw PreconditionError("snake hypothesis failed: top row right map is not surjective");
    if (!fp.is_injective())
        throw PreconditionError("snake hypothesis failed: bottom row left map is not injective");

    SubgroupWithInclusion ker_a = kernel(a);
    SubgroupWithInclusion ker_b = kernel(b);
    SubgroupWithInclusion ker_c = kernel(c);
    QuotientWithProjection cok_a = cokernel(a);
    QuotientWithProjection cok_b = cokernel(b);
    QuotientWithProjection cok_c = cokernel(c);

    Homomorphism k1 = induced_map(f, ker_a, ker_b);
    Homomorphism k2 = induced_map(g, ker_b, ker_c);
    Homomorphism c1(cok_a.group, cok_b.group, fp.matrix());
    Homomorphism c2(cok_b.group, cok_c.group, gp.matrix());

    // connecting map: lift each kernel generator through g, push down b,
    // pull back through fp
    int nb = g.domain().ambient_rank();
    int nap = fp.domain().ambient_rank();
    ColumnEchelon lift_top(hstack(g.matrix(), g.codomain().relations()));
    ColumnEchelon pull_bottom(hstack(fp.matrix(), fp.codomain().relations()));

    const IntegerMatrix& gens = ker_c.inclusion.matrix();
    IntegerMatrix delta_matrix(cok_a.group.ambient_rank(), gens.cols());
    std::vector<ConnectingWitness> witnesses;
    for (int j = 0; j < gens.cols(); j++) {
        std::vector<Int> z = gens.column(j);
        auto top_solution = lift_top.solve(z);
        if (!top_solution)
            throw InternalError("snake chase failed to lift a kernel generator through the top row");
        std::vector<Int> y(top_solution->begin(), top_solution->begin() + nb);
        std::vector<Int> w = mul(b.matrix(), y);
        auto bottom_solution = pull_bottom.solve(w);
        if (!bottom_solution)
            throw InternalError("snake chase failed to pull a chased element back through the "
                                "bottom row");
        std::vector<Int> u(bottom_solution->begin(), bottom_solution->begin() + nap);
        delta_matrix.set_column(j, u);
        witnesses.push_back(ConnectingWitness{z, y, w, u});
    }

    SixTermSequence result;
    try {
        Homomorphism delta(ker_c.group, cok_a.group, delta_matrix);
        result.maps = {std::move(k1), std::move(k2), std::move(delta), std::move(c1),
                       std::move(c2)};
    } catch (const PreconditionError& e) {
        throw InternalError(std::string("connecting map is not well defined: ") + e.what());
    }
    result.terms = {ker_a.group,  ker_b.group,  ker_c.group,
                    cok_a.group, cok_b.group, cok_c.group};
    result.witnesses = std::move(witnesses);

    static const char* kNodeNames[] = {"middle kernel", "right kernel", "left cokernel",
                                       "middle cokernel"};
    for (int i = 0; i < 4; i++) {
        ExactnessWitness w = is_exact_at(result.maps[i], result.maps[i + 1]);
        if (!w.exact)
            throw InternalError(std::string("six-term sequence is not exact at the ") +
                                kNodeNames[i] + ": " + w.describe());
    }
    return result;
}

namespace {

Json encode_row(const std::vector<Homomorphism>& row) {
    Json arr = Json::array();
    for (const Homomorphism& h : row) arr.push_back(encode_hom(h));
    return arr;
}

std::vector<Homomorphism> decode_row(const Json& j, const char* field) {
    if (!j.is_array())
        throw PreconditionError(std::string("ladder field '") + field + "' must be an array");
    std::vector<Homomorphism> row;
    for (const Json& h : j) row.push_back(decode_hom(h));
    return row;
}

std::vector<std::string> decode_labels(const Json& j, const char* field) {
    if (!j.is_array())
        throw PreconditionError(std::string("ladder field '") + field +
                                "' must be an array of strings");
    std::vector<std::string> labels;
    for (const Json& s : j) {
        if (!s.is_string())
            throw PreconditionError(std::string("ladder field '") + field +
                                    "' must contain only strings");
        labels.push_back(s.get<std::string>());
    }
    return labels;
}

Json encode_vector(const std::vector<Int>& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(encode_int(x));
    return arr;
}

} // namespace

Json encode_ladder(const LadderDiagram& ladder) {
    Json j;
    j["top_labels"] = ladder.top_labels;
    j["bottom_labels"] = ladder.bottom_labels;
    j["top_row"] = encode_row(ladder.top_row);
    j["bottom_row"] = encode_row(ladder.bottom_row);
    j["verticals"] = encode_row(ladder.verticals);
    return j;
}

LadderDiagram decode_ladder(const Json& j) {
    if (!j.is_object()) throw PreconditionError("ladder json must be an object");
    for (const char* field : {"top_row", "bottom_row", "verticals"})
        if (!j.contains(field))
            throw PreconditionError(std::string("ladder json lacks field '") + field + "'");
    LadderDiagram ladder;
    if (j.contains("top_labels")) ladder.top_labels = decode_labels(j["top_labels"], "top_labels");
    if (j.contains("bottom_labels"))
        ladder.bottom_labels = decode_labels(j["bottom_labels"], "bottom_labels");
    ladder.top_row = decode_row(j["top_row"], "top_row");
    ladder.bottom_row = decode_row(j["bottom_row"], "bottom_row");
    ladder.verticals = decode_row(j["verticals"], "verticals");
    return ladder;
}

Json encode_six_term(const SixTermSequence& s) {
    static const char* kTermNames[] = {"ker_left",   "ker_middle",   "ker_right",
                                       "coker_left", "coker_middle", "coker_right"};
    Json terms = Json::array();
    for (size_t i = 0; i < s.terms.size(); i++) {
        Json t;
        t["name"] = kTermNames[i];
        t["factors"] = encode_factors(s.terms[i].invariant_factors());
        terms.push_back(t);
    }
    Json maps = Json::array();
    for (const Homomorphism& h : s.maps) maps.push_back(encode_hom(h));
    Json witnesses = Json::array();
    for (const ConnectingWitness& w : s.witnesses) {
        Json jw;
        jw["kernel_generator"] = encode_vector(w.kernel_generator);
        jw["lift"] = encode_vector(w.lift);
        jw["image"] = encode_vector(w.image);
        jw["pullback"] = encode_vector(w.pullback);
        witnesses.push_back(jw);
    }
    Json j;
    j["terms"] = terms;
    j["maps"] = maps;
    j["connecting_witnesses"] = witnesses;
    j["exact_interior"] = true;
    return j;
}

} // namespace snake
