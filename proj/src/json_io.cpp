#include "abelian/json_io.hpp"

#include "abelian/errors.hpp"

namespace abelian {

Json encode_int(const Int& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Int decode_int(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Int x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw PreconditionError("not a decimal integer: " + j.dump());
        return x;
    }
    throw PreconditionError("expected an integer or decimal string, got " + j.dump());
}

Json encode_group(const FgAbelianGroup& g) {
    Json cols = Json::array();
    const IntegerMatrix& r = g.relations();
    for (int j = 0; j < r.cols(); j++) {
        Json col = Json::array();
        for (int i = 0; i < r.rows(); i++) col.push_back(encode_int(r(i, j)));
        cols.push_back(std::move(col));
    }
    return Json{{"ambient_rank", g.ambient_rank()}, {"relations", std::move(cols)}};
}

FgAbelianGroup decode_group(const Json& j) {
    if (!j.is_object() || !j.contains("ambient_rank") || !j.contains("relations"))
        throw PreconditionError("group object needs ambient_rank and relations");
    if (!j["ambient_rank"].is_number_integer() || j["ambient_rank"].get<long long>() < 0)
        throw PreconditionError("ambient_rank must be a nonnegative integer");
    int n = j["ambient_rank"].get<int>();
    const Json& cols = j["relations"];
    if (!cols.is_array()) throw PreconditionError("relations must be an array of columns");
    IntegerMatrix r(n, int(cols.size()));
    for (int c = 0; c < int(cols.size()); c++) {
        if (!cols[c].is_array() || int(cols[c].size()) != n)
            throw PreconditionError("each relation column must have ambient_rank entries");
        for (int i = 0; i < n; i++) r(i, c) = decode_int(cols[c][i]);
    }
    return FgAbelianGroup(n, std::move(r));
}

Json encode_matrix_rows(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); j++) row.push_back(encode_int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntegerMatrix decode_matrix_rows(const Json& j, int rows, int cols) {
    if (!j.is_array() || int(j.size()) != rows)
        throw PreconditionError("matrix must be an array of rows of the declared shape");
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; i++) {
        if (!j[i].is_array() || int(j[i].size()) != cols)
            throw PreconditionError("matrix row has the wrong length");
        for (int c = 0; c < cols; c++) m(i, c) = decode_int(j[i][c]);
    }
    return m;
}

Json encode_hom(const Homomorphism& f) {
    return Json{{"domain", encode_group(f.domain())},
                {"codomain", encode_group(f.codomain())},
                {"matrix", encode_matrix_rows(f.matrix())}};
}

Homomorphism decode_hom(const Json& j) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
        !j.contains("matrix"))
        throw PreconditionError("homomorphism object needs domain, codomain and matrix");
    FgAbelianGroup dom = decode_group(j["domain"]);
    FgAbelianGroup cod = decode_group(j["codomain"]);
    IntegerMatrix m = decode_matrix_rows(j["matrix"], cod.ambient_rank(), dom.ambient_rank());
    return Homomorphism(std::move(dom), std::move(cod), std::move(m));
}

Json encode_factors(const std::vector<Int>& factors) {
    Json a = Json::array();
    for (const Int& f : factors) a.push_back(encode_int(f));
    return a;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace abelian
