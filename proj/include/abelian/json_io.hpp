#pragma once

#include <json.hpp>

#include "abelian/homomorphism.hpp"

namespace abelian {

// ordered_json keeps field order stable so dumps are byte-reproducible
using Json = nlohmann::ordered_json;

// integers fitting 64 bits stay JSON numbers, larger ones become decimal strings
Json encode_int(const Int& x);
Int decode_int(const Json& j);

// {"ambient_rank": n, "relations": [column, ...]}
Json encode_group(const FgAbelianGroup& g);
FgAbelianGroup decode_group(const Json& j);

// {"domain": group, "codomain": group, "matrix": [row, ...]}
Json encode_hom(const Homomorphism& f);
Homomorphism decode_hom(const Json& j);

Json encode_matrix_rows(const IntegerMatrix& m);
IntegerMatrix decode_matrix_rows(const Json& j, int rows, int cols);

Json encode_factors(const std::vector<Int>& factors);

std::string dump_json(const Json& j);

} // namespace abelian
