#pragma once

#include <string>
#include <vector>

#include "abelian/homomorphism.hpp"
#include "abelian/json_io.hpp"

namespace snake {

// Two parallel rows of composable maps joined by one vertical per node:
//
//   T0 --t0--> T1 --t1--> ... --> Tn
//   |v0        |v1                |vn
//   B0 --b0--> B1 --b1--> ... --> Bn
//
// Rows are expected exact at interior nodes and every square must commute.
struct LadderDiagram {
    std::vector<std::string> top_labels;    // optional; empty or one per node
    std::vector<std::string> bottom_labels; // optional
    std::vector<abelian::Homomorphism> top_row;
    std::vector<abelian::Homomorphism> bottom_row;
    std::vector<abelian::Homomorphism> verticals;
};

struct LadderReport {
    bool valid = true;
    std::string detail; // names the first violated node or square, with witness
};

LadderReport verify_ladder(const LadderDiagram& ladder);

// the chase behind one connecting-map column: generator of ker(right
// vertical), its lift through the top row, the vertical image, and the
// pullback through the bottom row
struct ConnectingWitness {
    std::vector<abelian::Int> kernel_generator;
    std::vector<abelian::Int> lift;
    std::vector<abelian::Int> image;
    std::vector<abelian::Int> pullback;
};

// ker a -> ker b -> ker c -> coker a -> coker b -> coker c for a three-column
// ladder with verticals a, b, c; exact at the four interior nodes
struct SixTermSequence {
    std::vector<abelian::FgAbelianGroup> terms; // 6
    std::vector<abelian::Homomorphism> maps;    // 5, maps[i]: terms[i] -> terms[i+1]
    std::vector<ConnectingWitness> witnesses;   // one per generator of terms[2]
};

// requires a valid three-column ladder whose top-right map is surjective and
// whose bottom-left map is injective; rejects otherwise naming the failure.
// Interior exactness of the output is re-verified on every run.
SixTermSequence snake(const LadderDiagram& ladder);

abelian::Json encode_ladder(const LadderDiagram& ladder);
LadderDiagram decode_ladder(const abelian::Json& j);
abelian::Json encode_six_term(const SixTermSequence& s);

} // namespace snake
