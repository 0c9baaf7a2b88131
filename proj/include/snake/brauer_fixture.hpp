#pragma once

#include "snake/ladder.hpp"

namespace snake {

// The comparison ladder for the degree-m family at coefficient level l^r:
//
//   A  >--> (Z/n)^3 --i1--> (Z/n)^2        i1: (x,y,z) |-> (x-z, y-x)
//   |a      |m              |c             n = l^r
//   A' >--> (Z/n)^3 --i2--> (Z/n)^4        i2: the same differences placed in
//                                              the last two coordinates
//
// where A = ker i1 and A' = ker i2 (both the diagonal, cyclic of order n),
// the middle vertical is multiplication by m, and c embeds the target as m
// times the last two coordinates. The induced left vertical has kernel
// cyclic of order l^min(r, v_l(m)).
LadderDiagram fermat_brauer_ladder(int m, long l, int r);

} // namespace snake
