#pragma once

// Index conditions on an ordered pair u=(p1,p2) (standard flag), v=(q1,q2) (opposite flag).

#include "qkig/schubert_index.hpp"

namespace qkig {

// (C1): p1 + q1 = 2n = p2 = q2.
[[nodiscard]] bool satisfies_c1(int n, Pair u, Pair v);

// (C2): p1 + q2 = 2n = p2 + q1, p2 - p1 = q2 - q1 >= 2, max(delta_p, delta_q) = 1.
[[nodiscard]] bool satisfies_c2(int n, Pair u, Pair v);

// (L1): p1 + q1 <= 2n-1 + min(delta_p, delta_q) unless p2 = q2 = 2n, where p1 + q1 <= 2n-1.
[[nodiscard]] bool satisfies_l1(int n, Pair u, Pair v);

// Which of the three degree-2 birationality cases holds; 0 if none.
[[nodiscard]] int deg2_birational_case(int n, Pair u, Pair v);

}  // namespace qkig
