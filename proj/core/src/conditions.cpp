#include "qkig/conditions.hpp"

#include <algorithm>

namespace qkig {

bool satisfies_c1(int n, Pair u, Pair v) {
    require_valid(n, u);
    require_valid(n, v);
    return u.a + v.a == 2 * n && u.b == 2 * n && v.b == 2 * n;
}

bool satisfies_c2(int n, Pair u, Pair v) {
    require_valid(n, u);
    require_valid(n, v);
    return u.a + v.b == 2 * n && u.b + v.a == 2 * n && u.b - u.a == v.b - v.a && u.b - u.a >= 2 &&
           std::max(delta(n, u), delta(n, v)) == 1;
}

bool satisfies_l1(int n, Pair u, Pair v) {
    require_valid(n, u);
    require_valid(n, v);
    const int s = u.a + v.a;
    if (u.b == 2 * n && v.b == 2 * n) return s <= 2 * n - 1;
    return s <= 2 * n - 1 + std::min(delta(n, u), delta(n, v));
}

int deg2_birational_case(int n, Pair u, Pair v) {
    require_valid(n, u);
    require_valid(n, v);
    const int s1 = u.a + v.b;
    const int s2 = u.b + v.a;
    const int md = std::max(delta(n, u), delta(n, v));
    if (s1 < 2 * n && s2 < 2 * n) return 1;
    if (s1 == 2 * n && s2 < 2 * n && md == 1) return 2;
    if (s1 < 2 * n && s2 == 2 * n && md == 1) return 3;
    return 0;
}

}  // namespace qkig
