#pragma once

// Closed forms written out term by term, independent of the library's case dispatch.

#include <qkig/qk_ring.hpp>

namespace qkig::oracle {

// Adds c*q^d*O_{a,b} with the classical extension: invalid indices vanish, except that the
// degenerate O_{b,b} read as O_{b-1,b}.
inline void add(RingElement& x, int d, int a, int b, long c) {
    const int n = x.n();
    if (a == b && a >= 2) --a;
    if (!is_valid_pair(n, a, b)) return;
    x.add_term(d, {a, b}, c);
}

// O_{2n-2,2n} * O_{2,2n}.
inline RingElement divisor_times_2_2n(int n) {
    RingElement x(n);
    add(x, 0, 1, 2 * n - 1, 2);
    add(x, 0, 2, 2 * n - 2, 1);
    add(x, 0, 1, 2 * n - 2, -2);
    add(x, 1, 2 * n - 1, 2 * n, -1);
    add(x, 1, 2 * n - 2, 2 * n, 1);
    return x;
}

// O_{2n-2,2n} * O_{1,q2}, q2 <= 2n-1.
inline RingElement divisor_times_1_q2(int n, int q2) {
    RingElement x(n);
    add(x, 0, 1, q2 - 1, 1);
    add(x, 1, q2, 2 * n, 1);
    add(x, 1, q2 - 1, 2 * n, -1);
    return x;
}

// Class of X_{p,2n} cap X^{2n-p,2n}, p in [1,n].
inline RingElement xuv(int n, int p) {
    RingElement x(n);
    if (p < n) add(x, 0, p, 2 * n - p, 1);
    for (int k = 1; k <= p - 1; ++k) add(x, 0, k, 2 * n - k, 2);
    if (p < n) {
        add(x, 0, p - 1, 2 * n - p, -2);
    } else {
        add(x, 0, n - 1, n, -1);
    }
    for (int k = 1; k <= p - 2; ++k) add(x, 0, k, 2 * n - 1 - k, -3);
    for (int k = 1; k <= p - 2; ++k) add(x, 0, k, 2 * n - 2 - k, 1);
    return x;
}

inline RingElement xuv_any(int n, int p) { return xuv(n, p <= n ? p : 2 * n - p); }

// O_u * O^v under (C1): O_u^v - q + q O_{2n-2,2n}.
inline RingElement c1(int n, Pair u) {
    RingElement x = xuv_any(n, u.a);
    add(x, 1, 2 * n - 1, 2 * n, -1);
    add(x, 1, 2 * n - 2, 2 * n, 1);
    return x;
}

// O_u * O^v under (C2): q O_{p1+q1,2n}^{p2+q2-2n,2n} - q^2 + q^2 O_{2n-2,2n}.
inline RingElement c2(int n, Pair u, Pair v) {
    RingElement x = xuv_any(n, u.a + v.a).shifted(1);
    add(x, 2, 2 * n - 1, 2 * n, -1);
    add(x, 2, 2 * n - 2, 2 * n, 1);
    return x;
}

// Seidel product from the three regimes of the minimal-degree curve neighborhood.
inline RingElement seidel_regime(int n, Pair p) {
    RingElement x(n);
    if (p.b <= n) {
        x.add_term(2, {p.a + n, p.b + n}, 1);
    } else if (p.a <= n) {
        x.add_term(1, {p.b - n, p.a + n}, 1);
    } else {
        x.add_term(0, {p.a - n, p.b - n}, 1);
    }
    return x;
}

}  // namespace qkig::oracle
