#include "qkig/brion_expansion.hpp"

#include <stdexcept>

namespace qkig {

BasisChange ideal_to_schubert(int n) {
    BasisChange bc;
    bc.n = n;
    bc.basis = basis_list(n);
    const std::size_t m = bc.basis.size();
    bc.zeta.assign(m, std::vector<Integer>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (bruhat_leq(n, bc.basis[i], bc.basis[j])) bc.zeta[i][j] = 1;

    // The basis order refines Bruhat order, so zeta is upper unitriangular.
    for (std::size_t i = 0; i < m; ++i) {
        if (bc.zeta[i][i] != 1) throw std::logic_error("zeta matrix diagonal is not 1");
        for (std::size_t j = 0; j < i; ++j)
            if (bc.zeta[i][j] != 0) throw std::logic_error("basis order does not refine Bruhat order");
    }

    // Back substitution, column by column: zeta * inverse = id.
    bc.inverse.assign(m, std::vector<Integer>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t ii = j + 1; ii-- > 0;) {
            Integer s = (ii == j) ? 1 : 0;
            for (std::size_t k = ii + 1; k <= j; ++k) s -= bc.zeta[ii][k] * bc.inverse[k][j];
            bc.inverse[ii][j] = s;
        }
    }
    return bc;
}

int chi_xuv(int n, int p, Pair r) {
    if (p < 1 || p > n) {
        throw std::invalid_argument("chi_xuv requires 1 <= p <= n (p=" + std::to_string(p) + ")");
    }
    require_valid(n, r);
    const int s = r.a + r.b;
    if (s < 2 * n + 1) return 0;
    if (r.b <= 2 * n - p) return 0;
    if (s == 2 * n + 2) return r.b > 2 * n + 1 - p ? 2 : 1;
    return 1;
}

int chi_chevalley(int n, Pair v, Pair r) {
    require_valid(n, v);
    require_valid(n, r);
    const int a = v.a + r.b;
    const int b = v.b + r.a;
    const bool nonempty = (a >= 2 * n + 2 && b >= 2 * n + 1) || (a >= 2 * n + 1 && b >= 2 * n + 2);
    if (!nonempty) return 0;
    const int t = 2 * n + 2;
    if (v.a + v.b == t && r.a + r.b == t && a == t && b == t) return 2;
    return 1;
}

RingElement reconstruct_xuv(const BasisChange& bc, int p) {
    return reconstruct_from_chi(bc, [&](Pair r) { return chi_xuv(bc.n, p, r); });
}

RingElement reconstruct_classical_chevalley(const BasisChange& bc, Pair v) {
    return reconstruct_from_chi(bc, [&](Pair r) { return chi_chevalley(bc.n, v, r); });
}

RingElement reconstruct_xuv(int n, int p) { return reconstruct_xuv(ideal_to_schubert(n), p); }

RingElement reconstruct_classical_chevalley(int n, Pair v) {
    return reconstruct_classical_chevalley(ideal_to_schubert(n), v);
}

}  // namespace qkig
