#pragma once

// Reconstruction of K-classes from Euler-characteristic tables through the
// ideal-sheaf basis [O_{X_w}(-boundary)] and the Bruhat zeta matrix.

#include <vector>

#include "qkig/ring_element.hpp"

namespace qkig {

using IntMatrix = std::vector<std::vector<Integer>>;

struct BasisChange {
    int n = 0;
    std::vector<Pair> basis;  // basis_list(n)
    IntMatrix zeta;           // zeta[i][j] = bruhat_leq(basis[i], basis[j])
    IntMatrix inverse;        // zeta^{-1}
};

// O_u = sum_{w <= u} I_w, hence I_w = sum_x inverse[x][w] O_x.
[[nodiscard]] BasisChange ideal_to_schubert(int n);

// Tables are indexed by the opposite Schubert variety X^{r1,r2} met by the general translate.
[[nodiscard]] int chi_xuv(int n, int p, Pair r);
[[nodiscard]] int chi_chevalley(int n, Pair v, Pair r);

// Assembles sum_w chi(X^{dual w}) I_w in the O-basis. chi must be total on basis pairs.
template <class Chi>
[[nodiscard]] RingElement reconstruct_from_chi(const BasisChange& bc, Chi&& chi);

[[nodiscard]] RingElement reconstruct_xuv(int n, int p);
[[nodiscard]] RingElement reconstruct_classical_chevalley(int n, Pair v);
[[nodiscard]] RingElement reconstruct_xuv(const BasisChange& bc, int p);
[[nodiscard]] RingElement reconstruct_classical_chevalley(const BasisChange& bc, Pair v);

template <class Chi>
RingElement reconstruct_from_chi(const BasisChange& bc, Chi&& chi) {
    const std::size_t m = bc.basis.size();
    std::vector<Integer> c(m);
    for (std::size_t w = 0; w < m; ++w) c[w] = chi(dual_pair(bc.n, bc.basis[w]));
    RingElement out(bc.n);
    for (std::size_t x = 0; x < m; ++x) {
        Integer s = 0;
        for (std::size_t w = x; w < m; ++w) s += bc.inverse[x][w] * c[w];
        out.add_term(0, bc.basis[x], s);
    }
    return out;
}

}  // namespace qkig
