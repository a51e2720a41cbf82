#pragma once

// Symbolic curve neighborhoods Gamma_d(X_u, X^v) and Gamma_{d-1,1}(X_u, X^v).

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qkig/conditions.hpp"

namespace qkig {

// A coordinate subspace span{e_i : i in indices}, 1-based.
struct SubspaceExpr {
    std::vector<int> indices;  // sorted, unique

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(indices.size()); }
    friend bool operator==(const SubspaceExpr&, const SubspaceExpr&) = default;
};

[[nodiscard]] SubspaceExpr flag_e(int n, int p);         // E_p = {1..p}
[[nodiscard]] SubspaceExpr flag_e_opp(int n, int q);     // E^q = {2n+1-q..2n}
[[nodiscard]] SubspaceExpr span_sum(const SubspaceExpr& x, const SubspaceExpr& y);
[[nodiscard]] SubspaceExpr span_meet(const SubspaceExpr& x, const SubspaceExpr& y);

enum class DescriptorKind { whole, empty, meets, dim_only };

[[nodiscard]] const char* to_string(DescriptorKind k) noexcept;

struct Descriptor {
    DescriptorKind kind = DescriptorKind::empty;
    SubspaceExpr subspace;  // meets only
    int dim = -1;           // -1 for empty
    std::string note;

    friend bool operator==(const Descriptor& x, const Descriptor& y) {
        return x.kind == y.kind && x.subspace == y.subspace && x.dim == y.dim;
    }
};

[[nodiscard]] Descriptor whole_space(int n);
[[nodiscard]] Descriptor empty_set();
[[nodiscard]] Descriptor dim_only(int dim, std::string note);
// { z : V_z cap S != 0 }, collapsed to whole/empty at the extremes.
[[nodiscard]] Descriptor meets_subspace(int n, const SubspaceExpr& s);

[[nodiscard]] std::string to_string(const Descriptor& d);

[[nodiscard]] Descriptor gamma1_schubert(int n, Pair v);
[[nodiscard]] Descriptor gamma_pair(int n, Pair u, Pair v, int d);
[[nodiscard]] Descriptor gamma_broken(int n, Pair u, Pair v, int d);

struct Classification {
    int d = 0;
    bool c1 = false;
    bool c2 = false;
    bool l1 = false;
    int deg2_case = 0;  // 1, 2, 3 or 0
    bool ev_birational = false;
    bool broken_two_to_one = false;
    bool gamma_equal = false;
};

[[nodiscard]] Classification classify(int n, Pair u, Pair v, int d);

[[nodiscard]] std::set<int> q_support_product(int n, Pair u, Pair v);

struct SeidelNeighborhood {
    int d_min = 0;
    Pair image;
};

[[nodiscard]] SeidelNeighborhood seidel_neighborhood(int n, Pair u);

// (4n-5) + d(2n-1) - codim(u) - codim(v).
[[nodiscard]] int dim_moduli(int n, Pair u, Pair v, int d);

}  // namespace qkig
