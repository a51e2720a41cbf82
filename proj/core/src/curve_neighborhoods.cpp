#include "qkig/curve_neighborhoods.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "qkig/ring_element.hpp"

namespace qkig {

SubspaceExpr flag_e(int n, int p) {
    SubspaceExpr s;
    for (int i = 1; i <= std::min(p, 2 * n); ++i) s.indices.push_back(i);
    return s;
}

SubspaceExpr flag_e_opp(int n, int q) {
    SubspaceExpr s;
    for (int i = std::max(1, 2 * n + 1 - q); i <= 2 * n; ++i) s.indices.push_back(i);
    return s;
}

SubspaceExpr span_sum(const SubspaceExpr& x, const SubspaceExpr& y) {
    SubspaceExpr s;
    std::set_union(x.indices.begin(), x.indices.end(), y.indices.begin(), y.indices.end(),
                   std::back_inserter(s.indices));
    return s;
}

SubspaceExpr span_meet(const SubspaceExpr& x, const SubspaceExpr& y) {
    SubspaceExpr s;
    std::set_intersection(x.indices.begin(), x.indices.end(), y.indices.begin(), y.indices.end(),
                          std::back_inserter(s.indices));
    return s;
}

const char* to_string(DescriptorKind k) noexcept {
    switch (k) {
        case DescriptorKind::whole: return "whole";
        case DescriptorKind::empty: return "empty";
        case DescriptorKind::meets: return "meets";
        case DescriptorKind::dim_only: return "dim_only";
    }
    return "unknown";
}

Descriptor whole_space(int n) {
    Descriptor d;
    d.kind = DescriptorKind::whole;
    d.subspace = flag_e(n, 2 * n);
    d.dim = dim_x(n);
    return d;
}

Descriptor empty_set() { return Descriptor{}; }

Descriptor dim_only(int dim, std::string note) {
    Descriptor d;
    d.kind = DescriptorKind::dim_only;
    d.dim = dim;
    d.note = std::move(note);
    return d;
}

Descriptor meets_subspace(int n, const SubspaceExpr& s) {
    if (s.indices.empty()) return empty_set();
    if (s.dim() >= 2 * n - 1) return whole_space(n);
    Descriptor d;
    d.kind = DescriptorKind::meets;
    d.subspace = s;
    d.dim = std::min(dim_x(n), s.dim() + 2 * n - 4);
    return d;
}

std::string to_string(const Descriptor& d) {
    std::ostringstream os;
    switch (d.kind) {
        case DescriptorKind::whole: os << "X"; break;
        case DescriptorKind::empty: os << "empty"; break;
        case DescriptorKind::dim_only: os << "dim-only"; break;
        case DescriptorKind::meets: {
            os << "{z : V_z meets span(e_i : i in {";
            for (std::size_t i = 0; i < d.subspace.indices.size(); ++i)
                os << (i ? "," : "") << d.subspace.indices[i];
            os << "})}";
            break;
        }
    }
    if (d.kind != DescriptorKind::empty) os << " dim " << d.dim;
    if (!d.note.empty()) os << " (" << d.note << ")";
    return os.str();
}

Descriptor gamma1_schubert(int n, Pair v) {
    require_valid(n, v);
    return meets_subspace(n, flag_e_opp(n, v.b));
}

namespace {

void require_degree(int d) {
    if (d < 1) throw std::invalid_argument("curve neighborhoods need d >= 1; use Richardson ops for d = 0");
}

SubspaceExpr deg2_subspace(int n, Pair u, Pair v) {
    return span_sum(span_sum(flag_e(n, u.a), span_meet(flag_e(n, u.b), flag_e_opp(n, v.b))),
                    flag_e_opp(n, v.a));
}

SubspaceExpr deg1_subspace(int n, Pair u, Pair v) {
    return span_meet(flag_e(n, u.b), flag_e_opp(n, v.b));
}

}  // namespace

Descriptor gamma_pair(int n, Pair u, Pair v, int d) {
    require_valid(n, u);
    require_valid(n, v);
    require_degree(d);
    if (d >= 4) return whole_space(n);
    if (d == 3) return meets_subspace(n, span_sum(flag_e(n, u.b), flag_e_opp(n, v.b)));
    if (d == 2) {
        if (deg2_birational_case(n, u, v) != 0) {
            const int dm2 = u.a + u.b + v.a + v.b - 3 - delta(n, u) - delta(n, v);
            return dim_only(dm2, "birational image of M_2");
        }
        return meets_subspace(n, deg2_subspace(n, u, v));
    }
    if (satisfies_c1(n, u, v)) return whole_space(n);
    if (satisfies_l1(n, u, v)) {
        if (u.b + v.b >= 2 * n + 1) return dim_only(dim_moduli(n, u, v, 1), "birational image of M_1");
        return empty_set();
    }
    return meets_subspace(n, deg1_subspace(n, u, v));
}

Descriptor gamma_broken(int n, Pair u, Pair v, int d) {
    require_valid(n, u);
    require_valid(n, v);
    require_degree(d);
    if (d >= 4) return whole_space(n);
    if (d == 3) return meets_subspace(n, span_sum(flag_e(n, u.b), flag_e_opp(n, v.b)));
    if (d == 2) {
        if (u.b + v.b > 2 * n) return meets_subspace(n, deg2_subspace(n, u, v));
        return empty_set();
    }
    if (satisfies_c1(n, u, v)) return whole_space(n);
    if (satisfies_l1(n, u, v)) {
        // Lines through the Richardson variety; birational whenever the pure map is.
        if (richardson_nonempty(n, u, v)) {
            return dim_only(dim_moduli(n, u, v, 1) - 1, "birational image of M_{0,1}");
        }
        return empty_set();
    }
    return meets_subspace(n, deg1_subspace(n, u, v));
}

Classification classify(int n, Pair u, Pair v, int d) {
    require_valid(n, u);
    require_valid(n, v);
    require_degree(d);
    Classification c;
    c.d = d;
    c.c1 = satisfies_c1(n, u, v);
    c.c2 = satisfies_c2(n, u, v);
    c.l1 = satisfies_l1(n, u, v);
    c.deg2_case = deg2_birational_case(n, u, v);
    if (d == 1) {
        c.ev_birational = c.l1;
        c.broken_two_to_one = c.c1;
    } else if (d == 2) {
        c.ev_birational = c.deg2_case != 0;
        c.broken_two_to_one = c.c2;
    }
    c.gamma_equal = !c.ev_birational;
    return c;
}

std::set<int> q_support_product(int n, Pair u, Pair v) {
    std::set<int> s;
    if (richardson_nonempty(n, u, v)) s.insert(0);
    if ((satisfies_l1(n, u, v) && u.b + v.b >= 2 * n + 1) || satisfies_c1(n, u, v)) s.insert(1);
    if (deg2_birational_case(n, u, v) != 0 || satisfies_c2(n, u, v)) s.insert(2);
    if (s.empty() || !is_interval(s)) {
        throw std::logic_error("q-support of O_" + to_string(u) + " * O^" + to_string(v) +
                               " is not a nonempty interval");
    }
    return s;
}

SeidelNeighborhood seidel_neighborhood(int n, Pair u) {
    require_valid(n, u);
    if (u.b <= n) return {2, {u.a + n, u.b + n}};
    if (u.a <= n) return {1, {u.b - n, u.a + n}};
    return {0, {u.a - n, u.b - n}};
}

int dim_moduli(int n, Pair u, Pair v, int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    const int dm = dim_x(n) + d * c1_degree(n) - codim_schubert(n, u) - codim_schubert(n, v);
    if (d == 2 && dm != u.a + u.b + v.a + v.b - 3 - delta(n, u) - delta(n, v)) {
        throw std::logic_error("dim M_2 disagrees with the index formula");
    }
    return dm;
}

}  // namespace qkig
