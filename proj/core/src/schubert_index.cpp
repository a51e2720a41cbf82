#include "qkig/schubert_index.hpp"

#include <algorithm>
#include <sstream>

namespace qkig {

void require_ambient(int n) {
    if (n < 2) throw InvalidIndex("ambient parameter n must be >= 2 (got " + std::to_string(n) + ")");
}

bool is_valid_pair(int n, int a, int b) noexcept {
    return 1 <= a && a < b && b <= 2 * n && a + b != 2 * n + 1;
}

std::string violated_constraint(int n, Pair p) {
    std::ostringstream os;
    if (n < 2) {
        os << "n >= 2 violated (n=" << n << ")";
    } else if (p.a < 1) {
        os << "1 <= a violated (a=" << p.a << ")";
    } else if (p.a >= p.b) {
        os << "a < b violated (a=" << p.a << ", b=" << p.b << ")";
    } else if (p.b > 2 * n) {
        os << "b <= 2n violated (b=" << p.b << ", 2n=" << 2 * n << ")";
    } else if (p.a + p.b == 2 * n + 1) {
        os << "a+b != 2n+1 violated (a+b=" << p.a + p.b << ")";
    }
    return os.str();
}

void require_valid(int n, Pair p) {
    require_ambient(n);
    if (!is_valid_pair(n, p)) {
        throw InvalidIndex("invalid pair " + to_string(p) + " for n=" + std::to_string(n) + ": " +
                           violated_constraint(n, p));
    }
}

int delta(int n, int a, int b) {
    if (a + b == 2 * n + 1) {
        throw InvalidIndex("delta undefined on the antidiagonal a+b = 2n+1 (a=" + std::to_string(a) +
                           ", b=" + std::to_string(b) + ")");
    }
    return a + b < 2 * n + 1 ? 0 : 1;
}

int dim_schubert(int n, Pair p) {
    require_valid(n, p);
    return p.a + p.b - 3 - delta(n, p);
}

int codim_schubert(int n, Pair p) { return dim_x(n) - dim_schubert(n, p); }

bool bruhat_leq(int n, Pair x, Pair y) {
    require_valid(n, x);
    require_valid(n, y);
    return x.a <= y.a && x.b <= y.b;
}

Pair dual_pair(int n, Pair p) {
    require_valid(n, p);
    return {2 * n + 1 - p.b, 2 * n + 1 - p.a};
}

bool richardson_nonempty(int n, Pair u, Pair v) {
    require_valid(n, u);
    require_valid(n, v);
    return u.a + v.b >= 2 * n + 1 && u.b + v.a >= 2 * n + 1;
}

int richardson_dim(int n, Pair u, Pair v) {
    if (!richardson_nonempty(n, u, v)) {
        throw InvalidIndex("empty Richardson variety for u=" + to_string(u) + ", v=" + to_string(v));
    }
    return u.a + u.b + v.a + v.b - 4 * n - 1 - delta(n, u) - delta(n, v);
}

std::vector<Pair> fixed_points(int n, Pair p) {
    require_valid(n, p);
    std::vector<Pair> out;
    for (int i = 1; i <= p.a; ++i)
        for (int j = i + 1; j <= p.b; ++j)
            if (i + j != 2 * n + 1) out.push_back({i, j});
    std::sort(out.begin(), out.end(), BasisLess{});
    return out;
}

std::vector<Pair> basis_list(int n) {
    require_ambient(n);
    std::vector<Pair> out;
    out.reserve(basis_size(n));
    for (int s = 3; s <= 4 * n - 1; ++s) {
        if (s == 2 * n + 1) continue;
        for (int a = std::max(1, s - 2 * n); 2 * a < s; ++a) out.push_back({a, s - a});
    }
    return out;
}

std::size_t basis_position(int n, Pair p) {
    require_valid(n, p);
    // Count pairs with a smaller sum, then pairs with the same sum and smaller a.
    std::size_t pos = 0;
    const int s = p.a + p.b;
    for (int t = 3; t < s; ++t) {
        if (t == 2 * n + 1) continue;
        const int lo = std::max(1, t - 2 * n);
        const int hi = (t - 1) / 2;
        if (hi >= lo) pos += static_cast<std::size_t>(hi - lo + 1);
    }
    pos += static_cast<std::size_t>(p.a - std::max(1, s - 2 * n));
    return pos;
}

Pair unit_pair(int n) noexcept { return {2 * n - 1, 2 * n}; }
Pair point_pair() noexcept { return {1, 2}; }
Pair divisor_pair(int n) noexcept { return {2 * n - 2, 2 * n}; }
Pair seidel_pair(int n) noexcept { return {n - 1, n}; }

std::string to_string(Pair p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

}  // namespace qkig
