#pragma once

// Index combinatorics for the Schubert basis of IG(2,2n).
//
// A class O_{a,b} is indexed by 1 <= a < b <= 2n with a+b != 2n+1.
// X_{a,b} = { V : dim(V cap E_a) >= 1, V subset E_b } for the standard flag.

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkig {

struct Pair {
    int a = 0;
    int b = 0;

    friend constexpr bool operator==(const Pair&, const Pair&) = default;
};

// Total order used for output: (a+b, a). Refines the Bruhat order.
struct BasisLess {
    constexpr bool operator()(const Pair& x, const Pair& y) const noexcept {
        if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
        return x.a < y.a;
    }
};

class InvalidIndex : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] constexpr int dim_x(int n) noexcept { return 4 * n - 5; }
// Degree of the anticanonical class on a line; the q-shift in the extended notation.
[[nodiscard]] constexpr int c1_degree(int n) noexcept { return 2 * n - 1; }

void require_ambient(int n);

[[nodiscard]] bool is_valid_pair(int n, int a, int b) noexcept;
[[nodiscard]] inline bool is_valid_pair(int n, Pair p) noexcept { return is_valid_pair(n, p.a, p.b); }

// Throws InvalidIndex with a message naming the first violated constraint.
void require_valid(int n, Pair p);
[[nodiscard]] std::string violated_constraint(int n, Pair p);

[[nodiscard]] int delta(int n, int a, int b);
[[nodiscard]] inline int delta(int n, Pair p) { return delta(n, p.a, p.b); }

[[nodiscard]] int dim_schubert(int n, Pair p);
[[nodiscard]] int codim_schubert(int n, Pair p);

[[nodiscard]] bool bruhat_leq(int n, Pair x, Pair y);
[[nodiscard]] Pair dual_pair(int n, Pair p);

// u indexes X_u (standard flag), v indexes X^v (opposite flag).
[[nodiscard]] bool richardson_nonempty(int n, Pair u, Pair v);
[[nodiscard]] int richardson_dim(int n, Pair u, Pair v);

[[nodiscard]] std::vector<Pair> fixed_points(int n, Pair p);

[[nodiscard]] std::vector<Pair> basis_list(int n);
[[nodiscard]] inline std::size_t basis_size(int n) noexcept {
    return static_cast<std::size_t>(2 * n * (n - 1));
}
// Position of p in basis_list(n). Throws InvalidIndex for invalid pairs.
[[nodiscard]] std::size_t basis_position(int n, Pair p);

[[nodiscard]] Pair unit_pair(int n) noexcept;     // (2n-1, 2n)
[[nodiscard]] Pair point_pair() noexcept;         // (1, 2)
[[nodiscard]] Pair divisor_pair(int n) noexcept;  // (2n-2, 2n)
[[nodiscard]] Pair seidel_pair(int n) noexcept;   // (n-1, n)

[[nodiscard]] std::string to_string(Pair p);

}  // namespace qkig
