#pragma once

// Exact symplectic linear algebra over Q for IG(2,2n): sampling, incidence tests,
// constructive curve witnesses, and ground-truth oracles for the index combinatorics.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkig/exact_linalg.hpp"
#include "qkig/schubert_index.hpp"

namespace qkig {

class DegenerateConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// omega(e_i, e_{2n+1-i}) = 1 for i <= n, extended antisymmetrically.
[[nodiscard]] Rational omega(int n, const Vec& x, const Vec& y);
[[nodiscard]] Mat symplectic_perp(int n, const Mat& u);
[[nodiscard]] int form_rank(int n, const Mat& u);
[[nodiscard]] bool is_isotropic(int n, const Mat& u);

// A rank-2 row space in Q^{2n}. Isotropy is not enforced here.
class Plane2 {
public:
    Plane2(int n, Mat rows);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] const Mat& rows() const noexcept { return rows_; }

private:
    int n_;
    Mat rows_;
};

[[nodiscard]] bool is_isotropic(const Plane2& x);
[[nodiscard]] std::string format_plane(const Plane2& x);

[[nodiscard]] Vec unit_vector(int n, int i);  // e_i, 1-based
[[nodiscard]] Mat coordinate_subspace(int n, const std::vector<int>& indices);
[[nodiscard]] Mat flag_std(int n, int p);  // E_p
[[nodiscard]] Mat flag_opp(int n, int q);  // E^q

enum class Orientation { standard, opposite };

// X_{a,b} (standard) or X^{a,b} (opposite) membership.
[[nodiscard]] bool in_schubert(const Plane2& x, Pair p, Orientation o);
// In X_p but in no smaller Schubert variety.
[[nodiscard]] bool in_open_cell(const Plane2& x, Pair p, Orientation o);

[[nodiscard]] Plane2 random_isotropic_plane(int n, std::uint64_t seed);
[[nodiscard]] Plane2 random_point_in_cell(int n, Pair p, Orientation o, std::uint64_t seed);
// Random isotropic plane inside span(space); isotropic = false skips the isotropy condition.
[[nodiscard]] Plane2 random_plane_in(int n, const Mat& space, Rng& rng, bool isotropic = true);

// dim(Vx + Vy) = 4 and omega has rank 4 on it.
[[nodiscard]] bool in_general_position(const Plane2& x, const Plane2& y);
// x != z and dim(Vx cap Vz) >= 1: x and z lie on a line of IG(2,2n).
[[nodiscard]] bool on_common_line(const Plane2& x, const Plane2& z);

// Middle point of a chain of two lines x - t - y.
[[nodiscard]] Plane2 chain2_through(const Plane2& x, const Plane2& y);

// Decides whether a degree-2 curve of IG(2,2n) passes through x, y and z, from the span of
// their Plucker vectors and the Plucker quadrics restricted to it.
[[nodiscard]] bool conic_through(const Plane2& x, const Plane2& y, const Plane2& z);

// Point t with x, y, t on a conic and t, z on a line; none if dim(Vx+Vy+Vz) > 5.
[[nodiscard]] std::optional<Plane2> gamma3_witness(const Plane2& x, const Plane2& y, const Plane2& z,
                                                   bool skip_isotropy = false);
[[nodiscard]] bool verify_gamma3(const Plane2& x, const Plane2& y, const Plane2& z, const Plane2& t);

struct Deg4Witness {
    Plane2 t;  // on a conic with x and y
    Plane2 s;  // on a line with t and on a line with z
};

[[nodiscard]] Deg4Witness deg4_witness(const Plane2& x, const Plane2& y, const Plane2& z, Rng& rng,
                                       bool skip_isotropy = false);
[[nodiscard]] bool verify_deg4(const Plane2& x, const Plane2& y, const Plane2& z, const Deg4Witness& w);

// x, y on a line and z general in a 4-space of full form rank: the unique t on (xy) lying on a
// line with z.
[[nodiscard]] Plane2 broken_conic_middle(const Plane2& x, const Plane2& y, const Plane2& z);

// Dimension criteria for Gamma_d(x,y) with x, y general; d = 1 tests z on the line (xy).
[[nodiscard]] bool gamma_point_pair(const Plane2& x, const Plane2& y, const Plane2& z, int d);

[[nodiscard]] std::vector<Pair> fixed_points_geometric(int n, Pair p);
[[nodiscard]] bool bruhat_oracle(int n, Pair x, Pair y);
[[nodiscard]] std::optional<Plane2> richardson_witness(int n, Pair u, Pair v, std::uint64_t seed = 0);

struct Report {
    std::string suite;
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;
    int accepted = 0;  // trials where the dimension criterion holds
    int rejected = 0;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

// Witness construction vs. dimension criterion for Gamma_d(x,y), d in {2,3,4}.
[[nodiscard]] Report membership_suite(int n, int d, int trials, std::uint64_t seed,
                                      bool plant_violation = false);

[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                        std::uint64_t c);

}  // namespace qkig
