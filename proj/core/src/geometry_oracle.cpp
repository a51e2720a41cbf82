#include "qkig/geometry_oracle.hpp"

#include "qkig/ring_element.hpp"

#include <algorithm>
#include <sstream>

namespace qkig {

namespace {

constexpr int kCoordBound = 100;
constexpr int kRetries = 64;

std::size_t dimension(int n) { return static_cast<std::size_t>(2 * n); }

Rational random_entry(Rng& rng) {
    std::uniform_int_distribution<int> dist(-kCoordBound, kCoordBound);
    return Rational(dist(rng));
}

Vec random_combination(const Mat& basis, std::size_t cols, Rng& rng) {
    Vec v(cols, Rational(0));
    for (const Vec& b : basis) {
        const Rational c = random_entry(rng);
        for (std::size_t i = 0; i < cols; ++i) v[i] += c * b[i];
    }
    return v;
}

// Row c with c . x = omega(x, v).
Vec omega_row(int n, const Vec& v) {
    const std::size_t m = dimension(n);
    Vec c(m, Rational(0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const std::size_t j = m - 1 - i;
        c[i] = v[j];
        c[j] = -v[i];
    }
    return c;
}

Mat vectors_of(const Plane2& x) { return x.rows(); }

Plane2 reversed(const Plane2& x) {
    Mat r = x.rows();
    for (Vec& row : r) std::reverse(row.begin(), row.end());
    return Plane2(x.n(), std::move(r));
}

std::string format_vec(const Vec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

std::vector<Integer> integral_row(const Vec& v) {
    Integer l = 1;
    for (const Rational& x : v) {
        const Integer d = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, d) * d;
    }
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
    return out;
}

// Plucker coordinates p_ij = r_i s_j - r_j s_i, i < j, lexicographic, of the rows scaled to integers.
std::vector<Integer> integral_plucker(const Plane2& x) {
    const auto r = integral_row(x.rows()[0]);
    const auto s = integral_row(x.rows()[1]);
    const std::size_t m = r.size();
    std::vector<Integer> p;
    p.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) p.push_back(r[i] * s[j] - r[j] * s[i]);
    return p;
}

std::size_t pl_index(std::size_t m, std::size_t i, std::size_t j) {
    // Offset of (i,j), i < j, in the lexicographic listing.
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

Rational omega(int n, const Vec& x, const Vec& y) {
    const std::size_t m = dimension(n);
    Rational s = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const std::size_t j = m - 1 - i;
        s += x[i] * y[j] - x[j] * y[i];
    }
    return s;
}

Mat symplectic_perp(int n, const Mat& u) {
    Mat rows;
    for (const Vec& v : u) rows.push_back(omega_row(n, v));
    return null_space(rows, dimension(n));
}

int form_rank(int n, const Mat& u) {
    const Mat b = row_basis(u);
    Mat g(b.size(), Vec(b.size(), Rational(0)));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = omega(n, b[i], b[j]);
    return rank(g);
}

bool is_isotropic(int n, const Mat& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (omega(n, u[i], u[j]) != 0) return false;
    return true;
}

Plane2::Plane2(int n, Mat rows) : n_(n), rows_(std::move(rows)) {
    require_ambient(n);
    if (rows_.size() != 2) throw DegenerateConfiguration("Plane2 needs exactly two rows");
    for (const Vec& r : rows_)
        if (r.size() != dimension(n)) throw DegenerateConfiguration("Plane2 row has wrong length");
    if (rank(rows_) != 2) throw DegenerateConfiguration("Plane2 rows are not independent");
}

bool is_isotropic(const Plane2& x) { return omega(x.n(), x.rows()[0], x.rows()[1]) == 0; }

std::string format_plane(const Plane2& x) {
    return "[" + format_vec(x.rows()[0]) + "," + format_vec(x.rows()[1]) + "]";
}

Vec unit_vector(int n, int i) {
    Vec v(dimension(n), Rational(0));
    v.at(static_cast<std::size_t>(i - 1)) = 1;
    return v;
}

Mat coordinate_subspace(int n, const std::vector<int>& indices) {
    Mat m;
    for (int i : indices) m.push_back(unit_vector(n, i));
    return m;
}

Mat flag_std(int n, int p) {
    std::vector<int> idx;
    for (int i = 1; i <= p; ++i) idx.push_back(i);
    return coordinate_subspace(n, idx);
}

Mat flag_opp(int n, int q) {
    std::vector<int> idx;
    for (int i = 2 * n + 1 - q; i <= 2 * n; ++i) idx.push_back(i);
    return coordinate_subspace(n, idx);
}

bool in_schubert(const Plane2& x, Pair p, Orientation o) {
    const int n = x.n();
    require_valid(n, p);
    const Mat ea = o == Orientation::standard ? flag_std(n, p.a) : flag_opp(n, p.a);
    const Mat eb = o == Orientation::standard ? flag_std(n, p.b) : flag_opp(n, p.b);
    const Mat v = vectors_of(x);
    return dim_intersect(v, ea) >= 1 && is_subspace(v, eb);
}

bool in_open_cell(const Plane2& x, Pair p, Orientation o) {
    if (!is_isotropic(x) || !in_schubert(x, p, o)) return false;
    for (const Pair& c : basis_list(x.n())) {
        if (c == p || !bruhat_leq(x.n(), c, p)) continue;
        if (in_schubert(x, c, o)) return false;
    }
    return true;
}

Plane2 random_plane_in(int n, const Mat& space, Rng& rng, bool isotropic) {
    const std::size_t m = dimension(n);
    const Mat basis = row_basis(space);
    if (basis.size() < 2) throw DegenerateConfiguration("space too small for a plane");
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const Vec v1 = random_combination(basis, m, rng);
        if (is_zero(v1)) continue;
        Mat second = basis;
        if (isotropic) {
            // Coefficients c with omega(c . basis, v1) = 0.
            const Vec w = omega_row(n, v1);
            Vec cond(basis.size(), Rational(0));
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t k = 0; k < m; ++k) cond[i] += w[k] * basis[i][k];
            second.clear();
            for (const Vec& c : null_space(Mat{cond}, basis.size())) second.push_back(combine(basis, c));
            if (second.empty()) continue;
        }
        const Vec v2 = random_combination(second, m, rng);
        if (rank(Mat{v1, v2}) == 2) return Plane2(n, Mat{v1, v2});
    }
    throw SamplingError("could not sample a plane in the given subspace");
}

Plane2 random_isotropic_plane(int n, std::uint64_t seed) {
    require_ambient(n);
    Rng rng(seed);
    return random_plane_in(n, flag_std(n, 2 * n), rng);
}

Plane2 random_point_in_cell(int n, Pair p, Orientation o, std::uint64_t seed) {
    require_valid(n, p);
    Rng rng(seed);
    const std::size_t m = dimension(n);
    const Mat ea = flag_std(n, p.a);
    const Mat eb = flag_std(n, p.b);
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const Vec v1 = random_combination(ea, m, rng);
        if (is_zero(v1)) continue;
        Mat cond{omega_row(n, v1)};
        // Restrict to E_b: coordinates beyond b vanish.
        for (int i = p.b + 1; i <= 2 * n; ++i) cond.push_back(unit_vector(n, i));
        const Mat k = null_space(cond, m);
        const Vec v2 = random_combination(k, m, rng);
        if (rank(Mat{v1, v2}) != 2) continue;
        Plane2 x(n, Mat{v1, v2});
        if (o == Orientation::opposite) x = reversed(x);
        if (in_open_cell(x, p, o)) return x;
    }
    throw SamplingError("could not sample a point in the open cell " + to_string(p));
}

bool in_general_position(const Plane2& x, const Plane2& y) {
    const Mat v = span_sum(vectors_of(x), vectors_of(y));
    return v.size() == 4 && form_rank(x.n(), v) == 4;
}

bool on_common_line(const Plane2& x, const Plane2& z) {
    return dim_intersect(vectors_of(x), vectors_of(z)) == 1;
}

Plane2 chain2_through(const Plane2& x, const Plane2& y) {
    const int n = x.n();
    if (!is_isotropic(x) || !is_isotropic(y)) throw DegenerateConfiguration("chain2_through: non-isotropic input");
    if (!in_general_position(x, y)) {
        throw DegenerateConfiguration("chain2_through: needs Vx cap Vy = 0 and form rank 4 on Vx + Vy");
    }
    const Vec& a = x.rows()[0];
    const Mat b = span_intersection(vectors_of(y), symplectic_perp(n, Mat{a}), dimension(n));
    if (b.size() != 1) throw DegenerateConfiguration("chain2_through: Vy cap a^perp is not a line");
    Plane2 t(n, Mat{a, b[0]});
    if (!is_isotropic(t) || !on_common_line(t, x) || !on_common_line(t, y)) {
        throw std::logic_error("chain2_through: witness fails its incidences");
    }
    return t;
}

bool conic_through(const Plane2& x, const Plane2& y, const Plane2& z) {
    if (!is_isotropic(x) || !is_isotropic(y) || !is_isotropic(z)) return false;
    const Mat vz = vectors_of(z);
    if (same_span(vz, vectors_of(x)) || same_span(vz, vectors_of(y))) {
        // z coincides with x or y: use the reducible conic x - t - y.
        if (!in_general_position(x, y)) return false;
        (void)chain2_through(x, y);
        return true;
    }
    // Integral Plucker vectors: scale each plane's rows to integers first.
    const std::vector<std::vector<Integer>> pts{integral_plucker(x), integral_plucker(y), integral_plucker(z)};
    Mat as_rational;
    for (const auto& p : pts) as_rational.push_back(Vec(p.begin(), p.end()));
    const std::size_t k = static_cast<std::size_t>(rank(as_rational));
    const std::size_t m = dimension(x.n());
    // px, py are independent since x != y; when z is on their secant use the line span{px, py}.
    const std::size_t used = k == 3 ? 3 : 2;
    // Restrict every quadric p_ij p_kl - p_ik p_jl + p_il p_jk to the span; collect Gram entries.
    Mat forms;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t a = j + 1; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b) {
                    const std::size_t ij = pl_index(m, i, j), kl = pl_index(m, a, b);
                    const std::size_t ik = pl_index(m, i, a), jl = pl_index(m, j, b);
                    const std::size_t il = pl_index(m, i, b), jk = pl_index(m, j, a);
                    Vec g;
                    for (std::size_t r = 0; r < used; ++r)
                        for (std::size_t s = r; s < used; ++s) {
                            const auto& p = pts[r];
                            const auto& q = pts[s];
                            g.emplace_back(Integer(p[ij] * q[kl] + q[ij] * p[kl] - p[ik] * q[jl] - q[ik] * p[jl] +
                                                   p[il] * q[jk] + q[il] * p[jk]));
                        }
                    forms.push_back(std::move(g));
                }
    const int r = rank(forms);
    // Three points spanning a plane lie on a conic of the Grassmannian iff the restricted
    // quadrics are proportional; on a line they must vanish identically.
    return used == 3 ? r <= 1 : r == 0;
}

std::optional<Plane2> gamma3_witness(const Plane2& x, const Plane2& y, const Plane2& z, bool skip_isotropy) {
    const int n = x.n();
    if (!in_general_position(x, y)) throw DegenerateConfiguration("gamma3_witness: x, y not in general position");
    const Mat v = span_sum(vectors_of(x), vectors_of(y));
    const Mat meet = span_intersection(v, vectors_of(z), dimension(n));
    if (meet.empty()) return std::nullopt;
    const Vec& vv = meet[0];
    const Mat candidates =
        skip_isotropy ? v : span_intersection(v, symplectic_perp(n, vectors_of(z)), dimension(n));
    // V cap Vz^perp has dimension >= 2 and contains vv, so some basis vector is independent of vv.
    for (const Vec& w : candidates) {
        if (rank(Mat{vv, w}) == 2) return Plane2(n, Mat{vv, w});
    }
    return std::nullopt;
}

bool verify_gamma3(const Plane2& x, const Plane2& y, const Plane2& z, const Plane2& t) {
    const Mat v = span_sum(vectors_of(x), vectors_of(y));
    if (!is_isotropic(t) || !is_subspace(vectors_of(t), v)) return false;
    if (dim_intersect(vectors_of(t), vectors_of(z)) < 1) return false;
    return conic_through(x, y, t);
}

Deg4Witness deg4_witness(const Plane2& x, const Plane2& y, const Plane2& z, Rng& rng, bool skip_isotropy) {
    const int n = x.n();
    if (!in_general_position(x, y)) throw DegenerateConfiguration("deg4_witness: x, y not in general position");
    const Mat v = span_sum(vectors_of(x), vectors_of(y));
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        Plane2 t = random_plane_in(n, v, rng, !skip_isotropy);
        if (skip_isotropy) {
            // The planted control keeps the non-isotropic t; chain2 would reject it.
            return Deg4Witness{t, t};
        }
        if (!is_isotropic(z) || !in_general_position(t, z)) continue;
        Plane2 s = chain2_through(t, z);
        return Deg4Witness{t, s};
    }
    throw SamplingError("deg4_witness: no point of IG(2, Vx + Vy) in general position with z");
}

bool verify_deg4(const Plane2& x, const Plane2& y, const Plane2& z, const Deg4Witness& w) {
    const Mat v = span_sum(vectors_of(x), vectors_of(y));
    if (!is_isotropic(w.t) || !is_isotropic(w.s) || !is_isotropic(z)) return false;
    if (!is_subspace(vectors_of(w.t), v)) return false;
    if (!on_common_line(w.t, w.s) || !on_common_line(w.s, z)) return false;
    return conic_through(x, y, w.t);
}

Plane2 broken_conic_middle(const Plane2& x, const Plane2& y, const Plane2& z) {
    const int n = x.n();
    const std::size_t m = dimension(n);
    const Mat vx = vectors_of(x), vy = vectors_of(y), vz = vectors_of(z);
    if (!is_isotropic(x) || !is_isotropic(y) || !is_isotropic(z)) {
        throw DegenerateConfiguration("broken_conic_middle: non-isotropic input");
    }
    const Mat l = span_intersection(vx, vy, m);
    if (l.size() != 1) throw DegenerateConfiguration("broken_conic_middle: x and y are not on a line");
    const Mat u3 = span_sum(vx, vy);
    const Mat e = span_sum(u3, vz);
    if (e.size() != 4 || form_rank(n, e) != 4) {
        throw DegenerateConfiguration("broken_conic_middle: need dim(Vx+Vy+Vz) = 4 with full form rank");
    }
    const Mat mline = span_intersection(u3, vz, m);
    if (mline.size() != 1 || contains(l, mline[0])) {
        throw DegenerateConfiguration("broken_conic_middle: z lies on the line (xy)");
    }
    Plane2 t(n, row_basis(Mat{l[0], mline[0]}));
    if (!is_isotropic(t) || !is_subspace(l, vectors_of(t)) || !is_subspace(vectors_of(t), u3) ||
        dim_intersect(vectors_of(t), vz) < 1) {
        throw std::logic_error("broken_conic_middle: witness fails its incidences");
    }
    return t;
}

bool gamma_point_pair(const Plane2& x, const Plane2& y, const Plane2& z, int d) {
    if (d < 1) throw std::invalid_argument("gamma_point_pair needs d >= 1");
    const Mat vx = vectors_of(x), vy = vectors_of(y), vz = vectors_of(z);
    if (d == 1) {
        const Mat l = span_intersection(vx, vy, dimension(x.n()));
        return l.size() == 1 && is_subspace(l, vz) && is_subspace(vz, span_sum(vx, vy));
    }
    const int s = dim_sum({vx, vy, vz});
    if (d == 2) return s <= 4;
    if (d == 3) return s <= 5;
    return true;
}

std::vector<Pair> fixed_points_geometric(int n, Pair p) {
    require_valid(n, p);
    std::vector<Pair> out;
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = i + 1; j <= 2 * n; ++j) {
            Plane2 t(n, Mat{unit_vector(n, i), unit_vector(n, j)});
            if (is_isotropic(t) && in_schubert(t, p, Orientation::standard)) out.push_back({i, j});
        }
    std::sort(out.begin(), out.end(), BasisLess{});
    return out;
}

bool bruhat_oracle(int n, Pair x, Pair y) {
    const auto fx = fixed_points_geometric(n, x);
    const auto fy = fixed_points_geometric(n, y);
    return std::includes(fy.begin(), fy.end(), fx.begin(), fx.end(), BasisLess{});
}

std::optional<Plane2> richardson_witness(int n, Pair u, Pair v, std::uint64_t seed) {
    require_valid(n, u);
    require_valid(n, v);
    const std::size_t m = dimension(n);
    const Mat i1 = span_intersection(flag_std(n, u.a), flag_opp(n, v.b), m);
    const Mat i2 = span_intersection(flag_std(n, u.b), flag_opp(n, v.a), m);
    if (i1.empty() || i2.empty()) return std::nullopt;
    Rng rng(seed);
    // Generic a' in i1 with b' in i2 cap a'^perp, then the mirrored choice (b' first).
    for (const bool first_in_i1 : {true, false}) {
        const Mat& src = first_in_i1 ? i1 : i2;
        const Mat& dst = first_in_i1 ? i2 : i1;
        for (int attempt = 0; attempt < kRetries; ++attempt) {
            const Vec a = random_combination(src, m, rng);
            if (is_zero(a)) continue;
            const Mat k = span_intersection(dst, symplectic_perp(n, Mat{a}), m);
            if (k.empty() || is_subspace(k, Mat{a})) break;
            const Vec b = random_combination(k, m, rng);
            if (rank(Mat{a, b}) != 2) continue;
            Plane2 w(n, Mat{a, b});
            if (!is_isotropic(w) || !in_schubert(w, u, Orientation::standard) ||
                !in_schubert(w, v, Orientation::opposite)) {
                throw std::logic_error("richardson_witness: witness fails its incidences");
            }
            return w;
        }
    }
    return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    // splitmix64 over the packed inputs.
    std::uint64_t z = seed;
    for (std::uint64_t part : {a, b, c}) {
        z += 0x9e3779b97f4a7c15ULL + part;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
    }
    return z;
}

namespace {

Plane2 sample_general_pair_member(int n, Rng& rng) {
    return random_plane_in(n, flag_std(n, 2 * n), rng);
}

}  // namespace

Report membership_suite(int n, int d, int trials, std::uint64_t seed, bool plant_violation) {
    if (d < 2 || d > 4) throw std::invalid_argument("membership_suite covers d in {2,3,4}");
    Report rep;
    rep.suite = "membership_d" + std::to_string(d) + (plant_violation ? "_planted" : "");
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t ts = derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d),
                                             static_cast<std::uint64_t>(trial));
        Rng rng(ts);
        std::optional<Plane2> x, y;
        for (int attempt = 0; attempt < kRetries && !x; ++attempt) {
            Plane2 cx = sample_general_pair_member(n, rng);
            Plane2 cy = sample_general_pair_member(n, rng);
            if (in_general_position(cx, cy)) {
                x = cx;
                y = cy;
            }
        }
        if (!x) throw SamplingError("membership_suite: no general pair (x,y)");
        const Mat v = span_sum(x->rows(), y->rows());
        const bool planted_z = plant_violation && d == 2;
        Plane2 z = [&] {
            switch (trial % 3) {
                case 0: return random_plane_in(n, v, rng, !planted_z);
                case 1: {
                    // One vector in Vx + Vy, the other generic.
                    Plane2 a = random_plane_in(n, v, rng, true);
                    Mat rows{a.rows()[0]};
                    Mat perp = planted_z ? flag_std(n, 2 * n) : symplectic_perp(n, rows);
                    for (int k = 0; k < kRetries; ++k) {
                        Vec w = random_combination(perp, static_cast<std::size_t>(2 * n), rng);
                        if (rank(Mat{rows[0], w}) == 2) return Plane2(n, Mat{rows[0], w});
                    }
                    throw SamplingError("membership_suite: z sampling failed");
                }
                default: return random_plane_in(n, flag_std(n, 2 * n), rng, !planted_z);
            }
        }();
        const bool criterion = gamma_point_pair(*x, *y, z, d);
        bool witness = false;
        std::string detail;
        if (d == 2) {
            witness = conic_through(*x, *y, z);
        } else if (d == 3) {
            auto t = gamma3_witness(*x, *y, z, plant_violation);
            witness = t && verify_gamma3(*x, *y, z, *t);
            if (t) detail = " t=" + format_plane(*t);
        } else {
            Deg4Witness w = deg4_witness(*x, *y, z, rng, plant_violation);
            witness = verify_deg4(*x, *y, z, w);
            detail = " t=" + format_plane(w.t) + " s=" + format_plane(w.s);
        }
        if (criterion) ++rep.accepted; else ++rep.rejected;
        if (witness != criterion) {
            std::ostringstream os;
            os << "trial " << trial << " seed " << ts << ": criterion " << criterion << " witness " << witness
               << " x=" << format_plane(*x) << " y=" << format_plane(*y) << " z=" << format_plane(z) << detail;
            rep.failures.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace qkig
