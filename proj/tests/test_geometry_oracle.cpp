#include <gtest/gtest.h>

#include <qkig/exact_linalg.hpp>
#include <qkig/geometry_oracle.hpp>
#include <qkig/schubert_index.hpp>

using namespace qkig;

namespace {

Plane2 coord_plane(int n, int i, int j) { return Plane2(n, {unit_vector(n, i), unit_vector(n, j)}); }

int dimsum(const Plane2& x, const Plane2& y, const Plane2& z) { return dim_sum({x.rows(), y.rows(), z.rows()}); }

}  // namespace

TEST(LinearAlgebra, RankAndSpans) {
    const Mat m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(rank(m), 2);
    EXPECT_EQ(null_space(m, 3).size(), 1u);
    const Mat u{{1, 0, 0}, {0, 1, 0}}, w{{0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(span_intersection(u, w, 3).size(), 1u);
    EXPECT_EQ(dim_intersect(u, w), 1);
    EXPECT_TRUE(contains(u, Vec{3, -2, 0}));
    EXPECT_FALSE(contains(u, Vec{0, 0, 1}));
    EXPECT_TRUE(same_span(u, Mat{{1, 1, 0}, {1, -1, 0}}));
    EXPECT_EQ(rank(Mat{{Rational(1, 3), Rational(2, 7)}, {Rational(7, 3), 2}}), 1);
}

TEST(Symplectic, Isotropy) {
    EXPECT_TRUE(is_isotropic(coord_plane(3, 1, 2)));
    EXPECT_FALSE(is_isotropic(coord_plane(3, 1, 6)));
    EXPECT_EQ(omega(3, unit_vector(3, 1), unit_vector(3, 6)), 1);
    EXPECT_EQ(omega(3, unit_vector(3, 6), unit_vector(3, 1)), -1);
    const Plane2 x = coord_plane(3, 1, 2);
    EXPECT_EQ(dim_sum({x.rows(), x.rows()}), 2);
    EXPECT_THROW(Plane2(3, Mat{unit_vector(3, 1), unit_vector(3, 1)}), DegenerateConfiguration);
}

TEST(Sampling, Cells) {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Plane2 top = random_point_in_cell(3, unit_pair(3), Orientation::standard, s);
        EXPECT_TRUE(is_isotropic(top));
        EXPECT_TRUE(in_open_cell(top, unit_pair(3), Orientation::standard));
        for (const Pair& p : basis_list(3))
            if (p != unit_pair(3)) EXPECT_FALSE(in_schubert(top, p, Orientation::standard));
    }
    const Plane2 pt = random_point_in_cell(3, point_pair(), Orientation::standard, 1);
    EXPECT_TRUE(same_span(pt.rows(), coord_plane(3, 1, 2).rows()));

    for (const Pair& p : basis_list(3)) {
        const Plane2 x = random_point_in_cell(3, p, Orientation::opposite, 11);
        EXPECT_TRUE(is_isotropic(x));
        EXPECT_TRUE(in_open_cell(x, p, Orientation::opposite)) << to_string(p);
        EXPECT_TRUE(in_schubert(x, p, Orientation::opposite));
    }
}

TEST(Witness, Chain2Through) {
    const int n = 3;
    const Plane2 x = coord_plane(n, 1, 2), y = coord_plane(n, 5, 6);
    const Plane2 t = chain2_through(x, y);
    EXPECT_TRUE(is_isotropic(t));
    EXPECT_TRUE(on_common_line(x, t));
    EXPECT_TRUE(on_common_line(t, y));
    EXPECT_THROW((void)chain2_through(x, x), DegenerateConfiguration);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Plane2 a = random_isotropic_plane(4, 2 * s), b = random_isotropic_plane(4, 2 * s + 1);
        if (!in_general_position(a, b)) continue;
        const Plane2 m = chain2_through(a, b);
        EXPECT_TRUE(is_isotropic(m));
        EXPECT_TRUE(on_common_line(a, m) && on_common_line(m, b));
    }
}

TEST(Witness, Gamma3) {
    const Plane2 x = random_isotropic_plane(3, 100), y = random_isotropic_plane(3, 101);
    ASSERT_TRUE(in_general_position(x, y));
    const auto w = gamma3_witness(x, y, x);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_gamma3(x, y, x, *w));
    int none = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Plane2 z = random_isotropic_plane(3, 200 + s);
        if (dimsum(x, y, z) == 6) none += !gamma3_witness(x, y, z).has_value();
        else ADD_FAILURE() << "expected a generic z";
    }
    EXPECT_EQ(none, 10);
}

TEST(Witness, Deg4AlwaysExists) {
    Rng rng(5);
    const Plane2 x = random_isotropic_plane(4, 1), y = random_isotropic_plane(4, 2);
    ASSERT_TRUE(in_general_position(x, y));
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Plane2 z = random_isotropic_plane(4, 30 + s);
        const Deg4Witness w = deg4_witness(x, y, z, rng);
        EXPECT_TRUE(verify_deg4(x, y, z, w));
    }
}

TEST(Witness, BrokenConicMiddleOnQuadric) {
    const int n = 2;
    Rng rng(9);
    int checked = 0;
    for (std::uint64_t s = 0; s < 20 && checked < 5; ++s) {
        const Plane2 x = random_isotropic_plane(n, 300 + s);
        // y shares the first row of x: a point on a line through x.
        const Mat perp = symplectic_perp(n, Mat{x.rows()[1]});
        const Plane2 y0 = random_plane_in(n, perp, rng);
        const Mat yr{x.rows()[1], y0.rows()[0]};
        if (rank(yr) != 2 || same_span(yr, x.rows()) || !is_isotropic(n, yr)) continue;
        const Plane2 y(n, yr);
        const Plane2 z = random_isotropic_plane(n, 400 + s);
        if (dimsum(x, y, z) != 4 || form_rank(n, span_sum(span_sum(x.rows(), y.rows()), z.rows())) != 4) continue;
        Plane2 t(n, Mat{unit_vector(n, 1), unit_vector(n, 2)});
        try {
            t = broken_conic_middle(x, y, z);
        } catch (const DegenerateConfiguration&) {
            continue;
        }
        EXPECT_TRUE(is_isotropic(t));
        EXPECT_TRUE(on_common_line(t, z));
        EXPECT_TRUE(same_span(t.rows(), broken_conic_middle(y, x, z).rows()));
        EXPECT_THROW((void)broken_conic_middle(x, y, x), DegenerateConfiguration);
        ++checked;
    }
    EXPECT_GT(checked, 0);
}

TEST(Oracles, Bruhat) {
    for (int n = 2; n <= 4; ++n)
        for (const Pair& x : basis_list(n))
            for (const Pair& y : basis_list(n)) EXPECT_EQ(bruhat_oracle(n, x, y), bruhat_leq(n, x, y));
}

TEST(Oracles, RichardsonWitness) {
    const auto w = richardson_witness(3, {2, 6}, {4, 6});
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(is_isotropic(*w));
    EXPECT_TRUE(in_schubert(*w, {2, 6}, Orientation::standard));
    EXPECT_TRUE(in_schubert(*w, {4, 6}, Orientation::opposite));
    EXPECT_FALSE(richardson_witness(2, {1, 2}, {1, 2}).has_value());
    for (int n = 2; n <= 3; ++n)
        for (const Pair& u : basis_list(n))
            for (const Pair& v : basis_list(n))
                EXPECT_EQ(richardson_witness(n, u, v, 3).has_value(), richardson_nonempty(n, u, v));
}

TEST(Membership, SuiteControls) {
    const Report r3 = membership_suite(3, 3, 100, 7);
    EXPECT_TRUE(r3.ok()) << r3.failures.front();
    EXPECT_EQ(r3.trials, 100);
    EXPECT_GT(r3.accepted, 0);
    EXPECT_GT(r3.rejected, 0);

    const Report planted = membership_suite(3, 3, 50, 7, true);
    EXPECT_FALSE(planted.ok());

    const Report r4 = membership_suite(3, 4, 50, 7);
    EXPECT_TRUE(r4.ok());
    EXPECT_EQ(r4.accepted, 50);
    EXPECT_EQ(r4.rejected, 0);
}

TEST(Membership, GammaPointPairCriteria) {
    const Plane2 x = random_isotropic_plane(3, 1), y = random_isotropic_plane(3, 2);
    EXPECT_TRUE(gamma_point_pair(x, y, x, 2));
    EXPECT_TRUE(gamma_point_pair(x, y, random_isotropic_plane(3, 3), 4));
    EXPECT_FALSE(gamma_point_pair(x, y, random_isotropic_plane(3, 3), 3));
}

TEST(Membership, Reproducible) {
    const Report a = membership_suite(3, 2, 40, 123), b = membership_suite(3, 2, 40, 123);
    EXPECT_EQ(a.accepted, b.accepted);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_NE(derive_seed(1, 2, 3, 4), derive_seed(1, 2, 3, 5));
}
