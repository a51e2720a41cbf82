#pragma once

// Exact rational linear algebra on small dense matrices. Rows span subspaces.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace qkig {

using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Rank by fraction-free (Bareiss) elimination after clearing denominators.
[[nodiscard]] int rank(const Mat& m);

// Reduced row echelon form with zero rows dropped.
[[nodiscard]] Mat row_basis(const Mat& m);

// Basis (as rows) of { x : m x = 0 } in dimension cols.
[[nodiscard]] Mat null_space(const Mat& m, std::size_t cols);

[[nodiscard]] Mat span_sum(const Mat& u, const Mat& w);
// Basis of rowspace(u) cap rowspace(w) in dimension cols.
[[nodiscard]] Mat span_intersection(const Mat& u, const Mat& w, std::size_t cols);

[[nodiscard]] int dim_sum(const std::vector<Mat>& parts);
[[nodiscard]] int dim_intersect(const Mat& u, const Mat& w);

[[nodiscard]] bool contains(const Mat& u, const Vec& v);
[[nodiscard]] bool is_subspace(const Mat& u, const Mat& w);  // rowspace(u) subset rowspace(w)
[[nodiscard]] bool same_span(const Mat& u, const Mat& w);

[[nodiscard]] bool is_zero(const Vec& v);
[[nodiscard]] Vec combine(const Mat& basis, const std::vector<Rational>& coeffs);

}  // namespace qkig
