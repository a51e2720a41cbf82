#include "qkig/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qkig {

using boost::multiprecision::cpp_int;

namespace {

std::vector<std::vector<cpp_int>> clear_denominators(const Mat& m) {
    std::vector<std::vector<cpp_int>> out;
    out.reserve(m.size());
    for (const Vec& row : m) {
        cpp_int l = 1;
        for (const Rational& x : row) {
            const cpp_int d = boost::multiprecision::denominator(x);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        std::vector<cpp_int> r;
        r.reserve(row.size());
        for (const Rational& x : row) {
            r.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t width(const Mat& m) { return m.empty() ? 0 : m.front().size(); }

}  // namespace

int rank(const Mat& m) {
    auto a = clear_denominators(m);
    const std::size_t rows = a.size();
    const std::size_t cols = width(m);
    cpp_int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

Mat row_basis(const Mat& m) {
    Mat a = m;
    const std::size_t rows = a.size();
    const std::size_t cols = width(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

Mat null_space(const Mat& m, std::size_t cols) {
    const Mat e = row_basis(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (e[i][c] != 0) {
                pivot_of_col[c] = static_cast<int>(i);
                break;
            }
        }
    }
    Mat out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        Vec x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] >= 0) x[c] = -e[static_cast<std::size_t>(pivot_of_col[c])][f];
        }
        out.push_back(std::move(x));
    }
    return out;
}

Mat span_sum(const Mat& u, const Mat& w) {
    Mat all = u;
    all.insert(all.end(), w.begin(), w.end());
    return row_basis(all);
}

Mat span_intersection(const Mat& u, const Mat& w, std::size_t cols) {
    const Mat bu = row_basis(u);
    const Mat bw = row_basis(w);
    if (bu.empty() || bw.empty()) return {};
    // Solve sum_i alpha_i u_i = sum_j beta_j w_j: kernel of the transpose of [u; -w].
    const std::size_t k = bu.size() + bw.size();
    Mat t(cols, Vec(k, Rational(0)));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t i = 0; i < bu.size(); ++i) t[c][i] = bu[i][c];
        for (std::size_t j = 0; j < bw.size(); ++j) t[c][bu.size() + j] = -bw[j][c];
    }
    Mat out;
    for (const Vec& coeffs : null_space(t, k)) {
        Vec x(cols, Rational(0));
        for (std::size_t i = 0; i < bu.size(); ++i)
            for (std::size_t c = 0; c < cols; ++c) x[c] += coeffs[i] * bu[i][c];
        out.push_back(std::move(x));
    }
    return row_basis(out);
}

int dim_sum(const std::vector<Mat>& parts) {
    Mat all;
    for (const Mat& p : parts) all.insert(all.end(), p.begin(), p.end());
    return rank(all);
}

int dim_intersect(const Mat& u, const Mat& w) {
    return rank(u) + rank(w) - dim_sum({u, w});
}

bool contains(const Mat& u, const Vec& v) { return rank(u) == dim_sum({u, Mat{v}}); }

bool is_subspace(const Mat& u, const Mat& w) { return rank(w) == dim_sum({u, w}); }

bool same_span(const Mat& u, const Mat& w) { return is_subspace(u, w) && is_subspace(w, u); }

bool is_zero(const Vec& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

Vec combine(const Mat& basis, const std::vector<Rational>& coeffs) {
    if (basis.size() != coeffs.size()) throw std::invalid_argument("combine: size mismatch");
    Vec out(width(basis), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += coeffs[i] * basis[i][c];
    return out;
}

}  // namespace qkig
