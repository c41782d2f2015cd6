#include "linsite/solve.hpp"

namespace linsite {

Echelon echelon_form(const Mat& a) {
    const Scalar p = a.modulus();
    Mat m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // first nonzero entry in column c at or below row r
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
        Scalar inv = invm(m(r, c), p);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = mulm(m(r, j), inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = subm(m(i, j), mulm(f, m(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    Mat red(p, pivots.size(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) red(i, j) = m(i, j);
    return Echelon{std::move(red), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return echelon_form(a).rank(); }

LinearSolution solve_linear(const Mat& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
    const Scalar p = a.modulus();
    Mat rhs(p, a.rows(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i] % p;
    Echelon e = echelon_form(hstack(a, rhs));

    LinearSolution out;
    out.kernel = kernel_basis(a);
    for (std::size_t col : e.pivots)
        if (col == a.cols()) return out;  // pivot in the augmented column: inconsistent
    Vec x(a.cols(), 0);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
    out.particular = std::move(x);
    return out;
}

std::vector<Vec> kernel_basis(const Mat& a) {
    const Scalar p = a.modulus();
    Echelon e = echelon_form(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(a.cols(), 0);
        v[c] = 1 % p;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = negm(e.reduced(i, c), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

ImageQuotient image_and_quotient(const Mat& a) {
    const Scalar p = a.modulus();
    Echelon col_space = echelon_form(transpose(a));
    ImageQuotient out;
    for (std::size_t i = 0; i < col_space.rank(); ++i) out.image.push_back(col_space.reduced.row(i));

    std::vector<bool> is_pivot(a.rows(), false);
    for (std::size_t c : col_space.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!is_pivot[i]) free_rows.push_back(i);

    /* Basis of F_p^rows: image rows first, then unit vectors at the non-pivot
     * coordinates.  Q reads off the coefficients on the latter. */
    Mat basis(p, a.rows(), a.rows());
    for (std::size_t i = 0; i < col_space.rank(); ++i)
        basis.set_row(i, col_space.reduced.row(i));
    for (std::size_t k = 0; k < free_rows.size(); ++k)
        basis(col_space.rank() + k, free_rows[k]) = 1 % p;
    auto binv = inverse(transpose(basis));
    if (!binv) throw std::logic_error("image_and_quotient: complement basis not invertible");
    Mat q(p, free_rows.size(), a.rows());
    for (std::size_t k = 0; k < free_rows.size(); ++k)
        q.set_row(k, binv->row(col_space.rank() + k));
    out.projection = std::move(q);
    return out;
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const std::size_t n = a.rows();
    Echelon e = echelon_form(hstack(a, Mat::identity(a.modulus(), n)));
    if (e.rank() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivots[i] != i) return std::nullopt;
    Mat inv(a.modulus(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    Mat x(a.modulus(), a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        LinearSolution s = solve_linear(a, b.col(j));
        if (!s.particular) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) x(i, j) = (*s.particular)[i];
    }
    return x;
}

std::optional<Mat> section_of(const Mat& a) {
    return solve_matrix(a, Mat::identity(a.modulus(), a.rows()));
}

}  // namespace linsite
