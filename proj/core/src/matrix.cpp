#include "linsite/matrix.hpp"

#include <sstream>

namespace linsite {

Mat Mat::identity(Scalar p, std::size_t n) {
    Mat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
}

Mat Mat::from_rows(Scalar p, const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
    }
    return m;
}

Vec Mat::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

Vec Mat::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Mat::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c] % p_;
}

bool Mat::is_zero() const {
    for (Scalar x : a_)
        if (x != 0) return false;
    return true;
}

static void check_field(const Mat& a, const Mat& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("matrix field mismatch");
}

Mat mat_mul(const Mat& a, const Mat& b) {
    check_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    const Scalar p = a.modulus();
    Mat c(p, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Scalar aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = addm(c(i, j), mulm(aik, b(k, j), p), p);
        }
    return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
    check_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: shape mismatch");
    Mat c(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = addm(a(i, j), b(i, j), a.modulus());
    return c;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    check_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_sub: shape mismatch");
    Mat c(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = subm(a(i, j), b(i, j), a.modulus());
    return c;
}

Mat mat_scale(Scalar c, const Mat& a) {
    Mat m(a.modulus(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = mulm(c % a.modulus(), a(i, j), a.modulus());
    return m;
}

Mat transpose(const Mat& a) {
    Mat t(a.modulus(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Mat hstack(const Mat& a, const Mat& b) {
    check_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Mat c(a.modulus(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

Mat vstack(const Mat& a, const Mat& b) {
    check_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    Mat c(a.modulus(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("apply: size mismatch");
    const Scalar p = a.modulus();
    Vec out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s = addm(s, mulm(a(i, j), v[j], p), p);
        out[i] = s;
    }
    return out;
}

Vec vec_add(const Vec& a, const Vec& b, Scalar p) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: size mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = addm(a[i], b[i], p);
    return c;
}

Vec vec_sub(const Vec& a, const Vec& b, Scalar p) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: size mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = subm(a[i], b[i], p);
    return c;
}

Vec vec_scale(Scalar c, const Vec& a, Scalar p) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulm(c % p, a[i], p);
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (Scalar x : a)
        if (x != 0) return false;
    return true;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

std::string to_string(const Mat& a) {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << " ; ";
        os << to_string(a.row(i));
    }
    return os.str();
}

}  // namespace linsite
