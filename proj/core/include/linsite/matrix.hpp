#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linsite/field.hpp"

namespace linsite {

using Vec = std::vector<Scalar>;

/* Dense matrix over F_p, row-major.  The modulus travels with the matrix so
 * that mixed-field arithmetic is rejected early. */
class Mat {
  public:
    Mat() : p_(2), rows_(0), cols_(0) {}
    Mat(Scalar p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(Scalar p, std::size_t n);
    static Mat from_rows(Scalar p, const std::vector<Vec>& rows, std::size_t cols);

    Scalar modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);

    bool is_zero() const;
    bool operator==(const Mat&) const = default;

  private:
    Scalar p_;
    std::size_t rows_, cols_;
    Vec a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(Scalar c, const Mat& a);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/* A * v */
Vec mat_apply(const Mat& a, const Vec& v);

Vec vec_add(const Vec& a, const Vec& b, Scalar p);
Vec vec_sub(const Vec& a, const Vec& b, Scalar p);
Vec vec_scale(Scalar c, const Vec& a, Scalar p);
bool vec_is_zero(const Vec& a);

std::string to_string(const Mat& a);
std::string to_string(const Vec& v);

}  // namespace linsite
