#pragma once

#include <optional>

#include "linsite/matrix.hpp"

namespace linsite {

/* Reduced row echelon form.  Pivoting is first-nonzero; the result is the
 * canonical RREF of the row space, with zero rows dropped. */
struct Echelon {
    Mat reduced;                    // rank x cols, unit pivots, cleared columns
    std::vector<std::size_t> pivots;  // pivot column of each reduced row
    std::size_t rank() const { return pivots.size(); }
};

Echelon echelon_form(const Mat& a);

std::size_t rank(const Mat& a);

struct LinearSolution {
    std::optional<Vec> particular;  // one solution of A x = b, if any
    std::vector<Vec> kernel;        // basis of the null space of A
};

/* Full solution set of A x = b. */
LinearSolution solve_linear(const Mat& a, const Vec& b);

std::vector<Vec> kernel_basis(const Mat& a);

/* Column-space basis of A (canonical, as the RREF of the transpose), plus a
 * projection Q with Q A = 0, rank Q = rows - rank A, i.e. coordinates on the
 * quotient F_p^rows / im A. */
struct ImageQuotient {
    std::vector<Vec> image;  // basis vectors of im A inside F_p^rows
    Mat projection;          // (rows - rank) x rows
};

ImageQuotient image_and_quotient(const Mat& a);

std::optional<Mat> inverse(const Mat& a);

/* Right inverse S with A S = I, for surjective A. */
std::optional<Mat> section_of(const Mat& a);

/* Solve A X = B columnwise; nullopt if any column is inconsistent. */
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);

}  // namespace linsite
