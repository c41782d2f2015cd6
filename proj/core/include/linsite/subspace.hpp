#pragma once

#include <optional>

#include "linsite/solve.hpp"

namespace linsite {

/* Subspace of F_p^n in canonical form: the RREF basis of its row space.
 * Canonicity makes equality and ordering structural. */
class Subspace {
  public:
    Subspace() : p_(2), n_(0), basis_(2, 0, 0) {}
    Subspace(Scalar p, std::size_t n) : p_(p), n_(n), basis_(p, 0, n) {}

    static Subspace span(Scalar p, std::size_t n, const std::vector<Vec>& vectors);
    static Subspace full(Scalar p, std::size_t n);

    Scalar modulus() const { return p_; }
    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /* Coordinates of v in the canonical basis, if v lies in the subspace. */
    std::optional<Vec> coords_of(const Vec& v) const;
    /* Linear combination of basis vectors with the given coordinates. */
    Vec element(const Vec& coords) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace&) const = default;
    /* total order, for canonical sorting of sieve/cover collections */
    std::strong_ordering operator<=>(const Subspace& other) const;

  private:
    Scalar p_;
    std::size_t n_;
    Mat basis_;
};

/* All vectors of F_p^n in lexicographic order.  Guarded against blowup. */
std::vector<Vec> all_vectors(Scalar p, std::size_t n);

/* All subspaces of F_p^n. */
std::vector<Subspace> all_subspaces(Scalar p, std::size_t n);

}  // namespace linsite
