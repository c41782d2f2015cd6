#include "linsite/subspace.hpp"

#include <map>
#include <set>

namespace linsite {

Subspace Subspace::span(Scalar p, std::size_t n, const std::vector<Vec>& vectors) {
    Subspace s(p, n);
    if (vectors.empty()) return s;
    Echelon e = echelon_form(Mat::from_rows(p, vectors, n));
    s.basis_ = e.reduced;
    return s;
}

Subspace Subspace::full(Scalar p, std::size_t n) {
    Subspace s(p, n);
    s.basis_ = Mat::identity(p, n);
    return s;
}

bool Subspace::contains(const Vec& v) const { return coords_of(v).has_value(); }

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("Subspace::coords_of: size mismatch");
    /* RREF basis: the coefficient of basis row i is just v at its pivot column
     * (other rows vanish there); subtract and check the residual is zero. */
    Vec rem = v;
    for (Scalar& x : rem) x %= p_;
    Vec coords(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t piv = 0;
        while (piv < n_ && basis_(i, piv) == 0) ++piv;
        Scalar c = rem[piv];
        coords[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < n_; ++j) rem[j] = subm(rem[j], mulm(c, basis_(i, j), p_), p_);
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return coords;
}

Vec Subspace::element(const Vec& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("Subspace::element: size mismatch");
    Vec v(n_, 0);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n_; ++j)
            v[j] = addm(v[j], mulm(coords[i] % p_, basis_(i, j), p_), p_);
    return v;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (p_ != other.p_ || n_ != other.n_) throw std::invalid_argument("Subspace::sum: mismatch");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
    for (std::size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
    return span(p_, n_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (p_ != other.p_ || n_ != other.n_)
        throw std::invalid_argument("Subspace::intersect: mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(p_, n_);
    /* x = u^T B1 = v^T B2  <=>  (u, -v) in ker [B1^T | B2^T]-ish stacked. */
    Mat stacked = hstack(transpose(basis_), transpose(other.basis_));
    std::vector<Vec> gens;
    for (const Vec& k : kernel_basis(stacked)) {
        Vec u(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(dim()));
        gens.push_back(element(u));
    }
    return span(p_, n_, gens);
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = dim() <=> other.dim(); c != 0) return c;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (auto c = basis_(i, j) <=> other.basis_(i, j); c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<Vec> all_vectors(Scalar p, std::size_t n) {
    double count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= p;
    if (count > 65536.0) throw std::invalid_argument("all_vectors: space too large to enumerate");
    std::vector<Vec> out;
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n) {
            v[i] = (v[i] + 1) % p;
            if (v[i] != 0) break;
            ++i;
        }
        if (i == n) break;
    }
    if (n == 0) out.resize(1);
    return out;
}

std::vector<Subspace> all_subspaces(Scalar p, std::size_t n) {
    std::vector<Vec> vectors = all_vectors(p, n);
    std::set<Subspace> seen;
    std::vector<Subspace> frontier{Subspace(p, n)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const Subspace& s : frontier) {
            for (const Vec& v : vectors) {
                if (vec_is_zero(v) || s.contains(v)) continue;
                std::vector<Vec> rows;
                for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_vector(i));
                rows.push_back(v);
                Subspace bigger = Subspace::span(p, n, rows);
                if (seen.insert(bigger).second) next.push_back(bigger);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Subspace>(seen.begin(), seen.end());
}

}  // namespace linsite
