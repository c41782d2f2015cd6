#include "linsite/sieve.hpp"

#include "linsite/functor.hpp"

#include <algorithm>
#include <sstream>

namespace linsite {

Sieve::Sieve(CatPtr cat, std::size_t base, std::vector<Subspace> slices)
    : cat_(std::move(cat)), base_(base), slices_(std::move(slices)) {
    if (slices_.size() != cat_->object_count())
        throw std::invalid_argument("Sieve: slice count mismatch");
    for (std::size_t x = 0; x < slices_.size(); ++x)
        if (slices_[x].ambient() != cat_->hom_dim(x, base_))
            throw std::invalid_argument("Sieve: slice ambient mismatch");
}

bool Sieve::contains(const Mor& r) const {
    if (r.dst != base_) return false;
    return slices_[r.src].contains(r.coords);
}

std::strong_ordering Sieve::operator<=>(const Sieve& o) const {
    if (auto c = base_ <=> o.base_; c != 0) return c;
    for (std::size_t x = 0; x < slices_.size(); ++x)
        if (auto c = slices_[x] <=> o.slices_[x]; c != 0) return c;
    return std::strong_ordering::equal;
}

Sieve maximal_sieve(const CatPtr& cat, std::size_t base) {
    std::vector<Subspace> slices;
    for (std::size_t x = 0; x < cat->object_count(); ++x)
        slices.push_back(Subspace::full(cat->modulus(), cat->hom_dim(x, base)));
    return Sieve(cat, base, std::move(slices));
}

Sieve empty_sieve(const CatPtr& cat, std::size_t base) {
    std::vector<Subspace> slices;
    for (std::size_t x = 0; x < cat->object_count(); ++x)
        slices.push_back(Subspace(cat->modulus(), cat->hom_dim(x, base)));
    return Sieve(cat, base, std::move(slices));
}

Sieve sieve_generated(const CatPtr& cat, std::size_t base, const std::vector<Mor>& family) {
    const std::size_t n = cat->object_count();
    std::vector<std::vector<Vec>> gens(n);
    for (const Mor& m : family) {
        if (m.dst != base) throw std::invalid_argument("sieve_generated: codomain mismatch");
        gens[m.src].push_back(m.coords);
    }
    std::vector<Subspace> slices(n);
    for (std::size_t x = 0; x < n; ++x)
        slices[x] = Subspace::span(cat->modulus(), cat->hom_dim(x, base), gens[x]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t i = 0; i < slices[x].dim(); ++i) {
                Mor r = cat->make_mor(x, base, slices[x].basis_vector(i));
                for (std::size_t y = 0; y < n; ++y) {
                    for (std::size_t k = 0; k < cat->hom_dim(y, x); ++k) {
                        Mor rb = cat->compose(r, cat->basis_mor(y, x, k));
                        if (!slices[y].contains(rb.coords)) {
                            slices[y] = slices[y].sum(
                                Subspace::span(cat->modulus(), rb.coords.size(), {rb.coords}));
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    return Sieve(cat, base, std::move(slices));
}

Sieve pullback_sieve(const Sieve& r, const Mor& a) {
    const CatPtr& cat = r.category();
    if (a.dst != r.base()) throw std::invalid_argument("pullback_sieve: codomain mismatch");
    const Scalar p = cat->modulus();
    const std::size_t n = cat->object_count();
    std::vector<Subspace> slices(n);
    for (std::size_t x = 0; x < n; ++x) {
        /* b in hom(x, a.src) with a . b in R(x): kernel of [post_a | -basis(R(x))],
         * first block of coordinates */
        Mat post = cat->postcompose_matrix(a, x);  // hom(x, a.src) -> hom(x, base)
        const Subspace& rx = r.slice(x);
        Mat neg(p, post.rows(), rx.dim());
        for (std::size_t j = 0; j < rx.dim(); ++j) {
            Vec b = rx.basis_vector(j);
            for (std::size_t i = 0; i < b.size(); ++i) neg(i, j) = negm(b[i], p);
        }
        std::vector<Vec> gens;
        for (const Vec& k : kernel_basis(hstack(post, neg)))
            gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(post.cols()));
        slices[x] = Subspace::span(p, post.cols(), gens);
    }
    return Sieve(cat, a.src, std::move(slices));
}

std::vector<Mor> generators(const Sieve& r) {
    std::vector<Mor> out;
    for (std::size_t x = 0; x < r.category()->object_count(); ++x)
        for (std::size_t i = 0; i < r.slice(x).dim(); ++i)
            out.push_back(r.category()->make_mor(x, r.base(), r.slice(x).basis_vector(i)));
    return out;
}

Sieve image_sieve(const LinearFunctor& f, const Sieve& r) {
    std::vector<Mor> family;
    for (const Mor& g : generators(r)) family.push_back(f.map(g));
    return sieve_generated(f.target(), f.map_object(r.base()), family);
}

Sieve intersect(const Sieve& r, const Sieve& s) {
    if (r.base() != s.base()) throw std::invalid_argument("intersect: base mismatch");
    std::vector<Subspace> slices;
    for (std::size_t x = 0; x < r.category()->object_count(); ++x)
        slices.push_back(r.slice(x).intersect(s.slice(x)));
    return Sieve(r.category(), r.base(), std::move(slices));
}

bool subsieve(const Sieve& r, const Sieve& s) {
    if (r.base() != s.base()) return false;
    for (std::size_t x = 0; x < r.category()->object_count(); ++x)
        if (!s.slice(x).contains(r.slice(x))) return false;
    return true;
}

bool is_closed_sieve(const Sieve& r) {
    /* closure under basis precomposition suffices, by bilinearity */
    const CatPtr& cat = r.category();
    for (std::size_t x = 0; x < cat->object_count(); ++x)
        for (std::size_t i = 0; i < r.slice(x).dim(); ++i) {
            Mor m = cat->make_mor(x, r.base(), r.slice(x).basis_vector(i));
            for (std::size_t y = 0; y < cat->object_count(); ++y)
                for (std::size_t k = 0; k < cat->hom_dim(y, x); ++k)
                    if (!r.contains(cat->compose(m, cat->basis_mor(y, x, k)))) return false;
        }
    return true;
}

SievePresheaf sieve_presheaf(const Sieve& r) {
    const CatPtr& cat = r.category();
    const Scalar p = cat->modulus();
    const std::size_t n = cat->object_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = r.slice(x).dim();
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < cat->hom_dim(x, y); ++k) {
                Mat pre = cat->precompose_matrix(cat->basis_mor(x, y, k), r.base());
                Mat a(p, dims[x], dims[y]);
                for (std::size_t j = 0; j < dims[y]; ++j) {
                    auto coords = r.slice(x).coords_of(mat_apply(pre, r.slice(y).basis_vector(j)));
                    if (!coords) throw std::logic_error("sieve_presheaf: sieve not closed");
                    for (std::size_t i = 0; i < dims[x]; ++i) a(i, j) = (*coords)[i];
                }
                act[x][y].push_back(std::move(a));
            }
    auto obj = std::make_shared<Presheaf>(cat, std::move(dims), std::move(act));
    PshPtr h = representable(cat, r.base());
    std::vector<Mat> incl;
    for (std::size_t x = 0; x < n; ++x) {
        Mat i(p, h->dim(x), r.slice(x).dim());
        for (std::size_t j = 0; j < r.slice(x).dim(); ++j) {
            Vec b = r.slice(x).basis_vector(j);
            for (std::size_t t = 0; t < b.size(); ++t) i(t, j) = b[t];
        }
        incl.push_back(std::move(i));
    }
    return SievePresheaf{obj, PresheafMorphism{obj, h, std::move(incl)}};
}

std::vector<Sieve> all_sieves(const CatPtr& cat, std::size_t base) {
    const std::size_t n = cat->object_count();
    const Scalar p = cat->modulus();
    std::vector<std::vector<Subspace>> choices(n);
    for (std::size_t x = 0; x < n; ++x) choices[x] = all_subspaces(p, cat->hom_dim(x, base));

    /* pairwise closure between already assigned slices */
    auto compatible = [&](const std::vector<Subspace>& partial, std::size_t upto) {
        for (std::size_t x = 0; x <= upto; ++x)
            for (std::size_t i = 0; i < partial[x].dim(); ++i) {
                Mor m = cat->make_mor(x, base, partial[x].basis_vector(i));
                for (std::size_t y = 0; y <= upto; ++y)
                    for (std::size_t k = 0; k < cat->hom_dim(y, x); ++k) {
                        Mor c = cat->compose(m, cat->basis_mor(y, x, k));
                        if (!partial[y].contains(c.coords)) return false;
                    }
            }
        return true;
    };

    std::vector<Sieve> out;
    std::vector<Subspace> partial(n, Subspace(p, 0));
    auto rec = [&](auto&& self, std::size_t x) -> void {
        if (x == n) {
            out.emplace_back(cat, base, partial);
            return;
        }
        for (const Subspace& s : choices[x]) {
            partial[x] = s;
            if (compatible(partial, x)) self(self, x + 1);
        }
        partial[x] = Subspace(p, cat->hom_dim(x, base));
    };
    if (n > 0) rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string describe(const Sieve& r) {
    std::ostringstream os;
    os << "sieve on " << r.category()->object_name(r.base()) << " [";
    for (std::size_t x = 0; x < r.category()->object_count(); ++x) {
        if (x) os << "; ";
        os << r.category()->object_name(x) << ": ";
        if (r.slice(x).dim() == 0) {
            os << "0";
            continue;
        }
        for (std::size_t i = 0; i < r.slice(x).dim(); ++i) {
            if (i) os << ", ";
            os << describe(*r.category(), r.category()->make_mor(x, r.base(), r.slice(x).basis_vector(i)));
        }
    }
    os << "]";
    return os.str();
}

}  // namespace linsite
