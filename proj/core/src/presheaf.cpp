#include "linsite/presheaf.hpp"

#include <random>

namespace linsite {

Presheaf::Presheaf(CatPtr cat, std::vector<std::size_t> dims,
                   std::vector<std::vector<std::vector<Mat>>> actions)
    : cat_(std::move(cat)), dim_(std::move(dims)), act_(std::move(actions)) {
    const std::size_t n = cat_->object_count();
    if (dim_.size() != n || act_.size() != n)
        throw std::invalid_argument("Presheaf: shape mismatch");
    for (std::size_t x = 0; x < n; ++x) {
        if (act_[x].size() != n) throw std::invalid_argument("Presheaf: shape mismatch");
        for (std::size_t y = 0; y < n; ++y) {
            if (act_[x][y].size() != cat_->hom_dim(x, y))
                throw std::invalid_argument("Presheaf: action count mismatch");
            for (const Mat& m : act_[x][y])
                if (m.rows() != dim_[x] || m.cols() != dim_[y] || m.modulus() != cat_->modulus())
                    throw std::invalid_argument("Presheaf: action shape mismatch");
        }
    }
}

Mat Presheaf::action(const Mor& a) const {
    Mat out(cat_->modulus(), dim_[a.src], dim_[a.dst]);
    for (std::size_t k = 0; k < a.coords.size(); ++k)
        if (a.coords[k] != 0) out = mat_add(out, mat_scale(a.coords[k], act_[a.src][a.dst][k]));
    return out;
}

bool Presheaf::operator==(const Presheaf& o) const {
    return cat_.get() == o.cat_.get() && dim_ == o.dim_ && act_ == o.act_;
}

PshPtr representable(const CatPtr& cat, std::size_t obj) {
    const std::size_t n = cat->object_count();
    std::vector<std::size_t> dims(n);
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x) dims[x] = cat->hom_dim(x, obj);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < cat->hom_dim(x, y); ++k)
                act[x][y].push_back(cat->precompose_matrix(cat->basis_mor(x, y, k), obj));
    return std::make_shared<Presheaf>(cat, std::move(dims), std::move(act));
}

PshPtr zero_presheaf(const CatPtr& cat) {
    const std::size_t n = cat->object_count();
    std::vector<std::size_t> dims(n, 0);
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            act[x][y].assign(cat->hom_dim(x, y), Mat(cat->modulus(), 0, 0));
    return std::make_shared<Presheaf>(cat, std::move(dims), std::move(act));
}

bool is_zero_presheaf(const Presheaf& f) {
    for (std::size_t x = 0; x < f.category()->object_count(); ++x)
        if (f.dim(x) != 0) return false;
    return true;
}

ValidationReport validate_presheaf(const Presheaf& f) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const LinearCategory& c = *f.category();
    for (std::size_t x = 0; x < c.object_count(); ++x)
        if (f.action(c.identity(x)) != Mat::identity(c.modulus(), f.dim(x)))
            fail("presheaf breaks identity at " + c.object_name(x));
    for (std::size_t w = 0; w < c.object_count(); ++w)
        for (std::size_t x = 0; x < c.object_count(); ++x)
            for (std::size_t y = 0; y < c.object_count(); ++y)
                for (std::size_t i = 0; i < c.hom_dim(w, x); ++i)
                    for (std::size_t j = 0; j < c.hom_dim(x, y); ++j) {
                        Mor b = c.basis_mor(w, x, i), a = c.basis_mor(x, y, j);
                        Mat lhs = f.action(c.compose(a, b));
                        Mat rhs = mat_mul(f.action(b), f.action(a));
                        if (lhs != rhs)
                            fail("presheaf breaks composition on (" + c.basis_name(x, y, j) + ", " +
                                 c.basis_name(w, x, i) + ")");
                    }
    return rep;
}

bool is_natural(const PresheafMorphism& m) {
    const LinearCategory& c = *m.src->category();
    for (std::size_t x = 0; x < c.object_count(); ++x)
        for (std::size_t y = 0; y < c.object_count(); ++y)
            for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
                const Mat& fa = m.src->action_basis(x, y, k);
                const Mat& ga = m.dst->action_basis(x, y, k);
                if (mat_mul(m.comp[x], fa) != mat_mul(ga, m.comp[y])) return false;
            }
    return true;
}

bool is_zero(const PresheafMorphism& m) {
    for (const Mat& c : m.comp)
        if (!c.is_zero()) return false;
    return true;
}

bool is_iso(const PresheafMorphism& m) {
    for (const Mat& c : m.comp) {
        if (c.rows() != c.cols()) return false;
        if (!inverse(c)) return false;
    }
    return true;
}

PresheafMorphism identity_morphism(const PshPtr& f) {
    std::vector<Mat> comp;
    for (std::size_t x = 0; x < f->category()->object_count(); ++x)
        comp.push_back(Mat::identity(f->category()->modulus(), f->dim(x)));
    return PresheafMorphism{f, f, std::move(comp)};
}

PresheafMorphism zero_morphism(const PshPtr& f, const PshPtr& g) {
    std::vector<Mat> comp;
    for (std::size_t x = 0; x < f->category()->object_count(); ++x)
        comp.push_back(Mat(f->category()->modulus(), g->dim(x), f->dim(x)));
    return PresheafMorphism{f, g, std::move(comp)};
}

PresheafMorphism psh_compose(const PresheafMorphism& b, const PresheafMorphism& a) {
    if (a.dst.get() != b.src.get() && !(*a.dst == *b.src))
        throw std::invalid_argument("psh_compose: boundary mismatch");
    std::vector<Mat> comp;
    for (std::size_t x = 0; x < a.comp.size(); ++x) comp.push_back(mat_mul(b.comp[x], a.comp[x]));
    return PresheafMorphism{a.src, b.dst, std::move(comp)};
}

PresheafMorphism psh_add(const PresheafMorphism& a, const PresheafMorphism& b) {
    std::vector<Mat> comp;
    for (std::size_t x = 0; x < a.comp.size(); ++x) comp.push_back(mat_add(a.comp[x], b.comp[x]));
    return PresheafMorphism{a.src, a.dst, std::move(comp)};
}

PresheafMorphism psh_sub(const PresheafMorphism& a, const PresheafMorphism& b) {
    std::vector<Mat> comp;
    for (std::size_t x = 0; x < a.comp.size(); ++x) comp.push_back(mat_sub(a.comp[x], b.comp[x]));
    return PresheafMorphism{a.src, a.dst, std::move(comp)};
}

PresheafMorphism psh_scale(Scalar c, const PresheafMorphism& a) {
    std::vector<Mat> comp;
    for (const Mat& m : a.comp) comp.push_back(mat_scale(c, m));
    return PresheafMorphism{a.src, a.dst, std::move(comp)};
}

PresheafMorphism psh_inverse(const PresheafMorphism& a) {
    std::vector<Mat> comp;
    for (const Mat& m : a.comp) {
        auto inv = inverse(m);
        if (!inv) throw std::invalid_argument("psh_inverse: component not invertible");
        comp.push_back(*inv);
    }
    return PresheafMorphism{a.dst, a.src, std::move(comp)};
}

PresheafMorphism representable_morphism(const CatPtr& cat, const Mor& b) {
    PshPtr src = representable(cat, b.src), dst = representable(cat, b.dst);
    std::vector<Mat> comp;
    for (std::size_t x = 0; x < cat->object_count(); ++x)
        comp.push_back(cat->postcompose_matrix(b, x));
    return PresheafMorphism{std::move(src), std::move(dst), std::move(comp)};
}

std::size_t raw_dim(const Presheaf& f, const Presheaf& g) {
    std::size_t n = 0;
    for (std::size_t x = 0; x < f.category()->object_count(); ++x) n += f.dim(x) * g.dim(x);
    return n;
}

Vec morphism_to_raw(const PresheafMorphism& m) {
    Vec raw;
    for (const Mat& c : m.comp)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t j = 0; j < c.cols(); ++j) raw.push_back(c(r, j));
    return raw;
}

PresheafMorphism raw_to_morphism(const PshPtr& f, const PshPtr& g, const Vec& raw) {
    std::vector<Mat> comp;
    std::size_t pos = 0;
    const Scalar p = f->category()->modulus();
    for (std::size_t x = 0; x < f->category()->object_count(); ++x) {
        Mat c(p, g->dim(x), f->dim(x));
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t j = 0; j < c.cols(); ++j) c(r, j) = raw[pos++];
        comp.push_back(std::move(c));
    }
    if (pos != raw.size()) throw std::invalid_argument("raw_to_morphism: size mismatch");
    return PresheafMorphism{f, g, std::move(comp)};
}

std::vector<PresheafMorphism> hom_presheaves(const PshPtr& f, const PshPtr& g) {
    if (f->category().get() != g->category().get())
        throw std::invalid_argument("hom_presheaves: different categories");
    const LinearCategory& c = *f->category();
    const Scalar p = c.modulus();
    const std::size_t nvars = raw_dim(*f, *g);

    /* variable offset of component x */
    std::vector<std::size_t> offset(c.object_count() + 1, 0);
    for (std::size_t x = 0; x < c.object_count(); ++x)
        offset[x + 1] = offset[x] + f->dim(x) * g->dim(x);

    std::vector<Vec> rows;
    for (std::size_t x = 0; x < c.object_count(); ++x)
        for (std::size_t y = 0; y < c.object_count(); ++y)
            for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
                const Mat& fa = f->action_basis(x, y, k);  // F(y) -> F(x)
                const Mat& ga = g->action_basis(x, y, k);
                /* phi_x F(a) = G(a) phi_y, entry (r, col) */
                for (std::size_t r = 0; r < g->dim(x); ++r)
                    for (std::size_t col = 0; col < f->dim(y); ++col) {
                        Vec eq(nvars, 0);
                        for (std::size_t s = 0; s < f->dim(x); ++s)
                            eq[offset[x] + r * f->dim(x) + s] =
                                addm(eq[offset[x] + r * f->dim(x) + s], fa(s, col), p);
                        for (std::size_t t = 0; t < g->dim(y); ++t)
                            eq[offset[y] + t * f->dim(y) + col] =
                                subm(eq[offset[y] + t * f->dim(y) + col], ga(r, t), p);
                        rows.push_back(std::move(eq));
                    }
            }
    Mat sys = rows.empty() ? Mat(p, 0, nvars) : Mat::from_rows(p, rows, nvars);
    std::vector<PresheafMorphism> basis;
    for (const Vec& k : kernel_basis(sys)) basis.push_back(raw_to_morphism(f, g, k));
    return basis;
}

std::optional<Vec> coords_in_basis(const std::vector<PresheafMorphism>& basis,
                                   const PresheafMorphism& m) {
    Vec target = morphism_to_raw(m);
    const Scalar p = m.src->category()->modulus();
    Mat sys(p, target.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Vec col = morphism_to_raw(basis[j]);
        for (std::size_t i = 0; i < col.size(); ++i) sys(i, j) = col[i];
    }
    LinearSolution s = solve_linear(sys, target);
    if (!s.particular) return std::nullopt;
    return *s.particular;
}

namespace {

/* Shared engine: psi = sum c_k B_k over the Nat basis of P -> Q, subject to
 * the linear condition obtained by composing each B_k as directed. */
std::optional<Factorization> solve_factorization(const PshPtr& p, const PshPtr& q,
                                                 const std::vector<PresheafMorphism>& images,
                                                 const std::vector<PresheafMorphism>& basis,
                                                 const PresheafMorphism& rhs) {
    const Scalar mod = p->category()->modulus();
    Vec target = morphism_to_raw(rhs);
    Mat sys(mod, target.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        Vec col = morphism_to_raw(images[j]);
        for (std::size_t i = 0; i < col.size(); ++i) sys(i, j) = col[i];
    }
    LinearSolution s = solve_linear(sys, target);
    if (!s.particular) return std::nullopt;
    PresheafMorphism psi = zero_morphism(p, q);
    for (std::size_t j = 0; j < basis.size(); ++j)
        if ((*s.particular)[j] != 0)
            psi = psh_add(psi, psh_scale((*s.particular)[j], basis[j]));
    return Factorization{std::move(psi), s.kernel.empty()};
}

}  // namespace

std::optional<Factorization> factor_through(const PresheafMorphism& pre,
                                            const PresheafMorphism& post) {
    if (pre.src.get() != post.src.get() && !(*pre.src == *post.src))
        throw std::invalid_argument("factor_through: sources differ");
    auto basis = hom_presheaves(pre.dst, post.dst);
    std::vector<PresheafMorphism> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(psh_compose(b, pre));
    return solve_factorization(pre.dst, post.dst, images, basis, post);
}

std::optional<Factorization> factor_left(const PresheafMorphism& through,
                                         const PresheafMorphism& target) {
    if (through.dst.get() != target.dst.get() && !(*through.dst == *target.dst))
        throw std::invalid_argument("factor_left: targets differ");
    auto basis = hom_presheaves(target.src, through.src);
    std::vector<PresheafMorphism> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(psh_compose(through, b));
    return solve_factorization(target.src, through.src, images, basis, target);
}

KernelData kernel_of(const PresheafMorphism& m) {
    const LinearCategory& c = *m.src->category();
    const Scalar p = c.modulus();
    const std::size_t n = c.object_count();
    std::vector<Subspace> ker(n);
    for (std::size_t x = 0; x < n; ++x)
        ker[x] = Subspace::span(p, m.src->dim(x), kernel_basis(m.comp[x]));
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = ker[x].dim();
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
                const Mat& fa = m.src->action_basis(x, y, k);
                Mat a(p, dims[x], dims[y]);
                for (std::size_t j = 0; j < dims[y]; ++j) {
                    Vec img = mat_apply(fa, ker[y].basis_vector(j));
                    auto coords = ker[x].coords_of(img);
                    if (!coords) throw std::logic_error("kernel_of: action escapes kernel");
                    for (std::size_t r = 0; r < dims[x]; ++r) a(r, j) = (*coords)[r];
                }
                act[x][y].push_back(std::move(a));
            }
    auto obj = std::make_shared<Presheaf>(m.src->category(), std::move(dims), std::move(act));
    std::vector<Mat> incl;
    for (std::size_t x = 0; x < n; ++x) {
        Mat i(p, m.src->dim(x), ker[x].dim());
        for (std::size_t j = 0; j < ker[x].dim(); ++j) {
            Vec b = ker[x].basis_vector(j);
            for (std::size_t r = 0; r < b.size(); ++r) i(r, j) = b[r];
        }
        incl.push_back(std::move(i));
    }
    return KernelData{obj, PresheafMorphism{obj, m.src, std::move(incl)}};
}

CokernelData cokernel_of(const PresheafMorphism& m) {
    const LinearCategory& c = *m.dst->category();
    const Scalar p = c.modulus();
    const std::size_t n = c.object_count();
    std::vector<Mat> proj(n), sect(n);
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) {
        ImageQuotient iq = image_and_quotient(m.comp[x]);
        proj[x] = iq.projection;
        dims[x] = iq.projection.rows();
        auto s = section_of(proj[x]);
        if (!s) throw std::logic_error("cokernel_of: projection has no section");
        sect[x] = *s;
    }
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < c.hom_dim(x, y); ++k)
                act[x][y].push_back(
                    mat_mul(proj[x], mat_mul(m.dst->action_basis(x, y, k), sect[y])));
    auto obj = std::make_shared<Presheaf>(m.dst->category(), std::move(dims), std::move(act));
    return CokernelData{obj, PresheafMorphism{m.dst, obj, std::move(proj)}, std::move(sect)};
}

SumData direct_sum(const PshPtr& f, const PshPtr& g) {
    if (f->category().get() != g->category().get())
        throw std::invalid_argument("direct_sum: different categories");
    const LinearCategory& c = *f->category();
    const Scalar p = c.modulus();
    const std::size_t n = c.object_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = f->dim(x) + g->dim(x);
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < c.hom_dim(x, y); ++k) {
                const Mat& a = f->action_basis(x, y, k);
                const Mat& b = g->action_basis(x, y, k);
                Mat s(p, dims[x], dims[y]);
                for (std::size_t r = 0; r < a.rows(); ++r)
                    for (std::size_t j = 0; j < a.cols(); ++j) s(r, j) = a(r, j);
                for (std::size_t r = 0; r < b.rows(); ++r)
                    for (std::size_t j = 0; j < b.cols(); ++j)
                        s(f->dim(x) + r, f->dim(y) + j) = b(r, j);
                act[x][y].push_back(std::move(s));
            }
    auto obj = std::make_shared<Presheaf>(f->category(), dims, std::move(act));
    std::vector<Mat> il(n), ir(n), pl(n), pr(n);
    for (std::size_t x = 0; x < n; ++x) {
        il[x] = Mat(p, dims[x], f->dim(x));
        ir[x] = Mat(p, dims[x], g->dim(x));
        pl[x] = Mat(p, f->dim(x), dims[x]);
        pr[x] = Mat(p, g->dim(x), dims[x]);
        for (std::size_t r = 0; r < f->dim(x); ++r) il[x](r, r) = pl[x](r, r) = 1 % p;
        for (std::size_t r = 0; r < g->dim(x); ++r)
            ir[x](f->dim(x) + r, r) = pr[x](r, f->dim(x) + r) = 1 % p;
    }
    return SumData{obj, PresheafMorphism{f, obj, std::move(il)},
                   PresheafMorphism{g, obj, std::move(ir)},
                   PresheafMorphism{obj, f, std::move(pl)},
                   PresheafMorphism{obj, g, std::move(pr)}};
}

std::optional<PresheafMorphism> find_isomorphism(const PshPtr& f, const PshPtr& g,
                                                 std::uint64_t seed) {
    const LinearCategory& c = *f->category();
    const Scalar p = c.modulus();
    for (std::size_t x = 0; x < c.object_count(); ++x)
        if (f->dim(x) != g->dim(x)) return std::nullopt;
    if (is_zero_presheaf(*f)) return zero_morphism(f, g);

    std::vector<PresheafMorphism> basis = hom_presheaves(f, g);
    if (basis.empty()) return std::nullopt;
    auto combine = [&](const Vec& coeffs) {
        PresheafMorphism m = zero_morphism(f, g);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coeffs[i] != 0) m = psh_add(m, psh_scale(coeffs[i], basis[i]));
        return m;
    };
    for (const PresheafMorphism& b : basis)
        if (is_iso(b)) return b;
    std::mt19937_64 rng(seed ^ 0x15ea5eed);
    for (int trial = 0; trial < 64; ++trial) {
        Vec coeffs(basis.size());
        for (auto& x : coeffs) x = static_cast<Scalar>(rng() % p);
        PresheafMorphism m = combine(coeffs);
        if (is_iso(m)) return m;
    }
    double total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
    if (total <= 65536.0) {
        for (const Vec& coeffs : all_vectors(p, basis.size())) {
            PresheafMorphism m = combine(coeffs);
            if (is_iso(m)) return m;
        }
        return std::nullopt;
    }
    return std::nullopt;  // search space too large; treated as not found
}

PshPtr random_presheaf(const CatPtr& cat, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const Scalar p = cat->modulus();
    std::size_t n = cat->object_count();
    if (n == 0) return zero_presheaf(cat);

    std::size_t pieces = 1 + rng() % 3;
    PshPtr m = representable(cat, rng() % n);
    for (std::size_t i = 1; i < pieces; ++i)
        m = direct_sum(m, representable(cat, rng() % n)).object;

    auto basis = hom_presheaves(m, m);
    PresheafMorphism endo = zero_morphism(m, m);
    for (const auto& b : basis) {
        Scalar c = static_cast<Scalar>(rng() % p);
        if (c != 0) endo = psh_add(endo, psh_scale(c, b));
    }
    switch (rng() % 3) {
        case 0: return kernel_of(endo).object;
        case 1: return cokernel_of(endo).object;
        default: return m;
    }
}

}  // namespace linsite
