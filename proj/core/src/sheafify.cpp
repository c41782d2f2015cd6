#include "linsite/sheafify.hpp"

namespace linsite {

namespace {

/* For a sieve R on A and each basis section s of F(A), the induced matching
 * family R~ -> F: component at y sends a slice basis vector g to F(g)(s). */
std::vector<PresheafMorphism> restriction_family(const PshPtr& f, const SievePresheaf& sp,
                                                 const Sieve& r) {
    const CatPtr& cat = f->category();
    const Scalar p = cat->modulus();
    std::size_t n = cat->object_count();
    std::size_t a = r.base();
    std::size_t fa = f->dim(a);

    std::vector<std::vector<Mat>> comps(fa);
    for (std::size_t i = 0; i < fa; ++i) comps[i].reserve(n);
    for (std::size_t y = 0; y < n; ++y) {
        std::size_t sd = r.slice(y).dim();
        std::vector<Mat> cols(fa, Mat(p, f->dim(y), sd));
        for (std::size_t j = 0; j < sd; ++j) {
            Mor g = cat->make_mor(y, a, r.slice(y).basis_vector(j));
            Mat fg = f->action(g);  // F(A) -> F(y)
            for (std::size_t i = 0; i < fa; ++i)
                for (std::size_t row = 0; row < fg.rows(); ++row) cols[i](row, j) = fg(row, i);
        }
        for (std::size_t i = 0; i < fa; ++i) comps[i].push_back(std::move(cols[i]));
    }
    std::vector<PresheafMorphism> out;
    out.reserve(fa);
    for (std::size_t i = 0; i < fa; ++i)
        out.push_back(PresheafMorphism{sp.object, f, std::move(comps[i])});
    return out;
}

/* inclusion R~ -> S~ for R inside S, in slice coordinates */
PresheafMorphism sieve_inclusion(const SievePresheaf& from, const Sieve& r,
                                 const SievePresheaf& to, const Sieve& s) {
    const CatPtr& cat = r.category();
    const Scalar p = cat->modulus();
    std::size_t n = cat->object_count();
    std::vector<Mat> comp;
    comp.reserve(n);
    for (std::size_t y = 0; y < n; ++y) {
        Mat m(p, s.slice(y).dim(), r.slice(y).dim());
        for (std::size_t j = 0; j < r.slice(y).dim(); ++j) {
            auto c = s.slice(y).coords_of(r.slice(y).basis_vector(j));
            if (!c) throw std::logic_error("sieve_inclusion: not a subsieve");
            for (std::size_t i = 0; i < c->size(); ++i) m(i, j) = (*c)[i];
        }
        comp.push_back(std::move(m));
    }
    return PresheafMorphism{from.object, to.object, std::move(comp)};
}

struct Summand {
    Sieve cover;
    SievePresheaf sp;
    std::vector<PresheafMorphism> nat;  // basis of Nat(cover~, F)
    std::size_t offset;
};

struct PlusObjectData {
    std::vector<Summand> summands;
    std::size_t vdim = 0;
    Mat projection;  // V_A -> (F+)(A)
    Mat section;     // right inverse
};

}  // namespace

std::optional<SheafViolation> find_sheaf_violation(const SitePtr& site, const PshPtr& f) {
    if (site->cat.get() != f->category().get())
        throw std::invalid_argument("find_sheaf_violation: presheaf lives elsewhere");
    const Scalar p = site->cat->modulus();
    for (std::size_t a = 0; a < site->cat->object_count(); ++a) {
        for (const Sieve& r : site->topology.covers(a)) {
            auto sp = sieve_presheaf(r);
            auto nat = hom_presheaves(sp.object, f);
            auto fam = restriction_family(f, sp, r);
            Mat rho(p, raw_dim(*sp.object, *f), fam.size());
            for (std::size_t j = 0; j < fam.size(); ++j) {
                Vec col = morphism_to_raw(fam[j]);
                for (std::size_t i = 0; i < col.size(); ++i) rho(i, j) = col[i];
            }
            std::size_t rk = rank(rho);
            if (rk != f->dim(a) || rk != nat.size())
                return SheafViolation{a, r, f->dim(a), nat.size(), rk};
        }
    }
    return std::nullopt;
}

bool is_sheaf(const SitePtr& site, const PshPtr& f) {
    return !find_sheaf_violation(site, f).has_value();
}

PlusResult plus_construction(const SitePtr& site, const PshPtr& f) {
    const CatPtr& cat = f->category();
    if (site->cat.get() != cat.get())
        throw std::invalid_argument("plus_construction: presheaf lives elsewhere");
    const Scalar p = cat->modulus();
    std::size_t n = cat->object_count();

    std::vector<PlusObjectData> data(n);
    for (std::size_t a = 0; a < n; ++a) {
        PlusObjectData& d = data[a];
        for (const Sieve& r : site->topology.covers(a)) {
            auto sp = sieve_presheaf(r);
            auto nat = hom_presheaves(sp.object, f);
            std::size_t off = d.vdim;
            d.vdim += nat.size();
            d.summands.push_back(Summand{r, std::move(sp), std::move(nat), off});
        }
        // restriction relations over every nested pair of covers
        std::vector<Vec> rels;
        for (const Summand& big : d.summands)
            for (const Summand& small : d.summands) {
                if (&big == &small || !subsieve(small.cover, big.cover)) continue;
                auto inc = sieve_inclusion(small.sp, small.cover, big.sp, big.cover);
                for (std::size_t k = 0; k < big.nat.size(); ++k) {
                    auto restricted = psh_compose(big.nat[k], inc);
                    auto coords = coords_in_basis(small.nat, restricted);
                    if (!coords) throw std::logic_error("plus: restriction left the Nat space");
                    Vec rel(d.vdim, 0);
                    rel[big.offset + k] = 1;
                    for (std::size_t i = 0; i < coords->size(); ++i)
                        rel[small.offset + i] = subm(rel[small.offset + i], (*coords)[i], p);
                    rels.push_back(std::move(rel));
                }
            }
        Mat relmat(p, d.vdim, rels.size());
        for (std::size_t j = 0; j < rels.size(); ++j)
            for (std::size_t i = 0; i < d.vdim; ++i) relmat(i, j) = rels[j][i];
        d.projection = image_and_quotient(relmat).projection;
        auto sec = section_of(d.projection);
        if (!sec) throw std::logic_error("plus: projection has no section");
        d.section = *sec;
    }

    /* transport of a class along a: X -> A, summand by summand */
    auto raw_action = [&](const Mor& mor) {
        std::size_t x = mor.src, a = mor.dst;
        Mat raw(p, data[x].vdim, data[a].vdim);
        for (const Summand& s : data[a].summands) {
            Sieve pulled = pullback_sieve(s.cover, mor);
            const Summand* dst = nullptr;
            for (const Summand& t : data[x].summands)
                if (t.cover == pulled) dst = &t;
            if (!dst) throw std::logic_error("plus: pullback of a cover is not covering");
            for (std::size_t m = 0; m < s.nat.size(); ++m) {
                // (a* xi) at y = xi_y . (coords of a.g in the big slice)
                std::vector<Mat> comp;
                comp.reserve(n);
                for (std::size_t y = 0; y < n; ++y) {
                    Mat t(p, s.cover.slice(y).dim(), pulled.slice(y).dim());
                    for (std::size_t j = 0; j < pulled.slice(y).dim(); ++j) {
                        Mor g = cat->make_mor(y, x, pulled.slice(y).basis_vector(j));
                        auto c = s.cover.slice(y).coords_of(cat->compose(mor, g).coords);
                        if (!c) throw std::logic_error("plus: pullback transport escaped");
                        for (std::size_t i = 0; i < c->size(); ++i) t(i, j) = (*c)[i];
                    }
                    comp.push_back(mat_mul(s.nat[m].comp[y], t));
                }
                PresheafMorphism moved{dst->sp.object, f, std::move(comp)};
                auto coords = coords_in_basis(dst->nat, moved);
                if (!coords) throw std::logic_error("plus: transport left the Nat space");
                for (std::size_t i = 0; i < coords->size(); ++i)
                    raw(dst->offset + i, s.offset + m) = (*coords)[i];
            }
        }
        return raw;
    };

    std::vector<std::size_t> dims(n);
    for (std::size_t a = 0; a < n; ++a) dims[a] = data[a].projection.rows();
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            act[x][y].reserve(cat->hom_dim(x, y));
            for (std::size_t k = 0; k < cat->hom_dim(x, y); ++k)
                act[x][y].push_back(mat_mul(
                    data[x].projection,
                    mat_mul(raw_action(cat->basis_mor(x, y, k)), data[y].section)));
        }
    auto plus = std::make_shared<Presheaf>(cat, std::move(dims), std::move(act));

    // unit: sections land in the maximal-sieve summand
    std::vector<Mat> unit_comp;
    unit_comp.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Summand* mx = nullptr;
        for (const Summand& s : data[a].summands)
            if (s.cover == maximal_sieve(cat, a)) mx = &s;
        if (!mx) throw std::logic_error("plus: maximal sieve is not covering");
        Mat into(p, data[a].vdim, f->dim(a));
        auto fam = restriction_family(f, mx->sp, mx->cover);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            auto coords = coords_in_basis(mx->nat, fam[i]);
            if (!coords) throw std::logic_error("plus: unit left the Nat space");
            for (std::size_t k = 0; k < coords->size(); ++k)
                into(mx->offset + k, i) = (*coords)[k];
        }
        unit_comp.push_back(mat_mul(data[a].projection, into));
    }
    return PlusResult{plus, PresheafMorphism{f, plus, std::move(unit_comp)}};
}

Sheafified sheafify(const SitePtr& site, const PshPtr& f) {
    PlusResult once = plus_construction(site, f);
    PlusResult twice = plus_construction(site, once.object);
    return Sheafified{twice.object, psh_compose(twice.unit, once.unit)};
}

bool is_locally_zero(const SitePtr& site, const PshPtr& f) {
    if (is_zero_presheaf(*f)) return true;
    return is_zero_presheaf(*plus_construction(site, f).object);
}

bool is_local_iso(const SitePtr& site, const PresheafMorphism& m) {
    return is_locally_zero(site, kernel_of(m).object) &&
           is_locally_zero(site, cokernel_of(m).object);
}

bool is_local_epi(const SitePtr& site, const PresheafMorphism& m) {
    return is_locally_zero(site, cokernel_of(m).object);
}

PresheafMorphism sheafify_map(const SitePtr& site, const Sheafified& sf, const Sheafified& sg,
                              const PresheafMorphism& phi) {
    (void)site;
    auto sol = factor_through(sf.unit, psh_compose(sg.unit, phi));
    if (!sol || !sol->unique)
        throw std::logic_error("sheafify_map: universal property failed to pin the map");
    return sol->map;
}

bool is_subcanonical(const SitePtr& site) {
    for (std::size_t a = 0; a < site->cat->object_count(); ++a)
        if (!is_sheaf(site, representable(site->cat, a))) return false;
    return true;
}

}  // namespace linsite
