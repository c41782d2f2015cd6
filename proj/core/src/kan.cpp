#include "linsite/kan.hpp"

namespace linsite {

PshPtr restrict_along(const FunPtr& f, const PshPtr& g) {
    if (g->category().get() != f->target().get())
        throw std::invalid_argument("restrict_along: presheaf not on the target");
    const CatPtr& a = f->source();
    std::size_t n = a->object_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t x = 0; x < n; ++x) dims[x] = g->dim(f->map_object(x));
    std::vector<std::vector<std::vector<Mat>>> act(n, std::vector<std::vector<Mat>>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            act[x][y].reserve(a->hom_dim(x, y));
            for (std::size_t k = 0; k < a->hom_dim(x, y); ++k)
                act[x][y].push_back(g->action(f->map(a->basis_mor(x, y, k))));
        }
    return std::make_shared<Presheaf>(a, std::move(dims), std::move(act));
}

PresheafMorphism restrict_map(const FunPtr& f, const PresheafMorphism& m) {
    std::vector<Mat> comp;
    comp.reserve(f->source()->object_count());
    for (std::size_t x = 0; x < f->source()->object_count(); ++x)
        comp.push_back(m.comp[f->map_object(x)]);
    return PresheafMorphism{restrict_along(f, m.src), restrict_along(f, m.dst),
                            std::move(comp)};
}

LeftKan left_kan(const FunPtr& f, const PshPtr& source) {
    if (source->category().get() != f->source().get())
        throw std::invalid_argument("left_kan: presheaf not on the source");
    const CatPtr& ca = f->source();
    const CatPtr& cb = f->target();
    const Scalar p = ca->modulus();
    std::size_t na = ca->object_count(), nb = cb->object_count();

    LeftKan k;
    k.along = f;
    k.source = source;
    k.offset.assign(nb, std::vector<std::size_t>(na, 0));
    std::vector<std::size_t> vdim(nb, 0);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t a = 0; a < na; ++a) {
            k.offset[b][a] = vdim[b];
            vdim[b] += cb->hom_dim(b, f->map_object(a)) * source->dim(a);
        }

    for (std::size_t b = 0; b < nb; ++b) {
        std::vector<Vec> rels;
        for (std::size_t a2 = 0; a2 < na; ++a2)
            for (std::size_t a1 = 0; a1 < na; ++a1)
                for (std::size_t ka = 0; ka < ca->hom_dim(a2, a1); ++ka) {
                    Mor fa = f->map(ca->basis_mor(a2, a1, ka));
                    const Mat& fact = source->action_basis(a2, a1, ka);  // F(a1) -> F(a2)
                    for (std::size_t i = 0; i < cb->hom_dim(b, f->map_object(a2)); ++i) {
                        Mor push = cb->compose(fa, cb->basis_mor(b, f->map_object(a2), i));
                        for (std::size_t j = 0; j < source->dim(a1); ++j) {
                            Vec rel(vdim[b], 0);
                            for (std::size_t m = 0; m < push.coords.size(); ++m) {
                                std::size_t at =
                                    k.offset[b][a1] + m * source->dim(a1) + j;
                                rel[at] = addm(rel[at], push.coords[m], p);
                            }
                            for (std::size_t t = 0; t < source->dim(a2); ++t) {
                                std::size_t at =
                                    k.offset[b][a2] + i * source->dim(a2) + t;
                                rel[at] = subm(rel[at], fact(t, j), p);
                            }
                            if (!vec_is_zero(rel)) rels.push_back(std::move(rel));
                        }
                    }
                }
        Mat relmat(p, vdim[b], rels.size());
        for (std::size_t j = 0; j < rels.size(); ++j)
            for (std::size_t i = 0; i < vdim[b]; ++i) relmat(i, j) = rels[j][i];
        k.projection.push_back(image_and_quotient(relmat).projection);
        auto sec = section_of(k.projection.back());
        if (!sec) throw std::logic_error("left_kan: projection has no section");
        k.section.push_back(*sec);
    }

    std::vector<std::size_t> dims(nb);
    for (std::size_t b = 0; b < nb; ++b) dims[b] = k.projection[b].rows();
    std::vector<std::vector<std::vector<Mat>>> act(nb, std::vector<std::vector<Mat>>(nb));
    for (std::size_t b2 = 0; b2 < nb; ++b2)
        for (std::size_t b1 = 0; b1 < nb; ++b1) {
            act[b2][b1].reserve(cb->hom_dim(b2, b1));
            for (std::size_t kb = 0; kb < cb->hom_dim(b2, b1); ++kb) {
                Mor bmor = cb->basis_mor(b2, b1, kb);
                Mat raw(p, vdim[b2], vdim[b1]);
                for (std::size_t a = 0; a < na; ++a) {
                    std::size_t fa = f->map_object(a);
                    for (std::size_t i = 0; i < cb->hom_dim(b1, fa); ++i) {
                        Mor pulled = cb->compose(cb->basis_mor(b1, fa, i), bmor);
                        for (std::size_t j = 0; j < source->dim(a); ++j)
                            for (std::size_t m = 0; m < pulled.coords.size(); ++m)
                                raw(k.offset[b2][a] + m * source->dim(a) + j,
                                    k.offset[b1][a] + i * source->dim(a) + j) =
                                    pulled.coords[m];
                    }
                }
                act[b2][b1].push_back(
                    mat_mul(k.projection[b2], mat_mul(raw, k.section[b1])));
            }
        }
    k.object = std::make_shared<Presheaf>(cb, std::move(dims), std::move(act));
    return k;
}

Vec left_kan_class(const LeftKan& k, std::size_t b, std::size_t a, const Vec& beta,
                   const Vec& y) {
    const Scalar p = k.source->category()->modulus();
    Vec raw(k.projection[b].cols(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            raw[k.offset[b][a] + i * y.size() + j] = mulm(beta[i], y[j], p);
    return mat_apply(k.projection[b], raw);
}

PresheafMorphism from_left_kan(
    const LeftKan& k, const PshPtr& target,
    const std::function<Vec(std::size_t, std::size_t, std::size_t, std::size_t)>& elem) {
    const CatPtr& ca = k.along->source();
    const CatPtr& cb = k.along->target();
    const Scalar p = cb->modulus();
    std::vector<Mat> comp;
    comp.reserve(cb->object_count());
    for (std::size_t b = 0; b < cb->object_count(); ++b) {
        Mat raw(p, target->dim(b), k.projection[b].cols());
        for (std::size_t a = 0; a < ca->object_count(); ++a) {
            std::size_t fa = k.along->map_object(a);
            for (std::size_t i = 0; i < cb->hom_dim(b, fa); ++i)
                for (std::size_t j = 0; j < k.source->dim(a); ++j) {
                    Vec v = elem(b, a, i, j);
                    for (std::size_t r = 0; r < v.size(); ++r)
                        raw(r, k.offset[b][a] + i * k.source->dim(a) + j) = v[r];
                }
        }
        comp.push_back(mat_mul(raw, k.section[b]));
    }
    return PresheafMorphism{k.object, target, std::move(comp)};
}

PresheafMorphism left_kan_map(const LeftKan& kf, const LeftKan& kg,
                              const PresheafMorphism& m) {
    return from_left_kan(kf, kg.object,
                         [&](std::size_t b, std::size_t a, std::size_t i, std::size_t j) {
                             const CatPtr& cb = kf.along->target();
                             Vec beta(cb->hom_dim(b, kf.along->map_object(a)), 0);
                             beta[i] = 1;
                             return left_kan_class(kg, b, a, beta, m.comp[a].col(j));
                         });
}

PresheafMorphism kan_unit(const LeftKan& k) {
    const CatPtr& ca = k.along->source();
    const CatPtr& cb = k.along->target();
    PshPtr dst = restrict_along(k.along, k.object);
    std::vector<Mat> comp;
    comp.reserve(ca->object_count());
    for (std::size_t a = 0; a < ca->object_count(); ++a) {
        std::size_t fa = k.along->map_object(a);
        Mat m(cb->modulus(), dst->dim(a), k.source->dim(a));
        for (std::size_t j = 0; j < k.source->dim(a); ++j) {
            Vec e(k.source->dim(a), 0);
            e[j] = 1;
            Vec cls = left_kan_class(k, fa, a, cb->identity(fa).coords, e);
            for (std::size_t r = 0; r < cls.size(); ++r) m(r, j) = cls[r];
        }
        comp.push_back(std::move(m));
    }
    return PresheafMorphism{k.source, dst, std::move(comp)};
}

PresheafMorphism kan_counit(const LeftKan& k, const PshPtr& g) {
    if (!(*k.source == *restrict_along(k.along, g)))
        throw std::invalid_argument("kan_counit: k is not the left Kan of f*G");
    const CatPtr& cb = k.along->target();
    return from_left_kan(k, g,
                         [&](std::size_t b, std::size_t a, std::size_t i, std::size_t j) {
                             Mor beta = cb->basis_mor(b, k.along->map_object(a), i);
                             return g->action(beta).col(j);
                         });
}

PresheafMorphism coyoneda_iso(const LeftKan& k, std::size_t a) {
    const CatPtr& ca = k.along->source();
    const CatPtr& cb = k.along->target();
    if (!(*k.source == *representable(ca, a)))
        throw std::invalid_argument("coyoneda_iso: source is not the representable");
    PshPtr target = representable(cb, k.along->map_object(a));
    return from_left_kan(
        k, target, [&](std::size_t b, std::size_t a2, std::size_t i, std::size_t j) {
            Mor fy = k.along->map(ca->basis_mor(a2, a, j));
            return cb->compose(fy, cb->basis_mor(b, k.along->map_object(a2), i)).coords;
        });
}

RightKan right_kan(const FunPtr& f, const PshPtr& source) {
    if (source->category().get() != f->source().get())
        throw std::invalid_argument("right_kan: presheaf not on the source");
    const CatPtr& cb = f->target();
    const Scalar p = cb->modulus();
    std::size_t nb = cb->object_count();

    RightKan k;
    k.along = f;
    k.source = source;
    for (std::size_t b = 0; b < nb; ++b) {
        k.restricted_rep.push_back(restrict_along(f, representable(cb, b)));
        k.basis.push_back(hom_presheaves(k.restricted_rep.back(), source));
    }
    std::vector<std::size_t> dims(nb);
    for (std::size_t b = 0; b < nb; ++b) dims[b] = k.basis[b].size();

    std::vector<std::vector<std::vector<Mat>>> act(nb, std::vector<std::vector<Mat>>(nb));
    for (std::size_t b2 = 0; b2 < nb; ++b2)
        for (std::size_t b1 = 0; b1 < nb; ++b1) {
            act[b2][b1].reserve(cb->hom_dim(b2, b1));
            for (std::size_t kb = 0; kb < cb->hom_dim(b2, b1); ++kb) {
                Mat m(p, dims[b2], dims[b1]);
                auto hb = restrict_map(f, representable_morphism(cb, cb->basis_mor(b2, b1, kb)));
                for (std::size_t x = 0; x < dims[b1]; ++x) {
                    PresheafMorphism moved{k.restricted_rep[b2], source,
                                           psh_compose(k.basis[b1][x], hb).comp};
                    auto c = coords_in_basis(k.basis[b2], moved);
                    if (!c) throw std::logic_error("right_kan: action left the Nat space");
                    for (std::size_t r = 0; r < c->size(); ++r) m(r, x) = (*c)[r];
                }
                act[b2][b1].push_back(std::move(m));
            }
        }
    k.object = std::make_shared<Presheaf>(cb, std::move(dims), std::move(act));
    return k;
}

PresheafMorphism right_kan_map(const RightKan& kf, const RightKan& kg,
                               const PresheafMorphism& m) {
    const CatPtr& cb = kf.along->target();
    std::vector<Mat> comp;
    comp.reserve(cb->object_count());
    for (std::size_t b = 0; b < cb->object_count(); ++b) {
        Mat out(cb->modulus(), kg.basis[b].size(), kf.basis[b].size());
        for (std::size_t x = 0; x < kf.basis[b].size(); ++x) {
            auto c = coords_in_basis(kg.basis[b], psh_compose(m, kf.basis[b][x]));
            if (!c) throw std::logic_error("right_kan_map: image left the Nat space");
            for (std::size_t r = 0; r < c->size(); ++r) out(r, x) = (*c)[r];
        }
        comp.push_back(std::move(out));
    }
    return PresheafMorphism{kf.object, kg.object, std::move(comp)};
}

PresheafMorphism right_kan_unit(const RightKan& k, const PshPtr& g) {
    if (!(*k.source == *restrict_along(k.along, g)))
        throw std::invalid_argument("right_kan_unit: k is not the right Kan of f*G");
    const CatPtr& ca = k.along->source();
    const CatPtr& cb = k.along->target();
    std::vector<Mat> comp;
    comp.reserve(cb->object_count());
    for (std::size_t b = 0; b < cb->object_count(); ++b) {
        Mat out(cb->modulus(), k.basis[b].size(), g->dim(b));
        for (std::size_t i = 0; i < g->dim(b); ++i) {
            // the matching family sends beta: fA -> B to G(beta)(s_i)
            std::vector<Mat> fam;
            fam.reserve(ca->object_count());
            for (std::size_t a = 0; a < ca->object_count(); ++a) {
                std::size_t fa = k.along->map_object(a);
                Mat m(cb->modulus(), g->dim(fa), cb->hom_dim(fa, b));
                for (std::size_t t = 0; t < cb->hom_dim(fa, b); ++t) {
                    Vec v = g->action(cb->basis_mor(fa, b, t)).col(i);
                    for (std::size_t r = 0; r < v.size(); ++r) m(r, t) = v[r];
                }
                fam.push_back(std::move(m));
            }
            PresheafMorphism x{k.restricted_rep[b], k.source, std::move(fam)};
            auto c = coords_in_basis(k.basis[b], x);
            if (!c) throw std::logic_error("right_kan_unit: family is not natural");
            for (std::size_t r = 0; r < c->size(); ++r) out(r, i) = (*c)[r];
        }
        comp.push_back(std::move(out));
    }
    return PresheafMorphism{g, k.object, std::move(comp)};
}

PresheafMorphism right_kan_counit(const RightKan& k) {
    const CatPtr& ca = k.along->source();
    const CatPtr& cb = k.along->target();
    PshPtr src = restrict_along(k.along, k.object);
    std::vector<Mat> comp;
    comp.reserve(ca->object_count());
    for (std::size_t a = 0; a < ca->object_count(); ++a) {
        std::size_t fa = k.along->map_object(a);
        Mat out(cb->modulus(), k.source->dim(a), k.basis[fa].size());
        for (std::size_t x = 0; x < k.basis[fa].size(); ++x) {
            Vec v = mat_apply(k.basis[fa][x].comp[a], cb->identity(fa).coords);
            for (std::size_t r = 0; r < v.size(); ++r) out(r, x) = v[r];
        }
        comp.push_back(std::move(out));
    }
    return PresheafMorphism{src, k.source, std::move(comp)};
}

}  // namespace linsite
