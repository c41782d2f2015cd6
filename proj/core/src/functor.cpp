#include "linsite/functor.hpp"

namespace linsite {

LinearFunctor::LinearFunctor(CatPtr src, CatPtr dst, std::vector<std::size_t> obj_map,
                             std::vector<std::vector<Mat>> hom_maps)
    : src_(std::move(src)), dst_(std::move(dst)), obj_(std::move(obj_map)),
      hom_(std::move(hom_maps)) {
    if (src_->modulus() != dst_->modulus())
        throw std::invalid_argument("LinearFunctor: field mismatch");
    if (obj_.size() != src_->object_count())
        throw std::invalid_argument("LinearFunctor: object map size mismatch");
    for (std::size_t o : obj_)
        if (o >= dst_->object_count()) throw std::invalid_argument("LinearFunctor: bad object");
    if (hom_.size() != src_->object_count())
        throw std::invalid_argument("LinearFunctor: hom map shape mismatch");
    for (std::size_t x = 0; x < obj_.size(); ++x) {
        if (hom_[x].size() != src_->object_count())
            throw std::invalid_argument("LinearFunctor: hom map shape mismatch");
        for (std::size_t y = 0; y < obj_.size(); ++y) {
            const Mat& m = hom_[x][y];
            if (m.rows() != dst_->hom_dim(obj_[x], obj_[y]) || m.cols() != src_->hom_dim(x, y))
                throw std::invalid_argument("LinearFunctor: hom matrix shape mismatch");
        }
    }
}

Mor LinearFunctor::map(const Mor& m) const {
    return Mor{obj_[m.src], obj_[m.dst], mat_apply(hom_[m.src][m.dst], m.coords)};
}

FunPtr identity_functor(CatPtr c) {
    std::size_t n = c->object_count();
    std::vector<std::size_t> obj(n);
    std::vector<std::vector<Mat>> hom(n, std::vector<Mat>(n));
    for (std::size_t x = 0; x < n; ++x) {
        obj[x] = x;
        for (std::size_t y = 0; y < n; ++y)
            hom[x][y] = Mat::identity(c->modulus(), c->hom_dim(x, y));
    }
    return std::make_shared<LinearFunctor>(c, c, std::move(obj), std::move(hom));
}

FunPtr compose_functors(const FunPtr& g, const FunPtr& f) {
    if (f->target().get() != g->source().get())
        throw std::invalid_argument("compose_functors: boundary mismatch");
    std::size_t n = f->source()->object_count();
    std::vector<std::size_t> obj(n);
    std::vector<std::vector<Mat>> hom(n, std::vector<Mat>(n));
    for (std::size_t x = 0; x < n; ++x) {
        obj[x] = g->map_object(f->map_object(x));
        for (std::size_t y = 0; y < n; ++y)
            hom[x][y] =
                mat_mul(g->hom_matrix(f->map_object(x), f->map_object(y)), f->hom_matrix(x, y));
    }
    return std::make_shared<LinearFunctor>(f->source(), g->target(), std::move(obj),
                                           std::move(hom));
}

bool same_functor(const LinearFunctor& f, const LinearFunctor& g) {
    if (f.source().get() != g.source().get() || f.target().get() != g.target().get())
        return false;
    std::size_t n = f.source()->object_count();
    for (std::size_t x = 0; x < n; ++x)
        if (f.map_object(x) != g.map_object(x)) return false;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (f.hom_matrix(x, y) != g.hom_matrix(x, y)) return false;
    return true;
}

ValidationReport validate_functor(const LinearFunctor& f) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const LinearCategory& a = *f.source();
    const LinearCategory& b = *f.target();
    for (std::size_t x = 0; x < a.object_count(); ++x)
        if (f.map(a.identity(x)) != b.identity(f.map_object(x)))
            fail("functor drops identity at " + a.object_name(x));
    for (std::size_t x = 0; x < a.object_count(); ++x)
        for (std::size_t y = 0; y < a.object_count(); ++y)
            for (std::size_t z = 0; z < a.object_count(); ++z)
                for (std::size_t i = 0; i < a.hom_dim(x, y); ++i)
                    for (std::size_t j = 0; j < a.hom_dim(y, z); ++j) {
                        Mor fm = a.basis_mor(x, y, i), gm = a.basis_mor(y, z, j);
                        if (f.map(a.compose(gm, fm)) != b.compose(f.map(gm), f.map(fm)))
                            fail("functor breaks composition on (" + a.basis_name(y, z, j) + ", " +
                                 a.basis_name(x, y, i) + ")");
                    }
    return rep;
}

}  // namespace linsite
