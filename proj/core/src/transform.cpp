#include "linsite/transform.hpp"

namespace linsite {

NatTransform make_nat_transform(FunPtr f, FunPtr g, std::vector<Mor> components) {
    if (f->source().get() != g->source().get() || f->target().get() != g->target().get())
        throw std::invalid_argument("make_nat_transform: functors not parallel");
    const LinearCategory& a = *f->source();
    const LinearCategory& b = *f->target();
    if (components.size() != a.object_count())
        throw std::invalid_argument("make_nat_transform: component count mismatch");
    for (std::size_t x = 0; x < a.object_count(); ++x) {
        const Mor& c = components[x];
        if (c.src != f->map_object(x) || c.dst != g->map_object(x) ||
            c.coords.size() != b.hom_dim(c.src, c.dst))
            throw std::invalid_argument("make_nat_transform: component boundary mismatch at " +
                                        a.object_name(x));
    }
    for (std::size_t x = 0; x < a.object_count(); ++x)
        for (std::size_t y = 0; y < a.object_count(); ++y)
            for (std::size_t k = 0; k < a.hom_dim(x, y); ++k) {
                Mor m = a.basis_mor(x, y, k);
                if (b.compose(g->map(m), components[x]) != b.compose(components[y], f->map(m)))
                    throw std::invalid_argument("make_nat_transform: naturality fails on " +
                                                a.basis_name(x, y, k));
            }
    return NatTransform(std::move(f), std::move(g), std::move(components));
}

NatTransform identity_transform(const FunPtr& f) {
    const LinearCategory& b = *f->target();
    std::vector<Mor> comp;
    for (std::size_t x = 0; x < f->source()->object_count(); ++x)
        comp.push_back(b.identity(f->map_object(x)));
    return make_nat_transform(f, f, std::move(comp));
}

NatTransform vertical_compose(const NatTransform& beta, const NatTransform& alpha) {
    if (!same_functor(*alpha.target(), *beta.source()))
        throw std::invalid_argument("vertical_compose: middle functor mismatch");
    const LinearCategory& b = *alpha.source()->target();
    std::vector<Mor> comp;
    for (std::size_t x = 0; x < alpha.size(); ++x) comp.push_back(b.compose(beta.at(x), alpha.at(x)));
    return make_nat_transform(alpha.source(), beta.target(), std::move(comp));
}

NatTransform whisker_right(const NatTransform& alpha, const FunPtr& h) {
    if (h->target().get() != alpha.source()->source().get())
        throw std::invalid_argument("whisker_right: boundary mismatch");
    std::vector<Mor> comp;
    for (std::size_t x = 0; x < h->source()->object_count(); ++x)
        comp.push_back(alpha.at(h->map_object(x)));
    return make_nat_transform(compose_functors(alpha.source(), h),
                              compose_functors(alpha.target(), h), std::move(comp));
}

NatTransform whisker_left(const FunPtr& h, const NatTransform& alpha) {
    if (alpha.source()->target().get() != h->source().get())
        throw std::invalid_argument("whisker_left: boundary mismatch");
    std::vector<Mor> comp;
    for (std::size_t x = 0; x < alpha.size(); ++x) comp.push_back(h->map(alpha.at(x)));
    return make_nat_transform(compose_functors(h, alpha.source()),
                              compose_functors(h, alpha.target()), std::move(comp));
}

bool is_invertible(const NatTransform& alpha) {
    const LinearCategory& b = *alpha.source()->target();
    for (std::size_t x = 0; x < alpha.size(); ++x)
        if (!b.inverse(alpha.at(x))) return false;
    return true;
}

NatTransform inverse_of(const NatTransform& alpha) {
    const LinearCategory& b = *alpha.source()->target();
    std::vector<Mor> comp;
    for (std::size_t x = 0; x < alpha.size(); ++x) {
        auto inv = b.inverse(alpha.at(x));
        if (!inv) throw std::invalid_argument("inverse_of: component not invertible");
        comp.push_back(*inv);
    }
    return make_nat_transform(alpha.target(), alpha.source(), std::move(comp));
}

}  // namespace linsite
