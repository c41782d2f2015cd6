#include "linsite/fixtures.hpp"

namespace linsite::fixtures {

PointSite point(Scalar p) {
    CategoryBuilder b(p);
    std::size_t star = b.add_object("*");
    b.set_hom(star, star, {"one"});
    b.set_compose(star, star, star, 0, 0, Vec{1});
    b.set_identity(star, Vec{1});
    CatPtr cat = b.build();
    CoverSystem plain = trivial_topology(cat);
    CoverSystem with_zero = plain;
    with_zero.add(empty_sieve(cat, star));
    return PointSite{cat, make_site(cat, plain), make_site(cat, with_zero)};
}

IdempotentSite idempotent(Scalar p) {
    CategoryBuilder b(p);
    std::size_t star = b.add_object("*");
    b.set_hom(star, star, {"e1", "e2"});
    b.set_compose(star, star, star, 0, 0, Vec{1, 0});  // e1 . e1 = e1
    b.set_compose(star, star, star, 0, 1, Vec{0, 0});  // e1 . e2 = 0
    b.set_compose(star, star, star, 1, 0, Vec{0, 0});  // e2 . e1 = 0
    b.set_compose(star, star, star, 1, 1, Vec{0, 1});  // e2 . e2 = e2
    b.set_identity(star, Vec{1, 1});
    CatPtr cat = b.build();

    Mor e1 = cat->basis_mor(star, star, 0);
    Mor e2 = cat->basis_mor(star, star, 1);
    Sieve s1 = sieve_generated(cat, star, {e1});
    Sieve s2 = sieve_generated(cat, star, {e2});

    CoverSystem te = trivial_topology(cat);
    te.add(s1);
    CoverSystem te_swapped = trivial_topology(cat);
    te_swapped.add(s2);

    auto module_on = [&](bool e1_acts) {
        std::vector<std::size_t> dims{1};
        Mat one = Mat::identity(p, 1), zero(p, 1, 1);
        std::vector<std::vector<std::vector<Mat>>> act(1, std::vector<std::vector<Mat>>(1));
        act[0][0].push_back(e1_acts ? one : zero);
        act[0][0].push_back(e1_acts ? zero : one);
        return std::make_shared<Presheaf>(cat, std::move(dims), std::move(act));
    };
    return IdempotentSite{cat,
                          make_site(cat, te),
                          make_site(cat, te_swapped),
                          make_site(cat, trivial_topology(cat)),
                          e1,
                          e2,
                          s1,
                          s2,
                          module_on(true),
                          module_on(false)};
}

MatrixPairSite matrix_pair(Scalar p) {
    CategoryBuilder b(p);
    std::size_t u = b.add_object("u");
    std::size_t v = b.add_object("v");
    b.set_hom(u, u, {"idu"});
    b.set_hom(u, v, {"j1", "j2"});
    b.set_hom(v, u, {"q1", "q2"});
    b.set_hom(v, v, {"m11", "m12", "m21", "m22"});

    auto unit = [&](std::size_t dim, std::size_t k) {
        Vec c(dim, 0);
        c[k] = 1;
        return c;
    };
    // idu . idu = idu
    b.set_compose(u, u, u, 0, 0, Vec{1});
    // j_c . idu = j_c
    for (std::size_t c = 0; c < 2; ++c) b.set_compose(u, u, v, c, 0, unit(2, c));
    // idu . q_r = q_r
    for (std::size_t r = 0; r < 2; ++r) b.set_compose(v, u, u, 0, r, unit(2, r));
    // q_r . j_c = delta_rc idu
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) b.set_compose(u, v, u, r, c, Vec{r == c ? 1u : 0u});
    // j_c . q_r = m_{c r}   (m index = 2*row + col)
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < 2; ++r) b.set_compose(v, u, v, c, r, unit(4, 2 * c + r));
    // m_{rc} . j_k = delta_ck j_r
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t k = 0; k < 2; ++k)
                b.set_compose(u, v, v, 2 * r + c, k, c == k ? unit(2, r) : Vec{0, 0});
    // q_k . m_{rc} = delta_kr q_c
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                b.set_compose(v, v, u, k, 2 * r + c, k == r ? unit(2, c) : Vec{0, 0});
    // m_{rc} . m_{r'c'} = delta_{c r'} m_{r c'}
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t r2 = 0; r2 < 2; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2)
                    b.set_compose(v, v, v, 2 * r + c, 2 * r2 + c2,
                                  c == r2 ? unit(4, 2 * r + c2) : Vec{0, 0, 0, 0});
    b.set_identity(u, Vec{1});
    b.set_identity(v, Vec{1, 0, 0, 1});
    CatPtr big = b.build();

    CategoryBuilder bs(p);
    std::size_t su = bs.add_object("u");
    bs.set_hom(su, su, {"idu"});
    bs.set_compose(su, su, su, 0, 0, Vec{1});
    bs.set_identity(su, Vec{1});
    CatPtr sub = bs.build();

    std::vector<std::vector<Mat>> hom(1, std::vector<Mat>(1));
    hom[0][0] = Mat::identity(p, 1);
    FunPtr incl = std::make_shared<LinearFunctor>(sub, big, std::vector<std::size_t>{u},
                                                  std::move(hom));
    return MatrixPairSite{big, sub, make_site(big, trivial_topology(big)),
                          make_site(sub, trivial_topology(sub)), incl};
}

FunPtr unital_embedding(const PointSite& pt, const IdempotentSite& id) {
    std::vector<std::vector<Mat>> hom(1, std::vector<Mat>(1));
    Mat m(pt.cat->modulus(), 2, 1);
    m(0, 0) = 1;
    m(1, 0) = 1;  // 1 |-> e1 + e2 = id
    hom[0][0] = std::move(m);
    return std::make_shared<LinearFunctor>(pt.cat, id.cat, std::vector<std::size_t>{0},
                                           std::move(hom));
}

FunPtr swap_automorphism(const IdempotentSite& id) {
    std::vector<std::vector<Mat>> hom(1, std::vector<Mat>(1));
    Mat m(id.cat->modulus(), 2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    hom[0][0] = std::move(m);
    return std::make_shared<LinearFunctor>(id.cat, id.cat, std::vector<std::size_t>{0},
                                           std::move(hom));
}

std::vector<MorphismCase> morphism_corpus(Scalar p) {
    PointSite pt = point(p);
    IdempotentSite id = idempotent(p);
    MatrixPairSite mp = matrix_pair(p);

    std::vector<MorphismCase> out;
    out.push_back({"id-point", identity_functor(pt.cat), pt.site, pt.site, true});
    out.push_back({"id-point-zero", identity_functor(pt.cat), pt.site_zero, pt.site_zero, true});
    out.push_back({"id-idempotent", identity_functor(id.cat), id.te, id.te, true});
    out.push_back({"id-matrix-pair", identity_functor(mp.big), mp.big_site, mp.big_site, true});
    out.push_back({"matrix-pair-inclusion", mp.inclusion, mp.sub_site, mp.big_site, true});
    out.push_back({"unital-embedding", unital_embedding(pt, id), pt.site, id.te, false});
    /* identity functor, source retopologized to the trivial topology */
    out.push_back(
        {"idempotent-retopologized", identity_functor(id.cat), id.trivial, id.te, false});
    /* e1 <-> e2 swap: an equivalence onto the swapped topology... */
    out.push_back({"swap-to-swapped", swap_automorphism(id), id.te, id.te_swapped, true});
    /* ...but not onto the original one */
    out.push_back({"swap-to-same", swap_automorphism(id), id.te, id.te, false});
    /* point -> point-zero identity: zero sieve not covering upstream */
    out.push_back({"point-to-point-zero", identity_functor(pt.cat), pt.site, pt.site_zero, false});
    return out;
}

}  // namespace linsite::fixtures
