#include "doctest.h"

#include "linsite/fixtures.hpp"
#include "linsite/transform.hpp"

using namespace linsite;
namespace fx = linsite::fixtures;

TEST_CASE("fixture categories satisfy the axioms") {
    for (Scalar p : {2u, 3u}) {
        CAPTURE(p);
        CHECK(validate_category(*fx::point(p).cat).ok);
        CHECK(validate_category(*fx::idempotent(p).cat).ok);
        auto mp = fx::matrix_pair(p);
        CHECK(validate_category(*mp.big).ok);
        CHECK(validate_category(*mp.sub).ok);
    }
}

TEST_CASE("validation flags a broken identity") {
    CategoryBuilder b(2);
    auto s = b.add_object("s");
    b.set_hom(s, s, {"i", "t"});
    b.set_compose(s, s, s, 0, 0, Vec{1, 0});
    b.set_compose(s, s, s, 0, 1, Vec{0, 1});
    b.set_compose(s, s, s, 1, 0, Vec{0, 1});
    b.set_compose(s, s, s, 1, 1, Vec{1, 0});  // t.t = i, a perfectly good group algebra
    b.set_identity(s, Vec{0, 1});             // ...but t is not the unit
    auto rep = validate_category(*b.build());
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("validation flags a non-associative table") {
    CategoryBuilder b(2);
    auto s = b.add_object("s");
    b.set_hom(s, s, {"e", "x", "y"});
    auto unit = [](std::size_t k) {
        Vec v(3, 0);
        v[k] = 1;
        return v;
    };
    for (std::size_t k = 0; k < 3; ++k) {
        b.set_compose(s, s, s, 0, k, unit(k));  // e neutral on the left
        b.set_compose(s, s, s, k, 0, unit(k));  // and on the right
    }
    b.set_compose(s, s, s, 1, 1, unit(2));      // x.x = y
    b.set_compose(s, s, s, 1, 2, Vec{0, 0, 0}); // x.y = 0
    b.set_compose(s, s, s, 2, 1, unit(1));      // y.x = x  -> (x.x).x != x.(x.x)
    b.set_compose(s, s, s, 2, 2, Vec{0, 0, 0});
    b.set_identity(s, unit(0));
    auto rep = validate_category(*b.build());
    CHECK_FALSE(rep.ok);
}

TEST_CASE("idempotent endomorphism algebra") {
    auto id = fx::idempotent();
    const auto& c = *id.cat;
    CHECK(c.compose(id.e1, id.e1) == id.e1);
    CHECK(c.is_zero(c.compose(id.e1, id.e2)));
    CHECK(c.is_zero(c.compose(id.e2, id.e1)));
    CHECK(c.add(id.e1, id.e2) == c.identity(0));
    CHECK_FALSE(c.inverse(id.e1).has_value());
    CHECK(c.inverse(c.identity(0)).has_value());

    // precompose by e1 projects onto the e1 line
    Mat pre = c.precompose_matrix(id.e1, 0);
    CHECK(rank(pre) == 1);
    CHECK(mat_mul(pre, pre) == pre);
}

TEST_CASE("matrix-pair composition is matrix arithmetic") {
    auto mp = fx::matrix_pair();
    const auto& c = *mp.big;
    auto u = *c.object_index("u");
    auto v = *c.object_index("v");
    Mor j1 = c.basis_mor(u, v, 0), j2 = c.basis_mor(u, v, 1);
    Mor q1 = c.basis_mor(v, u, 0), q2 = c.basis_mor(v, u, 1);
    Mor m11 = c.basis_mor(v, v, 0), m12 = c.basis_mor(v, v, 1);
    Mor m21 = c.basis_mor(v, v, 2), m22 = c.basis_mor(v, v, 3);

    CHECK(c.compose(q1, j1) == c.identity(u));
    CHECK(c.is_zero(c.compose(q2, j1)));
    CHECK(c.compose(j1, q2) == m12);
    CHECK(c.compose(j2, q1) == m21);
    CHECK(c.compose(m12, m21) == m11);  // E12 E21 = E11
    CHECK(c.is_zero(c.compose(m12, m12)));
    CHECK(c.compose(m11, j1) == j1);
    CHECK(c.is_zero(c.compose(m11, j2)));
    CHECK(c.compose(q1, m12) == q2);
    CHECK(c.add(m11, m22) == c.identity(v));

    // the swap matrix E12 + E21 is an involution, hence invertible
    Mor swap = c.add(m12, m21);
    auto inv = c.inverse(swap);
    REQUIRE(inv.has_value());
    CHECK(*inv == swap);
    CHECK_FALSE(c.inverse(m11).has_value());
    CHECK_FALSE(c.inverse(j1).has_value());  // non-endo morphisms have no inverse

    CHECK(describe(c, c.add(m11, m22)) == "m11 + m22 : v -> v");
}

TEST_CASE("fixture functors validate; broken maps do not") {
    for (Scalar p : {2u, 3u}) {
        CAPTURE(p);
        auto pt = fx::point(p);
        auto id = fx::idempotent(p);
        auto mp = fx::matrix_pair(p);
        CHECK(validate_functor(*mp.inclusion).ok);
        CHECK(validate_functor(*fx::unital_embedding(pt, id)).ok);
        CHECK(validate_functor(*fx::swap_automorphism(id)).ok);
        CHECK(validate_functor(*identity_functor(mp.big)).ok);

        // e1 |-> e1, e2 |-> e1 breaks both unitality and orthogonality
        std::vector<std::vector<Mat>> hom(1, std::vector<Mat>(1));
        Mat m(p, 2, 2);
        m(0, 0) = 1;
        m(0, 1) = 1;
        hom[0][0] = std::move(m);
        LinearFunctor bad(id.cat, id.cat, {0}, std::move(hom));
        CHECK_FALSE(validate_functor(bad).ok);
    }
}

TEST_CASE("functor composition and mapping") {
    auto pt = fx::point();
    auto id = fx::idempotent();
    auto emb = fx::unital_embedding(pt, id);
    auto swap = fx::swap_automorphism(id);

    CHECK(emb->map(pt.cat->identity(0)) == id.cat->identity(0));
    CHECK(swap->map(id.e1) == id.e2);
    CHECK(swap->map(id.e2) == id.e1);

    auto both = compose_functors(swap, emb);
    CHECK(validate_functor(*both).ok);
    CHECK(both->map(pt.cat->identity(0)) == id.cat->identity(0));

    auto twice = compose_functors(swap, swap);
    CHECK(twice->map(id.e1) == id.e1);

    CHECK_THROWS_AS((void)compose_functors(emb, swap), std::invalid_argument);
}

TEST_CASE("naturality is enforced at construction") {
    auto id = fx::idempotent();
    auto I = identity_functor(id.cat);
    auto S = fx::swap_automorphism(id);

    // End(*) is commutative, so any endomorphism is central
    CHECK_NOTHROW((void)make_nat_transform(I, I, {id.e1}));
    // but only zero intertwines the identity with the swap:
    // a.e1 = e2.a forces a = 0
    CHECK_THROWS_AS((void)make_nat_transform(I, S, {id.e1}), std::invalid_argument);
    CHECK_THROWS_AS((void)make_nat_transform(I, S, {id.cat->identity(0)}),
                    std::invalid_argument);
    CHECK_NOTHROW((void)make_nat_transform(I, S, {id.cat->zero_mor(0, 0)}));
}

TEST_CASE("whiskering and interchange") {
    auto id = fx::idempotent();
    auto I = identity_functor(id.cat);
    auto S = fx::swap_automorphism(id);

    auto a = make_nat_transform(I, I, {id.e1});
    auto b = make_nat_transform(I, I, {id.e2});
    auto v = vertical_compose(b, a);
    CHECK(id.cat->is_zero(v.at(0)));  // e2 . e1 = 0

    auto ident = identity_transform(I);
    CHECK(vertical_compose(a, ident).at(0) == a.at(0));
    CHECK(is_invertible(ident));
    CHECK_FALSE(is_invertible(a));

    // two readings of the horizontal composite agree (Godement interchange)
    auto left = vertical_compose(whisker_right(b, I), whisker_left(I, a));
    auto right = vertical_compose(whisker_left(I, a), whisker_right(b, I));
    CHECK(left.at(0) == right.at(0));

    // whiskering with the swap conjugates the component
    auto wa = whisker_left(S, a);
    CHECK(wa.at(0) == id.e2);
    auto aw = whisker_right(a, S);
    CHECK(aw.at(0) == id.e1);

    auto inv = inverse_of(identity_transform(S));
    CHECK(inv.at(0) == id.cat->identity(0));
}
