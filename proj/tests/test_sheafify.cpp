#include "doctest.h"

#include "linsite/fixtures.hpp"
#include "linsite/sheafify.hpp"

using namespace linsite;
namespace fx = linsite::fixtures;

TEST_CASE("sheaf detection on the idempotent site") {
    for (Scalar p : {2u, 3u}) {
        CAPTURE(p);
        auto id = fx::idempotent(p);
        CHECK(is_sheaf(id.te, id.m_e1));
        CHECK_FALSE(is_sheaf(id.te, id.m_e2));
        CHECK(is_sheaf(id.te_swapped, id.m_e2));
        CHECK_FALSE(is_sheaf(id.te_swapped, id.m_e1));
        CHECK(is_sheaf(id.trivial, id.m_e2));

        auto h = representable(id.cat, 0);
        CHECK_FALSE(is_sheaf(id.te, h));  // not separated: the e2 part dies

        auto v = find_sheaf_violation(id.te, id.m_e2);
        REQUIRE(v.has_value());
        CHECK(v->object == 0);
        CHECK(v->cover == id.sieve_e1);
        CHECK(v->dim_sections == 1);
        CHECK(v->dim_matching == 0);
        CHECK(v->rank_restriction == 0);

        // zero presheaf is always a sheaf
        CHECK(is_sheaf(id.te, zero_presheaf(id.cat)));
    }
}

TEST_CASE("sheafifying the representable on the idempotent site") {
    for (Scalar p : {2u, 3u}) {
        CAPTURE(p);
        auto id = fx::idempotent(p);
        auto h = representable(id.cat, 0);

        auto once = plus_construction(id.te, h);
        CHECK(once.object->dim(0) == 1);  // 3-dim sum, 2 independent relations
        CHECK(is_natural(once.unit));
        CHECK(validate_presheaf(*once.object).ok);

        auto sf = sheafify(id.te, h);
        CHECK(sf.sheaf->dim(0) == 1);
        CHECK(is_natural(sf.unit));
        CHECK(is_sheaf(id.te, sf.sheaf));
        CHECK(find_isomorphism(sf.sheaf, id.m_e1, 11).has_value());
        CHECK_FALSE(is_iso(sf.unit));
        CHECK(is_local_iso(id.te, sf.unit));

        // mirrored site picks out the other summand
        auto sw = sheafify(id.te_swapped, h);
        CHECK(find_isomorphism(sw.sheaf, id.m_e2, 11).has_value());
    }
}

TEST_CASE("local vanishing") {
    auto id = fx::idempotent();
    CHECK(is_locally_zero(id.te, id.m_e2));
    CHECK_FALSE(is_locally_zero(id.te, id.m_e1));
    CHECK_FALSE(is_locally_zero(id.trivial, id.m_e2));
    CHECK(is_locally_zero(id.te_swapped, id.m_e1));

    auto pt = fx::point();
    auto h = representable(pt.cat, 0);
    // once the zero sieve covers, everything dies
    CHECK(is_locally_zero(pt.site_zero, h));
    CHECK_FALSE(is_locally_zero(pt.site, h));
    auto sf = sheafify(pt.site_zero, h);
    CHECK(sf.sheaf->dim(0) == 0);
    // with only the maximal cover, sheafification does nothing
    CHECK(is_iso(sheafify(pt.site, h).unit));
}

TEST_CASE("subcanonicity") {
    auto id = fx::idempotent();
    auto pt = fx::point();
    auto mp = fx::matrix_pair();
    CHECK(is_subcanonical(pt.site));
    CHECK(is_subcanonical(id.trivial));
    CHECK(is_subcanonical(mp.big_site));
    CHECK_FALSE(is_subcanonical(id.te));
    CHECK_FALSE(is_subcanonical(pt.site_zero));
}

TEST_CASE("universal property maps") {
    auto id = fx::idempotent();
    auto h = representable(id.cat, 0);
    auto sf = sheafify(id.te, h);

    // identity sheafifies to the identity
    auto idm = sheafify_map(id.te, sf, sf, identity_morphism(h));
    CHECK(idm.comp == identity_morphism(sf.sheaf).comp);

    // functoriality on precomposition endomorphisms
    auto phi = representable_morphism(id.cat, id.e1);
    auto psi = representable_morphism(id.cat, id.e2);
    auto sphi = sheafify_map(id.te, sf, sf, phi);
    auto spsi = sheafify_map(id.te, sf, sf, psi);
    CHECK(psh_compose(sphi, sf.unit).comp == psh_compose(sf.unit, phi).comp);
    auto comp = sheafify_map(id.te, sf, sf, psh_compose(psi, phi));
    CHECK(comp.comp == psh_compose(spsi, sphi).comp);

    // e1 spans the surviving summand, e2 kills it
    CHECK(is_iso(sphi));
    CHECK(is_zero(spsi));
}

TEST_CASE("random probes: reflection properties") {
    std::vector<std::pair<const char*, SitePtr>> sites;
    auto id = fx::idempotent();
    auto pt = fx::point();
    auto mp = fx::matrix_pair();
    auto id3 = fx::idempotent(3);
    sites.push_back({"te", id.te});
    sites.push_back({"point-zero", pt.site_zero});
    sites.push_back({"matrix-pair", mp.big_site});
    sites.push_back({"te-f3", id3.te});

    for (auto& [name, site] : sites) {
        CAPTURE(name);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            CAPTURE(seed);
            auto f = random_presheaf(site->cat, seed);
            REQUIRE(validate_presheaf(*f).ok);
            auto sf = sheafify(site, f);
            CHECK(is_sheaf(site, sf.sheaf));
            CHECK(is_natural(sf.unit));
            CHECK(is_local_iso(site, sf.unit));
            // the single-plus vanishing shortcut agrees with the full sharp
            CHECK(is_locally_zero(site, f) == is_zero_presheaf(*sf.sheaf));
            if (is_sheaf(site, f)) CHECK(is_iso(sf.unit));
            // idempotence
            CHECK(is_iso(sheafify(site, sf.sheaf).unit));
        }
    }
}
