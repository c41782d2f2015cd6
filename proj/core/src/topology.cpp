#include "linsite/topology.hpp"

#include <algorithm>

namespace linsite {

CoverSystem::CoverSystem(CatPtr cat) : cat_(std::move(cat)), covers_(cat_->object_count()) {}

void CoverSystem::add(Sieve s) {
    auto& list = covers_[s.base()];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || !(*it == s)) list.insert(it, std::move(s));
}

bool CoverSystem::covering(const Sieve& s) const {
    const auto& list = covers_[s.base()];
    return std::binary_search(list.begin(), list.end(), s);
}

std::size_t CoverSystem::total() const {
    std::size_t n = 0;
    for (const auto& l : covers_) n += l.size();
    return n;
}

ValidationReport check_topology(const CoverSystem& t) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const CatPtr& cat = t.category();
    const std::size_t n = cat->object_count();

    for (std::size_t a = 0; a < n; ++a)
        if (!t.covering(maximal_sieve(cat, a)))
            fail("identity: maximal sieve on " + cat->object_name(a) + " is not covering");

    for (std::size_t a = 0; a < n; ++a)
        for (const Sieve& r : t.covers(a))
            for (std::size_t x = 0; x < n; ++x)
                for (const Vec& coords : cat->hom_elements(x, a)) {
                    Mor m = cat->make_mor(x, a, coords);
                    if (!t.covering(pullback_sieve(r, m)))
                        fail("pullback: " + describe(r) + " pulled back along " +
                             describe(*cat, m) + " is not covering");
                }

    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Sieve> candidates = all_sieves(cat, a);
        for (const Sieve& s : t.covers(a)) {
            for (const Sieve& r : candidates) {
                if (t.covering(r)) continue;
                bool forced = true;
                for (std::size_t x = 0; x < n && forced; ++x)
                    for (const Vec& coords : all_vectors(cat->modulus(), s.slice(x).dim())) {
                        Mor m = cat->make_mor(x, a, s.slice(x).element(coords));
                        if (!t.covering(pullback_sieve(r, m))) {
                            forced = false;
                            break;
                        }
                    }
                if (forced)
                    fail("glueing: " + describe(r) + " is forced by cover " + describe(s) +
                         " but is not covering");
            }
        }
    }
    return rep;
}

CoverSystem saturate(const CoverSystem& t) {
    const CatPtr& cat = t.category();
    const std::size_t n = cat->object_count();
    CoverSystem out = t;
    for (std::size_t a = 0; a < n; ++a) out.add(maximal_sieve(cat, a));

    std::vector<std::vector<Sieve>> candidates(n);
    for (std::size_t a = 0; a < n; ++a) candidates[a] = all_sieves(cat, a);

    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t before = out.total();
        for (std::size_t a = 0; a < n; ++a) {
            // pullback closure
            std::vector<Sieve> current = out.covers(a);
            for (const Sieve& r : current)
                for (std::size_t x = 0; x < n; ++x)
                    for (const Vec& coords : cat->hom_elements(x, a))
                        out.add(pullback_sieve(r, cat->make_mor(x, a, coords)));
            // glueing closure
            for (const Sieve& r : candidates[a]) {
                if (out.covering(r)) continue;
                for (const Sieve& s : out.covers(a)) {
                    bool forced = true;
                    for (std::size_t x = 0; x < n && forced; ++x)
                        for (const Vec& coords : all_vectors(cat->modulus(), s.slice(x).dim())) {
                            if (!out.covering(
                                    pullback_sieve(r, cat->make_mor(x, a, s.slice(x).element(coords))))) {
                                forced = false;
                                break;
                            }
                        }
                    if (forced) {
                        out.add(r);
                        break;
                    }
                }
            }
        }
        changed = out.total() != before;
    }
    return out;
}

CoverSystem trivial_topology(const CatPtr& cat) {
    CoverSystem t(cat);
    for (std::size_t a = 0; a < cat->object_count(); ++a) t.add(maximal_sieve(cat, a));
    return t;
}

SitePtr make_site(CatPtr cat, CoverSystem topology) {
    ValidationReport rep = check_topology(topology);
    if (!rep.ok)
        throw std::invalid_argument("make_site: not a topology: " + rep.violations.front());
    return std::make_shared<Site>(Site{std::move(cat), std::move(topology)});
}

}  // namespace linsite
