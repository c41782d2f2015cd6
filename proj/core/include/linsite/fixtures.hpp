#pragma once

#include "linsite/topology.hpp"
#include "linsite/transform.hpp"

namespace linsite::fixtures {

/* One object *, End = F_p.  `point` carries the chaotic (trivial) topology,
 * `point_zero` additionally declares the zero sieve covering, which forces
 * every sheaf to vanish. */
struct PointSite {
    CatPtr cat;
    SitePtr site;       // { max }
    SitePtr site_zero;  // { max, 0 }
};
PointSite point(Scalar p = 2);

/* One object *, End = F_p x F_p with basis e1, e2 (orthogonal idempotents,
 * id = e1 + e2).  Topologies: te = {max, (e1)}, te_swapped = {max, (e2)},
 * trivial = {max}. */
struct IdempotentSite {
    CatPtr cat;
    SitePtr te;
    SitePtr te_swapped;
    SitePtr trivial;
    Mor e1, e2;
    Sieve sieve_e1, sieve_e2;
    PshPtr m_e1;  // 1-dim: e1 acts as 1, e2 as 0; a sheaf for te
    PshPtr m_e2;  // the mirror module; not a sheaf for te
};
IdempotentSite idempotent(Scalar p = 2);

/* Two objects u, v with hom(u,u) = F_p, hom(u,v) = F_p^2, hom(v,u) = F_p^2,
 * hom(v,v) = F_p^{2x2} under matrix composition, plus the full subcategory on
 * u and its inclusion.  Both sites carry the trivial topology. */
struct MatrixPairSite {
    CatPtr big;       // objects u, v
    CatPtr sub;       // object u only
    SitePtr big_site;
    SitePtr sub_site;
    FunPtr inclusion;  // sub -> big
};
MatrixPairSite matrix_pair(Scalar p = 2);

/* Named site morphisms exercised across the suites. */
struct MorphismCase {
    std::string name;
    FunPtr fun;
    SitePtr src, tgt;
    bool expect_lc;
};
/* The standing corpus of site morphisms over F_p (identities, the matrix-pair
 * inclusion, the unital point -> idempotent embedding, retopologized
 * identities, the e1 <-> e2 swap). */
std::vector<MorphismCase> morphism_corpus(Scalar p = 2);

/* The unital embedding point -> idempotent, 1 |-> e1 + e2. */
FunPtr unital_embedding(const PointSite& pt, const IdempotentSite& id);

/* e1 <-> e2 swap automorphism of the idempotent category. */
FunPtr swap_automorphism(const IdempotentSite& id);

}  // namespace linsite::fixtures
