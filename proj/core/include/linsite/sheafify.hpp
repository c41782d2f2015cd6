#pragma once

#include "linsite/topology.hpp"

namespace linsite {

/* Witness that the restriction map F(A) -> Nat(R~, F) fails to be bijective
 * on a covering sieve R. */
struct SheafViolation {
    std::size_t object;
    Sieve cover;
    std::size_t dim_sections;     // dim F(A)
    std::size_t dim_matching;     // dim Nat(R~, F)
    std::size_t rank_restriction;
};

std::optional<SheafViolation> find_sheaf_violation(const SitePtr& site, const PshPtr& f);
bool is_sheaf(const SitePtr& site, const PshPtr& f);

/* One application of the plus construction: (F+)(A) is the colimit of
 * Nat(R~, F) over the covering sieves R on A, computed as an explicit
 * quotient of the direct sum by the restriction relations. */
struct PlusResult {
    PshPtr object;
    PresheafMorphism unit;  // F -> F+
};
PlusResult plus_construction(const SitePtr& site, const PshPtr& f);

struct Sheafified {
    PshPtr sheaf;           // F# = (F+)+
    PresheafMorphism unit;  // F -> F#
};
Sheafified sheafify(const SitePtr& site, const PshPtr& f);

/* F# = 0.  Decided with a single plus: F+ is separated, and a separated
 * presheaf embeds into its sheafification, so F+ = 0 iff F# = 0. */
bool is_locally_zero(const SitePtr& site, const PshPtr& f);

/* kernel and cokernel locally zero, i.e. the map becomes invertible after
 * sheafification */
bool is_local_iso(const SitePtr& site, const PresheafMorphism& m);

/* cokernel locally zero: epimorphism in the sheaf category */
bool is_local_epi(const SitePtr& site, const PresheafMorphism& m);

/* The unique map of the universal property: psi . unit_F = unit_G . phi.
 * Throws std::logic_error if the solver ever fails to pin it down, which
 * would mean the inputs were not sheafifications over this site. */
PresheafMorphism sheafify_map(const SitePtr& site, const Sheafified& sf, const Sheafified& sg,
                              const PresheafMorphism& phi);

/* every representable already a sheaf */
bool is_subcanonical(const SitePtr& site);

}  // namespace linsite
