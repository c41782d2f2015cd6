#pragma once

#include "linsite/presheaf.hpp"

namespace linsite {

class LinearFunctor;

/* Sieve on an object A: a subfunctor of the representable at A, stored as a
 * canonical subspace of hom(X, A) per object X.  Closure under precomposition
 * by arbitrary morphisms is the defining invariant. */
class Sieve {
  public:
    Sieve(CatPtr cat, std::size_t base, std::vector<Subspace> slices);

    const CatPtr& category() const { return cat_; }
    std::size_t base() const { return base_; }
    const Subspace& slice(std::size_t x) const { return slices_[x]; }
    bool contains(const Mor& r) const;

    bool operator==(const Sieve& o) const { return base_ == o.base_ && slices_ == o.slices_; }
    std::strong_ordering operator<=>(const Sieve& o) const;

  private:
    CatPtr cat_;
    std::size_t base_;
    std::vector<Subspace> slices_;
};

Sieve maximal_sieve(const CatPtr& cat, std::size_t base);
Sieve empty_sieve(const CatPtr& cat, std::size_t base);  // the zero subfunctor

/* Closure of a family of morphisms into `base` under span and precomposition. */
Sieve sieve_generated(const CatPtr& cat, std::size_t base, const std::vector<Mor>& family);

/* a^* R = { b | a . b in R } for a: X -> A, a sieve on X. */
Sieve pullback_sieve(const Sieve& r, const Mor& a);

/* Sieve on f(A) generated by the f-images of the slices of R. */
Sieve image_sieve(const LinearFunctor& f, const Sieve& r);

Sieve intersect(const Sieve& r, const Sieve& s);
bool subsieve(const Sieve& r, const Sieve& s);  // r contained in s

/* slice basis elements, as morphisms into the base */
std::vector<Mor> generators(const Sieve& r);

/* closure invariant, checked exhaustively over all hom elements */
bool is_closed_sieve(const Sieve& r);

/* R as a presheaf, with the inclusion into the representable at the base. */
struct SievePresheaf {
    PshPtr object;
    PresheafMorphism inclusion;
};
SievePresheaf sieve_presheaf(const Sieve& r);

/* all sieves on an object (slice tuples closed under precomposition) */
std::vector<Sieve> all_sieves(const CatPtr& cat, std::size_t base);

std::string describe(const Sieve& r);

}  // namespace linsite
