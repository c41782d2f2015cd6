#pragma once

#include "linsite/category.hpp"

namespace linsite {

class Presheaf;
using PshPtr = std::shared_ptr<const Presheaf>;

/* Presheaf of finite-dimensional F_p vector spaces on a linear category:
 * a dimension per object and, for the k-th hom basis element a: x -> y, a
 * matrix F(a): F(y) -> F(x) (contravariant). */
class Presheaf {
  public:
    Presheaf(CatPtr cat, std::vector<std::size_t> dims,
             std::vector<std::vector<std::vector<Mat>>> actions);

    const CatPtr& category() const { return cat_; }
    std::size_t dim(std::size_t x) const { return dim_[x]; }
    const std::vector<std::size_t>& dims() const { return dim_; }
    const Mat& action_basis(std::size_t x, std::size_t y, std::size_t k) const {
        return act_[x][y][k];
    }
    /* F(a) for a general morphism a: extends linearly over the basis */
    Mat action(const Mor& a) const;

    bool operator==(const Presheaf&) const;

  private:
    CatPtr cat_;
    std::vector<std::size_t> dim_;
    std::vector<std::vector<std::vector<Mat>>> act_;
};

PshPtr representable(const CatPtr& cat, std::size_t obj);
PshPtr zero_presheaf(const CatPtr& cat);
bool is_zero_presheaf(const Presheaf& f);

/* F(id) = id and F(a.b) = F(b)F(a) on all basis pairs. */
ValidationReport validate_presheaf(const Presheaf& f);

struct PresheafMorphism {
    PshPtr src, dst;
    std::vector<Mat> comp;  // comp[x]: src(x) -> dst(x)
};

bool is_natural(const PresheafMorphism& m);
bool is_zero(const PresheafMorphism& m);
bool is_iso(const PresheafMorphism& m);

PresheafMorphism identity_morphism(const PshPtr& f);
PresheafMorphism zero_morphism(const PshPtr& f, const PshPtr& g);
PresheafMorphism psh_compose(const PresheafMorphism& b, const PresheafMorphism& a);
PresheafMorphism psh_add(const PresheafMorphism& a, const PresheafMorphism& b);
PresheafMorphism psh_sub(const PresheafMorphism& a, const PresheafMorphism& b);
PresheafMorphism psh_scale(Scalar c, const PresheafMorphism& a);
PresheafMorphism psh_inverse(const PresheafMorphism& a);  // throws if not iso

/* h_b : h_B -> h_{B'} induced by b: B -> B' (postcomposition). */
PresheafMorphism representable_morphism(const CatPtr& cat, const Mor& b);

/* Basis of the space of natural transformations F -> G, canonical up to the
 * deterministic solver. */
std::vector<PresheafMorphism> hom_presheaves(const PshPtr& f, const PshPtr& g);

/* raw coordinates used by the Nat solver; layout: components row-major,
 * objects in index order */
std::size_t raw_dim(const Presheaf& f, const Presheaf& g);
Vec morphism_to_raw(const PresheafMorphism& m);
PresheafMorphism raw_to_morphism(const PshPtr& f, const PshPtr& g, const Vec& raw);
/* coordinates of m in a basis of natural transformations, if expressible */
std::optional<Vec> coords_in_basis(const std::vector<PresheafMorphism>& basis,
                                   const PresheafMorphism& m);

/* Solutions of one-sided factorization problems in the functor category.
 * unique means the solution space is a single point, which the callers that
 * invoke these for universal properties assert. */
struct Factorization {
    PresheafMorphism map;
    bool unique;
};
/* psi: P -> Q natural with psi . pre = post, where pre: F -> P, post: F -> Q */
std::optional<Factorization> factor_through(const PresheafMorphism& pre,
                                            const PresheafMorphism& post);
/* psi: P -> Q natural with through . psi = target, where through: Q -> G,
 * target: P -> G */
std::optional<Factorization> factor_left(const PresheafMorphism& through,
                                         const PresheafMorphism& target);

struct KernelData {
    PshPtr object;
    PresheafMorphism inclusion;  // object -> src
};
struct CokernelData {
    PshPtr object;
    PresheafMorphism projection;  // dst -> object
    std::vector<Mat> section;     // right inverse of the projection, per object
};

KernelData kernel_of(const PresheafMorphism& m);
CokernelData cokernel_of(const PresheafMorphism& m);

struct SumData {
    PshPtr object;
    PresheafMorphism in_left, in_right;
    PresheafMorphism pr_left, pr_right;
};
SumData direct_sum(const PshPtr& f, const PshPtr& g);

/* Search for a natural isomorphism F -> G: try single basis vectors, then
 * seeded random combinations, then exhaustive search over small coefficient
 * spaces. */
std::optional<PresheafMorphism> find_isomorphism(const PshPtr& f, const PshPtr& g,
                                                 std::uint64_t seed);

/* Deterministic pseudo-random presheaf: a kernel or cokernel of a random
 * natural endomorphism of a small direct sum of representables, so validity
 * holds by construction. */
PshPtr random_presheaf(const CatPtr& cat, std::uint64_t seed);

}  // namespace linsite
