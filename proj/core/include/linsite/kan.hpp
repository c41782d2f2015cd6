#pragma once

#include "linsite/functor.hpp"
#include "linsite/presheaf.hpp"

#include <functional>

namespace linsite {

/* restriction along f: (f*G)(A) = G(fA) */
PshPtr restrict_along(const FunPtr& f, const PshPtr& g);
PresheafMorphism restrict_map(const FunPtr& f, const PresheafMorphism& m);

/* Left Kan extension as an explicit coend: (f_!F)(B) is the direct sum of
 * hom(B, fA) (x) F(A) over A, modulo (f(a).beta) (x) y - beta (x) F(a)(y).
 * Keeps the projection/section pair so classes and induced maps stay
 * computable. */
struct LeftKan {
    FunPtr along;
    PshPtr source;  // F
    PshPtr object;  // f_! F
    std::vector<std::vector<std::size_t>> offset;  // [B][A] into the raw sum
    std::vector<Mat> projection;  // raw -> (f_!F)(B)
    std::vector<Mat> section;
};

LeftKan left_kan(const FunPtr& f, const PshPtr& source);

/* class of beta (x) y in (f_!F)(B), for beta in hom(B, fA), y in F(A) */
Vec left_kan_class(const LeftKan& k, std::size_t b, std::size_t a, const Vec& beta,
                   const Vec& y);

/* Cowedge elimination: the map f_!F -> T whose value on the class of
 * beta_i (x) y_j at B is elem(B, A, i, j).  The caller guarantees the family
 * respects the coend relations. */
PresheafMorphism from_left_kan(
    const LeftKan& k, const PshPtr& target,
    const std::function<Vec(std::size_t b, std::size_t a, std::size_t beta, std::size_t y)>&
        elem);

/* f_! phi for phi: F -> G */
PresheafMorphism left_kan_map(const LeftKan& kf, const LeftKan& kg, const PresheafMorphism& m);

/* eta: F -> f* f_! F,  y |-> [id (x) y] */
PresheafMorphism kan_unit(const LeftKan& k);

/* eps: f_! f* G -> G,  beta (x) y |-> G(beta)(y); k must be the left Kan of
 * f*G */
PresheafMorphism kan_counit(const LeftKan& k, const PshPtr& g);

/* canonical iso f_!(h_A) -> h_{fA}, beta (x) a' |-> f(a').beta */
PresheafMorphism coyoneda_iso(const LeftKan& k, std::size_t a);

/* Right Kan extension: (f_*F)(B) = Nat(f*(h_B), F), with the stored Nat
 * bases fixing the coordinates. */
struct RightKan {
    FunPtr along;
    PshPtr source;  // F
    PshPtr object;  // f_* F
    std::vector<PshPtr> restricted_rep;                // f*(h_B) per B
    std::vector<std::vector<PresheafMorphism>> basis;  // Nat(f*(h_B), F) per B
};

RightKan right_kan(const FunPtr& f, const PshPtr& source);

/* f_* phi */
PresheafMorphism right_kan_map(const RightKan& kf, const RightKan& kg,
                               const PresheafMorphism& m);

/* eta: G -> f_* f* G; k must be the right Kan of f*G */
PresheafMorphism right_kan_unit(const RightKan& k, const PshPtr& g);

/* eps: f* f_* F -> F, evaluate at the identity */
PresheafMorphism right_kan_counit(const RightKan& k);

}  // namespace linsite
