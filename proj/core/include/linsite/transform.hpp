#pragma once

#include "linsite/functor.hpp"

namespace linsite {

/* Natural transformation between parallel linear functors.  Construction via
 * make_nat_transform checks naturality exhaustively on hom bases and rejects
 * bad component data. */
class NatTransform {
  public:
    const FunPtr& source() const { return src_; }
    const FunPtr& target() const { return dst_; }
    const Mor& at(std::size_t obj) const { return comp_[obj]; }
    std::size_t size() const { return comp_.size(); }

  private:
    friend NatTransform make_nat_transform(FunPtr, FunPtr, std::vector<Mor>);
    NatTransform(FunPtr f, FunPtr g, std::vector<Mor> comp)
        : src_(std::move(f)), dst_(std::move(g)), comp_(std::move(comp)) {}
    FunPtr src_, dst_;
    std::vector<Mor> comp_;
};

NatTransform make_nat_transform(FunPtr f, FunPtr g, std::vector<Mor> components);
NatTransform identity_transform(const FunPtr& f);

NatTransform vertical_compose(const NatTransform& beta, const NatTransform& alpha);
/* alpha . h : components at x are alpha_{h(x)} */
NatTransform whisker_right(const NatTransform& alpha, const FunPtr& h);
/* h . alpha : components at x are h(alpha_x) */
NatTransform whisker_left(const FunPtr& h, const NatTransform& alpha);

bool is_invertible(const NatTransform& alpha);
NatTransform inverse_of(const NatTransform& alpha);

}  // namespace linsite
