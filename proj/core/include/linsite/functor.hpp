#pragma once

#include "linsite/category.hpp"

namespace linsite {

class LinearFunctor;
using FunPtr = std::shared_ptr<const LinearFunctor>;

/* k-linear functor between finitely presented linear categories: an object
 * map plus a matrix on each hom space. */
class LinearFunctor {
  public:
    LinearFunctor(CatPtr src, CatPtr dst, std::vector<std::size_t> obj_map,
                  std::vector<std::vector<Mat>> hom_maps);

    const CatPtr& source() const { return src_; }
    const CatPtr& target() const { return dst_; }
    std::size_t map_object(std::size_t x) const { return obj_[x]; }
    /* hom_src(x,y) coords -> hom_dst(fx,fy) coords */
    const Mat& hom_matrix(std::size_t x, std::size_t y) const { return hom_[x][y]; }
    Mor map(const Mor& m) const;

  private:
    CatPtr src_, dst_;
    std::vector<std::size_t> obj_;
    std::vector<std::vector<Mat>> hom_;
};

FunPtr identity_functor(CatPtr c);
FunPtr compose_functors(const FunPtr& g, const FunPtr& f);  // g after f

/* Structural equality: same categories (by identity), same object map, same
 * hom matrices.  Needed because recomposing functors yields fresh pointers. */
bool same_functor(const LinearFunctor& f, const LinearFunctor& g);

/* Identity preservation and compatibility with composition, exhaustively on
 * basis pairs. */
ValidationReport validate_functor(const LinearFunctor& f);

}  // namespace linsite
