#pragma once

#include <memory>
#include <optional>
#include <string>

#include "linsite/subspace.hpp"

namespace linsite {

class LinearCategory;
using CatPtr = std::shared_ptr<const LinearCategory>;

/* Morphism value: coordinates in the chosen basis of hom(src, dst). */
struct Mor {
    std::size_t src = 0, dst = 0;
    Vec coords;

    bool operator==(const Mor&) const = default;
};

/* Finitely presented k-linear category over F_p: finitely many objects,
 * finite-dimensional hom spaces with chosen bases, composition given by
 * structure constants on basis pairs. */
class LinearCategory {
  public:
    Scalar modulus() const { return p_; }
    std::size_t object_count() const { return objects_.size(); }
    const std::string& object_name(std::size_t i) const { return objects_[i]; }
    std::optional<std::size_t> object_index(const std::string& name) const;

    std::size_t hom_dim(std::size_t src, std::size_t dst) const { return dims_[src][dst]; }
    const std::string& basis_name(std::size_t src, std::size_t dst, std::size_t k) const {
        return names_[src][dst][k];
    }
    /* structure constants of basis_j(y,z) . basis_i(x,y), as coords in hom(x,z) */
    Vec compose_basis(std::size_t x, std::size_t y, std::size_t z, std::size_t j,
                      std::size_t i) const;

    Mor identity(std::size_t obj) const { return Mor{obj, obj, ids_[obj]}; }
    Mor zero_mor(std::size_t src, std::size_t dst) const {
        return Mor{src, dst, Vec(hom_dim(src, dst), 0)};
    }
    Mor basis_mor(std::size_t src, std::size_t dst, std::size_t k) const;
    Mor make_mor(std::size_t src, std::size_t dst, Vec coords) const;

    Mor compose(const Mor& g, const Mor& f) const;  // g . f, f first
    Mor add(const Mor& a, const Mor& b) const;
    Mor scale(Scalar c, const Mor& a) const;
    bool is_zero(const Mor& a) const { return vec_is_zero(a.coords); }

    /* hom(y, a) -> hom(x, a): r |-> r . f   for f: x -> y */
    Mat precompose_matrix(const Mor& f, std::size_t a) const;
    /* hom(a, x) -> hom(a, y): r |-> f . r */
    Mat postcompose_matrix(const Mor& f, std::size_t a) const;

    /* two-sided inverse, if one exists */
    std::optional<Mor> inverse(const Mor& f) const;

    /* every element of hom(src, dst), as coordinate vectors */
    std::vector<Vec> hom_elements(std::size_t src, std::size_t dst) const {
        return all_vectors(p_, hom_dim(src, dst));
    }

  private:
    friend class CategoryBuilder;
    Scalar p_ = 2;
    std::vector<std::string> objects_;
    std::vector<std::vector<std::size_t>> dims_;
    std::vector<std::vector<std::vector<std::string>>> names_;
    /* comp_[x][y][z]: hom(x,z)-dim rows, cols indexed by j*dim(x,y)+i */
    std::vector<std::vector<std::vector<Mat>>> comp_;
    std::vector<Vec> ids_;
};

class CategoryBuilder {
  public:
    explicit CategoryBuilder(Scalar p);
    std::size_t add_object(const std::string& name);
    void set_hom(std::size_t src, std::size_t dst, std::vector<std::string> basis_names);
    void set_compose(std::size_t x, std::size_t y, std::size_t z, std::size_t j, std::size_t i,
                     const Vec& coords);
    void set_identity(std::size_t obj, const Vec& coords);
    /* structural freeze; axiom checking is validate_category's job */
    CatPtr build();

  private:
    std::unique_ptr<LinearCategory> cat_;
    bool built_ = false;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/* Checks bilinear-category axioms exhaustively on basis tuples:
 * associativity on all composable basis triples, identity neutrality. */
ValidationReport validate_category(const LinearCategory& c);

std::string describe(const LinearCategory& c, const Mor& m);

}  // namespace linsite
