#pragma once

#include "linsite/sieve.hpp"

namespace linsite {

/* A set of "covering" sieves per object.  CoverSystem is just the raw data;
 * whether it satisfies the topology axioms is check_topology's verdict. */
class CoverSystem {
  public:
    explicit CoverSystem(CatPtr cat);

    const CatPtr& category() const { return cat_; }
    void add(Sieve s);
    bool covering(const Sieve& s) const;
    const std::vector<Sieve>& covers(std::size_t obj) const { return covers_[obj]; }
    std::size_t total() const;

    bool operator==(const CoverSystem& o) const { return covers_ == o.covers_; }

  private:
    CatPtr cat_;
    std::vector<std::vector<Sieve>> covers_;  // sorted, unique
};

/* identity, pullback (along every element of every hom space), glueing
 * (quantified over all sieves on each object) */
ValidationReport check_topology(const CoverSystem& t);

/* Least topology containing t: close under the three axioms to a fixed point. */
CoverSystem saturate(const CoverSystem& t);

CoverSystem trivial_topology(const CatPtr& cat);

struct Site {
    CatPtr cat;
    CoverSystem topology;
};
using SitePtr = std::shared_ptr<const Site>;

/* Validating constructor: throws std::invalid_argument if the axioms fail. */
SitePtr make_site(CatPtr cat, CoverSystem topology);

}  // namespace linsite
