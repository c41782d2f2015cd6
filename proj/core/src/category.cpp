#include "linsite/category.hpp"

#include <sstream>

namespace linsite {

std::optional<std::size_t> LinearCategory::object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i] == name) return i;
    return std::nullopt;
}

Vec LinearCategory::compose_basis(std::size_t x, std::size_t y, std::size_t z, std::size_t j,
                                  std::size_t i) const {
    return comp_[x][y][z].col(j * dims_[x][y] + i);
}

Mor LinearCategory::basis_mor(std::size_t src, std::size_t dst, std::size_t k) const {
    Mor m = zero_mor(src, dst);
    m.coords[k] = 1 % p_;
    return m;
}

Mor LinearCategory::make_mor(std::size_t src, std::size_t dst, Vec coords) const {
    if (coords.size() != hom_dim(src, dst))
        throw std::invalid_argument("make_mor: coordinate size mismatch");
    for (Scalar& c : coords) c %= p_;
    return Mor{src, dst, std::move(coords)};
}

Mor LinearCategory::compose(const Mor& g, const Mor& f) const {
    if (f.dst != g.src) throw std::invalid_argument("compose: boundary mismatch");
    const Mat& table = comp_[f.src][f.dst][g.dst];
    Vec pair(dims_[f.dst][g.dst] * dims_[f.src][f.dst], 0);
    for (std::size_t j = 0; j < dims_[f.dst][g.dst]; ++j)
        for (std::size_t i = 0; i < dims_[f.src][f.dst]; ++i)
            pair[j * dims_[f.src][f.dst] + i] = mulm(g.coords[j], f.coords[i], p_);
    return Mor{f.src, g.dst, mat_apply(table, pair)};
}

Mor LinearCategory::add(const Mor& a, const Mor& b) const {
    if (a.src != b.src || a.dst != b.dst) throw std::invalid_argument("add: boundary mismatch");
    return Mor{a.src, a.dst, vec_add(a.coords, b.coords, p_)};
}

Mor LinearCategory::scale(Scalar c, const Mor& a) const {
    return Mor{a.src, a.dst, vec_scale(c, a.coords, p_)};
}

Mat LinearCategory::precompose_matrix(const Mor& f, std::size_t a) const {
    Mat m(p_, dims_[f.src][a], dims_[f.dst][a]);
    for (std::size_t k = 0; k < dims_[f.dst][a]; ++k) {
        Mor img = compose(basis_mor(f.dst, a, k), f);
        for (std::size_t r = 0; r < img.coords.size(); ++r) m(r, k) = img.coords[r];
    }
    return m;
}

Mat LinearCategory::postcompose_matrix(const Mor& f, std::size_t a) const {
    Mat m(p_, dims_[a][f.dst], dims_[a][f.src]);
    for (std::size_t k = 0; k < dims_[a][f.src]; ++k) {
        Mor img = compose(f, basis_mor(a, f.src, k));
        for (std::size_t r = 0; r < img.coords.size(); ++r) m(r, k) = img.coords[r];
    }
    return m;
}

std::optional<Mor> LinearCategory::inverse(const Mor& f) const {
    /* solve g.f = id_src and f.g = id_dst jointly in the coords of g */
    const std::size_t n = dims_[f.dst][f.src];
    Mat lhs(p_, dims_[f.src][f.src] + dims_[f.dst][f.dst], n);
    for (std::size_t k = 0; k < n; ++k) {
        Mor gk = basis_mor(f.dst, f.src, k);
        Mor a = compose(gk, f), b = compose(f, gk);
        for (std::size_t r = 0; r < a.coords.size(); ++r) lhs(r, k) = a.coords[r];
        for (std::size_t r = 0; r < b.coords.size(); ++r) lhs(a.coords.size() + r, k) = b.coords[r];
    }
    Vec rhs = identity(f.src).coords;
    Vec id2 = identity(f.dst).coords;
    rhs.insert(rhs.end(), id2.begin(), id2.end());
    LinearSolution s = solve_linear(lhs, rhs);
    if (!s.particular) return std::nullopt;
    return Mor{f.dst, f.src, *s.particular};
}

CategoryBuilder::CategoryBuilder(Scalar p) : cat_(std::make_unique<LinearCategory>()) {
    FieldSpec check(p);
    cat_->p_ = p;
}

std::size_t CategoryBuilder::add_object(const std::string& name) {
    if (!cat_->dims_.empty() || !cat_->comp_.empty())
        throw std::logic_error("CategoryBuilder: add all objects before homs");
    cat_->objects_.push_back(name);
    return cat_->objects_.size() - 1;
}

void CategoryBuilder::set_hom(std::size_t src, std::size_t dst,
                              std::vector<std::string> basis_names) {
    std::size_t n = cat_->objects_.size();
    if (cat_->dims_.empty()) {
        cat_->dims_.assign(n, std::vector<std::size_t>(n, 0));
        cat_->names_.assign(n, std::vector<std::vector<std::string>>(n));
        cat_->ids_.assign(n, Vec{});
    }
    if (!cat_->comp_.empty()) throw std::logic_error("CategoryBuilder: homs fixed after compose");
    cat_->dims_[src][dst] = basis_names.size();
    cat_->names_[src][dst] = std::move(basis_names);
}

void CategoryBuilder::set_compose(std::size_t x, std::size_t y, std::size_t z, std::size_t j,
                                  std::size_t i, const Vec& coords) {
    if (cat_->comp_.empty()) {
        std::size_t n = cat_->objects_.size();
        cat_->comp_.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    cat_->comp_[a][b][c] =
                        Mat(cat_->p_, cat_->dims_[a][c], cat_->dims_[b][c] * cat_->dims_[a][b]);
    }
    if (coords.size() != cat_->dims_[x][z])
        throw std::invalid_argument("set_compose: coordinate size mismatch");
    Mat& m = cat_->comp_[x][y][z];
    for (std::size_t r = 0; r < coords.size(); ++r)
        m(r, j * cat_->dims_[x][y] + i) = coords[r] % cat_->p_;
}

void CategoryBuilder::set_identity(std::size_t obj, const Vec& coords) {
    if (coords.size() != cat_->dims_[obj][obj])
        throw std::invalid_argument("set_identity: coordinate size mismatch");
    Vec v = coords;
    for (Scalar& c : v) c %= cat_->p_;
    cat_->ids_[obj] = std::move(v);
}

CatPtr CategoryBuilder::build() {
    if (built_) throw std::logic_error("CategoryBuilder: build() called twice");
    built_ = true;
    std::size_t n = cat_->objects_.size();
    if (cat_->dims_.empty()) {
        cat_->dims_.assign(n, std::vector<std::size_t>(n, 0));
        cat_->names_.assign(n, std::vector<std::vector<std::string>>(n));
        cat_->ids_.assign(n, Vec{});
    }
    if (cat_->comp_.empty()) {
        cat_->comp_.assign(n, std::vector<std::vector<Mat>>(n, std::vector<Mat>(n)));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    cat_->comp_[a][b][c] =
                        Mat(cat_->p_, cat_->dims_[a][c], cat_->dims_[b][c] * cat_->dims_[a][b]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (cat_->ids_[i].size() != cat_->dims_[i][i])
            throw std::invalid_argument("CategoryBuilder: identity not set for object " +
                                        cat_->objects_[i]);
    return CatPtr(cat_.release());
}

ValidationReport validate_category(const LinearCategory& c) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const std::size_t n = c.object_count();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < c.hom_dim(x, y); ++i) {
                Mor f = c.basis_mor(x, y, i);
                if (c.compose(c.identity(y), f) != f)
                    fail("identity: id_" + c.object_name(y) + " . " + c.basis_name(x, y, i) +
                         " != " + c.basis_name(x, y, i));
                if (c.compose(f, c.identity(x)) != f)
                    fail("identity: " + c.basis_name(x, y, i) + " . id_" + c.object_name(x) +
                         " != " + c.basis_name(x, y, i));
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w)
                    for (std::size_t i = 0; i < c.hom_dim(x, y); ++i)
                        for (std::size_t j = 0; j < c.hom_dim(y, z); ++j)
                            for (std::size_t k = 0; k < c.hom_dim(z, w); ++k) {
                                Mor f = c.basis_mor(x, y, i), g = c.basis_mor(y, z, j),
                                    h = c.basis_mor(z, w, k);
                                if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
                                    fail("associativity fails on (" + c.basis_name(z, w, k) + ", " +
                                         c.basis_name(y, z, j) + ", " + c.basis_name(x, y, i) + ")");
                            }
    return rep;
}

std::string describe(const LinearCategory& c, const Mor& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < m.coords.size(); ++k) {
        if (m.coords[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (m.coords[k] != 1) os << m.coords[k] << "*";
        os << c.basis_name(m.src, m.dst, k);
    }
    if (first) os << "0";
    os << " : " << c.object_name(m.src) << " -> " << c.object_name(m.dst);
    return os.str();
}

}  // namespace linsite
