// Materialized Hom-spaces. A space of linear maps is a subspace of the
// flattened coordinate space k^(cod*dom) (hom_coords contract in matrix.hpp),
// together with helpers to pass between coordinates and actual matrices and
// to equip the space with its residual module structure.

#pragma once

#include "tensor.hpp"

#include <functional>

namespace hopflab {

template <field_scalar K>
struct HomSpace {
    std::size_t dom_dim = 0, cod_dim = 0;
    Subspace<K> maps;  // basis of the space inside k^(cod*dom)

    std::size_t dim() const { return maps.dim(); }

    Mat<K> embed(const Mat<K>& coords) const {
        return unflatten(maps.basis * coords, cod_dim, dom_dim);
    }
    Mat<K> basis_map(std::size_t c) const {
        return unflatten(maps.basis.col(c), cod_dim, dom_dim);
    }
    std::optional<Mat<K>> coords_of(const Mat<K>& map) const {
        return coords_in(maps, flatten(map));
    }
    Mat<K> coords_of_or_throw(const Mat<K>& map, const char* what) const {
        auto c = coords_of(map);
        if (!c) throw std::domain_error(std::string("map outside Hom-space: ") + what);
        return *c;
    }
    // deterministic left inverse of the basis: k^(cod*dom) -> coords
    Mat<K> coordinate_retraction() const {
        Field<K> f = maps.basis.field();
        Mat<K> aug = hstack(maps.basis, Mat<K>::identity(f, maps.ambient));
        detail::rref(aug);
        Mat<K> r(f, maps.dim(), maps.ambient);
        for (std::size_t i = 0; i < maps.dim(); ++i)
            for (std::size_t j = 0; j < maps.ambient; ++j) r(i, j) = aug(i, maps.dim() + j);
        if (!(r * maps.basis).is_identity()) throw std::logic_error("coordinate_retraction failed");
        return r;
    }
};

// Kernel of a stack of linear conditions on maps dom -> cod, each condition
// given by its action on an actual matrix.
template <field_scalar K>
HomSpace<K> hom_space_cut(Field<K> f, std::size_t dom, std::size_t cod,
                          const std::vector<std::function<Mat<K>(const Mat<K>&)>>& defects) {
    HomSpace<K> hs;
    hs.dom_dim = dom;
    hs.cod_dim = cod;
    if (defects.empty()) {
        hs.maps.ambient = cod * dom;
        hs.maps.basis = Mat<K>::identity(f, cod * dom);
        return hs;
    }
    Mat<K> stacked;
    bool first = true;
    for (const auto& d : defects) {
        Mat<K> op = operator_matrix<K>(f, cod, dom, d);
        stacked = first ? op : vstack(stacked, op);
        first = false;
    }
    hs.maps = kernel(stacked);
    return hs;
}

template <field_scalar K>
HomSpace<K> full_hom(Field<K> f, std::size_t dom, std::size_t cod) {
    return hom_space_cut<K>(f, dom, cod, {});
}

// Right A-linear maps M -> N (common right base). Trivial bases impose nothing.
template <field_scalar K>
HomSpace<K> hom_right_linear(const Bimod<K>& m, const Bimod<K>& n) {
    if (!same_algebra(m.right_base, n.right_base)) throw std::invalid_argument("hom_right_linear: base mismatch");
    Field<K> f = m.field();
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.right_base->trivial()) {
        Mat<K> ib = Mat<K>::identity(f, m.right_base->dim);
        defects.push_back([&m, &n, ib](const Mat<K>& fm) {
            return fm * m.right_action - n.right_action * kron(fm, ib);
        });
    }
    return hom_space_cut<K>(f, m.dim, n.dim, defects);
}

template <field_scalar K>
HomSpace<K> hom_left_linear(const Bimod<K>& m, const Bimod<K>& n) {
    if (!same_algebra(m.left_base, n.left_base)) throw std::invalid_argument("hom_left_linear: base mismatch");
    Field<K> f = m.field();
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.left_base->trivial()) {
        Mat<K> ia = Mat<K>::identity(f, m.left_base->dim);
        defects.push_back([&m, &n, ia](const Mat<K>& fm) {
            return fm * m.left_action - n.left_action * kron(ia, fm);
        });
    }
    return hom_space_cut<K>(f, m.dim, n.dim, defects);
}

template <field_scalar K>
HomSpace<K> hom_bilinear(const Bimod<K>& m, const Bimod<K>& n) {
    if (!same_algebra(m.right_base, n.right_base) || !same_algebra(m.left_base, n.left_base))
        throw std::invalid_argument("hom_bilinear: base mismatch");
    Field<K> f = m.field();
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.right_base->trivial()) {
        Mat<K> ib = Mat<K>::identity(f, m.right_base->dim);
        defects.push_back([&m, &n, ib](const Mat<K>& fm) {
            return fm * m.right_action - n.right_action * kron(fm, ib);
        });
    }
    if (!m.left_base->trivial()) {
        Mat<K> ia = Mat<K>::identity(f, m.left_base->dim);
        defects.push_back([&m, &n, ia](const Mat<K>& fm) {
            return fm * m.left_action - n.left_action * kron(ia, fm);
        });
    }
    return hom_space_cut<K>(f, m.dim, n.dim, defects);
}

// A Hom-space materialized as a bimodule on its coordinate space.
template <field_scalar K>
struct HomModule {
    HomSpace<K> space;
    Bimod<K> mod;
};

// Hom_A(M, N) of right A-modules as an (L(N), L(M))-bimodule:
// (a.f)(m) = a.f(m) and (f.a)(m) = f(a.m).
template <field_scalar K>
HomModule<K> hom_module_right(const Bimod<K>& m, const Bimod<K>& n, std::string name = "") {
    Field<K> f = m.field();
    HomModule<K> h;
    h.space = hom_right_linear(m, n);
    AlgebraRef<K> lb = n.left_base, rb = m.left_base;
    std::size_t d = h.space.dim();
    Mat<K> left(f, d, lb->dim * d), right(f, d, d * rb->dim);
    for (std::size_t c = 0; c < d; ++c) {
        Mat<K> phi = h.space.basis_map(c);
        for (std::size_t j = 0; j < lb->dim; ++j) {
            Mat<K> psi = n.act_left(Mat<K>::basis_vec(f, lb->dim, j)) * phi;
            Mat<K> coords = h.space.coords_of_or_throw(psi, "left residual action");
            for (std::size_t i = 0; i < d; ++i) left(i, j * d + c) = coords(i, 0);
        }
        for (std::size_t j = 0; j < rb->dim; ++j) {
            Mat<K> psi = phi * m.act_left(Mat<K>::basis_vec(f, rb->dim, j));
            Mat<K> coords = h.space.coords_of_or_throw(psi, "right residual action");
            for (std::size_t i = 0; i < d; ++i) right(i, c * rb->dim + j) = coords(i, 0);
        }
    }
    h.mod = make_bimodule<K>(lb, rb, d, left, right, std::move(name));
    return h;
}

// Hom_{A,-}(M, N) of left A-modules as an (R(M), R(N))-bimodule:
// (b.f)(m) = f(m.b) and (f.b)(m) = f(m).b.
template <field_scalar K>
HomModule<K> hom_module_left(const Bimod<K>& m, const Bimod<K>& n, std::string name = "") {
    Field<K> f = m.field();
    HomModule<K> h;
    h.space = hom_left_linear(m, n);
    AlgebraRef<K> lb = m.right_base, rb = n.right_base;
    std::size_t d = h.space.dim();
    Mat<K> left(f, d, lb->dim * d), right(f, d, d * rb->dim);
    for (std::size_t c = 0; c < d; ++c) {
        Mat<K> phi = h.space.basis_map(c);
        for (std::size_t j = 0; j < lb->dim; ++j) {
            Mat<K> psi = phi * m.act_right(Mat<K>::basis_vec(f, lb->dim, j));
            Mat<K> coords = h.space.coords_of_or_throw(psi, "left residual action");
            for (std::size_t i = 0; i < d; ++i) left(i, j * d + c) = coords(i, 0);
        }
        for (std::size_t j = 0; j < rb->dim; ++j) {
            Mat<K> psi = n.act_right(Mat<K>::basis_vec(f, rb->dim, j)) * phi;
            Mat<K> coords = h.space.coords_of_or_throw(psi, "right residual action");
            for (std::size_t i = 0; i < d; ++i) right(i, c * rb->dim + j) = coords(i, 0);
        }
    }
    h.mod = make_bimodule<K>(lb, rb, d, left, right, std::move(name));
    return h;
}

// Evaluation Hom-coords (x) M -> N as a plain matrix.
template <field_scalar K>
Mat<K> evaluation_lift(const HomSpace<K>& hs) {
    Field<K> f = hs.maps.basis.field();
    Mat<K> ev(f, hs.cod_dim, hs.dim() * hs.dom_dim);
    for (std::size_t c = 0; c < hs.dim(); ++c) {
        Mat<K> phi = hs.basis_map(c);
        for (std::size_t j = 0; j < hs.dom_dim; ++j)
            for (std::size_t i = 0; i < hs.cod_dim; ++i) ev(i, c * hs.dom_dim + j) = phi(i, j);
    }
    return ev;
}

// Post-composition with g : cod -> cod' as a matrix on Hom-coordinates.
template <field_scalar K>
Mat<K> postcompose_op(const HomSpace<K>& from, const HomSpace<K>& to, const Mat<K>& g) {
    Field<K> f = from.maps.basis.field();
    Mat<K> r(f, to.dim(), from.dim());
    for (std::size_t c = 0; c < from.dim(); ++c)
        r.set_col(c, to.coords_of_or_throw(g * from.basis_map(c), "postcompose"));
    return r;
}

// Pre-composition with g : dom' -> dom as a matrix on Hom-coordinates.
template <field_scalar K>
Mat<K> precompose_op(const HomSpace<K>& from, const HomSpace<K>& to, const Mat<K>& g) {
    Field<K> f = from.maps.basis.field();
    Mat<K> r(f, to.dim(), from.dim());
    for (std::size_t c = 0; c < from.dim(); ++c)
        r.set_col(c, to.coords_of_or_throw(from.basis_map(c) * g, "precompose"));
    return r;
}

}  // namespace hopflab
