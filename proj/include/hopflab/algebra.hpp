// Finite-dimensional algebras, modules and bimodules by structure constants.
//
// A one-sided module is stored as a bimodule whose other base is the scalar
// algebra k; actions over a one-dimensional base are automatically unital and
// associative, so every construction below is written once for bimodules.

#pragma once

#include "report.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hopflab {

template <field_scalar K>
struct Algebra {
    Field<K> field;
    std::size_t dim = 0;
    Mat<K> mult;  // A (x) A -> A, column (i*dim+j) = e_i * e_j
    Mat<K> unit;  // k -> A
    std::string name;

    bool trivial() const { return dim == 1; }

    // left multiplication by the element with coordinate vector x
    Mat<K> lmul(const Mat<K>& x) const { return mult * kron(x, Mat<K>::identity(field, dim)); }
    // right multiplication by x
    Mat<K> rmul(const Mat<K>& x) const { return mult * kron(Mat<K>::identity(field, dim), x); }
};

template <field_scalar K>
using AlgebraRef = std::shared_ptr<const Algebra<K>>;

// Base algebras are compared structurally; separately constructed copies of
// the same presentation are the same base.
template <field_scalar K>
bool same_algebra(const AlgebraRef<K>& x, const AlgebraRef<K>& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return x->field == y->field && x->dim == y->dim && x->mult == y->mult && x->unit == y->unit;
}

template <field_scalar K>
AlgebraRef<K> make_algebra(Field<K> f, std::size_t dim, Mat<K> mult, Mat<K> unit, std::string name = "") {
    if (mult.rows() != dim || mult.cols() != dim * dim) throw std::invalid_argument("algebra: mult shape");
    if (unit.rows() != dim || unit.cols() != 1) throw std::invalid_argument("algebra: unit shape");
    auto a = std::make_shared<Algebra<K>>();
    a->field = f;
    a->dim = dim;
    a->mult = std::move(mult);
    a->unit = std::move(unit);
    a->name = std::move(name);
    return a;
}

// the base field as a one-dimensional algebra
template <field_scalar K>
AlgebraRef<K> scalar_algebra(Field<K> f) {
    Mat<K> m(f, 1, 1);
    m(0, 0) = f.one();
    return make_algebra<K>(f, 1, m, m, "k");
}

template <field_scalar K>
std::vector<IdentityPair<K>> algebra_identities(const Algebra<K>& a) {
    Mat<K> id = Mat<K>::identity(a.field, a.dim);
    return {
        {"associativity", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult)},
        {"left unit", a.mult * kron(a.unit, id), id},
        {"right unit", a.mult * kron(id, a.unit), id},
    };
}

template <field_scalar K>
Report check_algebra(const Algebra<K>& a) {
    Report rep;
    rep.command = "check_algebra " + a.name;
    check_identities(rep, algebra_identities(a));
    return rep;
}

enum class Side { left, right };

// (A,B)-bimodule; one-sided modules use the scalar algebra on the other side.
template <field_scalar K>
struct Bimod {
    AlgebraRef<K> left_base, right_base;
    std::size_t dim = 0;
    Mat<K> left_action;   // A (x) M -> M
    Mat<K> right_action;  // M (x) B -> M
    std::string name;

    const Field<K>& field() const { return left_base->field; }
    Mat<K> ident() const { return Mat<K>::identity(field(), dim); }

    // action by a fixed algebra element
    Mat<K> act_left(const Mat<K>& a) const { return left_action * kron(a, ident()); }
    Mat<K> act_right(const Mat<K>& b) const { return right_action * kron(ident(), b); }
};

template <field_scalar K>
Bimod<K> make_bimodule(AlgebraRef<K> left, AlgebraRef<K> right, std::size_t dim,
                       Mat<K> left_action, Mat<K> right_action, std::string name = "") {
    if (left_action.rows() != dim || left_action.cols() != left->dim * dim)
        throw std::invalid_argument("bimodule: left action shape");
    if (right_action.rows() != dim || right_action.cols() != dim * right->dim)
        throw std::invalid_argument("bimodule: right action shape");
    Bimod<K> m;
    m.left_base = std::move(left);
    m.right_base = std::move(right);
    m.dim = dim;
    m.left_action = std::move(left_action);
    m.right_action = std::move(right_action);
    m.name = std::move(name);
    return m;
}

template <field_scalar K>
Mat<K> scalar_action_left(Field<K> f, std::size_t dim) {
    return Mat<K>::identity(f, dim);  // k (x) M -> M on the lex basis
}
template <field_scalar K>
Mat<K> scalar_action_right(Field<K> f, std::size_t dim) {
    return Mat<K>::identity(f, dim);
}

template <field_scalar K>
Bimod<K> right_module(AlgebraRef<K> base, std::size_t dim, Mat<K> action, std::string name = "") {
    Field<K> f = base->field;
    return make_bimodule<K>(scalar_algebra(f), std::move(base), dim, scalar_action_left(f, dim),
                            std::move(action), std::move(name));
}

template <field_scalar K>
Bimod<K> left_module(AlgebraRef<K> base, std::size_t dim, Mat<K> action, std::string name = "") {
    Field<K> f = base->field;
    return make_bimodule<K>(std::move(base), scalar_algebra(f), dim, std::move(action),
                            scalar_action_right(f, dim), std::move(name));
}

// A as an (A,A)-bimodule by multiplication
template <field_scalar K>
Bimod<K> regular_bimodule(AlgebraRef<K> a) {
    Mat<K> m = a->mult;
    std::string n = a->name;
    return make_bimodule<K>(a, a, a->dim, m, m, n);
}

template <field_scalar K>
Bimod<K> regular_right_module(AlgebraRef<K> a) {
    Mat<K> m = a->mult;
    std::string n = a->name;
    return right_module<K>(std::move(a), m.rows(), m, n);
}

template <field_scalar K>
Bimod<K> regular_left_module(AlgebraRef<K> a) {
    Mat<K> m = a->mult;
    std::string n = a->name;
    return left_module<K>(std::move(a), m.rows(), m, n);
}

// A* = Hom_k(A,k) as a right A-module, (f.a)(b) = f(ab)
template <field_scalar K>
Bimod<K> dual_right_module(AlgebraRef<K> a) {
    Field<K> f = a->field;
    std::size_t n = a->dim;
    Mat<K> action(f, n, n * n);
    for (std::size_t j = 0; j < n; ++j) {
        Mat<K> lt = a->lmul(Mat<K>::basis_vec(f, n, j)).transpose();
        for (std::size_t i = 0; i < n; ++i) {
            Mat<K> v = lt * Mat<K>::basis_vec(f, n, i);
            for (std::size_t r = 0; r < n; ++r) action(r, i * n + j) = v(r, 0);
        }
    }
    return right_module<K>(a, n, action, a->name + "*");
}

template <field_scalar K>
Bimod<K> direct_sum(const Bimod<K>& m, const Bimod<K>& n) {
    if (!same_algebra(m.left_base, n.left_base) || !same_algebra(m.right_base, n.right_base))
        throw std::invalid_argument("direct_sum: base mismatch");
    Field<K> f = m.field();
    std::size_t la = m.left_base->dim, rb = m.right_base->dim;
    std::size_t d = m.dim + n.dim;
    // left action: A (x) (M + N) -> M + N; reorder columns of the block sum
    Mat<K> left(f, d, la * d), right(f, d, d * rb);
    for (std::size_t a = 0; a < la; ++a) {
        Mat<K> am = m.act_left(Mat<K>::basis_vec(f, la, a));
        Mat<K> an = n.act_left(Mat<K>::basis_vec(f, la, a));
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t i = 0; i < m.dim; ++i) left(i, a * d + j) = am(i, j);
        for (std::size_t j = 0; j < n.dim; ++j)
            for (std::size_t i = 0; i < n.dim; ++i) left(m.dim + i, a * d + m.dim + j) = an(i, j);
    }
    for (std::size_t b = 0; b < rb; ++b) {
        Mat<K> bm = m.act_right(Mat<K>::basis_vec(f, rb, b));
        Mat<K> bn = n.act_right(Mat<K>::basis_vec(f, rb, b));
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t i = 0; i < m.dim; ++i) right(i, j * rb + b) = bm(i, j);
        for (std::size_t j = 0; j < n.dim; ++j)
            for (std::size_t i = 0; i < n.dim; ++i) right(m.dim + i, (m.dim + j) * rb + b) = bn(i, j);
    }
    return make_bimodule<K>(m.left_base, m.right_base, d, left, right,
                            m.name.empty() && n.name.empty() ? "" : m.name + "+" + n.name);
}

template <field_scalar K>
std::vector<IdentityPair<K>> bimodule_identities(const Bimod<K>& m) {
    Field<K> f = m.field();
    const Algebra<K>& A = *m.left_base;
    const Algebra<K>& B = *m.right_base;
    Mat<K> idm = m.ident();
    Mat<K> ida = Mat<K>::identity(f, A.dim), idb = Mat<K>::identity(f, B.dim);
    std::vector<IdentityPair<K>> ids;
    ids.push_back({"left unitality", m.left_action * kron(A.unit, idm), idm});
    ids.push_back({"left associativity", m.left_action * kron(A.mult, idm),
                   m.left_action * kron(ida, m.left_action)});
    ids.push_back({"right unitality", m.right_action * kron(idm, B.unit), idm});
    ids.push_back({"right associativity", m.right_action * kron(m.right_action, idb),
                   m.right_action * kron(idm, B.mult)});
    ids.push_back({"actions commute", m.right_action * kron(m.left_action, idb),
                   m.left_action * kron(ida, m.right_action)});
    return ids;
}

template <field_scalar K>
Report check_bimodule(const Bimod<K>& m) {
    Report rep;
    rep.command = "check_bimodule " + m.name;
    check_identities(rep, bimodule_identities(m));
    return rep;
}

// Module-axiom check for the side that matters; the scalar side is vacuous.
template <field_scalar K>
Report check_module(const Bimod<K>& m) {
    return check_bimodule(m);
}

}  // namespace hopflab
