// Materialized balanced tensor products M1 (x)_A1 M2 (x)_A2 ... (x) Mr.
//
// Every balanced tensor is presented as an explicit quotient of the plain
// k-linear tensor product of the factors (lexicographic basis), with a chosen
// section. Maps between balanced tensors are always induced from lifts on the
// plain tensor level, and every induction verifies that the lift descends.
// Nothing is ever identified implicitly.

#pragma once

#include "algebra.hpp"

#include <vector>

namespace hopflab {

// A quotient presentation that remembers generators of the divided-out
// subspace, so descent checks stay proportional to the generator count.
template <field_scalar K>
struct QPres {
    QuotientSpace<K> q;
    Mat<K> kernel_gens;  // ambient x g, spanning ker(projection)

    std::size_t ambient() const { return q.ambient(); }
    std::size_t dim() const { return q.dim(); }
};

template <field_scalar K>
QPres<K> trivial_qpres(Field<K> f, std::size_t n) {
    QPres<K> p;
    p.q.projection = Mat<K>::identity(f, n);
    p.q.section = p.q.projection;
    p.kernel_gens = Mat<K>(f, n, 0);
    return p;
}

template <field_scalar K>
QPres<K> qpres_from_subspace(Field<K> f, std::size_t ambient, const Subspace<K>& s) {
    QPres<K> p;
    p.q = quotient_by(f, ambient, s);
    p.kernel_gens = s.basis;
    return p;
}

// Quotient presentation of a plain tensor of two quotients.
template <field_scalar K>
QPres<K> qpres_kron(const QPres<K>& a, const QPres<K>& b) {
    Field<K> f = a.q.projection.field();
    QPres<K> p;
    p.q.projection = kron(a.q.projection, b.q.projection);
    p.q.section = kron(a.q.section, b.q.section);
    std::size_t ga = a.kernel_gens.cols(), gb = b.kernel_gens.cols();
    Mat<K> ia = Mat<K>::identity(f, a.ambient()), ib = Mat<K>::identity(f, b.ambient());
    Mat<K> left = kron(a.kernel_gens, ib);   // ker_a (x) full_b
    Mat<K> right = kron(ia, b.kernel_gens);  // full_a (x) ker_b
    p.kernel_gens = hstack(left, right);
    (void)ga; (void)gb;
    return p;
}

// Induce a map between quotient presentations from a lift on the ambient
// level; verifies the lift descends (maps kernel into kernel).
template <field_scalar K>
Mat<K> induce(const Mat<K>& lift, const QPres<K>& dom, const QPres<K>& cod, bool check = true) {
    if (lift.cols() != dom.ambient() || lift.rows() != cod.ambient())
        throw std::invalid_argument("induce: lift shape mismatch");
    Mat<K> res = cod.q.projection * (lift * dom.q.section);
    if (check) {
        Mat<K> moved = cod.q.projection * (lift * dom.kernel_gens);
        if (!moved.is_zero()) throw std::domain_error("induce: map does not descend to the quotient");
    }
    return res;
}

// Balanced tensor chain with its induced outer bimodule structure.
template <field_scalar K>
struct BalancedChain {
    std::vector<std::size_t> factor_dims;
    QPres<K> pres;   // flat presentation over the full k-tensor of the factors
    Bimod<K> outer;  // quotient as an (A_0, A_r)-bimodule

    std::size_t dim() const { return pres.dim(); }
    const Mat<K>& projection() const { return pres.q.projection; }
    const Mat<K>& section() const { return pres.q.section; }
};

// Generators of the balancing subspace of M (x)_A N inside M (x) N.
template <field_scalar K>
Mat<K> balancing_map(const Bimod<K>& m, const Bimod<K>& n) {
    if (!same_algebra(m.right_base, n.left_base)) throw std::invalid_argument("balancing_map: base mismatch");
    Field<K> f = m.field();
    Mat<K> im = m.ident(), in = n.ident();
    return kron(m.right_action, in) - kron(im, n.left_action);  // M (x) A (x) N -> M (x) N
}

template <field_scalar K>
BalancedChain<K> chain_tensor(const std::vector<const Bimod<K>*>& factors, bool check = true) {
    if (factors.empty()) throw std::invalid_argument("chain_tensor: no factors");
    Field<K> f = factors[0]->field();
    BalancedChain<K> cur;
    cur.factor_dims = {factors[0]->dim};
    cur.pres = trivial_qpres(f, factors[0]->dim);
    cur.outer = *factors[0];
    for (std::size_t t = 1; t < factors.size(); ++t) {
        const Bimod<K>& m = *factors[t];
        if (!same_algebra(cur.outer.right_base, m.left_base))
            throw std::invalid_argument("chain_tensor: junction base mismatch");
        Mat<K> bal = balancing_map(cur.outer, m);
        QPres<K> step = qpres_from_subspace(f, cur.dim() * m.dim, image(bal));
        Mat<K> im = m.ident();
        // induced outer actions on the step quotient, descent verified
        const Algebra<K>& a0 = *cur.outer.left_base;
        const Algebra<K>& ar = *m.right_base;
        Mat<K> l_lift = kron(cur.outer.left_action, im);                        // A0 (x) cur (x) M -> cur (x) M
        Mat<K> r_lift = kron(Mat<K>::identity(f, cur.dim()), m.right_action);   // cur (x) M (x) Ar -> cur (x) M
        Mat<K> new_left = induce(l_lift, qpres_kron(trivial_qpres(f, a0.dim), step), step, check);
        Mat<K> new_right = induce(r_lift, qpres_kron(step, trivial_qpres(f, ar.dim)), step, check);
        // compose the flat presentation over the full k-tensor of all factors
        QPres<K> flat;
        flat.q.projection = step.q.projection * kron(cur.pres.q.projection, im);
        flat.q.section = kron(cur.pres.q.section, im) * step.q.section;
        flat.kernel_gens = hstack(kron(cur.pres.kernel_gens, im),
                                  kron(cur.pres.q.section, im) * step.kernel_gens);
        cur.factor_dims.push_back(m.dim);
        cur.pres = std::move(flat);
        cur.outer = make_bimodule<K>(cur.outer.left_base, m.right_base, step.dim(), new_left, new_right);
    }
    return cur;
}

template <field_scalar K>
BalancedChain<K> tensor_over(const Bimod<K>& m, const Bimod<K>& n, bool check = true) {
    return chain_tensor<K>({&m, &n}, check);
}

// Mutually inverse matrices realizing A (x)_A M ~= M.
template <field_scalar K>
struct IsoPair {
    Mat<K> fwd, bwd;
};

template <field_scalar K>
IsoPair<K> left_unit_iso(const BalancedChain<K>& t, const Bimod<K>& m) {
    // t must be the chain [A_reg, M]
    Field<K> f = m.field();
    const Algebra<K>& a = *m.left_base;
    IsoPair<K> iso;
    iso.fwd = induce(m.left_action, t.pres, trivial_qpres(f, m.dim));
    iso.bwd = t.projection() * kron(a.unit, m.ident());
    if (!(iso.fwd * iso.bwd).is_identity() || !(iso.bwd * iso.fwd).is_identity())
        throw std::logic_error("left_unit_iso: not mutually inverse");
    return iso;
}

template <field_scalar K>
IsoPair<K> right_unit_iso(const BalancedChain<K>& t, const Bimod<K>& m) {
    // t must be the chain [M, A_reg]
    Field<K> f = m.field();
    const Algebra<K>& a = *m.right_base;
    IsoPair<K> iso;
    iso.fwd = induce(m.right_action, t.pres, trivial_qpres(f, m.dim));
    iso.bwd = t.projection() * kron(m.ident(), a.unit);
    if (!(iso.fwd * iso.bwd).is_identity() || !(iso.bwd * iso.fwd).is_identity())
        throw std::logic_error("right_unit_iso: not mutually inverse");
    return iso;
}

}  // namespace hopflab
