// A-rings and A-corings by structure matrices, their axiom checkers, dual
// convolution rings, the tensor-Hom adjunction data, and Hom-monad/comonad
// structure matrices. Comultiplications and multiplications are stored as
// lifts on the plain tensor level; balancedness is part of the axiom check,
// and quotient-level maps are always obtained through the materialized
// projections.

#pragma once

#include "module_ops.hpp"

#include <memory>

namespace hopflab {

template <field_scalar K>
struct Ring {
    Bimod<K> carrier;        // (A,A)-bimodule B
    Mat<K> mu_lift;          // B (x) B -> B
    Mat<K> iota;             // A -> B
    BalancedChain<K> bb;     // B (x)_A B
    std::string name;

    const Field<K>& field() const { return carrier.field(); }
    AlgebraRef<K> base() const { return carrier.left_base; }
    std::size_t dim() const { return carrier.dim; }
    // multiplication on the materialized B (x)_A B (no descent check here;
    // balancedness is an axiom reported by check_a_ring)
    Mat<K> mu() const { return induce(mu_lift, bb.pres, trivial_qpres(field(), dim()), false); }
};

template <field_scalar K>
using RingRef = std::shared_ptr<const Ring<K>>;

template <field_scalar K>
RingRef<K> make_ring(Bimod<K> carrier, Mat<K> mu_lift, Mat<K> iota, std::string name = "") {
    if (!same_algebra(carrier.left_base, carrier.right_base)) throw std::invalid_argument("ring: carrier must be an (A,A)-bimodule");
    if (mu_lift.rows() != carrier.dim || mu_lift.cols() != carrier.dim * carrier.dim)
        throw std::invalid_argument("ring: mu shape");
    if (iota.rows() != carrier.dim || iota.cols() != carrier.left_base->dim)
        throw std::invalid_argument("ring: iota shape");
    auto r = std::make_shared<Ring<K>>();
    r->bb = tensor_over(carrier, carrier, false);
    r->carrier = std::move(carrier);
    r->mu_lift = std::move(mu_lift);
    r->iota = std::move(iota);
    r->name = std::move(name);
    return r;
}

template <field_scalar K>
struct Coring {
    Bimod<K> carrier;        // (A,A)-bimodule C
    Mat<K> delta_lift;       // C -> C (x) C
    Mat<K> eps;              // C -> A
    BalancedChain<K> cc;     // C (x)_A C
    std::string name;

    const Field<K>& field() const { return carrier.field(); }
    AlgebraRef<K> base() const { return carrier.left_base; }
    std::size_t dim() const { return carrier.dim; }
    Mat<K> delta() const { return cc.projection() * delta_lift; }
};

template <field_scalar K>
using CoringRef = std::shared_ptr<const Coring<K>>;

template <field_scalar K>
CoringRef<K> make_coring(Bimod<K> carrier, Mat<K> delta_lift, Mat<K> eps, std::string name = "") {
    if (!same_algebra(carrier.left_base, carrier.right_base)) throw std::invalid_argument("coring: carrier must be an (A,A)-bimodule");
    if (carrier.dim == 0) throw std::invalid_argument("coring: zero coring rejected, counit cannot be counital");
    if (delta_lift.rows() != carrier.dim * carrier.dim || delta_lift.cols() != carrier.dim)
        throw std::invalid_argument("coring: comultiplication shape");
    if (eps.rows() != carrier.left_base->dim || eps.cols() != carrier.dim)
        throw std::invalid_argument("coring: counit shape");
    auto c = std::make_shared<Coring<K>>();
    c->cc = tensor_over(carrier, carrier, false);
    c->carrier = std::move(carrier);
    c->delta_lift = std::move(delta_lift);
    c->eps = std::move(eps);
    c->name = std::move(name);
    return c;
}

// an algebra B as a k-ring (base field as base algebra)
template <field_scalar K>
RingRef<K> ring_over_k(AlgebraRef<K> b) {
    Field<K> f = b->field;
    Bimod<K> carrier = make_bimodule<K>(scalar_algebra(f), scalar_algebra(f), b->dim,
                                        Mat<K>::identity(f, b->dim), Mat<K>::identity(f, b->dim),
                                        b->name);
    return make_ring<K>(std::move(carrier), b->mult, b->unit, b->name);
}

// a coalgebra over the base field as a coring
template <field_scalar K>
CoringRef<K> coring_over_k(Field<K> f, std::size_t dim, Mat<K> comult, Mat<K> counit,
                           std::string name) {
    Bimod<K> carrier = make_bimodule<K>(scalar_algebra(f), scalar_algebra(f), dim,
                                        Mat<K>::identity(f, dim), Mat<K>::identity(f, dim), name);
    return make_coring<K>(std::move(carrier), std::move(comult), std::move(counit), std::move(name));
}

// the trivial ring B = A
template <field_scalar K>
RingRef<K> trivial_ring(AlgebraRef<K> a) {
    Mat<K> mult = a->mult;
    std::string n = a->name;
    return make_ring<K>(regular_bimodule(a), mult, Mat<K>::identity(a->field, a->dim),
                        n + "-trivial-ring");
}

// the trivial A-coring C = A
template <field_scalar K>
CoringRef<K> trivial_coring(AlgebraRef<K> a) {
    Field<K> f = a->field;
    Bimod<K> carrier = regular_bimodule(a);
    // delta lifts the canonical iso A ~= A (x)_A A; a |-> a (x) 1 works
    Mat<K> delta = kron(Mat<K>::identity(f, a->dim), a->unit);
    return make_coring<K>(std::move(carrier), delta, Mat<K>::identity(f, a->dim),
                          a->name + "-trivial");
}

template <field_scalar K>
std::vector<IdentityPair<K>> a_ring_identities(const Ring<K>& r) {
    Field<K> f = r.field();
    const Algebra<K>& a = *r.base();
    const Bimod<K>& b = r.carrier;
    Mat<K> ib = b.ident(), ia = Mat<K>::identity(f, a.dim);
    Mat<K> mu = r.mu();
    std::vector<IdentityPair<K>> ids = bimodule_identities(b);
    ids.push_back({"mu balanced", r.mu_lift * r.bb.pres.kernel_gens,
                   Mat<K>(f, b.dim, r.bb.pres.kernel_gens.cols())});
    ids.push_back({"mu left A-linear", mu * r.bb.outer.left_action,
                   b.left_action * kron(ia, mu)});
    ids.push_back({"mu right A-linear", mu * r.bb.outer.right_action,
                   b.right_action * kron(mu, ia)});
    ids.push_back({"iota left A-linear", r.iota * a.mult, b.left_action * kron(ia, r.iota)});
    ids.push_back({"iota right A-linear", r.iota * a.mult, b.right_action * kron(r.iota, ia)});
    {
        BalancedChain<K> t3 = chain_tensor<K>({&b, &b, &b}, false);
        Mat<K> mu12 = induce(kron(r.mu_lift, ib), t3.pres, r.bb.pres, false);
        Mat<K> mu23 = induce(kron(ib, r.mu_lift), t3.pres, r.bb.pres, false);
        ids.push_back({"associativity", mu * mu12, mu * mu23});
    }
    {
        Bimod<K> areg = regular_bimodule(r.base());
        BalancedChain<K> ab = tensor_over(areg, b, false);
        BalancedChain<K> ba = tensor_over(b, areg, false);
        Mat<K> from_left = mu * induce(kron(r.iota, ib), ab.pres, r.bb.pres, false) *
                           (ab.projection() * kron(a.unit, ib));
        Mat<K> from_right = mu * induce(kron(ib, r.iota), ba.pres, r.bb.pres, false) *
                            (ba.projection() * kron(ib, a.unit));
        ids.push_back({"left unit law", from_left, ib});
        ids.push_back({"right unit law", from_right, ib});
    }
    return ids;
}

template <field_scalar K>
Report check_a_ring(const Ring<K>& r) {
    Report rep;
    rep.command = "check_a_ring " + r.name;
    check_identities(rep, a_ring_identities(r));
    return rep;
}

template <field_scalar K>
std::vector<IdentityPair<K>> coring_identities(const Coring<K>& c) {
    Field<K> f = c.field();
    const Algebra<K>& a = *c.base();
    const Bimod<K>& cb = c.carrier;
    Mat<K> ic = cb.ident(), ia = Mat<K>::identity(f, a.dim);
    Mat<K> delta = c.delta();
    std::vector<IdentityPair<K>> ids = bimodule_identities(cb);
    ids.push_back({"delta left A-linear", delta * cb.left_action,
                   c.cc.outer.left_action * kron(ia, delta)});
    ids.push_back({"delta right A-linear", delta * cb.right_action,
                   c.cc.outer.right_action * kron(delta, ia)});
    ids.push_back({"eps left A-linear", c.eps * cb.left_action, a.mult * kron(ia, c.eps)});
    ids.push_back({"eps right A-linear", c.eps * cb.right_action, a.mult * kron(c.eps, ia)});
    {
        BalancedChain<K> t3 = chain_tensor<K>({&cb, &cb, &cb}, false);
        Mat<K> d12 = induce(kron(c.delta_lift, ic), c.cc.pres, t3.pres, false);
        Mat<K> d23 = induce(kron(ic, c.delta_lift), c.cc.pres, t3.pres, false);
        ids.push_back({"coassociativity", d12 * delta, d23 * delta});
    }
    {
        Bimod<K> areg = regular_bimodule(c.base());
        BalancedChain<K> ac = tensor_over(areg, cb, false);
        BalancedChain<K> ca = tensor_over(cb, areg, false);
        Mat<K> left_iso = induce(cb.left_action, ac.pres, trivial_qpres(f, cb.dim), false);
        Mat<K> right_iso = induce(cb.right_action, ca.pres, trivial_qpres(f, cb.dim), false);
        Mat<K> l = left_iso * induce(kron(c.eps, ic), c.cc.pres, ac.pres, false) * delta;
        Mat<K> r = right_iso * induce(kron(ic, c.eps), c.cc.pres, ca.pres, false) * delta;
        ids.push_back({"left counit law", l, ic});
        ids.push_back({"right counit law", r, ic});
    }
    return ids;
}

template <field_scalar K>
Report check_coring(const Coring<K>& c) {
    Report rep;
    rep.command = "check_coring " + c.name;
    check_identities(rep, coring_identities(c));
    return rep;
}

// ---------------------------------------------------------------------------
// Convolution rings on the duals of a coring.
//
// Right dual C* = Hom_{-,A}(C, A) with (f*g)(c) = f(g(c_1) c_2);
// left dual *C = Hom_{A,-}(C, A) with (f*g)(c) = g(c_1 f(c_2)).
// ---------------------------------------------------------------------------

template <field_scalar K>
struct ConvolutionRing {
    RingRef<K> ring;
    HomSpace<K> dual_space;  // the Hom-space carrying the ring
};

template <field_scalar K>
ConvolutionRing<K> convolution_ring(const Coring<K>& c, Side side) {
    Field<K> f = c.field();
    const Bimod<K>& cb = c.carrier;
    const Algebra<K>& a = *c.base();
    Bimod<K> areg = regular_bimodule(c.base());
    HomModule<K> dual = side == Side::right ? hom_module_right(cb, areg, c.name + "*")
                                            : hom_module_left(cb, areg, "*" + c.name);
    std::size_t d = dual.space.dim();
    Mat<K> delta = c.delta();
    Mat<K> mu_lift(f, d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        Mat<K> fi = dual.space.basis_map(i);
        for (std::size_t j = 0; j < d; ++j) {
            Mat<K> gj = dual.space.basis_map(j);
            Mat<K> prod;
            if (side == Side::right) {
                // c |-> f( g(c_1) . c_2 ), through C(x)_A C -> A(x)C -> C
                Mat<K> gi_lift = kron(gj, cb.ident());  // C (x) C -> A (x) C
                Mat<K> to_c = cb.left_action * gi_lift * c.cc.section();
                prod = fi * to_c * delta;
            } else {
                // c |-> g( c_1 . f(c_2) )
                Mat<K> fi_lift = kron(cb.ident(), fi);  // C (x) C -> C (x) A
                Mat<K> to_c = cb.right_action * fi_lift * c.cc.section();
                prod = gj * to_c * delta;
            }
            mu_lift.set_col(i * d + j, dual.space.coords_of_or_throw(prod, "convolution product"));
        }
    }
    Mat<K> iota(f, d, a.dim);
    for (std::size_t j = 0; j < a.dim; ++j) {
        Mat<K> aj = Mat<K>::basis_vec(f, a.dim, j);
        Mat<K> elt = side == Side::right ? Mat<K>(a.lmul(aj) * c.eps) : Mat<K>(a.rmul(aj) * c.eps);
        iota.set_col(j, dual.space.coords_of_or_throw(elt, "convolution unit"));
    }
    ConvolutionRing<K> res;
    res.ring = make_ring<K>(dual.mod, mu_lift, iota,
                            side == Side::right ? c.name + "*" : "*" + c.name);
    res.dual_space = dual.space;
    return res;
}

// ---------------------------------------------------------------------------
// The adjunction  - (x)_A B  -|  Hom_A(B, -)  on right A-modules.
// ---------------------------------------------------------------------------

// data of the unit eta_X : X -> Hom_A(B, X (x)_A B), x |-> [b |-> x (x) b]
template <field_scalar K>
struct AdjunctionUnit {
    BalancedChain<K> xb;      // X (x)_A B
    HomModule<K> hom;         // Hom_A(B, X (x)_A B)
    Mat<K> eta;               // X -> Hom-coords
};

template <field_scalar K>
AdjunctionUnit<K> adjunction_unit(const Bimod<K>& x, const Bimod<K>& b) {
    Field<K> f = x.field();
    AdjunctionUnit<K> u;
    u.xb = tensor_over(x, b);
    u.hom = hom_module_right(b, u.xb.outer);
    u.eta = Mat<K>(f, u.hom.space.dim(), x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        Mat<K> comp = u.xb.projection() * kron(Mat<K>::basis_vec(f, x.dim, i), b.ident());
        u.eta.set_col(i, u.hom.space.coords_of_or_throw(comp, "adjunction unit"));
    }
    return u;
}

// data of the counit eps_N : Hom_A(B,N) (x)_A B -> N, f (x) b |-> f(b)
template <field_scalar K>
struct AdjunctionCounit {
    HomModule<K> hom;         // Hom_A(B, N)
    BalancedChain<K> hb;      // Hom_A(B,N) (x)_A B
    Mat<K> eps;               // Hom_A(B,N) (x)_A B -> N
};

template <field_scalar K>
AdjunctionCounit<K> adjunction_counit(const Bimod<K>& n, const Bimod<K>& b) {
    AdjunctionCounit<K> c;
    c.hom = hom_module_right(b, n);
    c.hb = tensor_over(c.hom.mod, b);
    Mat<K> ev = evaluation_lift(c.hom.space);
    c.eps = induce(ev, c.hb.pres, trivial_qpres(n.field(), n.dim));
    return c;
}

// both triangle identities of the adjunction at one probe X (resp. N)
template <field_scalar K>
std::vector<IdentityPair<K>> triangle_identities(const Bimod<K>& x, const Bimod<K>& b) {
    Field<K> f = x.field();
    std::vector<IdentityPair<K>> ids;
    AdjunctionUnit<K> u = adjunction_unit(x, b);
    {
        // (eps at X(x)B) . (eta_X (x) id_B) = id on X (x)_A B
        AdjunctionCounit<K> c = adjunction_counit(u.xb.outer, b);
        // eta (x) id descends X (x)_A B -> Hom (x)_A B when eta is A-linear;
        // both sides presented on the materialized quotients
        Mat<K> lift = kron(u.eta, b.ident());
        Mat<K> etab = induce(lift, u.xb.pres, c.hb.pres);
        ids.push_back({"triangle 1", c.eps * etab, Mat<K>::identity(f, u.xb.dim())});
    }
    {
        // Hom(B, eps_X) . eta_{Hom(B,X)} = id on Hom_A(B, X)
        AdjunctionCounit<K> c = adjunction_counit(x, b);
        AdjunctionUnit<K> u2 = adjunction_unit(c.hom.mod, b);
        Mat<K> post = postcompose_op(u2.hom.space, c.hom.space, c.eps);
        ids.push_back({"triangle 2", post * u2.eta, Mat<K>::identity(f, c.hom.space.dim())});
    }
    return ids;
}

// ---------------------------------------------------------------------------
// Hom-monad data of a coring and Hom-comonad data of a ring.
// ---------------------------------------------------------------------------

// explicit currying isomorphism Hom_A(C (x)_A C, X) ~= Hom_A(C, Hom_A(C, X))
template <field_scalar K>
struct CurryIso {
    HomModule<K> inner;    // Hom_A(C, X)
    HomModule<K> outer;    // Hom_A(C, Hom_A(C, X))
    HomModule<K> paired;   // Hom_A(C (x)_A C, X)
    Mat<K> curry;          // paired -> outer
    Mat<K> uncurry;        // outer -> paired
};

template <field_scalar K>
CurryIso<K> curry_iso(const Coring<K>& c, const Bimod<K>& x) {
    Field<K> f = x.field();
    const Bimod<K>& cb = c.carrier;
    CurryIso<K> ci;
    ci.inner = hom_module_right(cb, x);
    ci.outer = hom_module_right(cb, ci.inner.mod);
    ci.paired = hom_module_right(c.cc.outer, x);
    ci.curry = Mat<K>(f, ci.outer.space.dim(), ci.paired.space.dim());
    for (std::size_t t = 0; t < ci.paired.space.dim(); ++t) {
        Mat<K> hhat = ci.paired.space.basis_map(t);  // T2 -> X
        Mat<K> h(f, ci.inner.space.dim(), cb.dim);
        for (std::size_t cidx = 0; cidx < cb.dim; ++cidx) {
            // [c' |-> hhat(pi(e_c (x) c'))]
            Mat<K> comp = hhat * c.cc.projection() * kron(Mat<K>::basis_vec(f, cb.dim, cidx), cb.ident());
            h.set_col(cidx, ci.inner.space.coords_of_or_throw(comp, "curry"));
        }
        ci.curry.set_col(t, ci.outer.space.coords_of_or_throw(h, "curry outer"));
    }
    ci.uncurry = Mat<K>(f, ci.paired.space.dim(), ci.outer.space.dim());
    Mat<K> ev = evaluation_lift(ci.inner.space);  // inner-coords (x) C -> X
    for (std::size_t t = 0; t < ci.outer.space.dim(); ++t) {
        Mat<K> h = ci.outer.space.basis_map(t);  // C -> inner-coords
        Mat<K> hhat = ev * kron(h, cb.ident()) * c.cc.section();
        ci.uncurry.set_col(t, ci.paired.space.coords_of_or_throw(hhat, "uncurry"));
    }
    if (!(ci.curry * ci.uncurry).is_identity() || !(ci.uncurry * ci.curry).is_identity())
        throw std::logic_error("curry_iso: not mutually inverse");
    return ci;
}

// monad ([C,-], [Delta,-], [eps,-]) evaluated at X
template <field_scalar K>
struct HomMonadData {
    CurryIso<K> spaces;
    Mat<K> product;  // Hom_A(C, Hom_A(C,X)) -> Hom_A(C,X)
    Mat<K> unit;     // X -> Hom_A(C,X)
};

template <field_scalar K>
HomMonadData<K> hom_monad_data(const Coring<K>& c, const Bimod<K>& x) {
    Field<K> f = x.field();
    HomMonadData<K> d{curry_iso(c, x), Mat<K>(), Mat<K>()};
    Mat<K> delta = c.delta();
    // product: uncurry then precompose with Delta
    Mat<K> pre(f, d.spaces.inner.space.dim(), d.spaces.paired.space.dim());
    for (std::size_t t = 0; t < d.spaces.paired.space.dim(); ++t) {
        Mat<K> hhat = d.spaces.paired.space.basis_map(t);
        pre.set_col(t, d.spaces.inner.space.coords_of_or_throw(hhat * delta, "monad product"));
    }
    d.product = pre * d.spaces.uncurry;
    // unit: x |-> [c |-> x . eps(c)]
    d.unit = Mat<K>(f, d.spaces.inner.space.dim(), x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        Mat<K> comp = x.right_action * kron(Mat<K>::basis_vec(f, x.dim, i), c.eps);
        d.unit.set_col(i, d.spaces.inner.space.coords_of_or_throw(comp, "monad unit"));
    }
    return d;
}

// comonad ([B,-], [mu,-], [iota,-]) evaluated at X
template <field_scalar K>
struct HomComonadData {
    HomModule<K> inner;    // Hom_A(B, X)
    HomModule<K> outer;    // Hom_A(B, Hom_A(B,X))
    Mat<K> coproduct;      // inner -> outer
    Mat<K> counit;         // inner -> X
};

template <field_scalar K>
HomComonadData<K> hom_comonad_data(const Ring<K>& r, const Bimod<K>& x) {
    Field<K> f = x.field();
    const Bimod<K>& b = r.carrier;
    HomComonadData<K> d;
    d.inner = hom_module_right(b, x);
    d.outer = hom_module_right(b, d.inner.mod);
    Mat<K> mu = r.mu();
    d.coproduct = Mat<K>(f, d.outer.space.dim(), d.inner.space.dim());
    for (std::size_t t = 0; t < d.inner.space.dim(); ++t) {
        Mat<K> fm = d.inner.space.basis_map(t);  // B -> X
        Mat<K> fmu = fm * mu;                    // B (x)_A B -> X
        // curry: [b |-> [b' |-> f(b b')]]
        Mat<K> h(f, d.inner.space.dim(), b.dim);
        for (std::size_t bi = 0; bi < b.dim; ++bi) {
            Mat<K> comp = fmu * r.bb.projection() * kron(Mat<K>::basis_vec(f, b.dim, bi), b.ident());
            h.set_col(bi, d.inner.space.coords_of_or_throw(comp, "comonad coproduct"));
        }
        d.coproduct.set_col(t, d.outer.space.coords_of_or_throw(h, "comonad coproduct outer"));
    }
    d.counit = Mat<K>(f, x.dim, d.inner.space.dim());
    for (std::size_t t = 0; t < d.inner.space.dim(); ++t)
        d.counit.set_col(t, d.inner.space.basis_map(t) * r.iota * r.base()->unit);
    return d;
}

// monad laws of hom_monad_data at probe X (associativity needs one more level)
template <field_scalar K>
std::vector<IdentityPair<K>> hom_monad_law_identities(const Coring<K>& c, const Bimod<K>& x) {
    HomMonadData<K> dx = hom_monad_data(c, x);
    HomMonadData<K> dhx = hom_monad_data(c, dx.spaces.inner.mod);
    // [C, m_X] : Hom(C, Hom(C, Hom(C,X))) -> Hom(C, Hom(C,X)) is
    // post-composition with m_X on the outer level of dhx
    Mat<K> hom_c_m = postcompose_op(dhx.spaces.outer.space, dx.spaces.outer.space, dx.product);
    Mat<K> id_inner = Mat<K>::identity(x.field(), dx.spaces.inner.space.dim());
    std::vector<IdentityPair<K>> ids;
    ids.push_back({"monad associativity", dx.product * hom_c_m, dx.product * dhx.product});
    ids.push_back({"monad unit (free)", dx.product * dhx.unit, id_inner});
    Mat<K> hom_c_unit = postcompose_op(dx.spaces.inner.space, dx.spaces.outer.space, dx.unit);
    ids.push_back({"monad unit (cofree)", dx.product * hom_c_unit, id_inner});
    return ids;
}

// comonad laws of hom_comonad_data at probe X
template <field_scalar K>
std::vector<IdentityPair<K>> hom_comonad_law_identities(const Ring<K>& r, const Bimod<K>& x) {
    HomComonadData<K> dx = hom_comonad_data(r, x);
    HomComonadData<K> dhx = hom_comonad_data(r, dx.inner.mod);
    Mat<K> hom_b_d = postcompose_op(dx.outer.space, dhx.outer.space, dx.coproduct);
    Mat<K> id_inner = Mat<K>::identity(x.field(), dx.inner.space.dim());
    std::vector<IdentityPair<K>> ids;
    ids.push_back({"comonad coassociativity", hom_b_d * dx.coproduct, dhx.coproduct * dx.coproduct});
    ids.push_back({"comonad counit (free)", dhx.counit * dx.coproduct, id_inner});
    Mat<K> hom_b_e = postcompose_op(dx.outer.space, dx.inner.space, dx.counit);
    ids.push_back({"comonad counit (cofree)", hom_b_e * dx.coproduct, id_inner});
    return ids;
}

// ---------------------------------------------------------------------------
// Probe families.
// ---------------------------------------------------------------------------

template <field_scalar K>
struct ProbeFamily {
    std::vector<std::pair<std::string, Bimod<K>>> probes;  // right A-modules
};

// default family {A, A+A, ..., A^budget, A*, carrier}
template <field_scalar K>
ProbeFamily<K> default_probe_family(AlgebraRef<K> a, const Bimod<K>& carrier_as_right,
                                    std::size_t budget = 2) {
    ProbeFamily<K> p;
    Bimod<K> reg = regular_right_module(a);
    p.probes.emplace_back("A", reg);
    Bimod<K> acc = reg;
    for (std::size_t s = 2; s <= budget; ++s) {
        acc = direct_sum(acc, reg);
        p.probes.emplace_back("A^" + std::to_string(s), acc);
    }
    p.probes.emplace_back("A*", dual_right_module(a));
    p.probes.emplace_back("carrier", carrier_as_right);
    return p;
}

// the carrier of a bimodule, viewed as a plain right module
template <field_scalar K>
Bimod<K> as_right_module(const Bimod<K>& m) {
    return right_module(m.right_base, m.dim, m.right_action, m.name);
}

template <field_scalar K>
Bimod<K> as_left_module(const Bimod<K>& m) {
    return left_module(m.left_base, m.dim, m.left_action, m.name);
}

// ---------------------------------------------------------------------------
// Yoneda reduction and mates.
// ---------------------------------------------------------------------------

// A natural transformation - (x)_A B -> - (x)_A B' presented by components at
// probes. Components are matrices between the materialized X (x)_A B spaces.
template <field_scalar K>
struct TensorNatComponents {
    const Bimod<K>* b = nullptr;
    const Bimod<K>* b2 = nullptr;
    std::vector<std::string> probe_names;
    std::vector<Bimod<K>> probe_mods;
    std::vector<Mat<K>> components;  // X (x)_A B -> X (x)_A B' on quotient coords
};

template <field_scalar K>
struct YonedaResult {
    std::optional<Mat<K>> phi;  // B -> B', bimodule map
    Report report;
};

// extract phi_A from the component at A and verify every other component
template <field_scalar K>
YonedaResult<K> yoneda_reduce(const TensorNatComponents<K>& nat) {
    YonedaResult<K> res;
    res.report.command = "yoneda_reduce";
    const Bimod<K>& b = *nat.b;
    const Bimod<K>& b2 = *nat.b2;
    Field<K> f = b.field();
    AlgebraRef<K> a = b.left_base;
    Bimod<K> areg = regular_bimodule(a);
    // locate the probe named "A"
    std::size_t ai = nat.probe_names.size();
    for (std::size_t i = 0; i < nat.probe_names.size(); ++i)
        if (nat.probe_names[i] == "A") ai = i;
    if (ai == nat.probe_names.size()) {
        res.report.add("component at A present", false);
        return res;
    }
    BalancedChain<K> ab = tensor_over(areg, b);
    BalancedChain<K> ab2 = tensor_over(areg, b2);
    IsoPair<K> ub = left_unit_iso(ab, b);
    IsoPair<K> ub2 = left_unit_iso(ab2, b2);
    Mat<K> phi = ub2.fwd * nat.components[ai] * ub.bwd;
    HomSpace<K> bimod_maps = hom_bilinear(b, b2);
    bool bilinear = bimod_maps.coords_of(phi).has_value();
    res.report.add("phi_A is a bimodule map", bilinear);
    if (!bilinear) return res;
    for (std::size_t i = 0; i < nat.probe_names.size(); ++i) {
        const Bimod<K>& x = nat.probe_mods[i];
        BalancedChain<K> xb = tensor_over(x, b);
        BalancedChain<K> xb2 = tensor_over(x, b2);
        Mat<K> expected = induce(kron(x.ident(), phi), xb.pres, xb2.pres);
        check_identity(res.report, IdentityPair<K>{"component at " + nat.probe_names[i],
                                                   nat.components[i], expected});
    }
    if (res.report.passed()) res.phi = phi;
    return res;
}

// Mate of a bimodule map phi : B -> B' under the tensor-Hom adjunctions:
// components Hom_A(B', X) -> Hom_A(B, X) at every probe, computed both
// directly as Hom(phi, X) and through the unit/counit composite; the double
// mate is compared against - (x) phi.
template <field_scalar K>
struct MateResult {
    std::vector<Mat<K>> components;  // per probe, on Hom-space coordinates
    std::vector<HomSpace<K>> dom_spaces, cod_spaces;
    Report report;
};

template <field_scalar K>
MateResult<K> mate_of_bimodule_map(const Bimod<K>& b, const Bimod<K>& b2, const Mat<K>& phi,
                                   const ProbeFamily<K>& probes) {
    MateResult<K> res;
    res.report.command = "mate_of_bimodule_map";
    Field<K> f = b.field();
    if (!hom_bilinear(b, b2).coords_of(phi)) {
        res.report.add("phi is a bimodule map", false);
        return res;
    }
    res.report.add("phi is a bimodule map", true);
    for (const auto& [name, x] : probes.probes) {
        HomModule<K> hb2 = hom_module_right(b2, x);
        HomModule<K> hb = hom_module_right(b, x);
        Mat<K> direct = precompose_op(hb2.space, hb.space, phi);
        // composite R eps~ . R f R~ . eta R~ evaluated at X
        AdjunctionUnit<K> u = adjunction_unit(hb2.mod, b);       // eta at R~X
        AdjunctionCounit<K> ce = adjunction_counit(x, b2);       // eps~ at X
        // R f R~ : Hom_A(B, R~X (x)_A B) -> Hom_A(B, R~X (x)_A B')
        BalancedChain<K> rb2 = tensor_over(hb2.mod, b2);
        Mat<K> fmap = induce(kron(Mat<K>::identity(f, hb2.space.dim()), phi), u.xb.pres, rb2.pres);
        HomModule<K> hom_rb2 = hom_module_right(b, rb2.outer);
        Mat<K> rfr = postcompose_op(u.hom.space, hom_rb2.space, fmap);
        // R eps~ : Hom_A(B, R~X (x)_A B') -> Hom_A(B, X); eps~ descends on rb2
        Mat<K> eps2 = induce(evaluation_lift(hb2.space), rb2.pres, trivial_qpres(f, x.dim));
        Mat<K> reps = postcompose_op(hom_rb2.space, hb.space, eps2);
        Mat<K> composite = reps * rfr * u.eta;
        check_identity(res.report,
                       IdentityPair<K>{"mate composite agrees at " + name, composite, direct});
        // double mate: eps L~ . L mate L~ . L eta~ must equal X (x) phi
        AdjunctionUnit<K> u2 = adjunction_unit(x, b2);  // eta~_X : X -> Hom(B', X (x) B')
        BalancedChain<K> xb = tensor_over(x, b);
        BalancedChain<K> xb2 = tensor_over(x, b2);
        BalancedChain<K> hb2_b = tensor_over(u2.hom.mod, b);
        Mat<K> l_eta = induce(kron(u2.eta, b.ident()), xb.pres, hb2_b.pres);
        HomModule<K> hbx2 = hom_module_right(b, u2.xb.outer);
        BalancedChain<K> hbx2_b = tensor_over(hbx2.mod, b);
        Mat<K> mate_at_l = precompose_op(u2.hom.space, hbx2.space, phi);
        Mat<K> l_mate = induce(kron(mate_at_l, b.ident()), hb2_b.pres, hbx2_b.pres);
        Mat<K> eps_l = induce(evaluation_lift(hbx2.space), hbx2_b.pres,
                              trivial_qpres(f, u2.xb.dim()));
        Mat<K> dbl = eps_l * l_mate * l_eta;
        Mat<K> expected = induce(kron(x.ident(), phi), xb.pres, xb2.pres);
        check_identity(res.report,
                       IdentityPair<K>{"double mate equals phi at " + name, dbl, expected});
        res.components.push_back(direct);
        res.dom_spaces.push_back(hb2.space);
        res.cod_spaces.push_back(hb.space);
    }
    return res;
}

}  // namespace hopflab
