// Bialgebras over the base field, the two canonical entwinings, entwining
// axioms over an arbitrary base ring, the entwined corings, Hopf modules and
// Hopf contramodules with their conversions, distributive-law probing, and
// the antipode and Galois-map solvers.

#pragma once

#include "equivalence.hpp"
#include "examples.hpp"

namespace hopflab {

template <field_scalar K>
struct Bialgebra {
    AlgebraRef<K> alg;
    Mat<K> comult;   // H -> H (x) H
    Mat<K> counit;   // H -> k
    std::string name;

    const Field<K>& field() const { return alg->field; }
    std::size_t dim() const { return alg->dim; }
    Mat<K> ident() const { return Mat<K>::identity(alg->field, alg->dim); }
};

template <field_scalar K>
using BialgebraRef = std::shared_ptr<const Bialgebra<K>>;

template <field_scalar K>
BialgebraRef<K> make_bialgebra(AlgebraRef<K> alg, Mat<K> comult, Mat<K> counit,
                               std::string name = "") {
    std::size_t n = alg->dim;
    if (comult.rows() != n * n || comult.cols() != n) throw std::invalid_argument("bialgebra: comult shape");
    if (counit.rows() != 1 || counit.cols() != n) throw std::invalid_argument("bialgebra: counit shape");
    auto h = std::make_shared<Bialgebra<K>>();
    h->alg = std::move(alg);
    h->comult = std::move(comult);
    h->counit = std::move(counit);
    h->name = std::move(name);
    return h;
}

template <field_scalar K>
BialgebraRef<K> make_bialgebra(const BialgebraData<K>& d) {
    return make_bialgebra(d.alg, d.comult, d.counit, d.name);
}

// psi_r(a (x) b) = b_1 (x) a b_2 and psi_l(a (x) b) = a_1 b (x) a_2
template <field_scalar K>
Mat<K> psi_r_map(const Bialgebra<K>& h) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> id = h.ident();
    return kron(id, h.alg->mult) * kron(twist(f, n, n), id) * kron(id, h.comult);
}

template <field_scalar K>
Mat<K> psi_l_map(const Bialgebra<K>& h) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> id = h.ident();
    return kron(h.alg->mult, id) * kron(id, twist(f, n, n)) * kron(h.comult, id);
}

template <field_scalar K>
std::vector<IdentityPair<K>> bialgebra_identities(const Bialgebra<K>& h) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> id = h.ident();
    const Algebra<K>& a = *h.alg;
    std::vector<IdentityPair<K>> ids = algebra_identities(a);
    ids.push_back({"coassociativity", kron(h.comult, id) * h.comult, kron(id, h.comult) * h.comult});
    ids.push_back({"left counit law", kron(h.counit, id) * h.comult, id});
    ids.push_back({"right counit law", kron(id, h.counit) * h.comult, id});
    ids.push_back({"bialgebra compatibility", h.comult * a.mult,
                   kron(a.mult, id) * kron(id, psi_r_map(h)) * kron(h.comult, id)});
    ids.push_back({"counit multiplicative", h.counit * a.mult, kron(h.counit, h.counit)});
    ids.push_back({"counit unital", h.counit * a.unit, Mat<K>::identity(f, 1)});
    ids.push_back({"comult of unit", h.comult * a.unit, kron(a.unit, a.unit)});
    return ids;
}

template <field_scalar K>
Report check_bialgebra(const Bialgebra<K>& h) {
    Report rep;
    rep.command = "check_bialgebra " + h.name;
    check_identities(rep, bialgebra_identities(h));
    return rep;
}

// the carrier coalgebra / algebra of a bialgebra as coring / ring over k
template <field_scalar K>
CoringRef<K> coalgebra_of(const Bialgebra<K>& h) {
    Mat<K> cm = h.comult, cu = h.counit;
    return coring_over_k(h.field(), h.dim(), cm, cu, h.name + "-coalg");
}

template <field_scalar K>
RingRef<K> algebra_of(const Bialgebra<K>& h) {
    return ring_over_k(h.alg);
}

// ---------------------------------------------------------------------------
// Entwinings between an A-ring and an A-coring.
// Flavor l: psi : B (x)_A C -> C (x)_A B; flavor r: psi : C (x)_A B -> B (x)_A C.
// ---------------------------------------------------------------------------

template <field_scalar K>
struct Entwining {
    RingRef<K> ring;
    CoringRef<K> coring;
    Side flavor;      // Side::left or Side::right as above
    Mat<K> psi_lift;  // between the plain tensor products
    std::string name;
};

template <field_scalar K>
Entwining<K> make_entwining(RingRef<K> b, CoringRef<K> c, Side flavor, Mat<K> psi_lift,
                            std::string name = "") {
    std::size_t bd = b->dim(), cd = c->dim();
    if (psi_lift.rows() != bd * cd && psi_lift.rows() != cd * bd)
        throw std::invalid_argument("entwining: psi shape");
    if (flavor == Side::left) {
        if (psi_lift.rows() != cd * bd || psi_lift.cols() != bd * cd)
            throw std::invalid_argument("entwining: psi shape (left flavor)");
    } else {
        if (psi_lift.rows() != bd * cd || psi_lift.cols() != cd * bd)
            throw std::invalid_argument("entwining: psi shape (right flavor)");
    }
    return Entwining<K>{std::move(b), std::move(c), flavor, std::move(psi_lift), std::move(name)};
}

// entwinings attached to a bialgebra
template <field_scalar K>
Entwining<K> build_psi(const Bialgebra<K>& h, Side flavor) {
    return make_entwining<K>(algebra_of(h), coalgebra_of(h), flavor,
                             flavor == Side::right ? psi_r_map(h) : psi_l_map(h),
                             h.name + (flavor == Side::right ? "-psi_r" : "-psi_l"));
}

template <field_scalar K>
std::vector<IdentityPair<K>> entwining_identities(const Entwining<K>& e) {
    const Ring<K>& b = *e.ring;
    const Coring<K>& c = *e.coring;
    Field<K> f = b.field();
    const Bimod<K>& bb = b.carrier;
    const Bimod<K>& cb = c.carrier;
    Mat<K> ib = bb.ident(), ic = cb.ident();
    std::vector<IdentityPair<K>> ids;
    if (e.flavor == Side::left) {
        BalancedChain<K> bc = tensor_over(bb, cb, false);
        BalancedChain<K> cbch = tensor_over(cb, bb, false);
        Mat<K> psi = induce(e.psi_lift, bc.pres, cbch.pres, false);
        ids.push_back({"psi A-bilinear (left)", psi * bc.outer.left_action,
                       cbch.outer.left_action * kron(Mat<K>::identity(f, b.base()->dim), psi)});
        ids.push_back({"psi A-bilinear (right)", psi * bc.outer.right_action,
                       cbch.outer.right_action * kron(psi, Mat<K>::identity(f, b.base()->dim))});
        {
            BalancedChain<K> bbc = chain_tensor<K>({&bb, &bb, &cb}, false);
            BalancedChain<K> bcb = chain_tensor<K>({&bb, &cb, &bb}, false);
            BalancedChain<K> cbb = chain_tensor<K>({&cb, &bb, &bb}, false);
            Mat<K> mu_c = induce(kron(b.mu_lift, ic), bbc.pres, bc.pres, false);
            Mat<K> i_psi = induce(kron(ib, e.psi_lift), bbc.pres, bcb.pres, false);
            Mat<K> psi_i = induce(kron(e.psi_lift, ib), bcb.pres, cbb.pres, false);
            Mat<K> c_mu = induce(kron(ic, b.mu_lift), cbb.pres, cbch.pres, false);
            ids.push_back({"psi respects multiplication", psi * mu_c, c_mu * psi_i * i_psi});
        }
        {
            // psi . (iota (x) I_C) = I_C (x) iota through the unit isomorphisms
            Bimod<K> areg = regular_bimodule(b.base());
            BalancedChain<K> ac = tensor_over(areg, cb, false);
            BalancedChain<K> ca = tensor_over(cb, areg, false);
            Mat<K> from = induce(kron(b.iota, ic), ac.pres, bc.pres, false) *
                          (ac.projection() * kron(b.base()->unit, ic));
            Mat<K> to = induce(kron(ic, b.iota), ca.pres, cbch.pres, false) *
                        (ca.projection() * kron(ic, b.base()->unit));
            ids.push_back({"psi respects unit", psi * from, to});
        }
        {
            BalancedChain<K> bcc = chain_tensor<K>({&bb, &cb, &cb}, false);
            BalancedChain<K> cbc = chain_tensor<K>({&cb, &bb, &cb}, false);
            BalancedChain<K> ccb = chain_tensor<K>({&cb, &cb, &bb}, false);
            Mat<K> delta_b = induce(kron(c.delta_lift, ib), cbch.pres, ccb.pres, false);
            Mat<K> b_delta = induce(kron(ib, c.delta_lift), bc.pres, bcc.pres, false);
            Mat<K> psi_c = induce(kron(e.psi_lift, ic), bcc.pres, cbc.pres, false);
            Mat<K> c_psi = induce(kron(ic, e.psi_lift), cbc.pres, ccb.pres, false);
            ids.push_back({"psi respects comultiplication", delta_b * psi, c_psi * psi_c * b_delta});
        }
        {
            Bimod<K> areg = regular_bimodule(b.base());
            BalancedChain<K> ab = tensor_over(areg, bb, false);
            BalancedChain<K> ba = tensor_over(bb, areg, false);
            Mat<K> left_unit = induce(bb.left_action, ab.pres, trivial_qpres(f, bb.dim), false);
            Mat<K> right_unit = induce(bb.right_action, ba.pres, trivial_qpres(f, bb.dim), false);
            Mat<K> lhs = left_unit * induce(kron(c.eps, ib), cbch.pres, ab.pres, false) * psi;
            Mat<K> rhs = right_unit * induce(kron(ib, c.eps), bc.pres, ba.pres, false);
            ids.push_back({"psi respects counit", lhs, rhs});
        }
    } else {
        BalancedChain<K> cbch = tensor_over(cb, bb, false);
        BalancedChain<K> bc = tensor_over(bb, cb, false);
        Mat<K> psi = induce(e.psi_lift, cbch.pres, bc.pres, false);
        ids.push_back({"psi A-bilinear (left)", psi * cbch.outer.left_action,
                       bc.outer.left_action * kron(Mat<K>::identity(f, b.base()->dim), psi)});
        ids.push_back({"psi A-bilinear (right)", psi * cbch.outer.right_action,
                       bc.outer.right_action * kron(psi, Mat<K>::identity(f, b.base()->dim))});
        {
            BalancedChain<K> cbb = chain_tensor<K>({&cb, &bb, &bb}, false);
            BalancedChain<K> bcb = chain_tensor<K>({&bb, &cb, &bb}, false);
            BalancedChain<K> bbc = chain_tensor<K>({&bb, &bb, &cb}, false);
            Mat<K> c_mu = induce(kron(ic, b.mu_lift), cbb.pres, cbch.pres, false);
            Mat<K> psi_b = induce(kron(e.psi_lift, ib), cbb.pres, bcb.pres, false);
            Mat<K> b_psi = induce(kron(ib, e.psi_lift), bcb.pres, bbc.pres, false);
            Mat<K> mu_c = induce(kron(b.mu_lift, ic), bbc.pres, bc.pres, false);
            ids.push_back({"psi respects multiplication", psi * c_mu, mu_c * b_psi * psi_b});
        }
        {
            Bimod<K> areg = regular_bimodule(b.base());
            BalancedChain<K> ca = tensor_over(cb, areg, false);
            BalancedChain<K> ac = tensor_over(areg, cb, false);
            Mat<K> from = induce(kron(ic, b.iota), ca.pres, cbch.pres, false) *
                          (ca.projection() * kron(ic, b.base()->unit));
            Mat<K> to = induce(kron(b.iota, ic), ac.pres, bc.pres, false) *
                        (ac.projection() * kron(b.base()->unit, ic));
            ids.push_back({"psi respects unit", psi * from, to});
        }
        {
            BalancedChain<K> ccb = chain_tensor<K>({&cb, &cb, &bb}, false);
            BalancedChain<K> cbc = chain_tensor<K>({&cb, &bb, &cb}, false);
            BalancedChain<K> bcc = chain_tensor<K>({&bb, &cb, &cb}, false);
            Mat<K> b_delta = induce(kron(ib, c.delta_lift), bc.pres, bcc.pres, false);
            Mat<K> delta_b = induce(kron(c.delta_lift, ib), cbch.pres, ccb.pres, false);
            Mat<K> c_psi = induce(kron(ic, e.psi_lift), ccb.pres, cbc.pres, false);
            Mat<K> psi_c = induce(kron(e.psi_lift, ic), cbc.pres, bcc.pres, false);
            ids.push_back({"psi respects comultiplication", b_delta * psi, psi_c * c_psi * delta_b});
        }
        {
            Bimod<K> areg = regular_bimodule(b.base());
            BalancedChain<K> ba = tensor_over(bb, areg, false);
            BalancedChain<K> ab = tensor_over(areg, bb, false);
            Mat<K> right_unit = induce(bb.right_action, ba.pres, trivial_qpres(f, bb.dim), false);
            Mat<K> left_unit = induce(bb.left_action, ab.pres, trivial_qpres(f, bb.dim), false);
            Mat<K> lhs = right_unit * induce(kron(ib, c.eps), bc.pres, ba.pres, false) * psi;
            Mat<K> rhs = left_unit * induce(kron(c.eps, ib), cbch.pres, ab.pres, false);
            ids.push_back({"psi respects counit", lhs, rhs});
        }
    }
    return ids;
}

template <field_scalar K>
Report check_entwining(const Entwining<K>& e) {
    Report rep;
    rep.command = "check_entwining " + e.name;
    check_identities(rep, entwining_identities(e));
    return rep;
}

// ---------------------------------------------------------------------------
// The coring of an entwining. Flavor r: carrier B (x)_A C with structure maps
// I (x) Delta and I (x) eps; flavor l: carrier C (x)_A B with Delta (x) I and
// eps (x) I. The base ring is B viewed as an algebra over the field.
// ---------------------------------------------------------------------------

template <field_scalar K>
AlgebraRef<K> algebra_from_ring(const Ring<K>& r) {
    Mat<K> unit = r.iota * r.base()->unit;
    Mat<K> mult = r.mu_lift;
    return make_algebra<K>(r.field(), r.dim(), mult, unit, r.name);
}

template <field_scalar K>
CoringRef<K> entwined_coring(const Entwining<K>& e, std::string name = "") {
    Field<K> f = e.ring->field();
    const Ring<K>& b = *e.ring;
    const Coring<K>& c = *e.coring;
    const Bimod<K>& bb = b.carrier;
    const Bimod<K>& cb = c.carrier;
    Mat<K> ib = bb.ident(), ic = cb.ident();
    AlgebraRef<K> base = algebra_from_ring(b);
    Mat<K> unit_elt = b.iota * b.base()->unit;  // 1_B
    if (e.flavor == Side::right) {
        // carrier B (x)_A C
        BalancedChain<K> bc = tensor_over(bb, cb, false);
        std::size_t d = bc.dim();
        // left action b'.(b (x) c) = b'b (x) c
        Mat<K> left_lift = kron(b.mu_lift, ic);  // B (x) B (x) C -> B (x) C
        Mat<K> left = bc.projection() * left_lift * kron(ib, bc.section());
        // right action (b (x) c).b' = b.psi(c (x) b')
        Mat<K> psi_first = kron(ib, e.psi_lift);            // B (x) C (x) B -> B (x) B (x) C
        Mat<K> mul_first = kron(b.mu_lift, ic) * psi_first; // -> B (x) C
        Mat<K> right = bc.projection() * mul_first * kron(bc.section(), ib);
        Bimod<K> carrier = make_bimodule<K>(base, base, d, left, right,
                                            name.empty() ? b.name + "(x)r" + c.name : name);
        // delta: b (x) c |-> (b (x) c_1) (x) (1_B (x) c_2)
        Mat<K> insert_one = kron(unit_elt, ic);  // C -> B (x) C
        Mat<K> delta_lift = kron(bc.projection(), bc.projection() * insert_one) *
                            kron(ib, c.delta_lift) * bc.section();
        // eps: b (x) c |-> b eps(c), through B (x)_A A ~= B
        Bimod<K> areg = regular_bimodule(b.base());
        BalancedChain<K> ba = tensor_over(bb, areg, false);
        Mat<K> right_unit = induce(bb.right_action, ba.pres, trivial_qpres(f, bb.dim), false);
        Mat<K> eps_full = right_unit * (ba.projection() * kron(ib, c.eps)) * bc.section();
        return make_coring<K>(std::move(carrier), delta_lift, eps_full,
                              name.empty() ? b.name + "(x)r" + c.name : name);
    }
    // flavor l: carrier C (x)_A B
    BalancedChain<K> cbch = tensor_over(cb, bb, false);
    std::size_t d = cbch.dim();
    // right action (c (x) b).b' = c (x) bb'
    Mat<K> right_lift = kron(ic, b.mu_lift);
    Mat<K> right = cbch.projection() * right_lift * kron(cbch.section(), ib);
    // left action b'.(c (x) b) = psi(b' (x) c).b
    Mat<K> psi_first = kron(e.psi_lift, ib);            // B (x) C (x) B -> C (x) B (x) B
    Mat<K> mul_last = kron(ic, b.mu_lift) * psi_first;  // -> C (x) B
    Mat<K> left = cbch.projection() * mul_last * kron(ib, cbch.section());
    Bimod<K> carrier = make_bimodule<K>(base, base, d, left, right,
                                        name.empty() ? c.name + "(x)l" + b.name : name);
    // delta: c (x) b |-> (c_1 (x) 1_B) (x) (c_2 (x) b)
    Mat<K> insert_one = kron(ic, unit_elt);  // C -> C (x) B
    Mat<K> delta_lift = kron(cbch.projection() * insert_one, cbch.projection()) *
                        kron(c.delta_lift, ib) * cbch.section();
    Bimod<K> areg = regular_bimodule(b.base());
    BalancedChain<K> ab = tensor_over(areg, bb, false);
    Mat<K> left_unit = induce(bb.left_action, ab.pres, trivial_qpres(f, bb.dim), false);
    Mat<K> eps_full = left_unit * (ab.projection() * kron(c.eps, ib)) * cbch.section();
    return make_coring<K>(std::move(carrier), delta_lift, eps_full,
                          name.empty() ? c.name + "(x)l" + b.name : name);
}

// the two Hopf corings of a bialgebra
template <field_scalar K>
CoringRef<K> hopf_coring_r(const Bialgebra<K>& h) {
    return entwined_coring(build_psi(h, Side::right), h.name + "(x)r" + h.name);
}

template <field_scalar K>
CoringRef<K> hopf_coring_l(const Bialgebra<K>& h) {
    return entwined_coring(build_psi(h, Side::left), h.name + "(x)l" + h.name);
}

// ---------------------------------------------------------------------------
// Antipodes and the Galois map gamma.
// ---------------------------------------------------------------------------

template <field_scalar K>
struct AntipodeResult {
    std::optional<Mat<K>> antipode;
    bool unique = false;
    Report consequences;  // anti-map identities, asserted when found
    std::size_t rank_coefficient = 0, rank_augmented = 0;
};

template <field_scalar K>
std::vector<IdentityPair<K>> antipode_identities(const Bialgebra<K>& h, const Mat<K>& s) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> id = h.ident();
    Mat<K> conv_unit = h.alg->unit * h.counit;  // iota . eps
    Mat<K> tw = twist(f, n, n);
    return {
        {"left antipode identity", h.alg->mult * kron(s, id) * h.comult, conv_unit},
        {"right antipode identity", h.alg->mult * kron(id, s) * h.comult, conv_unit},
        {"anti-algebra map", s * h.alg->mult, h.alg->mult * tw * kron(s, s)},
        {"anti-coalgebra map", h.comult * s, tw * kron(s, s) * h.comult},
        {"antipode of unit", s * h.alg->unit, h.alg->unit},
        {"counit of antipode", h.counit * s, h.counit},
    };
}

template <field_scalar K>
AntipodeResult<K> find_antipode(const Bialgebra<K>& h) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> id = h.ident();
    Mat<K> conv_unit = h.alg->unit * h.counit;
    MapSolveSystem<K> sys(f, n, n);
    sys.add([&](const Mat<K>& s) { return h.alg->mult * kron(s, id) * h.comult; }, conv_unit);
    sys.add([&](const Mat<K>& s) { return h.alg->mult * kron(id, s) * h.comult; }, conv_unit);
    auto r = sys.solve();
    AntipodeResult<K> res;
    res.rank_coefficient = r.rank_coefficient;
    res.rank_augmented = r.rank_augmented;
    if (!r.solution) return res;
    res.antipode = r.solution;
    res.unique = r.homogeneous_kernel.dim() == 0;
    res.consequences.command = "antipode consequences " + h.name;
    check_identities(res.consequences, antipode_identities(h, *r.solution));
    return res;
}

template <field_scalar K>
struct GammaResult {
    Mat<K> gamma;                  // (I (x) mu)(Delta (x) I)
    std::optional<Mat<K>> inverse;
};

template <field_scalar K>
GammaResult<K> gamma_map(const Bialgebra<K>& h) {
    Mat<K> id = h.ident();
    GammaResult<K> g;
    g.gamma = kron(id, h.alg->mult) * kron(h.comult, id);
    g.inverse = inverse(g.gamma);
    return g;
}

}  // namespace hopflab
