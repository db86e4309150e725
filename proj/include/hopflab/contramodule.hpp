// Contramodules of a coring, free contramodules, morphism spaces, relative
// projectivity, the module/Hom-comodule conversion for a ring, contramodules
// induced from bicomodules, and the translations to modules over the dual
// convolution rings.

#pragma once

#include "comodule.hpp"

namespace hopflab {

template <field_scalar K>
struct Contramodule {
    CoringRef<K> coring;
    Bimod<K> module;     // right A-module M
    HomModule<K> hc;     // Hom_A(C, M) materialized as a right A-module
    Mat<K> alpha;        // Hom-coords -> M
    std::string name;

    const Field<K>& field() const { return module.field(); }
    std::size_t dim() const { return module.dim; }
};

template <field_scalar K>
Contramodule<K> make_contramodule(CoringRef<K> coring, Bimod<K> module, Mat<K> alpha,
                                  std::string name = "") {
    if (!same_algebra(module.right_base, coring->base()))
        throw std::invalid_argument("contramodule: base mismatch");
    Contramodule<K> m;
    m.hc = hom_module_right(coring->carrier, module);
    if (alpha.rows() != module.dim || alpha.cols() != m.hc.space.dim())
        throw std::invalid_argument("contramodule: action shape");
    m.coring = std::move(coring);
    m.module = std::move(module);
    m.alpha = std::move(alpha);
    m.name = std::move(name);
    return m;
}

// action given on the full Hom_k(C, M) coordinate space; restricted here
template <field_scalar K>
Contramodule<K> make_contramodule_full(CoringRef<K> coring, Bimod<K> module,
                                       const Mat<K>& alpha_full, std::string name = "") {
    HomModule<K> hc = hom_module_right(coring->carrier, module);
    if (alpha_full.rows() != module.dim || alpha_full.cols() != module.dim * coring->dim())
        throw std::invalid_argument("contramodule: full action shape");
    Mat<K> alpha = alpha_full * hc.space.maps.basis;
    return make_contramodule(std::move(coring), std::move(module), alpha, std::move(name));
}

template <field_scalar K>
std::vector<IdentityPair<K>> contramodule_identities(const Contramodule<K>& m) {
    Field<K> f = m.field();
    const Coring<K>& c = *m.coring;
    Mat<K> ia = Mat<K>::identity(f, c.base()->dim);
    std::vector<IdentityPair<K>> ids = bimodule_identities(m.module);
    ids.push_back({"action A-linear", m.alpha * m.hc.mod.right_action,
                   m.module.right_action * kron(m.alpha, ia)});
    HomMonadData<K> md = hom_monad_data(c, m.module);
    // md.spaces.inner is the same deterministic Hom_A(C,M) materialization
    Mat<K> hom_c_alpha = postcompose_op(md.spaces.outer.space, md.spaces.inner.space, m.alpha);
    ids.push_back({"action associative", m.alpha * hom_c_alpha, m.alpha * md.product});
    ids.push_back({"action unital", m.alpha * md.unit, m.module.ident()});
    return ids;
}

template <field_scalar K>
Report check_contramodule(const Contramodule<K>& m) {
    Report rep;
    rep.command = "check_contramodule " + m.name;
    check_identities(rep, contramodule_identities(m));
    return rep;
}

// free contramodule Hom_A(C, X) with the monad product as action
template <field_scalar K>
Contramodule<K> free_contramodule(CoringRef<K> c, const Bimod<K>& x, std::string name = "") {
    HomMonadData<K> md = hom_monad_data(*c, x);
    Bimod<K> module = md.spaces.inner.mod;
    if (name.empty()) name = "[" + c->name + "," + x.name + "]";
    module.name = name;
    return make_contramodule(c, module, md.product, name);
}

// contramodule-morphism space Hom_{[C,-]}(M, N): A-linear maps commuting with
// the actions. The induced map [C,g] is evaluated through a coordinate
// retraction; on A-linear g it is exact, and A-linearity is part of the cut.
template <field_scalar K>
HomSpace<K> contramodule_hom_space(const Contramodule<K>& m, const Contramodule<K>& n) {
    Field<K> f = m.field();
    Mat<K> ia = Mat<K>::identity(f, m.coring->base()->dim);
    Mat<K> retr_n = n.hc.space.coordinate_retraction();
    Mat<K> basis_m = m.hc.space.maps.basis;
    std::size_t cdim = m.coring->dim();
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.module.right_base->trivial())
        defects.push_back([&](const Mat<K>& g) {
            return g * m.module.right_action - n.module.right_action * kron(g, ia);
        });
    defects.push_back([&, retr_n, basis_m, cdim](const Mat<K>& g) {
        // [C,g] on coordinates: embed, post-compose with g, retract
        Mat<K> hom_c_g = retr_n * kron(g, Mat<K>::identity(f, cdim)) * basis_m;
        return g * m.alpha - n.alpha * hom_c_g;
    });
    return hom_space_cut<K>(f, m.dim(), n.dim(), defects);
}

// the adjunction bijection Hom_{[C,-]}(Hom_A(C,X), M) ~= Hom_A(X, M) as
// explicit mutually inverse matrices
template <field_scalar K>
struct FreeAdjunction {
    Contramodule<K> free;
    HomSpace<K> contra_maps;  // Hom_{[C,-]}(free(X), M)
    HomSpace<K> module_maps;  // Hom_A(X, M)
    Mat<K> fwd;               // phi |-> phi . unit
    Mat<K> bwd;               // g |-> alpha_M . [C, g]
};

template <field_scalar K>
FreeAdjunction<K> free_adjunction_bijection(const Bimod<K>& x, const Contramodule<K>& m) {
    Field<K> f = m.field();
    CoringRef<K> c = m.coring;
    FreeAdjunction<K> adj;
    adj.free = free_contramodule(c, x);
    adj.contra_maps = contramodule_hom_space(adj.free, m);
    adj.module_maps = hom_right_linear(x, m.module);
    HomMonadData<K> md = hom_monad_data(*c, x);
    adj.fwd = Mat<K>(f, adj.module_maps.dim(), adj.contra_maps.dim());
    for (std::size_t t = 0; t < adj.contra_maps.dim(); ++t)
        adj.fwd.set_col(t, adj.module_maps.coords_of_or_throw(
                               adj.contra_maps.basis_map(t) * md.unit, "free adjunction"));
    adj.bwd = Mat<K>(f, adj.contra_maps.dim(), adj.module_maps.dim());
    HomModule<K> hcx = hom_module_right(c->carrier, x);
    for (std::size_t t = 0; t < adj.module_maps.dim(); ++t) {
        Mat<K> g = adj.module_maps.basis_map(t);
        Mat<K> hom_c_g = postcompose_op(hcx.space, m.hc.space, g);
        adj.bwd.set_col(t, adj.contra_maps.coords_of_or_throw(m.alpha * hom_c_g,
                                                              "free adjunction inverse"));
    }
    return adj;
}

// relative projectivity: a contramodule-map section of the action
template <field_scalar K>
struct RelativeProjectiveResult {
    bool projective = false;
    std::optional<Mat<K>> section;  // M -> Hom_A(C,M) coordinates
    std::size_t rank_coefficient = 0, rank_augmented = 0;
};

template <field_scalar K>
RelativeProjectiveResult<K> is_relative_projective(const Contramodule<K>& m) {
    Field<K> f = m.field();
    Contramodule<K> fm = free_contramodule(m.coring, m.module);
    Mat<K> ia = Mat<K>::identity(f, m.coring->base()->dim);
    Mat<K> retr = fm.hc.space.coordinate_retraction();
    Mat<K> basis_m = m.hc.space.maps.basis;
    std::size_t cdim = m.coring->dim();
    MapSolveSystem<K> sys(f, m.hc.space.dim(), m.dim());
    // A-linearity of the section
    sys.add([&](const Mat<K>& s) {
        return s * m.module.right_action - m.hc.mod.right_action * kron(s, ia);
    }, Mat<K>(f, m.hc.space.dim(), m.dim() * m.coring->base()->dim));
    // contramodule map: s . alpha_M = alpha_free . [C,s]
    sys.add([&](const Mat<K>& s) {
        Mat<K> hom_c_s = retr * kron(s, Mat<K>::identity(f, cdim)) * basis_m;
        return s * m.alpha - fm.alpha * hom_c_s;
    }, Mat<K>(f, m.hc.space.dim(), m.hc.space.dim()));
    // section of the action
    sys.add([&](const Mat<K>& s) { return m.alpha * s; }, Mat<K>::identity(f, m.dim()));
    auto r = sys.solve();
    RelativeProjectiveResult<K> res;
    res.rank_coefficient = r.rank_coefficient;
    res.rank_augmented = r.rank_augmented;
    if (r.solution) {
        res.projective = true;
        res.section = r.solution;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Modules of an A-ring B vs comodules of the comonad Hom_A(B,-).
// ---------------------------------------------------------------------------

template <field_scalar K>
struct RingModule {
    RingRef<K> ring;
    Bimod<K> module;        // right A-module
    Mat<K> action;          // M (x)_A B -> M on the materialized tensor
    BalancedChain<K> mb;    // M (x)_A B
    std::string name;
};

template <field_scalar K>
RingModule<K> make_ring_module(RingRef<K> r, Bimod<K> module, const Mat<K>& action_lift,
                               std::string name = "") {
    // action given as a lift M (x) B -> M
    RingModule<K> m;
    m.mb = tensor_over(module, r->carrier, false);
    if (action_lift.rows() != module.dim || action_lift.cols() != module.dim * r->dim())
        throw std::invalid_argument("ring module: action shape");
    m.action = induce(action_lift, m.mb.pres, trivial_qpres(module.field(), module.dim), false);
    m.ring = std::move(r);
    m.module = std::move(module);
    m.name = std::move(name);
    return m;
}

template <field_scalar K>
std::vector<IdentityPair<K>> ring_module_identities(const RingModule<K>& m) {
    Field<K> f = m.module.field();
    const Ring<K>& r = *m.ring;
    const Bimod<K>& b = r.carrier;
    std::vector<IdentityPair<K>> ids = bimodule_identities(m.module);
    {
        BalancedChain<K> mbb = chain_tensor<K>({&m.module, &b, &b}, false);
        Mat<K> act_lift = m.action * m.mb.projection();
        Mat<K> a12 = induce(kron(act_lift, b.ident()), mbb.pres, m.mb.pres, false);
        Mat<K> mu23 = induce(kron(m.module.ident(), r.mu_lift), mbb.pres, m.mb.pres, false);
        ids.push_back({"action associative", m.action * a12, m.action * mu23});
    }
    {
        Bimod<K> areg = regular_bimodule(r.base());
        BalancedChain<K> ma = tensor_over(m.module, areg, false);
        Mat<K> iota_ind = induce(kron(m.module.ident(), r.iota), ma.pres, m.mb.pres, false);
        Mat<K> unit_bwd = ma.projection() * kron(m.module.ident(), r.base()->unit);
        ids.push_back({"action unital", m.action * iota_ind * unit_bwd, m.module.ident()});
    }
    return ids;
}

template <field_scalar K>
Report check_ring_module(const RingModule<K>& m) {
    Report rep;
    rep.command = "check_ring_module " + m.name;
    check_identities(rep, ring_module_identities(m));
    return rep;
}

// morphism space of B-module maps between ring modules
template <field_scalar K>
HomSpace<K> ring_module_hom_space(const RingModule<K>& m, const RingModule<K>& n) {
    Field<K> f = m.module.field();
    Mat<K> ia = Mat<K>::identity(f, m.ring->base()->dim);
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.module.right_base->trivial())
        defects.push_back([&](const Mat<K>& g) {
            return g * m.module.right_action - n.module.right_action * kron(g, ia);
        });
    const Bimod<K>& b = m.ring->carrier;
    defects.push_back([&](const Mat<K>& g) {
        Mat<K> g_tensor_b = n.mb.projection() * kron(g, b.ident()) * m.mb.section();
        return g * m.action - n.action * g_tensor_b;
    });
    return hom_space_cut<K>(f, m.module.dim, n.module.dim, defects);
}

// comodule of the comonad Hom_A(B,-)
template <field_scalar K>
struct HomComodule {
    RingRef<K> ring;
    Bimod<K> module;
    HomModule<K> hb;   // Hom_A(B, M)
    Mat<K> rho;        // M -> Hom-coords
    std::string name;
};

template <field_scalar K>
std::vector<IdentityPair<K>> hom_comodule_identities(const HomComodule<K>& m) {
    Field<K> f = m.module.field();
    Mat<K> ia = Mat<K>::identity(f, m.ring->base()->dim);
    HomComonadData<K> cd = hom_comonad_data(*m.ring, m.module);
    std::vector<IdentityPair<K>> ids = bimodule_identities(m.module);
    ids.push_back({"costructure A-linear", m.rho * m.module.right_action,
                   m.hb.mod.right_action * kron(m.rho, ia)});
    Mat<K> hom_b_rho = postcompose_op(cd.inner.space, cd.outer.space, m.rho);
    ids.push_back({"costructure coassociative", hom_b_rho * m.rho, cd.coproduct * m.rho});
    ids.push_back({"costructure counital", cd.counit * m.rho, m.module.ident()});
    return ids;
}

// B-module structure -> Hom_A(B,-)-comodule structure: n |-> [b |-> n.b]
template <field_scalar K>
HomComodule<K> module_to_hom_comodule(const RingModule<K>& m) {
    Field<K> f = m.module.field();
    HomComodule<K> h;
    h.ring = m.ring;
    h.module = m.module;
    h.hb = hom_module_right(m.ring->carrier, m.module);
    h.rho = Mat<K>(f, h.hb.space.dim(), m.module.dim);
    for (std::size_t i = 0; i < m.module.dim; ++i) {
        Mat<K> comp = m.action * m.mb.projection() *
                      kron(Mat<K>::basis_vec(f, m.module.dim, i), m.ring->carrier.ident());
        h.rho.set_col(i, h.hb.space.coords_of_or_throw(comp, "module to comodule"));
    }
    h.name = m.name;
    return h;
}

// Hom_A(B,-)-comodule structure -> B-module structure: eps . (rho (x) id)
template <field_scalar K>
RingModule<K> hom_comodule_to_module(const HomComodule<K>& h) {
    Field<K> f = h.module.field();
    Mat<K> ev = evaluation_lift(h.hb.space);  // Hom-coords (x) B -> M
    Mat<K> action_lift = ev * kron(h.rho, h.ring->carrier.ident());
    return make_ring_module(h.ring, h.module, action_lift, h.name);
}

// ---------------------------------------------------------------------------
// Contramodules induced by bicomodules: Hom^D(N, Q) for a (C,D)-bicomodule N
// and a D-comodule Q, with action h |-> [the pairing c (x) m |-> h(c)(m)
// composed with the left coaction of N].
// ---------------------------------------------------------------------------

template <field_scalar K>
Contramodule<K> induced_contramodule(const Bicomodule<K>& n, const Comodule<K>& q,
                                     std::string name = "") {
    Field<K> f = n.field();
    // Hom^D(N, Q) with its right A-module structure (f.a)(x) = f(a.x)
    Comodule<K> n_right = make_comodule(n.right_coring, as_right_module(n.module),
                                        n.right_rho_lift, n.name);
    HomSpace<K> hom_dq = comodule_hom_space(n_right, q);
    Bimod<K> module = module_structure_on_hom(hom_dq, n.module, q.module,
                                              name.empty() ? "Hom(" + n.name + "," + q.name + ")" : name);
    // action: for h : C -> Hom^D(N,Q), alpha(h) = [x |-> h(c)(m) applied to
    // the left coaction of x]
    HomModule<K> hc = hom_module_right(n.left_coring->carrier, module);
    Mat<K> alpha(f, module.dim, hc.space.dim());
    Mat<K> ev = evaluation_lift(hom_dq);  // hom-coords (x) N -> Q
    for (std::size_t t = 0; t < hc.space.dim(); ++t) {
        Mat<K> h = hc.space.basis_map(t);  // C -> hom-coords of Hom^D(N,Q)
        // phi(h) : C (x)_A N -> Q, c (x) m -> h(c)(m); then compose with left coaction
        Mat<K> paired = ev * kron(h, n.module.ident());      // C (x) N -> Q
        Mat<K> phi_h = paired * n.cn.section();              // C (x)_A N -> Q
        Mat<K> res = phi_h * n.left_rho();                   // N -> Q
        alpha.set_col(t, hom_dq.coords_of_or_throw(res, "induced contra-action"));
    }
    return make_contramodule(n.left_coring, module, alpha,
                             name.empty() ? "Hom(" + n.name + "," + q.name + ")" : name);
}

// ---------------------------------------------------------------------------
// Translations to modules over the dual rings (the comparison functors of the
// dual-ring picture).
// ---------------------------------------------------------------------------

// right C-comodule -> right module over *C: n.f = (I (x) f)(rho(n))
template <field_scalar K>
RingModule<K> comodule_to_dualmodule(const Comodule<K>& m, const ConvolutionRing<K>& star_c) {
    Field<K> f = m.field();
    std::size_t d = star_c.ring->dim();
    Mat<K> action_lift(f, m.dim(), m.dim() * d);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat<K> fj = star_c.dual_space.basis_map(j);  // C -> A
            // (I_M (x) fj) . rho : M -> M (x)_A A ~= M
            Bimod<K> areg = regular_bimodule(m.coring->base());
            BalancedChain<K> ma = tensor_over(m.module, areg, false);
            Mat<K> unit_iso = induce(m.module.right_action, ma.pres, trivial_qpres(f, m.dim()), false);
            Mat<K> v = unit_iso * induce(kron(m.module.ident(), fj), m.mc.pres, ma.pres, false) *
                       m.rho() * Mat<K>::basis_vec(f, m.dim(), i);
            action_lift.set_col(i * d + j, v);
        }
    return make_ring_module(star_c.ring, m.module, action_lift, m.name + " over *C");
}

// contramodule -> right module over C*: m.f = alpha([c |-> m f(c)])
template <field_scalar K>
RingModule<K> contramodule_to_dualmodule(const Contramodule<K>& m, const ConvolutionRing<K>& c_star) {
    Field<K> f = m.field();
    std::size_t d = c_star.ring->dim();
    Mat<K> action_lift(f, m.dim(), m.dim() * d);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat<K> fj = c_star.dual_space.basis_map(j);  // C -> A
            // beta(m_i (x) f_j) = [c |-> m_i . f_j(c)] in Hom_A(C, M)
            Mat<K> comp = m.module.right_action *
                          kron(Mat<K>::basis_vec(f, m.dim(), i), fj);
            Mat<K> coords = m.hc.space.coords_of_or_throw(comp, "beta comparison");
            action_lift.set_col(i * d + j, m.alpha * coords);
        }
    return make_ring_module(c_star.ring, m.module, action_lift, m.name + " over C*");
}

// the comparison map beta_M : M (x)_A C* -> Hom_A(C, M) itself, for the
// bijectivity statement over fgp corings
template <field_scalar K>
Mat<K> beta_comparison_map(const Contramodule<K>& m, const ConvolutionRing<K>& c_star) {
    Field<K> f = m.field();
    std::size_t d = c_star.ring->dim();
    Bimod<K> cstar_right = as_right_module(c_star.ring->carrier);
    BalancedChain<K> mc = tensor_over(m.module, cstar_right, false);
    Mat<K> lift(f, m.hc.space.dim(), m.dim() * d);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat<K> fj = c_star.dual_space.basis_map(j);
            Mat<K> comp = m.module.right_action * kron(Mat<K>::basis_vec(f, m.dim(), i), fj);
            lift.set_col(i * d + j, m.hc.space.coords_of_or_throw(comp, "beta"));
        }
    return induce(lift, mc.pres, trivial_qpres(f, m.hc.space.dim()));
}

// alpha_N : N (x)_A C -> Hom_A(*C, N) comparison (injectivity statement)
template <field_scalar K>
Mat<K> alpha_comparison_map(const Comodule<K>& m, const ConvolutionRing<K>& star_c) {
    Field<K> f = m.field();
    Bimod<K> starc_right = as_right_module(star_c.ring->carrier);
    HomModule<K> target = hom_module_right(starc_right, m.module);
    std::size_t d = star_c.ring->dim();
    Mat<K> lift(f, target.space.dim(), m.dim() * m.coring->dim());
    Bimod<K> areg = regular_bimodule(m.coring->base());
    BalancedChain<K> ma = tensor_over(m.module, areg, false);
    Mat<K> unit_iso = induce(m.module.right_action, ma.pres, trivial_qpres(f, m.dim()), false);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t c = 0; c < m.coring->dim(); ++c) {
            // n (x) c |-> [f |-> n . f(c)]
            Mat<K> comp(f, m.dim(), d);
            for (std::size_t j = 0; j < d; ++j) {
                Mat<K> fj = star_c.dual_space.basis_map(j);
                Mat<K> fc = fj * Mat<K>::basis_vec(f, m.coring->dim(), c);  // f_j(e_c) in A
                comp.set_col(j, m.module.right_action * kron(Mat<K>::basis_vec(f, m.dim(), i), fc));
            }
            lift.set_col(i * m.coring->dim() + c,
                         target.space.coords_of_or_throw(comp, "alpha comparison"));
        }
    (void)unit_iso;
    return induce(lift, m.mc.pres, trivial_qpres(f, target.space.dim()));
}

}  // namespace hopflab
