// Comodules of a coring: right comodules, bicomodules (left comodules are
// the degenerate case of a trivial right coring), cofree comodules, morphism
// spaces and relative injectivity.

#pragma once

#include "ring_coring.hpp"

namespace hopflab {

template <field_scalar K>
struct Comodule {
    CoringRef<K> coring;
    Bimod<K> module;         // right A-module
    Mat<K> rho_lift;         // M -> M (x) C
    BalancedChain<K> mc;     // M (x)_A C
    std::string name;

    const Field<K>& field() const { return module.field(); }
    std::size_t dim() const { return module.dim; }
    Mat<K> rho() const { return mc.projection() * rho_lift; }
};

template <field_scalar K>
Comodule<K> make_comodule(CoringRef<K> coring, Bimod<K> module, Mat<K> rho_lift,
                          std::string name = "") {
    if (!same_algebra(module.right_base, coring->base()))
        throw std::invalid_argument("comodule: base mismatch");
    if (rho_lift.rows() != module.dim * coring->dim() || rho_lift.cols() != module.dim)
        throw std::invalid_argument("comodule: coaction shape");
    Comodule<K> m;
    m.mc = tensor_over(module, coring->carrier, false);
    m.coring = std::move(coring);
    m.module = std::move(module);
    m.rho_lift = std::move(rho_lift);
    m.name = std::move(name);
    return m;
}

template <field_scalar K>
std::vector<IdentityPair<K>> comodule_identities(const Comodule<K>& m) {
    Field<K> f = m.field();
    const Coring<K>& c = *m.coring;
    const Bimod<K>& cb = c.carrier;
    Mat<K> rho = m.rho();
    Mat<K> ia = Mat<K>::identity(f, c.base()->dim);
    std::vector<IdentityPair<K>> ids = bimodule_identities(m.module);
    ids.push_back({"coaction A-linear", rho * m.module.right_action,
                   m.mc.outer.right_action * kron(rho, ia)});
    {
        BalancedChain<K> mcc = chain_tensor<K>({&m.module, &cb, &cb}, false);
        Mat<K> r1 = induce(kron(m.rho_lift, cb.ident()), m.mc.pres, mcc.pres, false);
        Mat<K> r2 = induce(kron(m.module.ident(), c.delta_lift), m.mc.pres, mcc.pres, false);
        ids.push_back({"coaction coassociative", r1 * rho, r2 * rho});
    }
    {
        Bimod<K> areg = regular_bimodule(c.base());
        BalancedChain<K> ma = tensor_over(m.module, areg, false);
        Mat<K> unit_iso = induce(m.module.right_action, ma.pres, trivial_qpres(f, m.dim()), false);
        Mat<K> counit = unit_iso * induce(kron(m.module.ident(), c.eps), m.mc.pres, ma.pres, false);
        ids.push_back({"coaction counital", counit * rho, m.module.ident()});
    }
    return ids;
}

template <field_scalar K>
Report check_comodule(const Comodule<K>& m) {
    Report rep;
    rep.command = "check_comodule " + m.name;
    check_identities(rep, comodule_identities(m));
    return rep;
}

// cofree comodule X (x)_A C with coaction I (x) Delta
template <field_scalar K>
Comodule<K> cofree_comodule(CoringRef<K> c, const Bimod<K>& x, std::string name = "") {
    Field<K> f = x.field();
    const Bimod<K>& cb = c->carrier;
    BalancedChain<K> xc = tensor_over(x, cb, false);
    Bimod<K> module = as_right_module(xc.outer);
    if (name.empty()) name = x.name + "(x)" + c->name;
    module.name = name;
    // lift of the coaction: pick representatives, comultiply, project back
    Mat<K> rho_lift = kron(xc.projection(), cb.ident()) *
                      kron(x.ident(), c->delta_lift) * xc.section();
    return make_comodule(c, module, rho_lift, name);
}

// C as a right comodule over itself
template <field_scalar K>
Comodule<K> coring_as_right_comodule(CoringRef<K> c) {
    Bimod<K> module = as_right_module(c->carrier);
    Mat<K> lift = c->delta_lift;
    std::string n = c->name;
    return make_comodule(c, std::move(module), std::move(lift), n);
}

// the right A-module structure carried by any A-linear Hom-subspace between
// an (A,?)-bimodule and a right module: (f.a)(m) = f(a.m)
template <field_scalar K>
Bimod<K> module_structure_on_hom(const HomSpace<K>& hs, const Bimod<K>& dom, const Bimod<K>& cod,
                                 std::string name = "") {
    Field<K> f = dom.field();
    AlgebraRef<K> rb = dom.left_base;
    std::size_t d = hs.dim();
    Mat<K> right(f, d, d * rb->dim);
    for (std::size_t c = 0; c < d; ++c) {
        Mat<K> phi = hs.basis_map(c);
        for (std::size_t j = 0; j < rb->dim; ++j) {
            Mat<K> psi = phi * dom.act_left(Mat<K>::basis_vec(f, rb->dim, j));
            Mat<K> coords = hs.coords_of_or_throw(psi, "hom residual action");
            for (std::size_t i = 0; i < d; ++i) right(i, c * rb->dim + j) = coords(i, 0);
        }
    }
    (void)cod;
    return right_module(rb, d, right, std::move(name));
}

// morphism space Hom^C(M, N) of right comodules: A-linear + colinear maps
template <field_scalar K>
HomSpace<K> comodule_hom_space(const Comodule<K>& m, const Comodule<K>& n) {
    Field<K> f = m.field();
    Mat<K> rho_n = n.rho();
    Mat<K> rho_m = m.rho();
    const Bimod<K>& cb = m.coring->carrier;
    Mat<K> ia = Mat<K>::identity(f, m.coring->base()->dim);
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.module.right_base->trivial())
        defects.push_back([&](const Mat<K>& g) {
            return g * m.module.right_action - n.module.right_action * kron(g, ia);
        });
    defects.push_back([&, rho_n, rho_m](const Mat<K>& g) {
        Mat<K> g_tensor_c = n.mc.projection() * kron(g, cb.ident()) * m.mc.section();
        return rho_n * g - g_tensor_c * rho_m;
    });
    return hom_space_cut<K>(f, m.dim(), n.dim(), defects);
}

template <field_scalar K>
HomModule<K> comodule_hom_module(const Comodule<K>& m, const Comodule<K>& n, std::string name = "") {
    HomModule<K> h;
    h.space = comodule_hom_space(m, n);
    // Hom^C(M, N) is only a k-space in general; over C with A-bimodule first
    // argument it keeps the residual right A-action
    if (!m.module.left_base->trivial()) {
        h.mod = module_structure_on_hom(h.space, m.module, n.module, name);
    } else {
        h.mod = right_module(scalar_algebra(m.field()), h.space.dim(),
                             Mat<K>::identity(m.field(), h.space.dim()), name);
    }
    return h;
}

// the adjunction bijection Hom^C(M, X (x)_A C) ~= Hom_A(M, X) as explicit
// mutually inverse matrices
template <field_scalar K>
struct CofreeAdjunction {
    Comodule<K> cofree;
    HomSpace<K> comodule_maps;  // Hom^C(M, X (x) C)
    HomSpace<K> module_maps;    // Hom_A(M, X)
    Mat<K> fwd;                 // comodule_maps -> module_maps, f |-> (I (x) eps) . f
    Mat<K> bwd;                 // g |-> (g (x) I_C) . rho_M
};

template <field_scalar K>
CofreeAdjunction<K> cofree_adjunction_bijection(const Comodule<K>& m, const Bimod<K>& x) {
    Field<K> f = m.field();
    CoringRef<K> c = m.coring;
    CofreeAdjunction<K> adj;
    adj.cofree = cofree_comodule(c, x);
    adj.comodule_maps = comodule_hom_space(m, adj.cofree);
    adj.module_maps = hom_right_linear(m.module, x);
    Bimod<K> areg = regular_bimodule(c->base());
    BalancedChain<K> xa = tensor_over(x, areg, false);
    BalancedChain<K> xc = tensor_over(x, c->carrier, false);
    Mat<K> unit_iso = induce(x.right_action, xa.pres, trivial_qpres(f, x.dim), false);
    Mat<K> collapse = unit_iso * induce(kron(x.ident(), c->eps), xc.pres, xa.pres, false);
    adj.fwd = Mat<K>(f, adj.module_maps.dim(), adj.comodule_maps.dim());
    for (std::size_t t = 0; t < adj.comodule_maps.dim(); ++t)
        adj.fwd.set_col(t, adj.module_maps.coords_of_or_throw(
                               collapse * adj.comodule_maps.basis_map(t), "cofree adjunction"));
    adj.bwd = Mat<K>(f, adj.comodule_maps.dim(), adj.module_maps.dim());
    for (std::size_t t = 0; t < adj.module_maps.dim(); ++t) {
        Mat<K> g = adj.module_maps.basis_map(t);
        Mat<K> g_tensor = xc.projection() * kron(g, c->carrier.ident()) * m.mc.section();
        adj.bwd.set_col(t, adj.comodule_maps.coords_of_or_throw(g_tensor * m.rho(),
                                                                "cofree adjunction inverse"));
    }
    return adj;
}

// relative injectivity: a comodule-map retraction of the coaction
template <field_scalar K>
struct RelativeInjectiveResult {
    bool injective = false;
    std::optional<Mat<K>> retraction;  // M (x)_A C -> M on quotient coordinates
    std::size_t rank_coefficient = 0, rank_augmented = 0;
};

template <field_scalar K>
RelativeInjectiveResult<K> is_relative_injective(const Comodule<K>& m) {
    Field<K> f = m.field();
    const Coring<K>& c = *m.coring;
    Comodule<K> mc_comod = cofree_comodule(m.coring, m.module);  // same chain coordinates
    Mat<K> rho = m.rho();
    Mat<K> rho_mc = mc_comod.rho();
    Mat<K> ia = Mat<K>::identity(f, c.base()->dim);
    const Bimod<K>& cb = c.carrier;
    MapSolveSystem<K> sys(f, m.dim(), m.mc.dim());
    // A-linearity
    sys.add([&](const Mat<K>& l) {
        return l * m.mc.outer.right_action - m.module.right_action * kron(l, ia);
    }, Mat<K>(f, m.dim(), m.mc.dim() * c.base()->dim));
    // colinearity: rho_M . l = (l (x) I_C) . rho_MC
    sys.add([&](const Mat<K>& l) {
        Mat<K> l_tensor_c = m.mc.projection() * kron(l, cb.ident()) * mc_comod.mc.section();
        return rho * l - l_tensor_c * rho_mc;
    }, Mat<K>(f, m.mc.dim(), m.mc.dim()));
    // retraction
    sys.add([&](const Mat<K>& l) { return l * rho; }, Mat<K>::identity(f, m.dim()));
    auto r = sys.solve();
    RelativeInjectiveResult<K> res;
    res.rank_coefficient = r.rank_coefficient;
    res.rank_augmented = r.rank_augmented;
    if (r.solution) {
        res.injective = true;
        res.retraction = r.solution;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Bicomodules. A left C-comodule is a (C, k)-bicomodule with trivial right
// coring and identity right coaction.
// ---------------------------------------------------------------------------

template <field_scalar K>
struct Bicomodule {
    CoringRef<K> left_coring;   // C over A
    CoringRef<K> right_coring;  // D over B
    Bimod<K> module;            // (A,B)-bimodule N
    Mat<K> left_rho_lift;       // N -> C (x) N
    Mat<K> right_rho_lift;      // N -> N (x) D
    BalancedChain<K> cn;        // C (x)_A N
    BalancedChain<K> nd;        // N (x)_B D
    std::string name;

    const Field<K>& field() const { return module.field(); }
    std::size_t dim() const { return module.dim; }
    Mat<K> left_rho() const { return cn.projection() * left_rho_lift; }
    Mat<K> right_rho() const { return nd.projection() * right_rho_lift; }
};

template <field_scalar K>
Bicomodule<K> make_bicomodule(CoringRef<K> c, CoringRef<K> d, Bimod<K> module,
                              Mat<K> left_rho_lift, Mat<K> right_rho_lift, std::string name = "") {
    if (!same_algebra(module.left_base, c->base()) || !same_algebra(module.right_base, d->base()))
        throw std::invalid_argument("bicomodule: base mismatch");
    if (left_rho_lift.rows() != c->dim() * module.dim || left_rho_lift.cols() != module.dim)
        throw std::invalid_argument("bicomodule: left coaction shape");
    if (right_rho_lift.rows() != module.dim * d->dim() || right_rho_lift.cols() != module.dim)
        throw std::invalid_argument("bicomodule: right coaction shape");
    Bicomodule<K> n;
    n.cn = tensor_over(c->carrier, module, false);
    n.nd = tensor_over(module, d->carrier, false);
    n.left_coring = std::move(c);
    n.right_coring = std::move(d);
    n.module = std::move(module);
    n.left_rho_lift = std::move(left_rho_lift);
    n.right_rho_lift = std::move(right_rho_lift);
    n.name = std::move(name);
    return n;
}

// left C-comodule as a bicomodule with trivial right coring k
template <field_scalar K>
Bicomodule<K> make_left_comodule(CoringRef<K> c, const Bimod<K>& module, Mat<K> left_rho_lift,
                                 std::string name = "") {
    Field<K> f = module.field();
    CoringRef<K> k_coring = trivial_coring(scalar_algebra(f));
    return make_bicomodule(std::move(c), k_coring, module, std::move(left_rho_lift),
                           module.ident(), std::move(name));
}

template <field_scalar K>
std::vector<IdentityPair<K>> bicomodule_identities(const Bicomodule<K>& n) {
    Field<K> f = n.field();
    const Coring<K>& c = *n.left_coring;
    const Coring<K>& d = *n.right_coring;
    const Bimod<K>& cb = c.carrier;
    const Bimod<K>& db = d.carrier;
    Mat<K> lrho = n.left_rho(), rrho = n.right_rho();
    Mat<K> ia = Mat<K>::identity(f, c.base()->dim), ib = Mat<K>::identity(f, d.base()->dim);
    std::vector<IdentityPair<K>> ids = bimodule_identities(n.module);
    // left coaction: A-linear, B-linear, coassociative, counital
    ids.push_back({"left coaction A-linear", lrho * n.module.left_action,
                   n.cn.outer.left_action * kron(ia, lrho)});
    ids.push_back({"left coaction B-linear", lrho * n.module.right_action,
                   n.cn.outer.right_action * kron(lrho, ib)});
    {
        BalancedChain<K> ccn = chain_tensor<K>({&cb, &cb, &n.module}, false);
        Mat<K> r1 = induce(kron(c.delta_lift, n.module.ident()), n.cn.pres, ccn.pres, false);
        Mat<K> r2 = induce(kron(cb.ident(), n.left_rho_lift), n.cn.pres, ccn.pres, false);
        ids.push_back({"left coaction coassociative", r1 * lrho, r2 * lrho});
    }
    {
        Bimod<K> areg = regular_bimodule(c.base());
        BalancedChain<K> an = tensor_over(areg, n.module, false);
        Mat<K> unit_iso = induce(n.module.left_action, an.pres, trivial_qpres(f, n.dim()), false);
        Mat<K> counit = unit_iso * induce(kron(c.eps, n.module.ident()), n.cn.pres, an.pres, false);
        ids.push_back({"left coaction counital", counit * lrho, n.module.ident()});
    }
    // right coaction: B-linear, A-linear, coassociative, counital
    ids.push_back({"right coaction B-linear", rrho * n.module.right_action,
                   n.nd.outer.right_action * kron(rrho, ib)});
    ids.push_back({"right coaction A-linear", rrho * n.module.left_action,
                   n.nd.outer.left_action * kron(ia, rrho)});
    {
        BalancedChain<K> ndd = chain_tensor<K>({&n.module, &db, &db}, false);
        Mat<K> r1 = induce(kron(n.right_rho_lift, db.ident()), n.nd.pres, ndd.pres, false);
        Mat<K> r2 = induce(kron(n.module.ident(), d.delta_lift), n.nd.pres, ndd.pres, false);
        ids.push_back({"right coaction coassociative", r1 * rrho, r2 * rrho});
    }
    {
        Bimod<K> breg = regular_bimodule(d.base());
        BalancedChain<K> nb = tensor_over(n.module, breg, false);
        Mat<K> unit_iso = induce(n.module.right_action, nb.pres, trivial_qpres(f, n.dim()), false);
        Mat<K> counit = unit_iso * induce(kron(n.module.ident(), d.eps), n.nd.pres, nb.pres, false);
        ids.push_back({"right coaction counital", counit * rrho, n.module.ident()});
    }
    // compatibility: the two routes N -> C (x)_A N (x)_B D agree
    {
        BalancedChain<K> cnd = chain_tensor<K>({&cb, &n.module, &db}, false);
        Mat<K> via_left = induce(kron(cb.ident(), n.right_rho_lift), n.cn.pres, cnd.pres, false) * lrho;
        Mat<K> via_right = induce(kron(n.left_rho_lift, db.ident()), n.nd.pres, cnd.pres, false) * rrho;
        ids.push_back({"coactions compatible", via_left, via_right});
    }
    return ids;
}

template <field_scalar K>
Report check_bicomodule(const Bicomodule<K>& n) {
    Report rep;
    rep.command = "check_bicomodule " + n.name;
    check_identities(rep, bicomodule_identities(n));
    return rep;
}

// C as a (C,C)-bicomodule
template <field_scalar K>
Bicomodule<K> coring_as_bicomodule(CoringRef<K> c) {
    Mat<K> lift = c->delta_lift;
    Bimod<K> carrier = c->carrier;
    std::string n = c->name;
    return make_bicomodule(c, c, carrier, lift, lift, n);
}

// left-comodule morphism space Hom^C(M, N) for (C,D)-bicomodules viewed on
// their left structure: left A-linear + left colinear maps
template <field_scalar K>
HomSpace<K> left_comodule_hom_space(const Bicomodule<K>& m, const Bicomodule<K>& n) {
    Field<K> f = m.field();
    Mat<K> rho_n = n.left_rho();
    Mat<K> rho_m = m.left_rho();
    const Bimod<K>& cb = m.left_coring->carrier;
    Mat<K> ia = Mat<K>::identity(f, m.left_coring->base()->dim);
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.module.left_base->trivial())
        defects.push_back([&](const Mat<K>& g) {
            return g * m.module.left_action - n.module.left_action * kron(ia, g);
        });
    defects.push_back([&, rho_n, rho_m](const Mat<K>& g) {
        Mat<K> c_tensor_g = n.cn.projection() * kron(cb.ident(), g) * m.cn.section();
        return rho_n * g - c_tensor_g * rho_m;
    });
    return hom_space_cut<K>(f, m.dim(), n.dim(), defects);
}

// morphism space of right D-comodule maps between bicomodules (B-linearity +
// right colinearity)
template <field_scalar K>
HomSpace<K> right_comodule_hom_space(const Bicomodule<K>& m, const Bicomodule<K>& n) {
    Field<K> f = m.field();
    Mat<K> rho_n = n.right_rho();
    Mat<K> rho_m = m.right_rho();
    const Bimod<K>& db = m.right_coring->carrier;
    Mat<K> ib = Mat<K>::identity(f, m.right_coring->base()->dim);
    std::vector<std::function<Mat<K>(const Mat<K>&)>> defects;
    if (!m.module.right_base->trivial())
        defects.push_back([&](const Mat<K>& g) {
            return g * m.module.right_action - n.module.right_action * kron(g, ib);
        });
    defects.push_back([&, rho_n, rho_m](const Mat<K>& g) {
        Mat<K> g_tensor_d = n.nd.projection() * kron(g, db.ident()) * m.nd.section();
        return rho_n * g - g_tensor_d * rho_m;
    });
    return hom_space_cut<K>(f, m.dim(), n.dim(), defects);
}

}  // namespace hopflab
