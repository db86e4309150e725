// Hopf modules and Hopf contramodules with their coring conversions, the
// distributive-law probes, the isomorphism between the two Hopf corings, the
// Hopf cointegral, bimonad compatibility, and the fundamental-theorem probe.

#pragma once

#include "bialgebra.hpp"

namespace hopflab {

// ---------------------------------------------------------------------------
// Hopf modules: right H-modules with a compatible H-coaction.
// ---------------------------------------------------------------------------

template <field_scalar K>
struct HopfModule {
    BialgebraRef<K> h;
    std::size_t dim = 0;
    Mat<K> action;    // M (x) H -> M
    Mat<K> coaction;  // M -> M (x) H
    std::string name;
};

template <field_scalar K>
std::vector<IdentityPair<K>> hopf_module_identities(const HopfModule<K>& m) {
    const Bialgebra<K>& h = *m.h;
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> im = Mat<K>::identity(f, m.dim), ih = h.ident();
    return {
        {"action associative", m.action * kron(m.action, ih), m.action * kron(im, h.alg->mult)},
        {"action unital", m.action * kron(im, h.alg->unit), im},
        {"coaction coassociative", kron(m.coaction, ih) * m.coaction,
         kron(im, h.comult) * m.coaction},
        {"coaction counital", kron(im, h.counit) * m.coaction, im},
        {"hopf compatibility", m.coaction * m.action,
         kron(m.action, ih) * kron(im, psi_r_map(h)) * kron(m.coaction, ih)},
    };
}

template <field_scalar K>
Report check_hopf_module(const HopfModule<K>& m) {
    Report rep;
    rep.command = "check_hopf_module " + m.name;
    check_identities(rep, hopf_module_identities(m));
    return rep;
}

// V (x) H with the free action and coaction on the second factor
template <field_scalar K>
HopfModule<K> free_hopf_module(BialgebraRef<K> h, std::size_t vdim, std::string name = "") {
    Field<K> f = h->field();
    Mat<K> iv = Mat<K>::identity(f, vdim);
    HopfModule<K> m;
    m.dim = vdim * h->dim();
    m.action = kron(iv, h->alg->mult);
    m.coaction = kron(iv, h->comult);
    m.h = std::move(h);
    m.name = name.empty() ? "V(x)H" : name;
    return m;
}

// the coring H (x)r H viewed as a Hopf module (diagonal action, I (x) Delta)
template <field_scalar K>
HopfModule<K> coring_hopf_module(BialgebraRef<K> h) {
    Field<K> f = h->field();
    std::size_t n = h->dim();
    Mat<K> ih = h->ident();
    HopfModule<K> m;
    m.dim = n * n;
    // (a (x) b).c = a c_1 (x) b c_2
    m.action = kron(h->alg->mult, h->alg->mult) * kron(kron(ih, twist(f, n, n)), ih) *
               kron(Mat<K>::identity(f, n * n), h->comult);
    m.coaction = kron(ih, h->comult);
    m.h = std::move(h);
    m.name = "H(x)rH";
    return m;
}

// conversion to a comodule over the coring H (x)r H and back
template <field_scalar K>
struct HopfModuleConversion {
    CoringRef<K> coring;       // H (x)r H
    Comodule<K> comodule;
    Mat<K> recovered_coaction; // after the round trip
    Report report;
};

template <field_scalar K>
HopfModuleConversion<K> hopf_module_convert(const HopfModule<K>& m, CoringRef<K> cr) {
    const Bialgebra<K>& h = *m.h;
    Field<K> f = h.field();
    std::size_t n = h.dim();
    HopfModuleConversion<K> res;
    res.coring = cr;
    res.report.command = "hopf_module_convert " + m.name;
    check_identities(res.report, hopf_module_identities(m));
    // M as a right B-module over the underlying algebra of H
    Bimod<K> module = right_module(cr->base(), m.dim, m.action, m.name);
    // coaction lift m |-> m_0 (x) (1 (x) m_1)
    Mat<K> lift = kron(Mat<K>::identity(f, m.dim), kron(h.alg->unit, h.ident())) * m.coaction;
    res.comodule = make_comodule(cr, module, lift, m.name);
    check_identities(res.report, comodule_identities(res.comodule));
    // back: collapse M (x)_B (B (x)r B) ~= M (x) H via m (x) (a (x) b) |-> ma (x) b
    Mat<K> collapse = kron(m.action, h.ident());  // M (x) H (x) H -> M (x) H
    Mat<K> iso = induce(collapse, res.comodule.mc.pres,
                        trivial_qpres(f, m.dim * n));
    res.recovered_coaction = iso * res.comodule.rho();
    check_identity(res.report, IdentityPair<K>{"round trip", res.recovered_coaction, m.coaction});
    return res;
}

// ---------------------------------------------------------------------------
// Hopf contramodules: right H-modules with a compatible contra-action of the
// coalgebra. All Hom-spaces are over the base field, flattened row-major.
// ---------------------------------------------------------------------------

template <field_scalar K>
struct HopfContramodule {
    BialgebraRef<K> h;
    std::size_t dim = 0;
    Mat<K> action;        // M (x) H -> M
    Mat<K> contraaction;  // Hom_k(H, M) flattened -> M
    std::string name;
};

namespace detail {

// [eps, M] : M -> Hom_k(H, M), m |-> m eps(-)
template <field_scalar K>
Mat<K> contra_unit(const Bialgebra<K>& h, std::size_t mdim) {
    Field<K> f = h.field();
    Mat<K> u(f, mdim * h.dim(), mdim);
    for (std::size_t i = 0; i < mdim; ++i)
        u.set_col(i, flatten(Mat<K>(Mat<K>::basis_vec(f, mdim, i) * h.counit)));
    return u;
}

// [Delta, M] : Hom_k(H, Hom_k(H, M)) -> Hom_k(H, M), F |-> uncurry(F) . Delta
template <field_scalar K>
Mat<K> contra_product(const Bialgebra<K>& h, std::size_t mdim) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    return operator_matrix<K>(f, mdim * n, n, [&](const Mat<K>& bigf) {
        // bigf rows index (i, a) of the inner map, columns index b;
        // uncurry to M x (H (x) H) with column (b, a)
        Mat<K> unc(f, mdim, n * n);
        for (std::size_t i = 0; i < mdim; ++i)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) unc(i, b * n + a) = bigf(i * n + a, b);
        return Mat<K>(unc * h.comult);
    });
}

// [H, g] on flattened Hom-spaces is kron(g, I)
template <field_scalar K>
Mat<K> hom_h_post(const Bialgebra<K>& h, const Mat<K>& g) {
    return kron(g, h.ident());
}

}  // namespace detail

template <field_scalar K>
std::vector<IdentityPair<K>> hopf_contramodule_identities(const HopfContramodule<K>& m) {
    const Bialgebra<K>& h = *m.h;
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> im = Mat<K>::identity(f, m.dim), ih = h.ident();
    std::vector<IdentityPair<K>> ids;
    ids.push_back({"action associative", m.action * kron(m.action, ih),
                   m.action * kron(im, h.alg->mult)});
    ids.push_back({"action unital", m.action * kron(im, h.alg->unit), im});
    ids.push_back({"contra-action unital", m.contraaction * detail::contra_unit(h, m.dim), im});
    ids.push_back({"contra-action associative",
                   m.contraaction * detail::hom_h_post(h, m.contraaction),
                   m.contraaction * detail::contra_product(h, m.dim)});
    // H-linearity: alpha(f) b = alpha([c |-> f(b_1 c) b_2]) for every basis b
    for (std::size_t j = 0; j < n; ++j) {
        Mat<K> bj = Mat<K>::basis_vec(f, n, j);
        Mat<K> act_bj = m.action * kron(im, bj);  // M -> M
        Mat<K> tj = operator_matrix<K>(f, m.dim, n, [&](const Mat<K>& fm) {
            // c |-> f(b_1 c) b_2: sum over the comultiplication of b_j
            Mat<K> res(f, m.dim, n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    const K& coeff = h.comult(p * n + q, j);
                    if (coeff == f.zero()) continue;
                    Mat<K> lp = h.alg->lmul(Mat<K>::basis_vec(f, n, p));
                    Mat<K> actq = m.action * kron(im, Mat<K>::basis_vec(f, n, q));
                    res = res + coeff * Mat<K>(actq * fm * lp);
                }
            return res;
        });
        ids.push_back({"contra-action H-linear at basis " + std::to_string(j),
                       act_bj * m.contraaction, m.contraaction * tj});
    }
    return ids;
}

template <field_scalar K>
Report check_hopf_contramodule(const HopfContramodule<K>& m) {
    Report rep;
    rep.command = "check_hopf_contramodule " + m.name;
    check_identities(rep, hopf_contramodule_identities(m));
    return rep;
}

// Hom_k(H, V) as a Hopf contramodule: (f.b)(a) = f(ba), free contra-action
template <field_scalar K>
HopfContramodule<K> free_hopf_contramodule(BialgebraRef<K> h, std::size_t vdim,
                                           std::string name = "") {
    Field<K> f = h->field();
    std::size_t n = h->dim();
    HopfContramodule<K> m;
    m.dim = vdim * n;
    // action (f.b)(a) = f(ba), built on flattened coordinates
    Mat<K> act(f, m.dim, m.dim * n);
    for (std::size_t i = 0; i < vdim; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                // basis f = E_{i,a}: (f.e_b)(c) = E_{ia}(e_b c) = (lmul_b)_{a,c} e_i
                Mat<K> lb = h->alg->lmul(Mat<K>::basis_vec(f, n, b));
                for (std::size_t c = 0; c < n; ++c)
                    act(i * n + c, (i * n + a) * n + b) = lb(a, c);
            }
    m.action = act;
    m.contraaction = detail::contra_product(*h, vdim);
    m.h = std::move(h);
    m.name = name.empty() ? "[H,V]" : name;
    return m;
}

// conversion to a contramodule over the coring H (x)l H, and back
template <field_scalar K>
struct HopfContramoduleConversion {
    CoringRef<K> coring;  // H (x)l H
    Contramodule<K> contramodule;
    Mat<K> recovered;     // contra-action after the round trip
    Report report;
};

template <field_scalar K>
HopfContramoduleConversion<K> hopf_contramodule_convert(const HopfContramodule<K>& m,
                                                        CoringRef<K> cl) {
    const Bialgebra<K>& h = *m.h;
    Field<K> f = h.field();
    std::size_t n = h.dim();
    HopfContramoduleConversion<K> res;
    res.coring = cl;
    res.report.command = "hopf_contramodule_convert " + m.name;
    check_identities(res.report, hopf_contramodule_identities(m));
    Bimod<K> module = right_module(cl->base(), m.dim, m.action, m.name);
    // Hom_B(C_l, M) ~= Hom_k(H, M): g |-> g(- (x) 1)
    HomModule<K> hc = hom_module_right(cl->carrier, module);
    Mat<K> embed01 = kron(h.ident(), h.alg->unit);  // H -> H (x) H
    Mat<K> alpha(f, m.dim, hc.space.dim());
    for (std::size_t t = 0; t < hc.space.dim(); ++t) {
        Mat<K> g = hc.space.basis_map(t);  // H (x) H -> M, B-linear
        alpha.set_col(t, m.contraaction * flatten(Mat<K>(g * embed01)));
    }
    res.contramodule = make_contramodule(cl, module, alpha, m.name);
    check_identities(res.report, contramodule_identities(res.contramodule));
    // back: f |-> rho(coords of [a (x) b |-> f(a).b])
    Mat<K> back(f, m.dim, m.dim * n);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            // basis f = E_{i,a}: the B-linear map a' (x) b |-> f(a').b
            Mat<K> fm(f, m.dim, n);
            fm(i, a) = f.one();
            Mat<K> g = m.action * kron(fm, h.ident());  // H (x) H -> M
            Mat<K> coords = hc.space.coords_of_or_throw(g, "hopf contramodule round trip");
            back.set_col(i * n + a, res.contramodule.alpha * coords);
        }
    res.recovered = back;
    check_identity(res.report, IdentityPair<K>{"round trip", res.recovered, m.contraaction});
    return res;
}

// ---------------------------------------------------------------------------
// Distributive-law probes for the bialgebra entwinings.
// ---------------------------------------------------------------------------

namespace detail {

// comonad data of [H,-] at a probe dimension: coproduct f |-> curry(f . mu),
// counit f |-> f(1)
template <field_scalar K>
Mat<K> hom_coproduct(const Bialgebra<K>& h, std::size_t xdim) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    return operator_matrix<K>(f, xdim, n, [&](const Mat<K>& fm) {
        Mat<K> fmu = fm * h.alg->mult;  // H (x) H -> X
        // curry to H -> Hom(H, X): columns b, rows (i, a): f(b a)
        Mat<K> out(f, xdim * n, n);
        for (std::size_t i = 0; i < xdim; ++i)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) out(i * n + a, b) = fmu(i, b * n + a);
        return out;
    });
}

template <field_scalar K>
Mat<K> hom_counit(const Bialgebra<K>& h, std::size_t xdim) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> e(f, xdim, xdim * n);
    Mat<K> one = h.alg->unit;
    for (std::size_t i = 0; i < xdim; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t r = 0; r < xdim; ++r)
                e(r, i * n + a) = (r == i) ? one(a, 0) : f.zero();
    return e;
}

}  // namespace detail

// distributive law components at a probe dimension
// flavor r: [H,X] (x) H -> [H, X (x) H], f (x) b |-> [a |-> f(a_1) (x) b a_2]
// flavor l: [H,X] (x) H -> [H, X (x) H], f (x) b |-> [a |-> f(b_1 a) (x) b_2]
template <field_scalar K>
Mat<K> distributive_law_component(const Bialgebra<K>& h, Side flavor, std::size_t xdim) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Mat<K> law(f, xdim * n * n, xdim * n * n);
    for (std::size_t i = 0; i < xdim; ++i)
        for (std::size_t a0 = 0; a0 < n; ++a0)
            for (std::size_t b = 0; b < n; ++b) {
                // basis element f = E_{i,a0} tensored with e_b
                Mat<K> out(f, xdim * n, n);  // map H -> X (x) H
                for (std::size_t arg = 0; arg < n; ++arg) {
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t q = 0; q < n; ++q) {
                            if (flavor == Side::right) {
                                // a_1 = e_p, a_2 = e_q from comult(e_arg)
                                const K& cpq = h.comult(p * n + q, arg);
                                if (cpq == f.zero() || p != a0) continue;
                                Mat<K> ba2 = h.alg->mult * kron(Mat<K>::basis_vec(f, n, b),
                                                                Mat<K>::basis_vec(f, n, q));
                                for (std::size_t r = 0; r < n; ++r)
                                    out(i * n + r, arg) = out(i * n + r, arg) + cpq * ba2(r, 0);
                            } else {
                                // b_1 = e_p, b_2 = e_q from comult(e_b)
                                const K& cb = h.comult(p * n + q, b);
                                if (cb == f.zero()) continue;
                                Mat<K> b1a = h.alg->mult * kron(Mat<K>::basis_vec(f, n, p),
                                                                Mat<K>::basis_vec(f, n, arg));
                                out(i * n + q, arg) = out(i * n + q, arg) + cb * b1a(a0, 0);
                            }
                        }
                }
                law.set_col((i * n + a0) * n + b, flatten(out));
            }
    return law;
}

// comonad (flavor r) or monad (flavor l) distributive-law diagrams at probes
template <field_scalar K>
Report distributive_law_probe(const Bialgebra<K>& h, Side flavor,
                              const std::vector<std::size_t>& probe_dims) {
    Field<K> f = h.field();
    std::size_t n = h.dim();
    Report rep;
    rep.command = std::string("distributive_law_probe ") + h.name +
                  (flavor == Side::right ? " r" : " l");
    for (std::size_t xd : probe_dims) {
        std::string at = " at dim " + std::to_string(xd);
        Mat<K> phi = distributive_law_component(h, flavor, xd);
        Mat<K> ix = Mat<K>::identity(f, xd), ih = h.ident();
        Mat<K> ihx = Mat<K>::identity(f, xd * n);
        if (flavor == Side::right) {
            // comonads T = [H,-] (coproduct d, counit e) and G = - (x) H
            Mat<K> d_x = detail::hom_coproduct(h, xd);
            Mat<K> e_x = detail::hom_counit(h, xd);
            Mat<K> dg_x = kron(ix, h.comult);                 // G X -> G G X
            Mat<K> eg_tx = kron(ihx, h.counit);               // G T X -> T X
            Mat<K> phi_at_gx = distributive_law_component(h, flavor, xd * n);
            // (e1) T(eG) . phi = eG at T: [H, X (x) H -> X] . phi == e_G
            Mat<K> t_of_eg = kron(kron(ix, h.counit), ih);    // [H, X (x) H] -> [H, X]
            check_identity(rep, IdentityPair<K>{"counit of G" + at, t_of_eg * phi, eg_tx});
            // (e2) e_T at GX . phi = G(e_T)
            Mat<K> e_gx = detail::hom_counit(h, xd * n);
            // domain G T X has factors ([H,X], H); G(e_T) = e_X (x) I_H
            check_identity(rep, IdentityPair<K>{"counit of T" + at, e_gx * phi, kron(e_x, ih)});
            // (d1) T(dG at X) . phi = phi at GX . G(phi)?  coaction side:
            // T(dG) . phi == phi_{GX} . G(phi) . dG_{TX}
            Mat<K> t_of_dg = kron(dg_x, ih);  // [H, X (x) H] -> [H, X (x) H (x) H]
            Mat<K> dg_tx = kron(ihx, h.comult);
            check_identity(rep, IdentityPair<K>{"coproduct of G" + at, t_of_dg * phi,
                                                phi_at_gx * kron(phi, ih) * dg_tx});
            // (d2) d_T at GX . phi == T(phi) . phi_{TX} . G(d_T at X)
            Mat<K> d_gx = detail::hom_coproduct(h, xd * n);
            Mat<K> t_of_phi = kron(phi, ih);
            // careful: T(phi) post-composes phi into the inner Hom; on flats
            // [H, GTX] -> [H, TGX] is kron(phi, I_H)
            check_identity(rep, IdentityPair<K>{"coproduct of T" + at, d_gx * phi,
                                                t_of_phi * phi_at_gx * kron(d_x, ih)});
        } else {
            // monads F = [H,-] (product m, unit i) and G = - (x) H
            Mat<K> m_x = detail::contra_product(h, xd);
            Mat<K> i_x = detail::contra_unit(h, xd);
            Mat<K> mg_x = kron(ix, h.alg->mult);
            Mat<K> ig_fx = kron(ihx, h.alg->unit);
            Mat<K> phi_at_gx = distributive_law_component(h, flavor, xd * n);
            // (u1) phi . G(i_F at X) = i_F at GX
            check_identity(rep, IdentityPair<K>{"unit of F" + at, phi * kron(i_x, ih),
                                                detail::contra_unit(h, xd * n)});
            // (u2) phi . i_G at FX = F(i_G at X)
            check_identity(rep, IdentityPair<K>{"unit of G" + at, phi * ig_fx,
                                                kron(kron(ix, h.alg->unit), ih)});
            // (m1) phi . G(m_F) = m_F at GX . F(phi) . phi at FX
            check_identity(rep, IdentityPair<K>{"product of F" + at, phi * kron(m_x, ih),
                                                detail::contra_product(h, xd * n) * kron(phi, ih) *
                                                    phi_at_gx});
            // (m2) phi . m_G at FX = F(m_G) . phi at GX . G(phi)
            Mat<K> mg_fx = kron(ihx, h.alg->mult);
            check_identity(rep, IdentityPair<K>{"product of G" + at, phi * mg_fx,
                                                kron(mg_x, ih) * phi_at_gx * kron(phi, ih)});
        }
    }
    return rep;
}

}  // namespace hopflab
