// Contratensor and cotensor products, tensor relations, Kleisli
// correspondence, Karoubi equivalence objects, cointegrals and the
// coseparable equivalence.

#include "hopflab/equivalence.hpp"
#include "hopflab/examples.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hopflab;

namespace {
Field<Rational> QQ;
Field<Fp> F5(5);

template <class K>
CoringRef<K> matrix2c(Field<K> f) {
    auto c = matrix_coalgebra(f, 2);
    return coring_over_k(f, c.dim, c.comult, c.counit, "M2c");
}

template <class K>
CoringRef<K> grouplike(Field<K> f, std::size_t n) {
    auto c = grouplike_coalgebra(f, n);
    return coring_over_k(f, c.dim, c.comult, c.counit, "set" + std::to_string(n));
}

template <class K>
Bimod<K> kspace(Field<K> f, std::size_t n, std::string name = "V") {
    return right_module(scalar_algebra(f), n, Mat<K>::identity(f, n), name);
}

// the standard 2-dimensional left comodule of M_2^c: v_j |-> sum_i e_ji (x) v_i
template <class K>
Bicomodule<K> column_comodule(CoringRef<K> c2) {
    Field<K> f = c2->field();
    Mat<K> lift(f, 4 * 2, 2);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2; ++i) lift((j * 2 + i) * 2 + i, j) = f.one();
    Bimod<K> v = left_module(scalar_algebra(f), 2, Mat<K>::identity(f, 2), "V");
    return make_left_comodule(c2, v, lift, "V");
}

// conjugate a left comodule by a random invertible change of basis
template <class K>
Bicomodule<K> conjugate(const Bicomodule<K>& n, std::mt19937_64& rng) {
    Field<K> f = n.field();
    std::uniform_int_distribution<long long> d(0, 4);
    Mat<K> p(f, n.dim(), n.dim());
    std::optional<Mat<K>> pinv;
    do {
        for (std::size_t i = 0; i < n.dim(); ++i)
            for (std::size_t j = 0; j < n.dim(); ++j) p(i, j) = f.from_int(d(rng));
        pinv = inverse(p);
    } while (!pinv);
    Mat<K> lift = kron(Mat<K>::identity(f, n.left_coring->dim()), p) * n.left_rho_lift * *pinv;
    return make_left_comodule(n.left_coring, n.module, lift, n.name + "~");
}
}  // namespace

TEST_CASE("contratensor over the trivial coring is the plain tensor") {
    auto a = group_algebra_c2(QQ);
    auto triv = trivial_coring(a);
    // M = A* as a contramodule over the trivial coring: alpha = evaluation-at-1 iso
    auto m_mod = dual_right_module(a);
    HomMonadData<Rational> md = hom_monad_data(*triv, m_mod);
    auto m = make_contramodule(triv, m_mod, *inverse(md.unit), "A*");
    REQUIRE(check_contramodule(m).passed());
    auto n = coring_as_bicomodule(triv);
    auto ct = contratensor(m, n);
    REQUIRE(ct.dim() == tensor_over(m_mod, n.module).dim());
    REQUIRE(check_comodule(*ct.comodule).passed());
}

TEST_CASE("tensor relation Hom(C,X) (x)_[C] N ~= X (x) N") {
    // grouplike coalgebra over F5, X = k^2, N = C
    auto g2 = grouplike(F5, 2);
    auto x = kspace(F5, 2, "k2");
    auto n = coring_as_bicomodule(g2);
    auto t = tensor_relation_iso(g2, x, n);
    REQUIRE(t.bijective);
    REQUIRE(t.ct.dim() == t.xn.dim());

    // the coequalizer splits for a free (relative projective) contramodule
    auto fc = free_contramodule(g2, x);
    auto ct = contratensor(fc, n, true, true);
    REQUIRE(ct.splitting);
    REQUIRE((ct.pres.q.projection * *ct.splitting).is_identity());
}

TEST_CASE("5.6(1) bijectivity on a randomized suite over F5") {
    std::mt19937_64 rng(2024);
    std::vector<CoringRef<Fp>> stock = {grouplike(F5, 1), grouplike(F5, 2), grouplike(F5, 3),
                                        matrix2c(F5)};
    int instances = 0;
    for (auto& c : stock) {
        std::vector<Bicomodule<Fp>> comods;
        comods.push_back(coring_as_bicomodule(c));
        if (c->dim() == 4 && c->name == "M2c") {
            comods.push_back(column_comodule(c));
            comods.push_back(conjugate(comods[1], rng));
        }
        comods.push_back(conjugate(comods[0], rng));
        comods.push_back(conjugate(comods[0], rng));
        for (std::size_t xd = 1; xd <= 2; ++xd) {
            for (auto& n : comods) {
                auto t = tensor_relation_iso(c, kspace(F5, xd), n);
                REQUIRE(t.bijective);
                ++instances;
            }
        }
    }
    REQUIRE(instances >= 20);
}

TEST_CASE("cotensor products") {
    // C = A trivial: cotensor = M (x)_A N
    auto a = group_algebra_c2(QQ);
    auto triv = trivial_coring(a);
    auto m = coring_as_right_comodule(triv);
    auto n = coring_as_bicomodule(triv);
    auto ct = cotensor(m, n);
    REQUIRE(ct.space.dim() == ct.mn.dim());

    // M = N = C = 2-dim grouplike coalgebra: dim(C box_C C) = 2
    auto g2 = grouplike(QQ, 2);
    auto ct2 = cotensor(coring_as_right_comodule(g2), coring_as_bicomodule(g2));
    REQUIRE(ct2.space.dim() == 2);

    // 5.6(2): iso dims agree for C = M_2^c, M = C, N = C
    auto m2 = matrix2c(QQ);
    auto cmp = cotensor_comparison(coring_as_right_comodule(m2), coring_as_bicomodule(m2));
    REQUIRE(cmp.bijective);
    REQUIRE(cmp.ct.dim() == cmp.cot.space.dim());
}

TEST_CASE("kleisli correspondence") {
    // trivial coring: everything is an identity-sized iso
    auto a = group_algebra_c2(QQ);
    auto triv = trivial_coring(a);
    auto kl0 = kleisli_correspondence(triv, regular_right_module(a));
    REQUIRE(kl0.all_bijective);

    // 2-dim grouplike coalgebra over Q, X = k: both sides 2-dimensional
    auto g2 = grouplike(QQ, 2);
    auto kl = kleisli_correspondence(g2, kspace(QQ, 1, "k"));
    REQUIRE(kl.all_bijective);
    REQUIRE(kl.tensor_side.ct.dim() == 2);
    REQUIRE(kl.hom_side_space.dim() == 2);

    // 4.6 chain: dim Hom^C(X (x) C, Y (x) C) = dim Hom_[C,-]([C,X],[C,Y])
    auto m2 = matrix2c(QQ);
    auto xk = kspace(QQ, 1, "k");
    auto xc = cofree_comodule(m2, xk);
    REQUIRE(comodule_hom_space(xc, xc).dim() ==
            contramodule_hom_space(free_contramodule(m2, xk), free_contramodule(m2, xk)).dim());
}

TEST_CASE("karoubi equivalence object") {
    // M = C over the trivial coring of kC2: Hom^C(A, A) ~= A
    auto a = group_algebra_c2(QQ);
    auto triv = trivial_coring(a);
    auto k0 = karoubi_equivalence_object(coring_as_right_comodule(triv));
    REQUIRE(k0.equalizer_matches_homspace);
    REQUIRE(k0.equalizer.dim() == 2);
    REQUIRE(k0.relative_projective);

    // cofree comodule: the object is the free contramodule on X
    auto m2 = matrix2c(QQ);
    auto cof = cofree_comodule(m2, kspace(QQ, 1, "k"));
    auto k1 = karoubi_equivalence_object(cof);
    REQUIRE(k1.equalizer_matches_homspace);
    REQUIRE(k1.contramodule.dim() == free_contramodule(m2, kspace(QQ, 1)).dim());
    REQUIRE(k1.relative_projective);
    REQUIRE(check_contramodule(k1.contramodule).passed());

    // C = M_2^c, M = C: output has dimension 4 and is relative projective
    auto k2 = karoubi_equivalence_object(coring_as_right_comodule(m2));
    REQUIRE(k2.equalizer_matches_homspace);
    REQUIRE(k2.contramodule.dim() == 4);
    REQUIRE(k2.relative_projective);
}

TEST_CASE("cointegral solver") {
    // trivial coring: a cointegral exists
    auto a = group_algebra_c2(QQ);
    auto ci0 = find_cointegral(*trivial_coring(a));
    REQUIRE(ci0.delta);
    Report rep0;
    check_identities(rep0, cointegral_identities(*trivial_coring(a), *ci0.delta));
    REQUIRE(rep0.passed());

    // M_2^c over Q: a cointegral is found and certified; the symmetric trace
    // form delta(e_ij (x) e_kl) = (1/2) delta_il delta_jk is one point of the
    // solver's affine solution family (the system does not pin it down)
    auto m2 = matrix2c(QQ);
    auto ci = find_cointegral(*m2);
    REQUIRE(ci.delta);
    Report rep;
    check_identities(rep, cointegral_identities(*m2, *ci.delta));
    REQUIRE(rep.passed());
    Rational half(1, 2);
    Mat<Rational> trace_form(QQ, 1, 16);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) trace_form(0, (i * 2 + j) * 4 + (j * 2 + i)) = half;
    Report rep_trace;
    check_identities(rep_trace, cointegral_identities(*m2, trace_form));
    REQUIRE(rep_trace.passed());
    // trace form = particular + kernel combination
    auto in_family = solve(ci.solution_kernel.basis, flatten(trace_form - *ci.delta));
    REQUIRE(in_family.consistent());

    // M_2^c over F_2: contrary to a spec example, matrix coalgebras are
    // coseparable in every characteristic (the separability idempotent of
    // M_2(k) needs no 1/2); the solver correctly finds a cointegral
    Field<Fp> F2(2);
    auto c2 = matrix_coalgebra(F2, 2);
    auto m2f2 = coring_over_k(F2, c2.dim, c2.comult, c2.counit, "M2c");
    auto ci2 = find_cointegral(*m2f2);
    REQUIRE(ci2.delta);
    Report rep2;
    check_identities(rep2, cointegral_identities(*m2f2, *ci2.delta));
    REQUIRE(rep2.passed());

    // M_2^c over F_5
    auto ci5 = find_cointegral(*matrix2c(F5));
    REQUIRE(ci5.delta);
}

TEST_CASE("coseparable equivalence for M2c over Q") {
    auto m2 = matrix2c(QQ);
    std::vector<std::pair<std::string, Comodule<Rational>>> comod_probes;
    comod_probes.emplace_back("C", coring_as_right_comodule(m2));
    comod_probes.emplace_back("cofree(k)", cofree_comodule(m2, kspace(QQ, 1, "k")));
    comod_probes.emplace_back("cofree(k2)", cofree_comodule(m2, kspace(QQ, 2, "k2")));
    std::vector<std::pair<std::string, Contramodule<Rational>>> contra_probes;
    for (auto& [name, q] : comod_probes)
        contra_probes.emplace_back("Hom(C," + name + ")", hom_c_contramodule(q));
    Report rep = verify_coseparable_equivalence(m2, comod_probes, contra_probes);
    for (auto& e : rep.entries) {
        INFO(e.name);
        REQUIRE(e.verdict == Verdict::pass);
    }

    // M_2^c is coseparable over F_2 as well (see the cointegral test); the
    // equivalence holds there too
    Field<Fp> F2(2);
    auto c2 = matrix_coalgebra(F2, 2);
    auto m2f2 = coring_over_k(F2, c2.dim, c2.comult, c2.counit, "M2c");
    std::vector<std::pair<std::string, Comodule<Fp>>> cp2;
    cp2.emplace_back("C", coring_as_right_comodule(m2f2));
    Report rep2 = verify_coseparable_equivalence(m2f2, cp2, {});
    REQUIRE(rep2.passed());
}

TEST_CASE("translations to dual-ring modules") {
    // trivial coring over k: identity translations
    auto ktriv = trivial_coring(scalar_algebra(QQ));
    auto conv = convolution_ring(*ktriv, Side::left);
    auto m = coring_as_right_comodule(ktriv);
    auto rm = comodule_to_dualmodule(m, conv);
    REQUIRE(check_ring_module(rm).passed());

    // 2-dim grouplike coalgebra: beta_M bijective for probes (C fgp over k)
    auto g2 = grouplike(QQ, 2);
    auto cstar = convolution_ring(*g2, Side::right);
    for (std::size_t d : {1u, 2u}) {
        auto fc = free_contramodule(g2, kspace(QQ, d));
        REQUIRE(is_bijective(beta_comparison_map(fc, cstar)));
        auto rm2 = contramodule_to_dualmodule(fc, cstar);
        REQUIRE(check_ring_module(rm2).passed());
    }

    // M_2^c: G_alpha faithful and full on probe morphism spaces
    auto m2 = matrix2c(QQ);
    auto starc = convolution_ring(*m2, Side::left);
    auto c_comod = coring_as_right_comodule(m2);
    auto cof = cofree_comodule(m2, kspace(QQ, 1, "k"));
    auto rm_c = comodule_to_dualmodule(c_comod, starc);
    auto rm_cof = comodule_to_dualmodule(cof, starc);
    REQUIRE(check_ring_module(rm_c).passed());
    REQUIRE(check_ring_module(rm_cof).passed());
    REQUIRE(comodule_hom_space(c_comod, cof).dim() == ring_module_hom_space(rm_c, rm_cof).dim());
    REQUIRE(comodule_hom_space(cof, c_comod).dim() == ring_module_hom_space(rm_cof, rm_c).dim());
    // alpha_N is injective for fgp corings
    REQUIRE(rank(alpha_comparison_map(c_comod, starc)) == c_comod.mc.dim());
}
