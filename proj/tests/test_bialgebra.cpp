// Bialgebras, entwinings, entwined corings, Hopf (contra)modules,
// distributive laws, antipodes and the gamma map.

#include "hopflab/hopf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hopflab;

namespace {
Field<Rational> QQ;
Field<Fp> F5(5);

template <class K>
BialgebraRef<K> qc2(Field<K> f) { return make_bialgebra(group_bialgebra(group_algebra_c2(f))); }
template <class K>
BialgebraRef<K> qc3(Field<K> f) { return make_bialgebra(group_bialgebra(group_algebra_c3(f))); }
template <class K>
BialgebraRef<K> h4(Field<K> f) { return make_bialgebra(sweedler4_bialgebra(f)); }
template <class K>
BialgebraRef<K> idem(Field<K> f) { return make_bialgebra(monoid_idem_bialgebra(f)); }
}  // namespace

TEST_CASE("check_bialgebra") {
    REQUIRE(check_bialgebra(*qc2(QQ)).passed());
    REQUIRE(check_bialgebra(*qc3(F5)).passed());
    REQUIRE(check_bialgebra(*h4(QQ)).passed());
    REQUIRE(check_bialgebra(*h4(F5)).passed());
    REQUIRE(check_bialgebra(*idem(QQ)).passed());
    REQUIRE(check_bialgebra(*make_bialgebra(dual_kc2_bialgebra(QQ))).passed());
    REQUIRE(check_bialgebra(*make_bialgebra(group_bialgebra(group_algebra_s3(QQ)))).passed());
    REQUIRE_THROWS_AS(sweedler4_bialgebra(Field<Fp>(2)), std::invalid_argument);

    // comult(g) = g (x) 1 breaks coassociativity/counit laws
    auto a = group_algebra_c2(QQ);
    Mat<Rational> bad_comult(QQ, 4, 2);
    bad_comult(0, 0) = QQ.one();  // 1 -> 1 (x) 1
    bad_comult(2, 1) = QQ.one();  // g -> g (x) 1
    auto bad = make_bialgebra<Rational>(a, bad_comult, grouplike_coalgebra(QQ, 2).counit, "bad");
    Report rep = check_bialgebra(*bad);
    REQUIRE(!rep.passed());
    for (auto& e : rep.entries)
        if (e.witness) REQUIRE(witness_replays(bialgebra_identities(*bad), *e.witness));
}

TEST_CASE("canonical entwinings pass the axioms") {
    // trivial bialgebra H = k: psi is the identity
    auto k = make_bialgebra(group_bialgebra(table_algebra<Rational>(QQ, {{0}}, "k")));
    REQUIRE(psi_r_map(*k).is_identity());

    // psi_r on kC2: g (x) g |-> g_1 (x) g g_2 = g (x) 1
    auto h2 = qc2(QQ);
    Mat<Rational> psir = psi_r_map(*h2);
    Mat<Rational> gg(QQ, 4, 1), g1(QQ, 4, 1);
    gg(3, 0) = QQ.one();
    g1(2, 0) = QQ.one();
    REQUIRE(psir * gg == g1);

    for (Side s : {Side::right, Side::left}) {
        REQUIRE(check_entwining(build_psi(*h2, s)).passed());
        REQUIRE(check_entwining(build_psi(*h4(QQ), s)).passed());
        REQUIRE(check_entwining(build_psi(*idem(F5), s)).passed());
    }

    // the twist entwines any commutative algebra with any coalgebra
    auto bring = ring_over_k(group_algebra_c2(QQ));
    auto gl = grouplike_coalgebra(QQ, 2);
    auto c = coring_over_k(QQ, 2, gl.comult, gl.counit, "set2");
    auto tw_entw = make_entwining<Rational>(bring, c, Side::left, twist(QQ, 2, 2), "twist");
    REQUIRE(check_entwining(tw_entw).passed());

    // a random non-entwining map fails
    Mat<Rational> bad_psi(QQ, 4, 4);
    bad_psi(0, 0) = QQ.from_int(2);
    auto bad = make_entwining<Rational>(bring, c, Side::left, bad_psi, "bad");
    Report rep = check_entwining(bad);
    REQUIRE(!rep.passed());
    for (auto& e : rep.entries)
        if (e.witness) REQUIRE(witness_replays(entwining_identities(bad), *e.witness));
}

TEST_CASE("entwined corings pass check_coring") {
    // H = k: trivial coring
    auto k = make_bialgebra(group_bialgebra(table_algebra<Rational>(QQ, {{0}}, "k")));
    auto ck = hopf_coring_r(*k);
    REQUIRE(ck->dim() == 1);
    REQUIRE(check_coring(*ck).passed());

    // H = kC2: both Hopf corings are 4-dimensional corings over H
    auto h2 = qc2(QQ);
    auto cr = hopf_coring_r(*h2);
    REQUIRE(cr->dim() == 4);
    REQUIRE(check_coring(*cr).passed());
    auto cl = hopf_coring_l(*h2);
    REQUIRE(check_coring(*cl).passed());

    // the idempotent-monoid bialgebra also gives honest corings
    auto ci = hopf_coring_r(*idem(F5));
    REQUIRE(check_coring(*ci).passed());
}

TEST_CASE("sweedler entwined coring axioms (16-dimensional over H4)") {
    auto h = h4(QQ);
    auto cl = hopf_coring_l(*h);
    REQUIRE(cl->dim() == 16);
    REQUIRE(check_coring(*cl).passed());
}

TEST_CASE("hopf modules and their coring conversion") {
    auto h2 = qc2(QQ);
    auto cr = hopf_coring_r(*h2);

    // M = H with regular action and Delta-coaction
    HopfModule<Rational> reg{h2, 2, h2->alg->mult, h2->comult, "H"};
    REQUIRE(check_hopf_module(reg).passed());
    auto conv = hopf_module_convert(reg, cr);
    REQUIRE(conv.report.passed());

    // free Hopf modules V (x) H
    auto freem = free_hopf_module(h2, 2, "V2(x)H");
    REQUIRE(check_hopf_module(freem).passed());
    REQUIRE(hopf_module_convert(freem, cr).report.passed());

    // the coring itself as a Hopf module
    auto cm = coring_hopf_module(h2);
    REQUIRE(check_hopf_module(cm).passed());
    REQUIRE(hopf_module_convert(cm, cr).report.passed());

    // M = k with trivial action/coaction over kC2 is NOT a Hopf module
    // (the compatibility pentagon needs b = eps(b) 1); the genuinely trivial
    // case is V (x) H at V = k, which is free_hopf_module(h, 1)
    auto triv = free_hopf_module(h2, 1, "k(x)H");
    REQUIRE(check_hopf_module(triv).passed());

    // constructed failure: the trivial coaction m |-> m (x) 1 breaks the
    // compatibility pentagon (kC2 is cocommutative, so flipping the
    // comultiplication would not)
    HopfModule<Rational> badm{h2, 2, h2->alg->mult,
                              kron(Mat<Rational>::identity(QQ, 2), h2->alg->unit), "bad"};
    Report rep = check_hopf_module(badm);
    REQUIRE(!rep.passed());
    for (auto& e : rep.entries)
        if (e.witness) REQUIRE(witness_replays(hopf_module_identities(badm), *e.witness));
}

TEST_CASE("hopf contramodules and their coring conversion") {
    auto h2 = qc2(QQ);
    auto cl = hopf_coring_l(*h2);

    // M = Hom(H, k) with the canonical structures
    auto hstar = free_hopf_contramodule(h2, 1, "H*");
    REQUIRE(check_hopf_contramodule(hstar).passed());
    auto conv = hopf_contramodule_convert(hstar, cl);
    REQUIRE(conv.report.passed());

    auto big = free_hopf_contramodule(h2, 2, "[H,k2]");
    REQUIRE(check_hopf_contramodule(big).passed());
    REQUIRE(hopf_contramodule_convert(big, cl).report.passed());

    // corrupted contra-action fails
    auto bad = hstar;
    bad.contraaction(0, 0) = bad.contraaction(0, 0) + QQ.one();
    Report rep = check_hopf_contramodule(bad);
    REQUIRE(!rep.passed());
    for (auto& e : rep.entries)
        if (e.witness) REQUIRE(witness_replays(hopf_contramodule_identities(bad), *e.witness));
}

TEST_CASE("distributive law probes") {
    // H = k: identities
    auto k = make_bialgebra(group_bialgebra(table_algebra<Rational>(QQ, {{0}}, "k")));
    REQUIRE(distributive_law_probe(*k, Side::right, {1, 2}).passed());
    REQUIRE(distributive_law_probe(*k, Side::left, {1, 2}).passed());

    // H = kC2 at probes {k, k^2, H}
    auto h2 = qc2(QQ);
    REQUIRE(distributive_law_probe(*h2, Side::right, {1, 2}).passed());
    REQUIRE(distributive_law_probe(*h2, Side::left, {1, 2}).passed());

    // H = Sweedler H4 at probe k
    REQUIRE(distributive_law_probe(*h4(QQ), Side::right, {1}).passed());
    REQUIRE(distributive_law_probe(*h4(QQ), Side::left, {1}).passed());

    // the idempotent-monoid bialgebra also satisfies the laws (they only
    // need the bialgebra axioms)
    REQUIRE(distributive_law_probe(*idem(F5), Side::right, {1, 2}).passed());
}

TEST_CASE("antipode solver") {
    // kC2: S is the identity (g is its own inverse)
    auto h2 = qc2(QQ);
    auto s2 = find_antipode(*h2);
    REQUIRE(s2.antipode);
    REQUIRE(s2.unique);
    REQUIRE(s2.antipode->is_identity());
    REQUIRE(s2.consequences.passed());

    // kC3: S permutes the group basis by inversion
    auto s3 = find_antipode(*qc3(QQ));
    REQUIRE(s3.antipode);
    REQUIRE(s3.consequences.passed());
    Mat<Rational> expect(QQ, 3, 3);
    expect(0, 0) = QQ.one();
    expect(2, 1) = QQ.one();
    expect(1, 2) = QQ.one();
    REQUIRE(*s3.antipode == expect);

    // kS3 over F5
    auto ss3 = find_antipode(*make_bialgebra(group_bialgebra(group_algebra_s3(F5))));
    REQUIRE(ss3.antipode);
    REQUIRE(ss3.consequences.passed());

    // idempotent monoid: no antipode, with rank certificate
    auto si = find_antipode(*idem(QQ));
    REQUIRE(!si.antipode);
    REQUIRE(si.rank_augmented > si.rank_coefficient);

    // Sweedler H4: S(g) = g, S(x) = -gx, verified against both identities
    auto s4 = find_antipode(*h4(QQ));
    REQUIRE(s4.antipode);
    REQUIRE(s4.unique);
    REQUIRE(s4.consequences.passed());
    const Mat<Rational>& s = *s4.antipode;
    REQUIRE(s.col(1) == Mat<Rational>::basis_vec(QQ, 4, 1));              // S(g) = g
    Mat<Rational> neg_gx = -Mat<Rational>::basis_vec(QQ, 4, 3);
    REQUIRE(s.col(2) == neg_gx);                                          // S(x) = -gx
    auto s45 = find_antipode(*h4(F5));
    REQUIRE(s45.antipode);
    REQUIRE(s45.consequences.passed());
}

TEST_CASE("gamma map") {
    // H = k: gamma is the identity
    auto k = make_bialgebra(group_bialgebra(table_algebra<Rational>(QQ, {{0}}, "k")));
    REQUIRE(gamma_map(*k).gamma.is_identity());

    // kC2: invertible, gamma(g (x) g) = g (x) 1
    auto g2 = gamma_map(*qc2(QQ));
    REQUIRE(g2.inverse);
    Mat<Rational> gg(QQ, 4, 1), g1(QQ, 4, 1);
    gg(3, 0) = QQ.one();
    g1(2, 0) = QQ.one();
    REQUIRE(g2.gamma * gg == g1);

    // idempotent monoid: rank 3 of 4, gamma(e (x) 1) = gamma(e (x) e) = e (x) e
    auto gi = gamma_map(*idem(QQ));
    REQUIRE(!gi.inverse);
    REQUIRE(rank(gi.gamma) == 3);
    Mat<Rational> e1(QQ, 4, 1), ee(QQ, 4, 1);
    e1(2, 0) = QQ.one();
    ee(3, 0) = QQ.one();
    REQUIRE(gi.gamma * e1 == ee);
    REQUIRE(gi.gamma * ee == ee);

    // H4: invertible
    REQUIRE(gamma_map(*h4(QQ)).inverse);
}
