// Exact linear algebra kernel: solving, kernels, images, quotients, Kronecker
// products and the Hom-coordinate contract.

#include "hopflab/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hopflab;

namespace {

Field<Rational> QQ;
Field<Fp> F5(5);

template <class K>
Mat<K> m22(Field<K> f, long long a, long long b, long long c, long long d) {
    Mat<K> m(f, 2, 2);
    m(0, 0) = f.from_int(a);
    m(0, 1) = f.from_int(b);
    m(1, 0) = f.from_int(c);
    m(1, 1) = f.from_int(d);
    return m;
}

template <class K>
Mat<K> random_matrix(Field<K> f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    Mat<K> m(f, r, c);
    std::uniform_int_distribution<long long> d(-4, 4);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
    return m;
}

}  // namespace

TEST_CASE("scalar canonical forms") {
    auto q = QQ.parse("3/6");
    REQUIRE(q);
    REQUIRE(QQ.str(*q) == "1/2");
    REQUIRE(QQ.str(*QQ.parse("-4/-6")) == "2/3");
    REQUIRE(QQ.str(*QQ.parse("4/2")) == "2");
    std::string err;
    REQUIRE(!QQ.parse("1/0", &err));
    REQUIRE(err == "zero denominator");
    REQUIRE(!QQ.parse("a", &err));

    REQUIRE(F5.from_int(-3).value() == 2);
    REQUIRE((F5.from_int(3) * F5.from_int(4)).value() == 2);
    REQUIRE((F5.from_int(1) / F5.from_int(3)).value() == 2);
    REQUIRE(!F5.parse("7"));
    REQUIRE(F5.parse("4"));
    REQUIRE_THROWS(Field<Fp>(4));  // modulus not prime
    REQUIRE((is_prime_u64(2) && is_prime_u64(97) && !is_prime_u64(91)));
}

TEST_CASE("solve: identity, inconsistent, underdetermined") {
    // identity 2x2, b = (1,0)
    auto id2 = Mat<Rational>::identity(QQ, 2);
    auto b = Mat<Rational>::basis_vec(QQ, 2, 0);
    auto r = solve(id2, b);
    REQUIRE(r.consistent());
    REQUIRE(*r.particular == b);
    REQUIRE(r.kernel.dim() == 0);

    // zero 1x2, b = (1): no solution
    Mat<Rational> z(QQ, 1, 2);
    Mat<Rational> one(QQ, 1, 1);
    one(0, 0) = QQ.one();
    auto r2 = solve(z, one);
    REQUIRE(!r2.consistent());
    REQUIRE(r2.kernel.dim() == 2);

    // A = [[2,4]], b = (2): x = (1,0), kernel spanned by (-2,1)
    Mat<Rational> a(QQ, 1, 2);
    a(0, 0) = QQ.from_int(2);
    a(0, 1) = QQ.from_int(4);
    Mat<Rational> b3(QQ, 1, 1);
    b3(0, 0) = QQ.from_int(2);
    auto r3 = solve(a, b3);
    REQUIRE(r3.consistent());
    REQUIRE((*r3.particular)(0, 0) == QQ.one());
    REQUIRE((*r3.particular)(1, 0) == QQ.zero());
    REQUIRE(r3.kernel.dim() == 1);
    REQUIRE(r3.kernel.basis(0, 0) == QQ.from_int(-2));
    REQUIRE(r3.kernel.basis(1, 0) == QQ.one());
}

TEST_CASE("kernel, image, rank") {
    REQUIRE(kernel(Mat<Rational>::identity(QQ, 3)).dim() == 0);
    REQUIRE(rank(Mat<Rational>(QQ, 4, 3)) == 0);

    auto a = m22(QQ, 1, 2, 2, 4);
    REQUIRE(rank(a) == 1);
    auto ker = kernel(a);
    REQUIRE(ker.dim() == 1);
    REQUIRE(ker.basis(0, 0) == QQ.from_int(-2));
    REQUIRE(ker.basis(1, 0) == QQ.one());
    REQUIRE((a * ker.basis).is_zero());
    REQUIRE(image(a).dim() == 1);
}

TEST_CASE("rank-nullity and exact solve on random instances") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 25; ++t) {
        auto a = random_matrix(F5, 3 + t % 3, 2 + t % 4, rng);
        REQUIRE(rank(a) + kernel(a).dim() == a.cols());
        auto aq = random_matrix(QQ, 2 + t % 3, 3 + t % 3, rng);
        REQUIRE(rank(aq) + kernel(aq).dim() == aq.cols());
        // any consistent system solves exactly
        auto x = random_matrix(QQ, aq.cols(), 1, rng);
        auto rhs = aq * x;
        auto sol = solve(aq, rhs);
        REQUIRE(sol.consistent());
        REQUIRE((aq * *sol.particular) == rhs);
        for (std::size_t j = 0; j < sol.kernel.dim(); ++j)
            REQUIRE((aq * sol.kernel.basis.col(j)).is_zero());
    }
}

TEST_CASE("quotients") {
    // quotient of k^2 by zero subspace: projection is the identity
    Subspace<Rational> zero_sub{2, Mat<Rational>(QQ, 2, 0)};
    auto q0 = quotient_by(QQ, 2, zero_sub);
    REQUIRE(q0.dim() == 2);
    REQUIRE(q0.projection.is_identity());

    // quotient of k^2 by span{(1,1)}: dimension 1
    Mat<Rational> diag(QQ, 2, 1);
    diag(0, 0) = QQ.one();
    diag(1, 0) = QQ.one();
    auto q1 = quotient_by(QQ, 2, Subspace<Rational>{2, diag});
    REQUIRE(q1.dim() == 1);
    REQUIRE((q1.projection * diag).is_zero());
    REQUIRE((q1.projection * q1.section).is_identity());

    // quotient of k^3 by the full space: dimension 0
    auto q2 = quotient_by(QQ, 3, Subspace<Rational>{3, Mat<Rational>::identity(QQ, 3)});
    REQUIRE(q2.dim() == 0);

    // projection . section = id on random quotients
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        auto gens = random_matrix(F5, 5, 3, rng);
        auto q = quotient_by(F5, 5, image(gens));
        REQUIRE((q.projection * q.section).is_identity());
        REQUIRE((q.projection * gens).is_zero());
        REQUIRE(q.dim() + image(gens).dim() == 5);
    }
}

TEST_CASE("kronecker products follow the lexicographic convention") {
    auto i2 = Mat<Rational>::identity(QQ, 2);
    auto i3 = Mat<Rational>::identity(QQ, 3);
    REQUIRE(kron(i2, i3) == Mat<Rational>::identity(QQ, 6));

    Mat<Rational> a(QQ, 1, 1), b(QQ, 1, 1);
    a(0, 0) = QQ.from_int(3);
    b(0, 0) = QQ.from_int(5);
    REQUIRE(kron(a, b)(0, 0) == QQ.from_int(15));

    // functoriality (f.f') (x) (g.g') = (f (x) g) . (f' (x) g') over F_5
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        auto f = random_matrix(F5, 2, 2, rng), fp = random_matrix(F5, 2, 2, rng);
        auto g = random_matrix(F5, 2, 2, rng), gp = random_matrix(F5, 2, 2, rng);
        REQUIRE(kron(f * fp, g * gp) == kron(f, g) * kron(fp, gp));
    }
}

TEST_CASE("hom coordinates") {
    auto id2 = Mat<Rational>::identity(QQ, 2);
    auto v = flatten(id2);
    REQUIRE(v.rows() == 4);
    REQUIRE(v(0, 0) == QQ.one());
    REQUIRE(v(1, 0) == QQ.zero());
    REQUIRE(v(2, 0) == QQ.zero());
    REQUIRE(v(3, 0) == QQ.one());
    REQUIRE(flatten(Mat<Rational>(QQ, 2, 3)).is_zero());

    std::mt19937_64 rng(3);
    auto m = random_matrix(QQ, 3, 4, rng);
    REQUIRE(unflatten(flatten(m), 3, 4) == m);

    // flatten(A X B) = kron(A, B^T) flatten(X)
    auto a = random_matrix(QQ, 2, 3, rng);
    auto x = random_matrix(QQ, 3, 2, rng);
    auto b = random_matrix(QQ, 2, 4, rng);
    REQUIRE(flatten(a * x * b) == kron(a, b.transpose()) * flatten(x));
}

TEST_CASE("inverse and bijectivity") {
    auto a = m22(QQ, 1, 2, 3, 4);
    auto inv = inverse(a);
    REQUIRE(inv);
    REQUIRE((*inv * a).is_identity());
    REQUIRE((a * *inv).is_identity());
    REQUIRE(!inverse(m22(QQ, 1, 2, 2, 4)));
    REQUIRE(is_bijective(a));
    REQUIRE(!is_bijective(m22(QQ, 1, 2, 2, 4)));
}

TEST_CASE("operator_matrix builds linear operators columnwise") {
    std::mt19937_64 rng(5);
    auto p = random_matrix(F5, 3, 2, rng);
    auto q = random_matrix(F5, 2, 3, rng);
    auto op = operator_matrix<Fp>(F5, 2, 2, [&](const Mat<Fp>& x) { return p * x * q; });
    auto x = random_matrix(F5, 2, 2, rng);
    REQUIRE(op * flatten(x) == flatten(p * x * q));
    REQUIRE(op == kron(p, q.transpose()));
}
