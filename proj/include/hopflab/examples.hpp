// Built-in example library: the small algebras, coalgebras and bialgebras
// used throughout the tests and exposed through the CLI.

#pragma once

#include "algebra.hpp"

#include <cstdlib>

namespace hopflab {

// group algebra from a multiplication table: e_i * e_j = e_{table[i][j]},
// identity element at index 0
template <field_scalar K>
AlgebraRef<K> table_algebra(Field<K> f, const std::vector<std::vector<std::size_t>>& table,
                            std::string name) {
    std::size_t n = table.size();
    Mat<K> mult(f, n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult(table[i][j], i * n + j) = f.one();
    return make_algebra<K>(f, n, mult, Mat<K>::basis_vec(f, n, 0), std::move(name));
}

template <field_scalar K>
AlgebraRef<K> group_algebra_c2(Field<K> f) {
    return table_algebra<K>(f, {{0, 1}, {1, 0}}, "kC2");
}

template <field_scalar K>
AlgebraRef<K> group_algebra_c3(Field<K> f) {
    return table_algebra<K>(f, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "kC3");
}

// S3 with basis {e, r, r2, s, sr, sr2}, r^3 = e, s^2 = e, r s = s r^2
template <field_scalar K>
AlgebraRef<K> group_algebra_s3(Field<K> f) {
    // permutation composition table computed from cycle representations
    // elements as permutations of {0,1,2}
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [&](std::size_t i, std::size_t j) {
        std::array<int, 3> p;
        for (int t = 0; t < 3; ++t) p[t] = perms[i][perms[j][t]];
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == p) return k;
        throw std::logic_error("s3 table");
    };
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) table[i][j] = compose(i, j);
    return table_algebra<K>(f, table, "kS3");
}

// the idempotent monoid {1, e}, e*e = e
template <field_scalar K>
AlgebraRef<K> monoid_idem_algebra(Field<K> f) {
    return table_algebra<K>(f, {{0, 1}, {1, 1}}, "k{1,e}");
}

// coalgebra structure constants over the base field
template <field_scalar K>
struct CoalgebraData {
    std::size_t dim = 0;
    Mat<K> comult;  // C -> C (x) C, lift-level matrix (dim^2 x dim)
    Mat<K> counit;  // C -> k   (1 x dim)
};

// matrix coalgebra M_n^c: basis e_ij at index i*n+j,
// comult(e_ij) = sum_k e_ik (x) e_kj, counit(e_ij) = delta_ij
template <field_scalar K>
CoalgebraData<K> matrix_coalgebra(Field<K> f, std::size_t n) {
    CoalgebraData<K> c;
    c.dim = n * n;
    c.comult = Mat<K>(f, c.dim * c.dim, c.dim);
    c.counit = Mat<K>(f, 1, c.dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t col = i * n + j;
            for (std::size_t k = 0; k < n; ++k)
                c.comult((i * n + k) * c.dim + (k * n + j), col) = f.one();
            if (i == j) c.counit(0, col) = f.one();
        }
    return c;
}

// the coalgebra of an n-element set: grouplike basis
template <field_scalar K>
CoalgebraData<K> grouplike_coalgebra(Field<K> f, std::size_t n) {
    CoalgebraData<K> c;
    c.dim = n;
    c.comult = Mat<K>(f, n * n, n);
    c.counit = Mat<K>(f, 1, n);
    for (std::size_t i = 0; i < n; ++i) {
        c.comult(i * n + i, i) = f.one();
        c.counit(0, i) = f.one();
    }
    return c;
}

// raw bialgebra structure constants (algebra + coalgebra on one carrier)
template <field_scalar K>
struct BialgebraData {
    AlgebraRef<K> alg;
    Mat<K> comult;
    Mat<K> counit;
    std::string name;
};

// group bialgebra: grouplikes on the group basis
template <field_scalar K>
BialgebraData<K> group_bialgebra(AlgebraRef<K> alg) {
    Field<K> f = alg->field;
    CoalgebraData<K> c = grouplike_coalgebra(f, alg->dim);
    return {alg, c.comult, c.counit, alg->name};
}

// dual of kC2 on the idempotent basis {p_1, p_g}
template <field_scalar K>
BialgebraData<K> dual_kc2_bialgebra(Field<K> f) {
    std::size_t n = 2;
    Mat<K> mult(f, n, n * n);
    mult(0, 0) = f.one();  // p1*p1 = p1
    mult(1, 3) = f.one();  // pg*pg = pg
    Mat<K> unit(f, n, 1);
    unit(0, 0) = f.one();
    unit(1, 0) = f.one();  // 1 = p1 + pg
    AlgebraRef<K> alg = make_algebra<K>(f, n, mult, unit, "dual_kC2");
    Mat<K> comult(f, n * n, n);
    // comult(p_x) = sum over yz = x of p_y (x) p_z; group C2 = {1,g}
    comult(0 * n + 0, 0) = f.one();  // p1: 1*1
    comult(1 * n + 1, 0) = f.one();  //     g*g
    comult(0 * n + 1, 1) = f.one();  // pg: 1*g
    comult(1 * n + 0, 1) = f.one();  //     g*1
    Mat<K> counit(f, 1, n);
    counit(0, 0) = f.one();  // counit(p_x) = delta_{x,1}
    return {alg, comult, counit, "dual_kC2"};
}

// Sweedler's four-dimensional bialgebra (a Hopf algebra when char != 2):
// basis {1, g, x, gx}, g^2 = 1, x^2 = 0, xg = -gx,
// comult(g) = g(x)g, comult(x) = x(x)1 + g(x)x
template <field_scalar K>
BialgebraData<K> sweedler4_bialgebra(Field<K> f) {
    if (f.characteristic() == 2) throw std::invalid_argument("sweedler4 requires characteristic != 2");
    std::size_t n = 4;  // 1, g, x, gx
    Mat<K> mult(f, n, n * n);
    K one = f.one(), neg = -f.one();
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, K v) { mult(k, i * n + j) = v; };
    // products: rows index left factor, cols right factor
    set(0, 0, 0, one); set(0, 1, 1, one); set(0, 2, 2, one); set(0, 3, 3, one);
    set(1, 0, 1, one); set(1, 1, 0, one); set(1, 2, 3, one); set(1, 3, 2, one);
    set(2, 0, 2, one); set(2, 1, 3, neg); /* x*x = 0 */ /* x*gx = 0 */
    set(3, 0, 3, one); set(3, 1, 2, neg); /* gx*x = 0 */ /* gx*gx = 0 */
    Mat<K> unit = Mat<K>::basis_vec(f, n, 0);
    AlgebraRef<K> alg = make_algebra<K>(f, n, mult, unit, "H4");
    Mat<K> comult(f, n * n, n);
    comult(0 * n + 0, 0) = one;                          // 1 -> 1(x)1
    comult(1 * n + 1, 1) = one;                          // g -> g(x)g
    comult(2 * n + 0, 2) = one; comult(1 * n + 2, 2) = one;  // x -> x(x)1 + g(x)x
    comult(3 * n + 1, 3) = one; comult(0 * n + 3, 3) = one;  // gx -> gx(x)g + 1(x)gx
    Mat<K> counit(f, 1, n);
    counit(0, 0) = one;
    counit(0, 1) = one;
    return {alg, comult, counit, "H4"};
}

// the idempotent-monoid bialgebra k{1,e}: comult(e) = e(x)e, counit(e) = 1
template <field_scalar K>
BialgebraData<K> monoid_idem_bialgebra(Field<K> f) {
    AlgebraRef<K> alg = monoid_idem_algebra(f);
    CoalgebraData<K> c = grouplike_coalgebra(f, 2);
    return {alg, c.comult, c.counit, "monoid_idem"};
}

}  // namespace hopflab
