// Module-level operations built on the solver: linear feasibility problems
// for unknown maps, finitely-generated-projective tests with dual-basis
// witnesses, duals of one-sided modules.

#pragma once

#include "hom.hpp"

namespace hopflab {

// Linear system whose unknown is a matrix of fixed shape. Constraints are
// linear operators on the unknown plus right-hand sides; solutions come with
// rank data usable as an infeasibility certificate.
template <field_scalar K>
class MapSolveSystem {
public:
    MapSolveSystem(Field<K> f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols) {}

    void add(const std::function<Mat<K>(const Mat<K>&)>& op, const Mat<K>& rhs) {
        Mat<K> opm = operator_matrix<K>(field_, rows_, cols_, op);
        Mat<K> r = flatten(rhs);
        if (stacked_.rows() == 0 && stacked_.cols() == 0) {
            stacked_ = opm;
            rhs_ = r;
        } else {
            stacked_ = vstack(stacked_, opm);
            rhs_ = vstack(rhs_, r);
        }
    }

    struct Result {
        std::optional<Mat<K>> solution;     // one solution, unknown shape
        Subspace<K> homogeneous_kernel;     // solutions of the homogeneous system
        std::size_t rank_coefficient = 0;   // rank of the coefficient matrix
        std::size_t rank_augmented = 0;     // rank of [coefficients | rhs]
        bool unique() const { return solution && homogeneous_kernel.dim() == 0; }
    };

    Result solve() const {
        Result res;
        if (stacked_.rows() == 0 && stacked_.cols() == 0) {
            // no constraints: zero map solves, everything is homogeneous
            res.solution = Mat<K>(field_, rows_, cols_);
            res.homogeneous_kernel.ambient = rows_ * cols_;
            res.homogeneous_kernel.basis = Mat<K>::identity(field_, rows_ * cols_);
            return res;
        }
        res.rank_coefficient = rank(stacked_);
        res.rank_augmented = rank(hstack(stacked_, rhs_));
        SolveResult<K> s = hopflab::solve(stacked_, rhs_);
        res.homogeneous_kernel = s.kernel;
        if (s.consistent()) res.solution = unflatten(*s.particular, rows_, cols_);
        return res;
    }

private:
    Field<K> field_;
    std::size_t rows_, cols_;
    Mat<K> stacked_, rhs_;
};

template <field_scalar K>
struct DualBasisWitness {
    Mat<K> elements;                    // dim x r, columns are the e_i
    std::vector<Mat<K>> functionals;    // r maps M -> A
};

template <field_scalar K>
struct FgProjectiveResult {
    bool projective = false;
    std::optional<DualBasisWitness<K>> witness;
    std::size_t rank_coefficient = 0, rank_augmented = 0;  // certificate when infeasible
};

// Sum e_i . f_i(m) = m on every basis vector (right modules); the left-module
// version is sum f_i(m) . e_i = m.
template <field_scalar K>
bool dual_basis_identity_holds(const Bimod<K>& m, const DualBasisWitness<K>& w, Side side = Side::right) {
    Field<K> f = m.field();
    Mat<K> total(f, m.dim, m.dim);
    for (std::size_t i = 0; i < w.functionals.size(); ++i) {
        Mat<K> e = w.elements.col(i);
        if (side == Side::right)
            total = total + m.right_action * kron(e, w.functionals[i]);
        else
            total = total + m.left_action * kron(w.functionals[i], e);
    }
    return total.is_identity();
}

// Section-feasibility test: find an A-linear section of the canonical
// surjection from a free module onto M built from the basis of M.
template <field_scalar K>
FgProjectiveResult<K> is_fg_projective(const Bimod<K>& m, Side side = Side::right) {
    Field<K> f = m.field();
    const Algebra<K>& a = side == Side::right ? *m.right_base : *m.left_base;
    std::size_t n = m.dim, ad = a.dim;
    // free module A^n on the basis of M; slot i, algebra coordinate j -> index i*ad+j
    Mat<K> surj(f, n, n * ad);
    Mat<K> free_action(f, n * ad, n * ad * ad);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ad; ++j) {
            if (side == Side::right) {
                surj.set_col(i * ad + j, m.right_action.col(i * ad + j));
            } else {
                surj.set_col(i * ad + j, m.left_action.col(j * n + i));
            }
        }
    // free module structure: slotwise multiplication
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ad; ++j)
            for (std::size_t k = 0; k < ad; ++k) {
                // right: (slot i, a_j) . a_k ; left: a_k . (slot i, a_j)
                Mat<K> prod = side == Side::right
                                  ? a.mult.col(j * ad + k)
                                  : a.mult.col(k * ad + j);
                std::size_t col = side == Side::right ? (i * ad + j) * ad + k
                                                      : k * (n * ad) + i * ad + j;
                for (std::size_t r = 0; r < ad; ++r) free_action(i * ad + r, col) = prod(r, 0);
            }
    MapSolveSystem<K> sys(f, n * ad, n);
    Mat<K> ida = Mat<K>::identity(f, ad);
    if (side == Side::right) {
        sys.add([&](const Mat<K>& s) {
            return s * m.right_action - free_action * kron(s, ida);
        }, Mat<K>(f, n * ad, n * ad));
        sys.add([&](const Mat<K>& s) { return surj * s; }, Mat<K>::identity(f, n));
    } else {
        sys.add([&](const Mat<K>& s) {
            return s * m.left_action - free_action * kron(ida, s);
        }, Mat<K>(f, n * ad, ad * n));
        sys.add([&](const Mat<K>& s) { return surj * s; }, Mat<K>::identity(f, n));
    }
    auto r = sys.solve();
    FgProjectiveResult<K> res;
    res.rank_coefficient = r.rank_coefficient;
    res.rank_augmented = r.rank_augmented;
    if (!r.solution) return res;
    res.projective = true;
    DualBasisWitness<K> w;
    w.elements = Mat<K>::identity(f, n);
    const Mat<K>& s = *r.solution;
    for (std::size_t i = 0; i < n; ++i) {
        Mat<K> fi(f, ad, n);
        for (std::size_t rr = 0; rr < ad; ++rr)
            for (std::size_t c = 0; c < n; ++c) fi(rr, c) = s(i * ad + rr, c);
        w.functionals.push_back(fi);
    }
    res.witness = std::move(w);
    return res;
}

// left dual *N = Hom_{A,-}(N, A) of a left module, as a right A-module
template <field_scalar K>
Bimod<K> dual_module_left(const Bimod<K>& n) {
    auto h = hom_module_left(n, regular_bimodule(n.left_base), "*" + n.name);
    return h.mod;
}

template <field_scalar K>
HomModule<K> dual_module_left_full(const Bimod<K>& n) {
    return hom_module_left(n, regular_bimodule(n.left_base), "*" + n.name);
}

// right dual N* = Hom_{-,A}(N, A) of a right module, as a left A-module
template <field_scalar K>
Bimod<K> dual_module_right(const Bimod<K>& n) {
    auto h = hom_module_right(n, regular_bimodule(n.right_base), n.name + "*");
    return h.mod;
}

template <field_scalar K>
HomModule<K> dual_module_right_full(const Bimod<K>& n) {
    return hom_module_right(n, regular_bimodule(n.right_base), n.name + "*");
}

// M (x)_k V as a right A-module, action on the M factor
template <field_scalar K>
Bimod<K> tensor_right_module_with_space(const Bimod<K>& m, std::size_t vdim) {
    Field<K> f = m.field();
    std::size_t ad = m.right_base->dim, d = m.dim * vdim;
    Mat<K> action(f, d, d * ad);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < vdim; ++j)
            for (std::size_t k = 0; k < ad; ++k) {
                Mat<K> img = m.right_action.col(i * ad + k);  // e_i . a_k in M
                for (std::size_t r = 0; r < m.dim; ++r)
                    action(r * vdim + j, (i * vdim + j) * ad + k) = img(r, 0);
            }
    return right_module(m.right_base, d, action, m.name + "(x)V");
}

}  // namespace hopflab
