// Independent brute-force routes used as oracles by the tests. These must
// stay decoupled from the library's computation paths: plain fraction
// Gauss-Jordan instead of fraction-free Bareiss, the alternating-sum
// Chevalley-Eilenberg formula evaluated on basis tuples instead of the
// antiderivation extension, and bubble-sort inversion counting for Koszul
// signs instead of bitmask popcounts.
#pragma once

#include <random>
#include <vector>

#include "klac/presentation.hpp"

namespace oracle {

using klac::AlgebroidPresentation;
using klac::Matrix;
using klac::Rational;
using klac::Scalar;

inline int gauss_jordan_rank(Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        const Scalar inv = m.at(rank, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            const Scalar f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

// sign of the permutation sorting `seq` by adjacent swaps; 0 on duplicates
inline int sort_sign(std::vector<int> seq) {
    int swaps = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] == seq[j + 1]) return 0;
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                ++swaps;
            }
        }
    return swaps % 2 == 0 ? 1 : -1;
}

// e^I evaluated on a tuple of basis vectors: permutation sign or 0.
inline int eval_basis_covector(const std::vector<int>& index_set, std::vector<int> tuple) {
    std::vector<int> sorted = tuple;
    const int s = sort_sign(tuple);
    if (s == 0) return 0;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != index_set) return 0;
    return s;
}

// Chevalley-Eilenberg differential on degree k straight from the invariant
// formula: (d eta)(X_0..X_k) = sum_{a<b} (-1)^{a+b} eta([X_a,X_b], ...rest).
inline Matrix ce_matrix(const AlgebroidPresentation& p, const klac::ExteriorBasis& b, int k) {
    const int r = p.fiber_rank;
    Matrix m(b.dim(k + 1), b.dim(k));
    for (int row = 0; row < b.dim(k + 1); ++row) {
        const std::vector<int> tuple = b.indices(b.mask(k + 1, row));
        for (int col = 0; col < b.dim(k); ++col) {
            const std::vector<int> eta = b.indices(b.mask(k, col));
            Scalar acc(0);
            for (size_t a = 0; a < tuple.size(); ++a)
                for (size_t c = a + 1; c < tuple.size(); ++c) {
                    // [e_{t_a}, e_{t_c}] inserted in front of the remaining vectors
                    std::vector<int> rest;
                    for (size_t t = 0; t < tuple.size(); ++t)
                        if (t != a && t != c) rest.push_back(tuple[t]);
                    const int outer = ((a + 1 + c + 1) % 2 == 0) ? 1 : -1;
                    for (int x = 1; x <= r; ++x) {
                        Scalar coeff = p.bracket_coeff(tuple[a], tuple[c], x);
                        if (coeff.is_zero()) continue;
                        std::vector<int> args;
                        args.push_back(x);
                        args.insert(args.end(), rest.begin(), rest.end());
                        const int s = eval_basis_covector(eta, args);
                        if (s) acc += Scalar(outer * s) * coeff;
                    }
                }
            m.at(row, col) = acc;
        }
    }
    return m;
}

inline Scalar random_scalar(std::mt19937& rng, bool complex_part = true) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Rational re = klac::make_rational(num(rng), den(rng));
    Rational im = complex_part ? klac::make_rational(num(rng), den(rng)) : Rational(0);
    return Scalar(re, im);
}

inline Matrix random_matrix(std::mt19937& rng, int rows, int cols, bool complex_part = true) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, complex_part);
    return m;
}

// Random rational change of basis: a product of unit triangular matrices, so
// it is always invertible.
inline Matrix random_gl(std::mt19937& rng, int n) {
    Matrix lo = Matrix::identity(n), up = Matrix::identity(n);
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lo.at(i, j) = Scalar(klac::make_rational(num(rng), den(rng)));
            up.at(j, i) = Scalar(klac::make_rational(num(rng), den(rng)));
        }
    return lo * up;
}

// Transport of the standard compatible triple by a rational change of basis:
// J = A^{-1} J0 A, g = A^T g0 A, omega = A^T Omega0 A. Always a compatible
// triple on the abelian algebra.
inline AlgebroidPresentation random_abelian_kahler(std::mt19937& rng, int m) {
    AlgebroidPresentation p = klac::make_algebroid_preset("abelian-2m", m);
    const int r = 2 * m;
    Matrix a = random_gl(rng, r);
    Matrix ainv = klac::inverse(a);
    p.complex_structure = ainv * (*p.complex_structure) * a;
    p.metric = a.transpose() * (*p.metric) * a;
    const klac::ExteriorBasis basis(r);
    Matrix om0(r, r);
    for (int t = 0; t < basis.dim(2); ++t) {
        const Scalar& c = p.omega->coeffs.at(t, 0);
        if (c.is_zero()) continue;
        auto idx = basis.indices(basis.mask(2, t));
        om0.at(idx[0] - 1, idx[1] - 1) = c;
        om0.at(idx[1] - 1, idx[0] - 1) = -c;
    }
    Matrix om = a.transpose() * om0 * a;
    klac::FormVector f = klac::FormVector::zero(basis, 2);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            const std::uint32_t mask = (1u << (i - 1)) | (1u << (j - 1));
            f.coeffs.at(basis.position(2, mask), 0) = om.at(i - 1, j - 1);
        }
    p.omega = f;
    klac::require_well_formed(p);
    return p;
}

}  // namespace oracle
