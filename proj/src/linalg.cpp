#include "klac/linalg.hpp"

#include <cassert>

#include "klac/errors.hpp"

namespace klac {

namespace {

// Gaussian integer, the working scalar of the fraction-free pass.
struct Zi {
    mpz_class re, im;
    Zi() : re(0), im(0) {}
    Zi(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
    bool is_zero() const { return re == 0 && im == 0; }
};

Zi mul(const Zi& a, const Zi& b) {
    return Zi(mpz_class(a.re * b.re - a.im * b.im), mpz_class(a.re * b.im + a.im * b.re));
}

Zi sub(const Zi& a, const Zi& b) {
    return Zi(mpz_class(a.re - b.re), mpz_class(a.im - b.im));
}

// Exact division in Z[i]; Bareiss guarantees divisibility.
Zi divexact(const Zi& a, const Zi& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class nr = a.re * b.re + a.im * b.im;
    mpz_class ni = a.im * b.re - a.re * b.im;
    Zi q;
    assert(nr % n == 0 && ni % n == 0);
    mpz_divexact(q.re.get_mpz_t(), nr.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), ni.get_mpz_t(), n.get_mpz_t());
    return q;
}

// Clear denominators row by row; rank, kernel and row space are unchanged.
std::vector<std::vector<Zi>> to_integer_grid(const Matrix& m) {
    std::vector<std::vector<Zi>> g(m.rows(), std::vector<Zi>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            mpz_class l2;
            mpz_lcm(l2.get_mpz_t(), l.get_mpz_t(), s.re().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l2.get_mpz_t(), s.im().get_den().get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Scalar& s = m.at(i, j);
            g[i][j].re = s.re().get_num() * (l / s.re().get_den());
            g[i][j].im = s.im().get_num() * (l / s.im().get_den());
        }
    }
    return g;
}

}  // namespace

Echelon echelon_form(const Matrix& m) {
    auto g = to_integer_grid(m);
    const int rows = m.rows(), cols = m.cols();
    Echelon out;
    Zi prev(mpz_class(1), mpz_class(0));
    int cur = 0;
    for (int col = 0; col < cols && cur < rows; ++col) {
        int pr = -1;
        for (int rrow = cur; rrow < rows; ++rrow)
            if (!g[rrow][col].is_zero()) {
                pr = rrow;
                break;
            }
        if (pr < 0) continue;
        if (pr != cur) std::swap(g[pr], g[cur]);
        const Zi pivot = g[cur][col];
        for (int rrow = cur + 1; rrow < rows; ++rrow) {
            const Zi head = g[rrow][col];
            for (int j = col; j < cols; ++j) {
                Zi t = sub(mul(g[rrow][j], pivot), mul(head, g[cur][j]));
                g[rrow][j] = divexact(t, prev);
            }
        }
        prev = pivot;
        out.pivot_cols.push_back(col);
        ++cur;
    }
    out.u = Matrix(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out.u.at(i, j) = Scalar(Rational(g[i][j].re), Rational(g[i][j].im));
    return out;
}

int rank(const Matrix& m) {
    return echelon_form(m).rank();
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Scalar(1);
    Matrix a = m;
    Scalar det(1);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (!a.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) return Scalar(0);
        if (pr != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pr, j), a.at(col, j));
            det = -det;
        }
        const Scalar piv = a.at(col, col);
        det *= piv;
        const Scalar inv = piv.inverse();
        for (int i = col + 1; i < n; ++i) {
            Scalar f = a.at(i, col) * inv;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return det;
}

namespace {

// Back-substitute u*x = rhs (rhs a column of the echelon tail) with free
// variables zero; `ncols` is the width of the variable block.
Matrix back_substitute(const Echelon& e, int ncols, const std::vector<int>& rhs_cols) {
    Matrix x(ncols, int(rhs_cols.size()));
    for (size_t c = 0; c < rhs_cols.size(); ++c) {
        const int bc = rhs_cols[c];
        for (int p = e.rank() - 1; p >= 0; --p) {
            const int pc = e.pivot_cols[p];
            Scalar acc = e.u.at(p, bc);
            for (int j = pc + 1; j < ncols; ++j)
                if (!e.u.at(p, j).is_zero() && !x.at(j, c).is_zero()) acc -= e.u.at(p, j) * x.at(j, c);
            x.at(pc, c) = acc / e.u.at(p, pc);
        }
    }
    return x;
}

}  // namespace

Matrix kernel_basis_matrix(const Matrix& m) {
    Echelon e = echelon_form(m);
    const int n = m.cols();
    std::vector<int> free_cols;
    {
        size_t p = 0;
        for (int j = 0; j < n; ++j) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    Matrix k(n, int(free_cols.size()));
    for (size_t c = 0; c < free_cols.size(); ++c) {
        const int fc = free_cols[c];
        k.at(fc, int(c)) = Scalar(1);
        for (int p = e.rank() - 1; p >= 0; --p) {
            const int pc = e.pivot_cols[p];
            if (pc > fc) continue;
            Scalar acc(0);
            for (int j = pc + 1; j < n; ++j)
                if (!e.u.at(p, j).is_zero() && !k.at(j, int(c)).is_zero())
                    acc -= e.u.at(p, j) * k.at(j, int(c));
            k.at(pc, int(c)) = acc / e.u.at(p, pc);
        }
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve shape mismatch");
    Echelon e = echelon_form(Matrix::hstack(a, b));
    for (int pc : e.pivot_cols)
        if (pc >= a.cols()) return std::nullopt;
    std::vector<int> rhs;
    rhs.reserve(b.cols());
    for (int j = 0; j < b.cols(); ++j) rhs.push_back(a.cols() + j);
    return back_substitute(e, a.cols(), rhs);
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw DimensionError("inverse of non-square matrix");
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x || rank(a) != a.rows()) throw ModelError("matrix is singular");
    return *x;
}

Subspace column_space(const Matrix& m) {
    Echelon e = echelon_form(m);
    Matrix basis(m.rows(), e.rank());
    for (int c = 0; c < e.rank(); ++c)
        for (int i = 0; i < m.rows(); ++i) basis.at(i, c) = m.at(i, e.pivot_cols[c]);
    return Subspace{m.rows(), basis};
}

Subspace kernel_basis(const Matrix& m) {
    return Subspace{m.cols(), kernel_basis_matrix(m)};
}

bool subspace_contains(const Subspace& s, const Matrix& vectors) {
    if (vectors.cols() == 0) return true;
    if (vectors.rows() != s.ambient_dim) throw DimensionError("ambient mismatch");
    return solve(s.basis, vectors).has_value();
}

bool same_subspace(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw DimensionError("ambient mismatch");
    return a.dim() == b.dim() && subspace_contains(a, b.basis);
}

SumIntersection subspace_ops(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) throw DimensionError("subspace_ops: ambient mismatch");
    SumIntersection out;
    out.sum = column_space(Matrix::hstack(a.basis, b.basis));
    if (a.dim() == 0 || b.dim() == 0) {
        out.intersection = Subspace::zero(a.ambient_dim);
        return out;
    }
    Matrix joint = Matrix::hstack(a.basis, -b.basis);
    Matrix k = kernel_basis_matrix(joint);
    Matrix vecs(a.ambient_dim, k.cols());
    for (int c = 0; c < k.cols(); ++c) {
        Matrix x(a.dim(), 1);
        for (int i = 0; i < a.dim(); ++i) x.at(i, 0) = k.at(i, c);
        vecs.set_col(c, a.basis * x);
    }
    // columns are already independent: both basis blocks are.
    out.intersection = Subspace{a.ambient_dim, vecs};
    return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    return subspace_ops(a, b).intersection;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    return subspace_ops(a, b).sum;
}

Matrix quotient_representatives(const Subspace& ker, const Subspace& im) {
    Matrix cur = im.basis;
    int cur_rank = rank(cur);
    Matrix reps(ker.ambient_dim, 0);
    for (int c = 0; c < ker.dim(); ++c) {
        Matrix cand = Matrix::hstack(cur, ker.basis.col(c));
        if (rank(cand) > cur_rank) {
            reps = Matrix::hstack(reps, ker.basis.col(c));
            cur = cand;
            ++cur_rank;
        }
    }
    return reps;
}

QuotientMap induced_map_on_quotient(const Matrix& op, const Subspace& src_ker,
                                    const Subspace& src_im, const Subspace& dst_ker,
                                    const Subspace& dst_im) {
    if (op.cols() != src_ker.ambient_dim || op.rows() != dst_ker.ambient_dim)
        throw DimensionError("induced_map: operator shape mismatch");
    if (!subspace_contains(src_ker, src_im.basis) || !subspace_contains(dst_ker, dst_im.basis))
        throw ContractError("induced_map: im is not contained in ker");
    if (!subspace_contains(dst_ker, op * src_ker.basis))
        throw ContractError("induced_map: operator does not preserve the kernel");
    if (!subspace_contains(dst_im, op * src_im.basis))
        throw ContractError("induced_map: operator does not preserve the image");

    QuotientMap out;
    out.src_reps = quotient_representatives(src_ker, src_im);
    out.dst_reps = quotient_representatives(dst_ker, dst_im);
    const int ns = out.src_reps.cols(), nd = out.dst_reps.cols();
    out.map = Matrix(nd, ns);
    if (ns == 0) return out;
    Matrix target = Matrix::hstack(out.dst_reps, dst_im.basis);
    auto x = solve(target, op * out.src_reps);
    if (!x) throw ContractError("induced_map: image not expressible in quotient basis");
    for (int j = 0; j < ns; ++j)
        for (int i = 0; i < nd; ++i) out.map.at(i, j) = x->at(i, j);
    return out;
}

}  // namespace klac
