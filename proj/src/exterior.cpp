#include "klac/exterior.hpp"

#include "klac/errors.hpp"

namespace klac {

FormVector wedge(const ExteriorBasis& b, const FormVector& x, const FormVector& y) {
    FormVector out = FormVector::zero(b, x.degree + y.degree);
    if (x.degree + y.degree > b.fiber_rank()) return out;
    for (int i = 0; i < b.dim(x.degree); ++i) {
        if (x.coeffs.at(i, 0).is_zero()) continue;
        const std::uint32_t mi = b.mask(x.degree, i);
        for (int j = 0; j < b.dim(y.degree); ++j) {
            if (y.coeffs.at(j, 0).is_zero()) continue;
            const std::uint32_t mj = b.mask(y.degree, j);
            const int s = ExteriorBasis::wedge_sign(mi, mj);
            if (!s) continue;
            const int p = b.position(x.degree + y.degree, mi | mj);
            out.coeffs.at(p, 0) += Scalar(s) * x.coeffs.at(i, 0) * y.coeffs.at(j, 0);
        }
    }
    return out;
}

GradedOperator wedge_operator(const ExteriorBasis& b, const FormVector& alpha) {
    const int a = alpha.degree;
    GradedOperator op(b, a);
    for (int k = 0; k + a <= b.fiber_rank(); ++k) {
        Matrix& m = op.at(k);
        for (int j = 0; j < b.dim(k); ++j) {
            const std::uint32_t mj = b.mask(k, j);
            for (int i = 0; i < b.dim(a); ++i) {
                if (alpha.coeffs.at(i, 0).is_zero()) continue;
                const std::uint32_t mi = b.mask(a, i);
                const int s = ExteriorBasis::wedge_sign(mi, mj);
                if (!s) continue;
                m.at(b.position(k + a, mi | mj), j) += Scalar(s) * alpha.coeffs.at(i, 0);
            }
        }
    }
    return op;
}

Matrix dual_bivector(const ExteriorBasis& b, const FormVector& omega) {
    if (omega.degree != 2) throw DimensionError("dual_bivector expects a 2-form");
    const int r = b.fiber_rank();
    Matrix om(r, r);
    for (int p = 0; p < b.dim(2); ++p) {
        const Scalar& c = omega.coeffs.at(p, 0);
        if (c.is_zero()) continue;
        auto idx = b.indices(b.mask(2, p));
        om.at(idx[0] - 1, idx[1] - 1) = c;
        om.at(idx[1] - 1, idx[0] - 1) = -c;
    }
    if (determinant(om).is_zero()) throw ModelError("2-form is degenerate");
    return -inverse(om);
}

GradedOperator contraction_operator(const ExteriorBasis& b, const Matrix& pi) {
    GradedOperator op(b, -2);
    for (int k = 2; k <= b.fiber_rank(); ++k) {
        Matrix& m = op.at(k);
        for (int col = 0; col < b.dim(k); ++col) {
            auto idx = b.indices(b.mask(k, col));
            for (size_t a = 0; a < idx.size(); ++a)
                for (size_t bb = a + 1; bb < idx.size(); ++bb) {
                    const Scalar& p = pi.at(idx[a] - 1, idx[bb] - 1);
                    if (p.is_zero()) continue;
                    const int sgn = ((a + bb + 1) % 2 == 0) ? 1 : -1;
                    std::uint32_t rest =
                        b.mask(k, col) & ~(1u << (idx[a] - 1)) & ~(1u << (idx[bb] - 1));
                    m.at(b.position(k - 2, rest), col) += Scalar(sgn) * p;
                }
        }
    }
    return op;
}

LefschetzTriple lefschetz_triple(const ExteriorBasis& b, const FormVector& omega) {
    const int r = b.fiber_rank();
    if (r % 2 != 0) throw ModelError("symplectic model requires even fiber rank");
    const int m = r / 2;
    LefschetzTriple t;
    t.lefschetz = wedge_operator(b, omega);
    t.contraction = contraction_operator(b, dual_bivector(b, omega));
    t.counting = GradedOperator(b, 0);
    for (int k = 0; k <= r; ++k) t.counting.at(k) = Scalar(k - m) * Matrix::identity(b.dim(k));
    return t;
}

Matrix pairing_det_extension(const ExteriorBasis& b, const Matrix& bil, int k) {
    const int n = b.dim(k);
    Matrix out(n, n);
    for (int a = 0; a < n; ++a) {
        auto rows = b.indices(b.mask(k, a));
        for (int c = 0; c < n; ++c) {
            auto cols = b.indices(b.mask(k, c));
            if (k == 0) {
                out.at(a, c) = Scalar(1);
                continue;
            }
            Matrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = bil.at(rows[i] - 1, cols[j] - 1);
            out.at(a, c) = determinant(sub);
        }
    }
    return out;
}

void require_hermitian_positive_definite(const Matrix& h) {
    if (!h.is_square()) throw DimensionError("pairing matrix must be square");
    if (!(h == h.conjugate_transpose())) throw ModelError("pairing matrix is not hermitian");
    for (int n = 1; n <= h.rows(); ++n) {
        Matrix lead(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) lead.at(i, j) = h.at(i, j);
        Scalar d = determinant(lead);
        if (!d.is_real() || !(d.re() > 0))
            throw ModelError("pairing matrix is not positive definite");
    }
}

Matrix metric_form_gram(const ExteriorBasis& b, const Matrix& h_dual, int k) {
    require_hermitian_positive_definite(h_dual);
    return pairing_det_extension(b, h_dual, k);
}

FormVector omega_power_over_factorial(const ExteriorBasis& b, const FormVector& omega, int m) {
    FormVector acc = FormVector::unit(b);
    Rational fact(1);
    for (int i = 1; i <= m; ++i) {
        acc = wedge(b, acc, omega);
        fact *= i;
    }
    return Scalar(Rational(1) / fact) * acc;
}

Scalar top_coefficient(const ExteriorBasis& b, const FormVector& top_form) {
    if (top_form.degree != b.fiber_rank()) throw DimensionError("not a top-degree form");
    return top_form.coeffs.at(0, 0);
}

// Star against the perfect wedge pairing: the only nonzero wedge of e^I with
// a complementary-degree basis element lands on K = complement(I), so the
// defining system is diagonal in complementary multi-indices. The family
// Lambda^k -> Lambda^{r-k} has degree-dependent shift; it is stored in a
// shift-0 container whose at(k) block is the dim(r-k) x dim(k) matrix.
static GradedOperator make_star(const ExteriorBasis& b, const FormVector& omega, int m,
                                bool hermitian, const Matrix& fiber_pairing) {
    const int r = b.fiber_rank();
    FormVector vol = omega_power_over_factorial(b, omega, m);
    const Scalar c_top = top_coefficient(b, vol);
    if (c_top.is_zero()) throw ModelError("omega^m/m! vanishes");
    GradedOperator star(b, 0);
    for (int k = 0; k <= r; ++k) {
        Matrix pk = pairing_det_extension(b, fiber_pairing, k);
        Matrix mk(b.dim(r - k), b.dim(k));
        for (int a = 0; a < b.dim(k); ++a) {  // a indexes alpha = e^I rows of the pairing
            const std::uint32_t mi = b.mask(k, a);
            const int sgn = b.top_sign(mi);
            const int row = b.position(r - k, b.complement(mi));
            for (int j = 0; j < b.dim(k); ++j) {
                Scalar v = pk.at(a, j) * c_top * Scalar(sgn);
                mk.at(row, j) = hermitian ? v.conj() : v;
            }
        }
        star.at(k) = mk;
    }
    if (hermitian) {
        const Scalar phase = Scalar::i_power(long(m) * long(m));
        star = phase * star;
    }
    return star;
}

GradedOperator hodge_star(const ExteriorBasis& b, const Matrix& h_dual, const FormVector& omega,
                          int m) {
    require_hermitian_positive_definite(h_dual);
    return make_star(b, omega, m, /*hermitian=*/true, h_dual);
}

GradedOperator symplectic_star(const ExteriorBasis& b, const FormVector& omega, int m) {
    Matrix pi = dual_bivector(b, omega);
    return make_star(b, omega, m, /*hermitian=*/false, pi);
}

GradedOperator brylinski_codifferential(const ExteriorBasis& b, const GradedOperator& d,
                                        const GradedOperator& star_om, CodifferentialSign sign) {
    const int r = b.fiber_rank();
    GradedOperator ds(b, -1);
    for (int k = 1; k <= r; ++k) {
        // Lambda^k --star--> Lambda^{r-k} --d--> Lambda^{r-k+1} --star--> Lambda^{k-1}
        Matrix comp = star_om.at(r - k + 1) * d.at(r - k) * star_om.at(k);
        const int s = (sign == CodifferentialSign::brylinski) ? ((k + 1) % 2 ? -1 : 1)
                                                              : (k % 2 ? -1 : 1);
        ds.at(k) = Scalar(s) * comp;
    }
    return ds;
}

GradedOperator multiplicative_extension(const ExteriorBasis& b, const Matrix& a) {
    const int r = b.fiber_rank();
    if (a.rows() != r || a.cols() != r) throw DimensionError("covector map must be r x r");
    GradedOperator op(b, 0);
    for (int k = 0; k <= r; ++k) {
        Matrix& m = op.at(k);
        for (int col = 0; col < b.dim(k); ++col) {
            auto idx = b.indices(b.mask(k, col));
            FormVector acc = FormVector::unit(b);
            for (int x : idx) {
                FormVector img = FormVector::zero(b, 1);
                for (int i = 0; i < r; ++i) img.coeffs.at(i, 0) = a.at(i, x - 1);
                acc = wedge(b, acc, img);
            }
            for (int i = 0; i < b.dim(k); ++i) m.at(i, col) = acc.coeffs.at(i, 0);
        }
    }
    return op;
}

GradedOperator form_complex_structure(const ExteriorBasis& b, const Matrix& j_fiber) {
    return multiplicative_extension(b, j_fiber.transpose());
}

const Matrix& Bigrading::projector(int p, int q) const {
    const int k = p + q;
    if (p < 0 || q < 0 || k > r_) return empty_;
    return proj_[k][p];
}

int Bigrading::dim(int p, int q) const {
    if (p < 0 || q < 0 || p > m_ || q > m_) return 0;
    auto binom = [](int n, int k) {
        if (k < 0 || k > n) return 0;
        long long v = 1;
        for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
        return int(v);
    };
    return binom(m_, p) * binom(m_, q);
}

Bigrading bigrade(const ExteriorBasis& b, const Matrix& j_fiber) {
    const int r = b.fiber_rank();
    if (r % 2 != 0) throw ModelError("complex structure requires even fiber rank");
    if (!(j_fiber * j_fiber == -Matrix::identity(r))) throw ModelError("J^2 != -id");
    const int m = r / 2;
    Matrix d = j_fiber.transpose();
    const Scalar i = Scalar::i();
    const Scalar half(Rational(1, 2));
    Matrix p10 = half * (Matrix::identity(r) - i * d);
    Matrix p01 = half * (Matrix::identity(r) + i * d);

    Bigrading big(r, m);
    for (int k = 0; k <= r; ++k) {
        big.init_degree(k, b.dim(k));
        // Lambda^k(t P10 + P01) is a degree-k polynomial in t whose t^p
        // coefficient is the projector onto p-many (1,0) factors; evaluate at
        // t = 0..k and invert the Vandermonde system.
        std::vector<Matrix> evals;
        for (int t = 0; t <= k; ++t) {
            Matrix at = Scalar(t) * p10 + p01;
            evals.push_back(multiplicative_extension(b, at).at(k));
        }
        Matrix vand(k + 1, k + 1);
        for (int t = 0; t <= k; ++t) {
            Scalar pw(1);
            for (int p = 0; p <= k; ++p) {
                vand.at(t, p) = pw;
                pw *= Scalar(t);
            }
        }
        Matrix vinv = inverse(vand);
        for (int p = 0; p <= k; ++p) {
            Matrix acc(b.dim(k), b.dim(k));
            for (int t = 0; t <= k; ++t) acc += vinv.at(p, t) * evals[size_t(t)];
            big.slot(k, p) = acc;
        }
    }
    return big;
}

}  // namespace klac
