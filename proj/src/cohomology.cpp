#include "klac/cohomology.hpp"

#include <sstream>

#include "klac/errors.hpp"

namespace klac {

DifferentialComplex build_complex(const AlgebroidPresentation& p) {
    if (auto v = validate_jacobi(p); !v)
        throw ModelError("Jacobi identity fails: " + (v.witness ? v.witness->detail : ""));
    DifferentialComplex c{ExteriorBasis(p.fiber_rank), GradedOperator()};
    c.d = ce_differential(c.basis, p);
    GradedOperator dd = c.d * c.d;
    if (!dd.is_zero()) throw ContractError("d^2 != 0 on a Jacobi-valid presentation");
    return c;
}

namespace {

Matrix scale_columns_first_one(Matrix m) {
    for (int c = 0; c < m.cols(); ++c)
        for (int i = 0; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                Scalar inv = m.at(i, c).inverse();
                for (int j = i; j < m.rows(); ++j) m.at(j, c) *= inv;
                break;
            }
    return m;
}

}  // namespace

std::vector<Matrix> form_grams(const ExteriorBasis& b, const Matrix& metric) {
    Matrix h_dual = inverse(metric);
    std::vector<Matrix> grams;
    grams.reserve(size_t(b.fiber_rank()) + 1);
    for (int k = 0; k <= b.fiber_rank(); ++k) grams.push_back(metric_form_gram(b, h_dual, k));
    return grams;
}

GradedOperator gram_adjoint(const ExteriorBasis& b, const GradedOperator& op,
                            const std::vector<Matrix>& grams) {
    if (op.shift() != 1) throw DimensionError("gram_adjoint expects a shift +1 operator");
    GradedOperator adj(b, -1);
    for (int k = 1; k <= b.fiber_rank(); ++k)
        adj.at(k) = inverse(grams[size_t(k) - 1]) * op.at(k - 1).conjugate_transpose() *
                    grams[size_t(k)];
    return adj;
}

CohomologyResult cohomology(const AlgebroidPresentation& p) {
    DifferentialComplex c = build_complex(p);
    const int r = p.fiber_rank;
    CohomologyResult out;
    out.dims.resize(r + 1);
    out.closed.resize(r + 1);
    out.exact.resize(r + 1);
    for (int k = 0; k <= r; ++k) {
        out.closed[k] = k == r ? Subspace::full(c.basis.dim(r)) : kernel_basis(c.d.at(k));
        out.exact[k] = k == 0 ? Subspace::zero(1) : column_space(c.d.at(k - 1));
        out.dims[k] = out.closed[k].dim() - out.exact[k].dim();
    }
    if (p.metric) {
        auto grams = form_grams(c.basis, *p.metric);
        GradedOperator ddag = gram_adjoint(c.basis, c.d, grams);
        GradedOperator delta = ddag * c.d + c.d * ddag;
        out.harmonic.resize(r + 1);
        for (int k = 0; k <= r; ++k)
            out.harmonic[k] = scale_columns_first_one(kernel_basis_matrix(delta.at(k)));
        if (p.complex_structure) {
            Bigrading big = bigrade(c.basis, *p.complex_structure);
            const int m = r / 2;
            std::vector<std::vector<int>> table(m + 1, std::vector<int>(m + 1, 0));
            for (int pp = 0; pp <= m; ++pp)
                for (int q = 0; q <= m; ++q) {
                    const Matrix& proj = big.projector(pp, q);
                    if (proj.rows() == 0) continue;
                    table[pp][q] = rank(proj * out.harmonic[pp + q]);
                }
            out.bigraded = table;
        }
    }
    return out;
}

SplitDifferential split_differential(const AlgebroidPresentation& p, const Bigrading& big) {
    DifferentialComplex c = build_complex(p);
    const int r = p.fiber_rank;
    SplitDifferential out{GradedOperator(c.basis, 1), GradedOperator(c.basis, 1)};
    for (int k = 0; k < r; ++k) {
        Matrix del(c.basis.dim(k + 1), c.basis.dim(k));
        Matrix dbar(c.basis.dim(k + 1), c.basis.dim(k));
        for (int pp = 0; pp <= k; ++pp) {
            const int q = k - pp;
            Matrix dsrc = c.d.at(k) * big.projector(pp, q);
            del += big.projector(pp + 1, q) * dsrc;
            dbar += big.projector(pp, q + 1) * dsrc;
        }
        out.del.at(k) = del;
        out.dbar.at(k) = dbar;
        Matrix resid = c.d.at(k) - del - dbar;
        for (int col = 0; col < resid.cols(); ++col)
            for (int row = 0; row < resid.rows(); ++row)
                if (!resid.at(row, col).is_zero()) {
                    std::ostringstream os;
                    os << "d has a bidegree-(2,-1)/(-1,2) component on e^";
                    for (int x : c.basis.indices(c.basis.mask(k, col))) os << x;
                    throw ModelError(os.str());
                }
    }
    // the projector route and the Nijenhuis tensor must agree on integrability
    if (p.complex_structure && !validate_nijenhuis(p))
        throw ContractError("d split cleanly but the Nijenhuis tensor is nonzero");
    return out;
}

std::vector<std::vector<int>> dolbeault_dims(const AlgebroidPresentation& p) {
    if (!p.complex_structure) throw ModelError("Dolbeault table needs J");
    DifferentialComplex c = build_complex(p);
    Bigrading big = bigrade(c.basis, *p.complex_structure);
    SplitDifferential sd = split_differential(p, big);
    const int m = p.fiber_rank / 2;
    std::vector<std::vector<int>> table(m + 1, std::vector<int>(m + 1, 0));
    for (int pp = 0; pp <= m; ++pp)
        for (int q = 0; q <= m; ++q) {
            const int k = pp + q;
            Subspace pq = column_space(big.projector(pp, q));
            // kernel of dbar restricted to Lambda^{p,q}
            const int zdim = pq.dim() - rank(sd.dbar.at(k) * pq.basis);
            int bdim = 0;
            if (q >= 1) {
                Subspace prev = column_space(big.projector(pp, q - 1));
                bdim = rank(sd.dbar.at(k - 1) * prev.basis);
            }
            table[pp][q] = zdim - bdim;
        }
    return table;
}

LaplaceSuite laplacians(const AlgebroidPresentation& p) {
    if (auto v = validate_kahler(p); !v)
        throw ModelError("laplacians need a Kahler-validated model: " +
                         (v.witness ? v.witness->detail : ""));
    AlgebroidPresentation pn = p;
    if (!pn.eta) pn.eta = Scalar(1);
    pn = normalize_integrating_section(pn);
    DifferentialComplex c = build_complex(pn);
    const int r = pn.fiber_rank;
    const int m = r / 2;
    LaplaceSuite out;
    out.d = c.d;
    auto grams = form_grams(c.basis, *pn.metric);
    out.d_dagger = gram_adjoint(c.basis, c.d, grams);

    Matrix h_dual = inverse(*pn.metric);
    GradedOperator star_h = hodge_star(c.basis, h_dual, *pn.omega, m);
    out.d_dagger_via_star = GradedOperator(c.basis, -1);
    const Scalar pref = (m % 2 == 0) ? Scalar(-1) : Scalar(1);  // -(-1)^{m^2}
    for (int k = 1; k <= r; ++k)
        out.d_dagger_via_star.at(k) = pref * (star_h.at(r - k + 1) * c.d.at(r - k) * star_h.at(k));
    out.adjoint_routes_agree = (out.d_dagger == out.d_dagger_via_star);
    if (!out.adjoint_routes_agree)
        out.route_diagnostic =
            "Gram adjoint and star formula disagree; the model is not unimodular, so the "
            "integration pairing is not an inner product and the star route is not an adjoint";

    Bigrading big = bigrade(c.basis, *pn.complex_structure);
    SplitDifferential sd = split_differential(pn, big);
    out.del = sd.del;
    out.dbar = sd.dbar;
    out.del_dagger = gram_adjoint(c.basis, sd.del, grams);
    out.dbar_dagger = gram_adjoint(c.basis, sd.dbar, grams);
    out.delta = out.d_dagger * out.d + out.d * out.d_dagger;
    out.delta_del = out.del_dagger * out.del + out.del * out.del_dagger;
    out.delta_dbar = out.dbar_dagger * out.dbar + out.dbar * out.dbar_dagger;
    return out;
}

HodgeDecomposition hodge_decomposition(const AlgebroidPresentation& p) {
    if (!p.metric) throw ModelError("hodge decomposition needs a metric");
    if (auto v = check_unimodular(p); !v)
        throw ModelError("hodge decomposition needs a unimodular model: without Stokes the Gram "
                         "adjoint is not an adjoint (" +
                         (v.witness ? v.witness->detail : "") + ")");
    DifferentialComplex c = build_complex(p);
    const int r = p.fiber_rank;
    auto grams = form_grams(c.basis, *p.metric);
    GradedOperator ddag = gram_adjoint(c.basis, c.d, grams);
    GradedOperator delta = ddag * c.d + c.d * ddag;

    HodgeDecomposition out;
    out.harmonic.resize(r + 1);
    out.image_d.resize(r + 1);
    out.image_d_dagger.resize(r + 1);
    out.orthogonal = Verdict::pass();
    out.complete = Verdict::pass();
    out.kernel_match = Verdict::pass();
    out.unique_representatives = Verdict::pass();
    for (int k = 0; k <= r; ++k) {
        Subspace kd = k < r ? kernel_basis(c.d.at(k)) : Subspace::full(c.basis.dim(r));
        Subspace kdd = k > 0 ? kernel_basis(ddag.at(k)) : Subspace::full(c.basis.dim(0));
        out.harmonic[k] = intersect(kd, kdd);
        out.image_d[k] = k > 0 ? column_space(c.d.at(k - 1)) : Subspace::zero(1);
        out.image_d_dagger[k] =
            k < r ? column_space(ddag.at(k + 1)) : Subspace::zero(c.basis.dim(r));

        auto orth = [&](const Subspace& a, const Subspace& bsp) {
            Matrix m = a.basis.conjugate_transpose() * grams[size_t(k)] * bsp.basis;
            return m.is_zero();
        };
        if (!orth(out.harmonic[k], out.image_d[k]) ||
            !orth(out.harmonic[k], out.image_d_dagger[k]) ||
            !orth(out.image_d[k], out.image_d_dagger[k]))
            out.orthogonal = Verdict::fail({k}, "pieces not orthogonal in degree " +
                                                    std::to_string(k));
        if (out.harmonic[k].dim() + out.image_d[k].dim() + out.image_d_dagger[k].dim() !=
            c.basis.dim(k))
            out.complete = Verdict::fail({k}, "dimensions do not add up in degree " +
                                                  std::to_string(k));
        Subspace ker_delta = kernel_basis(delta.at(k));
        if (!same_subspace(ker_delta, out.harmonic[k]))
            out.kernel_match =
                Verdict::fail({k}, "ker Delta != ker d cap ker d^dagger in degree " +
                                       std::to_string(k));
        // unique harmonic representative per class: harmonic cap im d = 0 and
        // the projection to cohomology is bijective (dims match the Betti
        // numbers and no two harmonics are cohomologous).
        if (intersect(out.harmonic[k], out.image_d[k]).dim() != 0)
            out.unique_representatives =
                Verdict::fail({k}, "a nonzero harmonic form is exact in degree " +
                                       std::to_string(k));
        const int betti = kd.dim() - out.image_d[k].dim();
        if (out.harmonic[k].dim() != betti)
            out.unique_representatives =
                Verdict::fail({k}, "harmonic space does not match cohomology in degree " +
                                       std::to_string(k));
    }
    if (p.complex_structure) {
        Bigrading big = bigrade(c.basis, *p.complex_structure);
        const int m = r / 2;
        out.bigraded_harmonic.assign(m + 1, std::vector<int>(m + 1, 0));
        for (int pp = 0; pp <= m; ++pp)
            for (int q = 0; q <= m; ++q) {
                const Matrix& proj = big.projector(pp, q);
                if (proj.rows() == 0) continue;
                out.bigraded_harmonic[pp][q] = rank(proj * out.harmonic[pp + q].basis);
            }
    }
    return out;
}

QuasiIsoReport subcomplex_quasi_iso(const ExteriorBasis& b, const GradedOperator& d,
                                    const std::vector<Subspace>& sub) {
    const int r = b.fiber_rank();
    QuasiIsoReport rep;
    rep.d_stable.resize(r + 1, true);
    rep.h_sub.resize(r + 1);
    rep.h_full.resize(r + 1);
    rep.induced_rank.resize(r + 1);
    rep.quasi_iso = true;
    for (int k = 0; k <= r; ++k) {
        if (k < r) rep.d_stable[k] = subspace_contains(sub[size_t(k) + 1], d.at(k) * sub[size_t(k)].basis);
        Subspace kd = k < r ? kernel_basis(d.at(k)) : Subspace::full(b.dim(r));
        Subspace z_sub = intersect(sub[size_t(k)], kd);
        Subspace b_sub = k > 0 ? column_space(d.at(k - 1) * sub[size_t(k) - 1].basis)
                               : Subspace::zero(b.dim(0));
        Subspace b_full = k > 0 ? column_space(d.at(k - 1)) : Subspace::zero(b.dim(0));
        rep.h_sub[k] = z_sub.dim() - b_sub.dim();
        rep.h_full[k] = kd.dim() - b_full.dim();
        rep.induced_rank[k] =
            column_space(Matrix::hstack(z_sub.basis, b_full.basis)).dim() - b_full.dim();
        if (!rep.d_stable[k] || rep.h_sub[k] != rep.h_full[k] ||
            rep.induced_rank[k] != rep.h_full[k])
            rep.quasi_iso = false;
    }
    return rep;
}

}  // namespace klac
