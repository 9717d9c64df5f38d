#pragma once

#include "klac/presentation.hpp"

namespace klac {

struct DifferentialComplex {
    ExteriorBasis basis;
    GradedOperator d;  // shift +1, d.d = 0
};

// ModelError if the Jacobi identity fails (d would not square to zero).
DifferentialComplex build_complex(const AlgebroidPresentation& p);

struct CohomologyResult {
    std::vector<int> dims;        // dim H^k, k = 0..r
    std::vector<Subspace> closed;  // ker d_k
    std::vector<Subspace> exact;   // im d_{k-1}
    // Harmonic bases (ker Delta) when a metric is present; columns scaled to
    // first nonzero coefficient 1.
    std::vector<Matrix> harmonic;
    // h^{p,q} = dim(ker Delta cap Lambda^{p,q}) when metric and J are present.
    std::optional<std::vector<std::vector<int>>> bigraded;
};

CohomologyResult cohomology(const AlgebroidPresentation& p);

struct SplitDifferential {
    GradedOperator del;   // (1,0) component
    GradedOperator dbar;  // (0,1) component
};

// d = del + dbar with exactly vanishing residual components; ModelError with
// the first offending basis element otherwise (non-integrable J).
SplitDifferential split_differential(const AlgebroidPresentation& p, const Bigrading& big);

// Dolbeault table h^{p,q} of the (Lambda^{p,.}, dbar) complexes.
std::vector<std::vector<int>> dolbeault_dims(const AlgebroidPresentation& p);

struct LaplaceSuite {
    GradedOperator d;
    GradedOperator d_dagger;           // Gram adjoint of d (shift -1)
    GradedOperator d_dagger_via_star;  // -(-1)^{m^2} star_h d star_h
    bool adjoint_routes_agree = false;
    std::string route_diagnostic;  // set when they disagree (non-unimodular)
    GradedOperator del, dbar, del_dagger, dbar_dagger;
    GradedOperator delta, delta_del, delta_dbar;  // shift 0
};

// Kahler-validated metric model required (ModelError otherwise); eta is
// normalized internally.
LaplaceSuite laplacians(const AlgebroidPresentation& p);

struct HodgeDecomposition {
    std::vector<Subspace> harmonic;  // ker d cap ker d^dagger per degree
    std::vector<Subspace> image_d;
    std::vector<Subspace> image_d_dagger;
    Verdict orthogonal;        // the three spaces are pairwise Gram-orthogonal
    Verdict complete;          // dims add up to binomial(r,k)
    Verdict kernel_match;      // ker Delta = ker d cap ker d^dagger
    Verdict unique_representatives;
    std::vector<std::vector<int>> bigraded_harmonic;  // h^{p,q} when J present; empty otherwise
};

// Metric model, unimodular required (ModelError otherwise by way of a
// diagnostic: without Stokes the Gram adjoint is not an adjoint).
HodgeDecomposition hodge_decomposition(const AlgebroidPresentation& p);

// Cohomology of a degreewise subcomplex and the inclusion-induced maps.
struct QuasiIsoReport {
    std::vector<bool> d_stable;  // d(S_k) inside S_{k+1}
    std::vector<int> h_sub, h_full, induced_rank;
    bool quasi_iso = false;
};

QuasiIsoReport subcomplex_quasi_iso(const ExteriorBasis& b, const GradedOperator& d,
                                    const std::vector<Subspace>& sub);

// Gram matrices of the degree-k form spaces for the dual metric g^{-1}.
std::vector<Matrix> form_grams(const ExteriorBasis& b, const Matrix& metric);

// Gram (sesquilinear) adjoint family of a shift +1 operator.
GradedOperator gram_adjoint(const ExteriorBasis& b, const GradedOperator& op,
                            const std::vector<Matrix>& grams);

}  // namespace klac
