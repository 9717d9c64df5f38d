#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "klac/exterior.hpp"

namespace klac {

// Structure-constant presentation of a Lie algebroid over a point base with a
// formal tangent dimension. [e_i, e_j] = sum_k c_{ijk} e_k, stored for i < j.
// Optional metric / complex / symplectic data and an integrating-section
// coefficient eta (for the top section e_1 ^ ... ^ e_r).
struct AlgebroidPresentation {
    int fiber_rank = 0;
    std::map<std::array<int, 3>, Scalar> structure;  // (i,j,k) with i<j -> c_ijk
    int base_dim = 0;
    Matrix anchor;  // fiber_rank x base_dim
    std::optional<Matrix> metric;
    std::optional<Matrix> complex_structure;
    std::optional<FormVector> omega;
    std::optional<Scalar> eta;

    // c_{ijk} with antisymmetry in (i,j) applied; zero when i == j or unset.
    Scalar bracket_coeff(int i, int j, int k) const;

    // [u, v] in fiber coordinates.
    Matrix bracket(const Matrix& u, const Matrix& v) const;

    bool has_triple() const {
        return metric.has_value() && complex_structure.has_value() && omega.has_value();
    }
};

struct CheckWitness {
    std::vector<int> indices;  // offending basis tuple, 1-based; may be empty
    std::string detail;
};

struct Verdict {
    bool ok = false;
    std::optional<CheckWitness> witness;

    static Verdict pass() { return Verdict{true, std::nullopt}; }
    static Verdict fail(std::vector<int> idx, std::string detail) {
        return Verdict{false, CheckWitness{std::move(idx), std::move(detail)}};
    }
    explicit operator bool() const { return ok; }
};

struct ValidationReport {
    Verdict jacobi;
    Verdict compatible_triple;
    Verdict nijenhuis_zero;
    Verdict omega_closed;
    Verdict unimodular;
    Verdict elliptic;
    Verdict hodge_admissible;
    Verdict kahler() const;  // triple && nijenhuis && omega_closed
};

// Chevalley-Eilenberg differential of the presentation: d e^k =
// -sum_{i<j} c_{ijk} e^i ^ e^j extended as a degree-+1 antiderivation. The
// anchor term vanishes over a point base.
GradedOperator ce_differential(const ExteriorBasis& b, const AlgebroidPresentation& p);

Verdict validate_jacobi(const AlgebroidPresentation& p);
Verdict validate_compatible_triple(const AlgebroidPresentation& p);  // ModelError if fields missing
Verdict validate_nijenhuis(const AlgebroidPresentation& p);
Verdict validate_kahler(const AlgebroidPresentation& p);
Verdict check_ellipticity(const AlgebroidPresentation& p);
Verdict check_unimodular(const AlgebroidPresentation& p);
Verdict check_hodge_admissible(const AlgebroidPresentation& p);

// Scale eta so that <omega^m/m!, eta> = 1. Idempotent. ModelError if omega is
// degenerate/absent or eta absent.
AlgebroidPresentation normalize_integrating_section(const AlgebroidPresentation& p);

// All verdicts at once; missing optional data yields a failing verdict whose
// witness names the missing datum instead of throwing.
ValidationReport validate_all(const AlgebroidPresentation& p);

// Structural invariants of the stored data itself (indices in range, J^2=-id
// when present, metric symmetric positive definite when present, eta nonzero
// when present). ModelError on violation.
void require_well_formed(const AlgebroidPresentation& p);

}  // namespace klac
