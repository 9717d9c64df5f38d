#pragma once

#include "klac/operators.hpp"

namespace klac {

FormVector wedge(const ExteriorBasis& b, const FormVector& x, const FormVector& y);

// Left-wedge matrices beta |-> alpha ^ beta in every degree.
GradedOperator wedge_operator(const ExteriorBasis& b, const FormVector& alpha);

// Pi = -Omega^{-1} where Omega_ij = omega(e_i, e_j). ModelError if omega is
// degenerate. The sign is fixed so that [L, iota_Pi] = (k-m) id holds; see
// lefschetz_triple.
Matrix dual_bivector(const ExteriorBasis& b, const FormVector& omega);

// Contraction by an antisymmetric bivector matrix pi^{ij}:
// on e^I with indices at 1-based tuple positions a < b the pair (i_a, i_b)
// contributes pi^{i_a i_b} * (-1)^{a+b+1} e^{I \ {i_a, i_b}}.
GradedOperator contraction_operator(const ExteriorBasis& b, const Matrix& pi);

struct LefschetzTriple {
    GradedOperator lefschetz;    // L = omega ^ -
    GradedOperator contraction;  // capital-Lambda = iota_Pi
    GradedOperator counting;     // H = (k - m) id per degree
};

// sl2 triple of a nondegenerate 2-form; ModelError on odd fiber rank or
// degenerate omega. Satisfies [L,Lambda]=H, [H,L]=2L, [H,Lambda]=-2Lambda.
LefschetzTriple lefschetz_triple(const ExteriorBasis& b, const FormVector& omega);

// D[I,J] = det(bil[I,J]) on the degree-k multi-index basis (no symmetry
// assumptions; used for both metric and bivector pairings).
Matrix pairing_det_extension(const ExteriorBasis& b, const Matrix& bil, int k);

// Same, but validates the input is hermitian positive definite first.
Matrix metric_form_gram(const ExteriorBasis& b, const Matrix& h_dual, int k);

void require_hermitian_positive_definite(const Matrix& h);

// omega^m / m! as a top-degree form (for half-rank m); and its coefficient.
FormVector omega_power_over_factorial(const ExteriorBasis& b, const FormVector& omega, int m);
Scalar top_coefficient(const ExteriorBasis& b, const FormVector& top_form);

// Hodge star of the hermitian pairing h against the reference volume
// omega^m/m!. Solves alpha ^ conj(S beta) = h(alpha,beta) omega^m/m! exactly
// and ships star_h = i^{m^2} * S; the unit phase makes the classical sign
// laws star_h^2 = (-1)^{m^2+p+q} and d^dag = -(-1)^{m^2} star_h d star_h
// hold for odd m as well. C-linear; maps (p,q) to (m-q, m-p).
GradedOperator hodge_star(const ExteriorBasis& b, const Matrix& h_dual, const FormVector& omega,
                          int m);

// Symplectic star: alpha ^ (S beta) = Pi(alpha,beta) omega^m/m!, bilinear,
// an involution in every degree.
GradedOperator symplectic_star(const ExteriorBasis& b, const FormVector& omega, int m);

enum class CodifferentialSign {
    brylinski,  // d* = (-1)^{k+1} star_om d star_om on degree k (default)
    flipped     // d* = (-1)^k star_om d star_om; same kernels, opposite sign
};

GradedOperator brylinski_codifferential(const ExteriorBasis& b, const GradedOperator& d,
                                        const GradedOperator& star_om,
                                        CodifferentialSign sign = CodifferentialSign::brylinski);

// Multiplicative extension of a covector map to every exterior degree.
GradedOperator multiplicative_extension(const ExteriorBasis& b, const Matrix& a);

// Dual action of a fiber complex structure on forms, (J xi)(X) = xi(JX),
// extended multiplicatively; acts as i^{p-q} on the (p,q) part.
GradedOperator form_complex_structure(const ExteriorBasis& b, const Matrix& j_fiber);

// Projectors onto the (p,q) pieces of each complexified degree.
class Bigrading {
  public:
    Bigrading() = default;
    Bigrading(int r, int m) : r_(r), m_(m), proj_(r + 1) {}

    int half_rank() const { return m_; }

    // Zero-sized or zero matrix when the bidegree is empty/out of range.
    const Matrix& projector(int p, int q) const;
    Matrix& slot(int k, int p) { return proj_[k][p]; }
    void init_degree(int k, int dim_k) { proj_[k].assign(k + 1, Matrix(dim_k, dim_k)); }

    // dim of Lambda^{p,q} = C(m,p) C(m,q)
    int dim(int p, int q) const;

  private:
    int r_ = 0, m_ = 0;
    std::vector<std::vector<Matrix>> proj_;  // proj_[k][p], q = k-p
    Matrix empty_;
};

// ModelError unless j^2 = -id and the fiber rank is even.
Bigrading bigrade(const ExteriorBasis& b, const Matrix& j_fiber);

}  // namespace klac
