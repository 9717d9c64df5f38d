#pragma once

#include <optional>
#include <vector>

#include "klac/matrix.hpp"

namespace klac {

// Row echelon data. The elimination itself is fraction-free (Bareiss) over
// Gaussian integers after clearing denominators row-wise; pivoting is
// lexicographic (first nonzero row in the leftmost unfinished column), so
// results are deterministic across runs.
struct Echelon {
    Matrix u;                     // echelon form, entries back in the field
    std::vector<int> pivot_cols;  // strictly increasing
    int rank() const { return int(pivot_cols.size()); }
};

Echelon echelon_form(const Matrix& m);

int rank(const Matrix& m);
Scalar determinant(const Matrix& m);

// Columns form a basis of ker(m); the standard free-variable construction.
Matrix kernel_basis_matrix(const Matrix& m);

// X with a*X = b, free variables set to zero; nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);  // ModelError if singular

struct Subspace {
    int ambient_dim = 0;
    Matrix basis;  // ambient_dim x dim, linearly independent columns
    int dim() const { return basis.cols(); }

    static Subspace zero(int ambient) { return Subspace{ambient, Matrix(ambient, 0)}; }
    static Subspace full(int ambient) { return Subspace{ambient, Matrix::identity(ambient)}; }
};

// First-independent-columns basis of the column space.
Subspace column_space(const Matrix& m);
Subspace kernel_basis(const Matrix& m);

bool subspace_contains(const Subspace& s, const Matrix& vectors);
bool same_subspace(const Subspace& a, const Subspace& b);

struct SumIntersection {
    Subspace sum;
    Subspace intersection;
};

// Grassmann pair; DimensionError on ambient mismatch.
SumIntersection subspace_ops(const Subspace& a, const Subspace& b);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// Representatives of ker/im extending the image basis greedily by kernel
// basis columns (first independent wins); columns span a complement of im
// inside ker.
Matrix quotient_representatives(const Subspace& ker, const Subspace& im);

struct QuotientMap {
    Matrix map;       // dim(dst quotient) x dim(src quotient)
    Matrix src_reps;  // ambient x dim, chosen class representatives
    Matrix dst_reps;
};

// Matrix of the map induced by `op` between ker/im quotients.
// Preconditions checked: im \subseteq ker on both sides, op(src_ker) \subseteq dst_ker,
// op(src_im) \subseteq dst_im; ContractError otherwise.
QuotientMap induced_map_on_quotient(const Matrix& op, const Subspace& src_ker,
                                    const Subspace& src_im, const Subspace& dst_ker,
                                    const Subspace& dst_im);

}  // namespace klac
