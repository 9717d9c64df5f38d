#include "klac/constructions.hpp"

#include <algorithm>

#include "klac/errors.hpp"

namespace klac {

ProductModel product(const AlgebroidPresentation& p1, const AlgebroidPresentation& p2) {
    require_well_formed(p1);
    require_well_formed(p2);
    if (auto v = validate_jacobi(p1); !v)
        throw ModelError("first factor fails Jacobi: " + (v.witness ? v.witness->detail : ""));
    if (auto v = validate_jacobi(p2); !v)
        throw ModelError("second factor fails Jacobi: " + (v.witness ? v.witness->detail : ""));

    const int r1 = p1.fiber_rank, r2 = p2.fiber_rank, r = r1 + r2;
    ProductModel out{p1, p2, {}};
    AlgebroidPresentation& q = out.assembled;
    q.fiber_rank = r;
    q.structure = p1.structure;
    for (const auto& [key, c] : p2.structure)
        q.structure[{key[0] + r1, key[1] + r1, key[2] + r1}] = c;
    q.base_dim = p1.base_dim + p2.base_dim;
    q.anchor = Matrix(r, q.base_dim);
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < p1.base_dim; ++j) q.anchor.at(i, j) = p1.anchor.at(i, j);
    for (int i = 0; i < r2; ++i)
        for (int j = 0; j < p2.base_dim; ++j)
            q.anchor.at(r1 + i, p1.base_dim + j) = p2.anchor.at(i, j);

    auto block = [&](const Matrix& a, const Matrix& b) {
        Matrix m(r, r);
        for (int i = 0; i < r1; ++i)
            for (int j = 0; j < r1; ++j) m.at(i, j) = a.at(i, j);
        for (int i = 0; i < r2; ++i)
            for (int j = 0; j < r2; ++j) m.at(r1 + i, r1 + j) = b.at(i, j);
        return m;
    };
    if (p1.metric && p2.metric) q.metric = block(*p1.metric, *p2.metric);
    if (p1.complex_structure && p2.complex_structure)
        q.complex_structure = block(*p1.complex_structure, *p2.complex_structure);
    if (p1.omega && p2.omega) {
        const ExteriorBasis b1(r1), b2(r2), b(r);
        FormVector om = FormVector::zero(b, 2);
        for (int t = 0; t < b1.dim(2); ++t) {
            if (p1.omega->coeffs.at(t, 0).is_zero()) continue;
            om.coeffs.at(b.position(2, b1.mask(2, t)), 0) = p1.omega->coeffs.at(t, 0);
        }
        for (int t = 0; t < b2.dim(2); ++t) {
            if (p2.omega->coeffs.at(t, 0).is_zero()) continue;
            om.coeffs.at(b.position(2, b2.mask(2, t) << r1), 0) = p2.omega->coeffs.at(t, 0);
        }
        q.omega = om;
    }
    if (p1.eta && p2.eta) q.eta = Scalar(*p1.eta * *p2.eta);
    require_well_formed(q);
    return out;
}

void require_valid_ring(const FiniteKahlerRing& ring) {
    const int top = ring.top_degree();
    if (ring.dims.empty() || ring.dims[0] != 1)
        throw ModelError("ring needs a one-dimensional degree 0 with the unit");
    if (int(ring.mult.size()) != top + 1) throw ModelError("ring multiplication table shape");
    for (int i = 0; i <= top; ++i) {
        if (int(ring.mult[size_t(i)].size()) != top + 1)
            throw ModelError("ring multiplication table shape");
        for (int j = 0; j <= top; ++j) {
            const Matrix& m = ring.mult[size_t(i)][size_t(j)];
            const int target = (i + j <= top) ? ring.dims[size_t(i + j)] : 0;
            if (m.rows() != target || m.cols() != ring.dims[size_t(i)] * ring.dims[size_t(j)])
                throw ModelError("ring multiplication block has wrong shape");
        }
    }
    // unit: 1 * x = x = x * 1
    for (int j = 0; j <= top; ++j) {
        const Matrix& l = ring.mult[0][size_t(j)];
        const Matrix& r = ring.mult[size_t(j)][0];
        if (!(l == Matrix::identity(ring.dims[size_t(j)])) ||
            !(r == Matrix::identity(ring.dims[size_t(j)])))
            throw ModelError("degree-0 basis element is not a unit");
    }
    // graded commutativity
    for (int i = 0; i <= top; ++i)
        for (int j = 0; i + j <= top; ++j) {
            const int sgn = (i * j % 2 == 0) ? 1 : -1;
            for (int a = 0; a < ring.dims[size_t(i)]; ++a)
                for (int c = 0; c < ring.dims[size_t(j)]; ++c) {
                    Matrix ab = ring.mult[size_t(i)][size_t(j)].col(a * ring.dims[size_t(j)] + c);
                    Matrix ba = ring.mult[size_t(j)][size_t(i)].col(c * ring.dims[size_t(i)] + a);
                    if (!(ab == Scalar(sgn) * ba))
                        throw ModelError("ring is not graded-commutative");
                }
        }
    if (ring.top_degree() % 2 != 0) throw ModelError("ring top degree must be even");
    if (ring.kahler_class.rows() != (top >= 2 ? ring.dims[2] : 0) ||
        ring.kahler_class.cols() != 1)
        throw ModelError("distinguished class must live in degree 2");
}

namespace {

// multiplication by a fixed degree-2 element as an operator h^d -> h^{d+2}
Matrix mult_by_class(const FiniteKahlerRing& ring, const Matrix& cls, int d) {
    const int top = ring.top_degree();
    if (d + 2 > top) return Matrix(0, ring.dims[size_t(d)]);
    Matrix op(ring.dims[size_t(d) + 2], ring.dims[size_t(d)]);
    for (int x = 0; x < ring.dims[2]; ++x) {
        if (cls.at(x, 0).is_zero()) continue;
        for (int a = 0; a < ring.dims[size_t(d)]; ++a) {
            Matrix col = ring.mult[2][size_t(d)].col(x * ring.dims[size_t(d)] + a);
            for (int i = 0; i < col.rows(); ++i) op.at(i, a) += cls.at(x, 0) * col.at(i, 0);
        }
    }
    return op;
}

}  // namespace

Verdict ring_hard_lefschetz(const FiniteKahlerRing& ring) {
    require_valid_ring(ring);
    const int n = ring.half();
    for (int k = 1; k <= n; ++k) {
        // class^k : h^{n-k} -> h^{n+k}
        Matrix op = Matrix::identity(ring.dims[size_t(n - k)]);
        for (int t = 0; t < k; ++t) op = mult_by_class(ring, ring.kahler_class, n - k + 2 * t) * op;
        const int rk = rank(op);
        if (rk != ring.dims[size_t(n - k)] || rk != ring.dims[size_t(n + k)])
            return Verdict::fail({k}, "multiplication by class^" + std::to_string(k) +
                                          " is not an isomorphism h^" + std::to_string(n - k) +
                                          " -> h^" + std::to_string(n + k));
    }
    return Verdict::pass();
}

FiniteKahlerRing cohomology_ring(const AlgebroidPresentation& p) {
    CohomologyResult coh = cohomology(p);
    DifferentialComplex c = build_complex(p);
    const int r = p.fiber_rank;
    FiniteKahlerRing ring;
    ring.dims = coh.dims;
    std::vector<Matrix> reps(size_t(r) + 1);
    for (int k = 0; k <= r; ++k)
        reps[size_t(k)] = quotient_representatives(coh.closed[size_t(k)], coh.exact[size_t(k)]);
    ring.mult.assign(size_t(r) + 1, std::vector<Matrix>(size_t(r) + 1));
    const ExteriorBasis& b = c.basis;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) {
            const int t = i + j;
            const int target = t <= r ? ring.dims[size_t(t)] : 0;
            Matrix m(target, ring.dims[size_t(i)] * ring.dims[size_t(j)]);
            if (t <= r && target >= 0) {
                Matrix basis_target =
                    Matrix::hstack(reps[size_t(t)], coh.exact[size_t(t)].basis);
                for (int a = 0; a < ring.dims[size_t(i)]; ++a)
                    for (int cc = 0; cc < ring.dims[size_t(j)]; ++cc) {
                        FormVector w = wedge(b, FormVector{i, reps[size_t(i)].col(a)},
                                             FormVector{j, reps[size_t(j)].col(cc)});
                        auto x = solve(basis_target, w.coeffs);
                        if (!x)
                            throw ContractError("wedge of closed forms is not closed");
                        for (int row = 0; row < target; ++row)
                            m.at(row, a * ring.dims[size_t(j)] + cc) = x->at(row, 0);
                    }
            }
            ring.mult[size_t(i)][size_t(j)] = m;
        }
    ring.kahler_class = Matrix(r >= 2 ? ring.dims[2] : 0, 1);
    if (p.omega && r >= 2) {
        Matrix basis_target = Matrix::hstack(reps[2], coh.exact[2].basis);
        auto x = solve(basis_target, p.omega->coeffs);
        if (!x) throw ModelError("omega is not closed, no distinguished class");
        for (int row = 0; row < ring.dims[2]; ++row) ring.kahler_class.at(row, 0) = x->at(row, 0);
    }
    return ring;
}

FiniteKahlerRing tensor_ring(const FiniteKahlerRing& a, const FiniteKahlerRing& b) {
    require_valid_ring(a);
    require_valid_ring(b);
    const int ta = a.top_degree(), tb = b.top_degree(), top = ta + tb;
    FiniteKahlerRing out;
    out.dims.assign(size_t(top) + 1, 0);
    // basis of degree k: (i, x, y) with x in a.dims[i], y in b.dims[k-i],
    // ordered by i, then x, then y
    auto offset = [&](int k, int i) {
        int off = 0;
        for (int ii = 0; ii < i; ++ii) {
            const int jj = k - ii;
            if (ii <= ta && jj >= 0 && jj <= tb) off += a.dims[size_t(ii)] * b.dims[size_t(jj)];
        }
        return off;
    };
    for (int k = 0; k <= top; ++k)
        for (int i = std::max(0, k - tb); i <= std::min(k, ta); ++i)
            out.dims[size_t(k)] += a.dims[size_t(i)] * b.dims[size_t(k - i)];

    out.mult.assign(size_t(top) + 1, std::vector<Matrix>(size_t(top) + 1));
    for (int k1 = 0; k1 <= top; ++k1)
        for (int k2 = 0; k2 <= top; ++k2) {
            const int kt = k1 + k2;
            Matrix m(kt <= top ? out.dims[size_t(kt)] : 0,
                     out.dims[size_t(k1)] * out.dims[size_t(k2)]);
            if (kt <= top) {
                for (int i1 = std::max(0, k1 - tb); i1 <= std::min(k1, ta); ++i1) {
                    const int j1 = k1 - i1;
                    for (int i2 = std::max(0, k2 - tb); i2 <= std::min(k2, ta); ++i2) {
                        const int j2 = k2 - i2;
                        if (i1 + i2 > ta || j1 + j2 > tb) continue;
                        const int sgn = (j1 * i2 % 2 == 0) ? 1 : -1;
                        const Matrix& ma = a.mult[size_t(i1)][size_t(i2)];
                        const Matrix& mb = b.mult[size_t(j1)][size_t(j2)];
                        for (int x1 = 0; x1 < a.dims[size_t(i1)]; ++x1)
                            for (int y1 = 0; y1 < b.dims[size_t(j1)]; ++y1)
                                for (int x2 = 0; x2 < a.dims[size_t(i2)]; ++x2)
                                    for (int y2 = 0; y2 < b.dims[size_t(j2)]; ++y2) {
                                        const int col1 =
                                            offset(k1, i1) + x1 * b.dims[size_t(j1)] + y1;
                                        const int col2 =
                                            offset(k2, i2) + x2 * b.dims[size_t(j2)] + y2;
                                        const int col = col1 * out.dims[size_t(k2)] + col2;
                                        Matrix ca = ma.col(x1 * a.dims[size_t(i2)] + x2);
                                        Matrix cb = mb.col(y1 * b.dims[size_t(j2)] + y2);
                                        for (int ra = 0; ra < ca.rows(); ++ra) {
                                            if (ca.at(ra, 0).is_zero()) continue;
                                            for (int rb = 0; rb < cb.rows(); ++rb) {
                                                if (cb.at(rb, 0).is_zero()) continue;
                                                const int row = offset(kt, i1 + i2) +
                                                                ra * b.dims[size_t(j1 + j2)] + rb;
                                                m.at(row, col) += Scalar(sgn) * ca.at(ra, 0) *
                                                                  cb.at(rb, 0);
                                            }
                                        }
                                    }
                    }
                }
            }
            out.mult[size_t(k1)][size_t(k2)] = m;
        }
    // class = x (x) 1 + 1 (x) y in degree 2
    out.kahler_class = Matrix(out.dims[2], 1);
    for (int x = 0; x < (ta >= 2 ? a.dims[2] : 0); ++x)
        out.kahler_class.at(offset(2, 2) + x * b.dims[0] + 0, 0) = a.kahler_class.at(x, 0);
    for (int y = 0; y < (tb >= 2 ? b.dims[2] : 0); ++y)
        out.kahler_class.at(offset(2, 0) + 0 * b.dims[2] + y, 0) = b.kahler_class.at(y, 0);
    return out;
}

KunnethResult kunneth_dims(const AlgebroidPresentation& p, const FiniteKahlerRing& ring) {
    if (auto v = ring_hard_lefschetz(ring); !v)
        throw ModelError("ring input fails its own Hard Lefschetz invariant: " +
                         (v.witness ? v.witness->detail : ""));
    FiniteKahlerRing ce = cohomology_ring(p);
    KunnethResult out;
    out.dims.assign(ce.dims.size() + ring.dims.size() - 1, 0);
    for (size_t i = 0; i < ce.dims.size(); ++i)
        for (size_t j = 0; j < ring.dims.size(); ++j) out.dims[i + j] += ce.dims[i] * ring.dims[j];
    FiniteKahlerRing tensor = tensor_ring(ce, ring);
    out.tensor_hard_lefschetz = ring_hard_lefschetz(tensor);
    return out;
}

std::vector<int> mazzeo_melrose(const BManifoldSpec& spec) {
    const size_t n = std::max(spec.betti_m.size(), spec.betti_z.size() + 1);
    std::vector<int> out(n, 0);
    for (size_t k = 0; k < n; ++k) {
        if (k < spec.betti_m.size()) out[k] += spec.betti_m[k];
        if (k >= 1 && k - 1 < spec.betti_z.size()) out[k] += spec.betti_z[k - 1];
    }
    return out;
}

ObstructionReport b_hard_lefschetz_obstruction(const BManifoldSpec& spec, int m) {
    ObstructionReport rep;
    rep.b_dims = mazzeo_melrose(spec);
    auto dim = [&](int k) {
        return (k >= 0 && size_t(k) < rep.b_dims.size()) ? rep.b_dims[size_t(k)] : 0;
    };
    for (int k = 0; k <= m; ++k) {
        ObstructionReport::Entry e;
        e.k = k;
        e.dim_low = dim(m - k);
        e.dim_high = dim(m + k);
        e.impossible = (e.dim_low != e.dim_high);
        e.not_even_surjective = (e.dim_low < e.dim_high);
        if (e.impossible && !rep.impossible) {
            rep.impossible = true;
            rep.reason = "bH^" + std::to_string(m - k) + " and bH^" + std::to_string(m + k) +
                         " have different dimensions (" + std::to_string(e.dim_low) + " vs " +
                         std::to_string(e.dim_high) + "); a linear map between them cannot be "
                         "an isomorphism";
            if (e.not_even_surjective) rep.reason += ", nor even a surjection";
        }
        rep.entries.push_back(e);
    }
    if (!rep.impossible) rep.reason = "dimension test inconclusive";
    return rep;
}

const std::vector<PresetInfo>& preset_table() {
    static const std::vector<PresetInfo> table = {
        {"abelian-2m", PresetKind::algebroid,
         "abelian rank-2m model with the standard compatible triple (--m selects m)"},
        {"kt", PresetKind::algebroid,
         "Kodaira-Thurston algebra: [e1,e2] = -e3, symplectic, no complex structure"},
        {"affine-2", PresetKind::algebroid,
         "affine rank-2 algebra [e1,e2] = e2 with a compatible triple; not unimodular"},
        {"e2r", PresetKind::algebroid,
         "euclidean algebra e(2) + R with a flat Kahler triple; nonabelian and unimodular"},
        {"b-sphere", PresetKind::bmanifold, "the b-sphere (S^2, equatorial S^1) Betti data"},
        {"cp1-ring", PresetKind::ring,
         "cohomology ring of the projective line with its Kahler class"},
    };
    return table;
}

bool is_preset(const std::string& name) {
    for (const auto& p : preset_table())
        if (p.name == name) return true;
    return false;
}

namespace {

FormVector form_from_pairs(const ExteriorBasis& b,
                           const std::vector<std::pair<std::pair<int, int>, Scalar>>& terms) {
    FormVector f = FormVector::zero(b, 2);
    for (const auto& [ij, c] : terms) {
        const std::uint32_t m = (1u << (ij.first - 1)) | (1u << (ij.second - 1));
        f.coeffs.at(b.position(2, m), 0) = c;
    }
    return f;
}

}  // namespace

AlgebroidPresentation make_algebroid_preset(const std::string& name, int m) {
    AlgebroidPresentation p;
    if (name == "abelian-2m") {
        if (m < 1) throw ModelError("abelian-2m needs m >= 1");
        const int r = 2 * m;
        p.fiber_rank = r;
        p.anchor = Matrix(r, 0);
        Matrix g = Matrix::identity(r);
        Matrix j(r, r);
        const ExteriorBasis b(r);
        std::vector<std::pair<std::pair<int, int>, Scalar>> om;
        for (int t = 0; t < m; ++t) {
            j.at(2 * t + 1, 2 * t) = Scalar(1);
            j.at(2 * t, 2 * t + 1) = Scalar(-1);
            om.push_back({{2 * t + 1, 2 * t + 2}, Scalar(1)});
        }
        p.metric = g;
        p.complex_structure = j;
        p.omega = form_from_pairs(b, om);
        p.eta = Scalar(1);
    } else if (name == "kt") {
        p.fiber_rank = 4;
        p.anchor = Matrix(4, 0);
        p.structure[{1, 2, 3}] = Scalar(-1);
        const ExteriorBasis b(4);
        p.omega = form_from_pairs(b, {{{1, 3}, Scalar(1)}, {{2, 4}, Scalar(1)}});
        p.eta = Scalar(1);
    } else if (name == "affine-2") {
        p.fiber_rank = 2;
        p.anchor = Matrix(2, 0);
        p.structure[{1, 2, 2}] = Scalar(1);
        const ExteriorBasis b(2);
        p.metric = Matrix::identity(2);
        Matrix j(2, 2);
        j.at(1, 0) = Scalar(1);
        j.at(0, 1) = Scalar(-1);
        p.complex_structure = j;
        p.omega = form_from_pairs(b, {{{1, 2}, Scalar(1)}});
        p.eta = Scalar(1);
    } else if (name == "e2r") {
        p.fiber_rank = 4;
        p.anchor = Matrix(4, 0);
        p.structure[{1, 2, 3}] = Scalar(1);
        p.structure[{1, 3, 2}] = Scalar(-1);
        const ExteriorBasis b(4);
        p.metric = Matrix::identity(4);
        Matrix j(4, 4);
        j.at(3, 0) = Scalar(1);   // J e1 = e4
        j.at(2, 1) = Scalar(1);   // J e2 = e3
        j.at(1, 2) = Scalar(-1);  // J e3 = -e2
        j.at(0, 3) = Scalar(-1);  // J e4 = -e1
        p.complex_structure = j;
        p.omega = form_from_pairs(b, {{{1, 4}, Scalar(1)}, {{2, 3}, Scalar(1)}});
        p.eta = Scalar(1);
    } else {
        throw ModelError("unknown algebroid preset '" + name + "'");
    }
    require_well_formed(p);
    return p;
}

BManifoldSpec make_bmanifold_preset(const std::string& name) {
    if (name == "b-sphere") return BManifoldSpec{{1, 0, 1}, {1, 1}};
    throw ModelError("unknown b-manifold preset '" + name + "'");
}

FiniteKahlerRing make_ring_preset(const std::string& name) {
    if (name != "cp1-ring") throw ModelError("unknown ring preset '" + name + "'");
    FiniteKahlerRing ring;
    ring.dims = {1, 0, 1};
    ring.mult.assign(3, std::vector<Matrix>(3));
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            const int t = i + j;
            ring.mult[size_t(i)][size_t(j)] =
                Matrix(t <= 2 ? ring.dims[size_t(t)] : 0, ring.dims[size_t(i)] * ring.dims[size_t(j)]);
        }
    ring.mult[0][0] = Matrix::identity(1);
    ring.mult[0][2] = Matrix::identity(1);
    ring.mult[2][0] = Matrix::identity(1);
    // x * x lands in degree 4 > top: zero block with 0 rows, already shaped
    ring.kahler_class = Matrix(1, 1);
    ring.kahler_class.at(0, 0) = Scalar(1);
    require_valid_ring(ring);
    return ring;
}

}  // namespace klac
