#include "klac/presentation.hpp"

#include <sstream>

#include "klac/errors.hpp"

namespace klac {

Scalar AlgebroidPresentation::bracket_coeff(int i, int j, int k) const {
    if (i == j) return Scalar(0);
    if (i > j) return -bracket_coeff(j, i, k);
    auto it = structure.find({i, j, k});
    return it == structure.end() ? Scalar(0) : it->second;
}

Matrix AlgebroidPresentation::bracket(const Matrix& u, const Matrix& v) const {
    const int r = fiber_rank;
    Matrix out(r, 1);
    for (int i = 1; i <= r; ++i) {
        if (u.at(i - 1, 0).is_zero()) continue;
        for (int j = 1; j <= r; ++j) {
            if (i == j || v.at(j - 1, 0).is_zero()) continue;
            const Scalar f = u.at(i - 1, 0) * v.at(j - 1, 0);
            for (int k = 1; k <= r; ++k) {
                Scalar c = bracket_coeff(i, j, k);
                if (!c.is_zero()) out.at(k - 1, 0) += f * c;
            }
        }
    }
    return out;
}

Verdict ValidationReport::kahler() const {
    if (!compatible_triple) return compatible_triple;
    if (!nijenhuis_zero) return nijenhuis_zero;
    if (!omega_closed) return omega_closed;
    return Verdict::pass();
}

GradedOperator ce_differential(const ExteriorBasis& b, const AlgebroidPresentation& p) {
    const int r = b.fiber_rank();
    // d e^k as degree-2 coefficient vectors
    std::vector<FormVector> dgen(size_t(r) + 1, FormVector::zero(b, 2));
    for (const auto& [key, c] : p.structure) {
        const auto [i, j, k] = key;
        const std::uint32_t m = (1u << (i - 1)) | (1u << (j - 1));
        dgen[size_t(k)].coeffs.at(b.position(2, m), 0) -= c;
    }
    GradedOperator d(b, 1);
    for (int k = 0; k < r; ++k) {
        Matrix& mat = d.at(k);
        for (int col = 0; col < b.dim(k); ++col) {
            auto idx = b.indices(b.mask(k, col));
            for (size_t a = 0; a < idx.size(); ++a) {
                const FormVector& dg = dgen[size_t(idx[a])];
                if (dg.is_zero()) continue;
                const std::uint32_t rest = b.mask(k, col) & ~(1u << (idx[a] - 1));
                const int lead_sign = (a % 2 == 0) ? 1 : -1;
                for (int t = 0; t < b.dim(2); ++t) {
                    const Scalar& c = dg.coeffs.at(t, 0);
                    if (c.is_zero()) continue;
                    const std::uint32_t before = rest & ((1u << (idx[a] - 1)) - 1u);
                    const std::uint32_t after = rest & ~((1u << idx[a]) - 1u);
                    const std::uint32_t tm = b.mask(2, t);
                    const int s1 = ExteriorBasis::wedge_sign(before, tm);
                    if (!s1) continue;
                    const int s2 = ExteriorBasis::wedge_sign(before | tm, after);
                    if (!s2) continue;
                    mat.at(b.position(k + 1, rest | tm), col) +=
                        Scalar(lead_sign * s1 * s2) * c;
                }
            }
        }
    }
    return d;
}

Verdict validate_jacobi(const AlgebroidPresentation& p) {
    const int r = p.fiber_rank;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int k = j + 1; k <= r; ++k)
                for (int m = 1; m <= r; ++m) {
                    Scalar acc(0);
                    for (int l = 1; l <= r; ++l) {
                        acc += p.bracket_coeff(j, k, l) * p.bracket_coeff(i, l, m);
                        acc += p.bracket_coeff(k, i, l) * p.bracket_coeff(j, l, m);
                        acc += p.bracket_coeff(i, j, l) * p.bracket_coeff(k, l, m);
                    }
                    if (!acc.is_zero()) {
                        std::ostringstream os;
                        os << "jacobiator of (e" << i << ",e" << j << ",e" << k
                           << ") has e" << m << "-component " << acc;
                        return Verdict::fail({i, j, k}, os.str());
                    }
                }
    return Verdict::pass();
}

Verdict validate_compatible_triple(const AlgebroidPresentation& p) {
    if (!p.has_triple())
        throw ModelError("compatible-triple check needs metric, J and omega");
    const int r = p.fiber_rank;
    const Matrix& g = *p.metric;
    const Matrix& j = *p.complex_structure;
    Matrix om(r, r);
    const ExteriorBasis b(r);
    for (int t = 0; t < b.dim(2); ++t) {
        const Scalar& c = p.omega->coeffs.at(t, 0);
        if (c.is_zero()) continue;
        auto idx = b.indices(b.mask(2, t));
        om.at(idx[0] - 1, idx[1] - 1) = c;
        om.at(idx[1] - 1, idx[0] - 1) = -c;
    }
    // g(X,Y) = omega(X, JY) entrywise
    Matrix gw = om * j;
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c)
            if (g.at(a, c) != gw.at(a, c)) {
                std::ostringstream os;
                os << "g(e" << a + 1 << ",e" << c + 1 << ") = " << g.at(a, c)
                   << " but omega(e" << a + 1 << ",J e" << c + 1 << ") = " << gw.at(a, c);
                return Verdict::fail({a + 1, c + 1}, os.str());
            }
    // J-invariance
    Matrix ginv = j.transpose() * g * j;
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c)
            if (g.at(a, c) != ginv.at(a, c))
                return Verdict::fail({a + 1, c + 1}, "metric is not J-invariant");
    // positive definiteness through the relation
    for (int n = 1; n <= r; ++n) {
        Matrix lead(n, n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) lead.at(a, c) = gw.at(a, c);
        Scalar d = determinant(lead);
        if (!d.is_real() || !(d.re() > 0))
            return Verdict::fail({n}, "omega(.,J.) is not positive definite (leading minor " +
                                           std::to_string(n) + " is " + d.str() + ")");
    }
    // consistency: omega(X,Y) = g(X, J^{-1} Y) with J^{-1} = -J
    Matrix om2 = -(g * j);
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c)
            if (om.at(a, c) != om2.at(a, c))
                return Verdict::fail({a + 1, c + 1}, "omega(X,Y) != g(X, J^{-1}Y)");
    return Verdict::pass();
}

Verdict validate_nijenhuis(const AlgebroidPresentation& p) {
    if (!p.complex_structure) throw ModelError("Nijenhuis check needs J");
    const int r = p.fiber_rank;
    const Matrix& j = *p.complex_structure;
    for (int a = 1; a <= r; ++a)
        for (int c = a + 1; c <= r; ++c) {
            Matrix ea(r, 1), ec(r, 1);
            ea.at(a - 1, 0) = Scalar(1);
            ec.at(c - 1, 0) = Scalar(1);
            Matrix ja = j * ea, jc = j * ec;
            Matrix n = p.bracket(ja, jc) - p.bracket(ea, ec) -
                       j * (p.bracket(ja, ec) + p.bracket(ea, jc));
            for (int t = 0; t < r; ++t)
                if (!n.at(t, 0).is_zero()) {
                    std::ostringstream os;
                    os << "N_J(e" << a << ",e" << c << ") has e" << t + 1 << "-component "
                       << n.at(t, 0);
                    return Verdict::fail({a, c}, os.str());
                }
        }
    return Verdict::pass();
}

Verdict validate_kahler(const AlgebroidPresentation& p) {
    if (!p.has_triple()) {
        std::string missing;
        for (const auto& [absent, name] :
             {std::pair{!p.metric.has_value(), "metric"},
              std::pair{!p.complex_structure.has_value(), "J"},
              std::pair{!p.omega.has_value(), "omega"}})
            if (absent) missing += (missing.empty() ? "" : ", ") + std::string(name);
        return Verdict::fail({}, "datum not supplied: " + missing);
    }
    if (auto v = validate_compatible_triple(p); !v) return v;
    if (auto v = validate_nijenhuis(p); !v) return v;
    const ExteriorBasis b(p.fiber_rank);
    GradedOperator d = ce_differential(b, p);
    FormVector dw = d.apply(*p.omega);
    if (!dw.is_zero()) {
        for (int t = 0; t < b.dim(3); ++t)
            if (!dw.coeffs.at(t, 0).is_zero()) {
                std::ostringstream os;
                os << "(d omega) has e^" << [&] {
                    std::string s;
                    for (int x : b.indices(b.mask(3, t))) s += std::to_string(x);
                    return s;
                }() << "-component " << dw.coeffs.at(t, 0);
                return Verdict::fail(b.indices(b.mask(3, t)), os.str());
            }
    }
    return Verdict::pass();
}

Verdict check_ellipticity(const AlgebroidPresentation& p) {
    if (p.base_dim == 0) return Verdict::pass();
    const int rk = rank(p.anchor);
    if (rk == p.base_dim) return Verdict::pass();
    return Verdict::fail({}, "anchor rank " + std::to_string(rk) + " < base dimension " +
                                 std::to_string(p.base_dim));
}

Verdict check_unimodular(const AlgebroidPresentation& p) {
    if (!p.eta) return Verdict::fail({}, "datum not supplied: eta");
    const int r = p.fiber_rank;
    for (int i = 1; i <= r; ++i) {
        Scalar tr(0);
        for (int k = 1; k <= r; ++k) tr += p.bracket_coeff(i, k, k);
        if (!tr.is_zero()) {
            // Stokes witness: a degree r-1 form whose differential has a
            // nonzero top coefficient. d(e^{all but i}) picks up exactly the
            // adjoint trace, so the complement of e_i works.
            const ExteriorBasis b(r);
            GradedOperator d = ce_differential(b, p);
            for (int col = 0; col < b.dim(r - 1); ++col) {
                const Scalar& top = d.at(r - 1).at(0, col);
                if (!top.is_zero()) {
                    std::ostringstream os;
                    os << "trace of ad(e" << i << ") = " << tr
                       << "; Stokes pairing <d alpha, eta> = " << Scalar(top * *p.eta)
                       << " for alpha = e^" << [&] {
                        std::string s;
                        for (int x : b.indices(b.mask(r - 1, col))) s += std::to_string(x);
                        return s;
                    }();
                    return Verdict::fail(b.indices(b.mask(r - 1, col)), os.str());
                }
            }
            return Verdict::fail({i}, "trace of ad(e" + std::to_string(i) + ") is nonzero");
        }
    }
    // cross-check: traceless adjoints force the Stokes identity in top degree
    const ExteriorBasis b(r);
    GradedOperator d = ce_differential(b, p);
    if (!d.at(r - 1).is_zero())
        throw ContractError("unimodular trace test and Stokes identity disagree");
    return Verdict::pass();
}

AlgebroidPresentation normalize_integrating_section(const AlgebroidPresentation& p) {
    if (!p.omega) throw ModelError("normalization needs omega");
    if (!p.eta) throw ModelError("normalization needs eta");
    if (p.fiber_rank % 2 != 0) throw ModelError("normalization needs even fiber rank");
    const ExteriorBasis b(p.fiber_rank);
    const int m = p.fiber_rank / 2;
    Scalar c = top_coefficient(b, omega_power_over_factorial(b, *p.omega, m));
    if (c.is_zero()) throw ModelError("omega is degenerate: omega^m/m! = 0");
    AlgebroidPresentation out = p;
    out.eta = c.inverse();
    return out;
}

Verdict check_hodge_admissible(const AlgebroidPresentation& p) {
    // Point base with formal tangent directions: compact, closed and
    // orientable hold by construction and are not rechecked.
    if (auto v = check_ellipticity(p); !v)
        return Verdict::fail(v.witness ? v.witness->indices : std::vector<int>{},
                             "not elliptic: " + (v.witness ? v.witness->detail : ""));
    // An integrating section in the constant model exists exactly when the
    // adjoint traces vanish; the eta datum alone is only a scale choice.
    if (auto v = check_unimodular(p); !v)
        return Verdict::fail(v.witness ? v.witness->indices : std::vector<int>{},
                             "no integrating section: " + (v.witness ? v.witness->detail : ""));
    if (!p.omega) return Verdict::fail({}, "datum not supplied: omega");
    const ExteriorBasis b(p.fiber_rank);
    if (p.fiber_rank % 2 != 0)
        return Verdict::fail({}, "odd fiber rank admits no symplectic form");
    if (top_coefficient(b, omega_power_over_factorial(b, *p.omega, p.fiber_rank / 2)).is_zero())
        return Verdict::fail({}, "omega is degenerate, no omega^m/m!-normal section exists");
    if (auto v = validate_kahler(p); !v)
        return Verdict::fail(v.witness ? v.witness->indices : std::vector<int>{},
                             "not Kahler: " + (v.witness ? v.witness->detail : ""));
    return Verdict::pass();
}

ValidationReport validate_all(const AlgebroidPresentation& p) {
    ValidationReport rep;
    rep.jacobi = validate_jacobi(p);
    rep.compatible_triple = p.has_triple()
                                ? validate_compatible_triple(p)
                                : Verdict::fail({}, "datum not supplied: metric/J/omega");
    rep.nijenhuis_zero = p.complex_structure ? validate_nijenhuis(p)
                                             : Verdict::fail({}, "datum not supplied: J");
    if (p.omega) {
        const ExteriorBasis b(p.fiber_rank);
        FormVector dw = ce_differential(b, p).apply(*p.omega);
        rep.omega_closed = dw.is_zero() ? Verdict::pass()
                                        : Verdict::fail({}, "d omega != 0");
    } else {
        rep.omega_closed = Verdict::fail({}, "datum not supplied: omega");
    }
    rep.unimodular = check_unimodular(p);
    rep.elliptic = check_ellipticity(p);
    rep.hodge_admissible = check_hodge_admissible(p);
    return rep;
}

void require_well_formed(const AlgebroidPresentation& p) {
    if (p.fiber_rank < 1) throw ModelError("fiber rank must be positive");
    for (const auto& [key, c] : p.structure) {
        const auto [i, j, k] = key;
        if (i < 1 || j < 1 || k < 1 || i > p.fiber_rank || j > p.fiber_rank ||
            k > p.fiber_rank)
            throw ModelError("structure index out of range");
        if (i >= j) throw ModelError("structure constants must be stored with i < j");
        (void)c;
    }
    if (p.anchor.rows() != p.fiber_rank || p.anchor.cols() != p.base_dim)
        throw ModelError("anchor must be fiber_rank x base_dim");
    if (p.metric) {
        if (p.metric->rows() != p.fiber_rank || p.metric->cols() != p.fiber_rank)
            throw ModelError("metric must be r x r");
        if (!(*p.metric == p.metric->transpose())) throw ModelError("metric is not symmetric");
        for (int i = 0; i < p.fiber_rank; ++i)
            for (int j = 0; j < p.fiber_rank; ++j)
                if (!p.metric->at(i, j).is_real()) throw ModelError("metric must be real");
        require_hermitian_positive_definite(*p.metric);
    }
    if (p.complex_structure) {
        const Matrix& j = *p.complex_structure;
        if (j.rows() != p.fiber_rank || j.cols() != p.fiber_rank)
            throw ModelError("J must be r x r");
        if (!(j * j == -Matrix::identity(p.fiber_rank))) throw ModelError("J^2 != -id");
    }
    if (p.omega) {
        if (p.omega->degree != 2) throw ModelError("omega must have degree 2");
        const ExteriorBasis b(p.fiber_rank);
        if (p.omega->coeffs.rows() != b.dim(2)) throw ModelError("omega has wrong length");
    }
    if (p.eta && p.eta->is_zero()) throw ModelError("eta must be nonzero");
}

}  // namespace klac
