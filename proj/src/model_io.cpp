#include "klac/model_io.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "klac/errors.hpp"

namespace klac {

namespace {

std::string line_col(const std::string& text, size_t byte_pos) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte_pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what(), line_col(text, e.byte));
    }
}

int int_field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError("missing or non-integer field '" + key + "'", path);
    return j[key].get<int>();
}

Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& path) {
    if (!j.is_array() || int(j.size()) != rows)
        throw ParseError("expected an array of " + std::to_string(rows) + " rows", path);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j[size_t(i)];
        if (!row.is_array() || int(row.size()) != cols)
            throw ParseError("expected a row of " + std::to_string(cols) + " entries",
                             path + "[" + std::to_string(i) + "]");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = scalar_from_json(row[size_t(c)], path + "[" + std::to_string(i) + "][" +
                                                              std::to_string(c) + "]");
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (s.is_real()) return rational_to_string(s.re());
    Json j;
    j["re"] = rational_to_string(s.re());
    j["im"] = rational_to_string(s.im());
    return j;
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
    try {
        if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>()));
        if (j.is_number_integer()) return Scalar(long(j.get<long long>()));
        if (j.is_object()) {
            Rational re(0), im(0);
            if (j.contains("re")) re = rational_from_string(j["re"].get<std::string>());
            if (j.contains("im")) im = rational_from_string(j["im"].get<std::string>());
            return Scalar(re, im);
        }
    } catch (const ModelError& e) {
        throw ParseError(e.what(), path);
    } catch (const Json::exception& e) {
        throw ParseError(e.what(), path);
    }
    throw ParseError("scalar must be a \"p/q\" string or {\"re\",\"im\"}", path);
}

AlgebroidPresentation parse_model_text(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object()) throw ParseError("model must be a JSON object", "$");
    AlgebroidPresentation p;
    p.fiber_rank = int_field(j, "rank", "$.rank");
    if (p.fiber_rank < 1) throw ParseError("rank must be >= 1", "$.rank");
    const int r = p.fiber_rank;
    const ExteriorBasis basis(r);

    if (j.contains("structure")) {
        if (!j["structure"].is_array()) throw ParseError("structure must be an array", "$.structure");
        int n = 0;
        for (const Json& e : j["structure"]) {
            const std::string path = "$.structure[" + std::to_string(n++) + "]";
            const int i = int_field(e, "i", path);
            const int jj = int_field(e, "j", path);
            const int k = int_field(e, "k", path);
            if (i < 1 || jj < 1 || k < 1 || i > r || jj > r || k > r)
                throw ParseError("index out of range 1..rank", path);
            if (i >= jj) throw ParseError("structure entries need i < j", path);
            if (!e.contains("c")) throw ParseError("missing coefficient 'c'", path);
            p.structure[{i, jj, k}] = scalar_from_json(e["c"], path + ".c");
        }
    }
    if (j.contains("anchor")) {
        const Json& a = j["anchor"];
        p.base_dim = int_field(a, "target_dim", "$.anchor.target_dim");
        if (p.base_dim < 0) throw ParseError("target_dim must be >= 0", "$.anchor.target_dim");
        if (!a.contains("matrix"))
            throw ParseError("anchor needs a matrix", "$.anchor.matrix");
        p.anchor = matrix_from_json(a["matrix"], r, p.base_dim, "$.anchor.matrix");
    } else {
        p.anchor = Matrix(r, 0);
    }
    if (j.contains("metric")) p.metric = matrix_from_json(j["metric"], r, r, "$.metric");
    if (j.contains("J")) p.complex_structure = matrix_from_json(j["J"], r, r, "$.J");
    if (j.contains("omega")) {
        if (!j["omega"].is_array()) throw ParseError("omega must be an array", "$.omega");
        FormVector om = FormVector::zero(basis, 2);
        int n = 0;
        for (const Json& e : j["omega"]) {
            const std::string path = "$.omega[" + std::to_string(n++) + "]";
            const int i = int_field(e, "i", path);
            const int jj = int_field(e, "j", path);
            if (i < 1 || jj < 1 || i > r || jj > r)
                throw ParseError("index out of range 1..rank", path);
            if (i >= jj) throw ParseError("omega entries need i < j", path);
            if (!e.contains("c")) throw ParseError("missing coefficient 'c'", path);
            const std::uint32_t m = (1u << (i - 1)) | (1u << (jj - 1));
            om.coeffs.at(basis.position(2, m), 0) = scalar_from_json(e["c"], path + ".c");
        }
        p.omega = om;
    }
    if (j.contains("eta")) p.eta = scalar_from_json(j["eta"], "$.eta");
    try {
        require_well_formed(p);
    } catch (const ModelError& e) {
        throw ParseError(e.what(), "$");
    }
    return p;
}

AlgebroidPresentation parse_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model_text(ss.str());
}

std::string serialize_model(const AlgebroidPresentation& p) {
    Json j;
    j["rank"] = p.fiber_rank;
    Json st = Json::array();
    for (const auto& [key, c] : p.structure) {
        if (c.is_zero()) continue;
        Json e;
        e["i"] = key[0];
        e["j"] = key[1];
        e["k"] = key[2];
        e["c"] = scalar_to_json(c);
        st.push_back(std::move(e));
    }
    j["structure"] = std::move(st);
    if (p.base_dim > 0) {
        j["anchor"]["target_dim"] = p.base_dim;
        j["anchor"]["matrix"] = matrix_to_json(p.anchor);
    }
    if (p.metric) j["metric"] = matrix_to_json(*p.metric);
    if (p.complex_structure) j["J"] = matrix_to_json(*p.complex_structure);
    if (p.omega) {
        const ExteriorBasis basis(p.fiber_rank);
        Json om = Json::array();
        for (int t = 0; t < basis.dim(2); ++t) {
            const Scalar& c = p.omega->coeffs.at(t, 0);
            if (c.is_zero()) continue;
            auto idx = basis.indices(basis.mask(2, t));
            Json e;
            e["i"] = idx[0];
            e["j"] = idx[1];
            e["c"] = scalar_to_json(c);
            om.push_back(std::move(e));
        }
        j["omega"] = std::move(om);
    }
    if (p.eta) j["eta"] = scalar_to_json(*p.eta);
    return j.dump(2);
}

namespace {

std::vector<int> int_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError("expected an integer array", path);
    std::vector<int> out;
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || j[i].get<long long>() < 0)
            throw ParseError("expected a nonnegative integer", path + "[" + std::to_string(i) + "]");
        out.push_back(j[i].get<int>());
    }
    return out;
}

}  // namespace

BManifoldSpec parse_bspec_text(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("bM") || !j.contains("bZ"))
        throw ParseError("b-manifold spec needs fields bM and bZ", "$");
    BManifoldSpec spec{int_vector(j["bM"], "$.bM"), int_vector(j["bZ"], "$.bZ")};
    if (!spec.betti_m.empty() && spec.betti_m[0] < 1)
        throw ParseError("b0(M) must be >= 1 for a nonempty manifold", "$.bM");
    return spec;
}

BManifoldSpec parse_bspec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bspec_text(ss.str());
}

std::string model_hash(const AlgebroidPresentation& p) {
    const std::string s = serialize_model(p);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["ok"] = v.ok;
    if (v.witness) {
        Json w;
        w["indices"] = v.witness->indices;
        w["detail"] = v.witness->detail;
        j["witness"] = std::move(w);
    }
    return j;
}

}  // namespace

Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["jacobi"] = verdict_to_json(rep.jacobi);
    j["compatible_triple"] = verdict_to_json(rep.compatible_triple);
    j["nijenhuis_zero"] = verdict_to_json(rep.nijenhuis_zero);
    j["omega_closed"] = verdict_to_json(rep.omega_closed);
    j["unimodular"] = verdict_to_json(rep.unimodular);
    j["elliptic"] = verdict_to_json(rep.elliptic);
    j["hodge_admissible"] = verdict_to_json(rep.hodge_admissible);
    j["kahler"] = verdict_to_json(rep.kahler());
    return j;
}

namespace {

Json form_to_json(const FormVector& f) {
    Json j;
    j["degree"] = f.degree;
    Json c = Json::array();
    for (int i = 0; i < f.coeffs.rows(); ++i) c.push_back(scalar_to_json(f.coeffs.at(i, 0)));
    j["coeffs"] = std::move(c);
    return j;
}

}  // namespace

Json cohomology_to_json(const CohomologyResult& coh, bool bigraded, bool harmonic) {
    Json j;
    j["dims"] = coh.dims;
    if (bigraded && coh.bigraded) j["bigraded"] = *coh.bigraded;
    if (harmonic && !coh.harmonic.empty()) {
        Json h = Json::array();
        for (const Matrix& m : coh.harmonic) h.push_back(matrix_to_json(m));
        j["harmonic"] = std::move(h);
    }
    return j;
}

Json hl_to_json(const HLReport& rep) {
    Json j;
    j["half_rank"] = rep.half_rank;
    j["all_iso"] = rep.all_iso;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["k"] = e.k;
        je["dim_source"] = e.dim_source;
        je["dim_target"] = e.dim_target;
        je["rank"] = e.map_rank;
        je["iso"] = e.iso;
        if (e.kernel_witness) je["kernel_witness"] = form_to_json(*e.kernel_witness);
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json ddstar_to_json(const DdStarReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["degree"] = e.degree;
        je["dim_imd_cap_kerds"] = e.dim_imd_cap_kerds;
        je["dim_imds_cap_kerd"] = e.dim_imds_cap_kerd;
        je["dim_im_dds"] = e.dim_im_dds;
        je["equal"] = e.equal;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json quasi_iso_to_json(const QuasiIsoReport& rep) {
    Json j;
    j["quasi_iso"] = rep.quasi_iso;
    j["d_stable"] = rep.d_stable;
    j["h_sub"] = rep.h_sub;
    j["h_full"] = rep.h_full;
    j["induced_rank"] = rep.induced_rank;
    return j;
}

Json equivalence_to_json(const EquivalenceReport& rep) {
    Json j;
    j["hard_lefschetz"] = rep.hard_lefschetz;
    j["ddstar"] = rep.ddstar;
    j["symplectic_harmonic"] = rep.symplectic_harmonic;
    j["verdict"] = rep.verdict;
    return j;
}

Json identities_to_json(const IdentityReport& rep) {
    Json j;
    j["all_applicable_hold"] = rep.all_applicable_hold;
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json ji;
        ji["name"] = it.name;
        ji["status"] = it.status == IdentityReport::Status::holds         ? "holds"
                       : it.status == IdentityReport::Status::fails       ? "fails"
                                                                          : "inapplicable";
        if (!it.witness.empty()) ji["witness"] = it.witness;
        items.push_back(std::move(ji));
    }
    j["items"] = std::move(items);
    return j;
}

Json pairing_to_json(const PairingReport& rep) {
    Json j;
    j["well_defined"] = verdict_to_json(rep.well_defined);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["degree"] = e.degree;
        je["k"] = e.k;
        je["matrix"] = matrix_to_json(e.gram);
        je["rank"] = e.rank;
        je["nondegenerate"] = e.nondegenerate;
        je["symmetric"] = e.symmetric;
        je["skew"] = e.skew;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json betti_to_json(const BettiReport& rep) {
    Json j;
    j["dims"] = rep.dims;
    j["all_even"] = rep.all_even;
    j["odd_degrees_with_odd_dim"] = rep.odd_degrees_with_odd_dim;
    Json cp = Json::array();
    for (const auto& [deg, degen] : rep.contrapositive) {
        Json e;
        e["degree"] = deg;
        e["pairing_degenerate"] = degen;
        cp.push_back(std::move(e));
    }
    j["contrapositive"] = std::move(cp);
    j["consistent"] = rep.consistent;
    return j;
}

Json obstruction_to_json(const ObstructionReport& rep) {
    Json j;
    j["b_dims"] = rep.b_dims;
    j["impossible"] = rep.impossible;
    j["reason"] = rep.reason;
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
        Json je;
        je["k"] = e.k;
        je["dim_low"] = e.dim_low;
        je["dim_high"] = e.dim_high;
        je["verdict"] = e.impossible ? "impossible" : "inconclusive";
        je["not_even_surjective"] = e.not_even_surjective;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

bool model_exists_as_file(const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

}  // namespace klac
