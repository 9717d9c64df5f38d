// Batch front end: load a model (file or compiled-in preset), run the
// requested check suites, print a table or a JSON report.
//
// Exit codes: 0 all requested checks pass, 1 a check failed or a flag does
// not apply to the model, 2 malformed input.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <iostream>

#include "klac/errors.hpp"
#include "klac/model_io.hpp"

namespace {

using klac::Json;

struct Options {
    std::string model;
    int m = 1;
    bool json = false;
    bool timing = false;
};

klac::AlgebroidPresentation load_model(const Options& opt) {
    if (klac::model_exists_as_file(opt.model)) return klac::parse_model_file(opt.model);
    if (klac::is_preset(opt.model)) {
        for (const auto& info : klac::preset_table())
            if (info.name == opt.model && info.kind != klac::PresetKind::algebroid)
                throw klac::ModelError("preset '" + opt.model +
                                       "' is not an algebroid model; try the bgeometry command");
        return klac::make_algebroid_preset(opt.model, opt.m);
    }
    throw klac::ParseError("no such file or preset '" + opt.model + "'", opt.model);
}

Json report_skeleton(const std::string& command) {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command;
    return j;
}

void emit(const Options& opt, Json& report, const std::string& table,
          std::chrono::steady_clock::time_point start) {
    if (opt.timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        report["runtime_ms"] = ms;
        if (!opt.json) std::cout << table << "runtime: " << ms << " ms\n";
    }
    if (opt.json)
        std::cout << report.dump(2) << "\n";
    else if (!opt.timing)
        std::cout << table;
}

std::string verdict_line(const std::string& name, const klac::Verdict& v) {
    std::string s = "  " + name + ": " + (v.ok ? "pass" : "FAIL");
    if (!v.ok && v.witness) s += "  [" + v.witness->detail + "]";
    return s + "\n";
}

int cmd_validate(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto p = load_model(opt);
    auto rep = klac::validate_all(p);
    Json j = report_skeleton("validate");
    j["model_hash"] = klac::model_hash(p);
    j["validation"] = klac::validation_to_json(rep);
    std::string table = "validation of " + opt.model + "\n";
    table += verdict_line("jacobi", rep.jacobi);
    table += verdict_line("compatible_triple", rep.compatible_triple);
    table += verdict_line("nijenhuis_zero", rep.nijenhuis_zero);
    table += verdict_line("omega_closed", rep.omega_closed);
    table += verdict_line("unimodular", rep.unimodular);
    table += verdict_line("elliptic", rep.elliptic);
    table += verdict_line("kahler", rep.kahler());
    table += verdict_line("hodge_admissible", rep.hodge_admissible);
    emit(opt, j, table, start);
    const bool all = rep.jacobi.ok && rep.compatible_triple.ok && rep.nijenhuis_zero.ok &&
                     rep.omega_closed.ok && rep.unimodular.ok && rep.elliptic.ok &&
                     rep.hodge_admissible.ok;
    return all ? 0 : 1;
}

int cmd_cohomology(const Options& opt, bool bigraded, bool harmonic) {
    const auto start = std::chrono::steady_clock::now();
    auto p = load_model(opt);
    if (bigraded && !p.complex_structure)
        throw klac::ModelError("--bigraded needs a complex structure J on the model");
    if (harmonic && !p.metric) throw klac::ModelError("--harmonic needs a metric on the model");
    auto coh = klac::cohomology(p);
    Json j = report_skeleton("cohomology");
    j["model_hash"] = klac::model_hash(p);
    j["cohomology"] = klac::cohomology_to_json(coh, bigraded, harmonic);
    std::string table = "cohomology of " + opt.model + "\n  dims:";
    for (int d : coh.dims) table += " " + std::to_string(d);
    table += "\n";
    if (bigraded && coh.bigraded) {
        table += "  h^{p,q}:\n";
        for (size_t pp = 0; pp < coh.bigraded->size(); ++pp) {
            table += "   ";
            for (int v : (*coh.bigraded)[pp]) table += " " + std::to_string(v);
            table += "\n";
        }
    }
    emit(opt, j, table, start);
    return 0;
}

int cmd_theorems(const Options& opt, bool hl, bool ddstar, bool identities, bool pairing,
                 bool all) {
    const auto start = std::chrono::steady_clock::now();
    if (opt.model == "b-sphere")
        throw klac::ModelError(
            "'b-sphere' is a b-manifold spec; use: klac bgeometry b-sphere --m 1");
    auto p = load_model(opt);
    if (!(hl || ddstar || identities || pairing || all))
        throw klac::ModelError("select at least one of --hard-lefschetz --ddstar --identities "
                               "--pairing or --all");
    Json j = report_skeleton("theorems");
    j["model_hash"] = klac::model_hash(p);
    std::string table = "theorems on " + opt.model + "\n";
    bool ok = true;
    if (all) {
        hl = ddstar = true;
        // under --all, suites whose structure is absent are skipped with a
        // note; requesting them explicitly still errors out.
        if (auto v = klac::validate_kahler(p); v.ok)
            identities = true;
        else if (!identities)
            table += "  identities: skipped (" + (v.witness ? v.witness->detail : "") + ")\n";
        if (auto v = klac::check_unimodular(p); v.ok)
            pairing = true;
        else if (!pairing)
            table += "  pairing: skipped (not unimodular)\n";
    }
    if (hl) {
        auto rep = klac::hard_lefschetz_check(p);
        j["theorems"]["hard_lefschetz"] = klac::hl_to_json(rep);
        table += "  hard_lefschetz: " + std::string(rep.all_iso ? "pass" : "FAIL") + "\n";
        for (const auto& e : rep.entries)
            table += "    k=" + std::to_string(e.k) + ": H^" +
                     std::to_string(rep.half_rank - e.k) + " (dim " +
                     std::to_string(e.dim_source) + ") -> H^" +
                     std::to_string(rep.half_rank + e.k) + " (dim " +
                     std::to_string(e.dim_target) + "), rank " + std::to_string(e.map_rank) +
                     (e.iso ? " iso" : " NOT iso") + "\n";
        ok = ok && rep.all_iso;
    }
    if (ddstar) {
        auto rep = klac::ddstar_lemma_check(p);
        j["theorems"]["ddstar"] = klac::ddstar_to_json(rep);
        table += "  ddstar_lemma: " + std::string(rep.pass ? "pass" : "FAIL") + "\n";
        ok = ok && rep.pass;
    }
    if (identities) {
        auto rep = klac::kahler_identity_suite(p);
        j["theorems"]["identities"] = klac::identities_to_json(rep);
        table += "  identities: " + std::string(rep.all_applicable_hold ? "pass" : "FAIL") + "\n";
        for (const auto& it : rep.items)
            table += "    " + it.name + ": " +
                     (it.status == klac::IdentityReport::Status::holds          ? "holds"
                      : it.status == klac::IdentityReport::Status::inapplicable ? "inapplicable"
                                                                                : "FAILS") +
                     (it.witness.empty() ? "" : "  [" + it.witness + "]") + "\n";
        ok = ok && rep.all_applicable_hold;
    }
    if (pairing) {
        auto rep = klac::intersection_pairing(p);
        j["theorems"]["pairing"] = klac::pairing_to_json(rep);
        table += "  pairing: well_defined=" + std::string(rep.well_defined.ok ? "yes" : "NO") + "\n";
        for (const auto& e : rep.entries)
            table += "    degree " + std::to_string(e.degree) + ": rank " +
                     std::to_string(e.rank) + "/" + std::to_string(e.gram.rows()) +
                     (e.nondegenerate ? " nondegenerate" : " degenerate") +
                     (e.skew ? " skew" : e.symmetric ? " symmetric" : "") + "\n";
        ok = ok && rep.well_defined.ok;
    }
    if (all) {
        auto rep = klac::equivalence_theorem_check(p);
        j["theorems"]["equivalence"] = klac::equivalence_to_json(rep);
        j["theorems"]["symplectic_harmonic"] =
            klac::quasi_iso_to_json(klac::symplectic_harmonic_check(p));
        table += "  equivalence: verdicts agree, common verdict " +
                 std::string(rep.verdict ? "pass" : "fail") + "\n";
    }
    emit(opt, j, table, start);
    return ok ? 0 : 1;
}

int cmd_bgeometry(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    klac::BManifoldSpec spec = klac::model_exists_as_file(opt.model)
                                   ? klac::parse_bspec_file(opt.model)
                                   : klac::make_bmanifold_preset(opt.model);
    auto rep = klac::b_hard_lefschetz_obstruction(spec, opt.m);
    Json j = report_skeleton("bgeometry");
    j["bgeometry"] = klac::obstruction_to_json(rep);
    std::string table = "b-cohomology of " + opt.model + "\n  dims:";
    for (int d : rep.b_dims) table += " " + std::to_string(d);
    table += "\n  hard_lefschetz: " +
             std::string(rep.impossible ? "impossible" : "dimension test inconclusive") + "\n";
    for (const auto& e : rep.entries)
        table += "    k=" + std::to_string(e.k) + ": dims " + std::to_string(e.dim_low) +
                 " vs " + std::to_string(e.dim_high) +
                 (e.impossible ? " -> impossible" : " -> inconclusive") + "\n";
    if (rep.impossible) table += "  reason: " + rep.reason + "\n";
    emit(opt, j, table, start);
    return 0;
}

int cmd_list_presets(const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    Json j = report_skeleton("list-presets");
    Json arr = Json::array();
    std::string table;
    for (const auto& info : klac::preset_table()) {
        const std::string kind = info.kind == klac::PresetKind::algebroid   ? "algebroid"
                                 : info.kind == klac::PresetKind::bmanifold ? "b-manifold"
                                                                            : "ring";
        Json e;
        e["name"] = info.name;
        e["kind"] = kind;
        e["description"] = info.description;
        arr.push_back(std::move(e));
        table += "  " + info.name + "  (" + kind + ")  " + info.description + "\n";
    }
    j["presets"] = std::move(arr);
    emit(opt, j, table, start);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for finite-dimensional Kahler/symplectic Lie algebroid models"};
    app.require_subcommand(1);

    Options opt;
    bool bigraded = false, harmonic = false;
    bool hl = false, ddstar = false, identities = false, pairing = false, all = false;

    auto add_common = [&](CLI::App* sub, bool with_model = true) {
        if (with_model)
            sub->add_option("model", opt.model, "model file or preset name")->required();
        sub->add_option("--m", opt.m, "half-rank parameter for parametrized presets");
        sub->add_flag("--json", opt.json, "emit a JSON report");
        sub->add_flag("--table", "emit a human-readable table (default)");
        sub->add_flag("--timing", opt.timing, "include runtime in the output");
    };

    CLI::App* validate = app.add_subcommand("validate", "run the model axiom checks");
    add_common(validate);
    CLI::App* cohomology = app.add_subcommand("cohomology", "compute cohomology dimensions");
    add_common(cohomology);
    cohomology->add_flag("--bigraded", bigraded, "include the h^{p,q} table (needs J)");
    cohomology->add_flag("--harmonic", harmonic, "include harmonic bases (needs a metric)");
    CLI::App* theorems = app.add_subcommand("theorems", "run theorem check suites");
    add_common(theorems);
    theorems->add_flag("--hard-lefschetz", hl, "induced [L]^k isomorphism check");
    theorems->add_flag("--ddstar", ddstar, "d d*-lemma subspace equalities");
    theorems->add_flag("--identities", identities, "Kahler identity suite");
    theorems->add_flag("--pairing", pairing, "intersection pairing matrices");
    theorems->add_flag("--all", all, "all of the above plus the equivalence cross-check");
    CLI::App* bgeometry =
        app.add_subcommand("bgeometry", "Mazzeo-Melrose dimensions and the Lefschetz obstruction");
    add_common(bgeometry);
    CLI::App* list = app.add_subcommand("list-presets", "list compiled-in presets");
    add_common(list, /*with_model=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (cohomology->parsed()) return cmd_cohomology(opt, bigraded, harmonic);
        if (theorems->parsed()) return cmd_theorems(opt, hl, ddstar, identities, pairing, all);
        if (bgeometry->parsed()) return cmd_bgeometry(opt);
        if (list->parsed()) return cmd_list_presets(opt);
    } catch (const klac::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const klac::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const klac::ContractError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
