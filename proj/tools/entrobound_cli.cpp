#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entrobound/document.hpp"
#include "entrobound/verify.hpp"

namespace eb = entrobound;

namespace {

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw eb::Error("cannot open output file: " + output_path);
    out << text;
}

std::string capture_bound_text(const eb::BoundReport& r) {
    char* buf = nullptr;
    std::size_t len = 0;
    std::FILE* mem = open_memstream(&buf, &len);
    eb::print_bound_report(mem, r);
    std::fclose(mem);
    std::string s(buf, len);
    std::free(buf);
    return s;
}

int run_bound(const std::string& input, const std::string& output, double tol, bool as_json) {
    const eb::InputDocument doc = eb::load_document(input);
    eb::json j;
    j["tool"] = {{"name", eb::kToolName}, {"version", eb::kToolVersion}};
    j["command"] = "bound";
    j["input"] = doc.raw;
    std::string text;

    if (doc.kind == eb::DocumentKind::algebra_endo) {
        const eb::NilpotentAlgebra& alg = *doc.algebra;
        const std::size_t cls = eb::validate_algebra(alg);
        eb::AlgebraEndomorphism endo{doc.endomorphism};
        if (!eb::bracket_compatible(alg, endo))
            throw eb::BracketIncompatible("endomorphism does not respect the bracket");
        const eb::LinearizationBlocks blocks = eb::induced_blocks(alg, endo);
        const bool consistent = eb::spectral_consistency(alg, endo, blocks);
        const eb::BoundReport rep = eb::entropy_lower_bound(blocks.direct_sum, tol);

        j["algebra"] = {{"dim", alg.dim()}, {"nilpotency_class", cls}};
        eb::json bj = eb::json::array();
        for (const auto& b : blocks.blocks) bj.push_back(eb::matrix_to_json(b));
        j["linearization_blocks"] = std::move(bj);
        j["spectral_consistency"] = consistent;
        j["bound"] = eb::bound_report_to_json(rep);

        text += "nilpotency class: " + std::to_string(cls) + "\n";
        text += "block sizes:     ";
        for (const auto& b : blocks.blocks) text += " " + std::to_string(b.rows());
        text += "\nspectral check:   " + std::string(consistent ? "consistent" : "INCONSISTENT") +
                "\n";
        text += capture_bound_text(rep);
    } else {
        const eb::ZMat& a =
            doc.kind == eb::DocumentKind::matrix ? doc.matrix : doc.torus_map.matrix;
        const eb::BoundReport rep = eb::entropy_lower_bound(a, tol);
        j["bound"] = eb::bound_report_to_json(rep);
        text = capture_bound_text(rep);
    }

    emit(output, as_json ? j.dump(2) + "\n" : text);
    return 0;
}

int run_simulate(const std::string& input, const std::string& output, int n_max,
                 std::vector<double> epsilons, bool use_cover, bool as_json) {
    const eb::InputDocument doc = eb::load_document(input);
    if (doc.kind != eb::DocumentKind::torus_map)
        throw eb::ParseError("simulate requires a torus_map document");

    eb::SimParams params;
    if (n_max > 0) params.n_max = static_cast<std::size_t>(n_max);
    if (!epsilons.empty()) params.epsilons = std::move(epsilons);

    const eb::EqualityReport rep = eb::equality_report(doc.torus_map, params);

    eb::json j;
    j["tool"] = {{"name", eb::kToolName}, {"version", eb::kToolVersion}};
    j["command"] = "simulate";
    j["input"] = doc.raw;
    j["parameters"] = {{"n_max", params.n_max}, {"epsilons", params.epsilons}};
    j["estimate"] = eb::estimate_to_json(rep.estimate);
    j["bound"] = eb::bound_report_to_json(rep.bound);
    j["difference"] = rep.difference;

    std::string text;
    text += "separated-set growth estimate: " + eb::fmt10(rep.estimate.estimate) + " nats\n";
    for (const auto& d : rep.estimate.per_epsilon) {
        text += "  epsilon " + eb::fmt10(d.epsilon) + ": counts";
        for (std::size_t c : d.counts) text += " " + std::to_string(c);
        text += d.flat ? "  (flat)" : "  slope " + eb::fmt10(d.slope);
        text += "\n";
    }
    text += "spectral lower bound:          " + eb::fmt10(rep.bound.entropy_bound) + " nats\n";
    text += "difference:                    " + eb::fmt10(rep.difference) + "\n";

    if (use_cover) {
        if (!doc.cover) throw eb::ParseError("--cover given but document has no 'cover' field");
        const eb::AffineTorusMap lifted = eb::lift_to_cover(doc.torus_map, *doc.cover);
        const eb::EqualityReport lrep = eb::equality_report(lifted, params);
        j["cover"] = {{"lattice", eb::matrix_to_json(doc.cover->lattice)},
                      {"lifted_matrix", eb::matrix_to_json(lifted.matrix)},
                      {"estimate", eb::estimate_to_json(lrep.estimate)},
                      {"bound", eb::bound_report_to_json(lrep.bound)},
                      {"difference", lrep.difference},
                      {"estimate_gap",
                       std::fabs(lrep.estimate.estimate - rep.estimate.estimate)}};
        text += "cover lift estimate:           " + eb::fmt10(lrep.estimate.estimate) +
                " nats (gap " +
                eb::fmt10(std::fabs(lrep.estimate.estimate - rep.estimate.estimate)) + ")\n";
    }

    emit(output, as_json ? j.dump(2) + "\n" : text);
    return 0;
}

int run_verify(const std::string& output, bool as_json) {
    const std::vector<eb::SuiteResult> results = eb::run_all_suites();
    bool all_ok = true;
    eb::json j;
    j["tool"] = {{"name", eb::kToolName}, {"version", eb::kToolVersion}};
    j["command"] = "verify";
    eb::json suites = eb::json::array();
    std::string text;
    for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        suites.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name;
        if (!r.detail.empty()) text += "  (" + r.detail + ")";
        text += "\n";
    }
    j["suites"] = std::move(suites);
    j["all_passed"] = all_ok;
    emit(output, as_json ? j.dump(2) + "\n" : text);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy lower bounds for toral and nilmanifold endomorphisms"};
    app.require_subcommand(1);

    std::string input, output;
    double tol = 1e-10;
    int n_max = 0;
    std::vector<double> epsilons;
    bool use_cover = false, as_json = false;

    CLI::App* bound = app.add_subcommand("bound", "exact spectral entropy lower bound");
    bound->add_option("--input", input, "input document (JSON)")->required();
    bound->add_option("--output", output, "write the report to this file instead of stdout");
    bound->add_option("--tol", tol, "eigenvalue certification tolerance");
    bound->add_flag("--json", as_json, "machine-readable JSON report");

    CLI::App* simulate = app.add_subcommand("simulate", "separated-set entropy estimate");
    simulate->add_option("--input", input, "input document (JSON)")->required();
    simulate->add_option("--output", output, "write the report to this file instead of stdout");
    simulate->add_option("--n-max", n_max, "longest orbit segment length");
    simulate->add_option("--epsilon", epsilons, "separation scales (repeatable)");
    simulate->add_flag("--cover", use_cover, "also run on the finite-cover lift");
    simulate->add_flag("--json", as_json, "machine-readable JSON report");

    CLI::App* verify = app.add_subcommand("verify", "run the internal cross-check suites");
    verify->add_option("--output", output, "write the report to this file instead of stdout");
    verify->add_flag("--json", as_json, "machine-readable JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return run_bound(input, output, tol, as_json);
        if (simulate->parsed())
            return run_simulate(input, output, n_max, epsilons, use_cover, as_json);
        return run_verify(output, as_json);
    } catch (const eb::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const eb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
