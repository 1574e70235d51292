#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "entrobound/errors.hpp"
#include "entrobound/nilpotent.hpp"
#include "entrobound/spectral.hpp"
#include "entrobound/torus_sim.hpp"

namespace entrobound {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "entrobound";
inline constexpr const char* kToolVersion = "0.1.0";

enum class DocumentKind { matrix, algebra_endo, torus_map };

struct InputDocument {
    DocumentKind kind;
    json raw; // echoed into reports
    // kind == matrix
    ZMat matrix;
    // kind == algebra_endo
    std::optional<NilpotentAlgebra> algebra;
    QMat endomorphism;
    // kind == torus_map
    AffineTorusMap torus_map;
    std::optional<CoverSpec> cover;
};

namespace doc_detail {

inline mpz_class parse_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return mpz_class(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return mpz_class(v.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError(where + ": expected an integer");
}

inline mpq_class parse_rational(const json& v, const std::string& where) {
    if (v.is_array()) {
        if (v.size() != 2)
            throw ParseError(where + ": rational must be a [numerator, denominator] pair");
        const mpz_class num = parse_int(v[0], where + "[0]");
        const mpz_class den = parse_int(v[1], where + "[1]");
        if (den == 0) throw ParseError(where + ": zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(parse_int(v, where));
}

inline ZMat parse_int_matrix(const json& v, const std::string& where, bool force_square = true) {
    if (!v.is_array() || v.empty()) throw ParseError(where + ": expected an array of rows");
    const std::size_t rows = v.size();
    const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
    if (cols == 0) throw ParseError(where + "[0]: expected a nonempty row");
    if (force_square && rows != cols) throw ParseError(where + ": matrix must be square");
    ZMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw ParseError(where + "[" + std::to_string(i) + "]: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_int(v[i][j], where + "[" + std::to_string(i) + "][" +
                                             std::to_string(j) + "]");
    }
    return m;
}

} // namespace doc_detail

inline InputDocument parse_document(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("document: missing string field 'kind'");
    const std::string kind = doc["kind"].get<std::string>();
    InputDocument out{DocumentKind::matrix, doc, ZMat(), std::nullopt, QMat(), {}, std::nullopt};

    if (kind == "matrix") {
        if (!doc.contains("matrix")) throw ParseError("matrix document: missing 'matrix'");
        out.matrix = doc_detail::parse_int_matrix(doc["matrix"], "matrix");
        return out;
    }

    if (kind == "algebra_endo") {
        out.kind = DocumentKind::algebra_endo;
        if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1)
            throw ParseError("algebra_endo document: 'dim' must be a positive integer");
        const std::size_t d = doc["dim"].get<std::size_t>();
        NilpotentAlgebra alg(d);
        if (doc.contains("brackets")) {
            if (!doc["brackets"].is_array())
                throw ParseError("algebra_endo document: 'brackets' must be an array");
            std::size_t idx = 0;
            for (const auto& e : doc["brackets"]) {
                const std::string where = "brackets[" + std::to_string(idx++) + "]";
                for (const char* f : {"i", "j", "k"})
                    if (!e.contains(f) || !e[f].is_number_integer())
                        throw ParseError(where + ": missing integer field '" + f + "'");
                const long i = e["i"].get<long>(), j = e["j"].get<long>(),
                           k = e["k"].get<long>();
                if (i < 1 || j < 1 || k < 1 || i > long(d) || j > long(d) || k > long(d))
                    throw ParseError(where + ": index out of range 1.." + std::to_string(d));
                const mpz_class num = doc_detail::parse_int(e.value("num", json(1)), where + ".num");
                const mpz_class den = doc_detail::parse_int(e.value("den", json(1)), where + ".den");
                if (den == 0) throw ParseError(where + ".den: zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                alg.set_bracket_entry(std::size_t(i - 1), std::size_t(j - 1),
                                      std::size_t(k - 1), q);
            }
        }
        alg.complete_antisymmetric();
        out.algebra = std::move(alg);
        if (!doc.contains("endomorphism"))
            throw ParseError("algebra_endo document: missing 'endomorphism'");
        const json& rows = doc["endomorphism"];
        if (!rows.is_array() || rows.size() != d)
            throw ParseError("endomorphism: expected " + std::to_string(d) + " rows");
        out.endomorphism = QMat(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!rows[i].is_array() || rows[i].size() != d)
                throw ParseError("endomorphism[" + std::to_string(i) + "]: row length mismatch");
            for (std::size_t j = 0; j < d; ++j)
                out.endomorphism(i, j) = doc_detail::parse_rational(
                    rows[i][j],
                    "endomorphism[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
        return out;
    }

    if (kind == "torus_map") {
        out.kind = DocumentKind::torus_map;
        if (!doc.contains("matrix")) throw ParseError("torus_map document: missing 'matrix'");
        out.torus_map.matrix = doc_detail::parse_int_matrix(doc["matrix"], "matrix");
        const std::size_t d = out.torus_map.matrix.rows();
        out.torus_map.translation.assign(d, 0.0);
        if (doc.contains("translation")) {
            const json& t = doc["translation"];
            if (!t.is_array() || t.size() != d)
                throw ParseError("translation: expected " + std::to_string(d) + " entries");
            for (std::size_t i = 0; i < d; ++i) {
                if (!t[i].is_number())
                    throw ParseError("translation[" + std::to_string(i) + "]: expected a number");
                double v = t[i].get<double>();
                out.torus_map.translation[i] = v - std::floor(v);
            }
        }
        if (doc.contains("cover")) {
            CoverSpec cover{doc_detail::parse_int_matrix(doc["cover"], "cover")};
            if (cover.lattice.rows() != d)
                throw ParseError("cover: lattice dimension mismatch");
            out.cover = std::move(cover);
        }
        return out;
    }

    throw ParseError("document: unknown kind '" + kind +
                     "' (expected matrix, algebra_endo or torus_map)");
}

inline InputDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return parse_document(doc);
}

// --- report serialization ---------------------------------------------------

inline std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

inline json poly_to_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

inline json matrix_to_json(const ZMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json bound_report_to_json(const BoundReport& r) {
    json j;
    j["dimension"] = r.dimension;
    j["charpoly"] = poly_to_json(r.charpoly);
    j["det"] = r.det.get_str();
    json eigs = json::array();
    for (const auto& e : r.eigenvalues)
        eigs.push_back({{"modulus", e.modulus},
                        {"radius", e.radius},
                        {"multiplicity", e.multiplicity},
                        {"exact", e.exact}});
    j["eigenvalues"] = std::move(eigs);
    j["sp_exterior"] = r.sp_exterior;
    j["entropy_bound"] = r.entropy_bound;
    j["flags"] = {{"quasi_unipotent", r.quasi_unipotent},
                  {"hyperbolic", r.hyperbolic},
                  {"expanding", r.expanding},
                  {"unimodular", r.unimodular},
                  {"reciprocal_charpoly", r.reciprocal_charpoly},
                  {"cyclotomic_charpoly", r.cyclotomic_charpoly},
                  {"unit_circle_ambiguity", r.unit_circle_ambiguity}};
    json bounds = json::array();
    for (const auto& b : r.absolute_bounds)
        bounds.push_back({{"name", b.name}, {"value", b.value}, {"note", b.note}});
    j["absolute_bounds"] = std::move(bounds);
    return j;
}

inline json estimate_to_json(const EntropyEstimate& e) {
    json j;
    j["estimate"] = e.estimate;
    json per = json::array();
    for (const auto& d : e.per_epsilon)
        per.push_back({{"epsilon", d.epsilon},
                       {"delta", d.delta},
                       {"counts", d.counts},
                       {"window_end", d.window_end},
                       {"slope", d.slope},
                       {"flat", d.flat}});
    j["per_epsilon"] = std::move(per);
    return j;
}

inline void print_bound_report(std::FILE* out, const BoundReport& r) {
    std::fprintf(out, "dimension:        %zu\n", r.dimension);
    std::fprintf(out, "char poly:        %s\n", r.charpoly.str().c_str());
    std::fprintf(out, "det:              %s\n", r.det.get_str().c_str());
    std::fprintf(out, "eigenvalue moduli:");
    for (const auto& e : r.eigenvalues)
        std::fprintf(out, " %s(x%u,r=%s)", fmt10(e.modulus).c_str(), e.multiplicity,
                     e.exact ? "exact" : fmt10(e.radius).c_str());
    std::fprintf(out, "\n");
    std::fprintf(out, "sp(^*A):          %s\n", fmt10(r.sp_exterior).c_str());
    std::fprintf(out, "entropy bound:    %s nats\n", fmt10(r.entropy_bound).c_str());
    std::fprintf(out, "flags:            %s%s%s%s%s%s%s\n",
                 r.quasi_unipotent ? "quasi-unipotent " : "",
                 r.hyperbolic ? "hyperbolic " : "", r.expanding ? "expanding " : "",
                 r.unimodular ? "unimodular " : "",
                 r.reciprocal_charpoly ? "reciprocal-charpoly " : "",
                 r.cyclotomic_charpoly ? "cyclotomic-charpoly " : "",
                 r.unit_circle_ambiguity ? "unit-circle-ambiguity" : "");
    for (const auto& b : r.absolute_bounds)
        std::fprintf(out, "absolute bound:   %-10s %s  (%s)\n", b.name.c_str(),
                     fmt10(b.value).c_str(), b.note.c_str());
}

} // namespace entrobound
