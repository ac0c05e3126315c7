// Command-line front end: construct | validate | invariants | glue | bounds
// | search | nerve, with JSON envelopes on stdout and nonzero exit on error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kw/bounds.hpp"
#include "kw/canonical.hpp"
#include "kw/collapse.hpp"
#include "kw/complex.hpp"
#include "kw/constructions.hpp"
#include "kw/glue.hpp"
#include "kw/homology.hpp"
#include "kw/io.hpp"
#include "kw/search.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json complex_payload(const kw::Complex2& K) {
    json j;
    j["vertices"] = K.vertex_count();
    json edges = json::array();
    for (const auto& e : K.edges()) edges.push_back({e.v[0], e.v[1]});
    j["edges"] = std::move(edges);
    json tris = json::array();
    for (const auto& t : K.triangles()) tris.push_back({t.v[0], t.v[1], t.v[2]});
    j["triangles"] = std::move(tris);
    return j;
}

// Accepts either a bare complex document or a previous command's envelope.
kw::Complex2 load_complex_arg(const std::string& arg) {
    json j;
    if (arg == "-") {
        std::cin >> j;
    } else {
        std::ifstream f(arg);
        if (!f) throw std::runtime_error("cannot open " + arg);
        f >> j;
    }
    if (j.contains("payload") && j["payload"].contains("complex")) j = j["payload"]["complex"];
    if (j.contains("complex")) j = j["complex"];
    return kw::complex_from_json(j.dump());
}

struct Emitter {
    bool pretty = false;
    bool no_timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int ok(json payload) {
        json env;
        env["schema_version"] = kSchemaVersion;
        env["status"] = "ok";
        env["payload"] = std::move(payload);
        env["diagnostics"] = json::array();
        if (!no_timing)
            env["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
        std::cout << (pretty ? env.dump(2) : env.dump()) << "\n";
        return 0;
    }

    int error(const std::string& diagnostic) {
        json env;
        env["schema_version"] = kSchemaVersion;
        env["status"] = "error";
        env["payload"] = json::object();
        env["diagnostics"] = json::array({diagnostic});
        if (!no_timing)
            env["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
        std::cout << (pretty ? env.dump(2) : env.dump()) << "\n";
        return 1;
    }
};

kw::CoxeterMatrix matrix_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    json j;
    f >> j;
    kw::CoxeterMatrix M;
    M.n = j.at("n").get<int>();
    for (const auto& entry : j.at("m")) {
        int mij = entry.at(2).get<int>();
        if (mij == 0) continue; // infinity
        M.set(entry.at(0).get<int>(), entry.at(1).get<int>(), mij);
    }
    return M;
}

std::vector<kw::PowerRelation> relations_from_file(const std::string& path, int& n_out) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    json j;
    f >> j;
    n_out = j.at("n").get<int>();
    std::vector<kw::PowerRelation> rels;
    auto parse_rel = [](const json& r) {
        kw::PowerRelation pr;
        pr.w = kw::parse_word(r.at("w").get<std::string>());
        pr.v = kw::parse_word(r.at("v").get<std::string>());
        pr.m = r.at("m").get<long long>();
        return pr;
    };
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) rels.push_back(parse_rel(r));
    else
        rels.push_back(parse_rel(j));
    return rels;
}

json marked_paths_json(const kw::MarkedComplex& mc) {
    json paths = json::object();
    for (const auto& [name, path] : mc.marked_paths) paths[name] = path;
    return paths;
}

json bound_report_json(const kw::BoundReport& r) {
    json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["lower_source"] = r.lower_source;
    j["upper_source"] = r.upper_source;
    if (r.lower_ceiling) j["lower_ceiling"] = *r.lower_ceiling;
    if (r.upper_improved) j["upper_improved"] = *r.upper_improved;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

json construct_from_spec(const std::string& spec) {
    json payload;
    auto with_metadata = [&](const kw::MarkedComplex& mc) {
        payload["complex"] = complex_payload(mc.complex);
        payload["metadata"]["base_vertex"] = mc.base_vertex;
        payload["metadata"]["marked_paths"] = marked_paths_json(mc);
    };
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (head == "torus") {
        payload["complex"] = complex_payload(kw::minimal_torus());
    } else if (head == "rp2") {
        payload["complex"] = complex_payload(kw::minimal_rp2());
    } else if (head == "moebius") {
        with_metadata(kw::moebius_band());
    } else if (head == "genus2") {
        payload["complex"] = complex_payload(kw::genus2_surface());
    } else if (head == "bouquet") {
        with_metadata(kw::bouquet(std::stoi(arg)));
    } else if (head == "telescope") {
        with_metadata(kw::telescope(std::stoi(arg)));
    } else if (head == "cyclic") {
        long long m = std::stoll(arg);
        payload["complex"] = complex_payload(kw::cyclic_complex(m));
        if (m >= 2) {
            auto r = kw::cyclic_bounds(m);
            payload["metadata"]["claimed_upper_bound"] = r.upper;
        }
    } else if (head == "raag" || head == "racg") {
        kw::CoxeterMatrix M = matrix_from_file(arg);
        kw::MarkedComplex mc = head == "raag" ? kw::raag_complex(M) : kw::racg_complex(M);
        with_metadata(mc);
        auto r = head == "raag" ? kw::raag_bounds(M.n, M.relation_count())
                                : kw::racg_bounds(M.n, M.relation_count());
        payload["metadata"]["claimed_upper_bound"] = r.upper;
    } else if (head == "one-relator") {
        int n = 0;
        auto rels = relations_from_file(arg, n);
        kw::Complex2 K = rels.size() == 1
                             ? kw::one_relator_power_complex(n, rels[0].w, rels[0].v, rels[0].m)
                             : kw::multi_relator_complex(n, rels);
        payload["complex"] = complex_payload(K);
    } else if (head == "artin-large" || head == "coxeter-large") {
        kw::CoxeterMatrix M = matrix_from_file(arg);
        kw::Complex2 K =
            head == "artin-large" ? kw::artin_large_complex(M) : kw::coxeter_large_complex(M);
        payload["complex"] = complex_payload(K);
        payload["metadata"]["claimed_upper_bound"] = head == "artin-large"
                                                         ? kw::artin_large_upper(M)
                                                         : kw::coxeter_large_upper(M);
    } else {
        throw std::runtime_error("unknown construction: " + spec);
    }
    return payload;
}

json bounds_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::runtime_error("bounds spec needs kind:arg");
    std::string head = spec.substr(0, colon), arg = spec.substr(colon + 1);
    json j;
    if (head == "free") {
        long long n = std::stoll(arg);
        long long k = kw::kw_free(n);
        j["exact"] = k;
        j["lower"] = k;
        j["upper"] = k;
        j["lower_source"] = j["upper_source"] = "exact value for the free group";
    } else if (head == "cyclic") {
        j = bound_report_json(kw::cyclic_bounds(std::stoll(arg)));
    } else if (head == "abelian") {
        std::vector<long long> factors;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) factors.push_back(std::stoll(tok));
        j = bound_report_json(kw::finite_abelian_bounds(factors));
    } else if (head == "free-abelian") {
        j = bound_report_json(kw::free_abelian_bounds(std::stoll(arg)));
    } else if (head == "z2sum") {
        j = bound_report_json(kw::z2_sum_bounds(std::stoll(arg)));
    } else if (head == "surface") {
        if (arg.empty()) throw std::runtime_error("surface spec needs +g or -q");
        bool orientable = arg[0] != '-';
        long long g = std::stoll(arg[0] == '+' || arg[0] == '-' ? arg.substr(1) : arg);
        long long kwv = kw::kw_surface(g, orientable);
        j["exact"] = kwv;
        j["lower"] = kwv;
        j["upper"] = kwv;
        j["chromatic"] = kw::chromatic_surface(g, orientable);
        j["lower_source"] = j["upper_source"] = "exact value for the surface group";
    } else if (head == "raag" || head == "racg") {
        kw::CoxeterMatrix M = matrix_from_file(arg);
        j = bound_report_json(head == "raag" ? kw::raag_bounds(M.n, M.relation_count())
                                             : kw::racg_bounds(M.n, M.relation_count()));
    } else if (head == "artin-large") {
        j = bound_report_json(kw::artin_large_bounds(matrix_from_file(arg)));
    } else if (head == "coxeter-large") {
        j = bound_report_json(kw::coxeter_large_bounds(matrix_from_file(arg)));
    } else {
        throw std::runtime_error("unknown bounds spec: " + spec);
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial 2-complex toolkit: constructions, invariants, gluing, bounds, search"};
    app.require_subcommand(1);

    bool pretty = false, no_timing = false;
    app.add_flag("--pretty", pretty, "indent JSON output");
    app.add_flag("--no-timing", no_timing, "omit the elapsed_ms field");

    auto* c_construct = app.add_subcommand("construct", "build a named complex");
    std::string construct_spec;
    c_construct
        ->add_option("spec", construct_spec,
                     "torus|rp2|moebius|genus2|bouquet:n|cyclic:m|telescope:k|raag:file|"
                     "racg:file|one-relator:file|artin-large:file|coxeter-large:file")
        ->required();

    auto* c_validate = app.add_subcommand("validate", "check simplicial closure and connectivity");
    std::string validate_arg;
    c_validate->add_option("complex", validate_arg, "complex JSON file or -")->required();

    auto* c_invariants = app.add_subcommand("invariants", "Euler characteristic, homology, presentation");
    std::string invariants_arg;
    c_invariants->add_option("complex", invariants_arg, "complex JSON file or -")->required();

    auto* c_nerve = app.add_subcommand("nerve", "2-skeleton of the open-star-cover nerve");
    std::string nerve_arg;
    c_nerve->add_option("complex", nerve_arg, "complex JSON file or -")->required();

    auto* c_glue = app.add_subcommand("glue", "push out two complexes along a common subcomplex");
    std::string glue_x, glue_y, glue_emb;
    c_glue->add_option("x", glue_x, "first complex JSON")->required();
    c_glue->add_option("y", glue_y, "second complex JSON")->required();
    c_glue->add_option("embedding", glue_emb, "{\"z_vertices\":N,\"into_x\":[..],\"into_y\":[..]}")
        ->required();

    auto* c_bounds = app.add_subcommand("bounds", "closed-form complexity bounds for a group spec");
    std::string bounds_spec;
    c_bounds
        ->add_option("spec", bounds_spec,
                     "free:n|cyclic:m|abelian:d1,d2,..|free-abelian:n|z2sum:n|surface:+g|"
                     "surface:-q|raag:file|racg:file|artin-large:file|coxeter-large:file")
        ->required();

    auto* c_search = app.add_subcommand("search", "isomorphism-reduced exhaustive certification");
    std::string search_property = "h1-torsion";
    int search_max = 5;
    bool search_serial = false;
    int search_threads = 0;
    int report_every = 0;
    bool ack_large = false;
    c_search->add_option("--property", search_property, "h1-torsion|nonfree|closed-surface|"
                                                        "closed-orientable-chi0|closed-orientable-chi-minus2");
    c_search->add_option("--max-vertices", search_max, "scan levels up to this vertex count");
    c_search->add_flag("--serial", search_serial, "force single-threaded enumeration");
    c_search->add_option("--threads", search_threads, "worker count (default: KW_THREADS or 1)");
    c_search->add_option("--report-every", report_every,
                         "stderr progress after each vertex level (granularity accepted for "
                         "compatibility)");
    c_search->add_flag("--acknowledge-large", ack_large, "allow more than 8 vertices");

    CLI11_PARSE(app, argc, argv);

    Emitter emit;
    emit.pretty = pretty;
    emit.no_timing = no_timing;

    try {
        if (c_construct->parsed()) return emit.ok(construct_from_spec(construct_spec));

        if (c_validate->parsed()) {
            kw::Complex2 K = load_complex_arg(validate_arg);
            kw::ValidationReport rep = kw::validate(K);
            json j;
            j["valid"] = rep.valid();
            j["connected"] = rep.connected;
            j["violations"] = rep.violations;
            j["vertices"] = K.vertex_count();
            j["edges"] = K.edge_count();
            j["triangles"] = K.triangle_count();
            return emit.ok(j);
        }

        if (c_invariants->parsed()) {
            kw::Complex2 K = load_complex_arg(invariants_arg);
            json j;
            j["euler_characteristic"] = K.euler_characteristic();
            kw::HomologyProfile h = kw::homology(K);
            j["betti"] = {h.b0, h.b1, h.b2};
            json torsion = json::array();
            for (const auto& d : h.h1_torsion) torsion.push_back(d.str());
            j["h1_torsion"] = torsion;
            if (K.is_connected()) {
                kw::Presentation P = kw::edge_path_presentation(K);
                j["presentation"]["generators"] = P.generator_count;
                json rel = json::array();
                for (const auto& r : P.relators) rel.push_back(r.str());
                j["presentation"]["relators"] = rel;
                kw::Presentation S = kw::tietze_simplify(P);
                j["simplified"]["generators"] = S.generator_count;
                json srel = json::array();
                for (const auto& r : S.relators) srel.push_back(r.str());
                j["simplified"]["relators"] = srel;
            }
            j["collapsible_to_graph"] = kw::is_collapsible_to_graph(K);
            kw::SurfaceReport s = kw::classify_surface(K);
            j["surface"]["is_closed_surface"] = s.is_closed_surface;
            if (s.is_closed_surface) {
                j["surface"]["orientable"] = s.orientable;
                j["surface"]["genus"] = s.genus;
            }
            return emit.ok(j);
        }

        if (c_nerve->parsed()) {
            kw::Complex2 K = load_complex_arg(nerve_arg);
            json j;
            j["complex"] = complex_payload(kw::star_cover_nerve(K));
            return emit.ok(j);
        }

        if (c_glue->parsed()) {
            kw::Complex2 X = load_complex_arg(glue_x);
            kw::Complex2 Y = load_complex_arg(glue_y);
            std::ifstream f(glue_emb);
            if (!f) throw std::runtime_error("cannot open " + glue_emb);
            json ej;
            f >> ej;
            int nz = ej.at("z_vertices").get<int>();
            std::vector<kw::VertexId> into_x = ej.at("into_x").get<std::vector<kw::VertexId>>();
            std::vector<kw::VertexId> into_y = ej.at("into_y").get<std::vector<kw::VertexId>>();
            // Z carries every simplex whose images live in both sides.
            std::vector<kw::Edge> zedges;
            std::vector<kw::Triangle> ztris;
            for (int a = 0; a < nz; ++a)
                for (int b = a + 1; b < nz; ++b)
                    if (X.has_edge(into_x[a], into_x[b]) && Y.has_edge(into_y[a], into_y[b]))
                        zedges.emplace_back(a, b);
            for (int a = 0; a < nz; ++a)
                for (int b = a + 1; b < nz; ++b)
                    for (int c = b + 1; c < nz; ++c)
                        if (X.has_triangle(into_x[a], into_x[b], into_x[c]) &&
                            Y.has_triangle(into_y[a], into_y[b], into_y[c]))
                            ztris.emplace_back(a, b, c);
            kw::Complex2 Z = kw::Complex2::make(nz, std::move(zedges), std::move(ztris));
            kw::GlueResult r = kw::glue(X, Y, kw::Embedding{Z, into_x}, kw::Embedding{Z, into_y});
            json j;
            j["complex"] = complex_payload(r.complex);
            j["lemma22_condition1"] = r.lemma22_condition1;
            j["lemma22_condition2"] = r.lemma22_condition2;
            j["directly_validated"] = r.directly_validated;
            return emit.ok(j);
        }

        if (c_bounds->parsed()) return emit.ok(bounds_from_spec(bounds_spec));

        if (c_search->parsed()) {
            int threads = search_serial ? 1 : search_threads;
            if (threads <= 0) {
                const char* env = std::getenv("KW_THREADS");
                threads = env ? std::atoi(env) : 1;
                if (threads <= 0) threads = 1;
            }
            if (report_every > 0)
                std::cerr << "searching property " << search_property << " up to "
                          << search_max << " vertices\n";
            kw::CertResult r =
                kw::certify_min_vertices(search_property, 1, search_max, threads, ack_large);
            json j;
            j["property"] = r.property;
            j["minimal_vertex_count"] = r.minimal_vertex_count;
            j["exhaustively_checked_below"] = r.exhaustively_checked_below;
            j["complexes_examined"] = r.complexes_examined;
            j["undecided_count"] = r.undecided.size();
            if (r.witness) j["witness"] = complex_payload(*r.witness);
            return emit.ok(j);
        }
    } catch (const std::exception& e) {
        return emit.error(e.what());
    }
    return emit.error("no subcommand dispatched");
}
