#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "surflink/analysis.hpp"
#include "surflink/bounds.hpp"
#include "surflink/families.hpp"
#include "surflink/json_io.hpp"

using nlohmann::json;
using namespace surflink;

namespace {

DiagramOnSurface load_map(const std::string& path) {
    if (path.empty() || path == "-") return map_from_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw MapError(MapErrorCode::BadInput, "cannot open " + path);
    return map_from_stream(in);
}

void emit(const json& j, const std::string& out_path, bool pretty) {
    std::string text = pretty ? j.dump(2) : j.dump();
    if (out_path.empty() || out_path == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
}

json analyze_map(const DiagramOnSurface& map, int threads) {
    json j;
    j["crossings"] = map.crossings();
    j["edges"] = map.edge_count();
    j["genus"] = map.genus();
    j["components"] = link_components(map);
    j["alternating"] = is_alternating(map);
    CheckerboardResult cb = checkerboard(map);
    j["checkerboard"] = cb.ok;
    if (!cb.ok) j["checkerboard_odd_cycle"] = cb.odd_cycle_regions;
    j["twist_number"] = twist_number(map);
    DiscCheckResult wp = is_weakly_prime(map);
    j["weakly_prime"] = wp.ok;
    if (!wp.ok && wp.witness) {
        j["weakly_prime_witness"] = {{"boundary_edges", wp.witness->boundary_edges},
                                     {"disc_crossings", wp.witness->disc_crossings},
                                     {"reason", wp.witness->reason}};
    }
    DiscCheckResult tr = is_twist_reduced(map);
    j["twist_reduced"] = tr.ok;
    if (!tr.ok && tr.witness) {
        j["twist_reduced_witness"] = {{"boundary_edges", tr.witness->boundary_edges},
                                      {"disc_crossings", tr.witness->disc_crossings},
                                      {"reason", tr.witness->reason}};
    }
    EdgeWidthResult ew = edge_width(map, threads);
    if (ew.finite) {
        j["edge_width"] = ew.width;
        j["edge_width_certificate"] = ew.certificate_edges;
    } else {
        j["edge_width"] = "infinity";
    }
    return j;
}

json report_to_json(const bounds::BoundsReport& r) {
    json j;
    switch (r.context) {
        case bounds::Context::S3Heegaard: j["context"] = "s3-heegaard"; break;
        case bounds::Context::ThickenedTorus: j["context"] = "thickened-torus"; break;
        case bounds::Context::ThickenedHigherGenus: j["context"] = "thickened-genus"; break;
        case bounds::Context::HeegaardTorusOrLens: j["context"] = "heegaard-torus"; break;
    }
    j["lower"] = r.lower;
    if (r.upper) {
        j["upper"] = *r.upper;
        j["upper_strict"] = r.upper_strict;
    }
    if (r.lower_is_limit) j["lower_is_limit"] = true;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

std::vector<int> parse_twist_spec(const std::string& spec, int crossings) {
    if (spec.empty()) return std::vector<int>(crossings, 1);
    if (spec.rfind("const:", 0) == 0) {
        int k = std::stoi(spec.substr(6));
        return std::vector<int>(crossings, k);
    }
    // JSON file: {"0": 3, "17": 2, ...} on top of all-ones.
    std::ifstream in(spec);
    if (!in) throw MapError(MapErrorCode::BadInput, "cannot open twist spec " + spec);
    json j;
    in >> j;
    std::vector<int> out(crossings, 1);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = std::stoi(it.key());
        if (v < 0 || v >= crossings)
            throw MapError(MapErrorCode::BadInput, "twist spec names a missing crossing");
        out[v] = it.value().get<int>();
    }
    return out;
}

int run_check(const DiagramOnSurface& map, int threads) {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    report("alternating", is_alternating(map));
    report("checkerboard", checkerboard(map).ok);
    DiscCheckResult wp = is_weakly_prime(map);
    report("weakly-prime", wp.ok, wp.ok ? "" : wp.witness->reason);
    DiscCheckResult tr = is_twist_reduced(map);
    report("twist-reduced", tr.ok, tr.ok ? "" : tr.witness->reason);

    int t = twist_number(map);
    report("twist-number-bounded", t <= map.crossings(),
           "t=" + std::to_string(t) + ", c=" + std::to_string(map.crossings()));

    EdgeWidthResult ew = edge_width(map, threads);
    if (ew.finite) {
        RefinedComplex rc = refine(map, false);
        CurveOnSurface cert = curve_from_edges(rc, ew.certificate_edges);
        bool cert_ok = is_essential(cert).essential && curve_weight(cert) == ew.width;
        report("edge-width-certificate", cert_ok, "width=" + std::to_string(ew.width));
    } else {
        report("edge-width-certificate", map.genus() == 0, "no essential curve");
    }

    if (!map.marked_curves().empty()) {
        RefinedComplex rc = refine(map, false);
        bool marks_ok = true;
        std::vector<CurveOnSurface> simple_marks;
        for (const auto& [name, edges] : map.marked_curves()) {
            try {
                CurveOnSurface c = reduce(curve_from_edges(rc, edges));
                if (is_face_simple(c) && !is_essential(c).essential) marks_ok = false;
                if (is_face_simple(c)) simple_marks.push_back(c);
            } catch (const MapError&) {
                marks_ok = false;
            }
        }
        report("marked-curves", marks_ok);
        if (!simple_marks.empty()) {
            RepresentativityResult rr = representativity_over(map, simple_marks);
            report("marked-representativity", rr.finite,
                   rr.finite ? "min=" + std::to_string(rr.value) : "");
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link diagrams on closed orientable surfaces"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a family diagram");
    std::string g_template = "t2", g_twists, g_hb = "8,8,8", g_ctwists, g_out;
    bool g_knotify = false;
    bool g_pretty = false;
    gen->add_option("--template", g_template, "t1 or t2");
    gen->add_option("--twists", g_twists, "const:k or a JSON crossing->count file");
    gen->add_option("--hb-powers", g_hb, "handlebody twist powers a,b,c");
    gen->add_option("--c-twists", g_ctwists, "comma list t_1,...,t_2m");
    gen->add_flag("--knotify", g_knotify, "adjust parities until the result is a knot");
    gen->add_option("-o,--output", g_out, "output file (default stdout)");
    gen->add_flag("--pretty", g_pretty, "indent JSON");

    // analyze
    auto* ana = app.add_subcommand("analyze", "full diagram report");
    std::string a_in, a_out;
    int a_threads = 1;
    bool a_pretty = false;
    ana->add_option("file", a_in, "input diagram (default stdin)");
    ana->add_option("-o,--output", a_out, "output file");
    ana->add_option("--threads", a_threads, "edge-width search threads");
    ana->add_flag("--pretty", a_pretty, "indent JSON");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "evaluate volume bounds");
    std::string b_context = "thickened-torus";
    int b_twist = 1, b_m = -1, b_genus = 2;
    long b_crossings = -1;
    bool b_pretty = false;
    bnd->add_option("--context", b_context,
                    "s3-heegaard | thickened-torus | thickened-genus | heegaard-torus");
    bnd->add_option("--twist-number", b_twist, "twist number on the surface");
    bnd->add_option("--crossings", b_crossings, "crossing number on the surface");
    bnd->add_option("--m", b_m, "number of twist-circle pairs");
    bnd->add_option("--genus", b_genus, "surface genus");
    bnd->add_flag("--pretty", b_pretty, "indent JSON");

    // edge-width
    auto* ewc = app.add_subcommand("edge-width", "edge-representativity only");
    std::string e_in;
    int e_threads = 1;
    bool e_pretty = false;
    ewc->add_option("file", e_in, "input diagram (default stdin)");
    ewc->add_option("--threads", e_threads, "search threads");
    ewc->add_flag("--pretty", e_pretty, "indent JSON");

    // check
    auto* chk = app.add_subcommand("check", "run the diagram property suite");
    std::string c_in;
    int c_threads = 1;
    chk->add_option("file", c_in, "input diagram (default stdin)");
    chk->add_option("--threads", c_threads, "edge-width search threads");

    // export
    auto* exp = app.add_subcommand("export", "re-emit a diagram");
    std::string x_in, x_out, x_format = "json";
    bool x_pretty = false;
    exp->add_option("file", x_in, "input diagram (default stdin)");
    exp->add_option("--format", x_format, "json or dot (region dual)");
    exp->add_option("-o,--output", x_out, "output file");
    exp->add_flag("--pretty", x_pretty, "indent JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            FamilyDescriptor desc;
            if (g_template == "t1") {
                desc.kind = TemplateKind::T1;
            } else if (g_template == "t2") {
                desc.kind = TemplateKind::T2;
            } else {
                std::cerr << "unknown template " << g_template << "\n";
                return 2;
            }
            Template tmpl = make_template(desc.kind);
            desc.twists = parse_twist_spec(g_twists, tmpl.map.crossings());
            {
                std::stringstream ss(g_hb);
                char comma;
                ss >> desc.hb_u >> comma >> desc.hb_v >> comma >> desc.hb_w;
                if (!ss) {
                    std::cerr << "bad --hb-powers\n";
                    return 2;
                }
            }
            if (!g_ctwists.empty()) {
                std::stringstream ss(g_ctwists);
                std::string item;
                while (std::getline(ss, item, ',')) desc.c_twists.push_back(std::stoi(item));
            }
            desc.knotify = g_knotify;
            FamilyBuild build = build_family(desc);
            for (size_t i = 0; i < desc.c_twists.size(); ++i)
                if (linking_number(build.tmpl, static_cast<int>(i)) != 0) {
                    std::cerr << "twist circle with nonzero linking\n";
                    return 1;
                }
            emit(json::parse(map_to_json(build.diagram)), g_out, g_pretty);
        } else if (ana->parsed()) {
            DiagramOnSurface map = load_map(a_in);
            emit(analyze_map(map, a_threads), a_out, a_pretty);
        } else if (bnd->parsed()) {
            json j;
            if (b_context == "s3-heegaard") {
                j = report_to_json(bounds::s3_heegaard_bounds(b_twist, b_genus));
            } else if (b_context == "thickened-torus") {
                j = report_to_json(bounds::thickened_bounds(b_twist, 1));
            } else if (b_context == "thickened-genus") {
                j = report_to_json(bounds::thickened_bounds(b_twist, b_genus));
            } else if (b_context == "heegaard-torus") {
                j = report_to_json(bounds::heegaard_torus_bounds(b_twist));
            } else {
                std::cerr << "unknown context " << b_context << "\n";
                return 2;
            }
            auto tc = bounds::tet_count(b_twist, b_context == "s3-heegaard" ||
                                                         b_context == "thickened-genus"
                                                     ? b_genus
                                                     : 1);
            j["tet_count"] = tc.count;
            j["tet_generalised"] = tc.generalised;
            j["tet_max_cell_volume"] = tc.max_cell_volume;
            if (b_crossings > 0) j["cusp_volume_upper"] = bounds::cusp_volume_upper(b_crossings);
            if (b_m >= 0) {
                j["multi_cusp_floor"] = bounds::multi_cusp_floor(b_m);
                j["multi_cusp_floor_is_limit"] = true;
                j["gfal_lower"] = bounds::gfal_lower(b_m);
                if (b_m >= 1 && b_crossings > 0)
                    j["cusp_density_upper"] = bounds::cusp_density_upper(b_crossings, b_m);
            }
            emit(j, "", b_pretty);
        } else if (ewc->parsed()) {
            DiagramOnSurface map = load_map(e_in);
            EdgeWidthResult ew = edge_width(map, e_threads);
            json j;
            if (ew.finite) {
                j["edge_width"] = ew.width;
                j["certificate"] = ew.certificate_edges;
            } else {
                j["edge_width"] = "infinity";
            }
            emit(j, "", e_pretty);
        } else if (chk->parsed()) {
            DiagramOnSurface map = load_map(c_in);
            return run_check(map, c_threads);
        } else if (exp->parsed()) {
            DiagramOnSurface map = load_map(x_in);
            if (x_format == "json") {
                emit(json::parse(map_to_json(map)), x_out, x_pretty);
            } else if (x_format == "dot") {
                RegionDual dual = region_dual(map);
                std::ostringstream os;
                os << "graph region_dual {\n";
                for (int r = 0; r < dual.nodes; ++r) {
                    os << "  r" << r << " [label=\"r" << r;
                    if (!map.region_is_disc(r)) os << " (non-disc)";
                    os << "\"];\n";
                }
                for (const auto& arc : dual.arcs)
                    os << "  r" << arc.region_a << " -- r" << arc.region_b << " [label=\"e"
                       << arc.edge << "\"];\n";
                os << "}\n";
                if (x_out.empty() || x_out == "-") {
                    std::cout << os.str();
                } else {
                    std::ofstream out(x_out);
                    out << os.str();
                }
            } else {
                std::cerr << "unknown format " << x_format << "\n";
                return 2;
            }
        }
    } catch (const MapError& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
