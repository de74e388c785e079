// whisker: command-line front end for the balanced-whiskering toolkit.
//
// Commands: fvec, hvec, whisker, check {pure|balanced|vd|shellable},
// sr-ideal, dual, betti, facet-restriction, reverse, ind, cliquecomplex,
// clique-whisker, chordal, hhz, explore.  All commands read the files given
// as positional arguments and write to standard output unless --out FILE.
// Output is deterministic for fixed input bytes, flags, and seed; --timing
// reports wall time on standard error so it never perturbs the payload.
//
// Exit codes: 0 success, 1 usage/parse/data errors, 3 theorem violations
// (an internal identity that provably must hold failed on this input).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "whisk/algebra.hpp"
#include "whisk/coloring.hpp"
#include "whisk/complex.hpp"
#include "whisk/decompose.hpp"
#include "whisk/explore.hpp"
#include "whisk/graphs.hpp"
#include "whisk/io.hpp"
#include "whisk/vectors.hpp"

namespace {

struct Input {
    std::string path;
    std::string bytes;
};

Input slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {path, buf.str()};
}

std::string digest_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

whisk::SimplicialComplex complex_of(const Input& in) {
    std::istringstream s(in.bytes);
    return whisk::parse_complex(s, in.path);
}

whisk::Coloring coloring_of(const Input& in, const std::vector<std::string>& labels) {
    std::istringstream s(in.bytes);
    return whisk::parse_coloring(s, in.path, labels);
}

whisk::Graph graph_of(const Input& in) {
    std::istringstream s(in.bytes);
    return whisk::parse_graph(s, in.path);
}

whisk::CliquePartition partition_of(const Input& in, const whisk::Graph& g) {
    std::istringstream s(in.bytes);
    return whisk::parse_clique_partition(s, in.path, g);
}

/// "# command: <name>" plus one "# input: <digest>" line per input file.
/// Digests cover file contents only, so the header is path-independent.
std::string header(const std::string& command, const std::vector<Input>& inputs) {
    std::string out = "# command: " + command + "\n";
    for (const Input& in : inputs) out += "# input: " + digest_hex(in.bytes) + "\n";
    return out;
}

/// Re-emit multi-line text with every line turned into a "# " comment.
void append_commented(std::string& out, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out += "# " + line + "\n";
}

std::string labels_of_face(const whisk::SimplicialComplex& c, whisk::Face f) {
    std::string out;
    bool first = true;
    for (int v : f.vertices()) {
        if (!first) out += ' ';
        out += c.label(v);
        first = false;
    }
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

// --- command bodies ------------------------------------------------------

std::string run_fvec(const Input& file) {
    auto c = complex_of(file);
    return header("fvec", {file}) + c.f_vector().to_string() + "\n";
}

std::string run_hvec(const Input& file) {
    auto c = complex_of(file);
    return header("hvec", {file}) + c.h_vector().to_string() + "\n";
}

std::string run_whisker(const Input& cfile, const Input& xfile) {
    auto c = complex_of(cfile);
    auto chi = coloring_of(xfile, c.labels());
    auto w = whisk::whisker(c, chi);

    std::string out = header("whisker", {cfile, xfile});
    out += whisk::serialize_complex(w.complex);
    for (const whisk::Face& cls : w.induced_coloring.classes)
        out += "# induced-class: " + labels_of_face(w.complex, cls) + "\n";

    if (!w.complex.is_pure())
        throw whisk::TheoremViolation("whisker output is not pure");
    out += "# pure: true\n";
    whisk::validate_coloring(w.complex, w.induced_coloring);
    out += "# balanced: true (induced colouring validates)\n";

    auto shelling = whisk::whisker_shelling_order(w);
    out += "# shelling order (restriction sets alongside):\n";
    append_commented(out, shelling.to_text(w.complex));

    auto report = whisk::h_equals_f_report(c, chi);
    out += "# h(whisker) = " + report.h_whisker.to_string() + "\n";
    out += "# f(source) = " + report.f_source.to_string() + "\n";
    if (!report.equal)
        throw whisk::TheoremViolation("h-vector of the whisker differs from the source f-vector");
    out += "# h = f (up to trailing zeros): true\n";

    auto vd = whisk::is_vertex_decomposable(w.complex);
    if (!vd.decomposable)
        throw whisk::TheoremViolation("whisker output is not vertex decomposable");
    if (!whisk::verify_certificate(w.complex, vd.certificate))
        throw whisk::TheoremViolation("shedding certificate failed replay");
    out += "# vertex-decomposable: true (certificate replayed)\n";
    out += "# certificate:\n";
    append_commented(out, whisk::certificate_to_text(w.complex, vd.certificate));
    return out;
}

std::string run_check(const std::string& mode, const Input& file) {
    auto c = complex_of(file);
    std::string out = header("check " + mode, {file});
    if (mode == "pure") {
        out += std::string("pure: ") + (c.is_pure() ? "true" : "false") + "\n";
    } else if (mode == "balanced") {
        out += std::string("balanced: ") + (whisk::is_balanced(c) ? "true" : "false") + "\n";
    } else if (mode == "vd") {
        auto vd = whisk::is_vertex_decomposable(c);
        out += std::string("vertex-decomposable: ") + (vd.decomposable ? "true" : "false") + "\n";
        if (vd.decomposable) {
            if (!whisk::verify_certificate(c, vd.certificate))
                throw whisk::TheoremViolation("shedding certificate failed replay");
            out += "# certificate (replayed):\n";
            append_commented(out, whisk::certificate_to_text(c, vd.certificate));
        }
    } else {  // shellable
        auto found = whisk::find_shelling(c);
        switch (found.status) {
            case whisk::ShellingSearch::Found:
                out += "shellable: true\n";
                append_commented(out, found.order->to_text(c));
                break;
            case whisk::ShellingSearch::None:
                out += "shellable: false\n";
                break;
            case whisk::ShellingSearch::Unknown:
                out += "shellable: unknown\n# search budget exhausted\n";
                break;
        }
    }
    return out;
}

std::string run_sr_ideal(const Input& file) {
    auto c = complex_of(file);
    auto ideal = whisk::stanley_reisner_ideal(c);
    std::string out = header("sr-ideal", {file});
    out += "# ring variables:";
    for (const std::string& v : ideal.variables) out += " " + v;
    out += "\n";
    if (ideal.generators.empty()) {
        out += "# zero ideal (the complex is the full simplex)\n";
        return out;
    }
    for (const whisk::Face& g : ideal.generators)
        out += "generator: " + labels_of_face(c, g) + "\n";
    return out;
}

std::string run_dual(const Input& file) {
    auto c = complex_of(file);
    return header("dual", {file}) + whisk::serialize_complex(whisk::alexander_dual(c));
}

std::string run_betti(const Input& cfile, const Input& xfile, bool oracle) {
    auto c = complex_of(cfile);
    auto chi = coloring_of(xfile, c.labels());
    auto w = whisk::whisker(c, chi);
    auto report = whisk::whisker_dual_betti(w);

    std::string out = header("betti", {cfile, xfile});
    out += report.table.to_tsv();
    out += "# projective-dimension: " + std::to_string(report.projective_dimension) + "\n";
    out += "# regularity: " + std::to_string(report.regularity) + "\n";
    if (oracle) {
        auto dual = whisk::alexander_dual(w.complex);
        auto independent = whisk::hochster_betti_oracle(dual);
        if (independent == report.table) {
            out += "# oracle: MATCH\n";
        } else {
            out += "# oracle table:\n";
            append_commented(out, independent.to_tsv());
            out += "# oracle: MISMATCH\n";
            std::cout << out;
            throw whisk::TheoremViolation("closed-form Betti table disagrees with the Hochster oracle");
        }
    }
    return out;
}

std::string run_facet_restriction(const Input& file) {
    auto c = complex_of(file);
    auto witnesses = whisk::find_facet_restrictions(c);
    std::string out = header("facet-restriction", {file});
    if (witnesses.empty()) {
        out += "none\n";
        return out;
    }
    for (whisk::Face f : witnesses) out += "facet: " + labels_of_face(c, f) + "\n";
    return out;
}

std::string run_reverse(const Input& cfile, const std::optional<Input>& xfile) {
    auto c = complex_of(cfile);
    whisk::Coloring chi;
    std::vector<Input> inputs = {cfile};
    if (xfile) {
        inputs.push_back(*xfile);
        chi = coloring_of(*xfile, c.labels());
    } else {
        auto found = whisk::min_coloring(c, c.dimension() + 1);
        if (!found) throw std::runtime_error("not balanced");
        chi = *found;
    }
    auto rev = whisk::reverse_whisker(c, chi);

    std::string out = header("reverse", inputs);
    out += "# witness-facet: " + labels_of_face(c, rev.witness) + "\n";
    out += whisk::serialize_complex(rev.source);
    for (const whisk::Face& cls : rev.source_coloring.classes)
        out += "# source-class: " + labels_of_face(rev.source, cls) + "\n";
    out += "# h(input) = " + rev.h_input.to_string() + "\n";
    out += "# f(source) = " + rev.f_source.to_string() + "\n";
    out += "# h = f (up to trailing zeros): true\n";
    return out;
}

std::string run_ind(const Input& file) {
    auto g = graph_of(file);
    return header("ind", {file}) + whisk::serialize_complex(whisk::independence_complex(g));
}

std::string run_cliquecomplex(const Input& file) {
    auto g = graph_of(file);
    return header("cliquecomplex", {file}) + whisk::serialize_complex(whisk::clique_complex(g));
}

std::string run_clique_whisker(const Input& gfile, const Input& pfile) {
    auto g = graph_of(gfile);
    auto pi = partition_of(pfile, g);
    auto whiskered = whisk::clique_whisker(g, pi);

    std::string out = header("clique-whisker", {gfile, pfile});
    out += whisk::serialize_graph(whiskered);

    auto chi = whisk::coloring_from_clique_partition(g, pi);
    auto lhs = whisk::independence_complex(whiskered);
    auto rhs = whisk::whisker(whisk::independence_complex(g), chi);
    if (!(lhs == rhs.complex))
        throw whisk::TheoremViolation(
            "Ind of the whiskered graph differs from the whisker of Ind");
    out += "# identity Ind(G^pi) = whisker(Ind(G), pi): verified\n";
    return out;
}

std::string run_chordal(const Input& file) {
    auto g = graph_of(file);
    auto result = whisk::is_chordal(g);
    std::string out = header("chordal", {file});
    if (result.chordal) {
        out += "chordal: true\n# elimination-order:";
        for (int v : result.elimination_order) out += " " + g.label(v);
        out += "\n";
    } else {
        out += "chordal: false\n# chordless-cycle:";
        for (int v : result.witness_cycle) out += " " + g.label(v);
        out += "\n";
    }
    return out;
}

std::string run_hhz(const Input& file) {
    auto g = graph_of(file);
    auto report = whisk::hhz_check(g);
    auto cl = whisk::clique_complex(g);
    std::string out = header("hhz", {file});
    out += std::string("unmixed: ") + (report.unmixed ? "true" : "false") + "\n";
    out += std::string("partition-holds: ") + (report.partition_holds ? "true" : "false") + "\n";
    out += "# free-vertex facets of the clique complex:\n";
    for (whisk::Face f : report.free_facets)
        out += "# {" + labels_of_face(cl, f) + "}\n";
    return out;
}

std::string run_explore(int max_n, std::optional<uint64_t> seed, int samples, int workers,
                        int* exit_code) {
    if (max_n > 7 && !seed)
        throw std::runtime_error(
            "explore samples graphs beyond n = 7; --seed is required there");
    auto report = whisk::explore_chordal(max_n, seed, samples, workers);
    if (!report.clean()) *exit_code = 3;
    std::string out = "# command: explore\n";
    out += report.to_text();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced-whiskering toolkit: simplicial complexes, colourings, "
                 "whiskers, Stanley-Reisner algebra, and chordal-graph checks"};
    app.require_subcommand(1);

    std::string out_path;
    bool timing = false;
    app.add_option("--out", out_path, "write the payload to FILE instead of standard output")
        ->expected(1);
    app.add_flag("--timing", timing, "report wall time on standard error");

    std::string file_a, file_b, check_mode;
    bool oracle = false;
    int max_n = 4, samples = 25, workers = 0;
    std::optional<uint64_t> seed;
    uint64_t seed_value = 0;

    auto* c_fvec = app.add_subcommand("fvec", "f-vector of a complex");
    c_fvec->add_option("complex", file_a, "complex file")->required();
    auto* c_hvec = app.add_subcommand("hvec", "h-vector of a complex");
    c_hvec->add_option("complex", file_a, "complex file")->required();

    auto* c_whisker = app.add_subcommand(
        "whisker", "whisker a complex by a colouring; verify shelling, h = f, and "
                   "vertex decomposability on the result");
    c_whisker->add_option("complex", file_a, "complex file")->required();
    c_whisker->add_option("coloring", file_b, "colouring file")->required();

    auto* c_check = app.add_subcommand("check", "pure | balanced | vd | shellable");
    c_check->add_option("mode", check_mode, "what to check")
        ->required()
        ->check(CLI::IsMember({"pure", "balanced", "vd", "shellable"}));
    c_check->add_option("complex", file_a, "complex file")->required();

    auto* c_sr = app.add_subcommand("sr-ideal", "Stanley-Reisner ideal (minimal non-faces)");
    c_sr->add_option("complex", file_a, "complex file")->required();
    auto* c_dual = app.add_subcommand("dual", "Alexander dual complex");
    c_dual->add_option("complex", file_a, "complex file")->required();

    auto* c_betti = app.add_subcommand(
        "betti", "graded Betti table of the Alexander dual of the whisker's "
                 "Stanley-Reisner ideal, by closed formula");
    c_betti->add_option("complex", file_a, "complex file")->required();
    c_betti->add_option("coloring", file_b, "colouring file")->required();
    c_betti->add_flag("--oracle", oracle,
                      "recompute via simplicial homology (Hochster) and compare");

    auto* c_fr = app.add_subcommand("facet-restriction",
                                    "facets F with faces(restriction to V minus F) = {F_i minus F}");
    c_fr->add_option("complex", file_a, "complex file")->required();

    auto* c_rev = app.add_subcommand(
        "reverse", "undo a whiskering at a facet-restriction witness; reports h = f");
    c_rev->add_option("complex", file_a, "complex file")->required();
    c_rev->add_option("coloring", file_b, "balanced colouring file (searched if omitted)");

    auto* c_ind = app.add_subcommand("ind", "independence complex of a graph");
    c_ind->add_option("graph", file_a, "graph file")->required();
    auto* c_cl = app.add_subcommand("cliquecomplex", "clique complex of a graph");
    c_cl->add_option("graph", file_a, "graph file")->required();

    auto* c_cw = app.add_subcommand("clique-whisker",
                                    "whisker a graph along a clique partition");
    c_cw->add_option("graph", file_a, "graph file")->required();
    c_cw->add_option("partition", file_b, "clique partition file (colouring format)")->required();

    auto* c_chordal = app.add_subcommand("chordal",
                                         "chordality with elimination order or obstruction");
    c_chordal->add_option("graph", file_a, "graph file")->required();

    auto* c_hhz = app.add_subcommand(
        "hhz", "Herzog-Hibi-Zheng clauses for a chordal graph: unmixedness and the "
               "free-vertex facet partition");
    c_hhz->add_option("graph", file_a, "graph file")->required();

    auto* c_explore = app.add_subcommand(
        "explore", "chordal conjecture explorer: exhaustive to n = 7, seeded sampling beyond");
    c_explore->add_option("--max-n", max_n, "largest vertex count")->required();
    auto* seed_opt = c_explore->add_option("--seed", seed_value,
                                           "sampling seed (required past n = 7)");
    c_explore->add_option("--samples", samples, "samples per size past n = 7 (default 25)");
    c_explore->add_option("--workers", workers, "worker threads (default: hardware)");

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        std::string payload;
        if (c_fvec->parsed()) payload = run_fvec(slurp(file_a));
        else if (c_hvec->parsed()) payload = run_hvec(slurp(file_a));
        else if (c_whisker->parsed()) payload = run_whisker(slurp(file_a), slurp(file_b));
        else if (c_check->parsed()) payload = run_check(check_mode, slurp(file_a));
        else if (c_sr->parsed()) payload = run_sr_ideal(slurp(file_a));
        else if (c_dual->parsed()) payload = run_dual(slurp(file_a));
        else if (c_betti->parsed()) payload = run_betti(slurp(file_a), slurp(file_b), oracle);
        else if (c_fr->parsed()) payload = run_facet_restriction(slurp(file_a));
        else if (c_rev->parsed()) {
            std::optional<Input> xfile;
            if (!file_b.empty()) xfile = slurp(file_b);
            payload = run_reverse(slurp(file_a), xfile);
        } else if (c_ind->parsed()) payload = run_ind(slurp(file_a));
        else if (c_cl->parsed()) payload = run_cliquecomplex(slurp(file_a));
        else if (c_cw->parsed()) payload = run_clique_whisker(slurp(file_a), slurp(file_b));
        else if (c_chordal->parsed()) payload = run_chordal(slurp(file_a));
        else if (c_hhz->parsed()) payload = run_hhz(slurp(file_a));
        else if (c_explore->parsed()) {
            if (seed_opt->count() > 0) seed = seed_value;
            payload = run_explore(max_n, seed, samples, workers, &exit_code);
        }
        write_output(payload, out_path);
    } catch (const whisk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 1;
    } catch (const whisk::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        exit_code = 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 1;
    }
    if (timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::cerr << "wall-time: " << elapsed << " us\n";
    }
    return exit_code;
}
