#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fanforge/graph6.hpp"
#include "fanforge/harness.hpp"
#include "fanforge/sharpness.hpp"
#include "json.hpp"

namespace {

int cmd_verify(const std::string& input, const std::string& minor_spec,
               const std::string& suite_name_arg, int jobs, const std::string& json_out,
               const std::string& traces_out) {
    auto suite = fanforge::parse_suite(suite_name_arg);
    if (!suite) {
        std::cerr << "unknown suite: " << suite_name_arg << "\n";
        return 2;
    }
    fanforge::Corpus corpus;
    fanforge::Multigraph minor;
    try {
        corpus = fanforge::load_corpus(input);
        minor = fanforge::parse_minor_spec(minor_spec);
    } catch (const fanforge::ingest_error& ex) {
        std::cerr << "ingest error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::vector<fanforge::LiftingTrace> traces;
    fanforge::VerificationReport report = fanforge::run_suite(
        corpus, minor, *suite, jobs, traces_out.empty() ? nullptr : &traces);
    std::cout << report.to_table();
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << report.to_json() << "\n";
    }
    if (!traces_out.empty()) {
        std::ofstream out(traces_out);
        out << "[";
        for (std::size_t i = 0; i < traces.size(); ++i)
            out << (i ? ",\n" : "\n") << traces[i].to_json();
        out << "\n]\n";
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_sharpness(const std::string& kind, int n, int m, int k, const std::string& json_out) {
    try {
        fanforge::SharpnessPair pair;
        if (kind == "j1")
            pair = fanforge::generate_j(1, n, m);
        else if (kind == "j2")
            pair = fanforge::generate_j(2, n, m);
        else if (kind == "trianglefree")
            pair = fanforge::generate_trianglefree(k);
        else {
            std::cerr << "unknown kind: " << kind << "\n";
            return 2;
        }
        std::string json = pair.to_json();
        if (json_out.empty()) {
            std::cout << json << "\n";
        } else {
            std::ofstream out(json_out);
            out << json << "\n";
            std::cout << "g: " << fanforge::encode_graph6(pair.g) << "\n"
                      << "h: " << fanforge::encode_graph6(pair.h) << "\n";
        }
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "generator refused: " << ex.what() << "\n";
        return 2;
    }
}

int cmd_ingest(const std::string& path, const std::string& json_out) {
    try {
        fanforge::Corpus corpus = fanforge::ingest_graph6_file(path);
        std::cout << "decoded " << corpus.entries.size() << " graphs\n";
        for (const auto& e : corpus.entries)
            std::cout << "  line " << e.line << ": n=" << e.graph.vertex_count()
                      << " m=" << e.graph.edge_count() << "\n";
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            out << corpus.to_json() << "\n";
        }
        return 0;
    } catch (const fanforge::ingest_error& ex) {
        std::cerr << "ingest error: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fan families, contractible edges and splitter-step verification"};
    app.require_subcommand(1);

    std::string input, minor = "K1", suite = "all", json_out, traces_out;
    int jobs = 1;
    auto* verify = app.add_subcommand("verify", "run theorem suites over a corpus");
    verify->add_option("--input", input, "graph6 file or named family spec")->required();
    verify->add_option("--minor", minor, "graph6 string or K1");
    verify->add_option("--suite", suite, "ando|main|main2|main3|structural|all");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_option("--json", json_out, "write the JSON report here");
    verify->add_option("--traces", traces_out, "dump the lifting trace chain here");

    std::string kind;
    int n = 0, m = -1, k = 2;
    std::string sharp_json;
    auto* sharp = app.add_subcommand("generate-sharpness", "emit a sharpness construction");
    sharp->alias("generate_sharpness");
    sharp->add_option("--kind", kind, "j1|j2|trianglefree")->required();
    sharp->add_option("--n", n, "gadget repetition parameter");
    sharp->add_option("--m", m, "clique order (default: smallest feasible)");
    sharp->add_option("--k", k, "matching size for trianglefree");
    sharp->add_option("--json", sharp_json, "write the pair description here");

    std::string ingest_path, ingest_json;
    auto* ingest = app.add_subcommand("ingest", "decode a graph6/sparse6 stream");
    ingest->add_option("--graph6", ingest_path, "input file")->required();
    ingest->add_option("--json", ingest_json, "emit the corpus as JSON");

    std::string emit_path, emit_json;
    auto* emit = app.add_subcommand("emit", "re-emit an ingested stream as JSON");
    emit->add_option("--graph6", emit_path, "input file")->required();
    emit->add_option("--json", emit_json, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) return cmd_verify(input, minor, suite, jobs, json_out, traces_out);
    if (sharp->parsed()) return cmd_sharpness(kind, n, m, k, sharp_json);
    if (ingest->parsed()) return cmd_ingest(ingest_path, ingest_json);
    if (emit->parsed()) return cmd_ingest(emit_path, emit_json);
    return 2;
}
