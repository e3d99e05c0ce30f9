#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanforge/lifting.hpp"
#include "fanforge/multigraph.hpp"

namespace fanforge {

struct ingest_error : std::runtime_error {
    ingest_error(const std::string& what, int line_)
        : std::runtime_error(what), line(line_) {}
    int line;
};

struct CorpusEntry {
    std::string id; // source line or family name
    Multigraph graph;
    int line = 0;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
    std::string to_json() const; // per-entry provenance + edge lists
};

// One graph6/sparse6 line per graph; '#' lines and blank lines are skipped.
Corpus ingest_graph6_file(const std::string& path);
// Named families: "wheels:a..b", "prism", "q3", "k4", "k33".
Corpus corpus_from_named(const std::string& spec);
// A file path decodes as a graph6 stream, anything else as a named family.
Corpus load_corpus(const std::string& input);

// "K1" or a literal graph6/sparse6 string.
Multigraph parse_minor_spec(const std::string& spec);

enum class Suite { Ando, Main, Main2, Main3, Structural, All };
std::optional<Suite> parse_suite(const std::string& name);
const char* suite_name(Suite s);

struct CheckResult {
    std::string name;
    long long bound = 0;
    long long achieved = 0;
    bool pass = false;
    std::string note;
};

struct GraphRecord {
    std::string id;
    int n = 0, m = 0;
    int contractible_count = -1;
    int family_rank = -1;
    int forest_size = -1;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckResult> checks;
    double ms = 0;

    bool passed() const;
};

// Every pass/fail is recomputed from the primitives at report time; nothing
// is trusted from intermediate state.
struct VerificationReport {
    std::string suite;
    std::string minor_id;
    std::vector<GraphRecord> records;

    int total() const { return static_cast<int>(records.size()); }
    int failed() const;
    int skipped_count() const;
    bool all_passed() const { return failed() == 0; }

    std::string to_json() const; // schema "report_version": 1
    std::string to_table() const;
};

VerificationReport run_suite(const Corpus& corpus, const Multigraph& minor, Suite suite,
                             int jobs = 1, std::vector<LiftingTrace>* traces = nullptr);

} // namespace fanforge
