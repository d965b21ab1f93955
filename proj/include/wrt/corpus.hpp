#pragma once

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace wrt {

struct CorpusCase {
    std::string id;
    std::string group;
    std::vector<int> levels;
    std::string word;
    std::vector<std::string> checks;
    std::string golden; // relative to the corpus directory
};

struct CheckResult {
    std::string case_id;
    std::string check;
    double deviation = 0;
    double tolerance = 0;
    bool passed = false;
    std::string message;
};

struct CorpusReport {
    std::vector<CheckResult> results;
    bool passed() const;
    nlohmann::json to_json() const;
};

// Regenerated outputs of one case: "exact" fields are hashed, "float" fields
// are compared within the case tolerance.
struct CaseOutput {
    nlohmann::json exact = nlohmann::json::object();
    nlohmann::json floating = nlohmann::json::object();
    std::vector<CheckResult> checks;
};

std::filesystem::path default_corpus_dir();

// Reads cases.json; levels are a list or {"from", "to"}.
std::vector<CorpusCase> load_corpus(const std::filesystem::path& dir);

CaseOutput run_case(const CorpusCase& c);

// Hex SHA-256 of the canonical dump of the exact fields.
std::string exact_hash(const nlohmann::json& exact);

// Runs every case whose id matches the glob filter ("" or "*" for all).
// With write_golden the golden files are regenerated instead of compared.
CorpusReport run_corpus(const std::string& filter = "",
                        const std::filesystem::path& dir = default_corpus_dir(),
                        bool write_golden = false);

} // namespace wrt
