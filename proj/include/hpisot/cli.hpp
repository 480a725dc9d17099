#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hpisot/report.hpp"

namespace hpisot::cli {

/// Exit-code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitMismatch = 3;

struct Outcome {
    int exit_code = kExitOk;
    Json json;
    std::string text;  ///< human-readable rendering
};

struct GlobalOptions {
    bool json = false;
    unsigned long seed = 0;
    unsigned precision_bits = 64;
};

/// ParseError for unreadable files.
std::string read_text(const std::filesystem::path& path);

Outcome cmd_analyze(const std::filesystem::path& path, const AnalysisOptions& opt);

struct CoverOptions {
    std::size_t max_word_length = 12;
    std::optional<std::filesystem::path> out;  ///< default: <input stem>.cover.json next to the input
};
/// Record mode: validation failures are findings and exit 0.
Outcome cmd_cover(const std::filesystem::path& spec_path, const CoverOptions& opt);
Outcome cmd_example4(const IntMatrix& m0, std::optional<unsigned> k, const CoverOptions& opt);

/// Corpus entry: {"name", "substitution" | "cover", "options"?, "expected"?}
/// where "expected" maps JSON pointers into the analysis report to values.
/// Entries run in file-name order; exit 3 on any mismatch.
Outcome cmd_corpus(const std::filesystem::path& dir, const AnalysisOptions& opt);

Outcome cmd_erp(const std::filesystem::path& path, std::size_t num_patches, std::size_t sample_len);
/// Empty `patches` means every allowed word up to `max_word_length`.
Outcome cmd_measure(const std::filesystem::path& path, const std::vector<std::string>& patches,
                    std::size_t max_word_length, bool assert_lattices_equal, unsigned precision_bits);
Outcome cmd_cr(const std::filesystem::path& path);

/// Maps library exceptions to the exit-code contract.
int exit_code_for(const std::exception& e);

/// Parses "[[1,1],[1,0]]".
IntMatrix parse_matrix(const std::string& text);

}  // namespace hpisot::cli
