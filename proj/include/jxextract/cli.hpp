#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "jxextract/ast.hpp"
#include "jxextract/report.hpp"
#include "jxextract/scoring.hpp"

namespace jxextract {

// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitInput = 1, kExitPrecondition = 2 };

// Runs `jxextract <args...>` in-process (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string read_file(const std::filesystem::path& path);
SourceUnit load_unit(const std::filesystem::path& path);

// `.jx` files under a directory (recursively, sorted by relative path), or
// the file itself. Each entry is (full path, path relative to the root).
std::vector<std::pair<std::filesystem::path, std::string>> collect_sources(
    const std::filesystem::path& root);

// Accepts "method", "Class.method" or "pkg.Class.method". Throws RangeError
// when nothing or more than one method matches.
std::pair<std::string, std::string> find_method(const SourceUnit& unit,
                                                const std::string& spec);

// The method printed with an `SX.Y` gutter on every statement's first line.
std::string label_listing(const MethodDecl& method);

ReportDocument build_report(const std::vector<std::pair<std::string, SourceUnit>>& units,
                            const GenerationConfig& gen, const RankingConfig& ranking);

// Per-file seed for the mutator, so adding a file does not perturb others.
std::uint64_t file_seed(std::uint64_t seed, const std::string& relative_path);

}  // namespace jxextract
