#pragma once
// Command implementations behind the `softev` executable. Each returns the
// process exit code: 0 success, 1 mismatch or evaluation error, 2 usage or
// parse error.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace softev::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct EvalOptions {
    std::filesystem::path file;
    std::string query;
    std::optional<int> decimal_digits;
    bool explain = false;
    bool show_zeros = false;
    bool csv = false;
};

struct SweepOptions {
    std::filesystem::path file;
    std::string channel;
    std::string prior;
    std::string target;
    int steps = 100;
    std::optional<int> decimal_digits;
};

struct ExamplesOptions {
    std::filesystem::path corpus_dir;
};

struct CheckOptions {
    std::uint64_t seed = 1;
    int count = 500;
};

int cmd_eval(const EvalOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);
int cmd_examples(const ExamplesOptions& options, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

/// Corpus shipped with the sources (compile-time location).
std::filesystem::path default_corpus_dir();

}  // namespace softev::cli
