#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tedpoly::cli {

enum class Command
{
    Classify,
    Points,
    Table1,
    EpsMax,
    Decide,
    Sweep4,
    Facets,
};

enum class Format
{
    Csv,
    Json,
};

/** Exit status contract: 0 ok, 1 invariant failure or mismatch, 2 usage error. */
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig
{
    Command command = Command::Classify;
    std::vector<int> ns;
    std::string eps = "1";
    std::vector<std::string> eps_list;
    std::string lo;
    std::string hi;
    int iters = 0;
    std::string graph_path;
    std::string output_path;           ///< empty: standard output
    std::string certificates_path;     ///< optional certificate dump (table1, epsmax)
    Format format = Format::Csv;
    bool format_given = false;
    unsigned parallelism = 0;          ///< 0: hardware concurrency
    bool allow_bad_eps = false;
    bool allow_large = false;
    bool debug_lp = false;
};

/** Executes one command; returns the exit status. */
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/** Parses argv and runs; usage problems map to exit status 2. */
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}   // namespace tedpoly::cli
