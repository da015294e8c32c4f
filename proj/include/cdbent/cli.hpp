#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdbent/analysis.hpp"

namespace cdbent::cli {

struct RunConfig {
    std::string field;                  // domain field spec (for mm: the codomain GF(2^m))
    std::string cod;                    // optional codomain spec; expressions get a trace postmap
    std::string fn;                     // polynomial expression source
    std::string family;                 // family spec string
    std::string table_path;             // lookup-table file
    std::string c_set = "all";          // all | all-but-1 | subfield:m[-but-1] | explicit list
    std::vector<std::string> preds;     // delta,pcn,apcn,perfect1,strict-perfect1,bent1,
                                        // bent1-balance,perfect2,strict-perfect2,
                                        // perfect2-profile,bent2,all
    std::string method = "auto";        // auto|definition|balance|profile
    std::vector<std::string> expects;   // true|false|<pred>=<bool>|delta=<int>
    std::string format = "json";        // json|csv
    std::string out;                    // output path ('' = stdout)
    unsigned workers = 0;               // 0 = hardware concurrency
    std::uint64_t seed = 1;
    bool no_timing = false;             // drop elapsed_ms for byte-stable output

    std::string d_range;                // scan-monomials: "lo..hi" or comma list; '' = 1..q-2
    std::string suite;                  // verify: suite name
    std::uint32_t count = 50;           // verify: triples / randoms per combo
    std::string kind = "walsh1";        // spectrum: walsh1|walsh2
};

// exit codes: 0 ok / expectations met, 1 verdict-expectation or suite failure,
// 2 usage or configuration error
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan_monomials(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_ddt(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full argv front end (used by the binary and by in-process tests).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Resolves the configured function source (expression, family or table).
FnTable resolve_function(const RunConfig& cfg);
/// Resolves the c-set against the codomain of f.
std::vector<elem_t> resolve_c_set(const std::string& spec, const FnTable& f);

}  // namespace cdbent::cli
