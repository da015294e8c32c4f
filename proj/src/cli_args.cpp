#include <CLI11.hpp>

#include "cdbent/cli.hpp"

namespace cdbent::cli {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact c-differential spectra and bentness analysis for small-field S-boxes"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_fn) {
        sub->add_option("--field", cfg.field, "field spec, e.g. 2^5 or 2^5/1,0,0,1,0,1");
        if (with_fn) {
            sub->add_option("--fn", cfg.fn, "polynomial expression, e.g. \"x^3+x^5\"");
            sub->add_option("--family", cfg.family, "family spec, e.g. gold:k=1");
            sub->add_option("--table", cfg.table_path, "lookup-table file");
            sub->add_option("--cod", cfg.cod, "codomain field; expressions get a trace postmap");
        }
        sub->add_option("--c", cfg.c_set, "c-set: all | all-but-1 | subfield:m[-but-1] | list");
        sub->add_option("--method", cfg.method, "definition|balance|profile (default auto)");
        sub->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--workers", cfg.workers, "worker threads (default: hardware)");
        sub->add_option("--seed", cfg.seed, "RNG seed");
        sub->add_flag("--no-timing", cfg.no_timing, "omit elapsed_ms for byte-stable output");
    };

    auto* check = app.add_subcommand("check", "run predicates over a c-set");
    add_common(check, true);
    check->add_option("--pred", cfg.preds,
                      "predicates: delta pcn apcn perfect1 strict-perfect1 bent1 bent1-balance "
                      "perfect2 strict-perfect2 perfect2-profile bent2")
        ->delimiter(',');
    check->add_option("--expect", cfg.expects, "true|false|<pred>=<bool>|delta=<int>")
        ->delimiter(',');

    auto* scan = app.add_subcommand("scan-monomials", "catalog x^d over a d-range and c-set");
    add_common(scan, false);
    scan->add_option("--d", cfg.d_range, "exponent range lo..hi or list (default 1..q-2)");

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", cfg.suite, "lemma1|lemma2|equiv1|equiv2|mm|gold|do|profiles")
        ->required();
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--count", cfg.count, "triples / randoms per combination");
    verify->add_option("--workers", cfg.workers, "worker threads");
    verify->add_option("--format", cfg.format, "json|csv|text");

    auto* spectrum = app.add_subcommand("spectrum", "dump a full transform table");
    add_common(spectrum, true);
    spectrum->add_option("--kind", cfg.kind, "walsh1|walsh2")
        ->check(CLI::IsMember({"walsh1", "walsh2"}));

    auto* ddt = app.add_subcommand("ddt", "dump c-difference distribution tables");
    add_common(ddt, true);

    auto* family = app.add_subcommand("family", "instantiate a family and dump its table");
    add_common(family, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(cfg, out, err);
        if (scan->parsed()) return cmd_scan_monomials(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (spectrum->parsed()) return cmd_spectrum(cfg, out, err);
        if (ddt->parsed()) return cmd_ddt(cfg, out, err);
        if (family->parsed()) return cmd_family(cfg, out, err);
    } catch (const error& e) {
        err << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace cdbent::cli
