#include "cdbent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cdbent/corpus.hpp"
#include "cdbent/families.hpp"
#include "cdbent/parallel.hpp"
#include "cdbent/verify.hpp"

namespace cdbent::cli {
namespace {

using nlohmann::json;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::uint64_t parse_u64_or(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(errc::bad_param, std::string("bad ") + what + ": '" + s + "'");
    return v;
}

elem_t parse_c_literal(const std::string& tok, const FieldCtx& cod) {
    if (!tok.empty() && tok[0] == 'g') {
        if (tok.size() == 1) return cod.alpha();
        if (tok[1] != '^') fail(errc::bad_param, "bad element literal '" + tok + "'");
        return cod.from_log(parse_u64_or(tok.substr(2), "element log"));
    }
    std::uint64_t v = parse_u64_or(tok, "element index");
    if (v >= cod.q()) fail(errc::bad_param, "element index " + tok + " outside the codomain");
    return static_cast<elem_t>(v);
}

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    json j = json::object();
    if (w->u >= 0) j["u"] = w->u;
    if (w->b >= 0) j["b"] = w->b;
    if (w->x >= 0) j["x"] = w->x;
    if (w->a >= 0) j["a"] = w->a;
    if (w->count >= 0) j["count"] = w->count;
    return j;
}

std::string witness_csv(const std::optional<Witness>& w) {
    if (!w) return "";
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* k, std::int64_t v) {
        if (v < 0) return;
        if (!first) os << ' ';
        first = false;
        os << k << '=' << v;
    };
    put("u", w->u);
    put("b", w->b);
    put("x", w->x);
    put("a", w->a);
    put("count", w->count);
    return os.str();
}

Method parse_method(const std::string& m) {
    if (m == "auto" || m.empty()) return Method::automatic;
    if (m == "definition") return Method::definition;
    if (m == "balance") return Method::balance;
    if (m == "profile") return Method::profile;
    fail(errc::bad_param, "bad method '" + m + "' (want definition|balance|profile)");
}

struct PredResult {
    std::string predicate;
    elem_t c;
    bool is_numeric = false;
    std::uint32_t number = 0;  // delta
    Verdict verdict;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;
};

PredResult run_predicate(const std::string& pred, const FnTable& f, elem_t c, Method m) {
    PredResult r;
    r.predicate = pred;
    r.c = c;
    auto t0 = clock_type::now();
    if (pred == "delta") {
        r.is_numeric = true;
        r.number = c_uniformity(f, c);
    } else if (pred == "pcn") {
        r.verdict.value = is_pcn(f, c);
        r.verdict.method = Method::definition;
    } else if (pred == "apcn") {
        r.verdict.value = is_apcn(f, c);
        r.verdict.method = Method::definition;
    } else if (pred == "perfect1") {
        r.verdict = is_perfect1(f, c, false, m);
    } else if (pred == "strict-perfect1") {
        r.verdict = is_perfect1(f, c, true, m);
    } else if (pred == "bent1") {
        r.verdict = is_bent1(f, c, m);
    } else if (pred == "bent1-balance") {
        r.verdict = is_bent1_by_balance(f, c);
    } else if (pred == "perfect2") {
        r.verdict = is_perfect2(f, c, false, m);
        r.notes = predicate_notes(f, c, true);
    } else if (pred == "strict-perfect2") {
        r.verdict = is_perfect2(f, c, true, m);
        r.notes = predicate_notes(f, c, true);
    } else if (pred == "perfect2-profile") {
        r.verdict = perfect2_by_profile(f, c);
        r.notes = predicate_notes(f, c, true);
    } else if (pred == "bent2") {
        if (m != Method::automatic && m != Method::definition)
            fail(errc::bad_param, "bent2 is definitional only");
        r.verdict = is_bent2(f, c);
        r.notes = predicate_notes(f, c, true);
    } else {
        fail(errc::bad_param, "unknown predicate '" + pred + "'");
    }
    if (c == 1 && !r.is_numeric) {
        auto extra = predicate_notes(f, c, false);
        r.notes.insert(r.notes.begin(), extra.begin(), extra.end());
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

json pred_result_json(const PredResult& r, const FnTable& f, bool timing) {
    json j;
    j["schema"] = 1;
    j["predicate"] = r.predicate;
    j["c"] = r.c;
    j["c_str"] = f.cod->elem_string(r.c);
    if (r.is_numeric) {
        j["verdict"] = r.number;
        j["method"] = "definition";
        j["witness"] = nullptr;
    } else {
        j["verdict"] = r.verdict.value;
        j["method"] = method_name(r.verdict.method);
        j["witness"] = witness_json(r.verdict.witness);
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

struct OutputFile {
    std::ofstream file;
    std::ostream* os;

    OutputFile(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os = &fallback;
        } else {
            file.open(path);
            if (!file) fail(errc::bad_param, "cannot open output file '" + path + "'");
            os = &file;
        }
    }
};

struct Expectation {
    std::string pred;  // empty = applies to every predicate
    bool boolean = true;
    bool bool_value = true;
    std::uint32_t num_value = 0;
};

std::vector<Expectation> parse_expects(const std::vector<std::string>& raw) {
    std::vector<Expectation> out;
    for (const auto& e : raw) {
        Expectation x;
        std::size_t eq = e.find('=');
        std::string val = e;
        if (eq != std::string::npos) {
            x.pred = e.substr(0, eq);
            val = e.substr(eq + 1);
        }
        if (val == "true" || val == "false") {
            x.boolean = true;
            x.bool_value = val == "true";
        } else {
            x.boolean = false;
            x.num_value = static_cast<std::uint32_t>(parse_u64_or(val, "expectation value"));
        }
        out.push_back(std::move(x));
    }
    return out;
}

bool expectation_applies(const Expectation& e, const PredResult& r) {
    return e.pred.empty() || e.pred == r.predicate;
}

bool expectation_met(const Expectation& e, const PredResult& r) {
    if (r.is_numeric) return e.boolean ? true : r.number == e.num_value;
    return !e.boolean || r.verdict.value == e.bool_value;
}

}  // namespace

FnTable resolve_function(const RunConfig& cfg) {
    int sources = int(!cfg.fn.empty()) + int(!cfg.family.empty()) + int(!cfg.table_path.empty());
    if (cfg.field.empty()) fail(errc::bad_param, "--field is required");
    if (sources != 1) fail(errc::bad_param, "give exactly one of --fn, --family, --table");
    FieldRef dom = FieldCtx::parse(cfg.field);

    if (!cfg.family.empty()) return family_from_spec(cfg.family, dom);

    FieldRef cod = cfg.cod.empty() ? dom : FieldCtx::parse(cfg.cod);
    if (!cfg.table_path.empty()) {
        std::ifstream in(cfg.table_path);
        if (!in) fail(errc::bad_param, "cannot open table file '" + cfg.table_path + "'");
        return load_table(in, dom, cod);
    }

    PolyExpr e = parse_poly(cfg.fn, *dom);
    if (cod->same_field(*dom)) return eval_to_table(e, dom);
    SubfieldEmbedding emb = subfield_embedding(dom, cod);
    return eval_to_table(e, dom, emb);
}

std::vector<elem_t> resolve_c_set(const std::string& spec, const FnTable& f) {
    const FieldCtx& cod = *f.cod;
    std::vector<elem_t> cs;
    if (spec == "all") {
        for (elem_t c = 0; c < cod.q(); ++c) cs.push_back(c);
    } else if (spec == "all-but-1") {
        for (elem_t c = 0; c < cod.q(); ++c)
            if (c != 1) cs.push_back(c);
    } else if (spec.rfind("subfield:", 0) == 0) {
        std::string rest = spec.substr(9);
        bool but1 = false;
        if (rest.size() > 6 && rest.substr(rest.size() - 6) == "-but-1") {
            but1 = true;
            rest = rest.substr(0, rest.size() - 6);
        }
        std::uint32_t m = static_cast<std::uint32_t>(parse_u64_or(rest, "subfield degree"));
        FieldRef sub = FieldCtx::with_default_poly(cod.p(), m);
        SubfieldEmbedding emb = subfield_embedding(f.cod, sub);
        for (elem_t s = 0; s < sub->q(); ++s) {
            elem_t c = emb.up(s);
            if (but1 && c == 1) continue;
            cs.push_back(c);
        }
        std::sort(cs.begin(), cs.end());
    } else {
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            std::size_t comma = spec.find(',', pos);
            if (comma == std::string::npos) comma = spec.size();
            cs.push_back(parse_c_literal(spec.substr(pos, comma - pos), cod));
            pos = comma + 1;
            if (comma == spec.size()) break;
        }
    }
    if (cs.empty()) fail(errc::bad_param, "empty c-set");
    return cs;
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FnTable f = resolve_function(cfg);
    std::vector<elem_t> cs = resolve_c_set(cfg.c_set, f);
    std::vector<std::string> preds = cfg.preds;
    if (preds.empty()) fail(errc::bad_param, "--pred is required");
    Method m = parse_method(cfg.method == "auto" ? "" : cfg.method);
    auto expects = parse_expects(cfg.expects);

    // results are computed in parallel over c but emitted in (pred, c) order
    std::vector<PredResult> results(preds.size() * cs.size());
    std::exception_ptr first_error;
    std::mutex err_mu;
    parallel_for(0, cs.size(), cfg.workers, [&](std::uint64_t ci) {
        for (std::size_t pi = 0; pi < preds.size(); ++pi) {
            try {
                results[pi * cs.size() + ci] = run_predicate(preds[pi], f, cs[ci], m);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        }
    });
    if (first_error) std::rethrow_exception(first_error);

    OutputFile sink(cfg.out, out);
    bool all_met = true;
    if (cfg.format == "csv") *sink.os << "predicate,c,verdict,method,witness\n";
    for (const auto& r : results) {
        if (cfg.format == "csv") {
            *sink.os << r.predicate << ',' << r.c << ','
                     << (r.is_numeric ? std::to_string(r.number)
                                      : std::string(r.verdict.value ? "true" : "false"))
                     << ',' << (r.is_numeric ? "definition" : method_name(r.verdict.method)) << ','
                     << '"' << witness_csv(r.verdict.witness) << '"' << '\n';
        } else {
            *sink.os << pred_result_json(r, f, !cfg.no_timing).dump() << '\n';
        }
        for (const auto& e : expects)
            if (expectation_applies(e, r) && !expectation_met(e, r)) all_met = false;
    }
    if (!all_met) {
        err << "expectation mismatch\n";
        return 1;
    }
    return 0;
}

int cmd_scan_monomials(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cfg.field.empty()) fail(errc::bad_param, "--field is required");
    FieldRef ctx = FieldCtx::parse(cfg.field);
    Method m = parse_method(cfg.method == "auto" ? "" : cfg.method);

    std::vector<std::uint64_t> ds;
    if (cfg.d_range.empty()) {
        for (std::uint64_t d = 1; d + 1 < ctx->q(); ++d) ds.push_back(d);
    } else if (cfg.d_range.find("..") != std::string::npos) {
        std::size_t dots = cfg.d_range.find("..");
        std::uint64_t lo = parse_u64_or(cfg.d_range.substr(0, dots), "d range");
        std::uint64_t hi = parse_u64_or(cfg.d_range.substr(dots + 2), "d range");
        for (std::uint64_t d = lo; d <= hi; ++d) ds.push_back(d);
    } else {
        std::size_t pos = 0;
        while (pos <= cfg.d_range.size()) {
            std::size_t comma = cfg.d_range.find(',', pos);
            if (comma == std::string::npos) comma = cfg.d_range.size();
            ds.push_back(parse_u64_or(cfg.d_range.substr(pos, comma - pos), "d"));
            pos = comma + 1;
            if (comma == cfg.d_range.size()) break;
        }
    }

    struct Row {
        std::uint64_t d;
        elem_t c;
        std::uint64_t gcd_val;
        std::uint32_t delta;
        bool bent1_at_0;
    };
    std::vector<elem_t> cs;
    {
        FnTable probe = monomial_fn(ctx, 1);
        cs = resolve_c_set(cfg.c_set, probe);
    }
    std::vector<Row> rows(ds.size() * cs.size());
    std::exception_ptr first_error;
    std::mutex err_mu;
    parallel_for(0, ds.size(), cfg.workers, [&](std::uint64_t di) {
        try {
            FnTable f = monomial_fn(ctx, ds[di]);
            bool bent0 = is_bent1(f, 0, m).value;
            std::uint64_t g = std::gcd(ds[di], std::uint64_t(ctx->order()));
            for (std::size_t ci = 0; ci < cs.size(); ++ci)
                rows[di * cs.size() + ci] =
                    Row{ds[di], cs[ci], g, c_uniformity(f, cs[ci]), bent0};
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!first_error) first_error = std::current_exception();
        }
    });
    if (first_error) std::rethrow_exception(first_error);

    OutputFile sink(cfg.out, out);
    if (cfg.format == "csv") {
        *sink.os << "d,c,gcd,delta,bent1_at_0\n";
        for (const auto& r : rows)
            *sink.os << r.d << ',' << r.c << ',' << r.gcd_val << ',' << r.delta << ','
                     << (r.bent1_at_0 ? "true" : "false") << '\n';
    } else {
        for (const auto& r : rows) {
            json j;
            j["schema"] = 1;
            j["d"] = r.d;
            j["c"] = r.c;
            j["gcd"] = r.gcd_val;
            j["delta"] = r.delta;
            j["bent1_at_0"] = r.bent1_at_0;
            *sink.os << j.dump() << '\n';
        }
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.suite.empty()) fail(errc::bad_param, "verify needs a suite name");
    SuiteResult r = run_suite(cfg.suite, cfg.seed, cfg.count, cfg.workers);
    if (cfg.format == "json") {
        json j;
        j["schema"] = 1;
        j["suite"] = r.suite;
        j["pass"] = r.pass;
        j["cases"] = r.cases;
        j["detail"] = r.detail;
        out << j.dump() << '\n';
    } else {
        out << "suite " << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.cases
            << " cases)" << (r.detail.empty() ? "" : " counterexample: " + r.detail) << '\n';
    }
    if (!r.pass) {
        err << "suite " << r.suite << " failed: " << r.detail << '\n';
        return 1;
    }
    return 0;
}

namespace {

json cyc_json(const CycInt& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(c.convert_to<std::int64_t>());
    auto ap = v.approx();
    return json{{"coeffs", std::move(coeffs)}, {"approx", {ap.real(), ap.imag()}}};
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    FnTable f = resolve_function(cfg);
    OutputFile sink(cfg.out, out);
    if (cfg.kind == "walsh1") {
        Spectrum1 s = full_walsh1(f, cfg.workers);
        for (elem_t a = 0; a < f.q_dom(); ++a)
            for (elem_t b = 0; b < f.q_cod(); ++b) {
                json j = cyc_json(s.at(a, b));
                j["a"] = a;
                j["b"] = b;
                j["schema"] = 1;
                *sink.os << j.dump() << '\n';
            }
    } else if (cfg.kind == "walsh2") {
        Spectrum2 s = full_walsh2(f, cfg.workers);
        for (elem_t a = 0; a < f.q_dom(); ++a) {
            json j = cyc_json(s.values[a]);
            j["a"] = a;
            j["schema"] = 1;
            *sink.os << j.dump() << '\n';
        }
    } else {
        fail(errc::bad_param, "spectrum kind must be walsh1 or walsh2");
    }
    return 0;
}

int cmd_ddt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    FnTable f = resolve_function(cfg);
    std::vector<elem_t> cs = resolve_c_set(cfg.c_set, f);
    OutputFile sink(cfg.out, out);
    for (elem_t c : cs) {
        DdtTable t = c_ddt(f, c);
        if (cfg.format == "csv") {
            for (elem_t a = 0; a < f.q_dom(); ++a) {
                for (elem_t b = 0; b < f.q_cod(); ++b)
                    *sink.os << t.at(a, b) << (b + 1 == f.q_cod() ? "" : ",");
                *sink.os << '\n';
            }
        } else {
            json rows = json::array();
            for (elem_t a = 0; a < f.q_dom(); ++a) {
                json row = json::array();
                for (elem_t b = 0; b < f.q_cod(); ++b) row.push_back(t.at(a, b));
                rows.push_back(std::move(row));
            }
            json j;
            j["schema"] = 1;
            j["c"] = c;
            j["delta"] = c_uniformity(t);
            j["counts"] = std::move(rows);
            *sink.os << j.dump() << '\n';
        }
    }
    return 0;
}

int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cfg.family.empty()) fail(errc::bad_param, "--family is required");
    FnTable f = resolve_function(cfg);

    json meta;
    meta["schema"] = 1;
    meta["family"] = cfg.family;
    meta["dom"] = f.dom->spec_string();
    meta["cod"] = f.cod->spec_string();
    if (cfg.family.rfind("mm", 0) == 0) meta["pairing"] = mm_pairing_note(*f.cod);
    if (cfg.family.rfind("coulter_matthews", 0) == 0) {
        std::size_t kpos = cfg.family.find("k=");
        if (kpos != std::string::npos) {
            std::size_t kend = cfg.family.find(',', kpos);
            std::string ks = cfg.family.substr(kpos + 2, kend == std::string::npos
                                                             ? std::string::npos
                                                             : kend - kpos - 2);
            std::uint64_t d = coulter_matthews_exponent(
                static_cast<std::uint32_t>(parse_u64_or(ks, "k")));
            meta["exponent"] = d;
            meta["gcd"] = std::gcd(d, std::uint64_t(f.dom->order()));
        }
    }

    if (!cfg.out.empty()) {
        std::ofstream file(cfg.out);
        if (!file) fail(errc::bad_param, "cannot open output file '" + cfg.out + "'");
        save_table(file, f);
        out << meta.dump() << '\n';
    } else {
        save_table(out, f);
    }
    return 0;
}

}  // namespace cdbent::cli
