// Acceptance suite: one checker per criterion, each printing a single
// PASS/FAIL line (plus failure details on stderr-style lines below it).
// Usage: acceptance [N]  -- run criterion N only, or all 13 when omitted.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdbent/analysis.hpp"
#include "cdbent/cli.hpp"
#include "cdbent/corpus.hpp"
#include "cdbent/verify.hpp"
#include "naive_field.hpp"

using namespace cdbent;

namespace {

constexpr std::uint64_t kSeed = 20240901;

struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    bool pass() const { return failures.empty(); }
};

std::string c_name(const FnTable& f, elem_t c) {
    return std::to_string(c) + " (" + f.cod->elem_string(c) + ")";
}

// ---- criterion 1: the first-kind worked examples -------------------------
bool criterion1(Checker& ck) {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    auto f27 = FieldCtx::with_default_poly(3, 3);
    auto f81 = FieldCtx::with_default_poly(3, 4);

    ck.expect(is_perfect1(monomial_fn(f8, 3), 0).value, "x^3 perfect1 at c=0 on GF(8)");
    ck.expect(is_perfect1(monomial_fn(f8, 5), 0, true).value,
              "x^5 strictly-perfect1 at c=0 on GF(8)");
    for (elem_t c : {elem_t(0), elem_t(2)})
        ck.expect(is_perfect1(monomial_fn(f27, 5), c, true).value,
                  "x^5 strictly-perfect1 at c=" + std::to_string(c) + " on GF(27)");
    FnTable x21 = monomial_fn(f81, 21);
    for (elem_t c = 0; c < 81; ++c) {
        if (c == 1) continue;
        Verdict v = is_perfect1(x21, c);
        if (!v.value) {
            std::ostringstream os;
            os << "x^21 perfect1 on GF(81) for ALL c != 1: fails at c=" << c_name(x21, c)
               << " (delta_c = " << c_uniformity(x21, c) << ")";
            ck.expect(false, os.str());
            break;
        }
    }
    for (elem_t c : {elem_t(0), elem_t(2)})
        ck.expect(is_perfect1(monomial_fn(f27, 15), c, true).value,
                  "x^15 strictly-perfect1 at c=" + std::to_string(c) + " on GF(27)");
    return ck.pass();
}

// ---- criterion 2: the second-kind worked examples ------------------------
bool criterion2(Checker& ck) {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    ck.expect(is_perfect2(monomial_fn(f8, 3), 0).value, "x^3 perfect2 at c=0 on GF(8)");
    ck.expect(is_perfect2(eval_to_table(parse_poly("x^3+x^5", *f8), f8), 0).value,
              "x^3+x^5 perfect2 at c=0 on GF(8)");
    return ck.pass();
}

// ---- criterion 3: the monomial gcd dichotomy, exhaustively ---------------
bool criterion3(Checker& ck) {
    for (const char* spec : {"2^3", "3^3", "3^4"}) {
        auto ctx = FieldCtx::parse(spec);
        for (std::uint64_t d = 1; d + 1 < ctx->q(); ++d) {
            std::uint64_t g = std::gcd(d, std::uint64_t(ctx->order()));
            if (g != 1 && g != 2) continue;
            bool bent = is_bent1(monomial_fn(ctx, d), 0).value;
            if (g == 1 && !bent)
                ck.expect(false, std::string(spec) + ": d=" + std::to_string(d) +
                                     " has gcd 1 but is not bent1 at c=0");
            if (g == 2 && bent)
                ck.expect(false, std::string(spec) + ": d=" + std::to_string(d) +
                                     " has gcd 2 but is bent1 at c=0");
        }
    }
    return ck.pass();
}

// ---- criterion 4: Gold branches -------------------------------------------
bool criterion4(Checker& ck) {
    auto f32 = FieldCtx::parse("2^5/1,0,0,1,0,1");
    ck.expect(is_bent1(gold(f32, 1), 0).value, "x^{2^1+1} bent1 at c=0 on GF(32)");
    auto f27 = FieldCtx::with_default_poly(3, 3);
    ck.expect(!is_bent1(gold(f27, 1), 0).value, "x^{3^1+1} NOT bent1 at c=0 on GF(27)");
    return ck.pass();
}

// ---- criterion 5: the trace-class construction ---------------------------
bool criterion5(Checker& ck) {
    auto f64 = FieldCtx::with_default_poly(2, 6);
    auto f4 = FieldCtx::with_default_poly(2, 2);
    SubfieldEmbedding emb = subfield_embedding(f64, f4);
    std::vector<elem_t> cs;
    for (elem_t s = 0; s < 4; ++s)
        if (emb.up(s) != 1) cs.push_back(emb.up(s));
    if (cs.size() != 3) {
        ck.expect(false, "embedded F_4 \\ {1} should have 3 elements");
        return false;
    }
    for (elem_t s : {f4->alpha(), f4->mul(f4->alpha(), f4->alpha())}) {
        elem_t a = emb.up(s);
        FnTable f = do_trace(f64, 2, a);
        for (elem_t c : cs) {
            ck.expect(is_pcn(f, c), "do_trace(k=2, a=" + f64->elem_string(a) +
                                        ") PcN at c=" + c_name(f, c));
            ck.expect(is_bent1(f, c).value, "do_trace(k=2, a=" + f64->elem_string(a) +
                                                ") bent1 at c=" + c_name(f, c));
        }
    }
    return ck.pass();
}

// ---- criterion 6: the bilinear families ------------------------------------
bool criterion6(Checker& ck) {
    auto f32 = FieldCtx::parse("2^5/1,0,0,1,0,1");
    {
        elem_t a = f32->alpha();
        elem_t c0 = f32->add(f32->add(f32->pow(a, 3), f32->pow(a, 2)), a);  // a^3+a^2+a
        FnTable fa = blokhuis_f(f32, 1, a);
        for (elem_t c : {elem_t(0), c0, f32->add(c0, 1)})
            ck.expect(is_bent1(fa, c).value,
                      "blokhuis_f(k=1, a=g) on GF(32) bent1 at c=" + c_name(fa, c));
    }
    {
        auto f64 = FieldCtx::parse("2^6/1,0,1,1,0,1,1");
        elem_t a = f64->alpha();
        elem_t c0 = f64->add(f64->add(f64->pow(a, 3), f64->pow(a, 2)), a);
        FnTable ga = blokhuis_g(f64, 2, a);
        for (elem_t c : {elem_t(0), c0, f64->add(c0, 1)})
            ck.expect(is_bent1(ga, c).value,
                      "blokhuis_g(k=2, a=g) on GF(64) bent1 at c=" + c_name(ga, c));
    }
    return ck.pass();
}

// ---- criterion 7: Maiorana-McFarland is never bent1 for c != 1 -----------
bool criterion7(Checker& ck) {
    std::mt19937_64 eng(kSeed);
    for (std::uint32_t m : {2u, 3u}) {
        auto ctx = FieldCtx::with_default_poly(2, m);
        std::vector<std::pair<std::string, FnTable>> pis;
        pis.emplace_back("identity", monomial_fn(ctx, 1));
        pis.emplace_back("frobenius", monomial_fn(ctx, 2));
        FnTable rnd = monomial_fn(ctx, 1);
        for (std::uint32_t i = ctx->q() - 1; i > 0; --i)
            std::swap(rnd.table[i], rnd.table[eng() % (i + 1)]);
        pis.emplace_back("random", std::move(rnd));
        for (auto& [name, pi] : pis) {
            FnTable f = maiorana_mcfarland(ctx, pi);
            for (elem_t c = 0; c < ctx->q(); ++c) {
                if (c == 1) continue;
                ck.expect(!is_bent1(f, c, Method::definition).value,
                          "mm m=" + std::to_string(m) + " pi=" + name +
                              " must not be bent1 at c=" + std::to_string(c));
            }
        }
    }
    return ck.pass();
}

// ---- criterion 8: the Fourier-pair lemmas ---------------------------------
bool criterion8(Checker& ck) {
    SuiteResult l1 = suite_lemma1(kSeed, 50, 0);
    ck.expect(l1.pass, "lemma1 x50 triples per field pair: " + l1.detail);
    SuiteResult l2 = suite_lemma2(kSeed, 50, 0);
    ck.expect(l2.pass, "lemma2 x50 triples per field pair: " + l2.detail);
    return ck.pass();
}

// ---- criterion 9: the equivalence theorems over the corpus ----------------
bool criterion9(Checker& ck) {
    SuiteResult e1 = suite_equiv1(kSeed, 200, 0);
    ck.expect(e1.pass, "perfect1 = bent1 = bent1-by-balance over the corpus: " + e1.detail);
    SuiteResult e2 = suite_equiv2(kSeed, 200, 0);
    ck.expect(e2.pass, "perfect2 = bent2 = perfect2-by-profile over the corpus: " + e2.detail);
    return ck.pass();
}

// ---- criterion 10: the c = 0 ladder over the corpus -----------------------
bool criterion10(Checker& ck) {
    std::vector<CorpusEntry> corpus = family_corpus(kSeed);
    for (const auto& combo : small_field_combos(27))
        append_random_corpus(corpus, combo.dom, combo.cod, 200,
                             kSeed * 1009 + combo.dom->q() * 131 + combo.cod->q());
    for (const auto& e : corpus) {
        ZeroCReport r = zero_c_characterization(e.fn);
        bool nn = e.fn.dom->same_field(*e.fn.cod);
        bool ok = (r.bent1_at_zero == r.walsh1_row0_vanishes) &&
                  (r.bent2_at_zero == r.walsh2_at_zero_is_zero) &&
                  (!nn || (r.permutation.has_value() &&
                           *r.permutation == r.bent1_at_zero));
        if (!ok) {
            ck.expect(false, "zero-c ladder broke on " + e.name);
            break;
        }
    }
    return ck.pass();
}

// ---- criterion 11: linearized monomials are perfect on both sides ---------
bool criterion11(Checker& ck) {
    for (const char* spec : {"2^3", "3^2", "2^4"}) {
        auto ctx = FieldCtx::parse(spec);
        for (std::uint32_t k = 0; k < ctx->n(); ++k) {
            FnTable f = linearized_monomial(ctx, k);
            if (!is_permutation(f)) {
                ck.expect(false, std::string(spec) + " x^{p^" + std::to_string(k) +
                                     "} should be a permutation");
                continue;
            }
            for (elem_t c = 0; c < ctx->q(); ++c) {
                if (c == 1) continue;
                ck.expect(is_perfect2(f, c).value,
                          std::string(spec) + " x^{p^" + std::to_string(k) +
                              "} perfect2 at c=" + std::to_string(c));
                ck.expect(is_perfect1(f, c).value,
                          std::string(spec) + " x^{p^" + std::to_string(k) +
                              "} perfect1 at c=" + std::to_string(c));
            }
        }
    }
    return ck.pass();
}

// ---- criterion 12: DDT oracle agreement + pinned uniformities -------------
bool criterion12(Checker& ck) {
    std::mt19937_64 eng(kSeed);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        std::uint64_t q = p;
        for (std::uint32_t n = 1; q <= 27; ++n, q *= p) {
            auto ctx = FieldCtx::with_default_poly(p, n);
            naive::Field ref(p, n, ctx->spec().poly);
            for (int trial = 0; trial < 20; ++trial) {
                FnTable f = random_fn(ctx, ctx, eng());
                for (elem_t c : {elem_t(0), elem_t(1), elem_t(eng() % ctx->q())}) {
                    DdtTable t = c_ddt(f, c);
                    std::vector<std::uint32_t> want(std::size_t(ctx->q()) * ctx->q(), 0);
                    for (elem_t a = 0; a < ctx->q(); ++a)
                        for (elem_t x = 0; x < ctx->q(); ++x)
                            ++want[std::size_t(a) * ctx->q() +
                                   ref.sub(f.table[ref.add(x, a)], ref.mul(c, f.table[x]))];
                    if (t.counts != want) {
                        ck.expect(false, "DDT oracle mismatch on " + ctx->spec_string() +
                                             " c=" + std::to_string(c));
                        return ck.pass();
                    }
                }
            }
        }
    }
    auto f3 = FieldCtx::with_default_poly(3, 1);
    ck.expect(c_uniformity(monomial_fn(f3, 2), 1) == 1, "delta(x^2 on GF(3), c=1) == 1");
    auto f8 = FieldCtx::with_default_poly(2, 3);
    ck.expect(c_uniformity(monomial_fn(f8, 3), 1) == 2, "delta(x^3 on GF(8), c=1) == 2");
    return ck.pass();
}

// ---- criterion 13: the DO theorem never contradicts the direct verdict ----
bool criterion13(Checker& ck) {
    SuiteResult r = suite_do(0);
    ck.expect(r.pass, "DO-theorem consistency: " + r.detail);
    return ck.pass();
}

struct Criterion {
    int id;
    const char* title;
    std::function<bool(Checker&)> fn;
};

const Criterion kCriteria[] = {
    {1, "first-kind worked examples (x^3, x^5, x^15, x^21)", criterion1},
    {2, "second-kind worked examples (x^3, x^3+x^5 on GF(8))", criterion2},
    {3, "monomial scan gcd dichotomy on GF(8)/GF(27)/GF(81)", criterion3},
    {4, "Gold corollary branches", criterion4},
    {5, "trace-class construction PcN/bent1 over embedded F_4", criterion5},
    {6, "bilinear families on GF(32)/GF(64)", criterion6},
    {7, "Maiorana-McFarland never bent1 for c != 1", criterion7},
    {8, "Fourier-pair lemmas on seeded random triples", criterion8},
    {9, "equivalence theorems over the corpus", criterion9},
    {10, "c = 0 ladder over the corpus", criterion10},
    {11, "linearized monomials perfect1+perfect2 for all c != 1", criterion11},
    {12, "DDT enumeration oracle + pinned uniformities", criterion12},
    {13, "DO theorem consistency", criterion13},
};

}  // namespace

int main(int argc, char** argv) {
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (const auto& crit : kCriteria) {
        if (only && crit.id != only) continue;
        Checker ck;
        bool ok = false;
        try {
            ok = crit.fn(ck);
        } catch (const std::exception& e) {
            ck.expect(false, std::string("exception: ") + e.what());
        }
        ok = ck.pass() && ok;
        std::printf("criterion %2d: %s — %s\n", crit.id, ok ? "PASS" : "FAIL", crit.title);
        for (const auto& f : ck.failures) std::printf("    failed: %s\n", f.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
