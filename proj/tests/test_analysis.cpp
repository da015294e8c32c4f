#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdbent/analysis.hpp"
#include "cdbent/corpus.hpp"
#include "cdbent/families.hpp"
#include "naive_field.hpp"

using namespace cdbent;

namespace {

// enumeration oracle on the schoolbook arithmetic, independent of the
// log-table path used by c_ddt
std::vector<std::uint32_t> naive_ddt(const naive::Field& dom, const naive::Field& cod,
                                     const std::vector<elem_t>& table, elem_t c) {
    std::vector<std::uint32_t> counts(std::size_t(dom.q) * cod.q, 0);
    for (std::uint32_t a = 0; a < dom.q; ++a)
        for (std::uint32_t x = 0; x < dom.q; ++x) {
            std::uint32_t b = cod.sub(table[dom.add(x, a)], cod.mul(c, table[x]));
            ++counts[std::size_t(a) * cod.q + b];
        }
    return counts;
}

}  // namespace

TEST_CASE("c-DDT worked entries") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    FnTable cube = monomial_fn(f8, 3);
    DdtTable t = c_ddt(cube, 1);
    CHECK(t.at(1, 1) == 2);  // x^2 + x = 0 has the two roots {0,1}

    // a = 0 row at c = 1 is the point mass at b = 0
    FnTable f = random_fn(f8, f8, 9);
    DdtTable t2 = c_ddt(f, 1);
    CHECK(t2.at(0, 0) == 8);
    for (elem_t b = 1; b < 8; ++b) CHECK(t2.at(0, b) == 0);

    auto f3 = FieldCtx::with_default_poly(3, 1);
    FnTable sq = monomial_fn(f3, 2);
    DdtTable t3 = c_ddt(sq, 1);
    for (elem_t a = 1; a < 3; ++a)
        for (elem_t b = 0; b < 3; ++b) CHECK(t3.at(a, b) == 1);
}

TEST_CASE("c-DDT agrees with the independent enumeration oracle") {
    std::mt19937_64 eng(100);
    for (const char* spec : {"2^3", "3^2", "2^4", "3^3"}) {
        auto dom = FieldCtx::parse(spec);
        naive::Field ref(dom->p(), dom->n(), dom->spec().poly);
        for (int trial = 0; trial < 5; ++trial) {
            FnTable f = random_fn(dom, dom, eng());
            for (elem_t c : {elem_t(0), elem_t(1), elem_t(eng() % dom->q())}) {
                DdtTable t = c_ddt(f, c);
                CHECK(t.counts == naive_ddt(ref, ref, f.table, c));
            }
        }
    }
}

TEST_CASE("DDT rows sum to p^n") {
    auto f9 = FieldCtx::with_default_poly(3, 2);
    for (std::uint64_t seed : {4, 5, 6}) {
        FnTable f = random_fn(f9, f9, seed);
        for (elem_t c : {elem_t(0), elem_t(1), elem_t(7)}) {
            DdtTable t = c_ddt(f, c);
            for (elem_t a = 0; a < 9; ++a) {
                std::uint32_t sum = 0;
                for (elem_t b = 0; b < 9; ++b) sum += t.at(a, b);
                CHECK(sum == 9);
            }
        }
    }
}

TEST_CASE("uniformity and PcN/APcN worked values") {
    auto f3 = FieldCtx::with_default_poly(3, 1);
    CHECK(c_uniformity(monomial_fn(f3, 2), 1) == 1);  // the planar square
    auto f8 = FieldCtx::with_default_poly(2, 3);
    CHECK(c_uniformity(monomial_fn(f8, 3), 1) == 2);  // Gold APN
    CHECK(is_apcn(monomial_fn(f8, 3), 1));
    CHECK(!is_pcn(monomial_fn(f8, 3), 1));
    // any permutation is PcN at c = 0
    CHECK(c_uniformity(monomial_fn(f8, 1), 0) == 1);
    CHECK(is_pcn(monomial_fn(f8, 1), 0));
}

TEST_CASE("perfect1 worked verdicts") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    CHECK(is_perfect1(monomial_fn(f8, 3), 0).value);
    CHECK(is_perfect1(monomial_fn(f8, 5), 0, /*strict=*/true).value);

    auto f27 = FieldCtx::with_default_poly(3, 3);
    for (elem_t c : {elem_t(0), elem_t(2)}) {
        CHECK(is_perfect1(monomial_fn(f27, 5), c, true).value);
        CHECK(is_perfect1(monomial_fn(f27, 15), c, true).value);
    }

    // strict never holds at c = 1: the u = 0 correlation is p^n
    Verdict v = is_perfect1(monomial_fn(f8, 1), 1, true);
    CHECK(!v.value);
    REQUIRE(v.witness);
    CHECK(v.witness->u == 0);
}

TEST_CASE("perfect1 methods agree everywhere sampled") {
    std::mt19937_64 eng(200);
    auto f9 = FieldCtx::with_default_poly(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
        FnTable f = random_fn(f9, f9, eng());
        for (elem_t c = 0; c < 9; ++c)
            for (bool strict : {false, true})
                CHECK(is_perfect1(f, c, strict, Method::balance).value ==
                      is_perfect1(f, c, strict, Method::definition).value);
    }
}

TEST_CASE("perfect1 strictness collapses at c = 0") {
    std::mt19937_64 eng(300);
    auto f8 = FieldCtx::with_default_poly(2, 3);
    auto f2 = FieldCtx::with_default_poly(2, 1);
    for (int trial = 0; trial < 30; ++trial) {
        FnTable f = random_fn(f8, trial % 2 ? f8 : f2, eng());
        CHECK(is_perfect1(f, 0, false).value == is_perfect1(f, 0, true).value);
    }
}

TEST_CASE("bent1 worked verdicts") {
    auto f32 = FieldCtx::parse("2^5/1,0,0,1,0,1");
    CHECK(is_bent1(gold(f32, 1), 0, Method::definition).value);

    auto f27 = FieldCtx::with_default_poly(3, 3);
    CHECK(!is_bent1(gold(f27, 1), 0, Method::definition).value);

    FnTable z{f27, f27, std::vector<elem_t>(27, 0)};
    Verdict v = is_bent1(z, 0, Method::definition);
    CHECK(!v.value);
    CHECK(v.witness.has_value());
}

TEST_CASE("bent1 balance route equals the definitional route for c != 1") {
    std::mt19937_64 eng(400);
    auto f9 = FieldCtx::with_default_poly(3, 2);
    auto f3 = FieldCtx::with_default_poly(3, 1);
    for (int trial = 0; trial < 15; ++trial) {
        FnTable f = random_fn(f9, trial % 2 ? f9 : f3, eng());
        for (elem_t c = 0; c < f.q_cod(); ++c) {
            if (c == 1) continue;
            CHECK(is_bent1_by_balance(f, c).value == is_bent1(f, c, Method::definition).value);
        }
    }
    // linearized monomials are bent for every c != 1
    auto f16 = FieldCtx::with_default_poly(2, 4);
    FnTable lin = linearized_monomial(f16, 2);
    for (elem_t c = 0; c < 16; ++c) {
        if (c == 1) continue;
        CHECK(is_bent1_by_balance(lin, c).value);
    }
}

TEST_CASE("perfect2 worked verdicts and profile agreement") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    CHECK(is_perfect2(monomial_fn(f8, 3), 0).value);
    CHECK(is_perfect2(eval_to_table(parse_poly("x^3+x^5", *f8), f8), 0).value);

    std::mt19937_64 eng(500);
    for (int trial = 0; trial < 20; ++trial) {
        FnTable f = random_fn(f8, f8, eng());
        for (elem_t c = 0; c < 8; ++c) {
            CHECK(is_perfect2(f, c, false, Method::profile).value ==
                  is_perfect2(f, c, false, Method::definition).value);
            CHECK(perfect2_by_profile(f, c).value ==
                  is_perfect2(f, c, false, Method::definition).value);
        }
    }
}

TEST_CASE("support profile shape") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    FnTable ident = monomial_fn(f8, 1);
    SupportProfile2 prof = support_profile2(ident, 0, 3);
    std::uint32_t total = 0;
    for (auto v : prof.counts) total += v;
    CHECK(total == 8);
    // identity at c=0: every output hit once, so the p=2 halves match
    for (std::uint32_t j = 0; j < 4; ++j) CHECK(prof.counts[j] == prof.counts[j + 4]);
    CHECK(perfect2_by_profile(ident, 0).value);
}

TEST_CASE("bent2 follows the Walsh-product definition") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    CHECK(is_bent2(monomial_fn(f8, 3), 0).value);  // permutation at c=0

    // the hand-verified divergence case: R1-perfect but not product-bent
    auto f4 = FieldCtx::with_default_poly(2, 2);
    FnTable f{f4, f4, {0, 0, 1, 1}};
    CHECK(is_perfect2(f, 3, false, Method::definition).value);
    CHECK(!is_bent2(f, 3).value);
}

TEST_CASE("zero-c ladder") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    ZeroCReport r = zero_c_characterization(monomial_fn(f8, 3));
    CHECK(r.bent1_at_zero);
    CHECK(r.walsh1_row0_vanishes);
    REQUIRE(r.permutation.has_value());
    CHECK(*r.permutation);
    CHECK(r.bent2_at_zero);
    CHECK(r.walsh2_at_zero_is_zero);
    CHECK(r.consistent);

    CHECK(zero_c_characterization(monomial_fn(f8, 2)).bent1_at_zero);  // gcd(2,7) = 1

    auto f9 = FieldCtx::with_default_poly(3, 2);
    ZeroCReport r9 = zero_c_characterization(monomial_fn(f9, 2));
    CHECK(!r9.bent1_at_zero);  // gcd(2,8) = 2
    CHECK(r9.consistent);

    std::mt19937_64 eng(600);
    for (int trial = 0; trial < 25; ++trial) {
        FnTable f = random_fn(f9, f9, eng());
        CHECK(zero_c_characterization(f).consistent);
    }
}

TEST_CASE("DO decomposition recovers coefficient placement") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    DoForm d = do_decompose(monomial_fn(f8, 3));
    CHECK(d.at(0, 1) == 1);
    CHECK(d.at(0, 0) == 0);
    CHECK(d.at(1, 1) == 0);

    DoForm d6 = do_decompose(monomial_fn(f8, 6));
    CHECK(d6.at(1, 2) == 1);

    try {
        (void)do_decompose(monomial_fn(f8, 7));
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_do_polynomial);
    }
}

TEST_CASE("DO round-trip on random forms") {
    std::mt19937_64 eng(700);
    auto f27 = FieldCtx::with_default_poly(3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        DoForm d;
        d.ctx = f27;
        d.a.assign(9, 0);
        for (std::uint32_t i = 0; i < 3; ++i)
            for (std::uint32_t j = i; j < 3; ++j)
                if (eng() % 2) d.a[i * 3 + j] = eng() % 27;
        FnTable f = do_form_table(d);
        DoForm back = do_decompose(f);
        CHECK(back.a == d.a);
    }
}

TEST_CASE("companion coefficients and kernel for the cube") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    FnTable cube = monomial_fn(f8, 3);
    DoForm d = do_decompose(cube);
    for (elem_t u = 1; u < 8; ++u) {
        DoCompanion comp = do_companion(d, u);
        CHECK(comp.coeffs[0] == f8->mul(u, u));
        CHECK(comp.coeffs[1] == u);
        CHECK(comp.coeffs[2] == 0);
        // D_uF(x) - F(u) = sum A_i x^{p^i} as tables
        for (elem_t x = 0; x < 8; ++x) {
            elem_t lhs = f8->sub(f8->sub(cube.table[f8->add(x, u)], cube.table[x]), cube.table[u]);
            elem_t rhs = f8->add(f8->mul(comp.coeffs[0], x),
                                 f8->add(f8->mul(comp.coeffs[1], f8->pow(x, 2)),
                                         f8->mul(comp.coeffs[2], f8->pow(x, 4))));
            CHECK(lhs == rhs);
        }
        // L_u(b) = u^2 b^2 + u b^4, vanishing on b = 0 and exactly on b^2 = u
        for (elem_t b = 0; b < 8; ++b) {
            elem_t want = f8->add(f8->mul(f8->mul(u, u), f8->mul(b, b)), f8->mul(u, f8->pow(b, 4)));
            CHECK(comp.eval(b) == want);
            if (b) CHECK((comp.eval(b) == 0) == (f8->mul(b, b) == u));
        }
    }
    CHECK_THROWS_AS((void)do_companion(d, 0), error);

    DoForm zero;
    zero.ctx = f8;
    zero.a.assign(9, 0);
    DoCompanion zc = do_companion(zero, 3);
    for (elem_t b = 0; b < 8; ++b) CHECK(zc.eval(b) == 0);
}

TEST_CASE("companion is insensitive to triangular placement") {
    // a_ij enters only through a_ij + a_ji, so moving mass across the diagonal
    // must not change A_i (checked via the derivative identity)
    auto f27 = FieldCtx::with_default_poly(3, 3);
    DoForm upper;
    upper.ctx = f27;
    upper.a.assign(9, 0);
    upper.a[0 * 3 + 2] = 5;  // a_{02}
    FnTable f = do_form_table(upper);
    DoForm rec = do_decompose(f);
    for (elem_t u = 1; u < 27; ++u) {
        DoCompanion c1 = do_companion(upper, u);
        DoCompanion c2 = do_companion(rec, u);
        CHECK(c1.coeffs == c2.coeffs);
    }
}

TEST_CASE("DO theorem checker on worked cases") {
    auto f8 = FieldCtx::with_default_poly(2, 3);
    DoTheoremReport r = do_theorem_check(monomial_fn(f8, 3), 0);
    CHECK(r.bent1_direct);
    CHECK(!r.hyp1_fired);
    CHECK(r.cond2_all);
    CHECK(r.consistent);

    DoTheoremReport r1 = do_theorem_check(monomial_fn(f8, 3), 1);
    CHECK(!r1.hyp1_applicable);
    CHECK(r1.consistent);

    auto f27 = FieldCtx::with_default_poly(3, 3);
    DoTheoremReport r10 = do_theorem_check(monomial_fn(f27, 10), 0);  // x^{9+1}
    CHECK(!r10.bent1_direct);  // odd-characteristic Gold with odd n/gcd
    CHECK(r10.consistent);
}

TEST_CASE("DO theorem checker stays consistent on random forms") {
    std::mt19937_64 eng(800);
    auto f8 = FieldCtx::with_default_poly(2, 3);
    auto f27 = FieldCtx::with_default_poly(3, 3);
    for (auto& ctx : {f8, f27}) {
        const std::uint32_t n = ctx->n(), p = ctx->p();
        for (int trial = 0; trial < 6; ++trial) {
            DoForm d;
            d.ctx = ctx;
            d.a.assign(std::size_t(n) * n, 0);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = i; j < n; ++j) {
                    std::uint64_t e = 1;
                    for (std::uint32_t t = 0; t < i; ++t) e *= p;
                    std::uint64_t pj = 1;
                    for (std::uint32_t t = 0; t < j; ++t) pj *= p;
                    if (e + pj < ctx->q() && eng() % 2) d.a[i * n + j] = eng() % ctx->q();
                }
            FnTable f = do_form_table(d);
            for (elem_t c = 0; c < ctx->q(); ++c) CHECK(do_theorem_check(f, c).consistent);
        }
    }
}

TEST_CASE("PcN implies strictly perfect2 across the corpus") {
    // one-directional implication only, and only for c != 1: at c = 1 the
    // u = 0 correlation is identically p^n, so strictness is unattainable
    // (planar functions are the counterexample)
    for (const auto& e : family_corpus(3)) {
        if (!e.fn.dom->same_field(*e.fn.cod)) continue;
        if (e.fn.q_dom() > 32) continue;  // keep the sweep quick
        for (elem_t c = 0; c < e.fn.q_cod(); ++c) {
            if (c == 1 || c_uniformity(e.fn, c) != 1) continue;
            CHECK(is_perfect2(e.fn, c, /*strict=*/true).value);
        }
    }
}

TEST_CASE("aggregate report carries witnesses for false verdicts") {
    auto f9 = FieldCtx::with_default_poly(3, 2);
    FnTable f = random_fn(f9, f9, 901);
    AnalysisReport rep = analyze(f, 2);
    CHECK(rep.delta >= 1);
    if (!rep.perfect1.value) CHECK(rep.perfect1.witness.has_value());
    if (!rep.bent1.value) CHECK(rep.bent1.witness.has_value());
    if (!rep.perfect2.value) CHECK(rep.perfect2.witness.has_value());
    if (!rep.bent2.value) CHECK(rep.bent2.witness.has_value());
    CHECK(!rep.notes.empty());
}
