#include "cdbent/corpus.hpp"

#include <random>

namespace cdbent {
namespace {

FnTable shuffled_permutation(FieldRef ctx, std::uint64_t seed) {
    FnTable f;
    f.dom = ctx;
    f.cod = ctx;
    f.table.resize(ctx->q());
    for (elem_t x = 0; x < ctx->q(); ++x) f.table[x] = x;
    std::mt19937_64 eng(seed);
    for (std::uint32_t i = ctx->q() - 1; i > 0; --i)
        std::swap(f.table[i], f.table[eng() % (i + 1)]);
    return f;
}

}  // namespace

std::vector<CorpusEntry> family_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    auto F8 = FieldCtx::with_default_poly(2, 3);
    auto F9 = FieldCtx::with_default_poly(3, 2);
    auto F16 = FieldCtx::with_default_poly(2, 4);
    auto F27 = FieldCtx::with_default_poly(3, 3);
    auto F32 = FieldCtx::parse("2^5/1,0,0,1,0,1");
    auto F64 = FieldCtx::with_default_poly(2, 6);
    auto F64p = FieldCtx::parse("2^6/1,0,1,1,0,1,1");
    auto F81 = FieldCtx::with_default_poly(3, 4);
    auto F3 = FieldCtx::with_default_poly(3, 1);
    auto F4 = FieldCtx::with_default_poly(2, 2);

    auto add = [&](std::string name, FnTable fn) {
        out.push_back({std::move(name), std::move(fn)});
    };

    add("x^3@2^3", monomial_fn(F8, 3));
    add("x^5@2^3", monomial_fn(F8, 5));
    add("x^3+x^5@2^3", eval_to_table(parse_poly("x^3+x^5", *F8), F8));
    add("x^5@3^3", monomial_fn(F27, 5));
    add("x^15@3^3", monomial_fn(F27, 15));
    add("x^21@3^3", monomial_fn(F27, 21));
    add("x^21@3^4", monomial_fn(F81, 21));

    add("gold:k=1@2^5", gold(F32, 1));
    add("gold:k=1@3^3", gold(F27, 1));
    add("cm:k=2@3^3", coulter_matthews(F27, 2));

    // both elements of F_4 \ F_2 inside GF(2^6)
    SubfieldEmbedding emb = subfield_embedding(F64, F4);
    add("do_trace:k=2,a0@2^6", do_trace(F64, 2, emb.up(F4->alpha())));
    add("do_trace:k=2,a1@2^6", do_trace(F64, 2, emb.up(F4->mul(F4->alpha(), F4->alpha()))));

    add("blokhuis_f:k=1,a=g@2^5", blokhuis_f(F32, 1, F32->alpha()));
    add("blokhuis_g:k=2,a=g@2^6", blokhuis_g(F64p, 2, F64p->alpha()));

    for (auto& [m, ctx] : {std::pair{2u, F4}, std::pair{3u, F8}}) {
        FnTable ident = monomial_fn(ctx, 1);
        FnTable frob = monomial_fn(ctx, 2);
        add("mm:id@m=" + std::to_string(m), maiorana_mcfarland(ctx, ident));
        add("mm:frob@m=" + std::to_string(m), maiorana_mcfarland(ctx, frob));
        add("mm:rand@m=" + std::to_string(m),
            maiorana_mcfarland(ctx, shuffled_permutation(ctx, seed + m)));
    }

    for (auto& ctx : {F8, F9, F16})
        for (std::uint32_t k = 0; k < ctx->n(); ++k)
            add("linearized:k=" + std::to_string(k) + "@" + std::to_string(ctx->p()) + "^" +
                    std::to_string(ctx->n()),
                linearized_monomial(ctx, k));

    add("trace_of:x^2@3^2->3^1", trace_of(monomial_fn(F9, 2), F3));
    add("trace_of:x^3@2^4->2^2", trace_of(monomial_fn(F16, 3), F4));
    add("fiber_swap:0,1(trace_of:x^2)@3^2->3^1",
        fiber_swap(trace_of(monomial_fn(F9, 2), F3), 0, 1));

    return out;
}

void append_random_corpus(std::vector<CorpusEntry>& out, FieldRef dom, FieldRef cod,
                          std::uint32_t count, std::uint64_t seed) {
    for (std::uint32_t i = 0; i < count; ++i) {
        std::string name = "rand#" + std::to_string(i) + "@" + std::to_string(dom->p()) + "^" +
                           std::to_string(dom->n()) + "->" + std::to_string(cod->p()) + "^" +
                           std::to_string(cod->n());
        out.push_back({std::move(name), random_fn(dom, cod, seed + i)});
    }
}

std::vector<FieldCombo> small_field_combos(std::uint32_t max_q) {
    std::vector<FieldCombo> combos;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        std::uint64_t q = p;
        for (std::uint32_t n = 1; q <= max_q; ++n, q *= p) {
            FieldRef dom = FieldCtx::with_default_poly(p, n);
            for (std::uint32_t m = 1; m <= n; ++m) {
                if (n % m) continue;
                FieldRef cod = (m == n) ? dom : FieldCtx::with_default_poly(p, m);
                combos.push_back({dom, cod});
            }
        }
    }
    return combos;
}

}  // namespace cdbent
