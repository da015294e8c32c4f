#include "cdbent/families.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cdbent {
namespace {

std::uint64_t ipow64(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void require(bool ok, const std::string& hypothesis) {
    if (!ok) fail(errc::bad_param, "family hypothesis violated: " + hypothesis);
}

}  // namespace

FnTable monomial_fn(FieldRef ctx, std::uint64_t d) {
    FnTable f;
    f.dom = ctx;
    f.cod = ctx;
    f.table.resize(ctx->q());
    for (elem_t x = 0; x < ctx->q(); ++x) f.table[x] = ctx->pow(x, d);
    return f;
}

FnTable gold(FieldRef ctx, std::uint32_t k) {
    require(k >= 1 && k < ctx->n(), "1 <= k < n");
    const std::uint64_t e = ipow64(ctx->p(), k) + 1;
    return monomial_fn(std::move(ctx), e);
}

std::uint64_t coulter_matthews_exponent(std::uint32_t k) { return (ipow64(3, k) + 1) / 2; }

FnTable coulter_matthews(FieldRef ctx, std::uint32_t k) {
    require(ctx->p() == 3, "p = 3");
    require(k >= 1, "k >= 1");
    return monomial_fn(std::move(ctx), coulter_matthews_exponent(k));
}

FnTable do_trace(FieldRef ctx, std::uint32_t k, elem_t a) {
    require(ctx->p() == 2, "p = 2");
    require(k >= 2, "k >= 2");
    require(ctx->n() % k == 0, "k divides n");
    require((ctx->n() / k) % 2 == 1, "n/k odd");
    const std::uint64_t pk = ipow64(2, k);
    require(a < ctx->q() && ctx->pow(a, pk) == a, "a lies in F_{2^k}");
    require(a != 0 && a != 1, "a outside F_2");

    FnTable f;
    f.dom = ctx;
    f.cod = ctx;
    f.table.resize(ctx->q());
    for (elem_t x = 0; x < ctx->q(); ++x) {
        elem_t t = rel_trace_in_big(*ctx, k, x);
        f.table[x] = ctx->mul(x, ctx->add(t, ctx->mul(a, x)));
    }
    // proof identity for the construction
    const elem_t one_plus_a = ctx->add(1, a);
    for (elem_t x = 0; x < ctx->q(); ++x) {
        elem_t lhs = rel_trace_in_big(*ctx, k, f.table[x]);
        elem_t tr = rel_trace_in_big(*ctx, k, x);
        if (lhs != ctx->mul(one_plus_a, ctx->mul(tr, tr)))
            throw std::logic_error("do_trace trace identity failed");
    }
    return f;
}

namespace {

void check_blokhuis_coset(const FieldCtx& ctx, elem_t a, std::uint32_t d) {
    require(a != 0, "a != 0");
    const std::uint64_t cyc = ipow64(2, d) - 1;
    if (cyc > 1) {
        require(ctx.log(a) % cyc != 0, "a is not a (2^d-1)-th power coset representative");
    } else {
        // the literal coset rule excludes everything when d = 1; reject only
        // the prime-subfield values
        require(a != 1, "a outside F_2");
    }
}

}  // namespace

FnTable blokhuis_f(FieldRef ctx, std::uint32_t k, elem_t a) {
    require(ctx->p() == 2, "p = 2");
    const std::uint32_t n = ctx->n();
    require(k >= 1 && k < n, "1 <= k < n");
    const std::uint32_t d = std::gcd(n, k);
    require((n / d) % 2 == 1, "n/d odd");
    check_blokhuis_coset(*ctx, a, d);

    const std::uint64_t e1 = ipow64(2, k) + 1, e2 = ipow64(2, n - k) + 1;
    FnTable f;
    f.dom = ctx;
    f.cod = ctx;
    f.table.resize(ctx->q());
    for (elem_t x = 0; x < ctx->q(); ++x)
        f.table[x] = ctx->add(ctx->pow(x, e1), ctx->mul(a, ctx->pow(x, e2)));
    return f;
}

FnTable blokhuis_g(FieldRef ctx, std::uint32_t k, elem_t a) {
    require(ctx->p() == 2, "p = 2");
    require(k >= 1 && ctx->n() == 3 * k, "n = 3k");
    check_blokhuis_coset(*ctx, a, k);

    const std::uint64_t e1 = ipow64(2, 2 * k) + 1, e2 = ipow64(2, k) + 1;
    const elem_t a2 = ctx->pow(a, e2);  // a^{2^k+1}
    FnTable f;
    f.dom = ctx;
    f.cod = ctx;
    f.table.resize(ctx->q());
    for (elem_t x = 0; x < ctx->q(); ++x) {
        elem_t v = ctx->pow(x, e1);
        v = ctx->add(v, ctx->mul(a2, ctx->pow(x, e2)));
        v = ctx->add(v, ctx->mul(a, ctx->mul(x, x)));
        f.table[x] = v;
    }
    return f;
}

FnTable maiorana_mcfarland(FieldRef ctx_m, const FnTable& pi) {
    require(ctx_m->p() == 2, "p = 2");
    if (!pi.dom->same_field(*ctx_m) || !pi.cod->same_field(*ctx_m))
        fail(errc::shape_mismatch, "pi must act on the supplied GF(2^m)");
    if (!is_permutation(pi)) fail(errc::not_permutation, "pi is not a permutation");

    FieldRef dom = FieldCtx::with_default_poly(2, 2 * ctx_m->n());
    const std::uint32_t qm = ctx_m->q();
    FnTable f;
    f.dom = std::move(dom);
    f.cod = ctx_m;
    f.table.resize(std::size_t(qm) * qm);
    for (elem_t z = 0; z < f.q_dom(); ++z) {
        elem_t x = z / qm, y = z % qm;
        f.table[z] = ctx_m->mul(x, pi.table[y]);
    }
    return f;
}

std::string mm_pairing_note(const FieldCtx& ctx_m) {
    return "domain pairing (x,y) -> idx(x)*" + std::to_string(ctx_m.q()) + " + idx(y)";
}

FnTable trace_of(const FnTable& g, FieldRef sub) {
    if (!g.dom->same_field(*g.cod)) fail(errc::domain_mismatch, "inner function must be (n,n)");
    if (sub->n() >= g.dom->n()) fail(errc::degree_mismatch, "need m < n");
    SubfieldEmbedding emb = subfield_embedding(g.dom, sub);
    FnTable f;
    f.dom = g.dom;
    f.cod = std::move(sub);
    f.table.resize(g.q_dom());
    for (elem_t x = 0; x < g.q_dom(); ++x) f.table[x] = rel_trace(emb, g.table[x]);
    return f;
}

FnTable fiber_swap(const FnTable& f, std::uint32_t i, std::uint32_t j) {
    if (i == j) fail(errc::bad_param, "fiber swap needs i != j");
    const std::uint32_t ord = f.cod->order();
    if (i >= ord || j >= ord) fail(errc::bad_param, "swap indices must be powers of the generator");
    const elem_t vi = f.cod->from_log(i), vj = f.cod->from_log(j);
    FnTable out = f;
    for (auto& v : out.table) {
        if (v == vi)
            v = vj;
        else if (v == vj)
            v = vi;
    }
    return out;
}

FnTable linearized_poly(FieldRef ctx, const std::vector<elem_t>& coeffs) {
    if (coeffs.size() > ctx->n()) fail(errc::bad_param, "at most n linearized coefficients");
    FnTable f;
    f.dom = ctx;
    f.cod = ctx;
    f.table.assign(ctx->q(), 0);
    std::uint64_t pk = 1;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k])
            for (elem_t x = 0; x < ctx->q(); ++x)
                f.table[x] = ctx->add(f.table[x], ctx->mul(coeffs[k], ctx->pow(x, pk)));
        pk *= ctx->p();
    }
    // additivity check
    const std::uint32_t q = ctx->q();
    if (std::uint64_t(q) * q <= (std::uint64_t(1) << 24)) {
        for (elem_t x = 0; x < q; ++x)
            for (elem_t y = 0; y < q; ++y)
                if (f.table[ctx->add(x, y)] != ctx->add(f.table[x], f.table[y]))
                    throw std::logic_error("linearized table is not additive");
    } else {
        for (std::uint64_t t = 0; t < (std::uint64_t(1) << 22); ++t) {
            elem_t x = static_cast<elem_t>((t * 2654435761u) % q);
            elem_t y = static_cast<elem_t>((t * 40503u + 17) % q);
            if (f.table[ctx->add(x, y)] != ctx->add(f.table[x], f.table[y]))
                throw std::logic_error("linearized table is not additive");
        }
    }
    return f;
}

FnTable linearized_monomial(FieldRef ctx, std::uint32_t k) {
    require(k < ctx->n(), "k < n");
    std::vector<elem_t> coeffs(k + 1, 0);
    coeffs[k] = 1;
    return linearized_poly(std::move(ctx), coeffs);
}

namespace {

struct KvList {
    std::vector<std::pair<std::string, std::string>> items;

    const std::string* find(std::string_view key) const {
        for (const auto& [k, v] : items)
            if (k == key) return &v;
        return nullptr;
    }
    const std::string& get(std::string_view key, std::string_view family) const {
        const std::string* v = find(key);
        if (!v)
            fail(errc::bad_param,
                 "family '" + std::string(family) + "' needs parameter '" + std::string(key) + "'");
        return *v;
    }
};

// name:key=val,key=val; values may be parenthesized to nest a family spec
KvList parse_kv(std::string_view body) {
    KvList kv;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t eq = body.find('=', pos);
        if (eq == std::string_view::npos) fail(errc::bad_param, "family spec: expected key=value");
        std::string key(body.substr(pos, eq - pos));
        std::size_t vstart = eq + 1, vend;
        if (vstart < body.size() && body[vstart] == '(') {
            int depth = 0;
            vend = vstart;
            do {
                if (vend >= body.size()) fail(errc::bad_param, "family spec: unbalanced '('");
                if (body[vend] == '(') ++depth;
                if (body[vend] == ')') --depth;
                ++vend;
            } while (depth > 0);
            kv.items.emplace_back(std::move(key), std::string(body.substr(vstart + 1, vend - vstart - 2)));
            if (vend < body.size() && body[vend] == ',') ++vend;
        } else {
            vend = body.find(',', vstart);
            if (vend == std::string_view::npos) vend = body.size();
            kv.items.emplace_back(std::move(key), std::string(body.substr(vstart, vend - vstart)));
            if (vend < body.size()) ++vend;
        }
        pos = vend;
    }
    return kv;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        fail(errc::bad_param, "family spec: bad integer '" + s + "'");
    return v;
}

// element literal: "g", "g^t", or a decimal canonical index
elem_t parse_elem(const std::string& s, const FieldCtx& ctx) {
    if (!s.empty() && s[0] == 'g') {
        if (s.size() == 1) return ctx.alpha();
        if (s[1] != '^') fail(errc::bad_param, "bad element literal '" + s + "'");
        return ctx.from_log(parse_u64(s.substr(2)));
    }
    std::uint64_t v = parse_u64(s);
    if (v >= ctx.q()) fail(errc::bad_param, "element index " + s + " out of range");
    return static_cast<elem_t>(v);
}

}  // namespace

FnTable family_from_spec(std::string_view spec, FieldRef ctx) {
    std::size_t colon = spec.find(':');
    std::string name(spec.substr(0, colon));
    KvList kv = colon == std::string_view::npos ? KvList{} : parse_kv(spec.substr(colon + 1));

    if (name == "monomial") return monomial_fn(ctx, parse_u64(kv.get("d", name)));
    if (name == "gold") return gold(ctx, static_cast<std::uint32_t>(parse_u64(kv.get("k", name))));
    if (name == "coulter_matthews")
        return coulter_matthews(ctx, static_cast<std::uint32_t>(parse_u64(kv.get("k", name))));
    if (name == "do_trace")
        return do_trace(ctx, static_cast<std::uint32_t>(parse_u64(kv.get("k", name))),
                        parse_elem(kv.get("a", name), *ctx));
    if (name == "blokhuis_f")
        return blokhuis_f(ctx, static_cast<std::uint32_t>(parse_u64(kv.get("k", name))),
                          parse_elem(kv.get("a", name), *ctx));
    if (name == "blokhuis_g")
        return blokhuis_g(ctx, static_cast<std::uint32_t>(parse_u64(kv.get("k", name))),
                          parse_elem(kv.get("a", name), *ctx));
    if (name == "mm") {
        PolyExpr pe = parse_poly(kv.get("pi", name), *ctx);
        return maiorana_mcfarland(ctx, eval_to_table(pe, ctx));
    }
    if (name == "trace_of") {
        FieldRef sub = FieldCtx::parse(kv.get("sub", name));
        const std::string& inner = kv.get("inner", name);
        FnTable g = inner.find(':') != std::string::npos || inner.find('=') != std::string::npos
                        ? family_from_spec(inner, ctx)
                        : eval_to_table(parse_poly(inner, *ctx), ctx);
        return trace_of(g, std::move(sub));
    }
    if (name == "fiber_swap") {
        const std::string& inner = kv.get("inner", name);
        FnTable g = inner.find(':') != std::string::npos || inner.find('=') != std::string::npos
                        ? family_from_spec(inner, ctx)
                        : eval_to_table(parse_poly(inner, *ctx), ctx);
        return fiber_swap(g, static_cast<std::uint32_t>(parse_u64(kv.get("i", name))),
                          static_cast<std::uint32_t>(parse_u64(kv.get("j", name))));
    }
    if (name == "linearized_monomial")
        return linearized_monomial(ctx, static_cast<std::uint32_t>(parse_u64(kv.get("k", name))));
    if (name == "linearized_poly") {
        const std::string& cs = kv.get("coeffs", name);
        std::vector<elem_t> coeffs;
        std::size_t pos = 0;
        while (pos <= cs.size()) {
            std::size_t semi = cs.find(';', pos);
            if (semi == std::string::npos) semi = cs.size();
            coeffs.push_back(parse_elem(cs.substr(pos, semi - pos), *ctx));
            pos = semi + 1;
            if (semi == cs.size()) break;
        }
        return linearized_poly(ctx, coeffs);
    }
    fail(errc::bad_param, "unknown family '" + name + "'");
}

}  // namespace cdbent
