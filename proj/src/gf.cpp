#include "cdbent/gf.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace cdbent {
namespace {

// Primitive monic polynomials, smallest packed low-coefficient value first,
// coefficients c_0..c_{n-1} (leading 1 implicit). Re-verified at ctx build.
struct DefaultPoly {
    std::uint32_t p, n;
    std::array<std::uint32_t, 12> low;
};

constexpr DefaultPoly kDefaultPolys[] = {
    {2, 1, {1}},
    {2, 2, {1, 1}},
    {2, 3, {1, 1, 0}},
    {2, 4, {1, 1, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0}},
    {2, 6, {1, 1, 0, 0, 0, 0}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0}},
    {3, 1, {1}},
    {3, 2, {2, 1}},
    {3, 3, {1, 2, 0}},
    {3, 4, {2, 1, 0, 0}},
    {3, 5, {1, 2, 0, 0, 0}},
    {3, 6, {2, 1, 0, 0, 0, 0}},
    {3, 7, {1, 2, 1, 0, 0, 0, 0}},
    {3, 8, {2, 0, 0, 1, 0, 0, 0, 0}},
    {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0}},
    {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
    {3, 11, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 12, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0}},
    {5, 1, {2}},
    {5, 2, {2, 1}},
    {5, 3, {2, 3, 0}},
    {5, 4, {2, 2, 1, 0}},
    {5, 5, {2, 4, 0, 0, 0}},
    {5, 6, {2, 1, 0, 0, 0, 0}},
    {5, 7, {2, 3, 0, 0, 0, 0, 0}},
    {5, 8, {3, 2, 1, 0, 0, 0, 0, 0}},
    {7, 1, {2}},
    {7, 2, {3, 1}},
    {7, 3, {2, 3, 0}},
    {7, 4, {5, 3, 1, 0}},
    {7, 5, {4, 1, 0, 0, 0}},
    {7, 6, {5, 1, 3, 0, 0, 0}},
    {7, 7, {2, 6, 0, 0, 0, 0, 0}},
};

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

elem_t FieldCtx::add_digits(elem_t x, elem_t y) const {
    const std::uint32_t p = spec_.p;
    elem_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < spec_.n; ++i) {
        std::uint32_t d = x % p + y % p;
        if (d >= p) d -= p;
        out += d * scale;
        x /= p;
        y /= p;
        scale *= p;
    }
    return out;
}

elem_t FieldCtx::neg_digits(elem_t x) const {
    const std::uint32_t p = spec_.p;
    elem_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < spec_.n; ++i) {
        std::uint32_t d = x % p;
        out += (d ? p - d : 0) * scale;
        x /= p;
        scale *= p;
    }
    return out;
}

FieldRef FieldCtx::create(FieldSpec spec, std::uint64_t max_elems) {
    if (!is_prime(spec.p)) fail(errc::not_prime, "p = " + std::to_string(spec.p));
    if (spec.n < 1) fail(errc::bad_param, "extension degree must be >= 1");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < spec.n; ++i) {
        q64 *= spec.p;
        if (q64 > max_elems)
            fail(errc::too_large, "p^n exceeds the bound " + std::to_string(max_elems));
    }

    if (spec.poly.size() != spec.n + 1 || spec.poly.back() != 1)
        fail(errc::bad_param, "defining polynomial must be monic of degree exactly n");
    for (auto c : spec.poly)
        if (c >= spec.p) fail(errc::bad_param, "polynomial coefficient out of Z_p range");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->spec_ = std::move(spec);
    ctx->q_ = static_cast<std::uint32_t>(q64);
    const std::uint32_t p = ctx->spec_.p, n = ctx->spec_.n, q = ctx->q_;

    // Fill the antilog table by repeated multiplication by alpha on digit
    // vectors; alpha is primitive (and the quotient a field) iff the powers
    // alpha^0..alpha^{q-2} enumerate all q-1 nonzero residues and alpha^{q-1}
    // returns to 1.
    ctx->antilog_.assign(q - 1, 0);
    ctx->log_.assign(q, 0);
    std::vector<std::uint32_t> cur(n, 0);
    cur[0] = 1;
    std::vector<bool> seen(q, false);
    auto pack = [&](const std::vector<std::uint32_t>& d) {
        elem_t v = 0;
        for (std::uint32_t i = n; i-- > 0;) v = v * p + d[i];
        return v;
    };
    for (std::uint32_t t = 0; t < q - 1; ++t) {
        elem_t v = pack(cur);
        if (v == 0 || seen[v])
            fail(errc::not_primitive_poly, ctx->poly_string() + " over Z_" + std::to_string(p));
        seen[v] = true;
        ctx->antilog_[t] = v;
        ctx->log_[v] = t;
        std::uint32_t top = cur[n - 1];
        for (std::uint32_t i = n; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top) {
            for (std::uint32_t i = 0; i < n; ++i)
                cur[i] = (cur[i] + (p - top % p) * ctx->spec_.poly[i]) % p;
        }
    }
    if (pack(cur) != 1)
        fail(errc::not_primitive_poly, ctx->poly_string() + " over Z_" + std::to_string(p));

    ctx->trace_.assign(q, 0);
    for (elem_t x = 0; x < q; ++x) {
        elem_t acc = 0, y = x;
        for (std::uint32_t i = 0; i < n; ++i) {
            acc = ctx->add(acc, y);
            y = ctx->pow(y, p);
        }
        if (acc >= p) fail(errc::not_primitive_poly, "trace fell outside the prime subfield");
        ctx->trace_[x] = acc;
    }
    return ctx;
}

FieldRef FieldCtx::with_default_poly(std::uint32_t p, std::uint32_t n, std::uint64_t max_elems) {
    for (const auto& e : kDefaultPolys) {
        if (e.p == p && e.n == n) {
            FieldSpec spec;
            spec.p = p;
            spec.n = n;
            spec.poly.assign(e.low.begin(), e.low.begin() + n);
            spec.poly.push_back(1);
            return create(std::move(spec), max_elems);
        }
    }
    fail(errc::bad_param,
         "no built-in primitive polynomial for p=" + std::to_string(p) + ", n=" + std::to_string(n) +
             "; supply one explicitly as p^n/c_n,...,c_0");
}

FieldRef FieldCtx::parse(std::string_view text, std::uint64_t max_elems) {
    auto bad = [&](const char* what) {
        fail(errc::bad_param, std::string(what) + " in field spec '" + std::string(text) + "'");
    };
    std::size_t caret = text.find('^');
    if (caret == std::string_view::npos) bad("missing '^'");
    std::uint32_t p = 0, n = 0;
    auto head = text.substr(0, caret);
    if (std::from_chars(head.data(), head.data() + head.size(), p).ptr != head.data() + head.size())
        bad("bad prime");
    std::size_t slash = text.find('/', caret);
    auto deg = text.substr(caret + 1, slash == std::string_view::npos ? std::string_view::npos : slash - caret - 1);
    if (std::from_chars(deg.data(), deg.data() + deg.size(), n).ptr != deg.data() + deg.size())
        bad("bad degree");
    if (slash == std::string_view::npos) return with_default_poly(p, n, max_elems);

    // coefficients listed high-to-low
    std::vector<std::uint32_t> hi;
    std::string_view rest = text.substr(slash + 1);
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        auto tok = rest.substr(0, comma);
        std::uint32_t c = 0;
        if (tok.empty() ||
            std::from_chars(tok.data(), tok.data() + tok.size(), c).ptr != tok.data() + tok.size())
            bad("bad coefficient");
        hi.push_back(c);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (hi.size() != n + 1) bad("coefficient count != n+1");
    FieldSpec spec;
    spec.p = p;
    spec.n = n;
    spec.poly.assign(hi.rbegin(), hi.rend());
    return create(std::move(spec), max_elems);
}

std::string FieldCtx::spec_string() const {
    std::ostringstream os;
    os << spec_.p << '^' << spec_.n << '/';
    for (std::uint32_t i = spec_.n + 1; i-- > 0;) {
        os << spec_.poly[i];
        if (i) os << ',';
    }
    return os.str();
}

std::string FieldCtx::poly_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = spec_.n + 1; i-- > 0;) {
        std::uint32_t c = spec_.poly[i];
        if (!c) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || c > 1) os << c;
        if (i > 0) {
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

std::string FieldCtx::elem_string(elem_t x) const {
    if (x == 0) return "0";
    std::ostringstream os;
    bool first = true;
    elem_t v = x;
    std::vector<std::uint32_t> d(spec_.n);
    for (std::uint32_t i = 0; i < spec_.n; ++i) {
        d[i] = v % spec_.p;
        v /= spec_.p;
    }
    for (std::uint32_t i = spec_.n; i-- > 0;) {
        if (!d[i]) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || d[i] > 1) os << d[i];
        if (i > 0) {
            os << 'g';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::string sigma_basis_string(const FieldCtx& ctxm) {
    return "polynomial basis {1,g,...,g^" + std::to_string(ctxm.n() - 1) + "} with g a root of " +
           ctxm.poly_string();
}

SubfieldEmbedding subfield_embedding(FieldRef big, FieldRef sub) {
    if (big->p() != sub->p()) fail(errc::degree_mismatch, "different characteristic");
    if (sub->n() == 0 || big->n() % sub->n() != 0)
        fail(errc::degree_mismatch,
             "subfield degree " + std::to_string(sub->n()) + " does not divide " + std::to_string(big->n()));

    SubfieldEmbedding emb;
    emb.big = big;
    emb.sub = sub;
    emb.to_big.assign(sub->q(), 0);
    emb.from_big.assign(big->q(), -1);

    const std::uint32_t stride = big->order() / sub->order();
    for (std::uint32_t t = 0; t < sub->order(); ++t)
        emb.to_big[sub->from_log(t)] = big->from_log(std::uint64_t(t) * stride);

    // additive homomorphism must hold for the generator image to be a root of
    // the subfield's defining polynomial; multiplicativity is by construction
    for (elem_t a = 0; a < sub->q(); ++a)
        for (elem_t b = 0; b < sub->q(); ++b)
            if (emb.to_big[sub->add(a, b)] != big->add(emb.to_big[a], emb.to_big[b]))
                fail(errc::embedding_inconsistent,
                     "alpha^" + std::to_string(stride) + " is not a root of " + sub->poly_string());

    for (elem_t a = 0; a < sub->q(); ++a) emb.from_big[emb.to_big[a]] = a;

    // image must be exactly the fixed points of x -> x^{p^m}
    for (elem_t y = 0; y < big->q(); ++y) {
        bool fixed = big->pow(y, ipow(big->p(), sub->n())) == y;
        if (fixed != (emb.from_big[y] >= 0))
            fail(errc::embedding_inconsistent, "image differs from Frobenius fixed points");
    }
    return emb;
}

elem_t rel_trace_in_big(const FieldCtx& big, std::uint32_t m, elem_t x) {
    if (m == 0 || big.n() % m != 0) fail(errc::degree_mismatch, "relative trace degree");
    const std::uint64_t step = ipow(big.p(), m);
    elem_t acc = 0, y = x;
    for (std::uint32_t i = 0; i < big.n() / m; ++i) {
        acc = big.add(acc, y);
        y = big.pow(y, step);
    }
    return acc;
}

elem_t rel_trace(const SubfieldEmbedding& emb, elem_t x) {
    elem_t v = rel_trace_in_big(*emb.big, emb.sub->n(), x);
    return emb.down(v);
}

}  // namespace cdbent
