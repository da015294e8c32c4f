#include "cdbent/fnrep.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace cdbent {

void check_shapes_match(const FnTable& f, const FnTable& g) {
    if (!f.dom->same_field(*g.dom) || !f.cod->same_field(*g.cod))
        fail(errc::shape_mismatch, "functions have different (n,m) shapes or contexts");
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view src, const FieldCtx& ctx) : src_(src), ctx_(ctx) {}

    PolyExpr parse() {
        PolyExpr e;
        skip_ws();
        bool neg = eat_sign();  // leading sign allowed for odd p
        append(e, parse_term(), neg);
        skip_ws();
        while (pos_ < src_.size()) {
            neg = eat_sign(/*required=*/true);
            skip_ws();
            append(e, parse_term(), neg);
            skip_ws();
        }
        normalize(e);
        return e;
    }

private:
    bool eat_sign(bool required = false) {
        if (peek() == '+') {
            ++pos_;
            skip_ws();
            return false;
        }
        if (peek() == '-') {
            if (ctx_.p() == 2) fail_at(pos_, "'-' is not allowed in characteristic 2");
            ++pos_;
            skip_ws();
            return true;
        }
        if (required) fail_at(pos_, "expected '+' or '-'");
        return false;
    }

    PolyTerm parse_term() {
        char c = peek();
        if (c == 'x') return {1, parse_factor()};
        if (c != 'g' && !std::isdigit(static_cast<unsigned char>(c)))
            fail_at(pos_, "expected coefficient or 'x'");
        elem_t coef = parse_coef();
        skip_ws();
        if (peek() == '*') {
            ++pos_;
            skip_ws();
            if (peek() != 'x') fail_at(pos_, "expected 'x' after '*'");
            return {coef, parse_factor()};
        }
        return {coef, 0};
    }

    std::uint64_t parse_factor() {
        ++pos_;  // 'x'
        if (peek() == '^') {
            ++pos_;
            return parse_uint();
        }
        return 1;
    }

    elem_t parse_coef() {
        if (peek() == 'g') {
            ++pos_;
            std::uint64_t t = 1;
            if (peek() == '^') {
                ++pos_;
                t = parse_uint();
            }
            return ctx_.from_log(t);
        }
        std::uint64_t k = parse_uint();
        return static_cast<elem_t>(k % ctx_.p());
    }

    std::uint64_t parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(pos_, "expected a number");
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            std::uint64_t d = std::uint64_t(src_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10)
                throw error(errc::exponent_too_large, "numeric literal overflows 64 bits", pos_);
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    void append(PolyExpr& e, PolyTerm t, bool neg) {
        if (neg) t.coef = ctx_.neg(t.coef);
        e.terms.push_back(t);
    }

    void normalize(PolyExpr& e) {
        // merge equal exponents, drop zero coefficients
        PolyExpr out;
        for (const auto& t : e.terms) {
            bool merged = false;
            for (auto& o : out.terms)
                if (o.exp == t.exp) {
                    o.coef = ctx_.add(o.coef, t.coef);
                    merged = true;
                    break;
                }
            if (!merged) out.terms.push_back(t);
        }
        std::erase_if(out.terms, [](const PolyTerm& t) { return t.coef == 0; });
        e = std::move(out);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    std::string_view src_;
    const FieldCtx& ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_poly(std::string_view src, const FieldCtx& ctx) {
    if (src.empty()) fail_at(0, "empty expression");
    return PolyParser(src, ctx).parse();
}

std::string render_poly(const PolyExpr& e, const FieldCtx& ctx) {
    if (e.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : e.terms) {
        if (!first) os << " + ";
        first = false;
        bool need_coef = t.coef != 1 || t.exp == 0;
        if (need_coef) {
            if (t.coef < ctx.p())
                os << t.coef;
            else
                os << "g^" << ctx.log(t.coef);
        }
        if (t.exp > 0) {
            if (need_coef) os << '*';
            os << 'x';
            if (t.exp != 1) os << '^' << t.exp;
        }
    }
    return os.str();
}

elem_t eval_poly(const PolyExpr& e, const FieldCtx& ctx, elem_t x) {
    elem_t acc = 0;
    for (const auto& t : e.terms) acc = ctx.add(acc, ctx.mul(t.coef, ctx.pow(x, t.exp)));
    return acc;
}

FnTable eval_to_table(const PolyExpr& e, FieldRef dom) {
    FnTable f;
    f.dom = dom;
    f.cod = dom;
    f.table.resize(dom->q());
    for (elem_t x = 0; x < dom->q(); ++x) f.table[x] = eval_poly(e, *dom, x);
    return f;
}

FnTable eval_to_table(const PolyExpr& e, FieldRef dom, const SubfieldEmbedding& postmap) {
    if (!postmap.big->same_field(*dom)) fail(errc::degree_mismatch, "postmap is not over the domain field");
    FnTable f;
    f.dom = dom;
    f.cod = postmap.sub;
    f.table.resize(dom->q());
    for (elem_t x = 0; x < dom->q(); ++x) f.table[x] = rel_trace(postmap, eval_poly(e, *dom, x));
    return f;
}

FnTable random_fn(FieldRef dom, FieldRef cod, std::uint64_t seed) {
    if (dom->p() != cod->p()) fail(errc::shape_mismatch, "dom and cod must share the characteristic");
    FnTable f;
    f.dom = dom;
    f.cod = std::move(cod);
    f.table.resize(dom->q());
    // raw engine output mod q: keeps tables identical across platforms
    std::mt19937_64 eng(seed);
    for (auto& v : f.table) v = static_cast<elem_t>(eng() % f.cod->q());
    return f;
}

bool is_permutation(const FnTable& f) {
    if (!f.dom->same_field(*f.cod)) fail(errc::domain_mismatch, "permutation test needs dom = cod");
    std::vector<bool> seen(f.cod->q(), false);
    for (elem_t v : f.table) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

void save_table(std::ostream& os, const FnTable& f) {
    os << f.dom->p() << ' ' << f.dom->n() << ' ' << f.cod->n() << '\n';
    for (std::size_t i = 0; i < f.table.size(); ++i) {
        os << f.table[i];
        os << (((i + 1) % 16 == 0 || i + 1 == f.table.size()) ? '\n' : ' ');
    }
}

FnTable load_table(std::istream& is, FieldRef dom, FieldRef cod) {
    std::uint32_t p = 0, n = 0, m = 0;
    if (!(is >> p >> n >> m)) fail(errc::bad_param, "table file: bad header (want 'p n m')");
    if (p != dom->p() || n != dom->n() || m != cod->n() || cod->p() != p)
        fail(errc::shape_mismatch, "table header does not match the supplied contexts");
    FnTable f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.table.resize(f.dom->q());
    for (auto& v : f.table) {
        if (!(is >> v)) fail(errc::bad_param, "table file: too few entries");
        if (v >= f.cod->q()) fail(errc::bad_param, "table file: entry out of codomain range");
    }
    return f;
}

}  // namespace cdbent
