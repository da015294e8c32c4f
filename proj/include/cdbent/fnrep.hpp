#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdbent/gf.hpp"

namespace cdbent {

/// Lookup-table representation of an (n,m)-function F: GF(p^n) -> GF(p^m).
/// dom and cod share the same characteristic; for m = n they are the same
/// context.
struct FnTable {
    FieldRef dom;
    FieldRef cod;
    std::vector<elem_t> table;  // size dom->q(), entries < cod->q()

    elem_t operator()(elem_t x) const { return table[x]; }
    std::uint32_t q_dom() const { return dom->q(); }
    std::uint32_t q_cod() const { return cod->q(); }
};

void check_shapes_match(const FnTable& f, const FnTable& g);

/// One term of a univariate polynomial expression; the coefficient is resolved
/// in the context the expression was parsed against.
struct PolyTerm {
    elem_t coef;
    std::uint64_t exp;

    bool operator==(const PolyTerm&) const = default;
};

struct PolyExpr {
    std::vector<PolyTerm> terms;  // zero-coefficient terms dropped

    bool operator==(const PolyExpr&) const = default;
};

/// Grammar:
///   poly   := ws term (ws ('+'|'-') ws term)* ws
///   term   := coef (ws '*' ws factor)? | factor
///   factor := 'x' ('^' uint)?
///   coef   := 'g' ('^' uint)? | uint
/// 'g' is the primitive root of ctx; integer literal k resolves to k mod p.
/// '-' is permitted only for odd p (scales the term by p-1).
PolyExpr parse_poly(std::string_view src, const FieldCtx& ctx);

/// Canonical rendering; parse(render(e)) == e.
std::string render_poly(const PolyExpr& e, const FieldCtx& ctx);

elem_t eval_poly(const PolyExpr& e, const FieldCtx& ctx, elem_t x);

/// (n,n) table over dom.
FnTable eval_to_table(const PolyExpr& e, FieldRef dom);
/// (n,m) table: Tr_{n/m} of the evaluation, through the given embedding
/// (postmap.big must be dom).
FnTable eval_to_table(const PolyExpr& e, FieldRef dom, const SubfieldEmbedding& postmap);

/// Deterministic per seed; entries uniform over the codomain.
FnTable random_fn(FieldRef dom, FieldRef cod, std::uint64_t seed);

bool is_permutation(const FnTable& f);

/// Table file format: first line "p n m", then p^n whitespace-separated
/// codomain indices.
void save_table(std::ostream& os, const FnTable& f);
/// Reads and validates against the supplied contexts (polynomials are not
/// stored in the file, so the caller chooses the representation).
FnTable load_table(std::istream& is, FieldRef dom, FieldRef cod);

}  // namespace cdbent
