#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cdbent/fnrep.hpp"

namespace cdbent {

FnTable monomial_fn(FieldRef ctx, std::uint64_t d);

/// x^{p^k+1}, 1 <= k < n.
FnTable gold(FieldRef ctx, std::uint32_t k);

/// x^{(3^k+1)/2}; p = 3 only.
FnTable coulter_matthews(FieldRef ctx, std::uint32_t k);
std::uint64_t coulter_matthews_exponent(std::uint32_t k);

/// F(x) = x (Tr_{n/k}(x) + a x) on GF(2^n); requires k | n, k >= 2, n/k odd,
/// and a in F_{2^k} \ F_2 (checked through the Frobenius fixed-point test).
/// Construction asserts Tr_{n/k}(F(x)) = (1+a) Tr_{n/k}(x)^2 for every x.
FnTable do_trace(FieldRef ctx, std::uint32_t k, elem_t a);

/// F_a(x) = x^{2^k+1} + a x^{2^{n-k}+1}, d = gcd(n,k); requires p = 2, n/d
/// odd and log(a) not a multiple of 2^d - 1. For d = 1 that exclusion would
/// empty the parameter space, so only a in {0,1} is rejected there; the
/// stronger properties are left to the predicates.
FnTable blokhuis_f(FieldRef ctx, std::uint32_t k, elem_t a);

/// G_a(x) = x^{2^{2k}+1} + a^{2^k+1} x^{2^k+1} + a x^2, n = 3k; requires
/// p = 2 and log(a) not a multiple of 2^k - 1.
FnTable blokhuis_g(FieldRef ctx, std::uint32_t k, elem_t a);

/// F(x,y) = x pi(y) as a (2m,m)-function; the domain is GF(2^{2m}) with the
/// pairing (x,y) -> idx(x) 2^m + idx(y) (recorded in reports). pi must be a
/// permutation of GF(2^m).
FnTable maiorana_mcfarland(FieldRef ctx_m, const FnTable& pi);
std::string mm_pairing_note(const FieldCtx& ctx_m);

/// F = Tr_{n/m} o G, m | n, m < n.
FnTable trace_of(const FnTable& g, FieldRef sub);

/// Exchanges the output values alpha^i and alpha^j everywhere they occur.
FnTable fiber_swap(const FnTable& f, std::uint32_t i, std::uint32_t j);

/// L(x) = sum c_i x^{p^i}; additivity is asserted at construction
/// (exhaustively for q <= 4096, on a deterministic sample above that).
FnTable linearized_poly(FieldRef ctx, const std::vector<elem_t>& coeffs);
FnTable linearized_monomial(FieldRef ctx, std::uint32_t k);

/// Family spec strings: "gold:k=1", "monomial:d=21", "coulter_matthews:k=2",
/// "do_trace:k=2,a=g^21", "blokhuis_f:k=1,a=g", "blokhuis_g:k=2,a=g",
/// "mm:pi=x^2", "trace_of:sub=2^2,inner=x^3",
/// "fiber_swap:i=1,j=2,inner=(trace_of:sub=2^2,inner=x^3)",
/// "linearized_monomial:k=1", "linearized_poly:coeffs=1;0;g^2".
/// For "mm" the supplied field is the codomain GF(2^m); for every other
/// family it is the domain.
FnTable family_from_spec(std::string_view spec, FieldRef ctx);

}  // namespace cdbent
