#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cdbent/error.hpp"

namespace cdbent {

/// Canonical element index: the coefficient vector (a_0,...,a_{n-1}) of the
/// polynomial-basis expansion packed as sum a_i p^i. Index 0 is the additive
/// identity, index 1 the multiplicative identity.
using elem_t = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 0;                 // prime modulus
    std::uint32_t n = 0;                 // extension degree >= 1
    std::vector<std::uint32_t> poly;     // c_0..c_n low-to-high, monic, primitive

    bool operator==(const FieldSpec&) const = default;
};

class FieldCtx;
using FieldRef = std::shared_ptr<const FieldCtx>;

/// Immutable context for GF(p^n): Zech/antilog multiplication tables plus a
/// per-element absolute trace table. Safe to share across threads; all
/// operations are pure.
class FieldCtx {
public:
    static constexpr std::uint64_t default_max_elems = std::uint64_t{1} << 20;

    /// Builds a context from an explicit spec. Rejects composite p (NotPrime),
    /// fields above max_elems (TooLarge) and any defining polynomial whose
    /// root fails to generate the full multiplicative group (NotPrimitivePoly;
    /// this subsumes reducibility).
    static FieldRef create(FieldSpec spec, std::uint64_t max_elems = default_max_elems);

    /// Built-in primitive polynomial, p in {2,3,5,7}, n <= 12, p^n <= 2^20.
    static FieldRef with_default_poly(std::uint32_t p, std::uint32_t n,
                                      std::uint64_t max_elems = default_max_elems);

    /// Field spec string: "p^n" (built-in polynomial) or
    /// "p^n/c_n,...,c_1,c_0" with coefficients high-to-low,
    /// e.g. "2^5/1,0,0,1,0,1" for x^5+x^2+1.
    static FieldRef parse(std::string_view text, std::uint64_t max_elems = default_max_elems);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint32_t p() const noexcept { return spec_.p; }
    std::uint32_t n() const noexcept { return spec_.n; }
    std::uint32_t q() const noexcept { return q_; }

    elem_t add(elem_t x, elem_t y) const {
        if (spec_.p == 2) return x ^ y;
        return add_digits(x, y);
    }
    elem_t neg(elem_t x) const {
        if (spec_.p == 2) return x;
        return neg_digits(x);
    }
    elem_t sub(elem_t x, elem_t y) const { return add(x, neg(y)); }

    elem_t mul(elem_t x, elem_t y) const {
        if (x == 0 || y == 0) return 0;
        return antilog_[mod_order(log_[x] + log_[y])];
    }
    elem_t inv(elem_t x) const {
        if (x == 0) fail(errc::division_by_zero, "inverse of 0");
        return antilog_[mod_order(order() - log_[x])];
    }
    /// x^e with 0^0 = 1; exponents reduced mod p^n - 1 for nonzero x.
    elem_t pow(elem_t x, std::uint64_t e) const {
        if (x == 0) return e == 0 ? 1 : 0;
        return antilog_[static_cast<std::uint32_t>((std::uint64_t(log_[x]) * (e % order())) % order())];
    }

    /// Absolute trace Tr_n(x) = sum_{i<n} x^{p^i}, valued in Z_p.
    std::uint32_t abs_trace(elem_t x) const { return trace_[x]; }

    /// alpha^t; t taken mod p^n - 1.
    elem_t from_log(std::uint64_t t) const { return antilog_[t % order()]; }
    /// discrete log base alpha; DivisionByZero on 0.
    std::uint32_t log(elem_t x) const {
        if (x == 0) fail(errc::division_by_zero, "log of 0");
        return log_[x];
    }
    elem_t alpha() const { return antilog_[order() > 1 ? 1 : 0]; }
    std::uint32_t order() const noexcept { return q_ - 1; }

    bool same_field(const FieldCtx& other) const { return spec_ == other.spec_; }

    /// "2^5/1,0,0,1,0,1" form (round-trips through parse()).
    std::string spec_string() const;
    /// Human-readable polynomial for an element, e.g. "g^3+g+1".
    std::string elem_string(elem_t x) const;
    /// Defining polynomial as text, e.g. "x^5+x^2+1".
    std::string poly_string() const;

private:
    FieldCtx() = default;

    std::uint32_t mod_order(std::uint32_t t) const { return t >= order() ? t - order() : t; }
    elem_t add_digits(elem_t x, elem_t y) const;
    elem_t neg_digits(elem_t x) const;

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<elem_t> antilog_;        // t -> alpha^t, size q-1
    std::vector<std::uint32_t> log_;     // inverse table, log_[0] unused
    std::vector<std::uint32_t> trace_;   // absolute trace per element
};

/// Ring embedding of GF(p^m) into GF(p^n), m | n, sending the subfield's
/// primitive element to alpha^{(p^n-1)/(p^m-1)}. The additive homomorphism
/// property is verified exhaustively at construction; if the subfield's
/// defining polynomial does not annihilate that image the construction throws
/// EmbeddingInconsistent.
struct SubfieldEmbedding {
    FieldRef big;
    FieldRef sub;
    std::vector<elem_t> to_big;            // indexed by subfield element
    std::vector<std::int64_t> from_big;    // -1 where not in the image

    elem_t up(elem_t x) const { return to_big[x]; }
    elem_t down(elem_t y) const {
        if (from_big[y] < 0) fail(errc::embedding_inconsistent, "element not in subfield image");
        return static_cast<elem_t>(from_big[y]);
    }
    bool in_image(elem_t y) const { return from_big[y] >= 0; }
};

SubfieldEmbedding subfield_embedding(FieldRef big, FieldRef sub);

/// Tr_{p^n/p^m}(x) = sum_{i<n/m} x^{p^{mi}}, result in subfield coordinates.
elem_t rel_trace(const SubfieldEmbedding& emb, elem_t x);

/// Same sum left inside the big field (the value is a fixed point of
/// Frobenius^m); used where no subfield context is wanted.
elem_t rel_trace_in_big(const FieldCtx& big, std::uint32_t m, elem_t x);

/// sigma(a_0 + a_1 alpha + ... + a_{m-1} alpha^{m-1}) = a_0 + a_1 p + ... ;
/// under the packed-index encoding this is the index itself. Kept as a named
/// operation because second-kind predicates are defined through it.
inline std::uint32_t sigma(const FieldCtx& ctxm, elem_t y) {
    (void)ctxm;
    return y;
}

/// Description of the basis sigma is taken over, surfaced in reports.
std::string sigma_basis_string(const FieldCtx& ctxm);

bool is_prime(std::uint64_t v);

}  // namespace cdbent
