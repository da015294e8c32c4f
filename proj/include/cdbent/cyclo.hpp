#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cdbent/error.hpp"

namespace cdbent {

using bigint = boost::multiprecision::cpp_int;

/// Exact element of Z[zeta_N], N = p^k, over the power basis
/// {zeta^0, ..., zeta^{phi(N)-1}} with phi(N) = p^{k-1}(p-1). The basis makes
/// the representation canonical, so equality and the zero test are coefficient
/// comparisons.
class CycInt {
public:
    CycInt() = default;
    CycInt(std::uint32_t root_order, std::uint32_t p);

    static CycInt zero(std::uint32_t root_order, std::uint32_t p) { return CycInt(root_order, p); }
    static CycInt constant(std::uint32_t root_order, std::uint32_t p, bigint v);
    /// zeta_N^j in canonical form (j reduced mod N); exponents in the top
    /// block q = p-1 expand through Phi_{p^k}: zeta^{(p-1)p^{k-1}+r} =
    /// -sum_{i<p-1} zeta^{i p^{k-1}+r}.
    static CycInt root_power(std::uint32_t root_order, std::uint32_t p, std::uint64_t j);
    /// Canonicalizes a full length-N exponent-count vector.
    static CycInt from_redundant(std::uint32_t root_order, std::uint32_t p,
                                 const std::vector<bigint>& counts);
    static CycInt from_redundant(std::uint32_t root_order, std::uint32_t p,
                                 const std::vector<std::int64_t>& counts);

    std::uint32_t root_order() const noexcept { return n_; }
    std::uint32_t prime() const noexcept { return p_; }
    std::uint32_t phi() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
    const std::vector<bigint>& coeffs() const noexcept { return coeffs_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(const bigint& k) const;

    /// Image under zeta -> zeta^{-1}.
    CycInt conj() const;

    /// Substitutes zeta_{p^j} = zeta_{p^m}^{p^{m-j}}; source order must divide
    /// the target order (same p). Ring homomorphism.
    CycInt embed_subroot(std::uint32_t target_order) const;

    bool is_zero() const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    /// Numeric value at zeta = e^{2 pi i / N}; display/cross-check only, never
    /// used in a verdict.
    std::complex<double> approx() const;

    /// "c0 + c1*z + ..." with z = zeta_N.
    std::string str() const;

private:
    void check_same(const CycInt& o) const {
        if (n_ != o.n_ || p_ != o.p_)
            fail(errc::order_mismatch,
                 "Z[zeta_" + std::to_string(n_) + "] vs Z[zeta_" + std::to_string(o.n_) + "]");
    }

    std::uint32_t n_ = 0;  // root order p^k
    std::uint32_t p_ = 0;
    std::vector<bigint> coeffs_;
};

}  // namespace cdbent
