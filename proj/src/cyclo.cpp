#include "cdbent/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cdbent {
namespace {

std::uint32_t phi_of(std::uint32_t n, std::uint32_t p) {
    if (p < 2 || n < p || n % p != 0) fail(errc::bad_param, "root order must be p^k, k >= 1");
    std::uint32_t rest = n;
    while (rest % p == 0) rest /= p;
    if (rest != 1) fail(errc::bad_param, "root order must be a power of p");
    return (n / p) * (p - 1);
}

}  // namespace

CycInt::CycInt(std::uint32_t root_order, std::uint32_t p)
    : n_(root_order), p_(p), coeffs_(phi_of(root_order, p)) {}

CycInt CycInt::constant(std::uint32_t root_order, std::uint32_t p, bigint v) {
    CycInt z(root_order, p);
    z.coeffs_[0] = std::move(v);
    return z;
}

CycInt CycInt::root_power(std::uint32_t root_order, std::uint32_t p, std::uint64_t j) {
    CycInt z(root_order, p);
    const std::uint32_t pk1 = root_order / p;
    const std::uint32_t e = static_cast<std::uint32_t>(j % root_order);
    const std::uint32_t quo = e / pk1, rem = e % pk1;
    if (quo <= p - 2) {
        z.coeffs_[e] = 1;
    } else {
        for (std::uint32_t i = 0; i + 1 < p; ++i) z.coeffs_[i * pk1 + rem] = -1;
    }
    return z;
}

CycInt CycInt::from_redundant(std::uint32_t root_order, std::uint32_t p,
                              const std::vector<bigint>& counts) {
    if (counts.size() != root_order) fail(errc::bad_param, "redundant vector must have length N");
    CycInt z(root_order, p);
    const std::uint32_t pk1 = root_order / p;
    for (std::uint32_t e = 0; e < root_order; ++e) {
        const bigint& v = counts[e];
        if (v == 0) continue;
        const std::uint32_t quo = e / pk1, rem = e % pk1;
        if (quo <= p - 2) {
            z.coeffs_[e] += v;
        } else {
            for (std::uint32_t i = 0; i + 1 < p; ++i) z.coeffs_[i * pk1 + rem] -= v;
        }
    }
    return z;
}

CycInt CycInt::from_redundant(std::uint32_t root_order, std::uint32_t p,
                              const std::vector<std::int64_t>& counts) {
    std::vector<bigint> big(counts.begin(), counts.end());
    return from_redundant(root_order, p, big);
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt z = *this;
    for (auto& c : z.coeffs_) c = -c;
    return z;
}

CycInt CycInt::scaled(const bigint& k) const {
    CycInt z = *this;
    for (auto& c : z.coeffs_) c *= k;
    return z;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same(o);
    std::vector<bigint> red(n_);
    for (std::uint32_t i = 0; i < phi(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::uint32_t j = 0; j < phi(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            std::uint32_t e = i + j;
            if (e >= n_) e -= n_;
            red[e] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return from_redundant(n_, p_, red);
}

CycInt CycInt::conj() const {
    std::vector<bigint> red(n_);
    for (std::uint32_t i = 0; i < phi(); ++i) {
        if (coeffs_[i] == 0) continue;
        red[(n_ - i) % n_] += coeffs_[i];
    }
    return from_redundant(n_, p_, red);
}

CycInt CycInt::embed_subroot(std::uint32_t target_order) const {
    if (target_order == n_) return *this;
    if (target_order < n_ || target_order % n_ != 0)
        fail(errc::order_mismatch, "embedding target order must be a multiple of the source order");
    const std::uint32_t scale = target_order / n_;
    std::vector<bigint> red(target_order);
    for (std::uint32_t i = 0; i < phi(); ++i)
        if (coeffs_[i] != 0) red[std::uint64_t(i) * scale % target_order] += coeffs_[i];
    return from_redundant(target_order, p_, red);
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycInt::operator==(const CycInt& o) const {
    check_same(o);
    return coeffs_ == o.coeffs_;
}

std::complex<double> CycInt::approx() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t i = 0; i < phi(); ++i) {
        if (coeffs_[i] == 0) continue;
        double arg = 2.0 * std::numbers::pi * double(i) / double(n_);
        acc += coeffs_[i].convert_to<double>() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = 0; i < phi(); ++i) {
        if (coeffs_[i] == 0) continue;
        bigint c = coeffs_[i];
        if (first) {
            if (c < 0) { os << '-'; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace cdbent
