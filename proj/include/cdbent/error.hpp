#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdbent {

enum class errc {
    not_prime,
    not_primitive_poly,
    too_large,
    division_by_zero,
    degree_mismatch,
    embedding_inconsistent,
    order_mismatch,
    syntax_error,
    exponent_too_large,
    shape_mismatch,
    domain_mismatch,
    not_permutation,
    not_do_polynomial,
    bad_param,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    error(errc code, const std::string& msg, std::size_t offset = npos)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          offset_(offset) {}

    errc code() const noexcept { return code_; }
    // byte offset into the source text for syntax_error, npos otherwise
    std::size_t offset() const noexcept { return offset_; }

private:
    errc code_;
    std::size_t offset_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw error(code, msg);
}

[[noreturn]] inline void fail_at(std::size_t offset, const std::string& msg) {
    throw error(errc::syntax_error, msg + " (at byte " + std::to_string(offset) + ")", offset);
}

}  // namespace cdbent
