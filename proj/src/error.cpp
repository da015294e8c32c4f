#include "cdbent/error.hpp"

namespace cdbent {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_prime: return "NotPrime";
        case errc::not_primitive_poly: return "NotPrimitivePoly";
        case errc::too_large: return "TooLarge";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::embedding_inconsistent: return "EmbeddingInconsistent";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::syntax_error: return "SyntaxError";
        case errc::exponent_too_large: return "ExponentTooLarge";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::domain_mismatch: return "DomainMismatch";
        case errc::not_permutation: return "NotPermutation";
        case errc::not_do_polynomial: return "NotDoPolynomial";
        case errc::bad_param: return "BadParam";
    }
    return "UnknownError";
}

}  // namespace cdbent
