#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdbent/spectra.hpp"

namespace cdbent {

struct DdtTable {
    FieldRef dom, cod;
    elem_t c = 0;
    std::vector<std::uint32_t> counts;  // row-major over (a, b)

    std::uint32_t at(elem_t a, elem_t b) const { return counts[std::size_t(a) * cod->q() + b]; }
};

DdtTable c_ddt(const FnTable& f, elem_t c);

/// max over the legal region: a != 0 is required only when c = 1.
std::uint32_t c_uniformity(const DdtTable& t);
std::uint32_t c_uniformity(const FnTable& f, elem_t c);

/// delta = 1 / delta = 2. For dom = cod the PcN verdict is cross-checked
/// against the per-derivative permutation formulation.
bool is_pcn(const FnTable& f, elem_t c);
bool is_apcn(const FnTable& f, elem_t c);

enum class Method { automatic, definition, balance, profile };
const char* method_name(Method m);

/// First failing site of a predicate; unused slots stay -1.
struct Witness {
    std::int64_t u = -1, b = -1, x = -1, a = -1;
    std::int64_t count = -1;
};

struct Verdict {
    bool value = false;
    Method method = Method::definition;
    std::optional<Witness> witness;  // present iff value is false

    explicit operator bool() const { return value; }
};

/// Non-strict: the (u,b) autocorrelations vanish for u != 0, b != 0; strict
/// additionally includes u = 0. Methods: balance (default; fiber counting on
/// the traced differentials) or definition (exact cyclotomic sums). Both are
/// sound for every c.
Verdict is_perfect1(const FnTable& f, elem_t c, bool strict = false,
                    Method m = Method::automatic);

/// W_F(x,b) conj(W_F(x,bc)) = C(0,b) for all x and b != 0, exact. The
/// automatic method uses the counting route for c != 1 (where it provably
/// agrees) and the definitional product check at c = 1.
Verdict is_bent1(const FnTable& f, elem_t c, Method m = Method::automatic);

/// Counting-only route: every traced differential x -> Tr_m(b(F(x+u)-cF(x)))
/// hits each value of Z_p exactly p^{n-1} times, for u != 0, b != 0.
Verdict is_bent1_by_balance(const FnTable& f, elem_t c);

/// Second-kind correlations (field-difference exponent) vanish for u != 0
/// (strict adds u = 0). Methods: profile (default) or definition.
Verdict is_perfect2(const FnTable& f, elem_t c, bool strict = false,
                    Method m = Method::automatic);

/// walsh2(F,x) conj(walsh2(cF,x)) = xcorr2(F,F,c,0) for all x; always
/// evaluated definitionally (no counting shortcut is sound here).
Verdict is_bent2(const FnTable& f, elem_t c);

struct SupportProfile2 {
    elem_t c = 0, u = 0;
    std::vector<std::uint32_t> counts;  // counts[j] = |{x : sigma(F(x+u)-cF(x)) = j}|
};
SupportProfile2 support_profile2(const FnTable& f, elem_t c, elem_t u);

/// true iff |S_{j+p^{m-1} l}| = |S_{j+p^{m-1}(p-1)}| for all u != 0,
/// j < p^{m-1}, l < p.
Verdict perfect2_by_profile(const FnTable& f, elem_t c);

struct ZeroCReport {
    bool bent1_at_zero = false;
    bool walsh1_row0_vanishes = false;   // W(0,b) = 0 for all b != 0
    std::optional<bool> permutation;     // only when m = n
    bool bent2_at_zero = false;
    bool walsh2_at_zero_is_zero = false;
    bool consistent = false;
};
/// Evaluates all c = 0 characterizations and their mutual consistency.
ZeroCReport zero_c_characterization(const FnTable& f);

/// Coefficients of F(x) = sum a_ij x^{p^i+p^j}, normalized upper-triangular
/// (only i <= j populated). Recovered from the table by interpolation; the
/// reconstructed table is verified against the input.
struct DoForm {
    FieldRef ctx;
    std::vector<elem_t> a;  // n*n row-major

    elem_t at(std::uint32_t i, std::uint32_t j) const { return a[std::size_t(i) * ctx->n() + j]; }
};
DoForm do_decompose(const FnTable& f);
FnTable do_form_table(const DoForm& d);

/// A_i = sum_k u^{p^k}(a_ik + a_ki) and the linearized companion
/// L_u(b) = A_{n-1} b + A_{n-2}^p b^p + ... + A_0^{p^{n-1}} b^{p^{n-1}}.
struct DoCompanion {
    FieldRef ctx;
    elem_t u = 0;
    std::vector<elem_t> coeffs;  // A_0..A_{n-1}

    elem_t eval(elem_t b) const;
};
DoCompanion do_companion(const DoForm& d, elem_t u);

struct DoTheoremReport {
    elem_t c = 0;
    bool hyp1_applicable = false;  // the Omega sets degenerate at c = 1
    bool hyp1_fired = false;
    std::optional<Witness> hyp1_witness;
    bool cond2_all = false;  // every (u,b) in (F*)^2 certified by a branch
    std::uint64_t cond2_branch_a = 0, cond2_branch_b = 0;
    std::optional<Witness> cond2_first_failure;
    bool bent1_direct = false;
    bool consistent = false;
};

/// Evaluates the non-bentness hypothesis (kernel vector of the companion plus
/// a small nonzero-trace support) and, per (u,b), the two certification
/// branches with exact character sums; asserts the implied conclusions against
/// the direct bent verdict.
DoTheoremReport do_theorem_check(const FnTable& f, elem_t c);

struct AnalysisReport {
    elem_t c = 0;
    std::uint32_t delta = 0;
    bool pcn = false, apcn = false;
    std::optional<Witness> delta_witness;  // an (a,b) attaining delta, when delta > 1
    Verdict perfect1, strict_perfect1, bent1, bent1_balance, perfect2, strict_perfect2, bent2;
    std::vector<std::string> notes;
};
AnalysisReport analyze(const FnTable& f, elem_t c, Method m = Method::automatic);

std::vector<std::string> predicate_notes(const FnTable& f, elem_t c, bool second_kind);

}  // namespace cdbent
