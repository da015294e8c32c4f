#pragma once

#include <cstdint>
#include <vector>

#include "cdbent/cyclo.hpp"
#include "cdbent/fnrep.hpp"

namespace cdbent {

/// Materializing full spectra is bounded by p^{n+m} <= 2^22 output slots.
constexpr std::uint64_t spectrum_slot_bound = std::uint64_t{1} << 22;

/// W_F(a,b) = sum_x zeta_p^{Tr_m(b F(x)) - Tr_n(a x)}, exact over Z[zeta_p].
CycInt walsh1(const FnTable& f, elem_t a, elem_t b);

/// First-kind c-crosscorrelation
/// sum_x zeta_p^{Tr_m(b (F(x+u) - c G(x)))}. At b = 0 this is p^n for any
/// inputs; predicates exclude b = 0, the raw operation does not.
CycInt xcorr1(const FnTable& f, const FnTable& g, elem_t c, elem_t u, elem_t b);

/// Semi-vectorial transform W_F(a) = sum_x zeta_{p^m}^{sigma F(x)}
/// zeta_p^{-Tr_n(a x)}, exact over Z[zeta_{p^m}]; the zeta_p factor enters as
/// zeta_{p^m}^{p^{m-1}}.
CycInt walsh2(const FnTable& f, elem_t a);

/// Second-kind c-crosscorrelation with the exponent sigma(F(x+u) - c G(x)):
/// the difference is taken in the field, then mapped through sigma.
CycInt xcorr2(const FnTable& f, const FnTable& g, elem_t c, elem_t u);

/// Variant with the exponent difference taken in Z_{p^m} instead:
/// sigma(F(x+u)) - sigma(c G(x)) mod p^m. This is the correlation whose
/// Fourier transform is exactly walsh2(F,x) * conj(walsh2(cG,x)); it agrees
/// with xcorr2 when m = 1 or c = 0 but not in general.
CycInt xcorr2_residue(const FnTable& f, const FnTable& g, elem_t c, elem_t u);

struct Spectrum1 {
    FieldRef dom, cod;
    std::vector<CycInt> values;  // row-major over (a, b)

    const CycInt& at(elem_t a, elem_t b) const { return values[std::size_t(a) * cod->q() + b]; }
};

struct Spectrum2 {
    FieldRef dom, cod;
    std::vector<CycInt> values;  // indexed by a
};

/// Full tables, computed by workers writing disjoint slots (0 workers =
/// hardware concurrency). Checked invariants: values[(0,0)] = p^n for the
/// first kind, sum_a values[a] = p^n zeta^{sigma F(0)} for the second.
Spectrum1 full_walsh1(const FnTable& f, unsigned workers = 0);
Spectrum2 full_walsh2(const FnTable& f, unsigned workers = 0);

/// Inputs for the first Fourier-pair check, exposed so tests can corrupt a
/// value and watch the verifier catch it.
struct Lemma1Data {
    FieldRef dom, cod;
    elem_t c;
    // [b][x]: W_F(x,b) and W_G(x,bc); [b][u]: crosscorrelation
    std::vector<std::vector<CycInt>> wf, wg_bc, corr;
};
Lemma1Data lemma1_data(const FnTable& f, const FnTable& g, elem_t c);
bool lemma1_holds(const Lemma1Data& d);
/// Checks both identities, for all b (including 0) and all (x, u), exactly.
bool verify_lemma1(const FnTable& f, const FnTable& g, elem_t c);

struct Lemma2Data {
    FieldRef dom, cod;
    elem_t c;
    std::vector<CycInt> wf, wcg;  // indexed by x; wcg is the spectrum of x -> c G(x)
    std::vector<CycInt> corr;     // indexed by u; Z_{p^m}-difference correlation
};
Lemma2Data lemma2_data(const FnTable& f, const FnTable& g, elem_t c);
bool lemma2_holds(const Lemma2Data& d);
/// Fourier pair of walsh2 spectra with the Z_{p^m}-difference correlation
/// (xcorr2_residue); that is the pairing the transform actually inverts.
bool verify_lemma2(const FnTable& f, const FnTable& g, elem_t c);

}  // namespace cdbent
