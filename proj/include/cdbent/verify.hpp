#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cdbent/analysis.hpp"
#include "cdbent/corpus.hpp"

namespace cdbent {

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::uint64_t cases = 0;
    std::string detail;  // first counterexample, empty when green
};

/// Fourier-pair identities on seeded random (F,G,c) triples over
/// GF(4)->GF(4), GF(8)->GF(8), GF(8)->GF(2), GF(9)->GF(9), GF(9)->GF(3).
SuiteResult suite_lemma1(std::uint64_t seed, std::uint32_t triples_per_pair, unsigned workers);
SuiteResult suite_lemma2(std::uint64_t seed, std::uint32_t triples_per_pair, unsigned workers);

/// perfect1(definition) == bent1(definition) == bent1-by-balance for every
/// c != 1 over the family corpus plus seeded randoms per small field combo.
SuiteResult suite_equiv1(std::uint64_t seed, std::uint32_t randoms_per_combo, unsigned workers);
/// perfect2(definition) == bent2 == perfect2-by-profile, same corpus.
SuiteResult suite_equiv2(std::uint64_t seed, std::uint32_t randoms_per_combo, unsigned workers);
/// The counting leg only: perfect2(definition) == perfect2-by-profile.
SuiteResult suite_profiles(std::uint64_t seed, std::uint32_t randoms_per_combo, unsigned workers);

/// Maiorana-McFarland non-bentness for every c != 1, m in {2,3},
/// pi in {identity, Frobenius, seeded random permutation}.
SuiteResult suite_mm(std::uint64_t seed);

/// Gold / Coulter-Matthews corollary branches against the gcd criterion.
SuiteResult suite_gold();

/// do_theorem_check consistency over the DO corpus, every c in the codomain.
SuiteResult suite_do(unsigned workers);

/// Dispatch by name: lemma1|lemma2|equiv1|equiv2|mm|gold|do|profiles.
SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::uint32_t count,
                      unsigned workers);

}  // namespace cdbent
