#pragma once

#include <string>
#include <vector>

#include "cdbent/families.hpp"

namespace cdbent {

struct CorpusEntry {
    std::string name;
    FnTable fn;
};

/// Every named family instance exercised by the verification suites: the
/// worked examples plus Gold/Coulter-Matthews, the trace construction, the
/// bilinear families on GF(32)/GF(64), Maiorana-McFarland for m in {2,3} and
/// the linearized monomials.
std::vector<CorpusEntry> family_corpus(std::uint64_t seed = 1);

/// count seeded random (n,m)-functions appended in place.
void append_random_corpus(std::vector<CorpusEntry>& out, FieldRef dom, FieldRef cod,
                          std::uint32_t count, std::uint64_t seed);

struct FieldCombo {
    FieldRef dom;
    FieldRef cod;  // GF(p^m), m | n
};

/// All (GF(p^n), GF(p^m)) pairs with p in {2,3,5,7}, p^n <= max_q, m | n.
std::vector<FieldCombo> small_field_combos(std::uint32_t max_q);

}  // namespace cdbent
