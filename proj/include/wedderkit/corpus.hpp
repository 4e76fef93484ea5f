#pragma once

#include <string>
#include <vector>

#include "wedderkit/field.hpp"
#include "wedderkit/group.hpp"

namespace wk {

struct CorpusEntry {
    std::string name;
    FiniteGroup group;
};

// Built-in test battery: cyclic groups C2..C12, the elementary and mixed
// abelian groups C2xC2 and C2xC4, dihedral groups of orders 6..16, the
// quaternion groups Q8 and Q16, C3xQ8, and the split metacyclic groups
// C3:C4 (r = 2) and C7:C3 (r = 2).
const std::vector<CorpusEntry>& builtin_corpus();

// Q, Q(zeta_3), Q(zeta_4), Q(zeta_5), Q(zeta_8), and the real subfield
// of Q(zeta_5).
const std::vector<AbelianField>& standard_fields();

}  // namespace wk
