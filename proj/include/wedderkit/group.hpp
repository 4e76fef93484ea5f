#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedderkit/errors.hpp"

namespace wk {

using Elt = int;

// Finite group given by its full multiplication table.  Element 0 is the
// identity.  Construction validates the table (closure, associativity,
// inverses), so downstream code can rely on group axioms holding.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> mult,
                                  std::vector<std::string> labels = {});

    // Closure of permutation generators on points 0..d-1, each given as an
    // image vector.  Elements are indexed in BFS word order starting from
    // the identity.  Throws OrderBoundExceeded past max_order.
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gens,
                                         int max_order = 256);

    // <a, b | a^m = 1, b^n = a^t, b^-1 a b = a^r>, with r^n = 1 (mod m)
    // and t(r-1) = 0 (mod m).  Element a^i b^j has index j*m + i.
    static FiniteGroup metacyclic(int m, int n, int t, int r);

    // Direct product of cyclic groups of the given orders.  Tuples are
    // indexed mixed-radix with the first coordinate varying fastest.
    static FiniteGroup abelian(const std::vector<int>& invariants);

    // Tuples (a, b) with index a + |A|*b.
    static FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

    int order() const { return n_; }
    Elt mul(Elt a, Elt b) const { return mult_[a * n_ + b]; }
    Elt inv(Elt a) const { return inv_[a]; }
    // Conjugate g^x = x^-1 g x.
    Elt conj(Elt g, Elt x) const { return mul(mul(inv(x), g), x); }
    // Commutator [a, b] = a^-1 b^-1 a b.
    Elt comm(Elt a, Elt b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    Elt power(Elt a, long e) const;

    int element_order(Elt a) const;
    int exponent() const;

    const std::vector<Elt>& generators() const { return gens_; }
    std::string label(Elt a) const;
    const std::vector<int>& flat_table() const { return mult_; }

    // True when the two objects describe the same table (not just the
    // same isomorphism type); used to detect operand mix-ups.
    bool same_as(const FiniteGroup& other) const {
        return this == &other || mult_ == other.mult_;
    }

private:
    FiniteGroup() = default;
    void finish_init();

    int n_ = 0;
    std::vector<int> mult_;  // row-major n x n
    std::vector<Elt> inv_;
    std::vector<Elt> gens_;
    std::vector<std::string> labels_;
};

// Subgroup as a sorted element list plus a membership bitmask.  Carries no
// reference to its group; every operation takes the group explicitly.
struct Subgroup {
    std::vector<Elt> elems;        // sorted ascending
    std::vector<std::uint64_t> mask;
    std::vector<Elt> gens;         // optional generating set, may be empty

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(Elt g) const {
        return (mask[static_cast<std::size_t>(g) >> 6] >> (g & 63)) & 1u;
    }
    bool operator==(const Subgroup& other) const { return mask == other.mask; }
    bool operator!=(const Subgroup& other) const { return mask != other.mask; }
};

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Elt> elems);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
Subgroup closure(const FiniteGroup& G, const std::vector<Elt>& seeds);
Subgroup cyclic_subgroup(const FiniteGroup& G, Elt g);

bool subset(const Subgroup& A, const Subgroup& B);
Subgroup intersect(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& S, Elt x);

// All subgroups, sorted by (order, element list).  Layered cyclic-join
// enumeration; results are memoized per group table.
const std::vector<Subgroup>& all_subgroups(const FiniteGroup& G, int max_group_order = 256);

Subgroup normalizer(const FiniteGroup& G, const Subgroup& S);
Subgroup centralizer_elt(const FiniteGroup& G, Elt x);
bool is_normal_in(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);

// [H, g] = <h^-1 g^-1 h g : h in H>.
Subgroup commutator_closure(const FiniteGroup& G, const Subgroup& H, Elt g);

struct Quotient {
    FiniteGroup group;
    std::vector<Elt> proj;  // element of G -> coset index
    std::vector<Elt> reps;  // coset index -> least element of the coset
};

// Cosets are indexed by their least element, ascending, so the identity
// coset is index 0.  Throws NotNormal when N is not normal in G.
Quotient quotient(const FiniteGroup& G, const Subgroup& N);

struct SubgroupGroup {
    FiniteGroup group;
    std::vector<Elt> to_parent;   // index in the subgroup -> element of G
    std::vector<int> from_parent; // element of G -> index, or -1 outside S
};

// S as a group in its own right, elements reindexed 0..|S|-1 in ascending
// parent order (so the identity stays at 0).
SubgroupGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S);

// Classes sorted by least member; members sorted ascending.
std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroup& G);

// Subgroups M with N < M <= G, M normal in G, minimal with respect to
// inclusion among those.
std::vector<Subgroup> minimal_normal_subgroups_above(const FiniteGroup& G, const Subgroup& N);

std::vector<Elt> small_generating_set(const FiniteGroup& G, const Subgroup& S);

}  // namespace wk
