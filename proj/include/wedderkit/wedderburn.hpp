#pragma once

#include <string>
#include <vector>

#include "wedderkit/shoda.hpp"

namespace wk {

// Center of one simple component: the fixed field F(zeta_k)^A where A is
// the image of the grading action in U(Z/kZ).
struct CenterSpec {
    int k = 1;
    std::vector<long> action_image;  // sorted subgroup of U(Z/kZ)
};

// One simple component of FG, presented as a matrix algebra of the given
// degree over a crossed product of E/H acting on F(zeta_k).
struct ComponentDescriptor {
    Subgroup H, K;               // defining strong pair
    CyclotomicClass class_rep;   // character-class representative
    int matrix_degree = 1;       // [G : E]
    int cyclo_order = 1;         // k = [H : K]
    FiniteGroup grading_group;   // E/H, cosets labelled by least element
    std::vector<Elt> coset_reps; // section E/H -> E used for action/twisting
    std::vector<long> action;    // grading element -> exponent in U(Z/kZ)
    std::vector<std::vector<long>> twisting;  // pair of grading elements -> Z/kZ
    CenterSpec center;
};

struct DecompositionReport {
    AbelianField field;
    std::string group_id;  // hash of the multiplication table
    std::vector<ComponentDescriptor> components;
    long count = 0;        // components.size(), after consistency checks
    long oracle_count = 0; // character-class count, independent route
    bool minimal = false;
};

// Full decomposition of FG for a strongly monomial G.  Verifies that the
// component idempotents sum to one pairwise orthogonally, that the
// F-dimensions add up to |G|, and that three independent component
// counts agree; any mismatch throws VerificationFailed rather than
// producing a silently inconsistent report.
DecompositionReport wedderburn_decomposition(const FiniteGroup& G, const AbelianField& F);

// Descriptor for one character class of one strong pair.  `coset_reps`
// optionally overrides the section E/H -> E (entry x must lie in the
// coset of grading element x); the default picks least elements.  The
// action and twisting tables are validated against the crossed-product
// axioms before returning.
ComponentDescriptor component_descriptor(const FiniteGroup& G, const AbelianField& F,
                                         const ShodaPairRecord& rec, std::size_t class_index,
                                         std::vector<Elt> coset_reps = {});

// Component count contributed by one strong pair, computed two ways.
struct PairComponentCount {
    Subgroup H, K;
    int k = 1;
    long phi_form = 0;     // phi(k)/|I_k(F)| * [E : N] as an exact integer
    long degree_form = 0;  // [Q(zeta_k)^{conjugation image} cap F : Q]
};

struct ComponentCount {
    long total = 0;
    std::vector<PairComponentCount> pairs;
};

// Number of simple components of FG, with the per-pair breakdown.  The
// two formulas are evaluated independently and must agree pair by pair.
ComponentCount component_count(const FiniteGroup& G, const AbelianField& F);

// Independent count of simple components: orbits of conjugacy classes
// under g -> g^t for t in the Galois image of F at the group exponent.
long f_class_count_oracle(const FiniteGroup& G, const AbelianField& F);

// Equivalent pair-local minimality conditions; they must agree.
struct PairMinimality {
    Subgroup H, K;
    int k = 1;
    bool joint_image_full = false;      // <I_k(F), conj image> = U(Z/kZ)
    bool index_product_matches = false; // phi(k) = |I_k(F)| [N : E]
    bool intersection_trivial = false;  // Q(zeta_k)^{N/H} cap F = Q
};

struct MinimalityReport {
    bool minimal = false;              // every pair contributes one component
    bool sufficient_condition = false; // phi(k) = |I_k(F)| for every pair
    bool abelian = false;
    bool abelian_criterion = false;    // I_e(F) = U(Z/eZ) at e = exponent(G)
    std::vector<PairMinimality> pairs;
};

// Whether FG has the least possible number of simple components, i.e.
// the number attained over Q.  Cross-checks the equivalent per-pair
// conditions against each other and against the component counts.
MinimalityReport minimality_report(const FiniteGroup& G, const AbelianField& F);

// Minimality of F<a,b | a^m, b^n = a^t, a^b = a^r> decided by field
// conditions alone, for the two covered presentation shapes.
struct MetacyclicVerdict {
    bool minimal = false;
    bool prime_base_shape = false;   // m prime, m does not divide n, t = 0
    bool faithful_shape = false;     // m, n powers of distinct primes, o_m(r) = n, t = 0
    bool first_condition = false;    // Q(zeta_n) cap F = Q
    bool second_condition = false;   // fixed-field intersection with F is Q
    MinimalityReport general;        // general machinery, for cross-checking
};

// Throws HypothesesNotMet when the parameters fit neither covered shape;
// callers then fall back to minimality_report on the built group.  When
// a shape applies, the field-condition verdict is checked against the
// general machinery and a disagreement throws VerificationFailed.
MetacyclicVerdict metacyclic_minimality(int m, int n, int t, int r, const AbelianField& F);

// Simple components of F_q G for a prime power q coprime to |G|.
struct FiniteFieldPairCount {
    Subgroup H, K;
    int k = 1;
    long order_of_q = 1;  // multiplicative order of q mod k
    long count = 0;       // phi(k)/o_k(q) * [E : N]
};

struct FiniteFieldReport {
    long q = 0;
    long total = 0;
    long oracle = 0;                 // orbits of classes under g -> g^q
    bool minimal = false;            // every pair count is 1
    bool sufficient_condition = false;  // phi(k) = o_k(q) for every pair
    bool abelian = false;
    bool abelian_criterion = false;  // phi(exponent) = order of q mod exponent
    std::vector<FiniteFieldPairCount> pairs;
};

// Component count of F_q G; throws CharacteristicDividesOrder when the
// characteristic of F_q divides |G|, InvalidParameters when q is not a
// prime power.  The total is validated against the class-orbit oracle.
FiniteFieldReport finite_field_component_count(const FiniteGroup& G, long q);

// Same computation viewed as a minimality question (fewest components).
FiniteFieldReport finite_field_minimality(const FiniteGroup& G, long q);

// One summand of the central-unit rank formula.
struct PairRankTerm {
    Subgroup H, K;
    int k = 1;
    int k_pair = 1;  // 1 when h h^n lies in K for some n in N_G(K), else 2
    Rat term;        // phi(k)/|N_G(K)| * (|H|/k_pair - |E|/|I_k(F)|)
};

struct CentralUnitRank {
    long rank = 0;
    long real_embeddings = 0;   // r with [F : Q] = r + 2s
    long complex_pairs = 0;     // s
    long real_class_orbits = 0; // conjugacy classes merged with inverses
    long class_count = 0;
    std::vector<PairRankTerm> pairs;
};

// Rank of the finitely generated group Z(U(RG)) for R the ring of
// integers of F, computed from the strong pair data and cross-checked
// against r * realclasses + s * classes - components.
CentralUnitRank central_unit_rank(const FiniteGroup& G, const AbelianField& F);

// The invariant k_pair above for a single section, generator taken from
// the section (first overload) or supplied explicitly (second; h must
// generate H over K).
int rank_k_invariant(const FiniteGroup& G, const CyclicSection& s);
int rank_k_invariant(const FiniteGroup& G, const Subgroup& H, const Subgroup& K, Elt h);

// FNV-1a hash of the multiplication table, as fixed-width hex.
std::string group_table_hash(const FiniteGroup& G);

}  // namespace wk
