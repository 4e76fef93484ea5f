#pragma once

#include <vector>

#include "wedderkit/algebra.hpp"
#include "wedderkit/field.hpp"

namespace wk {

// Section H/K with K normal in H and cyclic quotient, together with a
// fixed generator coset and its discrete-log table.
struct CyclicSection {
    Subgroup H, K;
    Elt gen = 0;            // element of H whose coset generates H/K
    int k = 1;              // [H : K]
    std::vector<int> dlog;  // g in H -> j with gK = gen^j K; -1 outside H
};

// Least element of H whose coset generates H/K, or -1 when H/K is not
// cyclic.  Requires K normal in H.
Elt find_section_generator(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// Throws NotNormal when K is not normal in H, InvalidParameters when the
// quotient is not cyclic.
CyclicSection make_cyclic_section(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// Orbit of faithful-character exponents under I_k(F): a coset of I_k(F)
// in U(Z/kZ), exponents sorted.
struct CyclotomicClass {
    int k = 1;
    std::vector<long> exponents;

    long rep() const { return exponents.front(); }
};

// All orbits, ordered by least exponent.
std::vector<CyclotomicClass> cyclotomic_classes(const AbelianField& F, int k);

// Common cyclotomic level for FG computations: lcm(exponent(G), modulus(F)).
int ambient_level(const FiniteGroup& G, const AbelianField& F);

// Subgroups M with K < M <= H and M/K minimal normal in H/K.
std::vector<Subgroup> minimal_normals_between(const FiniteGroup& G, const Subgroup& H,
                                              const Subgroup& K);

// hat K when H = K, otherwise hat K * prod (1 - hat M) over M/K minimal
// normal in H/K.  Rational coefficients.
AlgebraElement epsilon(const FiniteGroup& G, const Subgroup& H, const Subgroup& K, int level);

// |H|^-1 sum over g in H of (sum of psi(gK) over psi in C) g^-1, the
// idempotent of F H attached to the class C of faithful characters of
// H/K.  Requires k | level.
AlgebraElement epsilon_C(const FiniteGroup& G, const AbelianField& F, const CyclicSection& s,
                         const CyclotomicClass& C, int level);

// Sum of the distinct conjugates a^g, collected by a left-to-right scan
// of the element list.
AlgebraElement sum_distinct_conjugates(const FiniteGroup& G, const AlgebraElement& a);

// e(G,H,K): sum of distinct conjugates of epsilon(H,K).
AlgebraElement e_rational(const FiniteGroup& G, const Subgroup& H, const Subgroup& K, int level);

// e_C(G,H,K): sum of distinct conjugates of epsilon_C(H,K).
AlgebraElement e_class(const FiniteGroup& G, const AbelianField& F, const CyclicSection& s,
                       const CyclotomicClass& C, int level);

bool is_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);
bool is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

// E_F(G, H/K) = {g in N_G(H) cap N_G(K) : g^-1 h g K = h^i K with i in I_k(F)}.
Subgroup stabilizer_EF(const FiniteGroup& G, const AbelianField& F, const CyclicSection& s);

// Same stabilizer with an explicit list of allowed conjugation exponents
// mod k in place of I_k(F).  The list should be multiplicatively closed
// for the result to be a subgroup containing H.
Subgroup stabilizer_with_exponents(const FiniteGroup& G, const CyclicSection& s,
                                   const std::vector<long>& residues);

// Image of N_G(K) in U(Z/kZ) acting on H/K by conjugation; requires H
// normal in N_G(K).
std::vector<long> conjugation_image(const FiniteGroup& G, const CyclicSection& s);

// {g in G : a^g = a}.
Subgroup centralizer_of_element(const FiniteGroup& G, const AlgebraElement& a);

struct PrimitiveIdempotentResult {
    AlgebraElement idempotent;  // scaled sum of conjugates
    Rat coefficient;            // [Cen_G(eps_C) : H] / [F(chi) : F(chi^G)]
    AlgebraElement class_sum;   // e_C(G,H,K)
    long centralizer_index = 1;
    long character_degree_ratio = 1;
};

// Shoda-pair route to a primitive central idempotent of FG.  Throws
// NotAShodaPair when (H,K) fails the induced-irreducibility test.
PrimitiveIdempotentResult primitive_idempotent_from_shoda(const FiniteGroup& G,
                                                          const AbelianField& F,
                                                          const Subgroup& H, const Subgroup& K,
                                                          const CyclotomicClass& C);

// One strong pair representative (field-independent data).
struct StrongPairRecord {
    Subgroup H, K;
    Subgroup N;  // N_G(K)
    CyclicSection section;
    std::vector<long> conj_image;  // image of N in U(Z/kZ)
    AlgebraElement eps_rat;        // epsilon(H,K), level 1
    AlgebraElement e_rat;          // e(G,H,K), level 1
};

struct StrongPairSearch {
    std::vector<StrongPairRecord> pairs;  // one per equivalence class, (K,H) order
    bool complete = false;                // sum of e(G,H,K) equals 1
    AlgebraElement residual;              // 1 - sum, level 1
};

// Equivalence-class representatives of strong pairs, memoized per group
// table.  Does not throw on incomplete covers; check `complete`.
const StrongPairSearch& strong_pair_search(const FiniteGroup& G);

// Same search, but throws NotStronglyMonomialOrIncomplete (with the
// partial pair listing and the residual) unless the cover is complete.
const StrongPairSearch& require_complete_search(const FiniteGroup& G);

// Field-decorated record for one strong pair.
struct ShodaPairRecord {
    Subgroup H, K;
    int k = 1;
    Subgroup N;  // N_G(K)
    Subgroup E;  // E_F(G, H/K)
    CyclicSection section;
    std::vector<long> conj_image;              // U_(H,K)
    std::vector<long> joint_image;             // <I_k(F), U_(H,K)>
    std::vector<CyclotomicClass> classes;      // all of C_F(H/K)
    std::vector<std::size_t> orbit_reps;       // indices into classes, one per component
    AlgebraElement e_rat;                      // level 1
};

// Throws NotStronglyMonomialOrIncomplete when the strong pairs do not
// account for all of FG.
std::vector<ShodaPairRecord> complete_strong_shoda_set(const FiniteGroup& G,
                                                       const AbelianField& F);

}  // namespace wk
