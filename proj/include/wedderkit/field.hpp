#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedderkit/cyclotomic.hpp"
#include "wedderkit/errors.hpp"

namespace wk {

// Abelian number field F, presented as the fixed field inside Q(zeta_m)
// of a subgroup H of U(Z/mZ).  m = 1 (or a full subgroup) represents Q.
class AbelianField {
public:
    static AbelianField rationals();
    static AbelianField cyclotomic(int m);
    // Fixed field of the subgroup generated by the given unit residues.
    static AbelianField fixed_field(int m, const std::vector<long>& gens);

    int modulus() const { return m_; }
    // Sorted elements of the fixing subgroup H.
    const std::vector<long>& fixing_subgroup() const { return elems_; }
    bool is_rational_field() const;
    long degree() const;  // [F : Q]

    // Membership test for a cyclotomic number whose level is a multiple
    // of the modulus.
    bool contains(const CycloNumber& v) const;

    std::string to_string() const;

    bool operator==(const AbelianField& o) const { return m_ == o.m_ && elems_ == o.elems_; }
    bool operator!=(const AbelianField& o) const { return !(*this == o); }

private:
    AbelianField(int m, std::vector<long> elems) : m_(m), elems_(std::move(elems)) {}

    int m_;
    std::vector<long> elems_;
};

// Image I_k(F) of Gal(F(zeta_k)/F) in U(Z/kZ).
struct GaloisImage {
    int modulus = 1;
    std::vector<long> residues;  // sorted

    long size() const { return static_cast<long>(residues.size()); }
    bool contains(long t) const;
};

GaloisImage galois_image(const AbelianField& F, int k);

// Trace of zeta_k^i from F(zeta_k) down to F, represented in
// Q(zeta_lcm(k, m)).
CycloNumber trace_to_F(const AbelianField& F, int k, long i);

// (number of real embeddings, number of conjugate pairs).
std::pair<long, long> signature(const AbelianField& F);

// Degree over Q of the intersection of F with the fixed field
// Q(zeta_k)^A, where A is given by unit residues mod k.
long intersect_with_cyclotomic_degree(const AbelianField& F, int k,
                                      const std::vector<long>& A);

// Grammar: "Q" | "Q(zeta_m)" | "Q(zeta_m)^{t1,t2,...}".
AbelianField parse_field(const std::string& spec);

}  // namespace wk
