#pragma once

#include <map>
#include <string>
#include <vector>

#include "wedderkit/cyclotomic.hpp"
#include "wedderkit/group.hpp"

namespace wk {

// Element of the group algebra over Q(zeta_level) with the group as basis.
// Coefficients are stored sparsely; zero coefficients are never kept.
// Operands must agree on both the group table and the level.
class AlgebraElement {
public:
    static AlgebraElement zero(const FiniteGroup& G, int level);
    static AlgebraElement one(const FiniteGroup& G, int level);
    static AlgebraElement basis(const FiniteGroup& G, int level, Elt g);

    const FiniteGroup& group() const { return *G_; }
    int level() const { return level_; }

    CycloNumber coeff(Elt g) const;
    void add_to_coeff(Elt g, const CycloNumber& v);
    std::vector<Elt> support() const;
    bool is_zero() const { return c_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const CycloNumber& s) const;
    AlgebraElement scaled(const Rat& s) const;

    // g^-1 (this) g
    AlgebraElement conjugate_by(Elt g) const;

    // Coefficient-wise embedding into a larger cyclotomic level.
    AlgebraElement embedded(int target_level) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    // Terms sorted by element index: "(coeff)*label + ...", "0" when empty.
    std::string to_string() const;

private:
    AlgebraElement(const FiniteGroup& G, int level) : G_(&G), level_(level) {}
    void require_compatible(const AlgebraElement& o) const;

    const FiniteGroup* G_;
    int level_;
    std::map<Elt, CycloNumber> c_;
};

// Average of a subgroup: |S|^-1 * sum of its elements.
AlgebraElement hat(const FiniteGroup& G, const Subgroup& S, int level);

bool is_idempotent(const AlgebraElement& a);
bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b);
// Checks commutation against the group's generating set.
bool is_central(const AlgebraElement& a);

}  // namespace wk
