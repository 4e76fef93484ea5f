#include "wedderkit/algebra.hpp"

#include <sstream>

namespace wk {

AlgebraElement AlgebraElement::zero(const FiniteGroup& G, int level) {
    return AlgebraElement(G, level);
}

AlgebraElement AlgebraElement::one(const FiniteGroup& G, int level) {
    return basis(G, level, 0);
}

AlgebraElement AlgebraElement::basis(const FiniteGroup& G, int level, Elt g) {
    if (g < 0 || g >= G.order()) throw InvalidParameters("basis element out of range");
    AlgebraElement a(G, level);
    a.c_.emplace(g, CycloNumber::from_rational(level, 1));
    return a;
}

CycloNumber AlgebraElement::coeff(Elt g) const {
    auto it = c_.find(g);
    if (it == c_.end()) return CycloNumber::zero(level_);
    return it->second;
}

void AlgebraElement::add_to_coeff(Elt g, const CycloNumber& v) {
    if (g < 0 || g >= G_->order()) throw InvalidParameters("basis element out of range");
    if (v.level() != level_) throw LevelMismatch("coefficient level differs from element level");
    auto it = c_.find(g);
    if (it == c_.end()) {
        if (!v.is_zero()) c_.emplace(g, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
}

std::vector<Elt> AlgebraElement::support() const {
    std::vector<Elt> out;
    out.reserve(c_.size());
    for (const auto& [g, v] : c_) out.push_back(g);
    return out;
}

void AlgebraElement::require_compatible(const AlgebraElement& o) const {
    if (!G_->same_as(*o.G_))
        throw GroupMismatch("algebra elements live over different groups");
    if (level_ != o.level_)
        throw LevelMismatch("algebra elements live at different cyclotomic levels");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_compatible(o);
    AlgebraElement out = *this;
    for (const auto& [g, v] : o.c_) out.add_to_coeff(g, v);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_compatible(o);
    AlgebraElement out = *this;
    for (const auto& [g, v] : o.c_) out.add_to_coeff(g, -v);
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    require_compatible(o);
    AlgebraElement out(*G_, level_);
    for (const auto& [g1, v1] : c_)
        for (const auto& [g2, v2] : o.c_) out.add_to_coeff(G_->mul(g1, g2), v1 * v2);
    return out;
}

AlgebraElement AlgebraElement::scaled(const CycloNumber& s) const {
    if (s.level() != level_) throw LevelMismatch("scalar level differs from element level");
    AlgebraElement out(*G_, level_);
    if (s.is_zero()) return out;
    for (const auto& [g, v] : c_) {
        CycloNumber w = v * s;
        if (!w.is_zero()) out.c_.emplace(g, std::move(w));
    }
    return out;
}

AlgebraElement AlgebraElement::scaled(const Rat& s) const {
    AlgebraElement out(*G_, level_);
    if (s == 0) return out;
    for (const auto& [g, v] : c_) out.c_.emplace(g, v * s);
    return out;
}

AlgebraElement AlgebraElement::conjugate_by(Elt g) const {
    AlgebraElement out(*G_, level_);
    for (const auto& [x, v] : c_) out.c_.emplace(G_->conj(x, g), v);
    return out;
}

AlgebraElement AlgebraElement::embedded(int target_level) const {
    AlgebraElement out(*G_, target_level);
    for (const auto& [g, v] : c_) out.c_.emplace(g, v.embedded(target_level));
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    require_compatible(o);
    return c_ == o.c_;
}

std::string AlgebraElement::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, v] : c_) {
        if (!first) os << " + ";
        os << "(" << v.to_string() << ")*" << G_->label(g);
        first = false;
    }
    return os.str();
}

AlgebraElement hat(const FiniteGroup& G, const Subgroup& S, int level) {
    AlgebraElement out = AlgebraElement::zero(G, level);
    const CycloNumber w =
        CycloNumber::from_rational(level, Rat(1, static_cast<unsigned long>(S.order())));
    for (Elt g : S.elems) out.add_to_coeff(g, w);
    return out;
}

bool is_idempotent(const AlgebraElement& a) { return (a * a) == a; }

bool are_orthogonal(const AlgebraElement& a, const AlgebraElement& b) {
    return (a * b).is_zero() && (b * a).is_zero();
}

bool is_central(const AlgebraElement& a) {
    for (Elt g : a.group().generators())
        if (a.conjugate_by(g) != a) return false;
    return true;
}

}  // namespace wk
