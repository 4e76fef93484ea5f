#include "wedderkit/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wedderkit/numutil.hpp"

namespace wk {

AbelianField AbelianField::rationals() { return AbelianField(1, {0}); }

AbelianField AbelianField::cyclotomic(int m) {
    if (m < 1) throw InvalidParameters("cyclotomic field index must be positive");
    return AbelianField(m, {unit_one(m)});
}

AbelianField AbelianField::fixed_field(int m, const std::vector<long>& gens) {
    if (m < 1) throw InvalidParameters("field modulus must be positive");
    for (long g : gens)
        if (!is_unit_mod(g, m))
            throw InvalidParameters("fixing subgroup generator is not a unit mod " +
                                    std::to_string(m));
    return AbelianField(m, unit_subgroup(m, gens));
}

bool AbelianField::is_rational_field() const {
    return elems_.size() == static_cast<std::size_t>(euler_phi(m_));
}

long AbelianField::degree() const { return euler_phi(m_) / static_cast<long>(elems_.size()); }

bool AbelianField::contains(const CycloNumber& v) const {
    if (v.level() % m_ != 0)
        throw IncompatibleLevels("field membership needs a level divisible by the modulus");
    const long L = v.level();
    for (long s : units_mod(L)) {
        if (std::find(elems_.begin(), elems_.end(), mod_reduce(s, m_)) == elems_.end()) continue;
        if (v.galois(s) != v) return false;
    }
    return true;
}

std::string AbelianField::to_string() const {
    if (is_rational_field()) return "Q";
    std::ostringstream os;
    os << "Q(zeta_" << m_ << ")";
    if (elems_.size() > 1) {
        os << "^{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) os << ",";
            os << elems_[i];
        }
        os << "}";
    }
    return os.str();
}

bool GaloisImage::contains(long t) const {
    return std::binary_search(residues.begin(), residues.end(), mod_reduce(t, modulus));
}

GaloisImage galois_image(const AbelianField& F, int k) {
    if (k < 1) throw InvalidParameters("galois_image: k must be positive");
    const long m = F.modulus();
    const long L = std::lcm(static_cast<long>(k), m);
    std::vector<long> out;
    const auto& H = F.fixing_subgroup();
    for (long s : units_mod(L)) {
        if (std::find(H.begin(), H.end(), mod_reduce(s, m)) == H.end()) continue;
        long t = mod_reduce(s, k);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return GaloisImage{k, std::move(out)};
}

CycloNumber trace_to_F(const AbelianField& F, int k, long i) {
    const long L = std::lcm(static_cast<long>(k), static_cast<long>(F.modulus()));
    GaloisImage I = galois_image(F, k);
    CycloNumber out = CycloNumber::zero(static_cast<int>(L));
    const long stride = L / k;
    for (long t : I.residues)
        out += CycloNumber::root(static_cast<int>(L), mod_reduce(i * t, k) * stride);
    return out;
}

std::pair<long, long> signature(const AbelianField& F) {
    const long deg = F.degree();
    const long minus_one = mod_reduce(-1, F.modulus());
    const auto& H = F.fixing_subgroup();
    const bool real = std::find(H.begin(), H.end(), minus_one) != H.end();
    if (real) return {deg, 0};
    return {0, deg / 2};
}

long intersect_with_cyclotomic_degree(const AbelianField& F, int k,
                                      const std::vector<long>& A) {
    if (k < 1) throw InvalidParameters("intersection: k must be positive");
    std::vector<long> Ac = unit_subgroup(k, A);
    const long m = F.modulus();
    const long L = std::lcm(static_cast<long>(k), m);
    const auto& H = F.fixing_subgroup();
    std::vector<long> joint;
    for (long s : units_mod(L)) {
        const bool in_lift_A =
            std::find(Ac.begin(), Ac.end(), mod_reduce(s, k)) != Ac.end();
        const bool in_lift_H = std::find(H.begin(), H.end(), mod_reduce(s, m)) != H.end();
        if (in_lift_A || in_lift_H) joint.push_back(s);
    }
    std::vector<long> J = unit_subgroup(L, joint);
    return euler_phi(L) / static_cast<long>(J.size());
}

AbelianField parse_field(const std::string& spec) {
    std::string s = spec;
    // trim
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (s == "Q") return AbelianField::rationals();
    const std::string head = "Q(zeta_";
    if (s.rfind(head, 0) != 0)
        throw InvalidParameters("cannot parse field spec: " + spec);
    std::size_t pos = head.size();
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos || close == pos)
        throw InvalidParameters("cannot parse field spec: " + spec);
    long m = 0;
    for (std::size_t i = pos; i < close; ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw InvalidParameters("cannot parse field spec: " + spec);
        m = m * 10 + (s[i] - '0');
        if (m > 1000000) throw InvalidParameters("field modulus too large: " + spec);
    }
    if (m < 1) throw InvalidParameters("field modulus must be positive: " + spec);
    if (close + 1 == s.size()) return AbelianField::cyclotomic(static_cast<int>(m));
    if (s.compare(close + 1, 2, "^{") != 0 || s.back() != '}')
        throw InvalidParameters("cannot parse field spec: " + spec);
    std::string body = s.substr(close + 3, s.size() - close - 4);
    std::vector<long> gens;
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        if (tok.empty()) throw InvalidParameters("cannot parse field spec: " + spec);
        long t = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw InvalidParameters("cannot parse field spec: " + spec);
            t = t * 10 + (ch - '0');
        }
        if (!is_unit_mod(t, m))
            throw InvalidParameters("field spec residue " + std::to_string(t) +
                                    " is not a unit mod " + std::to_string(m));
        gens.push_back(t);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return AbelianField::fixed_field(static_cast<int>(m), gens);
}

}  // namespace wk
