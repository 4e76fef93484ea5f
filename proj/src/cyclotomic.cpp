#include "wedderkit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "wedderkit/numutil.hpp"

namespace wk {

namespace {

using Poly = std::vector<Rat>;  // dense, constant term first, no trailing zeros

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// Exact division; throws if the remainder is nonzero.
Poly poly_div_exact(Poly num, const Poly& den) {
    if (den.empty()) throw DivisionByZero("polynomial division by zero");
    poly_trim(num);
    if (num.size() < den.size()) {
        if (!num.empty()) throw InvalidParameters("polynomial division is not exact");
        return {};
    }
    Poly q(num.size() - den.size() + 1, Rat(0));
    const Rat lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat coef = num[k + den.size() - 1] / lead;
        q[k] = coef;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= coef * den[j];
    }
    poly_trim(num);
    if (!num.empty()) throw InvalidParameters("polynomial division is not exact");
    return q;
}

std::mutex g_cyclo_mutex;
std::map<int, Poly> g_cyclo_cache;

const Poly& cyclotomic_poly_locked(int n) {
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;
    Poly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_poly_locked(d));
    }
    return g_cyclo_cache.emplace(n, std::move(num)).first->second;
}

struct LevelData {
    int level = 0;
    int phi = 0;
    Poly cyclo;
    // xpow[e] = coordinates of z^e in the power basis, e < max(level, 2*phi-1)
    std::vector<std::vector<Rat>> xpow;
};

std::mutex g_level_mutex;
std::map<int, LevelData> g_level_cache;

const LevelData& level_data(int level) {
    if (level < 1) throw InvalidParameters("cyclotomic level must be positive");
    std::lock_guard<std::mutex> lock(g_level_mutex);
    auto it = g_level_cache.find(level);
    if (it != g_level_cache.end()) return it->second;

    LevelData d;
    d.level = level;
    {
        std::lock_guard<std::mutex> clock(g_cyclo_mutex);
        d.cyclo = cyclotomic_poly_locked(level);
    }
    d.phi = static_cast<int>(d.cyclo.size()) - 1;
    const int tablen = std::max(level, 2 * d.phi - 1);
    d.xpow.resize(tablen);
    d.xpow[0].assign(d.phi, Rat(0));
    d.xpow[0][0] = 1;
    for (int e = 1; e < tablen; ++e) {
        const auto& prev = d.xpow[e - 1];
        std::vector<Rat> cur(d.phi, Rat(0));
        for (int i = 1; i < d.phi; ++i) cur[i] = prev[i - 1];
        const Rat& carry = prev[d.phi - 1];
        if (carry != 0)
            for (int i = 0; i < d.phi; ++i) cur[i] -= carry * d.cyclo[i];
        d.xpow[e] = std::move(cur);
    }
    return g_level_cache.emplace(level, std::move(d)).first->second;
}

// Extended Euclid in Q[x]: returns (g, u) with u*a = g (mod m), g the gcd.
std::pair<Poly, Poly> poly_half_xgcd(Poly a, Poly m) {
    poly_trim(a);
    poly_trim(m);
    Poly r0 = std::move(m), r1 = std::move(a);
    Poly u0 = {}, u1 = {Rat(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        Poly rem = r0;
        const Rat lead = r1.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            if (rem.size() < k + r1.size()) continue;
            Rat coef = rem[k + r1.size() - 1] / lead;
            q[k] = coef;
            if (coef == 0) continue;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[k + j] -= coef * r1[j];
        }
        poly_trim(rem);
        poly_trim(q);
        Poly unew = u0;
        Poly qu = poly_mul(q, u1);
        if (unew.size() < qu.size()) unew.resize(qu.size(), Rat(0));
        for (std::size_t i = 0; i < qu.size(); ++i) unew[i] -= qu[i];
        poly_trim(unew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(unew);
    }
    return {std::move(r0), std::move(u0)};
}

}  // namespace

const std::vector<Rat>& cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidParameters("cyclotomic polynomial index must be positive");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_poly_locked(n);
}

CycloNumber CycloNumber::zero(int level) {
    const LevelData& d = level_data(level);
    return CycloNumber(level, std::vector<Rat>(d.phi, Rat(0)));
}

CycloNumber CycloNumber::from_rational(int level, const Rat& value) {
    CycloNumber v = zero(level);
    v.c_[0] = value;
    return v;
}

CycloNumber CycloNumber::root(int level, long exponent) {
    const LevelData& d = level_data(level);
    return CycloNumber(level, d.xpow[mod_reduce(exponent, level)]);
}

bool CycloNumber::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloNumber::rational_value() const {
    if (!is_rational()) throw InvalidParameters("value is not rational");
    return c_[0];
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber v = *this;
    for (Rat& x : v.c_) x = -x;
    return v;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    if (level_ != o.level_) throw LevelMismatch("cyclotomic levels differ in addition");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
    if (level_ != o.level_) throw LevelMismatch("cyclotomic levels differ in subtraction");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    CycloNumber v = *this;
    v += o;
    return v;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    CycloNumber v = *this;
    v -= o;
    return v;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    if (level_ != o.level_) throw LevelMismatch("cyclotomic levels differ in multiplication");
    const LevelData& d = level_data(level_);
    const int phi = d.phi;
    std::vector<Rat> conv(2 * phi - 1, Rat(0));
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rat> out(conv.begin(), conv.begin() + phi);
    for (int e = phi; e < 2 * phi - 1; ++e) {
        if (conv[e] == 0) continue;
        const auto& red = d.xpow[e];
        for (int i = 0; i < phi; ++i) out[i] += conv[e] * red[i];
    }
    return CycloNumber(level_, std::move(out));
}

CycloNumber CycloNumber::operator*(const Rat& r) const {
    CycloNumber v = *this;
    for (Rat& x : v.c_) x *= r;
    return v;
}

CycloNumber CycloNumber::operator/(const CycloNumber& o) const { return *this * o.inverse(); }

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    const LevelData& d = level_data(level_);
    Poly a(c_.begin(), c_.end());
    auto [g, u] = poly_half_xgcd(std::move(a), d.cyclo);
    // The modulus is irreducible, so g is a nonzero constant.
    if (g.size() != 1)
        throw VerificationFailed("cyclotomic inverse: gcd with the minimal polynomial not constant");
    std::vector<Rat> out(d.phi, Rat(0));
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] / g[0];
    return CycloNumber(level_, std::move(out));
}

CycloNumber CycloNumber::embedded(int target_level) const {
    if (target_level % level_ != 0)
        throw IncompatibleLevels("embedding requires the source level to divide the target");
    if (target_level == level_) return *this;
    const LevelData& d = level_data(target_level);
    const long stride = target_level / level_;
    CycloNumber out = zero(target_level);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& mono = d.xpow[mod_reduce(static_cast<long>(i) * stride, target_level)];
        for (int j = 0; j < d.phi; ++j) out.c_[j] += c_[i] * mono[j];
    }
    return out;
}

CycloNumber CycloNumber::galois(long t) const {
    if (!is_unit_mod(t, level_))
        throw InvalidParameters("galois exponent must be a unit mod the level");
    const LevelData& d = level_data(level_);
    CycloNumber out = zero(level_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& mono = d.xpow[mod_reduce(static_cast<long>(i) * t, level_)];
        for (int j = 0; j < d.phi; ++j) out.c_[j] += c_[i] * mono[j];
    }
    return out;
}

std::string CycloNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        const bool neg = sgn(a) < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        Rat abs_a = neg ? Rat(-a) : a;
        if (i == 0) {
            os << abs_a.get_str();
        } else {
            if (abs_a != 1) os << abs_a.get_str() << "*";
            os << "z_" << level_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace wk
