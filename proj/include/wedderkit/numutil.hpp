#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "wedderkit/errors.hpp"

// Small modular-arithmetic helpers.  Residues mod n are canonical
// representatives in [0, n); for n == 1 the unit group is {0}.

namespace wk {

inline long mod_reduce(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

inline bool is_unit_mod(long x, long n) {
    if (n == 1) return true;
    return std::gcd(mod_reduce(x, n), n) == 1;
}

inline long mul_mod(long a, long b, long n) {
    if (n == 1) return 0;
    return mod_reduce(mod_reduce(a, n) * mod_reduce(b, n), n);
}

inline long pow_mod(long a, long e, long n) {
    if (n == 1) return 0;
    long base = mod_reduce(a, n);
    long acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul_mod(acc, base, n);
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    return acc;
}

inline long unit_one(long n) { return n == 1 ? 0 : 1; }

inline std::vector<long> units_mod(long n) {
    if (n == 1) return {0};
    std::vector<long> out;
    for (long x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) out.push_back(x);
    return out;
}

inline long euler_phi(long n) {
    if (n == 1) return 1;
    long count = 0;
    for (long x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) ++count;
    return count;
}

inline long inverse_mod(long a, long n) {
    if (n == 1) return 0;
    a = mod_reduce(a, n);
    if (std::gcd(a, n) != 1)
        throw InvalidParameters("inverse_mod: residue is not a unit");
    long t = 0, newt = 1, r = n, newr = a;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return mod_reduce(t, n);
}

// Multiplicative order of a unit mod n.
inline long order_mod(long a, long n) {
    if (n == 1) return 1;
    a = mod_reduce(a, n);
    if (std::gcd(a, n) != 1)
        throw InvalidParameters("order_mod: residue is not a unit");
    long x = a, ord = 1;
    while (x != 1) {
        x = mul_mod(x, a, n);
        ++ord;
    }
    return ord;
}

// Subgroup of U(Z/nZ) generated by the given unit residues; sorted.
inline std::vector<long> unit_subgroup(long n, const std::vector<long>& gens) {
    if (n == 1) return {0};
    std::set<long> s;
    s.insert(1);
    std::vector<long> work;
    for (long g : gens) {
        long r = mod_reduce(g, n);
        if (std::gcd(r, n) != 1)
            throw InvalidParameters("unit_subgroup: generator is not a unit");
        if (s.insert(r).second) work.push_back(r);
    }
    while (!work.empty()) {
        long x = work.back();
        work.pop_back();
        std::vector<long> cur(s.begin(), s.end());
        for (long y : cur) {
            long z = mul_mod(x, y, n);
            if (s.insert(z).second) work.push_back(z);
        }
    }
    return std::vector<long>(s.begin(), s.end());
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Returns true and fills p, e when q = p^e with p prime, e >= 1.
inline bool is_prime_power(long q, long* p, int* e) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    if (p) *p = f[0].first;
    if (e) *e = f[0].second;
    return true;
}

}  // namespace wk
