#include "wedderkit/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "wedderkit/numutil.hpp"

namespace wk {

namespace {

std::vector<std::uint64_t> empty_mask(int n) {
    return std::vector<std::uint64_t>((static_cast<std::size_t>(n) + 63) / 64, 0);
}

void mask_set(std::vector<std::uint64_t>& m, Elt g) {
    m[static_cast<std::size_t>(g) >> 6] |= (std::uint64_t{1} << (g & 63));
}

std::vector<Elt> mask_elements(const std::vector<std::uint64_t>& m, int n) {
    std::vector<Elt> out;
    for (Elt g = 0; g < n; ++g)
        if ((m[static_cast<std::size_t>(g) >> 6] >> (g & 63)) & 1u) out.push_back(g);
    return out;
}

std::string power_label(const std::string& base, long e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

void FiniteGroup::finish_init() {
    n_ = static_cast<int>(labels_.size());
    if (n_ <= 0 || mult_.size() != static_cast<std::size_t>(n_) * n_)
        throw InvalidParameters("group table has wrong size");
    for (int v : mult_)
        if (v < 0 || v >= n_) throw InvalidParameters("group table entry out of range");
    for (Elt x = 0; x < n_; ++x)
        if (mul(0, x) != x || mul(x, 0) != x)
            throw InvalidParameters("element 0 is not a two-sided identity");
    // Latin square property.
    for (Elt a = 0; a < n_; ++a) {
        std::vector<char> seen_row(n_, 0), seen_col(n_, 0);
        for (Elt b = 0; b < n_; ++b) {
            if (seen_row[mul(a, b)]++) throw InvalidParameters("group table row is not a permutation");
            if (seen_col[mul(b, a)]++) throw InvalidParameters("group table column is not a permutation");
        }
    }
    for (Elt a = 0; a < n_; ++a)
        for (Elt b = 0; b < n_; ++b)
            for (Elt c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InvalidParameters("group table is not associative");
    inv_.assign(n_, -1);
    for (Elt a = 0; a < n_; ++a) {
        for (Elt b = 0; b < n_; ++b) {
            if (mul(a, b) == 0) {
                if (mul(b, a) != 0) throw InvalidParameters("one-sided inverse in group table");
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw InvalidParameters("missing inverse in group table");
    }
    if (labels_.empty()) {
        labels_.resize(n_);
        labels_[0] = "1";
        for (Elt g = 1; g < n_; ++g) labels_[g] = "g" + std::to_string(g);
    }
    // Deduplicate generators; fall back to a greedy generating set.
    {
        std::vector<Elt> g2;
        for (Elt g : gens_)
            if (g > 0 && g < n_ && std::find(g2.begin(), g2.end(), g) == g2.end()) g2.push_back(g);
        gens_ = g2;
    }
    if (gens_.empty() && n_ > 1) {
        std::vector<char> in(n_, 0);
        in[0] = 1;
        int cnt = 1;
        for (Elt g = 1; g < n_; ++g) {
            if (in[g]) continue;
            gens_.push_back(g);
            // grow closure
            std::vector<Elt> cur;
            for (Elt x = 0; x < n_; ++x)
                if (in[x]) cur.push_back(x);
            std::vector<Elt> work = {g};
            in[g] = 1;
            ++cnt;
            cur.push_back(g);
            while (!work.empty()) {
                Elt x = work.back();
                work.pop_back();
                std::size_t sz = cur.size();
                for (std::size_t i = 0; i < sz; ++i) {
                    for (Elt z : {mul(x, cur[i]), mul(cur[i], x)}) {
                        if (!in[z]) {
                            in[z] = 1;
                            ++cnt;
                            cur.push_back(z);
                            work.push_back(z);
                        }
                    }
                }
            }
            if (cnt == n_) break;
        }
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mult,
                                    std::vector<std::string> labels) {
    FiniteGroup G;
    const int n = static_cast<int>(mult.size());
    if (n == 0) throw InvalidParameters("empty multiplication table");
    G.mult_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidParameters("multiplication table is not square");
        G.mult_.insert(G.mult_.end(), row.begin(), row.end());
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw InvalidParameters("label count does not match group order");
    G.labels_ = std::move(labels);
    if (G.labels_.empty()) {
        G.labels_.resize(n);
        G.labels_[0] = "1";
        for (int g = 1; g < n; ++g) G.labels_[g] = "g" + std::to_string(g);
    }
    G.finish_init();
    return G;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens,
                                           int max_order) {
    int degree = 0;
    for (const auto& p : gens) degree = std::max(degree, static_cast<int>(p.size()));
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != degree)
            throw NotAPermutation("permutation generators act on different point sets");
        std::vector<char> seen(degree, 0);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v])
                throw NotAPermutation("generator is not a permutation of 0..d-1");
            seen[v] = 1;
        }
    }
    using Perm = std::vector<int>;
    auto compose = [](const Perm& x, const Perm& y) {  // apply x, then y
        Perm z(x.size());
        for (std::size_t p = 0; p < x.size(); ++p) z[p] = y[x[p]];
        return z;
    };
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems = {id};
    std::map<Perm, int> index = {{id, 0}};
    std::vector<Elt> gen_ids;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        Perm cur = elems[i];
        for (const auto& g : gens) {
            Perm nx = compose(cur, g);
            if (index.emplace(nx, static_cast<int>(elems.size())).second) {
                elems.push_back(nx);
                if (static_cast<int>(elems.size()) > max_order)
                    throw OrderBoundExceeded("permutation closure exceeds order bound " +
                                             std::to_string(max_order));
            }
        }
    }
    for (const auto& g : gens) gen_ids.push_back(index.at(g));

    const int n = static_cast<int>(elems.size());
    FiniteGroup G;
    G.mult_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            G.mult_[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
    G.labels_.resize(n);
    for (int a = 0; a < n; ++a) {
        // cycle notation
        const Perm& p = elems[a];
        std::vector<char> done(degree, 0);
        std::string s;
        for (int st = 0; st < degree; ++st) {
            if (done[st] || p[st] == st) {
                done[st] = 1;
                continue;
            }
            s += "(";
            int c = st;
            bool first = true;
            while (!done[c]) {
                done[c] = 1;
                if (!first) s += " ";
                s += std::to_string(c);
                first = false;
                c = p[c];
            }
            s += ")";
        }
        G.labels_[a] = s.empty() ? "()" : s;
    }
    G.gens_ = gen_ids;
    G.finish_init();
    return G;
}

FiniteGroup FiniteGroup::metacyclic(int m, int n, int t, int r) {
    if (m < 1 || n < 1) throw InvalidParameters("metacyclic: m and n must be positive");
    long rm = mod_reduce(r, m);
    long tm = mod_reduce(t, m);
    if (std::gcd(rm == 0 ? m : rm, static_cast<long>(m)) != 1 && m > 1)
        throw InvalidParameters("metacyclic: r must be a unit mod m");
    if (pow_mod(rm, n, m) != unit_one(m))
        throw InvalidParameters("metacyclic: r^n != 1 (mod m)");
    if (mod_reduce(tm * (rm - 1), m) != 0)
        throw InvalidParameters("metacyclic: t(r-1) != 0 (mod m)");
    const long s = inverse_mod(rm, m);  // b a = a^s b
    const int order = m * n;
    // powers of s
    std::vector<long> spow(n);
    for (int j = 0; j < n; ++j) spow[j] = pow_mod(s, j, m);
    FiniteGroup G;
    G.mult_.resize(static_cast<std::size_t>(order) * order);
    auto idx = [m](long i, long j) { return static_cast<int>(j * m + i); };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            for (int l = 0; l < n; ++l) {
                for (int k = 0; k < m; ++k) {
                    long carries = (j + l) / n;
                    long ai = mod_reduce(i + k * spow[j] + tm * carries, m);
                    long bj = (j + l) % n;
                    G.mult_[static_cast<std::size_t>(idx(i, j)) * order + idx(k, l)] =
                        idx(ai, bj);
                }
            }
        }
    }
    G.labels_.resize(order);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            std::string s2;
            if (i > 0) s2 = power_label("a", i);
            if (j > 0) {
                if (!s2.empty()) s2 += "*";
                s2 += power_label("b", j);
            }
            G.labels_[idx(i, j)] = s2.empty() ? "1" : s2;
        }
    }
    if (m > 1) G.gens_.push_back(idx(1, 0));
    if (n > 1) G.gens_.push_back(idx(0, 1));
    G.finish_init();
    return G;
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& invariants) {
    long order = 1;
    for (int d : invariants) {
        if (d < 1) throw InvalidParameters("abelian: invariants must be positive");
        order *= d;
        if (order > (1 << 20)) throw InvalidParameters("abelian: order too large");
    }
    const int n = static_cast<int>(order);
    const int rk = static_cast<int>(invariants.size());
    auto decode = [&](int x) {
        std::vector<int> tup(rk);
        for (int i = 0; i < rk; ++i) {
            tup[i] = x % invariants[i];
            x /= invariants[i];
        }
        return tup;
    };
    auto encode = [&](const std::vector<int>& tup) {
        int x = 0;
        for (int i = rk - 1; i >= 0; --i) x = x * invariants[i] + tup[i];
        return x;
    };
    FiniteGroup G;
    G.mult_.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        auto ta = decode(a);
        for (int b = 0; b < n; ++b) {
            auto tb = decode(b);
            std::vector<int> tc(rk);
            for (int i = 0; i < rk; ++i) tc[i] = (ta[i] + tb[i]) % invariants[i];
            G.mult_[static_cast<std::size_t>(a) * n + b] = encode(tc);
        }
    }
    G.labels_.resize(n);
    for (int a = 0; a < n; ++a) {
        auto t = decode(a);
        std::string s;
        for (int i = 0; i < rk; ++i) {
            if (t[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += power_label("g" + std::to_string(i + 1), t[i]);
        }
        G.labels_[a] = s.empty() ? "1" : s;
    }
    for (int i = 0; i < rk; ++i) {
        if (invariants[i] > 1) {
            std::vector<int> tup(rk, 0);
            tup[i] = 1;
            G.gens_.push_back(encode(tup));
        }
    }
    G.finish_init();
    return G;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& A, const FiniteGroup& B) {
    const int na = A.order(), nb = B.order();
    const int n = na * nb;
    FiniteGroup G;
    G.mult_.resize(static_cast<std::size_t>(n) * n);
    auto idx = [na](Elt a, Elt b) { return a + na * b; };
    for (Elt a1 = 0; a1 < na; ++a1)
        for (Elt b1 = 0; b1 < nb; ++b1)
            for (Elt a2 = 0; a2 < na; ++a2)
                for (Elt b2 = 0; b2 < nb; ++b2)
                    G.mult_[static_cast<std::size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
                        idx(A.mul(a1, a2), B.mul(b1, b2));
    G.labels_.resize(n);
    for (Elt a = 0; a < na; ++a) {
        for (Elt b = 0; b < nb; ++b) {
            std::string la = A.label(a), lb = B.label(b);
            std::string s;
            if (la != "1") s = la;
            if (lb != "1") {
                if (!s.empty()) s += "*";
                s += lb;
            }
            G.labels_[idx(a, b)] = s.empty() ? "1" : s;
        }
    }
    for (Elt g : A.generators()) G.gens_.push_back(idx(g, 0));
    for (Elt g : B.generators()) G.gens_.push_back(idx(0, g));
    G.finish_init();
    return G;
}

Elt FiniteGroup::power(Elt a, long e) const {
    const int o = element_order(a);
    long r = mod_reduce(e, o);
    Elt acc = 0;
    for (long i = 0; i < r; ++i) acc = mul(acc, a);
    return acc;
}

int FiniteGroup::element_order(Elt a) const {
    int o = 1;
    Elt x = a;
    while (x != 0) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

int FiniteGroup::exponent() const {
    long e = 1;
    for (Elt a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
    return static_cast<int>(e);
}

std::string FiniteGroup::label(Elt a) const { return labels_[a]; }

Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Elt> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Subgroup S;
    S.mask = empty_mask(G.order());
    for (Elt g : elems) {
        if (g < 0 || g >= G.order()) throw InvalidParameters("subgroup element out of range");
        mask_set(S.mask, g);
    }
    S.elems = std::move(elems);
    if (S.elems.empty() || S.elems[0] != 0)
        throw InvalidParameters("subgroup must contain the identity");
    for (Elt a : S.elems)
        for (Elt b : S.elems)
            if (!S.contains(G.mul(a, b)))
                throw InvalidParameters("element set is not closed under multiplication");
    return S;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
    Subgroup S;
    S.mask = empty_mask(G.order());
    mask_set(S.mask, 0);
    S.elems = {0};
    return S;
}

Subgroup full_subgroup(const FiniteGroup& G) {
    Subgroup S;
    S.mask = empty_mask(G.order());
    S.elems.resize(G.order());
    std::iota(S.elems.begin(), S.elems.end(), 0);
    for (Elt g : S.elems) mask_set(S.mask, g);
    S.gens = G.generators();
    return S;
}

Subgroup closure(const FiniteGroup& G, const std::vector<Elt>& seeds) {
    std::vector<char> in(G.order(), 0);
    std::vector<Elt> cur = {0};
    in[0] = 1;
    std::vector<Elt> work;
    for (Elt s : seeds) {
        if (s < 0 || s >= G.order()) throw InvalidParameters("closure seed out of range");
        if (!in[s]) {
            in[s] = 1;
            cur.push_back(s);
            work.push_back(s);
        }
    }
    while (!work.empty()) {
        Elt x = work.back();
        work.pop_back();
        std::size_t sz = cur.size();
        for (std::size_t i = 0; i < sz; ++i) {
            for (Elt z : {G.mul(x, cur[i]), G.mul(cur[i], x)}) {
                if (!in[z]) {
                    in[z] = 1;
                    cur.push_back(z);
                    work.push_back(z);
                }
            }
        }
    }
    Subgroup S = subgroup_from_elements(G, cur);
    for (Elt s : seeds)
        if (s != 0 && std::find(S.gens.begin(), S.gens.end(), s) == S.gens.end())
            S.gens.push_back(s);
    return S;
}

Subgroup cyclic_subgroup(const FiniteGroup& G, Elt g) { return closure(G, {g}); }

bool subset(const Subgroup& A, const Subgroup& B) {
    for (std::size_t i = 0; i < A.mask.size(); ++i)
        if (A.mask[i] & ~B.mask[i]) return false;
    return true;
}

Subgroup intersect(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    Subgroup S;
    S.mask = empty_mask(G.order());
    for (std::size_t i = 0; i < S.mask.size(); ++i) S.mask[i] = A.mask[i] & B.mask[i];
    S.elems = mask_elements(S.mask, G.order());
    return S;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& S, Elt x) {
    std::vector<Elt> elems;
    elems.reserve(S.elems.size());
    for (Elt g : S.elems) elems.push_back(G.conj(g, x));
    return subgroup_from_elements(G, std::move(elems));
}

namespace {

struct SubgroupOrderLess {
    bool operator()(const Subgroup& a, const Subgroup& b) const {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    }
};

std::mutex g_lattice_mutex;
std::map<std::vector<int>, std::vector<Subgroup>> g_lattice_cache;

std::vector<Subgroup> compute_all_subgroups(const FiniteGroup& G) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Subgroup> out;
    auto push = [&](Subgroup s) {
        if (seen.insert(s.mask).second) out.push_back(std::move(s));
    };
    push(trivial_subgroup(G));
    std::vector<Subgroup> cyclics;
    for (Elt g = 1; g < G.order(); ++g) {
        Subgroup c = cyclic_subgroup(G, g);
        if (!seen.count(c.mask)) {
            cyclics.push_back(c);
            push(std::move(c));
        }
    }
    // Layered joins with cyclic subgroups until no new subgroup appears.
    std::size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        std::size_t frontier_end = out.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const Subgroup& c : cyclics) {
                if (subset(c, out[i])) continue;
                std::vector<Elt> seeds = out[i].elems;
                seeds.insert(seeds.end(), c.elems.begin(), c.elems.end());
                push(closure(G, seeds));
            }
        }
        frontier_begin = frontier_end;
    }
    std::sort(out.begin(), out.end(), SubgroupOrderLess{});
    for (Subgroup& s : out) s.gens = small_generating_set(G, s);
    return out;
}

}  // namespace

const std::vector<Subgroup>& all_subgroups(const FiniteGroup& G, int max_group_order) {
    if (G.order() > max_group_order)
        throw OrderBoundExceeded("subgroup enumeration bound exceeded: |G| = " +
                                 std::to_string(G.order()));
    {
        std::lock_guard<std::mutex> lock(g_lattice_mutex);
        auto it = g_lattice_cache.find(G.flat_table());
        if (it != g_lattice_cache.end()) return it->second;
    }
    std::vector<Subgroup> result = compute_all_subgroups(G);
    std::lock_guard<std::mutex> lock(g_lattice_mutex);
    auto [it, inserted] = g_lattice_cache.emplace(G.flat_table(), std::move(result));
    (void)inserted;
    return it->second;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& S) {
    std::vector<Elt> elems;
    for (Elt x = 0; x < G.order(); ++x) {
        bool ok = true;
        for (Elt g : S.elems) {
            if (!S.contains(G.conj(g, x))) {
                ok = false;
                break;
            }
        }
        if (ok) elems.push_back(x);
    }
    return subgroup_from_elements(G, std::move(elems));
}

Subgroup centralizer_elt(const FiniteGroup& G, Elt x) {
    std::vector<Elt> elems;
    for (Elt g = 0; g < G.order(); ++g)
        if (G.mul(g, x) == G.mul(x, g)) elems.push_back(g);
    return subgroup_from_elements(G, std::move(elems));
}

bool is_normal_in(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    if (!subset(A, B)) return false;
    for (Elt b : B.elems)
        for (Elt a : A.elems)
            if (!A.contains(G.conj(a, b))) return false;
    return true;
}

Subgroup commutator_closure(const FiniteGroup& G, const Subgroup& H, Elt g) {
    std::vector<Elt> seeds;
    seeds.reserve(H.elems.size());
    for (Elt h : H.elems) seeds.push_back(G.comm(h, g));
    return closure(G, seeds);
}

Quotient quotient(const FiniteGroup& G, const Subgroup& N) {
    if (!is_normal_in(G, N, full_subgroup(G)))
        throw NotNormal("quotient: subgroup is not normal");
    const int n = G.order();
    std::vector<Elt> rep(n);
    for (Elt g = 0; g < n; ++g) {
        Elt m = n;
        for (Elt h : N.elems) m = std::min(m, G.mul(g, h));
        rep[g] = m;
    }
    std::vector<Elt> reps;
    for (Elt g = 0; g < n; ++g)
        if (rep[g] == g) reps.push_back(g);
    std::sort(reps.begin(), reps.end());
    std::vector<int> coset_of(n, -1);
    for (std::size_t c = 0; c < reps.size(); ++c) coset_of[reps[c]] = static_cast<int>(c);
    std::vector<Elt> proj(n);
    for (Elt g = 0; g < n; ++g) proj[g] = coset_of[rep[g]];

    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a][b] = proj[G.mul(reps[a], reps[b])];
    std::vector<std::string> labels(q);
    for (int c = 0; c < q; ++c) labels[c] = "[" + G.label(reps[c]) + "]";
    Quotient Q{FiniteGroup::from_table(std::move(table), std::move(labels)), std::move(proj),
               std::move(reps)};
    return Q;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& S) {
    const int k = S.order();
    std::vector<int> from_parent(G.order(), -1);
    for (int i = 0; i < k; ++i) from_parent[S.elems[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            int m = from_parent[G.mul(S.elems[a], S.elems[b])];
            if (m < 0) throw InvalidParameters("subgroup_as_group: set not closed");
            table[a][b] = m;
        }
    }
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = G.label(S.elems[i]);
    SubgroupGroup out{FiniteGroup::from_table(std::move(table), std::move(labels)),
                      S.elems, std::move(from_parent)};
    return out;
}

std::vector<std::vector<Elt>> conjugacy_classes(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<char> done(n, 0);
    std::vector<std::vector<Elt>> classes;
    for (Elt g = 0; g < n; ++g) {
        if (done[g]) continue;
        std::set<Elt> cls;
        for (Elt x = 0; x < n; ++x) cls.insert(G.conj(g, x));
        std::vector<Elt> v(cls.begin(), cls.end());
        for (Elt c : v) done[c] = 1;
        classes.push_back(std::move(v));
    }
    return classes;
}

std::vector<Subgroup> minimal_normal_subgroups_above(const FiniteGroup& G, const Subgroup& N) {
    const auto& subs = all_subgroups(G);
    Subgroup full = full_subgroup(G);
    std::vector<Subgroup> cand;
    for (const Subgroup& M : subs)
        if (M != N && subset(N, M) && is_normal_in(G, M, full)) cand.push_back(M);
    std::vector<Subgroup> out;
    for (const Subgroup& M : cand) {
        bool minimal = true;
        for (const Subgroup& M2 : cand) {
            if (M2 != M && subset(M2, M)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(M);
    }
    return out;
}

std::vector<Elt> small_generating_set(const FiniteGroup& G, const Subgroup& S) {
    std::vector<Elt> gens;
    Subgroup cur = trivial_subgroup(G);
    for (Elt g : S.elems) {
        if (cur.contains(g)) continue;
        gens.push_back(g);
        std::vector<Elt> seeds = gens;
        cur = closure(G, seeds);
        if (cur.order() == S.order()) break;
    }
    return gens;
}

}  // namespace wk
