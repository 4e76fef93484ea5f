#include "wedderkit/shoda.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "wedderkit/numutil.hpp"

namespace wk {

Elt find_section_generator(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!subset(K, H)) throw InvalidParameters("section: K must be contained in H");
    if (!is_normal_in(G, K, H)) throw NotNormal("section: K must be normal in H");
    const int index = H.order() / K.order();
    for (Elt h : H.elems) {
        int j = 1;
        Elt x = h;
        while (!K.contains(x)) {
            x = G.mul(x, h);
            ++j;
        }
        if (j == index) return h;
    }
    return -1;
}

CyclicSection make_cyclic_section(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    Elt gen = find_section_generator(G, H, K);
    if (gen < 0) throw InvalidParameters("section: H/K is not cyclic");
    CyclicSection s;
    s.H = H;
    s.K = K;
    s.gen = gen;
    s.k = H.order() / K.order();
    s.dlog.assign(G.order(), -1);
    int assigned = 0;
    Elt base = 0;
    for (int j = 0; j < s.k; ++j) {
        for (Elt kk : K.elems) {
            Elt g = G.mul(base, kk);
            if (s.dlog[g] != -1) throw VerificationFailed("section: coset tables overlap");
            s.dlog[g] = j;
            ++assigned;
        }
        base = G.mul(base, gen);
    }
    if (assigned != H.order()) throw VerificationFailed("section: cosets do not cover H");
    return s;
}

std::vector<CyclotomicClass> cyclotomic_classes(const AbelianField& F, int k) {
    GaloisImage I = galois_image(F, k);
    std::vector<CyclotomicClass> out;
    std::set<long> seen;
    for (long e : units_mod(k)) {
        if (seen.count(e)) continue;
        std::set<long> orbit;
        for (long t : I.residues) orbit.insert(mul_mod(e, t, k));
        CyclotomicClass C;
        C.k = k;
        C.exponents.assign(orbit.begin(), orbit.end());
        for (long x : C.exponents) seen.insert(x);
        out.push_back(std::move(C));
    }
    return out;
}

int ambient_level(const FiniteGroup& G, const AbelianField& F) {
    return static_cast<int>(std::lcm(static_cast<long>(G.exponent()),
                                     static_cast<long>(F.modulus())));
}

std::vector<Subgroup> minimal_normals_between(const FiniteGroup& G, const Subgroup& H,
                                              const Subgroup& K) {
    if (H == K) return {};
    Elt gen = find_section_generator(G, H, K);
    std::vector<Subgroup> out;
    if (gen >= 0) {
        const int k = H.order() / K.order();
        for (auto [p, e] : factorize(k)) {
            (void)e;
            std::vector<Elt> seeds = K.elems;
            seeds.push_back(G.power(gen, k / p));
            out.push_back(closure(G, seeds));
        }
    } else {
        SubgroupGroup SH = subgroup_as_group(G, H);
        std::vector<Elt> kimg;
        for (Elt g : K.elems) kimg.push_back(SH.from_parent[g]);
        Subgroup Kp = subgroup_from_elements(SH.group, kimg);
        for (const Subgroup& Mp : minimal_normal_subgroups_above(SH.group, Kp)) {
            std::vector<Elt> back;
            for (Elt x : Mp.elems) back.push_back(SH.to_parent[x]);
            out.push_back(subgroup_from_elements(G, back));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    });
    return out;
}

AlgebraElement epsilon(const FiniteGroup& G, const Subgroup& H, const Subgroup& K, int level) {
    if (!subset(K, H)) throw InvalidParameters("epsilon: K must be contained in H");
    if (!is_normal_in(G, K, H)) throw NotNormal("epsilon: K must be normal in H");
    AlgebraElement e = hat(G, K, level);
    if (H == K) return e;
    const AlgebraElement one = AlgebraElement::one(G, level);
    for (const Subgroup& M : minimal_normals_between(G, H, K))
        e = e * (one - hat(G, M, level));
    return e;
}

AlgebraElement epsilon_C(const FiniteGroup& G, const AbelianField& F, const CyclicSection& s,
                         const CyclotomicClass& C, int level) {
    if (C.k != s.k) throw InvalidParameters("epsilon_C: class and section orders differ");
    if (level % s.k != 0)
        throw IncompatibleLevels("epsilon_C: level must be a multiple of [H:K]");
    (void)F;
    const long stride = level / s.k;
    const Rat inv_h(1, static_cast<unsigned long>(s.H.order()));
    std::vector<CycloNumber> w;
    w.reserve(s.k);
    for (int j = 0; j < s.k; ++j) {
        CycloNumber acc = CycloNumber::zero(level);
        for (long e : C.exponents)
            acc += CycloNumber::root(level, mod_reduce(static_cast<long>(j) * e, s.k) * stride);
        w.push_back(acc * inv_h);
    }
    AlgebraElement out = AlgebraElement::zero(G, level);
    for (Elt h : s.H.elems) out.add_to_coeff(G.inv(h), w[s.dlog[h]]);
    return out;
}

AlgebraElement sum_distinct_conjugates(const FiniteGroup& G, const AlgebraElement& a) {
    if (!G.same_as(a.group())) throw GroupMismatch("conjugate sum over a foreign group");
    std::vector<AlgebraElement> distinct;
    for (Elt g = 0; g < G.order(); ++g) {
        AlgebraElement c = a.conjugate_by(g);
        bool fresh = true;
        for (const AlgebraElement& d : distinct) {
            if (d == c) {
                fresh = false;
                break;
            }
        }
        if (fresh) distinct.push_back(std::move(c));
    }
    AlgebraElement out = AlgebraElement::zero(a.group(), a.level());
    for (const AlgebraElement& d : distinct) out = out + d;
    return out;
}

AlgebraElement e_rational(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                          int level) {
    return sum_distinct_conjugates(G, epsilon(G, H, K, level));
}

AlgebraElement e_class(const FiniteGroup& G, const AbelianField& F, const CyclicSection& s,
                       const CyclotomicClass& C, int level) {
    return sum_distinct_conjugates(G, epsilon_C(G, F, s, C, level));
}

bool is_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!subset(K, H) || !is_normal_in(G, K, H)) return false;
    if (find_section_generator(G, H, K) < 0) return false;
    for (Elt g = 0; g < G.order(); ++g) {
        if (H.contains(g)) continue;
        Subgroup S = commutator_closure(G, H, g);
        if (subset(intersect(G, S, H), K)) return false;
    }
    return true;
}

namespace {

// H/K maximal abelian in N/K, assuming hK generates a cyclic H/K.
bool maximal_abelian_in(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                        const Subgroup& N, Elt gen) {
    SubgroupGroup SN = subgroup_as_group(G, N);
    std::vector<Elt> kimg;
    for (Elt g : K.elems) kimg.push_back(SN.from_parent[g]);
    Quotient Q = quotient(SN.group, subgroup_from_elements(SN.group, kimg));
    Elt hbar = Q.proj[SN.from_parent[gen]];
    return centralizer_elt(Q.group, hbar).order() == H.order() / K.order();
}

}  // namespace

bool is_strong_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!subset(K, H) || !is_normal_in(G, K, H)) return false;
    Subgroup N = normalizer(G, K);
    if (!subset(H, N) || !is_normal_in(G, H, N)) return false;
    Elt gen = find_section_generator(G, H, K);
    if (gen < 0) return false;
    if (!maximal_abelian_in(G, H, K, N, gen)) return false;
    if (N.order() < G.order()) {
        AlgebraElement eps1 = epsilon(G, H, K, 1);
        for (Elt g = 0; g < G.order(); ++g) {
            if (N.contains(g)) continue;
            if (!(eps1 * eps1.conjugate_by(g)).is_zero()) return false;
        }
    }
    return true;
}

Subgroup stabilizer_with_exponents(const FiniteGroup& G, const CyclicSection& s,
                                   const std::vector<long>& residues) {
    Subgroup NH = normalizer(G, s.H);
    Subgroup NK = normalizer(G, s.K);
    std::vector<Elt> elems;
    for (Elt g = 0; g < G.order(); ++g) {
        if (!NH.contains(g) || !NK.contains(g)) continue;
        const long i = s.dlog[G.conj(s.gen, g)];
        if (std::find(residues.begin(), residues.end(), i) != residues.end())
            elems.push_back(g);
    }
    return subgroup_from_elements(G, std::move(elems));
}

Subgroup stabilizer_EF(const FiniteGroup& G, const AbelianField& F, const CyclicSection& s) {
    return stabilizer_with_exponents(G, s, galois_image(F, s.k).residues);
}

std::vector<long> conjugation_image(const FiniteGroup& G, const CyclicSection& s) {
    Subgroup N = normalizer(G, s.K);
    if (!is_normal_in(G, s.H, N))
        throw InvalidParameters("conjugation image requires H normal in N_G(K)");
    std::set<long> im;
    for (Elt g : N.elems) im.insert(s.dlog[G.conj(s.gen, g)]);
    return std::vector<long>(im.begin(), im.end());
}

Subgroup centralizer_of_element(const FiniteGroup& G, const AlgebraElement& a) {
    if (!G.same_as(a.group())) throw GroupMismatch("centralizer over a foreign group");
    std::vector<Elt> elems;
    for (Elt g = 0; g < G.order(); ++g)
        if (a.conjugate_by(g) == a) elems.push_back(g);
    return subgroup_from_elements(G, std::move(elems));
}

PrimitiveIdempotentResult primitive_idempotent_from_shoda(const FiniteGroup& G,
                                                          const AbelianField& F,
                                                          const Subgroup& H, const Subgroup& K,
                                                          const CyclotomicClass& C) {
    if (!is_shoda_pair(G, H, K))
        throw NotAShodaPair("the given pair fails the induced-irreducibility test");
    CyclicSection s = make_cyclic_section(G, H, K);
    if (C.k != s.k) throw InvalidParameters("class order does not match the section");
    const int k = s.k;
    Subgroup Cen = centralizer_of_element(G, epsilon_C(G, F, s, C, k));
    if (!subset(H, Cen))
        throw VerificationFailed("centralizer of epsilon_C does not contain H");
    const long cen_index = Cen.order() / H.order();

    // [F(chi) : F(chi^G)] as the number of field generators over F fixing
    // every induced character value.
    const long e0 = C.rep();
    std::vector<CycloNumber> vals;
    vals.reserve(G.order());
    const Rat inv_h(1, static_cast<unsigned long>(H.order()));
    for (Elt g = 0; g < G.order(); ++g) {
        CycloNumber v = CycloNumber::zero(k);
        for (Elt x = 0; x < G.order(); ++x) {
            Elt y = G.conj(g, x);
            if (!H.contains(y)) continue;
            v += CycloNumber::root(k, mod_reduce(static_cast<long>(s.dlog[y]) * e0, k));
        }
        vals.push_back(v * inv_h);
    }
    GaloisImage I = galois_image(F, k);
    long fixers = 0;
    for (long t : I.residues) {
        bool fixes = true;
        for (const CycloNumber& v : vals) {
            if (!(v.galois(t) == v)) {
                fixes = false;
                break;
            }
        }
        if (fixes) ++fixers;
    }

    Rat coefficient(cen_index, static_cast<unsigned long>(fixers));
    coefficient.canonicalize();
    const int L = ambient_level(G, F);
    AlgebraElement eC = e_class(G, F, s, C, L);
    PrimitiveIdempotentResult out{eC.scaled(coefficient), coefficient, std::move(eC),
                                  cen_index, fixers};
    return out;
}

namespace {

struct SearchEntry {
    std::unique_ptr<FiniteGroup> G;
    StrongPairSearch search;
};

std::mutex g_search_mutex;
std::map<std::vector<int>, std::unique_ptr<SearchEntry>> g_search_cache;

StrongPairSearch run_search(const FiniteGroup& G) {
    const auto& subs = all_subgroups(G);
    std::vector<StrongPairRecord> pairs;
    AlgebraElement one1 = AlgebraElement::one(G, 1);
    AlgebraElement total = AlgebraElement::zero(G, 1);
    for (const Subgroup& K : subs) {
        for (const Subgroup& H : subs) {
            if (!subset(K, H)) continue;
            if (!is_strong_shoda_pair(G, H, K)) continue;
            AlgebraElement eps1 = epsilon(G, H, K, 1);
            AlgebraElement e1 = sum_distinct_conjugates(G, eps1);
            bool duplicate = false;
            for (const StrongPairRecord& r : pairs) {
                if (r.e_rat == e1) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
            CyclicSection s = make_cyclic_section(G, H, K);
            StrongPairRecord rec{H,
                                 K,
                                 normalizer(G, K),
                                 s,
                                 conjugation_image(G, s),
                                 std::move(eps1),
                                 e1};
            total = total + e1;
            pairs.push_back(std::move(rec));
        }
    }
    const bool complete = (total == one1);
    return StrongPairSearch{std::move(pairs), complete, one1 - total};
}

}  // namespace

const StrongPairSearch& strong_pair_search(const FiniteGroup& G) {
    {
        std::lock_guard<std::mutex> lock(g_search_mutex);
        auto it = g_search_cache.find(G.flat_table());
        if (it != g_search_cache.end()) return it->second->search;
    }
    auto gcopy = std::make_unique<FiniteGroup>(G);
    StrongPairSearch search = run_search(*gcopy);
    std::unique_ptr<SearchEntry> entry(
        new SearchEntry{std::move(gcopy), std::move(search)});
    std::lock_guard<std::mutex> lock(g_search_mutex);
    auto [it, inserted] = g_search_cache.emplace(G.flat_table(), std::move(entry));
    (void)inserted;
    return it->second->search;
}

const StrongPairSearch& require_complete_search(const FiniteGroup& G) {
    const StrongPairSearch& search = strong_pair_search(G);
    if (!search.complete) {
        std::vector<std::string> found;
        for (const StrongPairRecord& r : search.pairs) {
            std::ostringstream os;
            os << "H={";
            for (std::size_t i = 0; i < r.H.elems.size(); ++i)
                os << (i ? "," : "") << G.label(r.H.elems[i]);
            os << "}, K={";
            for (std::size_t i = 0; i < r.K.elems.size(); ++i)
                os << (i ? "," : "") << G.label(r.K.elems[i]);
            os << "}";
            found.push_back(os.str());
        }
        throw NotStronglyMonomialOrIncomplete(
            "strong Shoda pairs cover only part of the group algebra", std::move(found),
            search.residual.to_string());
    }
    return search;
}

std::vector<ShodaPairRecord> complete_strong_shoda_set(const FiniteGroup& G,
                                                       const AbelianField& F) {
    const StrongPairSearch& search = require_complete_search(G);
    std::vector<ShodaPairRecord> out;
    for (const StrongPairRecord& r : search.pairs) {
        const int k = r.section.k;
        GaloisImage I = galois_image(F, k);
        Subgroup E = stabilizer_EF(G, F, r.section);
        if (!subset(r.H, E) || !subset(E, r.N))
            throw VerificationFailed("stabilizer must sit between H and N_G(K)");
        std::vector<long> joint_gens = I.residues;
        joint_gens.insert(joint_gens.end(), r.conj_image.begin(), r.conj_image.end());
        std::vector<long> J = unit_subgroup(k, joint_gens);
        std::vector<CyclotomicClass> classes = cyclotomic_classes(F, k);
        std::vector<std::size_t> reps;
        for (long e : units_mod(k)) {
            long least = e;
            for (long j : J) least = std::min(least, mul_mod(e, j, k));
            if (least != e) continue;
            for (std::size_t ci = 0; ci < classes.size(); ++ci) {
                if (std::binary_search(classes[ci].exponents.begin(),
                                       classes[ci].exponents.end(), e)) {
                    reps.push_back(ci);
                    break;
                }
            }
        }
        ShodaPairRecord rec{r.H,     r.K,
                            k,       r.N,
                            std::move(E), r.section,
                            r.conj_image, std::move(J),
                            std::move(classes), std::move(reps),
                            r.e_rat};
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace wk
