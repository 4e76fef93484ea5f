#include "wedderkit/wedderburn.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "wedderkit/numutil.hpp"

namespace wk {

namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_abelian_group(const FiniteGroup& G) {
    for (Elt a = 0; a < G.order(); ++a)
        for (Elt b = a + 1; b < G.order(); ++b)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

// Orbits of the conjugacy classes under g -> g^t for the given residues
// (taken mod the group exponent).
long class_orbit_count(const FiniteGroup& G, const std::vector<long>& residues) {
    const auto classes = conjugacy_classes(G);
    std::vector<int> class_of(G.order(), -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Elt g : classes[i]) class_of[g] = static_cast<int>(i);
    std::vector<int> parent(classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const Elt rep = classes[i][0];
        for (long t : residues) {
            const int a = find(static_cast<int>(i));
            const int b = find(class_of[G.power(rep, t)]);
            if (a != b) parent[a] = b;
        }
    }
    long roots = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    return roots;
}

}  // namespace

std::string group_table_hash(const FiniteGroup& G) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint32_t>(G.order()));
    for (int v : G.flat_table()) mix(static_cast<std::uint32_t>(v));
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

ComponentDescriptor component_descriptor(const FiniteGroup& G, const AbelianField& F,
                                         const ShodaPairRecord& rec, std::size_t class_index,
                                         std::vector<Elt> coset_reps) {
    if (class_index >= rec.classes.size())
        throw InvalidParameters("component descriptor: class index out of range");
    const CyclicSection& s = rec.section;
    const int k = rec.k;

    SubgroupGroup SE = subgroup_as_group(G, rec.E);
    std::vector<Elt> h_image;
    h_image.reserve(rec.H.elems.size());
    for (Elt g : rec.H.elems) h_image.push_back(SE.from_parent[g]);
    Quotient Qt = quotient(SE.group, subgroup_from_elements(SE.group, std::move(h_image)));
    const int d = Qt.group.order();

    std::vector<Elt> reps(d);
    if (coset_reps.empty()) {
        for (int x = 0; x < d; ++x) reps[x] = SE.to_parent[Qt.reps[x]];
    } else {
        if (static_cast<int>(coset_reps.size()) != d)
            throw InvalidParameters("coset section has the wrong length");
        for (int x = 0; x < d; ++x) {
            const Elt g = coset_reps[x];
            if (g < 0 || g >= G.order() || SE.from_parent[g] < 0)
                throw InvalidParameters("coset representative lies outside the stabilizer");
            if (Qt.proj[SE.from_parent[g]] != x)
                throw InvalidParameters("coset representative is in the wrong coset");
        }
        reps = std::move(coset_reps);
    }

    std::vector<long> action(d);
    for (int x = 0; x < d; ++x) {
        const int i = s.dlog[G.conj(s.gen, reps[x])];
        if (i < 0) throw VerificationFailed("grading action left the section");
        action[x] = i;
    }
    std::vector<std::vector<long>> twisting(d, std::vector<long>(d, 0));
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            const Elt prod = G.mul(reps[x], reps[y]);
            const int j = s.dlog[G.mul(G.inv(reps[Qt.group.mul(x, y)]), prod)];
            if (j < 0) throw VerificationFailed("twisting element left the section");
            twisting[x][y] = j;
        }
    }

    const GaloisImage I = galois_image(F, k);
    for (int x = 0; x < d; ++x)
        if (!I.contains(action[x]))
            throw VerificationFailed("grading action leaves the Galois image of the field");
    {
        std::vector<long> sorted = action;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw VerificationFailed("grading action is not faithful");
    }
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            if (action[Qt.group.mul(x, y)] != mul_mod(action[x], action[y], k))
                throw VerificationFailed("grading action is not a homomorphism");
    for (int x = 0; x < d; ++x) {
        for (int y = 0; y < d; ++y) {
            for (int z = 0; z < d; ++z) {
                const long lhs = mod_reduce(
                    twisting[Qt.group.mul(x, y)][z] + action[z] * twisting[x][y], k);
                const long rhs =
                    mod_reduce(twisting[x][Qt.group.mul(y, z)] + twisting[y][z], k);
                if (lhs != rhs)
                    throw VerificationFailed("twisting fails the associativity identity");
            }
        }
    }

    std::vector<long> image = action;
    std::sort(image.begin(), image.end());
    return ComponentDescriptor{rec.H,
                               rec.K,
                               rec.classes[class_index],
                               G.order() / rec.E.order(),
                               k,
                               Qt.group,
                               std::move(reps),
                               std::move(action),
                               std::move(twisting),
                               CenterSpec{k, std::move(image)}};
}

ComponentCount component_count(const FiniteGroup& G, const AbelianField& F) {
    const auto recs = complete_strong_shoda_set(G, F);
    ComponentCount out;
    for (const ShodaPairRecord& rec : recs) {
        const long phik = euler_phi(rec.k);
        const long ik = galois_image(F, rec.k).size();
        const long num = phik * rec.E.order();
        const long den = ik * rec.N.order();
        if (num % den != 0)
            throw VerificationFailed("pair component count is not an integer");
        const long phi_form = num / den;
        const long degree_form = intersect_with_cyclotomic_degree(F, rec.k, rec.conj_image);
        if (phi_form != degree_form)
            throw VerificationFailed("the two component-count formulas disagree");
        if (phi_form != static_cast<long>(rec.orbit_reps.size()))
            throw VerificationFailed("component count disagrees with the class-orbit listing");
        out.pairs.push_back(PairComponentCount{rec.H, rec.K, rec.k, phi_form, degree_form});
        out.total += phi_form;
    }
    return out;
}

long f_class_count_oracle(const FiniteGroup& G, const AbelianField& F) {
    return class_orbit_count(G, galois_image(F, G.exponent()).residues);
}

MinimalityReport minimality_report(const FiniteGroup& G, const AbelianField& F) {
    const auto recs = complete_strong_shoda_set(G, F);
    MinimalityReport out;
    out.sufficient_condition = true;
    bool all_single = true;
    for (const ShodaPairRecord& rec : recs) {
        const long phik = euler_phi(rec.k);
        const long ik = galois_image(F, rec.k).size();
        PairMinimality pm{rec.H, rec.K, rec.k, false, false, false};
        pm.joint_image_full = (static_cast<long>(rec.joint_image.size()) == phik);
        pm.index_product_matches = (phik * rec.E.order() == ik * rec.N.order());
        pm.intersection_trivial =
            (intersect_with_cyclotomic_degree(F, rec.k, rec.conj_image) == 1);
        if (pm.joint_image_full != pm.index_product_matches ||
            pm.index_product_matches != pm.intersection_trivial)
            throw VerificationFailed("equivalent pair minimality conditions disagree");
        all_single = all_single && pm.joint_image_full;
        out.sufficient_condition = out.sufficient_condition && (phik == ik);
        out.pairs.push_back(std::move(pm));
    }
    out.minimal = all_single;
    const ComponentCount cc = component_count(G, F);
    if ((cc.total == static_cast<long>(recs.size())) != out.minimal)
        throw VerificationFailed("pair conditions disagree with the component totals");
    if (out.sufficient_condition && !out.minimal)
        throw VerificationFailed("per-pair full Galois image failed to force minimality");
    out.abelian = is_abelian_group(G);
    const int e = G.exponent();
    out.abelian_criterion = (galois_image(F, e).size() == euler_phi(e));
    if (out.abelian && out.abelian_criterion != out.minimal)
        throw VerificationFailed("abelian minimality criterion disagrees with the pair data");
    return out;
}

DecompositionReport wedderburn_decomposition(const FiniteGroup& G, const AbelianField& F) {
    const auto recs = complete_strong_shoda_set(G, F);
    const int L = ambient_level(G, F);
    std::vector<ComponentDescriptor> comps;
    std::vector<AlgebraElement> idems;
    for (const ShodaPairRecord& rec : recs) {
        for (std::size_t ci : rec.orbit_reps) {
            comps.push_back(component_descriptor(G, F, rec, ci));
            idems.push_back(e_class(G, F, rec.section, rec.classes[ci], L));
        }
    }
    AlgebraElement sum = AlgebraElement::zero(G, L);
    for (const AlgebraElement& e : idems) sum = sum + e;
    if (sum != AlgebraElement::one(G, L))
        throw VerificationFailed("component idempotents do not sum to one");
    for (std::size_t i = 0; i < idems.size(); ++i) {
        if (idems[i] * idems[i] != idems[i])
            throw VerificationFailed("component support element is not idempotent");
        for (std::size_t j = i + 1; j < idems.size(); ++j)
            if (!(idems[i] * idems[j]).is_zero())
                throw VerificationFailed("component idempotents are not orthogonal");
    }
    long dim = 0;
    for (const ComponentDescriptor& c : comps) {
        const long center_degree = galois_image(F, c.cyclo_order).size();
        dim += static_cast<long>(c.matrix_degree) * c.matrix_degree *
               c.grading_group.order() * center_degree;
    }
    if (dim != G.order())
        throw VerificationFailed("component dimensions do not add up to the group order");
    const ComponentCount cc = component_count(G, F);
    const long oracle = f_class_count_oracle(G, F);
    if (static_cast<long>(comps.size()) != cc.total || cc.total != oracle)
        throw VerificationFailed("component counts disagree across methods");
    const MinimalityReport mr = minimality_report(G, F);
    const long count = static_cast<long>(comps.size());
    return DecompositionReport{F, group_table_hash(G), std::move(comps), count, oracle,
                               mr.minimal};
}

MetacyclicVerdict metacyclic_minimality(int m, int n, int t, int r, const AbelianField& F) {
    const FiniteGroup G = FiniteGroup::metacyclic(m, n, t, r);
    MinimalityReport general = minimality_report(G, F);
    const bool split = mod_reduce(t, m) == 0;
    const long rm = mod_reduce(r, m);
    MetacyclicVerdict v{false, false, false, false, false, std::move(general)};
    long p = 0;
    int e = 0;
    if (split && is_prime(m) && n % m != 0) {
        v.prime_base_shape = true;
        const long o = order_mod(rm, m);
        const long cyc = n / o;  // order of the centralizer part of <b>
        v.first_condition = (intersect_with_cyclotomic_degree(F, n, {1}) == 1);
        const long qk = m * cyc;
        long srem = 0;  // residue acting as r on the m-part and trivially on the rest
        for (long x = 0; x < qk; ++x) {
            if (x % m == rm && x % cyc == 1 % cyc) {
                srem = x;
                break;
            }
        }
        v.second_condition =
            (intersect_with_cyclotomic_degree(F, static_cast<int>(qk), {srem}) == 1);
        v.minimal = v.first_condition && v.second_condition;
    } else if (split && is_prime_power(m, &p, &e) && is_prime_power(n, nullptr, nullptr) &&
               n % p != 0 && order_mod(rm, m) == n) {
        v.faithful_shape = true;
        v.first_condition = (intersect_with_cyclotomic_degree(F, n, {1}) == 1);
        v.second_condition = (intersect_with_cyclotomic_degree(F, m, {rm}) == 1);
        v.minimal = v.first_condition && v.second_condition;
    } else {
        throw HypothesesNotMet("metacyclic parameters fit no covered presentation shape");
    }
    if (v.minimal != v.general.minimal)
        throw VerificationFailed("field conditions disagree with the general machinery");
    return v;
}

namespace {

FiniteFieldReport finite_field_core(const FiniteGroup& G, long q) {
    long p = 0;
    int e = 0;
    if (!is_prime_power(q, &p, &e))
        throw InvalidParameters("finite field order must be a prime power");
    if (G.order() % p == 0)
        throw CharacteristicDividesOrder("field characteristic divides the group order");
    const StrongPairSearch& search = require_complete_search(G);
    FiniteFieldReport out;
    out.q = q;
    out.sufficient_condition = true;
    bool all_single = true;
    for (const StrongPairRecord& rec : search.pairs) {
        const int k = rec.section.k;
        const long phik = euler_phi(k);
        const long o = (k == 1) ? 1 : order_mod(q, k);
        const std::vector<long> powers = unit_subgroup(k, {mod_reduce(q, k)});
        const Subgroup Eq = stabilizer_with_exponents(G, rec.section, powers);
        const long num = phik * Eq.order();
        const long den = o * rec.N.order();
        if (num % den != 0)
            throw VerificationFailed("pair component count is not an integer");
        const long count = num / den;
        all_single = all_single && (count == 1);
        out.sufficient_condition = out.sufficient_condition && (phik == o);
        out.pairs.push_back(FiniteFieldPairCount{rec.H, rec.K, k, o, count});
        out.total += count;
    }
    const int ge = G.exponent();
    out.oracle = class_orbit_count(G, unit_subgroup(ge, {mod_reduce(q, ge)}));
    if (out.total != out.oracle)
        throw VerificationFailed("component count disagrees with the class-orbit oracle");
    out.minimal = all_single;
    if (out.sufficient_condition && !out.minimal)
        throw VerificationFailed("per-pair order condition failed to force minimality");
    out.abelian = is_abelian_group(G);
    out.abelian_criterion = (euler_phi(ge) == ((ge == 1) ? 1 : order_mod(q, ge)));
    if (out.abelian && out.abelian_criterion != out.minimal)
        throw VerificationFailed("abelian minimality criterion disagrees with the pair data");
    return out;
}

}  // namespace

FiniteFieldReport finite_field_component_count(const FiniteGroup& G, long q) {
    return finite_field_core(G, q);
}

FiniteFieldReport finite_field_minimality(const FiniteGroup& G, long q) {
    return finite_field_core(G, q);
}

int rank_k_invariant(const FiniteGroup& G, const Subgroup& H, const Subgroup& K, Elt h) {
    if (h < 0 || h >= G.order() || !H.contains(h))
        throw InvalidParameters("rank invariant: element must lie in H");
    std::vector<Elt> seeds = K.elems;
    seeds.push_back(h);
    if (closure(G, seeds) != H)
        throw InvalidParameters("rank invariant: element does not generate H over K");
    const Subgroup N = normalizer(G, K);
    for (Elt n : N.elems)
        if (K.contains(G.mul(h, G.conj(h, n)))) return 1;
    return 2;
}

int rank_k_invariant(const FiniteGroup& G, const CyclicSection& s) {
    return rank_k_invariant(G, s.H, s.K, s.gen);
}

CentralUnitRank central_unit_rank(const FiniteGroup& G, const AbelianField& F) {
    const auto recs = complete_strong_shoda_set(G, F);
    const auto sig = signature(F);
    const auto classes = conjugacy_classes(G);
    std::vector<int> class_of(G.order(), -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Elt g : classes[i]) class_of[g] = static_cast<int>(i);
    long real_orbits = 0;
    std::vector<char> seen(classes.size(), 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (seen[i]) continue;
        seen[i] = 1;
        seen[class_of[G.inv(classes[i][0])]] = 1;
        ++real_orbits;
    }
    CentralUnitRank out;
    out.real_embeddings = sig.first;
    out.complex_pairs = sig.second;
    out.real_class_orbits = real_orbits;
    out.class_count = static_cast<long>(classes.size());
    Rat total = frac(sig.first - 1, 1) * frac(real_orbits, 1) +
                frac(sig.second, 1) * frac(out.class_count, 1);
    for (const ShodaPairRecord& rec : recs) {
        const int kp = rank_k_invariant(G, rec.section);
        const long ik = galois_image(F, rec.k).size();
        Rat term = frac(euler_phi(rec.k), rec.N.order()) *
                   (frac(rec.H.order(), kp) - frac(rec.E.order(), ik));
        total += term;
        out.pairs.push_back(PairRankTerm{rec.H, rec.K, rec.k, kp, std::move(term)});
    }
    if (total.get_den() != 1)
        throw VerificationFailed("central unit rank must be an integer");
    out.rank = static_cast<long>(total.get_num().get_si());
    const long components = component_count(G, F).total;
    if (out.rank != sig.first * real_orbits + sig.second * out.class_count - components)
        throw VerificationFailed("central unit rank fails the embedding cross-check");
    return out;
}

}  // namespace wk
