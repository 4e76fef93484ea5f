#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "wedderkit/group.hpp"

using namespace wk;

namespace {

// Independent subgroup enumerator: closures of all seed sets of size <= 3.
// Every subgroup of the groups used below is generated by at most 3
// elements, so this finds the full lattice.
std::set<std::vector<char>> brute_subgroups(const FiniteGroup& G) {
    const int n = G.order();
    auto close = [&](std::vector<Elt> seeds) {
        std::vector<char> in(n, 0);
        in[0] = 1;
        for (Elt s : seeds) in[s] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (Elt a = 0; a < n; ++a) {
                if (!in[a]) continue;
                for (Elt b = 0; b < n; ++b) {
                    if (!in[b]) continue;
                    Elt c = G.mul(a, b);
                    if (!in[c]) {
                        in[c] = 1;
                        changed = true;
                    }
                }
            }
        }
        return in;
    };
    std::set<std::vector<char>> out;
    out.insert(close({}));
    for (Elt a = 0; a < n; ++a) {
        out.insert(close({a}));
        for (Elt b = a + 1; b < n; ++b) {
            out.insert(close({a, b}));
            for (Elt c = b + 1; c < n; ++c) out.insert(close({a, b, c}));
        }
    }
    return out;
}

FiniteGroup s3() { return FiniteGroup::metacyclic(3, 2, 0, 2); }
FiniteGroup q8() { return FiniteGroup::metacyclic(4, 2, 2, 3); }
FiniteGroup d8() { return FiniteGroup::metacyclic(4, 2, 0, 3); }

}  // namespace

TEST_CASE("metacyclic constructor basics") {
    FiniteGroup G = s3();
    CHECK(G.order() == 6);
    // index j*m + i: a = 1, b = 3, a*b = 4
    CHECK(G.label(0) == "1");
    CHECK(G.label(1) == "a");
    CHECK(G.label(3) == "b");
    CHECK(G.label(4) == "a*b");
    CHECK(G.element_order(1) == 3);
    CHECK(G.element_order(3) == 2);
    // b^-1 a b = a^2
    CHECK(G.conj(1, 3) == 2);
    CHECK(G.exponent() == 6);

    FiniteGroup Q = q8();
    CHECK(Q.order() == 8);
    // exactly one involution in Q8
    int invol = 0;
    for (Elt g = 1; g < 8; ++g)
        if (Q.element_order(g) == 2) ++invol;
    CHECK(invol == 1);
    CHECK(Q.exponent() == 4);
    // b^2 = a^2
    CHECK(Q.mul(4, 4) == 2);

    CHECK_THROWS_AS(FiniteGroup::metacyclic(6, 2, 0, 2), InvalidParameters);  // r not a unit
    CHECK_THROWS_AS(FiniteGroup::metacyclic(5, 2, 0, 2), InvalidParameters);  // r^n != 1
    CHECK_THROWS_AS(FiniteGroup::metacyclic(4, 2, 1, 3), InvalidParameters);  // t(r-1) != 0
}

TEST_CASE("abelian constructor and orders") {
    FiniteGroup G = FiniteGroup::abelian({2, 4});
    CHECK(G.order() == 8);
    CHECK(G.exponent() == 4);
    CHECK(G.label(1) == "g1");
    CHECK(G.label(2) == "g2");
    CHECK(G.label(3) == "g1*g2");
    for (Elt a = 0; a < 8; ++a)
        for (Elt b = 0; b < 8; ++b) CHECK(G.mul(a, b) == G.mul(b, a));
    CHECK_THROWS_AS(FiniteGroup::abelian({0, 2}), InvalidParameters);
}

TEST_CASE("permutation closure, BFS order and validation") {
    FiniteGroup G = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}});
    CHECK(G.order() == 6);
    CHECK(G.label(0) == "()");
    CHECK(G.label(1) == "(0 1 2)");
    CHECK(G.label(2) == "(0 1)");
    CHECK(G.element_order(1) == 3);

    CHECK_THROWS_AS(FiniteGroup::from_permutations({{0, 0, 1}}), NotAPermutation);
    CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 0}, {1, 2, 0}}), NotAPermutation);
    CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 2, 3, 4, 5, 6, 0}}, 5),
                    OrderBoundExceeded);

    FiniteGroup T = FiniteGroup::from_permutations({});
    CHECK(T.order() == 1);
}

TEST_CASE("table constructor validation") {
    FiniteGroup C3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(C3.order() == 3);
    CHECK(C3.element_order(1) == 3);

    // identity must be element 0
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InvalidParameters);
    // not a latin square
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InvalidParameters);
    // latin square with identity but not associative (order-5 loop)
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    InvalidParameters);
}

TEST_CASE("associativity spot check on dihedral of order 16") {
    FiniteGroup G = FiniteGroup::metacyclic(8, 2, 0, 7);
    for (Elt a = 0; a < 16; ++a)
        for (Elt b = 0; b < 16; ++b)
            for (Elt c = 0; c < 16; ++c) CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
}

TEST_CASE("subgroup lattice matches brute-force closure oracle") {
    struct Row {
        FiniteGroup G;
        int expected;
    };
    std::vector<Row> rows;
    rows.push_back({s3(), 6});
    rows.push_back({FiniteGroup::abelian({4}), 3});
    rows.push_back({q8(), 6});
    rows.push_back({d8(), 10});
    rows.push_back({FiniteGroup::abelian({2, 4}), 8});
    rows.push_back({FiniteGroup::abelian({12}), 6});
    for (const Row& row : rows) {
        const auto& subs = all_subgroups(row.G);
        CHECK(static_cast<int>(subs.size()) == row.expected);
        auto oracle = brute_subgroups(row.G);
        CHECK(subs.size() == oracle.size());
        for (const Subgroup& S : subs) {
            std::vector<char> in(row.G.order(), 0);
            for (Elt g : S.elems) in[g] = 1;
            CHECK(oracle.count(in) == 1);
        }
        // sorted by (order, elements), Lagrange holds
        for (std::size_t i = 1; i < subs.size(); ++i) {
            bool ordered = subs[i - 1].order() < subs[i].order() ||
                           (subs[i - 1].order() == subs[i].order() &&
                            subs[i - 1].elems < subs[i].elems);
            CHECK(ordered);
        }
        for (const Subgroup& S : subs) CHECK(row.G.order() % S.order() == 0);
    }
}

TEST_CASE("subgroup order bound") {
    FiniteGroup G = s3();
    CHECK_THROWS_AS(all_subgroups(G, 4), OrderBoundExceeded);
}

TEST_CASE("normalizer and centralizer") {
    FiniteGroup G = s3();
    Subgroup B = cyclic_subgroup(G, 3);  // <b>
    Subgroup N = normalizer(G, B);
    CHECK(N.order() == 2);
    CHECK(N.contains(3));

    Subgroup A = cyclic_subgroup(G, 1);  // <a>
    CHECK(normalizer(G, A).order() == 6);

    Subgroup C = centralizer_elt(G, 3);
    CHECK(C.elems == std::vector<Elt>({0, 3}));

    FiniteGroup P = FiniteGroup::direct_product(FiniteGroup::abelian({3}), q8());
    int central = 0;
    for (Elt g = 0; g < P.order(); ++g)
        if (centralizer_elt(P, g).order() == P.order()) ++central;
    CHECK(central == 6);  // Z(C3 x Q8) = C3 x Z(Q8)
}

TEST_CASE("commutator closure") {
    FiniteGroup G = s3();
    Subgroup A = cyclic_subgroup(G, 1);
    Subgroup S = commutator_closure(G, A, 3);
    CHECK(S == A);
    Subgroup T = commutator_closure(G, A, 1);  // [A, a] = 1
    CHECK(T.order() == 1);
}

TEST_CASE("quotient is a homomorphic image with canonical coset order") {
    FiniteGroup G = s3();
    Subgroup A = cyclic_subgroup(G, 1);
    Quotient Q = quotient(G, A);
    CHECK(Q.group.order() == 2);
    CHECK(Q.reps[0] == 0);
    for (Elt g = 0; g < 6; ++g)
        for (Elt h = 0; h < 6; ++h)
            CHECK(Q.proj[G.mul(g, h)] == Q.group.mul(Q.proj[g], Q.proj[h]));

    Subgroup B = cyclic_subgroup(G, 3);
    CHECK_THROWS_AS(quotient(G, B), NotNormal);

    FiniteGroup Q8g = q8();
    Subgroup Z = cyclic_subgroup(Q8g, 2);  // center a^2
    Quotient QQ = quotient(Q8g, Z);
    CHECK(QQ.group.order() == 4);
    CHECK(QQ.group.exponent() == 2);  // Q8 / Z = C2 x C2
}

TEST_CASE("conjugacy classes partition the group") {
    FiniteGroup G = s3();
    auto cls = conjugacy_classes(G);
    CHECK(cls.size() == 3);
    std::vector<int> sizes;
    for (const auto& c : cls) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>({1, 2, 3}));

    auto qcls = conjugacy_classes(q8());
    CHECK(qcls.size() == 5);

    int total = 0;
    std::set<Elt> seen;
    for (const auto& c : qcls) {
        total += static_cast<int>(c.size());
        for (Elt g : c) CHECK(seen.insert(g).second);
    }
    CHECK(total == 8);
}

TEST_CASE("minimal normal subgroups above a base") {
    FiniteGroup G = s3();
    auto mins = minimal_normal_subgroups_above(G, trivial_subgroup(G));
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 3);

    FiniteGroup V = FiniteGroup::abelian({2, 2});
    auto vm = minimal_normal_subgroups_above(V, trivial_subgroup(V));
    CHECK(vm.size() == 3);

    FiniteGroup C4 = FiniteGroup::abelian({4});
    auto above = minimal_normal_subgroups_above(C4, cyclic_subgroup(C4, 2));
    REQUIRE(above.size() == 1);
    CHECK(above[0].order() == 4);
}

TEST_CASE("subgroup_as_group reindexes faithfully") {
    FiniteGroup G = s3();
    Subgroup A = cyclic_subgroup(G, 1);
    SubgroupGroup S = subgroup_as_group(G, A);
    CHECK(S.group.order() == 3);
    CHECK(S.to_parent[0] == 0);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(S.to_parent[S.group.mul(x, y)] == G.mul(S.to_parent[x], S.to_parent[y]));
    CHECK(S.from_parent[3] == -1);
}

TEST_CASE("powers, inverses and generating sets") {
    FiniteGroup G = s3();
    CHECK(G.power(1, -1) == 2);
    CHECK(G.power(1, 5) == 2);
    CHECK(G.power(3, 0) == 0);
    for (Elt g = 0; g < 6; ++g) CHECK(G.mul(g, G.inv(g)) == 0);

    auto gens = small_generating_set(G, full_subgroup(G));
    CHECK(gens.size() == 2);
    CHECK(closure(G, gens).order() == 6);

    CHECK(G.generators().size() == 2);
}

TEST_CASE("conjugate subgroup and intersection") {
    FiniteGroup G = d8();
    Subgroup R = cyclic_subgroup(G, 4);  // a reflection <b>
    Subgroup Rc = conjugate_subgroup(G, R, 1);
    CHECK(Rc.order() == 2);
    CHECK(Rc != R);
    Subgroup I = intersect(G, R, Rc);
    CHECK(I.order() == 1);
}
