#include <doctest.h>

#include "wedderkit/errors.hpp"
#include "wedderkit/json_io.hpp"

using namespace wk;

namespace {

Json J(const char* text) { return Json::parse(text); }

std::vector<std::string> keys_of(const Json& obj) {
    std::vector<std::string> out;
    for (auto it = obj.begin(); it != obj.end(); ++it) out.push_back(it.key());
    return out;
}

}  // namespace

TEST_CASE("group descriptions build the advertised groups") {
    SUBCASE("metacyclic") {
        FiniteGroup G = group_from_json(J(R"({"kind":"metacyclic","m":4,"n":2,"t":2,"r":3})"));
        FiniteGroup direct = FiniteGroup::metacyclic(4, 2, 2, 3);
        CHECK(G.order() == 8);
        CHECK(group_table_hash(G) == group_table_hash(direct));
    }
    SUBCASE("abelian") {
        FiniteGroup G = group_from_json(J(R"({"kind":"abelian","invariants":[2,4]})"));
        CHECK(group_table_hash(G) == group_table_hash(FiniteGroup::abelian({2, 4})));
    }
    SUBCASE("permutations") {
        FiniteGroup G = group_from_json(
            J(R"({"kind":"permutations","generators":[[1,2,0],[1,0,2]]})"));
        FiniteGroup direct = FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}});
        CHECK(G.order() == 6);
        CHECK(group_table_hash(G) == group_table_hash(direct));
    }
    SUBCASE("table with labels") {
        Json j = Json::object();
        j["kind"] = "table";
        FiniteGroup source = FiniteGroup::metacyclic(3, 2, 0, 2);
        Json rows = Json::array();
        for (int a = 0; a < source.order(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < source.order(); ++b) row.push_back(source.mul(a, b));
            rows.push_back(row);
        }
        j["table"] = rows;
        j["labels"] = Json::array({"e", "a", "aa", "b", "ab", "aab"});
        FiniteGroup G = group_from_json(j);
        CHECK(group_table_hash(G) == group_table_hash(source));
        CHECK(G.label(2) == "aa");
    }
}

TEST_CASE("malformed group descriptions are rejected with named complaints") {
    CHECK_THROWS_AS(group_from_json(J(R"([1,2,3])")), InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"m":3})")), InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"snowflake"})")), InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"metacyclic","m":3,"n":2,"t":0})")),
                    InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"metacyclic","m":"3","n":2,"t":0,"r":2})")),
                    InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"abelian"})")), InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"abelian","invariants":[2,"4"]})")),
                    InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"permutations","generators":[]})")),
                    InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"table","table":[[0,1],[1,0]],"labels":"ab"})")),
                    InvalidParameters);
    CHECK_THROWS_AS(group_from_json(J(R"({"kind":"table","table":[[0,1],[1,0]],"labels":[1,2]})")),
                    InvalidParameters);
}

TEST_CASE("the order bound applies to every construction kind") {
    Json big = J(R"({"kind":"abelian","invariants":[300]})");
    CHECK_THROWS_AS(group_from_json(big), OrderBoundExceeded);
    CHECK(group_from_json(big, 300).order() == 300);
    Json cycle = J(R"({"kind":"permutations","generators":[[1,2,3,4,5,6,7,8,0]]})");
    CHECK_THROWS_AS(group_from_json(cycle, 8), OrderBoundExceeded);
    CHECK(group_from_json(cycle, 9).order() == 9);
}

TEST_CASE("group summaries carry the order and the table hash") {
    FiniteGroup G = FiniteGroup::metacyclic(3, 2, 0, 2);
    Json s = group_summary(G);
    CHECK(s["order"] == 6);
    CHECK(s["id"] == group_table_hash(G));
    CHECK(keys_of(s) == std::vector<std::string>{"order", "id"});
}

TEST_CASE("decomposition reports serialize with a fixed key order") {
    FiniteGroup G = FiniteGroup::metacyclic(4, 2, 2, 3);
    AbelianField F = AbelianField::rationals();
    DecompositionReport rep = wedderburn_decomposition(G, F);
    CentralUnitRank rank = central_unit_rank(G, F);
    Json out = decomposition_to_json(G, rep, rank);

    CHECK(keys_of(out) == std::vector<std::string>{"field", "group", "components", "count",
                                                   "oracle", "minimal", "rank"});
    CHECK(out["field"] == "Q");
    CHECK(out["count"] == 5);
    CHECK(out["oracle"] == 5);
    CHECK(out["minimal"] == true);
    CHECK(out["rank"] == 0);
    REQUIRE(out["components"].size() == 5);
    for (const Json& c : out["components"])
        CHECK(keys_of(c) == std::vector<std::string>{"pair", "degree", "k", "action",
                                                     "twisting"});

    bool saw_quaternion_component = false;
    for (const Json& c : out["components"]) {
        if (c["k"] != 4) continue;
        saw_quaternion_component = true;
        CHECK(c["degree"] == 1);
        CHECK(c["action"] == J(R"({"0":1,"1":3})"));
        CHECK(c["twisting"]["1"]["1"] == 2);
    }
    CHECK(saw_quaternion_component);

    SUBCASE("serialization is deterministic byte for byte") {
        std::string once = out.dump(2);
        std::string again = decomposition_to_json(G, wedderburn_decomposition(G, F),
                                                  central_unit_rank(G, F)).dump(2);
        CHECK(once == again);
        CHECK(Json::parse(once).dump(2) == once);
    }
    SUBCASE("a mismatched group is refused") {
        FiniteGroup other = FiniteGroup::abelian({8});
        CHECK_THROWS_AS(decomposition_to_json(other, rep, rank), GroupMismatch);
        CHECK_THROWS_AS(decomposition_to_text(other, rep, rank), GroupMismatch);
    }
    SUBCASE("the text form shows the same headline numbers") {
        std::string text = decomposition_to_text(G, rep, rank);
        CHECK(text.find("count: 5, oracle: 5, minimal: yes, rank: 0") != std::string::npos);
        CHECK(text.find("action: 1 3") != std::string::npos);
        CHECK(text.find("twisting: [0 0] [0 2]") != std::string::npos);
    }
}

TEST_CASE("count, minimality, rank, and finite field serializers carry the struct data") {
    FiniteGroup C4 = FiniteGroup::abelian({4});
    AbelianField F4 = parse_field("Q(zeta_4)");

    SUBCASE("count") {
        ComponentCount c = component_count(C4, F4);
        Json out = count_to_json(C4, F4, c);
        CHECK(keys_of(out) == std::vector<std::string>{"field", "group", "count", "pairs"});
        CHECK(out["field"] == "Q(zeta_4)");
        CHECK(out["count"] == 4);
        REQUIRE(out["pairs"].size() == c.pairs.size());
        long sum = 0;
        for (const Json& p : out["pairs"]) sum += p["count"].get<long>();
        CHECK(sum == 4);
        std::string text = count_to_text(C4, F4, c);
        CHECK(text.find("count: 4") != std::string::npos);
    }
    SUBCASE("minimality") {
        MinimalityReport m = minimality_report(C4, F4);
        Json out = minimality_to_json(C4, F4, m);
        CHECK(keys_of(out) == std::vector<std::string>{"field", "group", "minimal",
                                                       "sufficient_condition", "abelian",
                                                       "abelian_criterion", "pairs"});
        CHECK(out["minimal"] == false);
        CHECK(out["abelian"] == true);
        for (const Json& p : out["pairs"])
            CHECK(keys_of(p) == std::vector<std::string>{"pair", "k", "joint_image_full",
                                                         "index_product_matches",
                                                         "intersection_trivial"});
        std::string text = minimality_to_text(C4, F4, m);
        CHECK(text.find("minimal: no") != std::string::npos);
        CHECK(text.find("abelian: yes") != std::string::npos);
    }
    SUBCASE("rank over Q keeps exact rational terms") {
        FiniteGroup C5 = FiniteGroup::abelian({5});
        AbelianField Q = AbelianField::rationals();
        CentralUnitRank r = central_unit_rank(C5, Q);
        Json out = rank_to_json(C5, Q, r);
        CHECK(keys_of(out) == std::vector<std::string>{"field", "group", "rank",
                                                       "real_embeddings", "complex_pairs",
                                                       "real_class_orbits", "class_count",
                                                       "pairs"});
        CHECK(out["rank"] == 1);
        CHECK(out["real_class_orbits"] == 3);
        CHECK(out["class_count"] == 5);
        bool saw_k5 = false;
        for (const Json& p : out["pairs"]) {
            if (p["k"] != 5) continue;
            saw_k5 = true;
            CHECK(p["k_pair"] == 2);
            CHECK(p["term"] == "1");
        }
        CHECK(saw_k5);
        std::string text = rank_to_text(C5, Q, r);
        CHECK(text.find("rank: 1") != std::string::npos);
        CHECK(text.find("k_pair = 2, term = 1") != std::string::npos);
    }
    SUBCASE("finite field") {
        FiniteGroup C7 = FiniteGroup::abelian({7});
        FiniteFieldReport rep = finite_field_component_count(C7, 2);
        Json out = ffcount_to_json(C7, rep);
        CHECK(keys_of(out) == std::vector<std::string>{"q", "group", "count", "oracle",
                                                       "minimal", "sufficient_condition",
                                                       "abelian", "abelian_criterion",
                                                       "pairs"});
        CHECK(out["q"] == 2);
        CHECK(out["count"] == 3);
        CHECK(out["oracle"] == 3);
        CHECK(out["minimal"] == false);
        bool saw_k7 = false;
        for (const Json& p : out["pairs"]) {
            if (p["k"] != 7) continue;
            saw_k7 = true;
            CHECK(p["order_of_q"] == 3);
            CHECK(p["count"] == 2);
        }
        CHECK(saw_k7);
        std::string text = ffcount_to_text(C7, rep);
        CHECK(text.find("count: 3, oracle: 3, minimal: no") != std::string::npos);
        CHECK(text.find("order of q = 3, count = 2") != std::string::npos);
    }
}
