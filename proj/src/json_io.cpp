#include "wedderkit/json_io.hpp"

#include <limits>
#include <sstream>

#include "wedderkit/errors.hpp"

namespace wk {

namespace {

int require_int(const Json& j, const char* key, const std::string& kind) {
    auto it = j.find(key);
    if (it == j.end())
        throw InvalidParameters("group JSON: kind \"" + kind + "\" needs an integer \"" +
                                key + "\"");
    if (!it->is_number_integer())
        throw InvalidParameters("group JSON: \"" + std::string(key) +
                                "\" must be an integer");
    long v = it->get<long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InvalidParameters("group JSON: \"" + std::string(key) + "\" is out of range");
    return static_cast<int>(v);
}

const Json& require_array(const Json& j, const char* key, const std::string& kind) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_array())
        throw InvalidParameters("group JSON: kind \"" + kind + "\" needs an array \"" +
                                key + "\"");
    return *it;
}

std::vector<int> int_list(const Json& v, const char* what) {
    if (!v.is_array())
        throw InvalidParameters(std::string("group JSON: ") + what +
                                " must be an array of integers");
    std::vector<int> out;
    out.reserve(v.size());
    for (const Json& x : v) {
        if (!x.is_number_integer())
            throw InvalidParameters(std::string("group JSON: ") + what +
                                    " must contain only integers");
        long e = x.get<long>();
        if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max())
            throw InvalidParameters(std::string("group JSON: entry of ") + what +
                                    " is out of range");
        out.push_back(static_cast<int>(e));
    }
    return out;
}

Json elems_json(const Subgroup& S) {
    Json a = Json::array();
    for (Elt g : S.elems) a.push_back(g);
    return a;
}

Json pair_json(const Subgroup& H, const Subgroup& K) {
    Json p = Json::object();
    p["H"] = elems_json(H);
    p["K"] = elems_json(K);
    return p;
}

std::string elems_text(const Subgroup& S) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < S.elems.size(); ++i) {
        if (i) os << ",";
        os << S.elems[i];
    }
    os << "}";
    return os.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

void check_same_group(const FiniteGroup& G, const std::string& report_id) {
    if (group_table_hash(G) != report_id)
        throw GroupMismatch("report serialization: the group does not match the "
                            "report's table hash " + report_id);
}

std::string header_text(const std::string& field_line, const FiniteGroup& G) {
    std::ostringstream os;
    os << field_line << "\n"
       << "group: order " << G.order() << ", id " << group_table_hash(G) << "\n";
    return os.str();
}

}  // namespace

FiniteGroup group_from_json(const Json& j, int max_order) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InvalidParameters("group JSON: expected an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();

    FiniteGroup G = [&]() -> FiniteGroup {
        if (kind == "metacyclic")
            return FiniteGroup::metacyclic(require_int(j, "m", kind), require_int(j, "n", kind),
                                           require_int(j, "t", kind), require_int(j, "r", kind));
        if (kind == "abelian")
            return FiniteGroup::abelian(int_list(require_array(j, "invariants", kind),
                                                 "\"invariants\""));
        if (kind == "permutations") {
            const Json& gens = require_array(j, "generators", kind);
            if (gens.empty())
                throw InvalidParameters("group JSON: \"generators\" must be non-empty");
            std::vector<std::vector<int>> images;
            images.reserve(gens.size());
            for (const Json& p : gens) images.push_back(int_list(p, "a generator"));
            return FiniteGroup::from_permutations(images, max_order);
        }
        if (kind == "table") {
            const Json& rows = require_array(j, "table", kind);
            std::vector<std::vector<int>> table;
            table.reserve(rows.size());
            for (const Json& r : rows) table.push_back(int_list(r, "a table row"));
            std::vector<std::string> labels;
            if (j.contains("labels")) {
                const Json& lv = j["labels"];
                if (!lv.is_array())
                    throw InvalidParameters("group JSON: \"labels\" must be an array");
                for (const Json& s : lv) {
                    if (!s.is_string())
                        throw InvalidParameters("group JSON: labels must be strings");
                    labels.push_back(s.get<std::string>());
                }
            }
            return FiniteGroup::from_table(std::move(table), std::move(labels));
        }
        throw InvalidParameters("group JSON: unknown kind \"" + kind + "\"");
    }();

    if (G.order() > max_order)
        throw OrderBoundExceeded("group of order " + std::to_string(G.order()) +
                                 " exceeds the bound " + std::to_string(max_order));
    return G;
}

Json group_summary(const FiniteGroup& G) {
    Json g = Json::object();
    g["order"] = G.order();
    g["id"] = group_table_hash(G);
    return g;
}

Json decomposition_to_json(const FiniteGroup& G, const DecompositionReport& rep,
                           const CentralUnitRank& rank) {
    check_same_group(G, rep.group_id);
    Json out = Json::object();
    out["field"] = rep.field.to_string();
    out["group"] = group_summary(G);
    Json comps = Json::array();
    for (const ComponentDescriptor& c : rep.components) {
        Json cj = Json::object();
        cj["pair"] = pair_json(c.H, c.K);
        cj["degree"] = c.matrix_degree;
        cj["k"] = c.cyclo_order;
        Json act = Json::object();
        for (std::size_t x = 0; x < c.action.size(); ++x)
            act[std::to_string(x)] = c.action[x];
        cj["action"] = act;
        Json tw = Json::object();
        for (std::size_t x = 0; x < c.twisting.size(); ++x) {
            Json row = Json::object();
            for (std::size_t y = 0; y < c.twisting[x].size(); ++y)
                row[std::to_string(y)] = c.twisting[x][y];
            tw[std::to_string(x)] = row;
        }
        cj["twisting"] = tw;
        comps.push_back(cj);
    }
    out["components"] = comps;
    out["count"] = rep.count;
    out["oracle"] = rep.oracle_count;
    out["minimal"] = rep.minimal;
    out["rank"] = rank.rank;
    return out;
}

Json count_to_json(const FiniteGroup& G, const AbelianField& F, const ComponentCount& count) {
    Json out = Json::object();
    out["field"] = F.to_string();
    out["group"] = group_summary(G);
    out["count"] = count.total;
    Json pairs = Json::array();
    for (const PairComponentCount& p : count.pairs) {
        Json pj = Json::object();
        pj["pair"] = pair_json(p.H, p.K);
        pj["k"] = p.k;
        pj["count"] = p.phi_form;
        pairs.push_back(pj);
    }
    out["pairs"] = pairs;
    return out;
}

Json minimality_to_json(const FiniteGroup& G, const AbelianField& F,
                        const MinimalityReport& rep) {
    Json out = Json::object();
    out["field"] = F.to_string();
    out["group"] = group_summary(G);
    out["minimal"] = rep.minimal;
    out["sufficient_condition"] = rep.sufficient_condition;
    out["abelian"] = rep.abelian;
    out["abelian_criterion"] = rep.abelian_criterion;
    Json pairs = Json::array();
    for (const PairMinimality& p : rep.pairs) {
        Json pj = Json::object();
        pj["pair"] = pair_json(p.H, p.K);
        pj["k"] = p.k;
        pj["joint_image_full"] = p.joint_image_full;
        pj["index_product_matches"] = p.index_product_matches;
        pj["intersection_trivial"] = p.intersection_trivial;
        pairs.push_back(pj);
    }
    out["pairs"] = pairs;
    return out;
}

Json rank_to_json(const FiniteGroup& G, const AbelianField& F, const CentralUnitRank& rank) {
    Json out = Json::object();
    out["field"] = F.to_string();
    out["group"] = group_summary(G);
    out["rank"] = rank.rank;
    out["real_embeddings"] = rank.real_embeddings;
    out["complex_pairs"] = rank.complex_pairs;
    out["real_class_orbits"] = rank.real_class_orbits;
    out["class_count"] = rank.class_count;
    Json pairs = Json::array();
    for (const PairRankTerm& p : rank.pairs) {
        Json pj = Json::object();
        pj["pair"] = pair_json(p.H, p.K);
        pj["k"] = p.k;
        pj["k_pair"] = p.k_pair;
        pj["term"] = p.term.get_str();
        pairs.push_back(pj);
    }
    out["pairs"] = pairs;
    return out;
}

Json ffcount_to_json(const FiniteGroup& G, const FiniteFieldReport& rep) {
    Json out = Json::object();
    out["q"] = rep.q;
    out["group"] = group_summary(G);
    out["count"] = rep.total;
    out["oracle"] = rep.oracle;
    out["minimal"] = rep.minimal;
    out["sufficient_condition"] = rep.sufficient_condition;
    out["abelian"] = rep.abelian;
    out["abelian_criterion"] = rep.abelian_criterion;
    Json pairs = Json::array();
    for (const FiniteFieldPairCount& p : rep.pairs) {
        Json pj = Json::object();
        pj["pair"] = pair_json(p.H, p.K);
        pj["k"] = p.k;
        pj["order_of_q"] = p.order_of_q;
        pj["count"] = p.count;
        pairs.push_back(pj);
    }
    out["pairs"] = pairs;
    return out;
}

std::string decomposition_to_text(const FiniteGroup& G, const DecompositionReport& rep,
                                  const CentralUnitRank& rank) {
    check_same_group(G, rep.group_id);
    std::ostringstream os;
    os << header_text("field: " + rep.field.to_string(), G);
    os << "count: " << rep.count << ", oracle: " << rep.oracle_count << ", minimal: "
       << yn(rep.minimal) << ", rank: " << rank.rank << "\n";
    int idx = 0;
    for (const ComponentDescriptor& c : rep.components) {
        os << "component " << ++idx << ": degree " << c.matrix_degree << ", k = "
           << c.cyclo_order << ", H = " << elems_text(c.H) << ", K = " << elems_text(c.K)
           << "\n";
        os << "  action:";
        for (long a : c.action) os << " " << a;
        os << "\n  twisting:";
        for (const std::vector<long>& row : c.twisting) {
            os << " [";
            for (std::size_t y = 0; y < row.size(); ++y) {
                if (y) os << " ";
                os << row[y];
            }
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

std::string count_to_text(const FiniteGroup& G, const AbelianField& F,
                          const ComponentCount& count) {
    std::ostringstream os;
    os << header_text("field: " + F.to_string(), G);
    os << "count: " << count.total << "\n";
    for (const PairComponentCount& p : count.pairs)
        os << "pair H = " << elems_text(p.H) << ", K = " << elems_text(p.K) << ": k = "
           << p.k << ", count = " << p.phi_form << "\n";
    return os.str();
}

std::string minimality_to_text(const FiniteGroup& G, const AbelianField& F,
                               const MinimalityReport& rep) {
    std::ostringstream os;
    os << header_text("field: " + F.to_string(), G);
    os << "minimal: " << yn(rep.minimal) << ", sufficient condition: "
       << yn(rep.sufficient_condition) << ", abelian: " << yn(rep.abelian)
       << ", abelian criterion: " << yn(rep.abelian_criterion) << "\n";
    for (const PairMinimality& p : rep.pairs)
        os << "pair H = " << elems_text(p.H) << ", K = " << elems_text(p.K) << ": k = "
           << p.k << ", joint image full: " << yn(p.joint_image_full)
           << ", index product matches: " << yn(p.index_product_matches)
           << ", intersection trivial: " << yn(p.intersection_trivial) << "\n";
    return os.str();
}

std::string rank_to_text(const FiniteGroup& G, const AbelianField& F,
                         const CentralUnitRank& rank) {
    std::ostringstream os;
    os << header_text("field: " + F.to_string(), G);
    os << "rank: " << rank.rank << "\n";
    os << "real embeddings: " << rank.real_embeddings << ", complex pairs: "
       << rank.complex_pairs << ", real class orbits: " << rank.real_class_orbits
       << ", classes: " << rank.class_count << "\n";
    for (const PairRankTerm& p : rank.pairs)
        os << "pair H = " << elems_text(p.H) << ", K = " << elems_text(p.K) << ": k = "
           << p.k << ", k_pair = " << p.k_pair << ", term = " << p.term.get_str() << "\n";
    return os.str();
}

std::string ffcount_to_text(const FiniteGroup& G, const FiniteFieldReport& rep) {
    std::ostringstream os;
    os << header_text("q: " + std::to_string(rep.q), G);
    os << "count: " << rep.total << ", oracle: " << rep.oracle << ", minimal: "
       << yn(rep.minimal) << "\n";
    os << "sufficient condition: " << yn(rep.sufficient_condition) << ", abelian: "
       << yn(rep.abelian) << ", abelian criterion: " << yn(rep.abelian_criterion) << "\n";
    for (const FiniteFieldPairCount& p : rep.pairs)
        os << "pair H = " << elems_text(p.H) << ", K = " << elems_text(p.K) << ": k = "
           << p.k << ", order of q = " << p.order_of_q << ", count = " << p.count << "\n";
    return os.str();
}

}  // namespace wk
