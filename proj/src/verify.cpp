#include "wedderkit/verify.hpp"

#include <functional>
#include <sstream>

#include "wedderkit/corpus.hpp"
#include "wedderkit/errors.hpp"
#include "wedderkit/numutil.hpp"

namespace wk {

namespace {

VerifyRow run_row(const std::string& name, const std::function<std::string()>& body) {
    try {
        return {name, true, body()};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

const std::vector<long>& probe_prime_powers() {
    static const std::vector<long> qs = {2, 3, 4, 5, 7, 8, 9, 25, 49};
    return qs;
}

}  // namespace

std::vector<VerifyRow> run_verification_suite() {
    std::vector<VerifyRow> rows;
    const std::vector<CorpusEntry>& corpus = builtin_corpus();
    const std::vector<AbelianField>& fields = standard_fields();

    for (const CorpusEntry& entry : corpus) {
        const FiniteGroup& G = entry.group;

        rows.push_back(run_row(entry.name + ": decomposition internally consistent", [&] {
            long total = 0;
            for (const AbelianField& F : fields)
                total += wedderburn_decomposition(G, F).count;
            return std::to_string(total) + " components across " +
                   std::to_string(fields.size()) + " fields";
        }));

        rows.push_back(run_row(entry.name + ": minimality matches the component count", [&] {
            for (const AbelianField& F : fields) {
                MinimalityReport m = minimality_report(G, F);
                ComponentCount c = component_count(G, F);
                if (m.minimal != (c.total == static_cast<long>(c.pairs.size())))
                    throw VerificationFailed("minimality verdict disagrees with the raw "
                                             "count over " + F.to_string());
            }
            return "checked over " + std::to_string(fields.size()) + " fields";
        }));

        rows.push_back(run_row(entry.name + ": rank matches the embedding formula", [&] {
            for (const AbelianField& F : fields) {
                CentralUnitRank r = central_unit_rank(G, F);
                ComponentCount c = component_count(G, F);
                long expected = r.real_embeddings * r.real_class_orbits +
                                r.complex_pairs * r.class_count - c.total;
                if (r.rank != expected)
                    throw VerificationFailed("rank disagrees with the embedding formula "
                                             "over " + F.to_string());
            }
            return "checked over " + std::to_string(fields.size()) + " fields";
        }));

        rows.push_back(run_row(entry.name + ": finite field counts match class orbits", [&] {
            int checked = 0;
            for (long q : probe_prime_powers()) {
                long p = 0;
                int e = 0;
                is_prime_power(q, &p, &e);
                if (G.order() % p == 0) continue;
                FiniteFieldReport rep = finite_field_component_count(G, q);
                if (rep.total != rep.oracle)
                    throw VerificationFailed("count disagrees with the orbit oracle at q = " +
                                             std::to_string(q));
                ++checked;
            }
            return std::to_string(checked) + " prime powers checked";
        }));

        rows.push_back(run_row(entry.name + ": prime power minimality descends to the prime",
                               [&] {
            int checked = 0;
            for (long q : probe_prime_powers()) {
                long p = 0;
                int e = 0;
                is_prime_power(q, &p, &e);
                if (e < 2 || G.order() % p == 0) continue;
                bool over_power = finite_field_minimality(G, q).minimal;
                bool over_prime = finite_field_minimality(G, p).minimal;
                if (over_power && !over_prime)
                    throw VerificationFailed("minimal at q = " + std::to_string(q) +
                                             " but not at p = " + std::to_string(p));
                ++checked;
            }
            return std::to_string(checked) + " prime powers checked";
        }));
    }
    return rows;
}

Json verification_to_json(const std::vector<VerifyRow>& rows) {
    long failed = 0;
    Json rj = Json::array();
    for (const VerifyRow& row : rows) {
        Json r = Json::object();
        r["name"] = row.name;
        r["passed"] = row.passed;
        r["detail"] = row.detail;
        rj.push_back(r);
        if (!row.passed) ++failed;
    }
    Json out = Json::object();
    out["passed"] = static_cast<long>(rows.size()) - failed;
    out["failed"] = failed;
    out["rows"] = rj;
    return out;
}

std::string verification_to_text(const std::vector<VerifyRow>& rows) {
    std::ostringstream os;
    long failed = 0;
    for (const VerifyRow& row : rows) {
        os << (row.passed ? "[ ok ] " : "[FAIL] ") << row.name;
        if (!row.detail.empty()) os << " (" << row.detail << ")";
        os << "\n";
        if (!row.passed) ++failed;
    }
    os << "passed " << (rows.size() - failed) << " of " << rows.size() << "\n";
    return os.str();
}

}  // namespace wk
