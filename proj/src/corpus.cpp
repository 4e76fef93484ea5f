#include "wedderkit/corpus.hpp"

namespace wk {

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> out;
        for (int n = 2; n <= 12; ++n)
            out.push_back({"C" + std::to_string(n), FiniteGroup::abelian({n})});
        out.push_back({"C2xC2", FiniteGroup::abelian({2, 2})});
        out.push_back({"C2xC4", FiniteGroup::abelian({2, 4})});
        for (int n = 3; n <= 8; ++n)
            out.push_back({"D" + std::to_string(2 * n),
                           FiniteGroup::metacyclic(n, 2, 0, n - 1)});
        out.push_back({"Q8", FiniteGroup::metacyclic(4, 2, 2, 3)});
        out.push_back({"Q16", FiniteGroup::metacyclic(8, 2, 4, 7)});
        out.push_back({"C3xQ8",
                       FiniteGroup::direct_product(FiniteGroup::abelian({3}),
                                                   FiniteGroup::metacyclic(4, 2, 2, 3))});
        out.push_back({"C3:C4", FiniteGroup::metacyclic(3, 4, 0, 2)});
        out.push_back({"C7:C3", FiniteGroup::metacyclic(7, 3, 0, 2)});
        return out;
    }();
    return corpus;
}

const std::vector<AbelianField>& standard_fields() {
    static const std::vector<AbelianField> fields = {
        AbelianField::rationals(),     AbelianField::cyclotomic(3),
        AbelianField::cyclotomic(4),   AbelianField::cyclotomic(5),
        AbelianField::cyclotomic(8),   AbelianField::fixed_field(5, {4}),
    };
    return fields;
}

}  // namespace wk
