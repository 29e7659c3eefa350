#include "vcr/classify.hpp"

namespace vcr {

const char* to_string(Bucket b) {
    switch (b) {
        case Bucket::BothAdvantage: return "both_advantage";
        case Bucket::AdvantageLeaning: return "advantage_leaning";
        case Bucket::Inconclusive: return "inconclusive";
        case Bucket::Contradictory: return "contradictory";
        case Bucket::DisadvantageLeaning: return "disadvantage_leaning";
        case Bucket::BothDisadvantage: return "both_disadvantage";
    }
    return "?";
}

int bucket_rank(Bucket b) {
    switch (b) {
        case Bucket::BothDisadvantage: return 0;
        case Bucket::DisadvantageLeaning: return 1;
        case Bucket::Inconclusive: return 2;
        case Bucket::Contradictory: return 2;
        case Bucket::AdvantageLeaning: return 3;
        case Bucket::BothAdvantage: return 4;
    }
    return 2;
}

Bucket combine(Significance docs, Significance cites) {
    using S = Significance;
    int above = (docs == S::AboveSignificant) + (cites == S::AboveSignificant);
    int below = (docs == S::BelowSignificant) + (cites == S::BelowSignificant);
    if (above == 2) return Bucket::BothAdvantage;
    if (below == 2) return Bucket::BothDisadvantage;
    if (above == 1 && below == 1) return Bucket::Contradictory;
    if (above == 1) return Bucket::AdvantageLeaning;
    if (below == 1) return Bucket::DisadvantageLeaning;
    return Bucket::Inconclusive;
}

AdvantageVerdict make_verdict(std::string node, Significance docs,
                              Significance cites, bool docs_insufficient,
                              bool cites_insufficient) {
    AdvantageVerdict verdict;
    verdict.node = std::move(node);
    verdict.docs_outcome = docs;
    verdict.cites_outcome = cites;
    verdict.bucket = combine(docs, cites);
    verdict.docs_insufficient = docs_insufficient;
    verdict.cites_insufficient = cites_insufficient;
    return verdict;
}

}  // namespace vcr
