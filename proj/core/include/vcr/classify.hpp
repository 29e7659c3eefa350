#pragma once

#include <string>

#include "vcr/trend.hpp"

namespace vcr {

// Joint documents+citations verdict. Contradictory (one measure
// significantly above, the other significantly below) is kept distinct from
// Inconclusive so opposing markers stay visible in summaries.
enum class Bucket {
    BothDisadvantage,
    DisadvantageLeaning,
    Inconclusive,
    Contradictory,
    AdvantageLeaning,
    BothAdvantage,
};

const char* to_string(Bucket b);

// Ordering rank for sorting and the monotonicity property; Inconclusive and
// Contradictory share the middle rank.
int bucket_rank(Bucket b);

// Total over all nine (docs, cites) outcome pairs; symmetric in its
// arguments.
Bucket combine(Significance docs, Significance cites);

struct AdvantageVerdict {
    std::string node;  // taxonomy node id
    Significance docs_outcome = Significance::Inconclusive;
    Significance cites_outcome = Significance::Inconclusive;
    Bucket bucket = Bucket::Inconclusive;
    // Data-quality flags: the measure had too few usable periods and its
    // outcome was forced to Inconclusive.
    bool docs_insufficient = false;
    bool cites_insufficient = false;
};

AdvantageVerdict make_verdict(std::string node, Significance docs,
                              Significance cites,
                              bool docs_insufficient = false,
                              bool cites_insufficient = false);

}  // namespace vcr
