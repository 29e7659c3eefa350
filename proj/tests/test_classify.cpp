#include <vector>

#include "doctest.h"
#include "vcr/classify.hpp"

using namespace vcr;

namespace {
constexpr Significance kAll[] = {Significance::AboveSignificant,
                                 Significance::BelowSignificant,
                                 Significance::Inconclusive};
}

TEST_CASE("worked examples from the summary figure") {
    using S = Significance;
    // veterinary: advantage on both measures
    CHECK(combine(S::AboveSignificant, S::AboveSignificant) ==
          Bucket::BothAdvantage);
    // economics: documents above, citations inconclusive
    CHECK(combine(S::AboveSignificant, S::Inconclusive) ==
          Bucket::AdvantageLeaning);
    // other social sciences: documents above, citations below
    CHECK(combine(S::AboveSignificant, S::BelowSignificant) ==
          Bucket::Contradictory);
    // mathematics: documents inconclusive, citations below
    CHECK(combine(S::Inconclusive, S::BelowSignificant) ==
          Bucket::DisadvantageLeaning);
    // materials science: disadvantage on both measures
    CHECK(combine(S::BelowSignificant, S::BelowSignificant) ==
          Bucket::BothDisadvantage);
    // medicine: citations above, documents inconclusive
    CHECK(combine(S::Inconclusive, S::AboveSignificant) ==
          Bucket::AdvantageLeaning);
}

TEST_CASE("combine is total and symmetric over all nine pairs") {
    int seen = 0;
    for (Significance docs : kAll) {
        for (Significance cites : kAll) {
            Bucket bucket = combine(docs, cites);
            CHECK(bucket_rank(bucket) >= 0);
            CHECK(bucket_rank(bucket) <= 4);
            CHECK(combine(cites, docs) == bucket);
            ++seen;
        }
    }
    CHECK(seen == 9);
}

TEST_CASE("upgrading an outcome never demotes the bucket") {
    auto upgrade = [](Significance s) -> std::vector<Significance> {
        switch (s) {
            case Significance::BelowSignificant:
                return {Significance::Inconclusive};
            case Significance::Inconclusive:
                return {Significance::AboveSignificant};
            case Significance::AboveSignificant:
                return {};
        }
        return {};
    };
    for (Significance docs : kAll) {
        for (Significance cites : kAll) {
            int before = bucket_rank(combine(docs, cites));
            for (Significance up : upgrade(docs))
                CHECK(bucket_rank(combine(up, cites)) >= before);
            for (Significance up : upgrade(cites))
                CHECK(bucket_rank(combine(docs, up)) >= before);
        }
    }
}

TEST_CASE("verdict keeps per-measure outcomes and flags") {
    AdvantageVerdict v = make_verdict("area:Medicina",
                                      Significance::Inconclusive,
                                      Significance::AboveSignificant,
                                      /*docs_insufficient=*/true,
                                      /*cites_insufficient=*/false);
    CHECK(v.bucket == Bucket::AdvantageLeaning);
    CHECK(v.docs_outcome == Significance::Inconclusive);
    CHECK(v.cites_outcome == Significance::AboveSignificant);
    CHECK(v.docs_insufficient);
    CHECK(!v.cites_insufficient);
}

TEST_CASE("bucket ordering ranks for sorting") {
    CHECK(bucket_rank(Bucket::BothAdvantage) >
          bucket_rank(Bucket::AdvantageLeaning));
    CHECK(bucket_rank(Bucket::AdvantageLeaning) >
          bucket_rank(Bucket::Inconclusive));
    CHECK(bucket_rank(Bucket::Inconclusive) ==
          bucket_rank(Bucket::Contradictory));
    CHECK(bucket_rank(Bucket::Contradictory) >
          bucket_rank(Bucket::DisadvantageLeaning));
    CHECK(bucket_rank(Bucket::DisadvantageLeaning) >
          bucket_rank(Bucket::BothDisadvantage));
}
