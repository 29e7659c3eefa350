#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "vcr/error.hpp"
#include "vcr/indices.hpp"
#include "vcr/ingest.hpp"

using namespace vcr;

namespace {

const std::string kHeader(kCanonicalHeader);

Panel parse(const std::string& text, const std::string& baseline = "World") {
    std::istringstream in(text);
    return parse_canonical(in, baseline);
}

// Field-for-field comparison used by the round-trip checks.
void check_equal_panels(const Panel& a, const Panel& b) {
    REQUIRE(a.record_count() == b.record_count());
    CHECK(a.baseline_entity() == b.baseline_entity());
    CHECK(a.coverage() == b.coverage());
    CHECK(a.entities() == b.entities());
    auto ra = a.records();
    auto rb = b.records();
    for (std::size_t i = 0; i < ra.size(); ++i) {
        CHECK(ra[i]->entity == rb[i]->entity);
        CHECK(ra[i]->node == rb[i]->node);
        CHECK(ra[i]->year == rb[i]->year);
        CHECK(ra[i]->documents == rb[i]->documents);
        CHECK(ra[i]->citable_documents == rb[i]->citable_documents);
        CHECK(ra[i]->citations == rb[i]->citations);
    }
    auto ta = a.taxonomy().ordered();
    auto tb = b.taxonomy().ordered();
    REQUIRE(ta.size() == tb.size());
    for (std::size_t i = 0; i < ta.size(); ++i) {
        CHECK(ta[i]->id == tb[i]->id);
        CHECK(ta[i]->parent == tb[i]->parent);
    }
}

}  // namespace

TEST_CASE("minimal file parses into the expected shape") {
    Panel panel = parse(kHeader + "\n" +
                        "World,all,,,,1996,1000,900,5000\n"
                        "World,big_area,Ciencias,,,1996,100,90,500\n"
                        "Uruguay,all,,,,1996,10,9,50\n"
                        "Uruguay,big_area,Ciencias,,,1996,1,1,5\n");
    CHECK(panel.record_count() == 4);
    CHECK(panel.entities().size() == 2);
    CHECK(panel.taxonomy().size() == 1);
    CHECK(panel.coverage() == YearRange{1996, 1996});
}

TEST_CASE("duplicate cells report both line numbers") {
    std::string text = kHeader + "\n" +
                       "World,all,,,,1996,1000,900,5000\n"
                       "Uruguay,all,,,,1996,10,9,50\n"
                       "Uruguay,all,,,,1996,11,9,50\n";
    try {
        parse(text);
        FAIL("expected DuplicateCell");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateCell);
        CHECK(std::string(e.what()).find("lines 3 and 4") !=
              std::string::npos);
    }
}

TEST_CASE("header must match exactly") {
    try {
        parse("entity,level,year\nWorld,all,1996\n");
        FAIL("expected SchemaError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SchemaError);
        CHECK(std::string(e.what()).find(kHeader) != std::string::npos);
    }
    CHECK_THROWS_AS(parse(""), Error);
    try {
        parse("");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SchemaError);
    }
}

TEST_CASE("malformed numbers carry line numbers and column names") {
    std::string text = kHeader + "\n" +
                       "World,all,,,,1996,1000,900,5000\n"
                       "Uruguay,all,,,,1996,1x,9,50\n";
    try {
        parse(text);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        std::string what = e.what();
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("documents") != std::string::npos);
    }
    // counts must not be negative (the minus sign is not a digit)
    CHECK_THROWS_AS(parse(kHeader + "\nWorld,all,,,,1996,-5,0,0\n"), Error);
    // years must be 4-digit
    CHECK_THROWS_AS(parse(kHeader + "\nWorld,all,,,,96,5,0,0\n"), Error);
}

TEST_CASE("taxonomy columns must match the level") {
    // big_area row with a stray discipline entry
    CHECK_THROWS_AS(
        parse(kHeader + "\nWorld,big_area,Alpha,,Oops,1996,1,1,1\n"), Error);
    // all row with taxonomy text
    CHECK_THROWS_AS(parse(kHeader + "\nWorld,all,Alpha,,,1996,1,1,1\n"),
                    Error);
    // unknown level tag
    CHECK_THROWS_AS(parse(kHeader + "\nWorld,mega,Alpha,,,1996,1,1,1\n"),
                    Error);
}

TEST_CASE("a discipline under two parents is rejected") {
    std::string text =
        kHeader + "\n" +
        "World,all,,,,1996,100,100,100\n"
        "World,discipline,BigA,AreaA,Thing,1996,1,1,1\n"
        "World,discipline,BigA,AreaB,Thing,1996,1,1,1\n";
    try {
        parse(text);
        FAIL("expected InconsistentTaxonomy");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InconsistentTaxonomy);
    }
}

TEST_CASE("quoted fields with embedded commas round-trip") {
    std::string text =
        kHeader + "\n" +
        "World,all,,,,1996,1000,900,5000\n"
        "World,area,Ciencias sociales,\"Economía, econometría y "
        "finanzas\",,1996,50,40,100\n"
        "Uruguay,all,,,,1996,20,18,40\n"
        "Uruguay,area,Ciencias sociales,\"Economía, econometría y "
        "finanzas\",,1996,5,4,10\n";
    Panel panel = parse(text);
    CHECK(panel.taxonomy().size() == 2);  // big area + area
    const TaxonomyNode* node =
        panel.taxonomy().find("area:Economía, econometría y finanzas");
    REQUIRE(node != nullptr);
    CHECK(node->name == "Economía, econometría y finanzas");

    std::ostringstream out;
    write_panel(panel, out);
    Panel again = parse(out.str());
    check_equal_panels(panel, again);
}

TEST_CASE("parse-save-parse is a fixed point on the fixtures") {
    for (const char* name : {"tabla_a1.csv", "uruguay_totals.csv"}) {
        Panel panel = load_panel(vcrtest::data_path(name));
        std::ostringstream first;
        write_panel(panel, first);
        Panel reparsed = parse(first.str());
        check_equal_panels(panel, reparsed);
        std::ostringstream second;
        write_panel(reparsed, second);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("CRLF input parses identically to LF") {
    std::string lf = kHeader + "\n" +
                     "World,all,,,,1996,1000,900,5000\n"
                     "Uruguay,all,,,,1996,10,9,50\n";
    std::string crlf;
    for (char c : lf) {
        if (c == '\n') crlf += "\r\n";
        else crlf.push_back(c);
    }
    Panel a = parse(lf);
    Panel b = parse(crlf);
    check_equal_panels(a, b);
}

TEST_CASE("row order never matters") {
    std::vector<std::string> rows = {
        "World,all,,,,1996,1000,900,5000",
        "World,all,,,,1997,1100,950,5100",
        "World,big_area,Alpha,,,1996,100,90,500",
        "World,big_area,Alpha,,,1997,110,95,510",
        "Uruguay,all,,,,1996,10,9,50",
        "Uruguay,all,,,,1997,11,9,51",
        "Uruguay,big_area,Alpha,,,1996,1,1,5",
        "Uruguay,big_area,Alpha,,,1997,2,1,6",
    };
    auto assemble = [&] {
        std::string text = kHeader + "\n";
        for (const auto& r : rows) text += r + "\n";
        return text;
    };
    Panel original = parse(assemble());
    std::ostringstream canon;
    write_panel(original, canon);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        std::shuffle(rows.begin(), rows.end(), rng);
        Panel shuffled = parse(assemble());
        std::ostringstream out;
        write_panel(shuffled, out);
        CHECK(out.str() == canon.str());
    }
}

TEST_CASE("save and load through the filesystem") {
    Panel panel = load_panel(vcrtest::data_path("tabla_a1.csv"));
    auto tmp = std::filesystem::temp_directory_path() /
               "vcr_roundtrip_test.csv";
    save_panel(panel, tmp);
    Panel loaded = load_panel(tmp);
    check_equal_panels(panel, loaded);
    std::filesystem::remove(tmp);

    CHECK_THROWS_AS((void)load_panel("/no/such/dir/panel.csv"), Error);
}

TEST_CASE("the baseline entity must exist") {
    std::string text = kHeader + "\nUruguay,all,,,,1996,10,9,50\n";
    try {
        parse(text, "World");
        FAIL("expected InconsistentPanel");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InconsistentPanel);
    }
    // same file is fine when Uruguay itself is the baseline
    Panel panel = parse(text, "Uruguay");
    CHECK(panel.baseline_entity() == "Uruguay");
}

TEST_CASE("country-rank export adapter") {
    ScimagoContext context{"all", "", "", "", 2010};

    SUBCASE("maps the named columns and strips separators") {
        std::ifstream in(vcrtest::data_path("scimago_2010_all.csv"));
        auto rows = adapt_scimago(in, "", context);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].entity == "United States");
        CHECK(rows[0].documents == 500000);
        CHECK(rows[0].citable_documents == 480000);
        CHECK(rows[0].citations == 9000000);
        CHECK(rows[0].year == 2010);
        CHECK(rows[0].level == "all");
        // dotted thousands separators normalize to plain integers
        CHECK(rows[2].entity == "Uruguay");
        CHECK(rows[2].documents == 1100);
        CHECK(rows[2].citations == 25000);
    }

    SUBCASE("entity filter keeps a single country") {
        std::ifstream in(vcrtest::data_path("scimago_2010_all.csv"));
        auto rows = adapt_scimago(in, "Uruguay", context);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].entity == "Uruguay");
        CHECK(rows[0].documents == 1100);
    }

    SUBCASE("entity filter misses") {
        std::ifstream in(vcrtest::data_path("scimago_2010_all.csv"));
        CHECK_THROWS_WITH_AS((void)adapt_scimago(in, "Atlantis", context),
                             doctest::Contains("NotFound"), Error);
    }

    SUBCASE("missing required column") {
        std::istringstream in(
            "Rank;Country;Documents;Citable documents\n"
            "1;United States;500000;480000\n");
        CHECK_THROWS_WITH_AS((void)adapt_scimago(in, "", context),
                             doctest::Contains("Citations"), Error);
    }

    SUBCASE("bad count reports the line") {
        std::istringstream in(
            "Rank;Country;Documents;Citable documents;Citations\n"
            "1;United States;50k;480000;9000000\n");
        try {
            adapt_scimago(in, "", context);
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ParseError);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }

    SUBCASE("adapted rows feed the canonical writer") {
        std::ifstream in(vcrtest::data_path("scimago_2010_all.csv"));
        auto rows = adapt_scimago(in, "", context);
        // rows with the world baseline assembled alongside
        PanelBuilder builder("United States");
        for (const auto& row : rows) {
            PanelRecord record;
            record.entity = row.entity;
            record.node = node_id_for_row(row);
            record.year = row.year;
            record.documents = row.documents;
            record.citable_documents = row.citable_documents;
            record.citations = row.citations;
            builder.add(std::move(record));
        }
        Panel panel = builder.build();
        CHECK(panel.aggregate("Uruguay", kAllNodeId, Measure::Documents,
                              YearRange{2010}) == 1100);
    }
}

TEST_CASE("tabla A1 fixture reproduces the published quotients") {
    Panel panel = load_panel(vcrtest::data_path("tabla_a1.csv"));
    YearRange trienio{2017, 2019};
    auto check_row = [&](const std::string& name, Measure m, double world_pct,
                         double focal_pct) {
        VcrPoint p = vcr_point(panel, "Uruguay",
                               Taxonomy::make_id(TaxonomyLevel::BigArea, name),
                               m, trienio);
        CHECK(std::fabs(p.baseline_share - world_pct / 100.0) < 1e-12);
        CHECK(std::fabs(p.focal_share - focal_pct / 100.0) < 1e-12);
        CHECK(std::fabs(p.value - (focal_pct / 100.0) / (world_pct / 100.0)) <
              1e-12);
    };
    check_row("Ciencias de la salud", Measure::Documents, 18.3, 21.5);
    check_row("Ciencias de la vida", Measure::Documents, 15.2, 27.9);
    check_row("Ciencias fisicas", Measure::Documents, 54.1, 37.1);
    check_row("Ciencias sociales", Measure::Documents, 11.1, 12.0);
    check_row("Ciencias de la salud", Measure::Citations, 19.5, 30.8);
    check_row("Ciencias sociales", Measure::Citations, 7.1, 5.5);
}
