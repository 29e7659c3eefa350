#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace vcr {

using Count = std::uint64_t;
using Year = int;

// The two production proxies every index and test is parameterized by.
enum class Measure { Documents, Citations };

// Which raw column backs the Documents measure. The source carries both a
// total-documents and a citable-documents tally; either can drive the
// analysis.
enum class DocBasis { Documents, CitableDocuments };

// Inclusive calendar-year range. A single year is {y, y}.
struct YearRange {
    Year first = 0;
    Year last = 0;

    constexpr YearRange() = default;
    constexpr YearRange(Year f, Year l) : first(f), last(l) {}
    constexpr explicit YearRange(Year y) : first(y), last(y) {}

    constexpr bool valid() const { return first <= last; }
    constexpr int size() const { return last - first + 1; }
    constexpr bool single() const { return first == last; }
    constexpr bool contains(Year y) const { return first <= y && y <= last; }
    constexpr bool contains(const YearRange& r) const {
        return first <= r.first && r.last <= last;
    }

    auto operator<=>(const YearRange&) const = default;

    // "1996" for single years, "1996-1998" for windows.
    std::string label() const;
};

const char* to_string(Measure m);
const char* to_string(DocBasis b);

}  // namespace vcr
