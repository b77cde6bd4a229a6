#pragma once

#include <optional>
#include <string>

namespace sprompt {

// Comparable calendar date (no arithmetic beyond ordering).
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    int key() const { return year * 10000 + month * 100 + day; }
    auto operator<=>(const Date& o) const { return key() <=> o.key(); }
    bool operator==(const Date& o) const { return key() == o.key(); }
};

// Accepts "26 Sep 1990", "26 September 1990" and ISO "1990-09-26".
std::optional<Date> parse_date(const std::string& s);

}  // namespace sprompt
