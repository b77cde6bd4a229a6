#include "sprompt/dates.hpp"

#include <array>
#include <cctype>

#include "sprompt/answer.hpp"

namespace sprompt {

namespace {

int month_from_name(const std::string& name) {
    static const std::array<const char*, 12> full = {
        "january", "february", "march",     "april",   "may",      "june",
        "july",    "august",   "september", "october", "november", "december"};
    std::string n = to_lower(name);
    for (int i = 0; i < 12; ++i) {
        if (n == full[i] || (n.size() == 3 && std::string(full[i]).substr(0, 3) == n))
            return i + 1;
    }
    return 0;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Date> parse_date(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) return std::nullopt;

    // ISO yyyy-mm-dd
    if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
        std::string y = s.substr(0, 4), m = s.substr(5, 2), d = s.substr(8, 2);
        if (all_digits(y) && all_digits(m) && all_digits(d)) {
            Date date{std::stoi(y), std::stoi(m), std::stoi(d)};
            if (date.month >= 1 && date.month <= 12 && date.day >= 1 && date.day <= 31)
                return date;
        }
        return std::nullopt;
    }

    // "26 Sep 1990" / "26 September 1990"
    size_t sp1 = s.find(' ');
    if (sp1 == std::string::npos) return std::nullopt;
    size_t sp2 = s.find(' ', sp1 + 1);
    if (sp2 == std::string::npos || s.find(' ', sp2 + 1) != std::string::npos)
        return std::nullopt;
    std::string d = s.substr(0, sp1);
    std::string m = s.substr(sp1 + 1, sp2 - sp1 - 1);
    std::string y = s.substr(sp2 + 1);
    if (!all_digits(d) || !all_digits(y) || d.size() > 2 || y.size() != 4)
        return std::nullopt;
    int month = month_from_name(m);
    if (month == 0) return std::nullopt;
    Date date{std::stoi(y), month, std::stoi(d)};
    if (date.day < 1 || date.day > 31) return std::nullopt;
    return date;
}

}  // namespace sprompt
