#include "sprompt/question_forms.hpp"

#include <algorithm>
#include <cctype>

#include "sprompt/dates.hpp"

namespace sprompt {

std::string singular_noun(const std::string& header) {
    return to_lower(trim(header));
}

std::string plural_noun(const std::string& header) {
    std::string s = singular_noun(header);
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.back()))) return s;
    if (s.back() == 's') return s;  // leave already-plural headers alone
    if (s.back() == 'x' || s.back() == 'z') return s + "es";
    if (s.size() >= 2) {
        std::string tail = s.substr(s.size() - 2);
        if (tail == "ch" || tail == "sh") return s + "es";
    }
    auto is_vowel = [](char c) { return std::string("aeiou").find(c) != std::string::npos; };
    if (s.back() == 'y' && s.size() >= 2 && !is_vowel(s[s.size() - 2]))
        return s.substr(0, s.size() - 1) + "ies";
    return s + "s";
}

namespace {

bool threshold_is_date(const std::string& v) {
    return parse_date(v).has_value();
}

std::string cmp_phrase(CmpDir dir, const std::string& threshold) {
    if (threshold_is_date(threshold))
        return dir == CmpDir::greater ? "later than" : "earlier than";
    return dir == CmpDir::greater ? "greater than" : "less than";
}

}  // namespace

std::string format_question(const NaturalQuestion& q) {
    struct Formatter {
        std::string operator()(const QAllValues& v) const {
            return "What are all the " + plural_noun(v.column) + "?";
        }
        std::string operator()(const QAllValuesDateFiltered& v) const {
            return "What are all the " + plural_noun(v.column) +
                   (v.dir == CmpDir::greater ? " after " : " before ") + v.date + "?";
        }
        std::string operator()(const QValuesWhereEq& v) const {
            return "What are the " + plural_noun(v.column) + " when " +
                   singular_noun(v.cond_column) + " was " + v.value + "?";
        }
        std::string operator()(const QValueWhereEq& v) const {
            return "What was the " + singular_noun(v.column) + " when " +
                   singular_noun(v.cond_column) + " was " + v.value + "?";
        }
        std::string operator()(const QValuesWhereCmp& v) const {
            return "What are the " + plural_noun(v.column) + " when " +
                   singular_noun(v.cond_column) + " was " + cmp_phrase(v.dir, v.threshold) +
                   " " + v.threshold + "?";
        }
        std::string operator()(const QFilterAmong& v) const {
            return "Out of " + natural_join(v.items) + ", which " + plural_noun(v.column) +
                   " have " + singular_noun(v.cond_column) + " " +
                   cmp_phrase(v.dir, v.threshold) + " " + v.threshold + "?";
        }
        std::string operator()(const QGroupWithCount& v) const {
            return "Which " + singular_noun(v.group_column) + " has " +
                   std::to_string(v.count) + " " + plural_noun(v.counted_column) + "?";
        }
    };
    return std::visit(Formatter{}, q);
}

namespace {

bool starts_with(const std::string& s, size_t pos, const std::string& prefix) {
    return s.compare(pos, prefix.size(), prefix) == 0;
}

// Resolves a column noun at `pos` followed by the literal `next`. Fails on
// ambiguity (two headers sharing the same noun at this position).
std::optional<size_t> match_noun(const std::string& s, size_t pos, const Table& t,
                                 bool plural, const std::string& next, size_t* end) {
    std::optional<size_t> found;
    for (size_t c = 0; c < t.width(); ++c) {
        std::string noun = plural ? plural_noun(t.headers[c]) : singular_noun(t.headers[c]);
        if (noun.empty()) continue;
        if (starts_with(s, pos, noun) && starts_with(s, pos + noun.size(), next)) {
            if (found && t.headers[*found] != t.headers[c]) return std::nullopt;
            found = c;
            *end = pos + noun.size();
        }
    }
    return found;
}

std::optional<CmpDir> match_cmp_phrase(const std::string& s, size_t pos, size_t* end) {
    for (const auto& [phrase, dir] :
         {std::pair<const char*, CmpDir>{"greater than ", CmpDir::greater},
          {"less than ", CmpDir::less},
          {"later than ", CmpDir::greater},
          {"earlier than ", CmpDir::less}}) {
        if (starts_with(s, pos, phrase)) {
            *end = pos + std::string(phrase).size();
            return dir;
        }
    }
    return std::nullopt;
}

std::optional<std::string> tail_value(const std::string& s, size_t pos) {
    if (pos >= s.size() || s.back() != '?') return std::nullopt;
    std::string v = trim(s.substr(pos, s.size() - 1 - pos));
    if (v.empty()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<NaturalQuestion> match_question(const std::string& surface, const Table& t) {
    const std::string s = trim(surface);
    if (s.empty() || s.back() != '?') return std::nullopt;
    size_t end = 0;

    if (starts_with(s, 0, "What are all the ")) {
        size_t pos = std::string("What are all the ").size();
        // date-filtered variant first (longer match)
        for (const auto& [word, dir] : {std::pair<const char*, CmpDir>{" after ", CmpDir::greater},
                                        {" before ", CmpDir::less}}) {
            if (auto col = match_noun(s, pos, t, true, word, &end)) {
                if (auto date = tail_value(s, end + std::string(word).size())) {
                    if (parse_date(*date))
                        return QAllValuesDateFiltered{t.headers[*col], dir, *date};
                }
            }
        }
        if (auto col = match_noun(s, pos, t, true, "?", &end)) {
            if (end + 1 == s.size()) return QAllValues{t.headers[*col]};
        }
        return std::nullopt;
    }

    if (starts_with(s, 0, "What are the ")) {
        size_t pos = std::string("What are the ").size();
        auto col = match_noun(s, pos, t, true, " when ", &end);
        if (!col) return std::nullopt;
        size_t pos2 = end + std::string(" when ").size();
        size_t end2 = 0;
        auto cond = match_noun(s, pos2, t, false, " was ", &end2);
        if (!cond) return std::nullopt;
        size_t vpos = end2 + std::string(" was ").size();
        size_t cmp_end = 0;
        if (auto dir = match_cmp_phrase(s, vpos, &cmp_end)) {
            if (auto thr = tail_value(s, cmp_end))
                return QValuesWhereCmp{t.headers[*col], t.headers[*cond], *dir, *thr};
            return std::nullopt;
        }
        if (auto value = tail_value(s, vpos))
            return QValuesWhereEq{t.headers[*col], t.headers[*cond], *value};
        return std::nullopt;
    }

    if (starts_with(s, 0, "What was the ")) {
        size_t pos = std::string("What was the ").size();
        auto col = match_noun(s, pos, t, false, " when ", &end);
        if (!col) return std::nullopt;
        size_t pos2 = end + std::string(" when ").size();
        size_t end2 = 0;
        auto cond = match_noun(s, pos2, t, false, " was ", &end2);
        if (!cond) return std::nullopt;
        if (auto value = tail_value(s, end2 + std::string(" was ").size()))
            return QValueWhereEq{t.headers[*col], t.headers[*cond], *value};
        return std::nullopt;
    }

    if (starts_with(s, 0, "Out of ")) {
        size_t which = s.rfind(", which ");
        if (which == std::string::npos) return std::nullopt;
        std::string items_str = s.substr(std::string("Out of ").size(),
                                         which - std::string("Out of ").size());
        auto items = split_list_answer(items_str);
        if (items.empty()) return std::nullopt;
        size_t pos = which + std::string(", which ").size();
        auto col = match_noun(s, pos, t, true, " have ", &end);
        if (!col) return std::nullopt;
        size_t pos2 = end + std::string(" have ").size();
        size_t end2 = 0;
        auto cond = match_noun(s, pos2, t, false, " ", &end2);
        if (!cond) return std::nullopt;
        size_t cmp_end = 0;
        auto dir = match_cmp_phrase(s, end2 + 1, &cmp_end);
        if (!dir) return std::nullopt;
        if (auto thr = tail_value(s, cmp_end))
            return QFilterAmong{items, t.headers[*col], t.headers[*cond], *dir, *thr};
        return std::nullopt;
    }

    if (starts_with(s, 0, "Which ")) {
        size_t pos = std::string("Which ").size();
        auto group = match_noun(s, pos, t, false, " has ", &end);
        if (!group) return std::nullopt;
        size_t npos = end + std::string(" has ").size();
        size_t nend = npos;
        while (nend < s.size() && std::isdigit(static_cast<unsigned char>(s[nend]))) ++nend;
        if (nend == npos || nend >= s.size() || s[nend] != ' ') return std::nullopt;
        int count = std::stoi(s.substr(npos, nend - npos));
        size_t end2 = 0;
        auto counted = match_noun(s, nend + 1, t, true, "?", &end2);
        if (!counted || end2 + 1 != s.size()) return std::nullopt;
        return QGroupWithCount{t.headers[*group], count, t.headers[*counted]};
    }

    return std::nullopt;
}

std::vector<size_t> rows_where_eq(const Table& t, size_t cond_col, const std::string& value) {
    std::vector<size_t> rows;
    std::string v = trim(value);
    for (size_t r = 0; r < t.rows.size(); ++r)
        if (trim(t.cell(r, cond_col)) == v) rows.push_back(r);
    return rows;
}

std::vector<size_t> rows_where_cmp(const Table& t, size_t cond_col, CmpDir dir,
                                   const std::string& threshold) {
    std::vector<size_t> rows;
    if (t.column_types[cond_col] == ColumnType::date) {
        auto thr = parse_date(threshold);
        if (!thr) return rows;
        for (size_t r = 0; r < t.rows.size(); ++r) {
            auto d = parse_date(t.cell(r, cond_col));
            if (!d) continue;
            if (dir == CmpDir::greater ? *thr < *d : *d < *thr) rows.push_back(r);
        }
        return rows;
    }
    auto thr = parse_quantity(threshold);
    if (!thr) return rows;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        auto q = parse_quantity(t.cell(r, cond_col));
        if (!q) continue;
        if (dir == CmpDir::greater ? q->value > thr->value : q->value < thr->value)
            rows.push_back(r);
    }
    return rows;
}

std::vector<std::string> distinct_values(const Table& t, size_t col,
                                         const std::vector<size_t>& rows) {
    std::vector<std::string> out;
    for (size_t r : rows) {
        std::string v = trim(t.cell(r, col));
        if (v.empty()) continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

std::vector<std::string> distinct_values(const Table& t, size_t col) {
    std::vector<size_t> all(t.rows.size());
    for (size_t r = 0; r < all.size(); ++r) all[r] = r;
    return distinct_values(t, col, all);
}

namespace {

std::optional<Answer> spans_or_none(std::vector<std::string> items) {
    if (items.empty()) return std::nullopt;
    return Answer::make_spans(std::move(items));
}

std::optional<size_t> unique_date_column(const Table& t) {
    std::optional<size_t> found;
    for (size_t c = 0; c < t.width(); ++c) {
        if (t.column_types[c] == ColumnType::date) {
            if (found) return std::nullopt;
            found = c;
        }
    }
    return found;
}

}  // namespace

std::optional<Answer> execute_question(const NaturalQuestion& q, const Table& t) {
    struct Executor {
        const Table& t;

        std::optional<Answer> operator()(const QAllValues& v) const {
            auto col = t.column_index(v.column);
            if (!col) return std::nullopt;
            return spans_or_none(distinct_values(t, *col));
        }
        std::optional<Answer> operator()(const QAllValuesDateFiltered& v) const {
            auto col = t.column_index(v.column);
            auto date_col = unique_date_column(t);
            if (!col || !date_col) return std::nullopt;
            auto rows = rows_where_cmp(t, *date_col, v.dir, v.date);
            return spans_or_none(distinct_values(t, *col, rows));
        }
        std::optional<Answer> operator()(const QValuesWhereEq& v) const {
            auto col = t.column_index(v.column);
            auto cond = t.column_index(v.cond_column);
            if (!col || !cond) return std::nullopt;
            return spans_or_none(distinct_values(t, *col, rows_where_eq(t, *cond, v.value)));
        }
        std::optional<Answer> operator()(const QValueWhereEq& v) const {
            auto col = t.column_index(v.column);
            auto cond = t.column_index(v.cond_column);
            if (!col || !cond) return std::nullopt;
            auto values = distinct_values(t, *col, rows_where_eq(t, *cond, v.value));
            if (values.empty()) return std::nullopt;
            if (values.size() == 1) return Answer::make_text(values[0]);
            return Answer::make_spans(std::move(values));
        }
        std::optional<Answer> operator()(const QValuesWhereCmp& v) const {
            auto col = t.column_index(v.column);
            auto cond = t.column_index(v.cond_column);
            if (!col || !cond) return std::nullopt;
            auto rows = rows_where_cmp(t, *cond, v.dir, v.threshold);
            return spans_or_none(distinct_values(t, *col, rows));
        }
        std::optional<Answer> operator()(const QFilterAmong& v) const {
            auto col = t.column_index(v.column);
            auto cond = t.column_index(v.cond_column);
            if (!col || !cond) return std::nullopt;
            auto cmp_rows = rows_where_cmp(t, *cond, v.dir, v.threshold);
            std::vector<std::string> kept;
            for (const auto& item : v.items) {
                for (size_t r : cmp_rows) {
                    if (trim(t.cell(r, *col)) == trim(item)) {
                        kept.push_back(item);
                        break;
                    }
                }
            }
            return spans_or_none(std::move(kept));
        }
        std::optional<Answer> operator()(const QGroupWithCount& v) const {
            auto group = t.column_index(v.group_column);
            auto counted = t.column_index(v.counted_column);
            if (!group || !counted) return std::nullopt;
            std::vector<std::string> hits;
            for (const auto& g : distinct_values(t, *group)) {
                auto rows = rows_where_eq(t, *group, g);
                if (distinct_values(t, *counted, rows).size() ==
                    static_cast<size_t>(v.count))
                    hits.push_back(g);
            }
            if (hits.size() != 1) return std::nullopt;  // ambiguous or no group
            return Answer::make_text(hits[0]);
        }
    };
    return std::visit(Executor{t}, q);
}

}  // namespace sprompt
