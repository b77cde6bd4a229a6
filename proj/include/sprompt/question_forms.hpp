#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sprompt/answer.hpp"
#include "sprompt/table.hpp"

namespace sprompt {

// Direction of a threshold condition. Rendered "greater/less than" for
// numbers, "later/earlier than" for dates, "after/before" in sort-filter
// questions.
enum class CmpDir { greater, less };

// Noun forms used when templating questions from column headers.
std::string singular_noun(const std::string& header);
std::string plural_noun(const std::string& header);

// The structured forms behind every natural sub-question the generator
// emits. Surfaces are fixed templates, so they can be matched back to the
// structure and re-executed against the table (chain replay).
struct QAllValues {  // "What are all the opponents?"
    std::string column;
};
struct QAllValuesDateFiltered {  // "What are all the attendances after 1 January 1991?"
    std::string column;
    CmpDir dir = CmpDir::greater;
    std::string date;
};
struct QValuesWhereEq {  // "What are the opponents when venue was A?"
    std::string column;
    std::string cond_column;
    std::string value;
};
struct QValueWhereEq {  // "What was the attendance when opponent was Walsall?"
    std::string column;
    std::string cond_column;
    std::string value;
};
struct QValuesWhereCmp {  // "What are the opponents when attendance was greater than 18,246?"
    std::string column;
    std::string cond_column;
    CmpDir dir = CmpDir::greater;
    std::string threshold;
};
struct QFilterAmong {  // "Out of A, B and C, which opponents have attendance less than 18,246?"
    std::vector<std::string> items;
    std::string column;
    std::string cond_column;
    CmpDir dir = CmpDir::greater;
    std::string threshold;
};
struct QGroupWithCount {  // "Which venue has 3 opponents?"
    std::string group_column;
    int count = 0;
    std::string counted_column;
};

using NaturalQuestion =
    std::variant<QAllValues, QAllValuesDateFiltered, QValuesWhereEq, QValueWhereEq,
                 QValuesWhereCmp, QFilterAmong, QGroupWithCount>;

std::string format_question(const NaturalQuestion& q);

// Inverse of format_question over a concrete table (needed to resolve
// column nouns). Returns nullopt when the surface fits no template.
std::optional<NaturalQuestion> match_question(const std::string& surface, const Table& t);

// Executes a structured question against the table. Returns nullopt when
// the lookup is empty or ambiguous where a unique answer is required.
std::optional<Answer> execute_question(const NaturalQuestion& q, const Table& t);

// Table algebra shared by question execution and the generators.
std::vector<size_t> rows_where_eq(const Table& t, size_t cond_col, const std::string& value);
std::vector<size_t> rows_where_cmp(const Table& t, size_t cond_col, CmpDir dir,
                                   const std::string& threshold);
// Distinct trimmed non-empty cell values in first-occurrence order.
std::vector<std::string> distinct_values(const Table& t, size_t col);
std::vector<std::string> distinct_values(const Table& t, size_t col,
                                         const std::vector<size_t>& rows);

}  // namespace sprompt
