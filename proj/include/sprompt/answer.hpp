#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sprompt {

// A numeric value extracted from a table cell or calculator argument.
// `unit` is empty when none was present ("34,669" -> 34669, "42-yard" -> 42/"yard").
struct Quantity {
    double value = 0.0;
    std::string unit;

    bool operator==(const Quantity& o) const;
};

// The universal QA return type. Exactly one alternative is populated.
class Answer {
public:
    enum class Kind { spans, quantity, text };

    static Answer make_spans(std::vector<std::string> spans);
    static Answer make_quantity(double value, std::string unit = "");
    static Answer make_quantity(const Quantity& q);
    static Answer make_text(std::string text);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& spans() const { return spans_; }
    const Quantity& quantity() const { return quantity_; }
    const std::string& text() const { return text_; }

    // Single-line rendering used in prompts and chain logs:
    // spans join with "; ", quantities render canonically, text verbatim.
    std::string display() const;

    // The answer as a list of span strings (quantity -> canonical value, unit
    // dropped; text -> list-split). This is the form the F1 metric consumes.
    std::vector<std::string> as_spans() const;

    bool operator==(const Answer& o) const;

private:
    Kind kind_ = Kind::text;
    std::vector<std::string> spans_;
    Quantity quantity_;
    std::string text_;
};

// Canonical digit-string rendering: integral values have no decimal point or
// exponent, non-integral values keep their shortest round-trip form.
std::string canonical_number_string(double value);

// Renders a quantity so that parse_quantity round-trips to the same value:
// no unit -> "42", percent -> "42%", otherwise "42-yard".
std::string render_quantity(const Quantity& q);

// Extracts a numeric value from a cell string. Handles thousands separators
// (a comma counts as a separator only when followed by exactly three digits),
// hyphenated unit suffixes ("42-yard"), a trailing percent sign, and English
// number words (zero..twenty, tens, hundred, compounds like "twenty-one").
// Returns nullopt when the string has no recognizable numeric content.
std::optional<Quantity> parse_quantity(const std::string& cell);

// Lowercases, drops articles (a/an/the), strips punctuation, collapses
// whitespace, canonicalizes numeric tokens ("5,666" -> "5666"). Hyphens act
// as token separators ("42-yard" -> "42 yard"). Idempotent.
std::string normalize_answer_text(const std::string& s);

// Splits a list-valued answer string into items. Semicolons always separate;
// without semicolons, commas (except thousands separators) and the
// conjunction "and" separate. Items are trimmed, empties dropped, order kept.
std::vector<std::string> split_list_answer(const std::string& s);

// "A" / "A and B" / "A, B and C"  (no Oxford comma; used in question text).
std::string natural_join(const std::vector<std::string>& items);

// "A" / "A and B" / "A, B, and C"  (Oxford comma; the gather operation).
std::string gather_join(const std::vector<std::string>& items);

std::string trim(const std::string& s);
std::string to_lower(std::string s);

}  // namespace sprompt
