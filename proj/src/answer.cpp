#include "sprompt/answer.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace sprompt {

bool Quantity::operator==(const Quantity& o) const {
    return std::abs(value - o.value) < 1e-9 && unit == o.unit;
}

Answer Answer::make_spans(std::vector<std::string> spans) {
    if (spans.empty())
        throw std::invalid_argument("span answer must be non-empty");
    for (const auto& s : spans)
        if (s.empty())
            throw std::invalid_argument("span answer contains an empty span");
    Answer a;
    a.kind_ = Kind::spans;
    a.spans_ = std::move(spans);
    return a;
}

Answer Answer::make_quantity(double value, std::string unit) {
    if (!std::isfinite(value))
        throw std::invalid_argument("quantity answer must be finite");
    Answer a;
    a.kind_ = Kind::quantity;
    a.quantity_ = Quantity{value, std::move(unit)};
    return a;
}

Answer Answer::make_quantity(const Quantity& q) {
    return make_quantity(q.value, q.unit);
}

Answer Answer::make_text(std::string text) {
    Answer a;
    a.kind_ = Kind::text;
    a.text_ = std::move(text);
    return a;
}

std::string Answer::display() const {
    switch (kind_) {
    case Kind::spans: {
        std::string out;
        for (size_t i = 0; i < spans_.size(); ++i) {
            if (i) out += "; ";
            out += spans_[i];
        }
        return out;
    }
    case Kind::quantity:
        return render_quantity(quantity_);
    case Kind::text:
        return text_;
    }
    return {};
}

std::vector<std::string> Answer::as_spans() const {
    switch (kind_) {
    case Kind::spans:
        return spans_;
    case Kind::quantity:
        return {canonical_number_string(quantity_.value)};
    case Kind::text:
        return split_list_answer(text_);
    }
    return {};
}

bool Answer::operator==(const Answer& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
    case Kind::spans: return spans_ == o.spans_;
    case Kind::quantity: return quantity_ == o.quantity_;
    case Kind::text: return text_ == o.text_;
    }
    return false;
}

std::string canonical_number_string(double value) {
    if (std::abs(value) < 1e15 && value == std::floor(value)) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(value));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string render_quantity(const Quantity& q) {
    std::string v = canonical_number_string(q.value);
    if (q.unit.empty()) return v;
    if (q.unit == "%") return v + "%";
    return v + "-" + q.unit;
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

namespace {

const std::unordered_map<std::string, int>& number_words() {
    static const std::unordered_map<std::string, int> words = {
        {"zero", 0},     {"one", 1},       {"two", 2},      {"three", 3},
        {"four", 4},     {"five", 5},      {"six", 6},      {"seven", 7},
        {"eight", 8},    {"nine", 9},      {"ten", 10},     {"eleven", 11},
        {"twelve", 12},  {"thirteen", 13}, {"fourteen", 14},{"fifteen", 15},
        {"sixteen", 16}, {"seventeen", 17},{"eighteen", 18},{"nineteen", 19},
        {"twenty", 20},  {"thirty", 30},   {"forty", 40},   {"fifty", 50},
        {"sixty", 60},   {"seventy", 70},  {"eighty", 80},  {"ninety", 90},
        {"hundred", 100},
    };
    return words;
}

std::optional<double> parse_number_word(const std::string& word) {
    const auto& words = number_words();
    auto it = words.find(word);
    if (it != words.end()) return it->second;
    // compounds: "twenty-one" .. "ninety-nine"
    auto dash = word.find('-');
    if (dash == std::string::npos) return std::nullopt;
    auto tens = words.find(word.substr(0, dash));
    auto ones = words.find(word.substr(dash + 1));
    if (tens == words.end() || ones == words.end()) return std::nullopt;
    if (tens->second < 20 || tens->second > 90 || tens->second % 10 != 0) return std::nullopt;
    if (ones->second < 1 || ones->second > 9) return std::nullopt;
    return tens->second + ones->second;
}

// Consumes digits with embedded thousands separators starting at `i`.
// Returns the plain digit string and advances `i` past what was consumed.
std::string scan_digit_run(const std::string& s, size_t& i) {
    std::string digits;
    while (i < s.size()) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            ++i;
        } else if (c == ',' && i + 3 < s.size() + 1 && !digits.empty()) {
            // comma is a separator only when followed by exactly 3 digits
            size_t j = i + 1, run = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) { ++j; ++run; }
            if (run == 3) {
                digits += s.substr(i + 1, 3);
                i += 4;
            } else {
                break;
            }
        } else {
            break;
        }
    }
    return digits;
}

bool valid_unit(const std::string& u) {
    if (u.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(u[0]))) return false;
    for (char c : u)
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != ' ' && c != '.' && c != '-')
            return false;
    return true;
}

}  // namespace

std::optional<Quantity> parse_quantity(const std::string& cell) {
    std::string s = trim(cell);
    if (s.empty()) return std::nullopt;

    if (auto w = parse_number_word(to_lower(s)))
        return Quantity{*w, ""};

    size_t i = 0;
    bool negative = false;
    if (s[i] == '-' || s[i] == '+') {
        negative = s[i] == '-';
        ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
        return std::nullopt;

    std::string digits = scan_digit_run(s, i);
    if (digits.empty()) return std::nullopt;
    std::string frac;
    if (i < s.size() && s[i] == '.' && i + 1 < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            frac += s[i];
            ++i;
        }
    }

    double value = std::strtod((digits + (frac.empty() ? "" : "." + frac)).c_str(), nullptr);
    if (negative) value = -value;

    std::string rest = s.substr(i);
    if (rest.empty()) return Quantity{value, ""};
    if (rest == "%") return Quantity{value, "%"};
    if (rest[0] == '-' || rest[0] == ' ') {
        std::string unit = trim(rest.substr(1));
        if (valid_unit(unit)) return Quantity{value, unit};
    }
    return std::nullopt;
}

namespace {

bool is_punct_char(char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

// "5,666" -> "5666", "42.0" -> "42"; nullopt when not a plain number.
std::optional<std::string> canonical_numeric_token(const std::string& token) {
    if (token.empty()) return std::nullopt;
    size_t i = 0;
    if (token[i] == '-' || token[i] == '+') ++i;
    if (i >= token.size() || !std::isdigit(static_cast<unsigned char>(token[i])))
        return std::nullopt;
    std::string core = token[0] == '-' ? "-" : "";
    std::string digits = scan_digit_run(token, i);
    if (digits.empty()) return std::nullopt;
    core += digits;
    if (i < token.size() && token[i] == '.') {
        ++i;
        std::string frac;
        while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
            frac += token[i];
            ++i;
        }
        if (!frac.empty()) core += "." + frac;
    }
    if (i != token.size()) return std::nullopt;
    return canonical_number_string(std::strtod(core.c_str(), nullptr));
}

}  // namespace

std::string normalize_answer_text(const std::string& s) {
    // split on whitespace and hyphens
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '-') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    std::string out;
    for (auto& tok : tokens) {
        // trim surrounding punctuation before the numeric check: "1905." -> "1905"
        size_t b = 0, e = tok.size();
        while (b < e && is_punct_char(tok[b]) && tok[b] != '-') ++b;
        while (e > b && is_punct_char(tok[e - 1])) --e;
        std::string core = tok.substr(b, e - b);
        std::string norm;
        if (auto num = canonical_numeric_token(core)) {
            norm = *num;
        } else {
            for (char c : core)
                if (!is_punct_char(c)) norm += c;
        }
        if (norm.empty() || norm == "a" || norm == "an" || norm == "the") continue;
        if (!out.empty()) out += ' ';
        out += norm;
    }
    return out;
}

namespace {

// True when the comma at position i is a thousands separator inside a digit run.
bool comma_is_thousands_sep(const std::string& s, size_t i) {
    if (i == 0 || !std::isdigit(static_cast<unsigned char>(s[i - 1]))) return false;
    size_t j = i + 1, run = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) { ++j; ++run; }
    return run == 3 && (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])));
}

}  // namespace

std::vector<std::string> split_list_answer(const std::string& s) {
    std::vector<std::string> raw;
    if (s.find(';') != std::string::npos) {
        std::string cur;
        for (char c : s) {
            if (c == ';') {
                raw.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        raw.push_back(cur);
    } else {
        // natural list: commas (not thousands separators) and the word "and"
        std::string cur;
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] == ',' && !comma_is_thousands_sep(s, i)) {
                raw.push_back(cur);
                cur.clear();
                continue;
            }
            if ((s[i] == 'a' || s[i] == 'A') && i + 3 <= s.size() &&
                to_lower(s.substr(i, 3)) == "and" &&
                (i == 0 || std::isspace(static_cast<unsigned char>(s[i - 1]))) &&
                (i + 3 == s.size() || std::isspace(static_cast<unsigned char>(s[i + 3])))) {
                raw.push_back(cur);
                cur.clear();
                i += 2;
                continue;
            }
            cur += s[i];
        }
        raw.push_back(cur);
    }

    std::vector<std::string> items;
    for (auto& r : raw) {
        std::string t = trim(r);
        if (!t.empty()) items.push_back(t);
    }
    return items;
}

std::string natural_join(const std::vector<std::string>& items) {
    if (items.empty()) return {};
    if (items.size() == 1) return items[0];
    std::string out;
    for (size_t i = 0; i + 1 < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    out += " and " + items.back();
    return out;
}

std::string gather_join(const std::vector<std::string>& items) {
    if (items.size() <= 2) return natural_join(items);
    std::string out;
    for (size_t i = 0; i + 1 < items.size(); ++i) {
        out += items[i] + ", ";
    }
    out += "and " + items.back();
    return out;
}

}  // namespace sprompt
