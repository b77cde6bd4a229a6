#include "sprompt/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "sprompt/dates.hpp"

namespace sprompt {

const char* symbolic_op_name(SymbolicOp op) {
    switch (op) {
    case SymbolicOp::count: return "count";
    case SymbolicOp::top: return "top";
    case SymbolicOp::bottom: return "bottom";
    case SymbolicOp::sum: return "sum";
    case SymbolicOp::diff: return "diff";
    case SymbolicOp::if_then: return "if_then";
    case SymbolicOp::gather: return "gather";
    case SymbolicOp::intersection: return "intersection";
    case SymbolicOp::negation: return "negation";
    }
    return "?";
}

namespace {

SymbolicParse malformed(std::string msg) {
    SymbolicParse p;
    p.status = SymbolicParse::Status::malformed;
    p.error = std::move(msg);
    return p;
}

SymbolicParse not_symbolic() {
    return SymbolicParse{};
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

std::optional<Condition> parse_condition(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '<' || c == '>')) {
            Condition cond;
            cond.left = trim(s.substr(0, i));
            cond.cmp = c == '<' ? Comparator::less : Comparator::greater;
            cond.right = trim(s.substr(i + 1));
            if (cond.left.empty() || cond.right.empty()) return std::nullopt;
            return cond;
        }
    }
    return std::nullopt;
}

}  // namespace

SymbolicParse parse_symbolic(const std::string& surface) {
    std::string s = trim(surface);
    size_t open = s.find('(');
    if (open == std::string::npos || open == 0) return not_symbolic();

    std::string name = to_lower(trim(s.substr(0, open)));
    bool alias_max = name == "max", alias_min = name == "min";
    SymbolicOp op;
    if (name == "count") op = SymbolicOp::count;
    else if (name == "top" || alias_max) op = SymbolicOp::top;
    else if (name == "bottom" || alias_min) op = SymbolicOp::bottom;
    else if (name == "sum") op = SymbolicOp::sum;
    else if (name == "diff") op = SymbolicOp::diff;
    else if (name == "if_then") op = SymbolicOp::if_then;
    else if (name == "gather") op = SymbolicOp::gather;
    else if (name == "intersection") op = SymbolicOp::intersection;
    else if (name == "negation") op = SymbolicOp::negation;
    else return not_symbolic();

    // tolerate a missing close paren (the generations sometimes drop it)
    size_t close = s.rfind(')');
    std::string content = close != std::string::npos && close > open
                              ? s.substr(open + 1, close - open - 1)
                              : s.substr(open + 1);

    SymbolicExpr expr;
    expr.op = op;

    if (op == SymbolicOp::top || op == SymbolicOp::bottom) {
        std::string rest = content;
        if (alias_max || alias_min) {
            expr.k = 1;
        } else {
            size_t comma = content.find(',');
            if (comma == std::string::npos)
                return malformed(name + " requires a leading k argument");
            std::string kstr = trim(content.substr(0, comma));
            bool digits = !kstr.empty() &&
                          std::all_of(kstr.begin(), kstr.end(), [](unsigned char c) {
                              return std::isdigit(c);
                          });
            if (!digits) return malformed(name + " has a non-integer k: '" + kstr + "'");
            expr.k = std::stoi(kstr);
            rest = content.substr(comma + 1);
        }
        for (auto& a : split_top_level(rest, ';'))
            if (!a.empty()) expr.args.push_back(a);
        if (expr.args.empty()) return malformed(name + " has no arguments");
        if (*expr.k < 1 || static_cast<size_t>(*expr.k) > expr.args.size())
            return malformed(name + " k out of range");
    } else if (op == SymbolicOp::if_then) {
        auto parts = split_top_level(content, ';');
        if (parts.size() != 3) return malformed("if_then requires condition and two outcomes");
        auto cond = parse_condition(parts[0]);
        if (!cond) return malformed("if_then condition must use < or >");
        if (parts[1].empty() || parts[2].empty())
            return malformed("if_then outcome is empty");
        expr.condition = *cond;
        expr.args = {parts[1], parts[2]};
    } else if (op == SymbolicOp::intersection) {
        auto sides = split_top_level(content, '|');
        if (sides.size() != 2)
            return malformed("intersection requires two |-separated lists");
        for (auto& a : split_top_level(sides[0], ';'))
            if (!a.empty()) expr.args.push_back(a);
        expr.rhs_start = expr.args.size();
        if (expr.args.empty()) return malformed("intersection left list is empty");
        for (auto& a : split_top_level(sides[1], ';'))
            if (!a.empty()) expr.args.push_back(a);
        if (*expr.rhs_start == expr.args.size())
            return malformed("intersection right list is empty");
    } else {
        for (auto& a : split_top_level(content, ';'))
            if (!a.empty()) expr.args.push_back(a);
        if (expr.args.empty()) return malformed(name + " has no arguments");
        if (op == SymbolicOp::diff && expr.args.size() != 2)
            return malformed("diff requires exactly two arguments");
        if (op == SymbolicOp::negation && expr.args.size() != 1)
            return malformed("negation requires exactly one argument");
    }

    SymbolicParse p;
    p.status = SymbolicParse::Status::ok;
    p.expr = std::move(expr);
    return p;
}

namespace {

EvalResult eval_error(std::string msg) {
    EvalResult r;
    r.error = std::move(msg);
    return r;
}

struct Values {
    std::vector<double> v;
    std::vector<std::string> units;
};

std::optional<Values> parse_values(const std::vector<std::string>& args) {
    Values out;
    for (const auto& a : args) {
        auto q = parse_quantity(a);
        if (!q) return std::nullopt;
        out.v.push_back(q->value);
        out.units.push_back(q->unit);
    }
    return out;
}

std::string common_unit(const Values& vals) {
    if (vals.units.empty()) return "";
    for (const auto& u : vals.units)
        if (u != vals.units[0]) return "";
    return vals.units[0];
}

// Index of the argument holding the k-th largest (or smallest) distinct
// value; the earliest argument wins among equal values.
std::optional<size_t> kth_distinct_index(const std::vector<double>& v, int k, bool largest) {
    std::set<double> distinct(v.begin(), v.end());
    if (k < 1 || static_cast<size_t>(k) > distinct.size()) return std::nullopt;
    double target;
    if (largest) {
        auto it = distinct.rbegin();
        std::advance(it, k - 1);
        target = *it;
    } else {
        auto it = distinct.begin();
        std::advance(it, k - 1);
        target = *it;
    }
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] == target) return i;
    return std::nullopt;
}

// Numeric when both parse; then date; then lexicographic.
bool condition_holds(const Condition& c) {
    auto lq = parse_quantity(c.left);
    auto rq = parse_quantity(c.right);
    if (lq && rq)
        return c.cmp == Comparator::less ? lq->value < rq->value : lq->value > rq->value;
    auto ld = parse_date(c.left);
    auto rd = parse_date(c.right);
    if (ld && rd)
        return c.cmp == Comparator::less ? *ld < *rd : *rd < *ld;
    return c.cmp == Comparator::less ? c.left < c.right : c.right < c.left;
}

}  // namespace

EvalResult eval_symbolic(const SymbolicExpr& expr) {
    EvalResult r;
    switch (expr.op) {
    case SymbolicOp::count:
        r.answer = Answer::make_quantity(static_cast<double>(expr.args.size()));
        return r;

    case SymbolicOp::top:
    case SymbolicOp::bottom: {
        auto vals = parse_values(expr.args);
        if (!vals) return eval_error("non-numeric argument to top/bottom");
        if (!expr.k) return eval_error("top/bottom without k");
        auto idx = kth_distinct_index(vals->v, *expr.k, expr.op == SymbolicOp::top);
        if (!idx) return eval_error("k exceeds the number of distinct values");
        r.answer = Answer::make_text(expr.args[*idx]);
        return r;
    }

    case SymbolicOp::sum: {
        auto vals = parse_values(expr.args);
        if (!vals) return eval_error("non-numeric argument to sum");
        double total = 0;
        for (double x : vals->v) total += x;
        r.answer = Answer::make_quantity(total, common_unit(*vals));
        return r;
    }

    case SymbolicOp::diff: {
        auto vals = parse_values(expr.args);
        if (!vals) return eval_error("non-numeric argument to diff");
        r.answer = Answer::make_quantity(std::abs(vals->v[0] - vals->v[1]), common_unit(*vals));
        return r;
    }

    case SymbolicOp::if_then: {
        if (!expr.condition || expr.args.size() != 2)
            return eval_error("malformed if_then expression");
        r.answer = Answer::make_text(condition_holds(*expr.condition) ? expr.args[0]
                                                                      : expr.args[1]);
        return r;
    }

    case SymbolicOp::gather:
        r.answer = Answer::make_text(gather_join(expr.args));
        return r;

    case SymbolicOp::intersection: {
        if (!expr.rhs_start) return eval_error("intersection without list split");
        std::vector<std::string> rhs_norms;
        for (size_t i = *expr.rhs_start; i < expr.args.size(); ++i)
            rhs_norms.push_back(normalize_answer_text(expr.args[i]));
        std::vector<std::string> out;
        std::set<std::string> seen;
        for (size_t i = 0; i < *expr.rhs_start; ++i) {
            std::string n = normalize_answer_text(expr.args[i]);
            if (seen.count(n)) continue;
            if (std::find(rhs_norms.begin(), rhs_norms.end(), n) != rhs_norms.end()) {
                out.push_back(expr.args[i]);
                seen.insert(n);
            }
        }
        if (out.empty()) return eval_error("empty intersection");
        r.answer = Answer::make_spans(std::move(out));
        return r;
    }

    case SymbolicOp::negation: {
        auto q = parse_quantity(expr.args[0]);
        if (!q) return eval_error("non-numeric argument to negation");
        r.answer = Answer::make_quantity(100.0 - q->value, q->unit);
        return r;
    }
    }
    return eval_error("unknown operation");
}

std::string render_symbolic(const SymbolicExpr& expr) {
    std::string out = symbolic_op_name(expr.op);
    out += '(';
    if (expr.op == SymbolicOp::top || expr.op == SymbolicOp::bottom)
        out += std::to_string(expr.k.value_or(1)) + ", ";
    if (expr.op == SymbolicOp::if_then && expr.condition) {
        out += expr.condition->left;
        out += expr.condition->cmp == Comparator::less ? " < " : " > ";
        out += expr.condition->right;
        out += "; ";
    }
    for (size_t i = 0; i < expr.args.size(); ++i) {
        if (i)
            out += expr.rhs_start && i == *expr.rhs_start ? " | " : "; ";
        out += expr.args[i];
    }
    out += ')';
    return out;
}

namespace {

std::string ordinal_word(int k) {
    switch (k) {
    case 2: return "second";
    case 3: return "third";
    case 4: return "fourth";
    case 5: return "fifth";
    case 6: return "sixth";
    case 7: return "seventh";
    case 8: return "eighth";
    case 9: return "ninth";
    default: return std::to_string(k) + "th";
    }
}

}  // namespace

std::string naturalize_symbolic(const SymbolicExpr& expr) {
    switch (expr.op) {
    case SymbolicOp::count:
        return "How many items are in the list: " + natural_join(expr.args) + "?";
    case SymbolicOp::top:
    case SymbolicOp::bottom: {
        std::string size_word = expr.op == SymbolicOp::top ? "largest" : "smallest";
        int k = expr.k.value_or(1);
        std::string lead = k == 1 ? "What is the " + size_word
                                  : "What is the " + ordinal_word(k) + " " + size_word;
        return lead + " value in: " + natural_join(expr.args) + "?";
    }
    case SymbolicOp::sum:
        return "What is the sum of " + natural_join(expr.args) + "?";
    case SymbolicOp::diff:
        return "What is the difference between " + expr.args[0] + " and " + expr.args[1] + "?";
    case SymbolicOp::if_then: {
        std::string cmp = expr.condition && expr.condition->cmp == Comparator::less ? "<" : ">";
        std::string left = expr.condition ? expr.condition->left : "";
        std::string right = expr.condition ? expr.condition->right : "";
        return "If " + left + " " + cmp + " " + right + " then answer is " + expr.args[0] +
               " else it is " + expr.args[1];
    }
    case SymbolicOp::gather:
        return "What is the combined list of: " + natural_join(expr.args) + "?";
    case SymbolicOp::intersection: {
        size_t split = expr.rhs_start.value_or(expr.args.size());
        std::vector<std::string> lhs(expr.args.begin(), expr.args.begin() + split);
        std::vector<std::string> rhs(expr.args.begin() + split, expr.args.end());
        return "Which items appear in both: " + natural_join(lhs) + " and " +
               natural_join(rhs) + "?";
    }
    case SymbolicOp::negation:
        return "What is the difference between 100 and " + expr.args[0] + "?";
    }
    return {};
}

}  // namespace sprompt
