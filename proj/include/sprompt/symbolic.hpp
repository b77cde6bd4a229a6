#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sprompt/answer.hpp"

namespace sprompt {

// Calculator call grammar (the wire format between QD output and the
// calculator; everything is one flat call, no nesting):
//
//   call        := op "(" args ")"
//   op          := "count" | "top" | "bottom" | "sum" | "diff" | "if_then"
//                | "gather" | "intersection" | "negation"
//                | "max" | "min"                 (aliases for top(1)/bottom(1))
//   args        := k "," list                    (top/bottom only)
//                | cond ";" arg ";" arg          (if_then)
//                | list "|" list                 (intersection)
//                | list
//   list        := arg (";" arg)*
//   cond        := arg ("<" | ">") arg
//
// Arguments are verbatim strings; numeric arguments may carry thousands
// separators and unit suffixes ("5,666", "42-yard").
enum class SymbolicOp { count, top, bottom, sum, diff, if_then, gather, intersection, negation };

const char* symbolic_op_name(SymbolicOp op);

enum class Comparator { less, greater };

struct Condition {
    std::string left;
    Comparator cmp = Comparator::greater;
    std::string right;

    bool operator==(const Condition& o) const = default;
};

struct SymbolicExpr {
    SymbolicOp op = SymbolicOp::count;
    std::optional<int> k;                  // top/bottom only, 1-based
    std::optional<Condition> condition;    // if_then only
    std::vector<std::string> args;
    // intersection only: index where the second operand list begins
    std::optional<size_t> rhs_start;

    bool operator==(const SymbolicExpr& o) const = default;
};

// parse_symbolic distinguishes text that is not a calculator call at all
// (routed to the LM) from a recognized call with invalid arguments.
struct SymbolicParse {
    enum class Status { ok, not_symbolic, malformed };
    Status status = Status::not_symbolic;
    std::optional<SymbolicExpr> expr;
    std::string error;

    bool ok() const { return status == Status::ok; }
};

SymbolicParse parse_symbolic(const std::string& surface);

// Deterministic evaluation. `error` is set for non-numeric arguments to
// numeric ops, out-of-range k and similar; callers fall back to the LM.
struct EvalResult {
    std::optional<Answer> answer;
    std::string error;

    bool ok() const { return answer.has_value(); }
};

EvalResult eval_symbolic(const SymbolicExpr& expr);

// Canonical surface form; parse_symbolic(render_symbolic(e)) == e.
std::string render_symbolic(const SymbolicExpr& expr);

// Fixed English paraphrase per operation.
std::string naturalize_symbolic(const SymbolicExpr& expr);

}  // namespace sprompt
