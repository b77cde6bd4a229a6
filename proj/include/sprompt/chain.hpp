#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sprompt/answer.hpp"
#include "sprompt/symbolic.hpp"

namespace sprompt {

constexpr int kDefaultMaxSteps = 10;

enum class QuestionForm { natural, symbolic };

struct SimpleQuestion {
    std::string surface;
    QuestionForm form = QuestionForm::natural;
    std::optional<SymbolicExpr> parsed;  // present iff form == symbolic

    static SimpleQuestion natural(std::string surface);
    static SimpleQuestion symbolic(const SymbolicExpr& expr);

    bool operator==(const SimpleQuestion& o) const;
};

enum class StepSource { lm, calculator, gold };

struct Step {
    SimpleQuestion question;
    Answer answer;
    StepSource source = StepSource::gold;
};

// The latent reasoning record: ordered simple QA pairs plus the final answer.
struct Chain {
    std::vector<Step> steps;
    std::optional<Answer> final;
    bool terminated = false;
};

// The 17 reasoning types of the synthetic dataset taxonomy.
enum class ReasoningType {
    filter,
    count,
    comparison,
    difference,
    negation,
    intersection,
    sum,
    sort,
    sort_filter,
    difference_sort,
    sum_sort,
    count_filter,
    gather_count,
    sum_count,
    difference_count,
    sort_count,
    comparison_count,
};

const std::vector<ReasoningType>& all_reasoning_types();
const char* reasoning_type_name(ReasoningType t);
std::optional<ReasoningType> reasoning_type_from_name(const std::string& name);

struct Provenance {
    std::string table_id;
    std::string generator;
};

struct ComplexExample {
    std::string id;
    std::string passage;
    std::string question;
    Chain chain;  // gold, terminated
    ReasoningType reasoning_type = ReasoningType::count;
    Provenance provenance;
    // optional extra gold answers accepted at scoring time
    std::vector<Answer> alt_answers;
};

// --- line-delimited JSON schema -------------------------------------------
// Answer:  {"kind":"spans","spans":[...]}
//          {"kind":"quantity","value":24632,"unit":"yard"}   (unit optional)
//          {"kind":"text","text":"..."}
// Step:    {"q":"...","form":"natural|symbolic","a":<Answer>,"source":"..."}
// Chain:   {"steps":[<Step>...],"final":<Answer>,"terminated":true}
// Example: {"id","passage","question","reasoning_type","chain","answer",
//           "provenance":{"table","generator"}}

void to_json(nlohmann::json& j, const Answer& a);
void from_json(const nlohmann::json& j, Answer& a);
void to_json(nlohmann::json& j, const Step& s);
void from_json(const nlohmann::json& j, Step& s);
void to_json(nlohmann::json& j, const Chain& c);
void from_json(const nlohmann::json& j, Chain& c);
void to_json(nlohmann::json& j, const ComplexExample& e);
void from_json(const nlohmann::json& j, ComplexExample& e);

}  // namespace sprompt
