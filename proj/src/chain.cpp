#include "sprompt/chain.hpp"

#include <stdexcept>

namespace sprompt {

SimpleQuestion SimpleQuestion::natural(std::string surface) {
    SimpleQuestion q;
    q.surface = std::move(surface);
    q.form = QuestionForm::natural;
    return q;
}

SimpleQuestion SimpleQuestion::symbolic(const SymbolicExpr& expr) {
    SimpleQuestion q;
    q.surface = render_symbolic(expr);
    q.form = QuestionForm::symbolic;
    q.parsed = expr;
    return q;
}

bool SimpleQuestion::operator==(const SimpleQuestion& o) const {
    return surface == o.surface && form == o.form && parsed == o.parsed;
}

const std::vector<ReasoningType>& all_reasoning_types() {
    static const std::vector<ReasoningType> types = {
        ReasoningType::filter,          ReasoningType::count,
        ReasoningType::comparison,      ReasoningType::difference,
        ReasoningType::negation,        ReasoningType::intersection,
        ReasoningType::sum,             ReasoningType::sort,
        ReasoningType::sort_filter,     ReasoningType::difference_sort,
        ReasoningType::sum_sort,        ReasoningType::count_filter,
        ReasoningType::gather_count,    ReasoningType::sum_count,
        ReasoningType::difference_count,ReasoningType::sort_count,
        ReasoningType::comparison_count,
    };
    return types;
}

const char* reasoning_type_name(ReasoningType t) {
    switch (t) {
    case ReasoningType::filter: return "filter";
    case ReasoningType::count: return "count";
    case ReasoningType::comparison: return "comparison";
    case ReasoningType::difference: return "difference";
    case ReasoningType::negation: return "negation";
    case ReasoningType::intersection: return "intersection";
    case ReasoningType::sum: return "sum";
    case ReasoningType::sort: return "sort";
    case ReasoningType::sort_filter: return "sort_filter";
    case ReasoningType::difference_sort: return "difference_sort";
    case ReasoningType::sum_sort: return "sum_sort";
    case ReasoningType::count_filter: return "count_filter";
    case ReasoningType::gather_count: return "gather_count";
    case ReasoningType::sum_count: return "sum_count";
    case ReasoningType::difference_count: return "difference_count";
    case ReasoningType::sort_count: return "sort_count";
    case ReasoningType::comparison_count: return "comparison_count";
    }
    return "?";
}

std::optional<ReasoningType> reasoning_type_from_name(const std::string& name) {
    for (ReasoningType t : all_reasoning_types())
        if (name == reasoning_type_name(t)) return t;
    return std::nullopt;
}

void to_json(nlohmann::json& j, const Answer& a) {
    switch (a.kind()) {
    case Answer::Kind::spans:
        j = {{"kind", "spans"}, {"spans", a.spans()}};
        break;
    case Answer::Kind::quantity:
        j = {{"kind", "quantity"}, {"value", a.quantity().value}};
        if (!a.quantity().unit.empty()) j["unit"] = a.quantity().unit;
        break;
    case Answer::Kind::text:
        j = {{"kind", "text"}, {"text", a.text()}};
        break;
    }
}

void from_json(const nlohmann::json& j, Answer& a) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "spans") {
        a = Answer::make_spans(j.at("spans").get<std::vector<std::string>>());
    } else if (kind == "quantity") {
        a = Answer::make_quantity(j.at("value").get<double>(),
                                  j.value("unit", std::string{}));
    } else if (kind == "text") {
        a = Answer::make_text(j.at("text").get<std::string>());
    } else {
        throw std::invalid_argument("unknown answer kind: " + kind);
    }
}

namespace {

const char* source_name(StepSource s) {
    switch (s) {
    case StepSource::lm: return "lm";
    case StepSource::calculator: return "calculator";
    case StepSource::gold: return "gold";
    }
    return "?";
}

StepSource source_from_name(const std::string& s) {
    if (s == "lm") return StepSource::lm;
    if (s == "calculator") return StepSource::calculator;
    if (s == "gold") return StepSource::gold;
    throw std::invalid_argument("unknown step source: " + s);
}

}  // namespace

void to_json(nlohmann::json& j, const Step& s) {
    j = {{"q", s.question.surface},
         {"form", s.question.form == QuestionForm::symbolic ? "symbolic" : "natural"},
         {"a", s.answer},
         {"source", source_name(s.source)}};
}

void from_json(const nlohmann::json& j, Step& s) {
    std::string surface = j.at("q").get<std::string>();
    std::string form = j.at("form").get<std::string>();
    if (form == "symbolic") {
        auto parsed = parse_symbolic(surface);
        if (parsed.ok()) {
            s.question = SimpleQuestion::symbolic(*parsed.expr);
            s.question.surface = surface;  // keep the recorded surface verbatim
        } else {
            s.question = SimpleQuestion::natural(surface);
            s.question.form = QuestionForm::symbolic;
        }
    } else {
        s.question = SimpleQuestion::natural(surface);
    }
    s.answer = j.at("a").get<Answer>();
    s.source = source_from_name(j.at("source").get<std::string>());
}

void to_json(nlohmann::json& j, const Chain& c) {
    j = {{"steps", c.steps}, {"terminated", c.terminated}};
    if (c.final)
        j["final"] = *c.final;
    else
        j["final"] = nullptr;
}

void from_json(const nlohmann::json& j, Chain& c) {
    c.steps = j.at("steps").get<std::vector<Step>>();
    c.terminated = j.at("terminated").get<bool>();
    if (j.contains("final") && !j.at("final").is_null())
        c.final = j.at("final").get<Answer>();
    else
        c.final.reset();
}

void to_json(nlohmann::json& j, const ComplexExample& e) {
    j = {{"id", e.id},
         {"passage", e.passage},
         {"question", e.question},
         {"reasoning_type", reasoning_type_name(e.reasoning_type)},
         {"chain", e.chain},
         {"provenance", {{"table", e.provenance.table_id}, {"generator", e.provenance.generator}}}};
    if (e.chain.final)
        j["answer"] = *e.chain.final;
    if (!e.alt_answers.empty())
        j["alt_answers"] = e.alt_answers;
}

void from_json(const nlohmann::json& j, ComplexExample& e) {
    e.id = j.at("id").get<std::string>();
    e.passage = j.at("passage").get<std::string>();
    e.question = j.at("question").get<std::string>();
    auto type = reasoning_type_from_name(j.at("reasoning_type").get<std::string>());
    if (!type)
        throw std::invalid_argument("unknown reasoning_type: " +
                                    j.at("reasoning_type").get<std::string>());
    e.reasoning_type = *type;
    e.chain = j.at("chain").get<Chain>();
    if (j.contains("provenance")) {
        e.provenance.table_id = j.at("provenance").value("table", std::string{});
        e.provenance.generator = j.at("provenance").value("generator", std::string{});
    }
    if (!e.chain.final && j.contains("answer"))
        e.chain.final = j.at("answer").get<Answer>();
    e.alt_answers.clear();
    if (j.contains("alt_answers"))
        e.alt_answers = j.at("alt_answers").get<std::vector<Answer>>();
}

}  // namespace sprompt
