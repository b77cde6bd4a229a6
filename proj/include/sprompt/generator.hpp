#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sprompt/chain.hpp"
#include "sprompt/question_forms.hpp"
#include "sprompt/table.hpp"

namespace sprompt {

// ---------------------------------------------------------------------------
// Verbalization: one sentence per table row.

struct VerbalizationTemplate {
    std::string name;
    // Sentence pattern with {ColumnName} placeholders, e.g.
    // "In round {Round}, on {Date}, the opponent was {Opponent}."
    std::string pattern;
};

struct UnresolvedPlaceholderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generic fallback: "The round was R2 1st Leg, the date was ..., and the
// attendance was 5,666." Every cell value appears verbatim.
VerbalizationTemplate default_template(const Table& t);

// One sentence per row in row order, joined with spaces.
std::string verbalize(const Table& t, const VerbalizationTemplate& tpl);

// ---------------------------------------------------------------------------
// Example generation.

enum class EmissionMode { symbolic, natural, both };

// Static description of one reasoning-type generator: which column roles it
// needs and which question variants it can emit.
struct GeneratorSpec {
    ReasoningType type;
    std::string required_roles;
    EmissionMode supported = EmissionMode::both;
};

// Exactly one spec per reasoning type, in taxonomy order.
const std::vector<GeneratorSpec>& generator_specs();

struct GenerateOptions {
    std::set<ReasoningType> types;  // empty = all 17
    size_t limit_per_type = 8;
    uint64_t seed = 0;
    EmissionMode mode = EmissionMode::symbolic;
    int max_steps = kDefaultMaxSteps;
    // per-table verbalization overrides, keyed by table id
    std::map<std::string, VerbalizationTemplate> templates;
};

// Converts one table into complex examples with terminated gold chains.
// Generators whose column-role requirements the table cannot satisfy are
// silently skipped. Deterministic for fixed (table, options).
std::vector<ComplexExample> generate_examples(const Table& t, const GenerateOptions& opt);

// ---------------------------------------------------------------------------
// Chain replay quality gate.

struct SelfCheckResult {
    bool pass = false;
    int failed_step = -1;  // 0-based step index, or -1
    std::string message;
};

// Replays the gold chain against the table: natural steps through template
// matching + table lookup, symbolic steps through the calculator. Passes iff
// every recorded answer is reproduced and the final answer matches the last
// step.
SelfCheckResult self_check(const ComplexExample& e, const Table& t);

// ---------------------------------------------------------------------------
// Training splits.

// One decomposition-supervision record: given the complex input and a chain
// prefix, the target is the next simple question, or the end marker with the
// final answer.
struct QDExample {
    std::string parent_id;
    std::string passage;
    std::string question;
    std::vector<Step> steps;  // prefix of the gold chain
    size_t step_number = 0;   // == steps.size()
    std::optional<SimpleQuestion> target;  // absent => end marker
    std::optional<Answer> final;           // present  => end marker
    ReasoningType reasoning_type = ReasoningType::count;
};

struct QAExample {
    std::string passage;
    SimpleQuestion question;  // natural form only
    Answer answer;
    ReasoningType reasoning_type = ReasoningType::count;
};

// Per chain of s steps: s+1 QD examples and one QA example per natural step;
// identical QA examples are deduplicated (first occurrence kept).
std::pair<std::vector<QDExample>, std::vector<QAExample>> derive_training_splits(
    const std::vector<ComplexExample>& examples);

void to_json(nlohmann::json& j, const QDExample& e);
void from_json(const nlohmann::json& j, QDExample& e);
void to_json(nlohmann::json& j, const QAExample& e);
void from_json(const nlohmann::json& j, QAExample& e);

// ---------------------------------------------------------------------------
// Corpus statistics.

struct CorpusStats {
    std::map<std::string, size_t> per_type;  // keyed by reasoning type name
    size_t total = 0;

    std::string render() const;  // fixed-width text table
};

CorpusStats corpus_stats(const std::vector<ComplexExample>& examples);

}  // namespace sprompt
