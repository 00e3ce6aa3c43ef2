/**
 * Three-valued answers with an audit trail.
 *
 * Every decision procedure records the conditions it evaluated, each tagged
 * with the identifier of the result that justifies it, so a caller can see
 * why an answer was reached (or which query blocked it).
 */
#ifndef STRATIFOLD_VERDICT_HPP
#define STRATIFOLD_VERDICT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace stratifold {

enum class Answer
{
    Yes,
    No,
    Undetermined
};

enum class Outcome
{
    Pass,
    Fail,
    Skip
};

std::string_view to_string(Answer a);
std::string_view to_string(Outcome o);

struct TraceEntry
{
    std::string condition;
    std::string anchor;
    Outcome outcome = Outcome::Skip;
    std::string detail;
};

struct Verdict
{
    Answer answer = Answer::Undetermined;
    std::vector<TraceEntry> trace;
    std::string blocking_query;  // set when answer is Undetermined

    void record(std::string condition, std::string anchor, Outcome outcome, std::string detail = {});
    void append(const Verdict& other);

    bool has(std::string_view condition, Outcome outcome) const;
};

/// "<condition> <anchor> <PASS|FAIL|SKIP>" per line.
std::string format_trace(const Verdict& v);

}  // namespace stratifold

#endif
