#include "stratifold/verdict.hpp"

#include <algorithm>

namespace stratifold {

std::string_view to_string(Answer a)
{
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Undetermined: return "undetermined";
    }
    return "?";
}

std::string_view to_string(Outcome o)
{
    switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Skip: return "SKIP";
    }
    return "?";
}

void Verdict::record(std::string condition, std::string anchor, Outcome outcome, std::string detail)
{
    trace.push_back({std::move(condition), std::move(anchor), outcome, std::move(detail)});
}

void Verdict::append(const Verdict& other)
{
    trace.insert(trace.end(), other.trace.begin(), other.trace.end());
}

bool Verdict::has(std::string_view condition, Outcome outcome) const
{
    return std::any_of(trace.begin(), trace.end(),
                       [&](const TraceEntry& t) { return t.condition == condition && t.outcome == outcome; });
}

std::string format_trace(const Verdict& v)
{
    std::string out;
    for (const auto& t : v.trace) {
        out += t.condition;
        out += ' ';
        out += t.anchor;
        out += ' ';
        out += to_string(t.outcome);
        out += '\n';
    }
    return out;
}

}  // namespace stratifold
