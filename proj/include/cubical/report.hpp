#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/integer.hpp"

namespace cubical {

enum class Status
{
    pass,
    fail,
    inapplicable
};

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inapplicable: return "inapplicable";
    }
    return "?";
}

/// How lhs and rhs of a record are compared. Inequalities are always
/// oriented as lhs >= rhs.
enum class Relation
{
    equal,
    at_least
};

/// One exact comparison at one index of one identity.
struct Record
{
    std::string identity;
    int index = 0;
    Int lhs = 0;
    Int rhs = 0;
    Relation relation = Relation::equal;

    bool holds() const { return relation == Relation::equal ? lhs == rhs : lhs >= rhs; }
};

/**
 * Outcome of one theorem check on one complex. Both sides of every
 * comparison are kept, so a failure can be diagnosed from the report alone.
 */
struct VerificationReport
{
    std::string check;
    /// Human-readable statement of what was compared.
    std::string statement;
    Status status = Status::inapplicable;
    std::vector<Record> records;
    /// Set on failure: the first failing record, or a face/vertex witness.
    std::optional<std::string> witness;
    /// (condition, outcome) pairs, e.g. ("semi-Eulerian", "yes").
    std::vector<std::pair<std::string, std::string>> preconditions;
    std::vector<std::string> notes;

    void require(std::string condition, bool ok)
    {
        preconditions.emplace_back(std::move(condition), ok ? "yes" : "no");
    }

    void add(std::string identity, int index, Int lhs, Int rhs, Relation relation = Relation::equal)
    {
        records.push_back(Record{std::move(identity), index, lhs, rhs, relation});
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    /// Mark the check as not applicable to this input.
    VerificationReport& inapplicable(std::string reason)
    {
        status = Status::inapplicable;
        records.clear();
        notes.push_back("inapplicable: " + std::move(reason));
        return *this;
    }

    /// Derive status from the records; pass iff every record holds.
    VerificationReport& finish()
    {
        status = Status::pass;
        for (const Record& r : records) {
            if (!r.holds()) {
                status = Status::fail;
                if (!witness) {
                    witness = r.identity + " at index " + std::to_string(r.index) + ": lhs " +
                              std::to_string(r.lhs) + (r.relation == Relation::equal ? " != " : " < ") + "rhs " +
                              std::to_string(r.rhs);
                }
            }
        }
        return *this;
    }

    bool passed() const { return status == Status::pass; }
};

} // namespace cubical
