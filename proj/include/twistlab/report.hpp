#pragma once

#include <string>
#include <vector>

namespace twistlab {

enum class Status { Pass, Fail, Inconclusive };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "inconclusive";
    }
}

/// One verified identity: name, outcome, size of the residual (term count
/// of the difference; 0 for a pass) and the source anchor it checks.
struct Check {
    std::string name;
    Status status = Status::Pass;
    long residual_terms = 0;
    std::string anchor;
    std::string note;

    static Check residual(std::string name, long terms, std::string anchor, std::string note = "") {
        Check c;
        c.name = std::move(name);
        c.status = terms == 0 ? Status::Pass : Status::Fail;
        c.residual_terms = terms;
        c.anchor = std::move(anchor);
        c.note = std::move(note);
        return c;
    }
    static Check boolean(std::string name, bool ok, std::string anchor, std::string note = "") {
        Check c;
        c.name = std::move(name);
        c.status = ok ? Status::Pass : Status::Fail;
        c.residual_terms = ok ? 0 : 1;
        c.anchor = std::move(anchor);
        c.note = std::move(note);
        return c;
    }
    static Check inconclusive(std::string name, std::string anchor, std::string note = "") {
        Check c;
        c.name = std::move(name);
        c.status = Status::Inconclusive;
        c.residual_terms = 0;
        c.anchor = std::move(anchor);
        c.note = std::move(note);
        return c;
    }
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;  // echoed key/value pairs
    std::vector<Check> checks;
    double seconds = 0.0;

    bool all_pass() const {
        for (auto& c : checks)
            if (c.status != Status::Pass) return false;
        return true;
    }
    bool any_fail() const {
        for (auto& c : checks)
            if (c.status == Status::Fail) return true;
        return false;
    }
    bool any_inconclusive() const {
        for (auto& c : checks)
            if (c.status == Status::Inconclusive) return true;
        return false;
    }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace twistlab
