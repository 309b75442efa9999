#pragma once

#include <string>
#include <vector>

namespace hcs {

// Informational checks record an outcome without counting as a failure.
enum class Status { Pass, Fail, Info };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "?";
}

struct Check {
    std::string label;
    Status status = Status::Pass;
    std::string detail;
};

using Checks = std::vector<Check>;

inline Check check(std::string label, bool ok, std::string detail = {}) {
    return {std::move(label), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

inline bool all_pass(const Checks& cs) {
    for (const auto& c : cs)
        if (c.status == Status::Fail) return false;
    return true;
}

}  // namespace hcs
