#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace moorelab {

/// One named assertion; failures carry the offending vertices by name.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
    std::vector<std::string> offending;
};

/// Ordered list of checks. Failures are entries, never exceptions.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}, std::vector<std::string> offending = {});
    bool passed() const;
    const Check* find(std::string_view name) const;
    nlohmann::json to_json() const;
};

}  // namespace moorelab
