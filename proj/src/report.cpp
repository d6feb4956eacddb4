#include "moorelab/report.hpp"

#include <algorithm>

namespace moorelab {

void Report::add(std::string name, bool passed, std::string detail, std::vector<std::string> offending)
{
    checks.push_back({std::move(name), passed, std::move(detail), std::move(offending)});
}

bool Report::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::find(std::string_view name) const
{
    auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& c : checks) {
        nlohmann::json entry = {{"verdict", c.passed ? "pass" : "fail"}, {"detail", c.detail}};
        if (!c.offending.empty())
            entry["offending"] = c.offending;
        out[c.name] = std::move(entry);
    }
    return out;
}

}  // namespace moorelab
