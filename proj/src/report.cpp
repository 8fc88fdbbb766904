#include "recollement/report.hpp"

namespace recoll {

std::size_t Report::failed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

Json Report::to_json() const {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["config"] = config;
    j["notes"] = notes;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json r;
        r["name"] = c.name;
        r["claim"] = c.claim;
        r["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) r["detail"] = c.detail;
        arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    j["summary"] = Json{{"checks", checks.size()},
                        {"passed", passed_count()},
                        {"failed", failed_count()}};
    return j;
}

std::string Report::to_string() const { return to_json().dump(2) + "\n"; }

} // namespace recoll
