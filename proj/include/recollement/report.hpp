#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace recoll {

using Json = nlohmann::ordered_json;

/// One verified claim. `name` is a stable dotted identifier, `claim` states
/// the property in words, and `detail` carries the payload; failing records
/// embed a counterexample that replays through the library.
struct CheckRecord {
    std::string name;
    std::string claim;
    bool pass = false;
    Json detail = Json::object();
};

using CheckList = std::vector<CheckRecord>;

inline CheckRecord make_check(std::string name, std::string claim, bool pass,
                              Json detail = Json::object()) {
    return CheckRecord{std::move(name), std::move(claim), pass, std::move(detail)};
}

/// Full run report. Serialization is canonical: same config in, same bytes
/// out. That stability is part of the output contract.
struct Report {
    std::string command;
    Json config = Json::object();
    std::vector<std::string> notes;
    CheckList checks;

    std::size_t failed_count() const;
    std::size_t passed_count() const { return checks.size() - failed_count(); }
    Json to_json() const;
    std::string to_string() const;
};

inline constexpr const char* kToolName = "recollement-kit";
inline constexpr const char* kToolVersion = "0.1.0";

/// splitmix64; all sampling decisions flow from the single run seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }

private:
    uint64_t state_;
};

} // namespace recoll
