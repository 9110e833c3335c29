#pragma once

#include "rat4/json.hpp"

#include <string>
#include <vector>

namespace rat4 {

// Outcome of one verifier. `lines` is the human-readable text, `data` the JSON payload.
struct Report {
    std::string target;
    bool pass = true;
    std::vector<std::string> lines;
    std::vector<std::string> failures;
    json data = json::object();

    void note(std::string s) { lines.push_back(std::move(s)); }
    // Records a check; returns ok so callers can branch on it.
    bool check(bool ok, const std::string& what);
    std::string text() const;
    json to_json() const;
};

const std::vector<std::string>& verify_targets();
// Throws std::invalid_argument on an unknown target.
Report run_verifier(const std::string& target);
// Every target in order; the aggregate passes iff all do.
Report verify_all(std::vector<Report>* parts = nullptr);

}  // namespace rat4
