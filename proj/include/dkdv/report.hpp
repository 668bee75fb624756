#pragma once

#include <string>
#include <vector>

namespace dkdv {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail; // lhs/rhs canonical text on failure
    long ms = 0;
};

struct CheckReport {
    std::vector<CheckResult> items;

    void add(std::string id, bool pass, std::string detail = "") {
        items.push_back({std::move(id), pass, std::move(detail), 0});
    }
    bool ok() const {
        for (const auto &i : items)
            if (!i.pass) return false;
        return true;
    }
};

} // namespace dkdv
