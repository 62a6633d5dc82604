#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mirrorq {

// One verification suite's outcome: a flat list of named checks, each
// pass/fail with an optional residual (exact "0" or a decimal magnitude).
struct CheckReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string residual;  // empty when not meaningful
    };

    std::string suite;
    std::vector<Item> items;

    void add(std::string name, bool pass, std::string residual = std::string()) {
        items.push_back({std::move(name), pass, std::move(residual)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
};

}  // namespace mirrorq
