#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ec::cli {

struct RecipeOptions {
    std::optional<int> n;
    std::uint64_t seed = 20240601;
};

// One compared quantity: what the closed form or table says, and what was computed.
struct RecipeCheck {
    std::string what;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct RecipeResult {
    std::vector<RecipeCheck> checks;
    bool pass() const;
};

struct Recipe {
    std::string name;
    std::string summary;
    std::function<RecipeResult(const RecipeOptions&)> run;
};

const std::vector<Recipe>& recipes();
const Recipe* find_recipe(const std::string& name);

}  // namespace ec::cli
