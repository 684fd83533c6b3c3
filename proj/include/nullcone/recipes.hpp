#ifndef NULLCONE_RECIPES_HPP
#define NULLCONE_RECIPES_HPP

#include <optional>

#include "nullcone/invariants.hpp"
#include "nullcone/tensor.hpp"

namespace nullcone {

// One named primitive application inside a recipe. Matrix entries are signed
// coordinate labels ("451", "-143", "0") resolved against the flagship basis.
struct RecipeOp {
    std::string name;
    std::string op;
    std::vector<std::vector<std::string>> matrix;               // det / pfaff
    std::vector<std::vector<std::vector<std::string>>> matrices;  // pencils
    std::vector<std::string> vec;
    std::vector<std::string> wedge;
    std::vector<std::vector<std::vector<std::string>>> cube;    // 3x3x2
    std::string entry;
};

struct Recipe {
    int beta_index = 0;
    bool stub = false;          // construction not explicit here
    std::string note;
    std::vector<RecipeOp> ops;
    std::vector<std::pair<std::string, int>> value;  // product of powers
    Rat expected;
};

struct RecipeResult {
    int beta_index = 0;
    bool stub = false;
    std::vector<std::pair<std::string, Rat>> values;
    Rat combined;
    Rat expected;
    bool pass = false;
};

std::vector<Recipe> load_recipes(const std::string& path);

// Representative points, coordinate-label -> coefficient.
std::map<int, Tensor> load_representatives(const std::string& path, const Basis& basis);

// Evaluates the recipe's primitives on x and combines them; throws on an
// unresolved primitive name.
RecipeResult eval_recipe(const Recipe& recipe, const Tensor& x);

}  // namespace nullcone

#endif
