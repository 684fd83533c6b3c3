#include "nullcone/recipes.hpp"

#include <fstream>

#include <json.hpp>

#include "nullcone/linalg.hpp"

namespace nullcone {

namespace {

// "451" -> +e_{451}; "-143" -> -e_{143}; "0" / "" -> zero.
Rat entry_value(const Tensor& x, const std::string& label) {
    if (label.empty() || label == "0") return Rat(0);
    int sign = 1;
    std::string s = label;
    if (s[0] == '-') {
        sign = -1;
        s = s.substr(1);
    } else if (s[0] == '+') {
        s = s.substr(1);
    }
    if (s.size() != 3) throw std::invalid_argument("recipe: bad coordinate label " + label);
    std::vector<std::vector<int>> idx = {{s[0] - '0', s[1] - '0'}, {s[2] - '0'}};
    int wsign = wedge_sort(idx[0]);
    if (wsign == 0) throw std::invalid_argument("recipe: degenerate label " + label);
    std::size_t o = x.basis->ordinal(0, idx);
    return Rat(sign * wsign) * x.at(o);
}

RatMat build_matrix(const Tensor& x, const std::vector<std::vector<std::string>>& m) {
    RatMat out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m[0].size()) throw std::invalid_argument("recipe: ragged matrix");
        for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = entry_value(x, m[i][j]);
    }
    return out;
}

std::array<Rat, 3> build_triple(const Tensor& x, const std::vector<std::string>& v) {
    if (v.size() != 3) throw std::invalid_argument("recipe: need 3 entries");
    return {entry_value(x, v[0]), entry_value(x, v[1]), entry_value(x, v[2])};
}

Cube332 build_cube(const Tensor& x, const std::vector<std::vector<std::vector<std::string>>>& c) {
    Cube332 out;
    if (c.size() != 3) throw std::invalid_argument("recipe: cube must be 3x3x2");
    for (int i = 0; i < 3; ++i) {
        if (c[i].size() != 3) throw std::invalid_argument("recipe: cube must be 3x3x2");
        for (int j = 0; j < 3; ++j) {
            if (c[i][j].size() != 2) throw std::invalid_argument("recipe: cube must be 3x3x2");
            for (int k = 0; k < 2; ++k) out[i][j][k] = entry_value(x, c[i][j][k]);
        }
    }
    return out;
}

Rat eval_op(const RecipeOp& op, const Tensor& x) {
    if (op.op == "coord") return entry_value(x, op.entry);
    if (op.op == "det") return determinant(build_matrix(x, op.matrix));
    if (op.op == "pfaff") {
        RatMat m = build_matrix(x, op.matrix);
        return pfaffian(m);
    }
    if (op.op == "disc_pencil_det") {
        if (op.matrices.size() != 2) throw std::invalid_argument("disc_pencil_det: need 2 matrices");
        RatMat a = build_matrix(x, op.matrices[0]);
        RatMat b = build_matrix(x, op.matrices[1]);
        if (a.rows() == 2) return p_222(a, b);
        if (a.rows() == 3) return p_332(a, b);
        throw std::invalid_argument("disc_pencil_det: size must be 2 or 3");
    }
    if (op.op == "disc_pencil_pfaff") {
        if (op.matrices.size() != 2) throw std::invalid_argument("disc_pencil_pfaff: need 2 matrices");
        return p_wedge42(build_matrix(x, op.matrices[0]), build_matrix(x, op.matrices[1]));
    }
    if (op.op == "p_wedge53") {
        if (op.matrices.size() != 3) throw std::invalid_argument("p_wedge53: need 3 matrices");
        return p_wedge53(build_matrix(x, op.matrices[0]), build_matrix(x, op.matrices[1]),
                         build_matrix(x, op.matrices[2]));
    }
    if (op.op == "p_wedge43") {
        if (op.matrices.size() != 3) throw std::invalid_argument("p_wedge43: need 3 matrices");
        return p_wedge43(build_matrix(x, op.matrices[0]), build_matrix(x, op.matrices[1]),
                         build_matrix(x, op.matrices[2]));
    }
    if (op.op == "p1_433") {
        RatVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = entry_value(x, op.vec[i]);
        return p1_433(build_matrix(x, op.matrices[0]), build_matrix(x, op.matrices[1]),
                      build_matrix(x, op.matrices[2]), v);
    }
    if (op.op == "p2_433") {
        return p2_433(build_matrix(x, op.matrices[0]), build_matrix(x, op.matrices[1]),
                      build_matrix(x, op.matrices[2]));
    }
    if (op.op == "p_322") {
        return p_322(build_matrix(x, op.matrices[0]), build_matrix(x, op.matrices[1]),
                     build_matrix(x, op.matrices[2]));
    }
    if (op.op == "p1_332") return p1_332(build_cube(x, op.cube));
    if (op.op == "p2_332") return p2_332(build_triple(x, op.wedge), build_cube(x, op.cube));
    if (op.op == "p1_42w42") {
        return p1_42w42(build_matrix(x, op.matrix), build_matrix(x, op.matrices[0]),
                        build_matrix(x, op.matrices[1]));
    }
    if (op.op == "wedge_vvb4") {
        RatVec v1(4), v2(4);
        for (int i = 0; i < 4; ++i) {
            v1[i] = entry_value(x, op.vec[i]);
            v2[i] = entry_value(x, op.wedge[i]);
        }
        return wedge_vvb4(v1, v2, build_matrix(x, op.matrices[0]));
    }
    if (op.op == "wedge3_pair")
        return wedge3_pair(build_triple(x, op.wedge), build_triple(x, op.vec));
    throw std::invalid_argument("recipe: unresolved primitive '" + op.op + "'");
}

}  // namespace

std::vector<Recipe> load_recipes(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;
    std::vector<Recipe> out;
    for (const auto& rec : j.at("recipes")) {
        Recipe r;
        r.beta_index = rec.at("i").get<int>();
        r.stub = rec.value("stub", false);
        r.note = rec.value("note", std::string());
        if (r.stub) {
            out.push_back(std::move(r));
            continue;
        }
        for (const auto& o : rec.at("ops")) {
            RecipeOp op;
            op.name = o.at("name").get<std::string>();
            op.op = o.at("op").get<std::string>();
            if (o.contains("matrix")) op.matrix = o["matrix"];
            if (o.contains("matrices")) op.matrices = o["matrices"];
            if (o.contains("vector")) op.vec = o["vector"].get<std::vector<std::string>>();
            if (o.contains("wedge")) op.wedge = o["wedge"].get<std::vector<std::string>>();
            if (o.contains("cube")) op.cube = o["cube"];
            if (o.contains("entry")) op.entry = o["entry"].get<std::string>();
            r.ops.push_back(std::move(op));
        }
        for (const auto& v : rec.at("value"))
            r.value.emplace_back(v.at(0).get<std::string>(), v.at(1).get<int>());
        r.expected = Rat::parse(rec.at("expected").get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

std::map<int, Tensor> load_representatives(const std::string& path, const Basis& basis) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    f >> j;
    std::map<int, Tensor> out;
    for (const auto& [key, coeffs] : j.at("points").items()) {
        Tensor t(basis);
        for (const auto& [lbl, c] : coeffs.items()) {
            std::vector<std::vector<int>> idx = {{lbl[0] - '0', lbl[1] - '0'}, {lbl[2] - '0'}};
            t.add(0, idx, Rat(c.get<long>()));
        }
        out.emplace(std::stoi(key), std::move(t));
    }
    return out;
}

RecipeResult eval_recipe(const Recipe& recipe, const Tensor& x) {
    RecipeResult res;
    res.beta_index = recipe.beta_index;
    res.stub = recipe.stub;
    if (recipe.stub) return res;
    std::map<std::string, Rat> named;
    for (const auto& op : recipe.ops) {
        Rat v = eval_op(op, x);
        named[op.name] = v;
        res.values.emplace_back(op.name, v);
    }
    Rat combined(1);
    for (const auto& [name, power] : recipe.value) {
        auto it = named.find(name);
        if (it == named.end())
            throw std::invalid_argument("recipe: value references unknown op '" + name + "'");
        for (int k = 0; k < power; ++k) combined *= it->second;
    }
    res.combined = combined;
    res.expected = recipe.expected;
    res.pass = (combined == recipe.expected);
    return res;
}

}  // namespace nullcone
