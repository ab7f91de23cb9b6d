#include "liecon/tensor.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace liecon {

TensorLimit limit_tensor(const StructureTensor<ParamScalar>& c) {
    TensorLimit out;
    out.tensor = StructureTensor<Rational>(c.dim(), c.name());
    for (const auto& [key, val] : c.table()) {
        auto lim = val.limit_at_zero_plus();
        if (!lim.finite) {
            out.finite = false;
            out.diverges = {key.i, key.j, key.k};
            return out;
        }
        out.tensor.set(key.i, key.j, key.k, lim.value);
    }
    out.finite = true;
    return out;
}

StructureTensor<ParamScalar> lift(const StructureTensor<Rational>& c) {
    StructureTensor<ParamScalar> out(c.dim(), c.name());
    for (const auto& [key, val] : c.table()) out.set(key.i, key.j, key.k, ParamScalar(val));
    return out;
}

StructureTensor<double> to_double(const StructureTensor<Rational>& c) {
    StructureTensor<double> out(c.dim(), c.name());
    for (const auto& [key, val] : c.table()) out.set(key.i, key.j, key.k, val.to_double());
    return out;
}

StructureTensor<Rational> catalog(const std::string& name, int n) {
    if (name == "a") {
        if (n < 5) throw std::invalid_argument("catalog: a(n) requires n >= 5");
        StructureTensor<Rational> c(n, "a:" + std::to_string(n));
        c.set(1, 3, 3, Rational(1));
        c.set(2, 4, 4, Rational(1));
        c.set(1, 2, 5, Rational(1));
        return c;
    }
    if (name == "a0") {
        if (n < 5) throw std::invalid_argument("catalog: a0(n) requires n >= 5");
        StructureTensor<Rational> c(n, "a0:" + std::to_string(n));
        c.set(1, 3, 3, Rational(1));
        c.set(2, 4, 4, Rational(1));
        return c;
    }
    if (name == "abelian") {
        if (n < 1) throw std::invalid_argument("catalog: abelian(n) requires n >= 1");
        return StructureTensor<Rational>(n, "abelian:" + std::to_string(n));
    }
    if (name == "heisenberg") {
        if (n != 3) throw std::invalid_argument("catalog: heisenberg requires n = 3");
        StructureTensor<Rational> c(3, "heisenberg");
        c.set(1, 2, 3, Rational(1));
        return c;
    }
    throw std::invalid_argument("catalog: unknown algebra '" + name + "'");
}

StructureTensor<Rational> catalog_by_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        if (spec == "heisenberg") return catalog(spec, 3);
        throw std::invalid_argument("catalog: unknown algebra '" + spec + "'");
    }
    std::string name = spec.substr(0, colon);
    int n = std::stoi(spec.substr(colon + 1));
    return catalog(name, n);
}

StructureTensor<Rational> load_algebra_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    StructureTensor<Rational> c(j.at("dim").get<int>(),
                                j.value("name", std::string{}));
    for (const auto& b : j.at("brackets")) {
        int i = b.at("i").get<int>();
        int jj = b.at("j").get<int>();
        if (i >= jj) throw std::invalid_argument("algebra file: requires i < j");
        for (const auto& [kstr, vstr] : b.at("out").items()) {
            int k = std::stoi(kstr);
            ParamScalar v = ParamScalar::parse(vstr.get<std::string>());
            if (!v.is_constant())
                throw std::invalid_argument("algebra file: entry is not a rational constant");
            c.set(i, jj, k, v.constant_value());
        }
    }
    return c;
}

StructureTensor<Rational> load_algebra(const std::string& path_or_builtin) {
    try {
        return catalog_by_spec(path_or_builtin);
    } catch (const std::invalid_argument&) {
        // not a builtin name; fall through to the filesystem
    }
    std::ifstream in(path_or_builtin);
    if (!in) throw std::invalid_argument("cannot open algebra file '" + path_or_builtin + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_algebra_json(buf.str());
}

std::string algebra_to_json(const StructureTensor<Rational>& c) {
    nlohmann::json j;
    j["name"] = c.name();
    j["dim"] = c.dim();
    j["brackets"] = nlohmann::json::array();
    // group by (i, j)
    std::map<std::pair<int, int>, nlohmann::json> rows;
    for (const auto& [key, val] : c.table())
        rows[{key.i, key.j}][std::to_string(key.k)] = val.str();
    for (const auto& [ij, out] : rows) {
        nlohmann::json b;
        b["i"] = ij.first;
        b["j"] = ij.second;
        b["out"] = out;
        j["brackets"].push_back(b);
    }
    return j.dump(2);
}

}  // namespace liecon
