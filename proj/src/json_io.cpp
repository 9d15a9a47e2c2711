#include "sepscope/json_io.hpp"

#include <fstream>

namespace sepscope {

Json matrix_to_json(const Cmat& m) {
    Json re = Json::array(), im = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json rre = Json::array(), rim = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rre.push_back(m(i, j).real());
            rim.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rre));
        im.push_back(std::move(rim));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Cmat matrix_from_json(const Json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("re") ||
        !j.contains("im"))
        throw IoError("matrix JSON needs rows, cols, re, im");
    const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (static_cast<int>(re.size()) != rows || static_cast<int>(im.size()) != rows)
        throw IoError("matrix JSON: row count mismatch");
    Cmat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(re[i].size()) != cols ||
            static_cast<int>(im[i].size()) != cols)
            throw IoError("matrix JSON: column count mismatch");
        for (int c = 0; c < cols; ++c)
            m(i, c) = Complex(re[i][c].get<double>(), im[i][c].get<double>());
    }
    return m;
}

Json density_to_json(const DensityMatrix& rho) {
    Json j = matrix_to_json(rho.mat);
    j["dims"] = rho.dims.dims;
    return j;
}

DensityMatrix density_from_json(const Json& j) {
    if (!j.contains("dims")) throw IoError("density JSON needs dims");
    return {matrix_from_json(j), SubsystemDims(j["dims"].get<std::vector<int>>())};
}

Json povm_to_json(const SymmetricPovm& p) {
    Json ops = Json::array();
    for (const auto& row : p.operators) {
        Json jr = Json::array();
        for (const auto& e : row) jr.push_back(matrix_to_json(e));
        ops.push_back(std::move(jr));
    }
    std::string kind = p.kind == PovmKind::gsic  ? "gsic"
                       : p.kind == PovmKind::mum ? "mum"
                                                 : "general";
    return Json{{"dim", p.dim()},       {"groups", p.groups()},
                {"outcomes", p.outcomes()}, {"t", p.config.t},
                {"scheme", p.scheme},   {"kind", kind},
                {"x", p.x},             {"degenerate", p.degenerate},
                {"operators", ops}};
}

SymmetricPovm povm_from_json(const Json& j) {
    SymmetricPovm p;
    p.config = {j.at("dim").get<int>(), j.at("groups").get<int>(),
                j.at("outcomes").get<int>(), j.at("t").get<double>()};
    p.scheme = j.value("scheme", std::string("unknown"));
    std::string kind = j.value("kind", std::string("general"));
    p.kind = kind == "gsic" ? PovmKind::gsic
             : kind == "mum" ? PovmKind::mum
                             : PovmKind::general;
    p.x = j.value("x", 0.0);
    p.degenerate = j.value("degenerate", false);
    for (const auto& row : j.at("operators")) {
        std::vector<Cmat> ops;
        for (const auto& e : row) ops.push_back(matrix_from_json(e));
        p.operators.push_back(std::move(ops));
    }
    if (static_cast<int>(p.operators.size()) != p.config.groups)
        throw IoError("povm JSON: group count mismatch");
    return p;
}

Json verdict_to_json(const CriterionVerdict& v) {
    return Json{{"criterion", v.criterion},
                {"lhs", v.lhs},
                {"rhs", v.rhs},
                {"margin", v.margin},
                {"detected", v.detected}};
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("parse failure in " + path + ": " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace sepscope
