#include "twyang/report_json.hpp"

#include "twyang/error.hpp"

namespace twyang {

json matrix_to_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<Rational> matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw Error(ErrorKind::ParseError, "matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    Matrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = j[r][c];
            if (e.is_string())
                m(r, c) = Rational::parse(e.get<std::string>());
            else if (e.is_number_integer())
                m(r, c) = Rational(e.get<long long>());
            else
                throw Error(ErrorKind::ParseError, "matrix entries must be integers or rational strings");
        }
    }
    return m;
}

json diagram_to_json(const SkewDiagram& d) { return json{{"lambda", d.lambda()}, {"mu", d.mu()}}; }

SkewDiagram diagram_from_json(const json& j) {
    try {
        return SkewDiagram(j.at("lambda").get<std::vector<int>>(), j.at("mu").get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("diagram: ") + e.what());
    }
}

json report_to_json(const IrreducibilityReport& r) {
    return json{{"spec", r.spec},
                {"form", r.form},
                {"N", r.N},
                {"on_wall", r.on_wall},
                {"laurent_order", r.laurent_order},
                {"phi_rank", r.phi_rank},
                {"phi_surjective", r.phi_surjective},
                {"commutant_dim", r.commutant_dim},
                {"K", r.K},
                {"stabilized", r.stabilized},
                {"verdict", to_string(r.verdict)},
                {"arithmetic", r.arithmetic},
                {"commutant_exact", r.commutant_exact}};
}

IrreducibilityReport report_from_json(const json& j) {
    IrreducibilityReport r;
    try {
        r.spec = j.at("spec").get<std::string>();
        r.form = j.at("form").get<std::string>();
        r.N = j.at("N").get<int>();
        r.on_wall = j.at("on_wall").get<std::vector<std::string>>();
        r.laurent_order = j.at("laurent_order").get<int>();
        r.phi_rank = j.at("phi_rank").get<std::size_t>();
        r.phi_surjective = j.at("phi_surjective").get<bool>();
        r.commutant_dim = j.at("commutant_dim").get<std::size_t>();
        r.K = j.at("K").get<int>();
        r.stabilized = j.at("stabilized").get<bool>();
        r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        r.arithmetic = j.at("arithmetic").get<std::string>();
        r.commutant_exact = j.at("commutant_exact").get<bool>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
    }
    return r;
}

}  // namespace twyang
