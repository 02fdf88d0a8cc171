#include "tricat/json_io.hpp"

namespace tricat {

json matrix_to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const FieldElement& e = m.at(i, j);
            if (m.field().kind == Field::Kind::prime) {
                entries.push_back(e.res());
            } else if (e.rat().get_den() == 1) {
                entries.push_back(json::parse(e.rat().get_num().get_str()));
            } else {
                entries.push_back(
                    json::array({e.rat().get_num().get_str(), e.rat().get_den().get_str()}));
            }
        }
    return json{{"field", m.field().to_string()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
    try {
        Field f = Field::parse(j.at("field").get<std::string>());
        int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
        const json& entries = j.at("entries");
        if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
            throw ParseError("matrix: entries length must be rows*cols");
        ExactMatrix m(f, rows, cols);
        int idx = 0;
        for (int i = 0; i < rows; ++i)
            for (int c = 0; c < cols; ++c, ++idx) {
                const json& e = entries[static_cast<size_t>(idx)];
                if (e.is_number_integer()) {
                    m.set(i, c, FieldElement::from_int(f, e.get<long>()));
                } else if (e.is_array() && e.size() == 2) {
                    if (f.kind != Field::Kind::rationals)
                        throw ParseError("matrix: fraction entry in a prime field");
                    m.set(i, c,
                          FieldElement::rational(mpz_class(e[0].get<std::string>()),
                                                 mpz_class(e[1].get<std::string>())));
                } else {
                    throw ParseError("matrix: entry must be an integer or [num, den]");
                }
            }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix: ") + e.what());
    }
}

json complex_to_json(const Complex& c) {
    json diffs = json::array();
    for (const auto& d : c.diffs) diffs.push_back(matrix_to_json(d));
    return json{{"field", c.field.to_string()},
                {"lo", c.lo},
                {"hi", c.hi()},
                {"dims", c.dims},
                {"differentials", diffs}};
}

Complex complex_from_json(const json& j) {
    try {
        int lo = j.at("lo").get<int>();
        std::vector<int> dims = j.at("dims").get<std::vector<int>>();
        std::vector<ExactMatrix> diffs;
        for (const auto& d : j.at("differentials")) diffs.push_back(matrix_from_json(d));
        Field f = j.contains("field") ? Field::parse(j.at("field").get<std::string>())
                  : diffs.empty()     ? Field::Q()
                                      : diffs.front().field();
        return make_complex(f, lo, dims, diffs);
    } catch (const json::exception& e) {
        throw ParseError(std::string("complex: ") + e.what());
    }
}

json chain_map_to_json(const ChainInstance& inst, const Mor& f) {
    const Complex &src = ChainInstance::complex_of(f.source),
                  &tgt = ChainInstance::complex_of(f.target);
    json maps = json::object();
    for (int n = std::min(src.lo, tgt.lo); n <= std::max(src.hi(), tgt.hi()); ++n) {
        ExactMatrix c = ChainInstance::component(f, n);
        if (!c.is_zero()) maps[std::to_string(n)] = matrix_to_json(c);
    }
    return json{{"source", complex_to_json(src)}, {"target", complex_to_json(tgt)},
                {"maps", maps}};
}

Mor chain_map_from_json(const ChainInstance& inst, const json& j) {
    try {
        Complex src = complex_from_json(j.at("source"));
        Complex tgt = complex_from_json(j.at("target"));
        std::map<int, ExactMatrix> comps;
        for (const auto& [k, v] : j.at("maps").items())
            comps.emplace(std::stoi(k), matrix_from_json(v));
        return inst.chain_mor(inst.object(src), inst.object(tgt), comps);
    } catch (const json::exception& e) {
        throw ParseError(std::string("chain map: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("chain map: degree keys must be integers");
    }
}

json module_to_json(const SqZeroModule& m) {
    return json{{"dim", m.dim}, {"x", matrix_to_json(m.x)}};
}

SqZeroModule module_from_json(const json& j) {
    try {
        ExactMatrix x = matrix_from_json(j.at("x"));
        if (j.at("dim").get<int>() != x.rows())
            throw ParseError("module: dim does not match the action matrix");
        return SqZeroModule::make(x);
    } catch (const json::exception& e) {
        throw ParseError(std::string("module: ") + e.what());
    }
}

json vect_triangle_to_json(const CandidateTriangle& t) {
    return json{{"f", matrix_to_json(VectInstance::matrix(t.f))},
                {"g", matrix_to_json(VectInstance::matrix(t.g))},
                {"h", matrix_to_json(VectInstance::matrix(t.h))}};
}

CandidateTriangle vect_triangle_from_json(const VectInstance& inst, const json& j) {
    try {
        Mor f = inst.mor(matrix_from_json(j.at("f")));
        Mor g = inst.mor(matrix_from_json(j.at("g")));
        Mor h = inst.mor(matrix_from_json(j.at("h")));
        if (g.source != f.target || h.source != g.target)
            throw ParseError("triangle: morphisms are not composable");
        CandidateTriangle t{f.source, f.target, g.target, f, g, h};
        std::string why;
        if (!candidate_well_formed(inst, t, &why)) throw ParseError("triangle: " + why);
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("triangle: ") + e.what());
    }
}

json check_results_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back(json{{"id", c.id},
                           {"samples", c.samples},
                           {"failures", c.failures},
                           {"messages", c.messages}});
    return arr;
}

json verify_report_to_json(const VerifyReport& rep) {
    return json{{"instance", rep.instance},
                {"seed", rep.seed},
                {"samples", rep.samples},
                {"checks", check_results_to_json(rep.checks)},
                {"pass", rep.pass()}};
}

json loc_report_to_json(const LocReport& rep) {
    return json{{"checks", check_results_to_json(rep.checks)}, {"pass", rep.pass()}};
}

}  // namespace tricat
