#include "quatkit/json_io.hpp"

#include <limits>

namespace quatkit::io {

json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return s.rat().to_string();
    return s.flt();
}

json quaternion_to_json(const Quaternion& q) {
    return json{{"w", scalar_to_json(q.w())},
                {"x", scalar_to_json(q.x())},
                {"y", scalar_to_json(q.y())},
                {"z", scalar_to_json(q.z())}};
}

json table_to_json(const structure::StructureTable& table) {
    json rows = json::array();
    for (const auto& row : table.constants) {
        json cols = json::array();
        for (const auto& coeffs : row) {
            json v = json::array();
            for (const auto& c : coeffs) v.push_back(c.rat().to_string());
            cols.push_back(std::move(v));
        }
        rows.push_back(std::move(cols));
    }
    return json{{"dim", table.dim}, {"basis", table.basis_names}, {"table", std::move(rows)}};
}

structure::StructureTable table_from_json(const json& j) {
    structure::StructureTable table;
    try {
        table.dim = j.at("dim").get<int>();
        table.basis_names = j.at("basis").get<std::vector<std::string>>();
        for (const auto& row : j.at("table")) {
            std::vector<std::vector<Scalar>> cols;
            for (const auto& coeffs : row) {
                std::vector<Scalar> v;
                for (const auto& c : coeffs)
                    v.push_back(Scalar::rational(Rational::from_string(c.get<std::string>())));
                cols.push_back(std::move(v));
            }
            table.constants.push_back(std::move(cols));
        }
    } catch (const json::exception& e) {
        throw InvalidTableError(std::string("malformed table JSON: ") + e.what());
    }
    structure::validate(table);
    return table;
}

json report_to_json(const structure::ContradictionReport& report) {
    json steps = json::array();
    for (const auto& step : report.steps)
        steps.push_back(json{{"expression", step.expression},
                             {"rewritten", step.rewritten},
                             {"justification", step.justification}});
    json out{{"case", report.case_label},
             {"verdict", structure::verdict_name(report.verdict)},
             {"steps", std::move(steps)}};
    if (report.zero_divisor) {
        const auto& p = *report.zero_divisor;
        out["witness"] = json{{"a", structure::render_element(p.table, p.witness_a)},
                              {"b", structure::render_element(p.table, p.witness_b)}};
    }
    if (report.obstruction) {
        json eqs = json::array();
        for (const auto& eq : report.obstruction->equations) eqs.push_back(eq.to_string());
        out["equations"] = std::move(eqs);
    }
    return out;
}

json division_to_json(const structure::DivisionCheckResult& result,
                      const structure::StructureTable& table, const std::string& table_name) {
    json out{{"table", table_name}, {"trials", result.trials}};
    if (result.certified) {
        out["result"] = "Certified";
    } else {
        out["result"] = "ZeroDivisorWitness";
        if (result.witness)
            out["witness"] =
                json{{"a", structure::render_element(table, result.witness->first)},
                     {"b", structure::render_element(table, result.witness->second)}};
    }
    return out;
}

json regularity_to_json(const fueter::RegularityReport& report) {
    json residuals = json::array();
    for (const auto& sample : report.residuals) {
        json entry{{"point", quaternion_to_json(sample.point)},
                   {"residual", quaternion_to_json(sample.residual)},
                   {"norm", sample.norm}};
        if (sample.slice)
            entry["slice"] = json{{"x1", (*sample.slice)[0]},
                                  {"x2", (*sample.slice)[1]},
                                  {"x3", (*sample.slice)[2]}};
        residuals.push_back(std::move(entry));
    }
    json out{{"mode", fueter::reg_mode_name(report.mode)},
             {"method", fueter::method_name(report.method)},
             {"verdict", fueter::verdict_name(report.verdict)},
             {"residuals", std::move(residuals)}};
    if (report.method == fueter::Method::Numeric) out["tolerance"] = report.tolerance;
    out["symbolic_result"] =
        report.symbolic_result ? json(report.symbolic_result->to_string()) : json(nullptr);
    if (!report.caveat.empty()) out["caveat"] = report.caveat;
    return out;
}

json series_to_json(const slice::SeriesResult& result) {
    json out{{"value", quaternion_to_json(result.value)},
             {"divergence", result.divergence_flag},
             {"radius_estimate", result.radius_estimate == std::numeric_limits<double>::infinity()
                                     ? json("inf")
                                     : json(result.radius_estimate)},
             {"tail_ok", result.tail_ok}};
    out["truncation_bound"] =
        result.truncation_unbounded ? json("unbounded") : json(result.truncation_bound);
    return out;
}

} // namespace quatkit::io
