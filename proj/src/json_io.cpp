#include "fquandle/json_io.hpp"

#include <fstream>

using nlohmann::json;

namespace fq {

json ftable_to_json(const FTable& t) {
    return json{{"order", t.n}, {"table", t.table}, {"one_based", false}};
}

FTable ftable_from_json(const json& j) {
    try {
        FTable t;
        t.n = j.at("order").get<int>();
        t.table = j.at("table").get<std::vector<std::vector<int>>>();
        if (j.value("one_based", false)) {
            for (auto& row : t.table)
                for (int& v : row) --v;
        }
        if (!well_formed(t)) throw input_error("FTable JSON is malformed (shape or range)");
        return t;
    } catch (const json::exception& e) {
        throw input_error(std::string("FTable JSON is malformed: ") + e.what());
    }
}

json morphism_to_json(const Morphism& m, bool is_automorphism) {
    return json{{"map", m.map}, {"is_automorphism", is_automorphism}};
}

json axiom_report_to_json(const AxiomReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back(json{{"axiom", v.axiom}, {"witness", v.witness}});
    return json{{"level", to_string(r.level_requested)}, {"passed", r.passed},
                {"violations", violations}};
}

json catalog_to_json(const Catalog& c) {
    json tables = json::array();
    for (const FTable& t : c.tables) tables.push_back(ftable_to_json(t));
    json classes = json::array();
    for (const CatalogClass& cls : c.classes)
        classes.push_back(json{{"members", cls.members},
                               {"contains_quandle", cls.contains_quandle},
                               {"is_latin", cls.is_latin},
                               {"is_group_like", cls.is_group_like}});
    return json{{"order", c.order},
                {"tables", tables},
                {"iso_class_count", c.iso_class_count},
                {"twisted_class_count", c.twisted_class_count},
                {"classes", classes}};
}

std::string catalog_to_csv(const Catalog& c) {
    int no_quandle = 0;
    for (const auto& cls : c.classes)
        if (!cls.contains_quandle) ++no_quandle;
    std::string out = "order,iso_classes,twisted_classes,no_quandle_classes\n";
    out += std::to_string(c.order) + "," + std::to_string(c.iso_class_count) + "," +
           std::to_string(c.twisted_class_count) + "," + std::to_string(no_quandle) + "\n";
    return out;
}

json presentation_to_json(const Presentation& p) {
    return json{{"generators", p.generator_count},
                {"relators", p.relators},
                {"freely_trivial", p.freely_trivial},
                {"all_relators_abelian_trivial", p.all_relators_abelian_trivial}};
}

json cohomology_result_to_json(const CohomologyResult& r) {
    json j{{"degree", r.degree},
           {"modulus", r.m},
           {"prime_modulus", r.prime_modulus},
           {"elementary_divisors", r.elementary_divisors},
           {"basis", r.basis}};
    if (r.prime_modulus) j["dimension"] = r.dimension;
    return j;
}

json dynamical_cocycle_to_json(const DynamicalCocycle& c) {
    return json{{"base_order", c.base_order},
                {"fiber_order", c.fiber_order},
                {"alpha", c.alpha},
                {"g", c.g}};
}

DynamicalCocycle dynamical_cocycle_from_json(const json& j) {
    try {
        DynamicalCocycle c;
        c.base_order = j.at("base_order").get<int>();
        c.fiber_order = j.at("fiber_order").get<int>();
        c.alpha = j.at("alpha").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
        c.g = j.at("g").get<std::vector<int>>();
        return c;
    } catch (const json::exception& e) {
        throw input_error(std::string("DynamicalCocycle JSON is malformed: ") + e.what());
    }
}

json module_data_to_json(const ModuleData& m) {
    json j{{"base_order", m.base_order}, {"modulus", m.m}, {"eta", m.eta}, {"tau", m.tau},
           {"g", m.g}};
    if (m.kappa) j["kappa"] = *m.kappa;
    return j;
}

ModuleData module_data_from_json(const json& j) {
    try {
        ModuleData m;
        m.base_order = j.at("base_order").get<int>();
        m.m = j.at("modulus").get<int>();
        m.eta = j.at("eta").get<std::vector<std::vector<int>>>();
        m.tau = j.at("tau").get<std::vector<std::vector<int>>>();
        m.g = j.at("g").get<int>();
        if (j.contains("kappa")) m.kappa = j.at("kappa").get<std::vector<std::vector<int>>>();
        return m;
    } catch (const json::exception& e) {
        throw input_error(std::string("ModuleData JSON is malformed: ") + e.what());
    }
}

GroupTable group_from_json(const json& j) {
    try {
        return GroupTable::from_mult(j.at("mult").get<std::vector<std::vector<int>>>());
    } catch (const json::exception& e) {
        throw input_error(std::string("GroupTable JSON is malformed: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw input_error(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

}  // namespace fq
