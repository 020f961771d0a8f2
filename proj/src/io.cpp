#include "tropquot/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "tropquot/errors.hpp"

namespace tropquot {

namespace {

LatticeVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    LatticeVec v;
    for (const auto& x : j) {
        if (x.is_number_integer()) v.emplace_back(x.get<long>());
        else if (x.is_string()) v.emplace_back(Int(x.get<std::string>()));
        else throw input_error("expected an integer entry");
    }
    return v;
}

Json vec_to_json(const LatticeVec& v) {
    Json a = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p()) a.push_back(x.get_si());
        else a.push_back(x.get_str());
    }
    return a;
}

Json ratvec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

Json ray_indices_json(const Fan& f, int cone_index) {
    Json a = Json::array();
    for (int i : f.cones.at(cone_index).ray_indices) a.push_back(i);
    return a;
}

std::string exp_display(const ExtendedRat& v) {
    if (v.infinite) return "0";  // exp(-inf)
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", std::exp(-v.value.get_d()));
    return buf;
}

// exp(-<s,rep>) display strings for the finite pairing on a representative
Json rep_exp_json(const RatVec& rep) {
    Json a = Json::array();
    for (const auto& x : rep) a.push_back(exp_display(ExtendedRat::of(x)));
    return a;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw input_error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

Fan fan_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("fan file: expected a JSON object");
    if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_integer())
        throw input_error("fan file: missing integer field 'lattice_rank'");
    const int rank = j["lattice_rank"].get<int>();
    if (rank < 1 || rank > 8) throw input_error("fan file: lattice_rank out of range");
    if (!j.contains("rays") || !j["rays"].is_array())
        throw input_error("fan file: missing array field 'rays'");
    IntMat rays;
    for (const auto& r : j["rays"]) rays.push_back(vec_from_json(r));
    if (!j.contains("maximal_cones") || !j["maximal_cones"].is_array())
        throw input_error("fan file: missing array field 'maximal_cones'");
    std::vector<std::vector<int>> mc;
    for (const auto& c : j["maximal_cones"]) {
        if (!c.is_array()) throw input_error("fan file: maximal cone must be an index array");
        std::vector<int> idx;
        for (const auto& i : c) {
            if (!i.is_number_integer()) throw input_error("fan file: ray index must be an integer");
            idx.push_back(i.get<int>());
        }
        mc.push_back(idx);
    }
    const std::string name = j.value("name", std::string("fan"));
    return fan_from_max_cones(name, rank, rays, mc);
}

Json fan_to_json(const Fan& f) {
    Json j;
    j["name"] = f.name;
    j["lattice_rank"] = f.rank;
    Json rays = Json::array();
    for (const auto& r : f.rays) rays.push_back(vec_to_json(r));
    j["rays"] = rays;
    Json mc = Json::array();
    for (const auto& c : f.cones) {
        if (!c.maximal) continue;
        Json idx = Json::array();
        for (int i : c.ray_indices) idx.push_back(i);
        mc.push_back(idx);
    }
    j["maximal_cones"] = mc;
    return j;
}

Fan load_fan_file(const std::string& path, bool validate) {
    Fan f = fan_from_json(read_json_file(path));
    if (validate) {
        const FanValidation v = validate_fan(f);
        if (!v.valid)
            throw input_error("invalid fan in " + path + ": " + v.issues.front());
    }
    return f;
}

Cone cone_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("cone file: expected a JSON object");
    if (!j.contains("ambient_rank") || !j["ambient_rank"].is_number_integer())
        throw input_error("cone file: missing integer field 'ambient_rank'");
    const int rank = j["ambient_rank"].get<int>();
    if (rank < 1 || rank > 8) throw input_error("cone file: ambient_rank out of range");
    if (!j.contains("rays") || !j["rays"].is_array())
        throw input_error("cone file: missing array field 'rays'");
    IntMat rays;
    for (const auto& r : j["rays"]) {
        LatticeVec v = vec_from_json(r);
        if (static_cast<int>(v.size()) != rank)
            throw input_error("cone file: ray " + vec_to_string(v) + " has wrong length");
        rays.push_back(v);
    }
    return make_cone(rank, rays);
}

Cone load_cone_file(const std::string& path) { return cone_from_json(read_json_file(path)); }

AnalyticPoint point_from_json(const Fan& f, const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw input_error("point file: missing string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    auto cone_index_from = [&](const char* field) {
        if (!j.contains(field) || !j[field].is_array())
            throw input_error(std::string("point file: missing ray index array '") + field + "'");
        std::vector<int> idx;
        for (const auto& i : j[field]) {
            if (!i.is_number_integer())
                throw input_error("point file: ray index must be an integer");
            idx.push_back(i.get<int>());
        }
        std::sort(idx.begin(), idx.end());
        const int c = f.index_of_rays(idx);
        if (c < 0) throw input_error("point file: no such cone in the fan");
        return c;
    };
    auto strings_from = [&](const char* field) {
        if (!j.contains(field) || !j[field].is_array())
            throw input_error(std::string("point file: missing array field '") + field + "'");
        std::vector<std::string> out;
        for (const auto& s : j[field]) {
            if (!s.is_string()) throw input_error("point file: expected string entries");
            out.push_back(s.get<std::string>());
        }
        return out;
    };

    if (kind == "k-point") {
        KPoint x;
        x.orbit_cone = cone_index_from("orbit_cone");
        const auto coords = strings_from("coordinates");
        const std::size_t want = f.cones[x.orbit_cone].orbit_basis.size();
        if (coords.size() != want)
            throw input_error("point file: expected " + std::to_string(want) +
                              " coordinates for this orbit cone");
        for (const auto& s : coords) {
            RationalFunction v = parse_rational_function(s);
            if (v.is_zero())
                throw input_error("point file: orbit coordinates must be nonzero");
            x.coords.push_back(std::move(v));
        }
        return x;
    }
    if (kind == "k-point-chart") {
        const int sigma = cone_index_from("chart_cone");
        const auto coords = strings_from("coordinates");
        std::vector<RationalFunction> values;
        for (const auto& s : coords) values.push_back(parse_rational_function(s));
        return kpoint_from_chart(f, sigma, values);
    }
    if (kind == "monomial") {
        const int tau = cone_index_from("stratum");
        const auto rep = strings_from(j.contains("rep") ? "rep" : "coordinates");
        if (static_cast<int>(rep.size()) != f.rank)
            throw input_error("point file: rep must have one entry per lattice coordinate");
        RatVec v;
        for (const auto& s : rep) v.push_back(rat_from_string(s));
        return MonomialPoint{make_point(f, tau, v)};
    }
    throw input_error("point file: unknown kind '" + kind + "'");
}

AnalyticPoint load_point_file(const Fan& f, const std::string& path) {
    return point_from_json(f, read_json_file(path));
}

Json trop_to_json(const Fan& f, const TropPoint& u, bool display_exp) {
    Json j;
    j["stratum"] = ray_indices_json(f, u.stratum);
    j["rep"] = ratvec_to_json(u.rep);
    if (display_exp) {
        j["rep_exp"] = rep_exp_json(u.rep);
        j["approximate"] = true;
    }
    return j;
}

Json monomial_to_json(const Fan& f, const MonomialPoint& m, bool display_exp) {
    Json j;
    j["kind"] = "monomial";
    j["stratum"] = ray_indices_json(f, m.u.stratum);
    j["rep"] = ratvec_to_json(m.u.rep);
    if (display_exp) {
        j["rep_exp"] = rep_exp_json(m.u.rep);
        j["approximate"] = true;
    }
    return j;
}

Json orbit_to_json(const Fan& f, int cone_index) {
    const FanCone& c = f.cones.at(cone_index);
    Json j;
    j["orbit_cone"] = ray_indices_json(f, cone_index);
    j["cone_dim"] = c.cone_dim;
    j["stratum_dim"] = f.rank - c.cone_dim;
    Json basis = Json::array();
    for (const auto& b : c.orbit_basis) basis.push_back(vec_to_json(b));
    j["lattice_basis"] = basis;
    return j;
}

Json validation_to_json(const FanValidation& v) {
    Json j;
    j["valid"] = v.valid;
    j["issues"] = v.issues;
    return j;
}

Json dual_to_json(const Cone& dual) {
    Json j;
    j["ambient_rank"] = dual.ambient_rank;
    j["pointed"] = is_pointed(dual);
    Json rays = Json::array();
    for (const auto& r : dual.rays) rays.push_back(vec_to_json(r));
    j["rays"] = rays;
    return j;
}

Json hilbert_to_json(const Cone& c, const IntMat& basis) {
    Json j;
    j["ambient_rank"] = c.ambient_rank;
    Json b = Json::array();
    for (const auto& v : basis) b.push_back(vec_to_json(v));
    j["basis"] = b;
    return j;
}

Json skeleton_to_json(const Fan& f, const SkeletonGraph& g) {
    Json j;
    j["fan"] = f.name;
    Json verts = Json::array();
    for (const auto& v : g.vertices) {
        Json vj;
        vj["cone"] = ray_indices_json(f, v.cone);
        vj["stratum_dim"] = v.stratum_dim;
        verts.push_back(vj);
    }
    j["vertices"] = verts;
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    Json marks = Json::array();
    for (const auto& m : g.marks) {
        Json mj;
        mj["vertex"] = m.vertex;
        mj["position"] = ratvec_to_json(m.position);
        mj["label"] = m.label;
        marks.push_back(mj);
    }
    j["marks"] = marks;
    return j;
}

Json quotient_report_to_json(const QuotientReport& r) {
    Json j;
    j["fan"] = r.fan;
    j["samples"] = r.sample_count;
    j["seed"] = r.seed;
    j["negative_control"] = r.negative_control;
    j["verdict"] = r.pass ? "PASS" : "FAIL";
    j["classes"] = r.classes;
    j["fibers"] = r.fibers;
    if (r.witness) {
        Json w;
        w["i"] = r.witness->i;
        w["j"] = r.witness->j;
        w["trop_i"] = r.witness->trop_i;
        w["trop_j"] = r.witness->trop_j;
        w["ratio_valuations"] = r.witness->ratio_vals;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["probe_relations"] = r.probe_relations;
    j["ratio_relations"] = r.ratio_relations;
    j["separation_checks"] = r.separation_checks;
    Json inj = Json::array();
    for (const auto& [a, b] : r.injected) inj.push_back(Json::array({a, b}));
    j["injected"] = inj;
    Json strata = Json::array();
    for (const auto& row : r.strata_summary) {
        Json s;
        s["cone"] = row[0];
        s["samples"] = row[1];
        s["classes"] = row[2];
        strata.push_back(s);
    }
    j["strata"] = strata;
    j["sample_points"] = r.samples;
    return j;
}

}  // namespace tropquot
