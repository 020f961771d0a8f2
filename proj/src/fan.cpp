#include "tropquot/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tropquot/errors.hpp"

namespace tropquot {

namespace {

std::string cone_name(const std::vector<int>& ray_indices) {
    std::ostringstream os;
    os << "cone{";
    for (std::size_t i = 0; i < ray_indices.size(); ++i) {
        if (i) os << ",";
        os << ray_indices[i];
    }
    os << "}";
    return os.str();
}

FanCone build_cone(const Fan& f, std::vector<int> ray_indices) {
    std::sort(ray_indices.begin(), ray_indices.end());
    IntMat gens;
    for (int i : ray_indices) {
        if (i < 0 || i >= static_cast<int>(f.rays.size()))
            throw input_error("cone ray index out of range: " + std::to_string(i));
        gens.push_back(f.rays[i]);
    }
    FanCone c;
    c.ray_indices = std::move(ray_indices);
    c.geom = make_cone(f.rank, gens);
    c.cone_dim = dim(c.geom);
    c.dual_gens = halfspaces(c.geom);
    c.chart_gens = semigroup_generators(dual_cone(c.geom));
    const KernelBasis kb = integer_kernel(c.geom.rays, f.rank);
    c.orbit_basis = kb.kernel;
    c.orbit_completion = kb.completion;
    return c;
}

void finish_fan(Fan& f) {
    std::sort(f.cones.begin(), f.cones.end(), [](const FanCone& a, const FanCone& b) {
        if (a.cone_dim != b.cone_dim) return a.cone_dim < b.cone_dim;
        return a.ray_indices < b.ray_indices;
    });
    // face poset by canonical cone matching; non-pointed cones (possible only
    // in raw cone lists destined for validate_fan) keep just themselves
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        FanCone& c = f.cones[i];
        c.face_indices.clear();
        if (!is_pointed(c.geom)) {
            c.face_indices.push_back(static_cast<int>(i));
            continue;
        }
        for (const auto& face : faces(c.geom)) {
            const int idx = f.index_of(face);
            if (idx >= 0) c.face_indices.push_back(idx);
        }
        std::sort(c.face_indices.begin(), c.face_indices.end());
    }
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < f.cones.size() && maximal; ++j) {
            if (i == j) continue;
            const auto& fl = f.cones[j].face_indices;
            if (std::find(fl.begin(), fl.end(), static_cast<int>(i)) != fl.end())
                maximal = false;
        }
        f.cones[i].maximal = maximal;
    }
}

}  // namespace

int Fan::index_of_rays(const std::vector<int>& sorted_ray_indices) const {
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (cones[i].ray_indices == sorted_ray_indices) return static_cast<int>(i);
    return -1;
}

int Fan::index_of(const Cone& c) const {
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (cones[i].geom == c) return static_cast<int>(i);
    return -1;
}

bool Fan::closure_order(int tau, int sigma) const {
    const auto& fl = cones.at(sigma).face_indices;
    return std::find(fl.begin(), fl.end(), tau) != fl.end();
}

std::vector<int> Fan::cones_containing(int tau) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (closure_order(tau, static_cast<int>(i))) out.push_back(static_cast<int>(i));
    return out;
}

int Fan::admissible_chart(int tau, const LatticeVec& s) const {
    for (int sigma : cones_containing(tau)) {
        bool inside = true;
        for (const auto& r : cones[sigma].geom.rays)
            if (dot(s, r) < 0) { inside = false; break; }
        if (inside) return sigma;
    }
    return -1;
}

namespace {

void check_rays(int rank, const IntMat& rays) {
    std::set<LatticeVec> seen;
    for (const auto& r : rays) {
        if (static_cast<int>(r.size()) != rank)
            throw input_error("ray has wrong length: " + vec_to_string(r));
        if (is_zero(r)) throw input_error("zero ray");
        if (make_primitive(r) != r)
            throw input_error("ray is not primitive: " + vec_to_string(r));
        if (!seen.insert(r).second)
            throw input_error("duplicate ray: " + vec_to_string(r));
    }
}

}  // namespace

Fan fan_from_max_cones(const std::string& name, int rank, const IntMat& rays,
                       const std::vector<std::vector<int>>& max_cones) {
    check_rays(rank, rays);
    Fan f;
    f.name = name;
    f.rank = rank;
    f.rays = rays;

    std::set<std::vector<int>> cone_sets;
    for (std::size_t k = 0; k < max_cones.size(); ++k) {
        const auto& mc = max_cones[k];
        for (int i : mc)
            if (i < 0 || i >= static_cast<int>(rays.size()))
                throw input_error("maximal cone #" + std::to_string(k) + " " + cone_name(mc) +
                                  ": ray index out of range: " + std::to_string(i));
        FanCone c = build_cone(f, mc);
        // listed rays must be exactly the extreme rays of the cone they span
        IntMat listed;
        for (int i : c.ray_indices) listed.push_back(f.rays[i]);
        sort_graded_lex(listed);
        if (listed != c.geom.rays)
            throw input_error(cone_name(c.ray_indices) +
                              ": listed rays are not the extreme rays of their span");
        cone_sets.insert(c.ray_indices);
        // generate the face closure; faces of a pointed cone are spanned by
        // the rays they contain, so indexing always succeeds here
        for (const auto& face : faces(c.geom)) {
            std::vector<int> idx;
            for (std::size_t i = 0; i < f.rays.size(); ++i)
                for (const auto& r : face.rays)
                    if (f.rays[i] == r) { idx.push_back(static_cast<int>(i)); break; }
            if (static_cast<int>(idx.size()) != static_cast<int>(face.rays.size()))
                throw input_error(cone_name(c.ray_indices) + ": face ray missing from fan rays");
            std::sort(idx.begin(), idx.end());
            cone_sets.insert(idx);
        }
    }
    for (const auto& cs : cone_sets) f.cones.push_back(build_cone(f, cs));
    finish_fan(f);
    return f;
}

Fan fan_from_cone_list(const std::string& name, int rank, const IntMat& rays,
                       const std::vector<std::vector<int>>& cone_ray_indices) {
    check_rays(rank, rays);
    Fan f;
    f.name = name;
    f.rank = rank;
    f.rays = rays;
    std::set<std::vector<int>> cone_sets;
    for (const auto& ci : cone_ray_indices) {
        std::vector<int> s = ci;
        std::sort(s.begin(), s.end());
        cone_sets.insert(s);
    }
    for (const auto& cs : cone_sets) f.cones.push_back(build_cone(f, cs));
    finish_fan(f);
    return f;
}

FanValidation validate_fan(const Fan& f) {
    FanValidation v;
    auto fail = [&](const std::string& msg) {
        v.valid = false;
        v.issues.push_back(msg);
    };

    std::set<LatticeVec> seen;
    for (const auto& r : f.rays) {
        if (is_zero(r) || make_primitive(r) != r)
            fail("ray not primitive: " + vec_to_string(r));
        if (!seen.insert(r).second) fail("duplicate ray: " + vec_to_string(r));
    }

    for (const auto& c : f.cones) {
        if (!is_pointed(c.geom))
            fail(cone_name(c.ray_indices) + " is not strongly convex");
        IntMat listed;
        for (int i : c.ray_indices) listed.push_back(f.rays[i]);
        sort_graded_lex(listed);
        dedup_sorted(listed);
        if (listed != c.geom.rays)
            fail(cone_name(c.ray_indices) + ": listed rays are not the extreme rays of their span");
    }

    // face closure
    for (const auto& c : f.cones) {
        if (!is_pointed(c.geom)) continue;
        for (const auto& face : faces(c.geom))
            if (f.index_of(face) < 0)
                fail(cone_name(c.ray_indices) + " is missing a face from the fan");
    }

    // pairwise intersections must be faces of both
    for (std::size_t i = 0; i < f.cones.size(); ++i) {
        for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
            const auto& a = f.cones[i];
            const auto& b = f.cones[j];
            if (!is_pointed(a.geom) || !is_pointed(b.geom)) continue;
            const Cone meet = intersect(a.geom, b.geom);
            if (!is_face(meet, a.geom) || !is_face(meet, b.geom))
                fail("intersection of " + cone_name(a.ray_indices) + " and " +
                     cone_name(b.ray_indices) + " is not a common face");
        }
    }
    return v;
}

}  // namespace tropquot
