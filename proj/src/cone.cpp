#include "tropquot/cone.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

#include "tropquot/errors.hpp"

namespace tropquot {

namespace {

// Double description, one halfspace at a time, starting from all of R^n.
// Returns a generating set (primitive, deduplicated) of the intersection
// {x : <h, x> >= 0 for all h}. No adjacency pruning; redundant generators are
// filtered by the callers that need extreme rays.
IntMat dd_generators(const IntMat& halfspaces, int n) {
    std::set<LatticeVec> r;
    for (int i = 0; i < n; ++i) {
        LatticeVec e(n, 0);
        e[i] = 1;
        r.insert(e);
        e[i] = -1;
        r.insert(e);
    }
    for (const auto& h : halfspaces) {
        std::set<LatticeVec> keep;
        IntMat plus, minus;
        for (const auto& v : r) {
            const Int s = dot(h, v);
            if (s > 0) { plus.push_back(v); keep.insert(v); }
            else if (s == 0) keep.insert(v);
            else minus.push_back(v);
        }
        for (const auto& p : plus) {
            const Int sp = dot(h, p);
            for (const auto& q : minus) {
                const Int sq = dot(h, q);  // < 0
                LatticeVec w(n);
                for (int i = 0; i < n; ++i) w[i] = sp * q[i] - sq * p[i];
                w = make_primitive(w);
                if (!is_zero(w)) keep.insert(w);
            }
        }
        r = std::move(keep);
    }
    return IntMat(r.begin(), r.end());
}

// Extreme-ray test for a pointed cone {x : <h, x> >= 0}: the active
// constraints at an extreme ray span a hyperplane.
IntMat extreme_filter(const IntMat& candidates, const IntMat& constraints, int n) {
    IntMat out;
    for (const auto& r : candidates) {
        IntMat active;
        for (const auto& h : constraints)
            if (dot(h, r) == 0) active.push_back(h);
        if (rank_of(active) == n - 1) out.push_back(r);
    }
    return out;
}

IntMat canonical_rays(IntMat rays) {
    IntMat out;
    for (auto& v : rays) {
        v = make_primitive(v);
        if (!is_zero(v)) out.push_back(v);
    }
    sort_graded_lex(out);
    dedup_sorted(out);
    return out;
}

}  // namespace

Cone make_cone(int ambient_rank, const IntMat& generators) {
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != ambient_rank)
            throw input_error("cone generator has wrong length");
    Cone c{ambient_rank, canonical_rays(generators)};
    if (c.rays.empty()) return c;
    const IntMat w = dd_generators(c.rays, ambient_rank);
    if (rank_of(w) == ambient_rank) {  // pointed: keep only extreme generators
        c.rays = extreme_filter(c.rays, w, ambient_rank);
        sort_graded_lex(c.rays);
    }
    return c;
}

Cone dual_cone(const Cone& c) {
    const int n = c.ambient_rank;
    IntMat gens = dd_generators(c.rays, n);
    const IntMat lin = integer_kernel(c.rays, n).kernel;
    Cone d{n, {}};
    if (lin.empty()) {
        d.rays = extreme_filter(gens, c.rays, n);
    } else {
        // Not pointed: return a full generator list with both signs of every
        // lineality direction present.
        for (const auto& l : lin) {
            gens.push_back(l);
            gens.push_back(vec_neg(l));
        }
        d.rays = gens;
    }
    d.rays = canonical_rays(d.rays);
    return d;
}

IntMat halfspaces(const Cone& c) { return dual_cone(c).rays; }

bool contains(const IntMat& halfspaces, const LatticeVec& x) {
    for (const auto& h : halfspaces)
        if (dot(h, x) < 0) return false;
    return true;
}

bool contains(const IntMat& halfspaces, const RatVec& x) {
    for (const auto& h : halfspaces)
        if (dot(h, x) < 0) return false;
    return true;
}

int dim(const Cone& c) { return rank_of(c.rays); }

int lineality_dim(const Cone& c) {
    // c contains the line through v iff both v and -v satisfy all halfspaces.
    return static_cast<int>(integer_kernel(halfspaces(c), c.ambient_rank).kernel.size());
}

bool is_pointed(const Cone& c) {
    if (c.rays.empty()) return true;
    return rank_of(dd_generators(c.rays, c.ambient_rank)) == c.ambient_rank;
}

std::vector<Cone> faces(const Cone& c) {
    if (!is_pointed(c)) throw math_error("faces: cone is not pointed");
    const IntMat w = halfspaces(c);
    if (w.size() > 24) throw math_error("faces: too many facets for subset enumeration");
    std::set<Cone> seen;
    const std::size_t subsets = std::size_t{1} << w.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        IntMat sel;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (mask & (std::size_t{1} << i)) sel.push_back(w[i]);
        IntMat rays_f;
        for (const auto& r : c.rays) {
            bool on = true;
            for (const auto& h : sel)
                if (dot(h, r) != 0) { on = false; break; }
            if (on) rays_f.push_back(r);
        }
        seen.insert(Cone{c.ambient_rank, canonical_rays(rays_f)});
    }
    return std::vector<Cone>(seen.begin(), seen.end());
}

bool is_face(const Cone& tau, const Cone& sigma) {
    if (tau.ambient_rank != sigma.ambient_rank) return false;
    for (const auto& f : faces(sigma))
        if (f == tau) return true;
    return false;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_rank != b.ambient_rank) throw input_error("intersect: rank mismatch");
    IntMat h = halfspaces(a);
    const IntMat hb = halfspaces(b);
    h.insert(h.end(), hb.begin(), hb.end());
    return make_cone(a.ambient_rank, dd_generators(h, a.ambient_rank));
}

// ---- Hilbert bases ----

namespace {

// Pulling triangulation into simplicial subcones spanned by subsets of rays.
void triangulate(const Cone& c, std::vector<IntMat>& out) {
    const int d = dim(c);
    if (static_cast<int>(c.rays.size()) == d) {
        out.push_back(c.rays);
        return;
    }
    const LatticeVec apex = c.rays.front();
    for (const auto& f : faces(c)) {
        if (dim(f) != d - 1) continue;
        bool has_apex = false;
        for (const auto& r : f.rays)
            if (r == apex) { has_apex = true; break; }
        if (has_apex) continue;
        std::vector<IntMat> sub;
        triangulate(f, sub);
        for (auto& s : sub) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

// Lattice points of {sum lambda_i v_i : 0 <= lambda_i < 1} for independent v_i,
// by box enumeration with an exact solve per candidate.
IntMat parallelepiped_points(const IntMat& v, int n, const IntMat& cone_halfspaces) {
    const int d = static_cast<int>(v.size());
    LatticeVec lo(n, 0), hi(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < d; ++i) {
            if (v[i][j] < 0) lo[j] += v[i][j];
            else hi[j] += v[i][j];
        }
    // Precompute the Gram inverse so each candidate costs one matrix-vector
    // product plus a residual check.
    RatMat gram(d, RatVec(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gram[i][j] = Rat(dot(v[i], v[j]));
    RatMat gram_inv(d, RatVec(d));
    for (int k = 0; k < d; ++k) {
        RatVec e(d, Rat(0));
        e[k] = 1;
        auto col = solve_rational(gram, e);
        if (!col) throw math_error("parallelepiped: singular Gram matrix");
        for (int i = 0; i < d; ++i) gram_inv[i][k] = (*col)[i];
    }

    IntMat pts;
    LatticeVec x = lo;
    for (;;) {
        if (contains(cone_halfspaces, x) && !is_zero(x)) {
            RatVec btx(d), lambda(d, Rat(0));
            for (int i = 0; i < d; ++i) btx[i] = Rat(dot(v[i], x));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) lambda[i] += gram_inv[i][j] * btx[j];
            bool ok = true;
            for (int i = 0; i < d && ok; ++i)
                if (lambda[i] < 0 || lambda[i] >= 1) ok = false;
            if (ok) {  // residual check: x must actually lie in span(v)
                for (int j = 0; j < n && ok; ++j) {
                    Rat s(x[j]);
                    for (int i = 0; i < d; ++i) s -= lambda[i] * Rat(v[i][j]);
                    if (s != 0) ok = false;
                }
            }
            if (ok) pts.push_back(x);
        }
        int j = n - 1;
        while (j >= 0) {
            ++x[j];
            if (x[j] <= hi[j]) break;
            x[j] = lo[j];
            --j;
        }
        if (j < 0) break;
    }
    return pts;
}

}  // namespace

IntMat hilbert_basis(const Cone& c) {
    if (c.ambient_rank > 4)
        throw math_error("hilbert basis: ambient rank > 4 unsupported");
    if (!is_pointed(c))
        throw math_error("hilbert basis: cone is not pointed; the unit group is "
                         "infinite and the basis is not finitely cogenerated");
    if (c.rays.empty()) return {};
    const IntMat hs = halfspaces(c);

    std::set<LatticeVec> cand(c.rays.begin(), c.rays.end());
    std::vector<IntMat> simplices;
    triangulate(c, simplices);
    for (const auto& s : simplices)
        for (auto& p : parallelepiped_points(s, c.ambient_rank, hs))
            cand.insert(std::move(p));

    // g is reducible iff g - h stays in the cone for some other candidate h:
    // any generating set contains every irreducible, so testing against the
    // candidate set is complete.
    IntMat basis;
    for (const auto& g : cand) {
        bool reducible = false;
        for (const auto& h : cand) {
            if (h == g) continue;
            const LatticeVec rest = vec_sub(g, h);
            if (!is_zero(rest) && contains(hs, rest)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(g);
    }
    sort_graded_lex(basis);
    return basis;
}

IntMat semigroup_generators(const Cone& c) {
    const int n = c.ambient_rank;
    const IntMat hs = halfspaces(c);
    const KernelBasis kb = integer_kernel(hs, n);
    if (kb.kernel.empty()) return hilbert_basis(c);

    IntMat gens;
    for (const auto& l : kb.kernel) {
        gens.push_back(l);
        gens.push_back(vec_neg(l));
    }
    if (!kb.completion.empty()) {
        // Quotient by the lineality lattice: coordinates with respect to the
        // completion columns. Any integral lift of a quotient Hilbert basis
        // element lies back in c because the lineality is contained in c.
        const int q = static_cast<int>(kb.completion.size());
        IntMat ucols = kb.kernel;
        ucols.insert(ucols.end(), kb.completion.begin(), kb.completion.end());
        IntMat projected;
        for (const auto& r : c.rays) {
            auto coeff = solve_integer(ucols, r);
            if (!coeff) throw math_error("semigroup: unimodular solve failed");
            LatticeVec img(coeff->begin() + kb.kernel.size(), coeff->end());
            projected.push_back(img);
        }
        const Cone quot = make_cone(q, projected);
        if (!is_pointed(quot)) throw math_error("semigroup: quotient not pointed");
        for (const auto& hb : hilbert_basis(quot)) {
            LatticeVec lift(n, 0);
            for (int j = 0; j < q; ++j)
                for (int i = 0; i < n; ++i) lift[i] += hb[j] * kb.completion[j][i];
            gens.push_back(lift);
        }
    }
    sort_graded_lex(gens);
    dedup_sorted(gens);
    return gens;
}

AffineSemigroup chart_semigroup(const Cone& sigma) {
    AffineSemigroup s;
    s.parent_cone = dual_cone(sigma);
    s.generators = semigroup_generators(s.parent_cone);
    return s;
}

}  // namespace tropquot
