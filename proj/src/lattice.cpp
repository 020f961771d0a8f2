#include "tropquot/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "tropquot/errors.hpp"

namespace tropquot {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw input_error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw input_error("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Int dot(const LatticeVec& a, const LatticeVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const LatticeVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

LatticeVec vec_add(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVec vec_sub(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVec vec_neg(const LatticeVec& a) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool is_zero(const LatticeVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

LatticeVec make_primitive(const LatticeVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0 || g == 1) return v;
    LatticeVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

LatticeVec sign_normalize(const LatticeVec& v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return vec_neg(v);
    }
    return v;
}

bool graded_lex_less(const LatticeVec& a, const LatticeVec& b) {
    Int sa = 0, sb = 0;
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
}

void sort_graded_lex(IntMat& vecs) {
    std::sort(vecs.begin(), vecs.end(), graded_lex_less);
}

void dedup_sorted(IntMat& vecs) {
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
}

std::string vec_to_string(const LatticeVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i].get_str();
    }
    os << ")";
    return os.str();
}

// ---- rational elimination ----

namespace {

// Row echelon form in place; returns pivot column for each pivot row.
std::vector<int> echelon(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int piv = -1;
        for (int r = row; r < static_cast<int>(m.size()); ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[row], m[piv]);
        const Rat lead = m[row][col];
        for (int c = col; c < cols; ++c) m[row][c] /= lead;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

RatMat to_rat(const IntMat& rows) {
    RatMat m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m[i].reserve(rows[i].size());
        for (const auto& x : rows[i]) m[i].emplace_back(x);
    }
    return m;
}

}  // namespace

int rank_of(const IntMat& rows) {
    if (rows.empty()) return 0;
    RatMat m = to_rat(rows);
    return static_cast<int>(echelon(m).size());
}

std::optional<RatVec> solve_rational(const RatMat& rows, const RatVec& rhs) {
    if (rows.size() != rhs.size()) throw input_error("solve: shape mismatch");
    if (rows.empty()) return RatVec{};
    const std::size_t n = rows[0].size();
    RatMat aug = rows;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    std::vector<int> pivots = echelon(aug);
    // pivot in the rhs column means inconsistent
    if (!pivots.empty() && pivots.back() == static_cast<int>(n)) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
    return x;
}

std::optional<RatVec> solve_rational(const IntMat& rows, const RatVec& rhs) {
    return solve_rational(to_rat(rows), rhs);
}

// ---- integer kernel via column HNF ----

KernelBasis integer_kernel(const IntMat& rows, int n) {
    // Work matrix W starts as the input (m x n); U starts as the identity and
    // mirrors every column operation, staying unimodular. At the end the
    // columns of U whose W-column is zero form a basis of the kernel lattice.
    const int m = static_cast<int>(rows.size());
    IntMat w(m, LatticeVec(n, 0));
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw input_error("kernel: shape mismatch");
        w[i] = rows[i];
    }
    IntMat u(n, LatticeVec(n, 0));  // columns of U, stored column-major
    for (int j = 0; j < n; ++j) u[j][j] = 1;

    auto col_axpy = [&](int dst, int src, const Int& f) {  // col[dst] += f*col[src]
        for (int i = 0; i < m; ++i) w[i][dst] += f * w[i][src];
        for (int i = 0; i < n; ++i) u[dst][i] += f * u[src][i];
    };
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < m; ++i) std::swap(w[i][a], w[i][b]);
        std::swap(u[a], u[b]);
    };

    int lead = 0;  // next column to place a pivot in
    for (int r = 0; r < m && lead < n; ++r) {
        // Euclidean reduction across columns lead..n-1 on row r.
        for (;;) {
            int best = -1;
            Int best_abs;
            for (int c = lead; c < n; ++c) {
                if (w[r][c] == 0) continue;
                Int a = abs(w[r][c]);
                if (best < 0 || a < best_abs) { best = c; best_abs = a; }
            }
            if (best < 0) break;  // row r already zero on the active columns
            bool reduced = true;
            for (int c = lead; c < n; ++c) {
                if (c == best || w[r][c] == 0) continue;
                Int q = w[r][c] / w[r][best];  // truncated division is fine here
                if (q != 0) col_axpy(c, best, -q);
                if (w[r][c] != 0) reduced = false;
            }
            if (reduced) {
                col_swap(lead, best);
                ++lead;
                break;
            }
        }
    }

    KernelBasis out;
    for (int c = 0; c < n; ++c) {
        bool zero = true;
        for (int i = 0; i < m; ++i)
            if (w[i][c] != 0) { zero = false; break; }
        if (zero) out.kernel.push_back(sign_normalize(u[c]));
        else out.completion.push_back(u[c]);
    }
    return out;
}

std::optional<LatticeVec> solve_integer(const IntMat& cols, const LatticeVec& target) {
    // Kernel of [cols | -target]: a kernel vector with last coordinate 1 gives
    // the coefficients. Combine kernel basis vectors by extended gcd on the
    // last coordinate to reach 1 when possible.
    const int k = static_cast<int>(cols.size());
    if (target.empty()) return LatticeVec(k, 0);
    const int n = static_cast<int>(target.size());
    IntMat rows(n, LatticeVec(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) rows[i][j] = cols[j][i];
        rows[i][k] = -target[i];
    }
    KernelBasis kb = integer_kernel(rows, k + 1);
    // Accumulate a vector whose last coordinate is gcd of all last coordinates.
    LatticeVec acc(k + 1, 0);
    for (const auto& v : kb.kernel) {
        if (v[k] == 0) continue;
        if (acc[k] == 0) { acc = v; continue; }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   acc[k].get_mpz_t(), v[k].get_mpz_t());
        for (int i = 0; i <= k; ++i) acc[i] = s * acc[i] + t * v[i];
    }
    if (acc[k] == 0) return std::nullopt;
    if (acc[k] < 0) acc = vec_neg(acc);
    if (acc[k] != 1) return std::nullopt;  // target in Q-span but not the lattice
    acc.pop_back();
    return acc;
}

RatVec project_off_span(const IntMat& rows, const RatVec& v) {
    // Reduce to an independent subset, then subtract the Gram-system projection.
    IntMat basis;
    for (const auto& r : rows) {
        basis.push_back(r);
        if (rank_of(basis) < static_cast<int>(basis.size())) basis.pop_back();
    }
    if (basis.empty()) return v;
    const std::size_t d = basis.size();
    RatMat gram(d, RatVec(d));
    RatVec rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) gram[i][j] = Rat(dot(basis[i], basis[j]));
        rhs[i] = dot(basis[i], v);
    }
    auto lambda = solve_rational(gram, rhs);
    if (!lambda) throw math_error("projection: singular Gram matrix");
    RatVec out = v;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c] -= (*lambda)[i] * Rat(basis[i][c]);
    return out;
}

}  // namespace tropquot
