// Exact lattice arithmetic: integer/rational vectors, orders, and the small
// linear algebra (rational elimination, integer kernels via column HNF) that
// the polyhedral layer is built on. No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace tropquot {

using Int = mpz_class;
using Rat = mpq_class;

using LatticeVec = std::vector<Int>;  // element of Z^n
using RatVec = std::vector<Rat>;      // element of Q^n
using IntMat = std::vector<LatticeVec>;
using RatMat = std::vector<RatVec>;

// ---- scalar helpers ----

Rat rat_from_string(const std::string& s);   // "p/q" or "p", throws input_error
std::string rat_to_string(const Rat& r);     // canonical "p/q" / "p"

// ---- vector helpers ----

Int dot(const LatticeVec& a, const LatticeVec& b);
Rat dot(const LatticeVec& a, const RatVec& b);

LatticeVec vec_add(const LatticeVec& a, const LatticeVec& b);
LatticeVec vec_sub(const LatticeVec& a, const LatticeVec& b);
LatticeVec vec_neg(const LatticeVec& a);
bool is_zero(const LatticeVec& a);

// Divides out the gcd of the entries; direction is preserved. Zero stays zero.
LatticeVec make_primitive(const LatticeVec& v);

// Flips sign so the first nonzero entry is positive. Only for vectors where
// both signs name the same object (lines, kernel basis vectors), never rays.
LatticeVec sign_normalize(const LatticeVec& v);

// Total order: by entry sum, ties lexicographic. Used everywhere output
// determinism matters.
bool graded_lex_less(const LatticeVec& a, const LatticeVec& b);

void sort_graded_lex(IntMat& vecs);
void dedup_sorted(IntMat& vecs);

std::string vec_to_string(const LatticeVec& v);

// ---- rational linear algebra ----

// Rank of the row span over Q.
int rank_of(const IntMat& rows);

// Solves A x = b exactly (A given by rows, m x n). Returns a particular
// solution with free variables set to zero, or nullopt if inconsistent.
std::optional<RatVec> solve_rational(const RatMat& rows, const RatVec& rhs);
std::optional<RatVec> solve_rational(const IntMat& rows, const RatVec& rhs);

// ---- integer lattice algebra ----

// Basis of the kernel lattice {x in Z^n : <row, x> = 0 for all rows} plus a
// completion to a basis of Z^n (columns of a unimodular transform). The
// kernel basis is saturated by construction.
struct KernelBasis {
    IntMat kernel;      // basis of the kernel lattice
    IntMat completion;  // complementary columns; kernel + completion is unimodular
};
KernelBasis integer_kernel(const IntMat& rows, int n);

// Finds integer c with sum_i c_i * cols[i] = target, or nullopt if target is
// not in the lattice generated by cols.
std::optional<LatticeVec> solve_integer(const IntMat& cols, const LatticeVec& target);

// Orthogonal projection of v onto the orthogonal complement of span(rows),
// exact over Q. Rows may be dependent.
RatVec project_off_span(const IntMat& rows, const RatVec& v);

}  // namespace tropquot
