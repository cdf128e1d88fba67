#pragma once

#include <vector>

#include "koszul/pattern.hpp"
#include "koszul/rational.hpp"

namespace koszul {

// Dense exact-rational matrix, just big enough for syzygy computations
// (dimensions here never exceed a few dozen).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

    static RatMatrix identity(int n);
    RatMatrix operator*(const RatMatrix& o) const;
    bool is_zero() const;

    int rank() const;
    // Columns spanning the kernel (echelon-normalized, deterministic).
    RatMatrix kernel_basis() const;
    // Solves this * x = rhs for each rhs column; throws if inconsistent.
    RatMatrix solve(const RatMatrix& rhs) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Finite-dimensional right module over the pattern's algebra: a space per
// vertex and, per arrow j (1..n), an action matrix carrying the component at
// vertex j to the component at vertex j-1. Invariant: composites across any
// relation interval vanish.
struct QuiverRep {
    std::vector<int> dims;            // size n + 1
    std::vector<RatMatrix> actions;   // size n + 1; actions[j]: dims[j-1] x dims[j]

    int n() const { return static_cast<int>(dims.size()) - 1; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// Checks the relation invariants; throws std::logic_error on violation.
void validate_rep(const RelationPattern& pat, const QuiverRep& rep);

// The projective e_i R: one-dimensional at every vertex j <= i with a
// surviving path (j, i), identity arrow actions where the composed path
// survives.
QuiverRep projective(const RelationPattern& pat, int i);

// The simple module at vertex j.
QuiverRep simple(const RelationPattern& pat, int j);

struct ResolutionStep {
    std::vector<int> multiplicities;  // copies of P(v) in the cover, per vertex
    // generators[v] = chosen lifts of a basis of top(rep) at v, as column
    // vectors into rep's component at v
    std::vector<RatMatrix> generators;
};

// Projective cover of rep (multiplicities = dims of rep / rad rep) and the
// kernel of the covering map, again as a representation.
std::pair<ResolutionStep, QuiverRep> syzygy(const RelationPattern& pat,
                                            const QuiverRep& rep);

struct ExtTable {
    // dims_by_degree[d][q] = multiplicity of P(q) in step d of the minimal
    // resolution of S(p); trailing steps absent once the syzygy vanishes.
    std::vector<std::vector<int>> dims_by_degree;
    bool terminated = false;  // syzygy reached zero within d_max
    int length = -1;          // first d whose syzygy vanishes, -1 if not reached

    int dim(int d, int q) const {
        if (d < 0 || d >= static_cast<int>(dims_by_degree.size())) return terminated ? 0 : -1;
        return dims_by_degree[d][q];
    }
};

// Minimal projective resolution of S(p), iterated to d_max (default n + 2).
ExtTable resolve_simple(const RelationPattern& pat, int p, int d_max = -1);

struct ExtDims {
    std::vector<int> dims;  // entry d = dim Ext^d(S(p), S(q)), d = 0..d_max
    bool terminated = false;
};

// Ext^d(S(p), S(q)) dimensions read off as multiplicities of P(q) in the
// minimal resolution, plus the flag telling whether it terminated by d_max.
ExtDims ext_dims(const RelationPattern& pat, int p, int q, int d_max = -1);

// First d at which the syzygy of S(p) vanishes.
int resolution_length(const RelationPattern& pat, int p);

}  // namespace koszul
