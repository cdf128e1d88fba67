#include "koszul/ext_oracle.hpp"

#include <stdexcept>

namespace koszul {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("RatMatrix: shape mismatch");
    RatMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                out.at(i, j) += at(i, k) * o.at(k, j);
        }
    return out;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row-reduce in place; returns pivot column per pivot row.
std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { pr = i; break; }
        if (pr == -1) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int RatMatrix::rank() const {
    RatMatrix m = *this;
    return static_cast<int>(rref(m).size());
}

RatMatrix RatMatrix::kernel_basis() const {
    RatMatrix m = *this;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMatrix ker(cols_, static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        ker.at(fc, static_cast<int>(k)) = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ker.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
    }
    return ker;
}

RatMatrix RatMatrix::solve(const RatMatrix& rhs) const {
    if (rhs.rows() != rows_) throw std::logic_error("RatMatrix::solve: shape mismatch");
    RatMatrix aug(rows_, cols_ + rhs.cols());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c >= cols_) throw std::logic_error("RatMatrix::solve: inconsistent system");
    RatMatrix x(cols_, rhs.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < rhs.cols(); ++j)
            x.at(pivots[r], j) = aug.at(static_cast<int>(r), cols_ + j);
    return x;
}

int QuiverRep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

void validate_rep(const RelationPattern& pat, const QuiverRep& rep) {
    int n = pat.n();
    if (static_cast<int>(rep.dims.size()) != n + 1 ||
        static_cast<int>(rep.actions.size()) != n + 1)
        throw std::logic_error("QuiverRep: wrong arity for pattern");
    for (int j = 1; j <= n; ++j) {
        if (rep.actions[j].rows() != rep.dims[j - 1] ||
            rep.actions[j].cols() != rep.dims[j])
            throw std::logic_error("QuiverRep: action shape mismatch at arrow " +
                                   std::to_string(j));
    }
    for (const auto& r : pat.relations()) {
        // composite action component t -> component s must vanish
        RatMatrix comp = RatMatrix::identity(rep.dims[r.t]);
        for (int j = r.t; j > r.s; --j) comp = rep.actions[j] * comp;
        if (!comp.is_zero())
            throw std::logic_error("QuiverRep: relation (" + std::to_string(r.s) +
                                   "," + std::to_string(r.t) + ") acts nonzero");
    }
}

QuiverRep projective(const RelationPattern& pat, int i) {
    int n = pat.n();
    if (i < 0 || i > n) throw std::out_of_range("projective: vertex out of range");
    QuiverRep rep;
    rep.dims.assign(n + 1, 0);
    for (int j = 0; j <= i; ++j) rep.dims[j] = pat.path_survives(j, i) ? 1 : 0;
    rep.actions.assign(n + 1, RatMatrix());
    for (int j = 1; j <= n; ++j) {
        RatMatrix a(rep.dims[j - 1], rep.dims[j]);
        if (rep.dims[j] == 1 && rep.dims[j - 1] == 1 && pat.path_survives(j - 1, i))
            a.at(0, 0) = Rat(1);
        rep.actions[j] = a;
    }
    return rep;
}

QuiverRep simple(const RelationPattern& pat, int j) {
    int n = pat.n();
    if (j < 0 || j > n) throw std::out_of_range("simple: vertex out of range");
    QuiverRep rep;
    rep.dims.assign(n + 1, 0);
    rep.dims[j] = 1;
    rep.actions.assign(n + 1, RatMatrix());
    for (int a = 1; a <= n; ++a) rep.actions[a] = RatMatrix(rep.dims[a - 1], rep.dims[a]);
    return rep;
}

namespace {

void assert_integral(const RatMatrix& m) {
    // Monomial combinatorics never forces denominators; anything else is a bug.
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_integer())
                throw std::logic_error("ext oracle: non-integral entry appeared");
}

}  // namespace

std::pair<ResolutionStep, QuiverRep> syzygy(const RelationPattern& pat,
                                            const QuiverRep& rep) {
    validate_rep(pat, rep);
    int n = pat.n();

    // top(rep) = rep / rad(rep); rad at vertex v is the image of the arrow
    // action entering v (from v + 1). Generators: standard basis vectors of
    // the component completing that image.
    ResolutionStep step;
    step.multiplicities.assign(n + 1, 0);
    step.generators.assign(n + 1, RatMatrix());
    for (int v = 0; v <= n; ++v) {
        int dim = rep.dims[v];
        RatMatrix rad = v < n ? rep.actions[v + 1] : RatMatrix(dim, 0);
        int rk = rad.rank();
        int mult = dim - rk;
        step.multiplicities[v] = mult;
        RatMatrix gens(dim, mult);
        if (mult > 0) {
            RatMatrix probe(dim, rad.cols() + mult);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < rad.cols(); ++j) probe.at(i, j) = rad.at(i, j);
            int taken = 0, cur_rank = rk;
            for (int e = 0; e < dim && taken < mult; ++e) {
                probe.at(e, rad.cols() + taken) = Rat(1);
                RatMatrix test(dim, rad.cols() + taken + 1);
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < rad.cols() + taken + 1; ++j)
                        test.at(i, j) = probe.at(i, j);
                if (test.rank() == cur_rank + 1) {
                    gens.at(e, taken) = Rat(1);
                    ++cur_rank;
                    ++taken;
                } else {
                    probe.at(e, rad.cols() + taken) = Rat(0);
                }
            }
            if (taken != mult) throw std::logic_error("syzygy: cover lift failed");
        }
        step.generators[v] = gens;
    }

    // The big projective: for each vertex v, mult_v copies of P(v). Its
    // component at u has one coordinate per (v, copy, path u->v surviving).
    struct Coord { int v, copy; };
    std::vector<std::vector<Coord>> coords(n + 1);
    for (int u = 0; u <= n; ++u)
        for (int v = u; v <= n; ++v) {
            if (step.multiplicities[v] == 0 || !pat.path_survives(u, v)) continue;
            for (int c = 0; c < step.multiplicities[v]; ++c)
                coords[u].push_back({v, c});
        }

    // Covering map at u: the (v, copy) coordinate goes to the generator
    // pushed down along the arrows v, v-1, ..., u+1.
    std::vector<RatMatrix> phi(n + 1);
    for (int u = 0; u <= n; ++u) {
        RatMatrix m(rep.dims[u], static_cast<int>(coords[u].size()));
        for (std::size_t k = 0; k < coords[u].size(); ++k) {
            auto [v, c] = coords[u][k];
            RatMatrix vec(rep.dims[v], 1);
            for (int i = 0; i < rep.dims[v]; ++i) vec.at(i, 0) = step.generators[v].at(i, c);
            for (int a = v; a > u; --a) vec = rep.actions[a] * vec;
            for (int i = 0; i < rep.dims[u]; ++i) m.at(i, static_cast<int>(k)) = vec.at(i, 0);
        }
        phi[u] = m;
    }

    // the cover must hit everything it covers
    for (int u = 0; u <= n; ++u)
        if (phi[u].rank() != rep.dims[u])
            throw std::logic_error("syzygy: covering map is not surjective at vertex " +
                                   std::to_string(u));

    // Kernel representation: basis per vertex, induced arrow actions by
    // solving in the kernel basis.
    QuiverRep ker;
    ker.dims.assign(n + 1, 0);
    ker.actions.assign(n + 1, RatMatrix());
    std::vector<RatMatrix> kbasis(n + 1);
    for (int u = 0; u <= n; ++u) {
        kbasis[u] = phi[u].kernel_basis();
        assert_integral(kbasis[u]);
        ker.dims[u] = kbasis[u].cols();
    }
    for (int a = 1; a <= n; ++a) {
        // big action at arrow a: coordinate (v, copy) at component a maps to
        // the same (v, copy) at component a-1 when the path survives there.
        RatMatrix big(static_cast<int>(coords[a - 1].size()),
                      static_cast<int>(coords[a].size()));
        for (std::size_t kc = 0; kc < coords[a].size(); ++kc) {
            auto [v, c] = coords[a][kc];
            if (!pat.path_survives(a - 1, v)) continue;
            for (std::size_t kr = 0; kr < coords[a - 1].size(); ++kr) {
                auto [vr, cr] = coords[a - 1][kr];
                if (vr == v && cr == c) big.at(static_cast<int>(kr), static_cast<int>(kc)) = Rat(1);
            }
        }
        RatMatrix moved = big * kbasis[a];
        ker.actions[a] = ker.dims[a - 1] == 0 || ker.dims[a] == 0
                             ? RatMatrix(ker.dims[a - 1], ker.dims[a])
                             : kbasis[a - 1].solve(moved);
        assert_integral(ker.actions[a]);
    }
    validate_rep(pat, ker);
    return {step, ker};
}

ExtTable resolve_simple(const RelationPattern& pat, int p, int d_max) {
    if (d_max < 0) d_max = pat.n() + 2;
    ExtTable tab;
    QuiverRep m = simple(pat, p);
    for (int d = 0; d <= d_max; ++d) {
        if (m.is_zero()) {
            tab.terminated = true;
            tab.length = d - 1;  // previous step had zero syzygy
            break;
        }
        auto [step, kernel] = syzygy(pat, m);
        tab.dims_by_degree.push_back(step.multiplicities);
        m = kernel;
    }
    if (!tab.terminated && m.is_zero()) {
        tab.terminated = true;
        tab.length = d_max;
    }
    return tab;
}

ExtDims ext_dims(const RelationPattern& pat, int p, int q, int d_max) {
    if (d_max < 0) d_max = pat.n() + 2;
    ExtTable tab = resolve_simple(pat, p, d_max);
    ExtDims out;
    out.terminated = tab.terminated;
    out.dims.assign(d_max + 1, 0);
    for (int d = 0; d <= d_max && d < static_cast<int>(tab.dims_by_degree.size()); ++d)
        out.dims[d] = tab.dims_by_degree[d][q];
    return out;
}

int resolution_length(const RelationPattern& pat, int p) {
    ExtTable tab = resolve_simple(pat, p);
    if (!tab.terminated)
        throw std::logic_error("resolution of S(" + std::to_string(p) +
                               ") did not terminate within d_max");
    return tab.length;
}

}  // namespace koszul
