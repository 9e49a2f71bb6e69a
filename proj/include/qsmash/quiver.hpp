#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qsmash/matrix.hpp"
#include "qsmash/semisimple.hpp"

namespace qsmash {

struct Arrow {
    std::string name;
    int tail = 0;
    int head = 0;
};

// Finite directed multigraph. Vertices are addressed by index; names are kept
// for interchange files and printing.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& name) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertices[i] == name) return i;
        throw std::invalid_argument("Quiver: unknown vertex " + name);
    }

    // Topological order of vertices; empty when the quiver has oriented cycles.
    std::vector<int> topological_order() const {
        std::vector<int> indeg(num_vertices(), 0);
        for (const Arrow& a : arrows) ++indeg[a.head];
        std::vector<int> order;
        std::vector<int> queue;
        for (int v = 0; v < num_vertices(); ++v)
            if (indeg[v] == 0) queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.front();
            queue.erase(queue.begin());
            order.push_back(v);
            for (const Arrow& a : arrows)
                if (a.tail == v && --indeg[a.head] == 0) queue.push_back(a.head);
        }
        if (static_cast<int>(order.size()) != num_vertices()) return {};
        return order;
    }

    bool is_acyclic() const { return !vertices.empty() ? !topological_order().empty() : true; }
};

inline Quiver kronecker_quiver(int n) {
    Quiver q;
    q.vertices = {"1", "2"};
    for (int i = 1; i <= n; ++i) q.arrows.push_back({"a" + std::to_string(i), 0, 1});
    return q;
}

inline Quiver subspace_quiver(int n) {
    Quiver q;
    for (int i = 1; i <= n + 1; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, n});
    return q;
}

using DimVector = std::vector<long>;

inline long euler_form(const Quiver& q, const DimVector& alpha, const DimVector& beta) {
    long s = 0;
    for (int v = 0; v < q.num_vertices(); ++v) s += alpha[v] * beta[v];
    for (const Arrow& a : q.arrows) s -= alpha[a.tail] * beta[a.head];
    return s;
}

// Tits form q(b) = <b,b>.
inline long tits_form(const Quiver& q, const DimVector& beta) { return euler_form(q, beta, beta); }

// Representation over the rationals, row-vector convention: x in M_{ta}
// maps to x * M(a), so M(a) has shape dims[tail] x dims[head].
struct Representation {
    std::shared_ptr<const Quiver> quiver;
    DimVector dims;
    std::vector<RatMatrix> matrices;  // per arrow

    const Quiver& q() const { return *quiver; }

    void check_shapes() const {
        if (static_cast<int>(dims.size()) != q().num_vertices() ||
            static_cast<int>(matrices.size()) != q().num_arrows())
            throw std::invalid_argument("Representation: size mismatch");
        for (int a = 0; a < q().num_arrows(); ++a) {
            if (matrices[a].rows() != dims[q().arrows[a].tail] ||
                matrices[a].cols() != dims[q().arrows[a].head])
                throw std::invalid_argument("Representation: matrix shape mismatch at arrow " +
                                            q().arrows[a].name);
        }
    }

    long total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0L); }
};

inline Representation zero_representation(std::shared_ptr<const Quiver> q, const DimVector& dims) {
    Representation m;
    m.quiver = std::move(q);
    m.dims = dims;
    for (const Arrow& a : m.q().arrows)
        m.matrices.emplace_back(static_cast<int>(dims[a.tail]), static_cast<int>(dims[a.head]));
    return m;
}

inline Representation simple_representation(std::shared_ptr<const Quiver> q, int v) {
    DimVector d(q->num_vertices(), 0);
    d[v] = 1;
    return zero_representation(std::move(q), d);
}

inline Representation random_rep(std::shared_ptr<const Quiver> q, const DimVector& dims,
                                 std::uint64_t seed, long height) {
    Rng rng(seed);
    Representation m = zero_representation(std::move(q), dims);
    for (int a = 0; a < m.q().num_arrows(); ++a)
        m.matrices[a] = random_matrix(rng, m.matrices[a].rows(), m.matrices[a].cols(), height);
    return m;
}

inline Representation direct_sum(const Representation& m, const Representation& n) {
    Representation s;
    s.quiver = m.quiver;
    s.dims.resize(m.dims.size());
    for (size_t v = 0; v < m.dims.size(); ++v) s.dims[v] = m.dims[v] + n.dims[v];
    for (int a = 0; a < m.q().num_arrows(); ++a) {
        const Arrow& ar = m.q().arrows[a];
        RatMatrix blk(static_cast<int>(s.dims[ar.tail]), static_cast<int>(s.dims[ar.head]));
        blk.set_block(0, 0, m.matrices[a]);
        blk.set_block(m.matrices[a].rows(), m.matrices[a].cols(), n.matrices[a]);
        s.matrices.push_back(blk);
    }
    return s;
}

// Morphisms f = (f_v) with M(a) f_{ha} = f_{ta} N(a); returned as a basis of
// tuples, deterministically echelonized.
inline std::vector<std::vector<RatMatrix>> hom_space(const Representation& m,
                                                     const Representation& n) {
    if (m.quiver->vertices != n.quiver->vertices)
        throw std::invalid_argument("hom_space: different quivers");
    int nv = m.q().num_vertices();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + static_cast<int>(m.dims[v] * n.dims[v]);
    int unknowns = offset[nv];
    int eq_cols = 0;
    for (const Arrow& a : m.q().arrows)
        eq_cols += static_cast<int>(m.dims[a.tail] * n.dims[a.head]);

    // Row per unknown coordinate of f, column per scalar equation
    // (s, t): sum_k M(a)[s,k] f_ha[k,t] - sum_k f_ta[s,k] N(a)[k,t] = 0.
    RatMatrix sys(unknowns, eq_cols);
    int col_base = 0;
    for (int ai = 0; ai < m.q().num_arrows(); ++ai) {
        const Arrow& a = m.q().arrows[ai];
        int rt = static_cast<int>(m.dims[a.tail]);
        int ch = static_cast<int>(n.dims[a.head]);
        int mh = static_cast<int>(m.dims[a.head]);
        int nt = static_cast<int>(n.dims[a.tail]);
        const RatMatrix& ma = m.matrices[ai];
        const RatMatrix& na = n.matrices[ai];
        for (int s = 0; s < rt; ++s)
            for (int t = 0; t < ch; ++t) {
                int col = col_base + s * ch + t;
                // + M(a)[s,k] * f_{ha}[k,t]
                for (int k = 0; k < mh; ++k)
                    if (ma(s, k) != 0)
                        sys(offset[a.head] + k * static_cast<int>(n.dims[a.head]) + t, col) += ma(s, k);
                // - f_{ta}[s,k] * N(a)[k,t]
                for (int k = 0; k < nt; ++k)
                    if (na(k, t) != 0)
                        sys(offset[a.tail] + s * nt + k, col) -= na(k, t);
            }
        col_base += rt * ch;
    }

    RatMatrix ker = kernel_basis(sys);
    std::vector<std::vector<RatMatrix>> out;
    for (int r = 0; r < ker.rows(); ++r) {
        std::vector<RatMatrix> f;
        for (int v = 0; v < nv; ++v) {
            RatMatrix fv(static_cast<int>(m.dims[v]), static_cast<int>(n.dims[v]));
            for (int i = 0; i < fv.rows(); ++i)
                for (int j = 0; j < fv.cols(); ++j)
                    fv(i, j) = ker(r, offset[v] + i * fv.cols() + j);
            f.push_back(fv);
        }
        out.push_back(f);
    }
    return out;
}

inline long hom_dim(const Representation& m, const Representation& n) {
    return static_cast<long>(hom_space(m, n).size());
}

// Entries of projective presentations: rational multiples of the trivial
// path plus a rational combination of arrows (degree <= 1 throughout).
struct ArrowLin {
    Rat c0;                      // coefficient of the trivial path
    std::map<int, Rat> arrows;   // arrow index -> coefficient

    bool is_zero() const {
        if (c0 != 0) return false;
        for (auto& [a, c] : arrows)
            if (c != 0) return false;
        return true;
    }
};

// Matrix over the path algebra presenting a map P_1 -> P_0 of projectives;
// entry (r, c) is a combination of paths from the vertex of column c's
// projective to that of row r's.
struct ProjectivePresentation {
    std::shared_ptr<const Quiver> quiver;
    std::vector<int> row_vertices;  // P_1 summands
    std::vector<int> col_vertices;  // P_0 summands
    std::vector<std::vector<ArrowLin>> entries;  // [row][col]

    const Quiver& q() const { return *quiver; }
};

// Canonical presentation 0 -> (+)_a P_{ha} x M_ta -> (+)_v P_v x M_v -> M -> 0.
// Entries: the a-row meets the ta-column in the arrow a and the ha-column in
// -M(a); no minimization is applied, so projective summands stay split.
inline ProjectivePresentation canonical_resolution(const Representation& m) {
    if (!m.q().is_acyclic())
        throw std::invalid_argument("canonical_resolution: quiver must be acyclic");
    ProjectivePresentation p;
    p.quiver = m.quiver;
    std::vector<std::pair<int, int>> rows;  // (arrow, copy)
    for (int ai = 0; ai < m.q().num_arrows(); ++ai)
        for (int s = 0; s < m.dims[m.q().arrows[ai].tail]; ++s) {
            p.row_vertices.push_back(m.q().arrows[ai].head);
            rows.push_back({ai, s});
        }
    std::vector<std::pair<int, int>> cols;  // (vertex, copy)
    for (int v = 0; v < m.q().num_vertices(); ++v)
        for (int t = 0; t < m.dims[v]; ++t) {
            p.col_vertices.push_back(v);
            cols.push_back({v, t});
        }
    p.entries.assign(rows.size(), std::vector<ArrowLin>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        auto [ai, s] = rows[r];
        const Arrow& a = m.q().arrows[ai];
        for (size_t c = 0; c < cols.size(); ++c) {
            auto [v, t] = cols[c];
            if (v == a.tail && t == s) p.entries[r][c].arrows[ai] += 1;
            if (v == a.head) p.entries[r][c].c0 -= m.matrices[ai](s, t);
        }
    }
    return p;
}

// Evaluate an entry on a representation: N(c0 * e + sum c_a a) as a map
// N_{col vertex} -> N_{row vertex} (row convention).
inline RatMatrix evaluate_entry(const ArrowLin& e, const Representation& n, int col_v, int row_v) {
    RatMatrix out(static_cast<int>(n.dims[col_v]), static_cast<int>(n.dims[row_v]));
    if (e.c0 != 0) {
        if (col_v != row_v) throw std::invalid_argument("evaluate_entry: trivial path needs equal vertices");
        out += RatMatrix::identity(out.rows()).scaled(e.c0);
    }
    for (auto& [ai, c] : e.arrows) {
        const Arrow& a = n.q().arrows[ai];
        if (a.tail != col_v || a.head != row_v)
            throw std::invalid_argument("evaluate_entry: arrow endpoints do not match");
        out += n.matrices[ai].scaled(c);
    }
    return out;
}

// Matrix of Hom(P_0, N) -> Hom(P_1, N) induced by the presentation: block
// (c, r) is N(entry(r, c)); rows are indexed by the P_0 side.
inline RatMatrix presentation_hom_matrix(const ProjectivePresentation& p, const Representation& n) {
    std::vector<int> roff(p.row_vertices.size() + 1, 0), coff(p.col_vertices.size() + 1, 0);
    for (size_t r = 0; r < p.row_vertices.size(); ++r)
        roff[r + 1] = roff[r] + static_cast<int>(n.dims[p.row_vertices[r]]);
    for (size_t c = 0; c < p.col_vertices.size(); ++c)
        coff[c + 1] = coff[c] + static_cast<int>(n.dims[p.col_vertices[c]]);
    RatMatrix phi(coff.back(), roff.back());
    for (size_t r = 0; r < p.row_vertices.size(); ++r)
        for (size_t c = 0; c < p.col_vertices.size(); ++c) {
            const ArrowLin& e = p.entries[r][c];
            if (e.is_zero()) continue;
            phi.set_block(coff[c], roff[r], evaluate_entry(e, n, p.col_vertices[c], p.row_vertices[r]));
        }
    return phi;
}

// dim Ext^1(M, N) = corank of the presentation matrix of M evaluated at N.
inline long ext_dim(const Representation& m, const Representation& n) {
    ProjectivePresentation p = canonical_resolution(m);
    RatMatrix phi = presentation_hom_matrix(p, n);
    return phi.cols() - rank(phi);
}

// Seeded probabilistic isomorphism test: "no" on dimension or Hom-dimension
// mismatch, "yes" when some sampled morphism is invertible at every vertex,
// "inconclusive" once the retry budget runs out.
enum class IsoResult { yes, no, inconclusive };

inline IsoResult is_isomorphic(const Representation& m, const Representation& n, int retries = 5,
                               std::uint64_t seed = 1234) {
    if (m.dims != n.dims) return IsoResult::no;
    auto homs = hom_space(m, n);
    long my_end = hom_dim(m, m), their_end = hom_dim(n, n);
    if (my_end != their_end || static_cast<long>(homs.size()) != my_end) return IsoResult::no;
    if (homs.empty()) {
        // zero representations of equal dims
        return m.total_dim() == 0 ? IsoResult::yes : IsoResult::no;
    }
    Rng rng(seed);
    for (int t = 0; t < retries; ++t) {
        std::vector<RatMatrix> f;
        for (int v = 0; v < m.q().num_vertices(); ++v)
            f.emplace_back(static_cast<int>(m.dims[v]), static_cast<int>(n.dims[v]));
        for (auto& h : homs) {
            Rat c = rng.rat_in(9);
            for (int v = 0; v < m.q().num_vertices(); ++v) f[v] += h[v].scaled(c);
        }
        bool inv = true;
        for (int v = 0; v < m.q().num_vertices() && inv; ++v)
            if (m.dims[v] > 0 && det(f[v]) == 0) inv = false;
        if (inv) return IsoResult::yes;
    }
    return IsoResult::inconclusive;
}

// Endomorphism algebra as a MatrixAlgebra acting on (+)_v M_v in the column
// convention (transposed blocks, which realizes the opposite composition;
// idempotent computations are unaffected).
inline MatrixAlgebra end_algebra(const Representation& m, std::vector<std::vector<RatMatrix>>* homs_out = nullptr) {
    auto homs = hom_space(m, m);
    int total = static_cast<int>(m.total_dim());
    MatrixAlgebra alg{total, {}};
    for (auto& h : homs) {
        RatMatrix big(total, total);
        int off = 0;
        for (int v = 0; v < m.q().num_vertices(); ++v) {
            big.set_block(off, off, h[v].transpose());
            off += static_cast<int>(m.dims[v]);
        }
        alg.basis.push_back(big);
    }
    if (homs_out) *homs_out = homs;
    return alg;
}

// Subrepresentation on the row space of the idempotent endomorphism e.
inline Representation image_representation(const Representation& m,
                                           const std::vector<RatMatrix>& e) {
    Representation s;
    s.quiver = m.quiver;
    std::vector<RatMatrix> bases;
    for (int v = 0; v < m.q().num_vertices(); ++v) {
        RatMatrix b = row_space_basis(e[v]);
        s.dims.push_back(b.rows());
        bases.push_back(b);
    }
    for (int ai = 0; ai < m.q().num_arrows(); ++ai) {
        const Arrow& a = m.q().arrows[ai];
        // image basis rows at tail, mapped through M(a), expressed at head
        RatMatrix mapped = bases[a.tail] * m.matrices[ai];
        auto sol = solve_left(bases[a.head], mapped);
        if (!sol) throw std::logic_error("image_representation: image not invariant");
        s.matrices.push_back(*sol);
    }
    return s;
}

// All paths from v, grouped by target vertex, each path a list of arrow
// indices in composition order; deterministic lexicographic enumeration.
// Requires an acyclic quiver.
inline std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int v) {
    if (!q.is_acyclic()) throw std::invalid_argument("paths_from: quiver must be acyclic");
    std::vector<std::vector<std::vector<int>>> by_target(q.num_vertices());
    std::vector<int> current;
    auto rec = [&](auto&& self, int at) -> void {
        by_target[at].push_back(current);
        for (int ai = 0; ai < q.num_arrows(); ++ai)
            if (q.arrows[ai].tail == at) {
                current.push_back(ai);
                self(self, q.arrows[ai].head);
                current.pop_back();
            }
    };
    rec(rec, v);
    return by_target;
}

// Indecomposable projective P_v as a representation: P_v(w) = span of paths
// v -> w, arrows acting by right concatenation.
inline Representation projective_representation(std::shared_ptr<const Quiver> qp, int v) {
    const Quiver& q = *qp;
    auto paths = paths_from(q, v);
    Representation p;
    p.quiver = std::move(qp);
    for (int w = 0; w < q.num_vertices(); ++w) p.dims.push_back(static_cast<long>(paths[w].size()));
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        const Arrow& a = q.arrows[ai];
        RatMatrix ma(static_cast<int>(p.dims[a.tail]), static_cast<int>(p.dims[a.head]));
        for (size_t i = 0; i < paths[a.tail].size(); ++i) {
            std::vector<int> ext = paths[a.tail][i];
            ext.push_back(ai);
            auto it = std::find(paths[a.head].begin(), paths[a.head].end(), ext);
            if (it == paths[a.head].end()) throw std::logic_error("projective_representation: path");
            ma(static_cast<int>(i), static_cast<int>(it - paths[a.head].begin())) = 1;
        }
        p.matrices.push_back(ma);
    }
    return p;
}

// The representation presented by a matrix of paths: cokernel of
// (+)_r P_{x_r} -> (+)_c P_{y_c}, computed vertexwise by exact elimination.
inline Representation presentation_cokernel(const ProjectivePresentation& p) {
    const Quiver& q = p.q();
    int nv = q.num_vertices();
    // Paths from every vertex, cached.
    std::vector<std::vector<std::vector<std::vector<int>>>> paths(nv);
    for (int v = 0; v < nv; ++v) paths[v] = paths_from(q, v);

    struct VertexData {
        std::vector<std::pair<int, int>> col_paths;  // (c, path index)
        RatMatrix rref;                              // reduced rows of im(F_w)
        std::vector<int> pivots;
        std::vector<int> free_cols;
    };
    std::vector<VertexData> vd(nv);

    auto col_index = [&](const VertexData& d, int c, int pi) {
        for (size_t k = 0; k < d.col_paths.size(); ++k)
            if (d.col_paths[k].first == c && d.col_paths[k].second == pi) return static_cast<int>(k);
        throw std::logic_error("presentation_cokernel: missing column path");
    };

    Representation m;
    m.quiver = p.quiver;
    m.dims.assign(nv, 0);

    for (int w = 0; w < nv; ++w) {
        VertexData& d = vd[w];
        for (size_t c = 0; c < p.col_vertices.size(); ++c)
            for (size_t pi = 0; pi < paths[p.col_vertices[c]][w].size(); ++pi)
                d.col_paths.push_back({static_cast<int>(c), static_cast<int>(pi)});
        // rows of F_w
        std::vector<std::vector<Rat>> rows;
        for (size_t r = 0; r < p.row_vertices.size(); ++r) {
            int xr = p.row_vertices[r];
            for (size_t pi = 0; pi < paths[xr][w].size(); ++pi) {
                std::vector<Rat> row(d.col_paths.size());
                const std::vector<int>& tail_path = paths[xr][w][pi];
                for (size_t c = 0; c < p.col_vertices.size(); ++c) {
                    const ArrowLin& e = p.entries[r][c];
                    if (e.is_zero()) continue;
                    int yc = p.col_vertices[c];
                    if (e.c0 != 0) {
                        if (yc != xr) throw std::logic_error("presentation_cokernel: bad trivial path");
                        row[col_index(d, static_cast<int>(c),
                                      static_cast<int>(std::find(paths[yc][w].begin(), paths[yc][w].end(),
                                                                 tail_path) -
                                                       paths[yc][w].begin()))] += e.c0;
                    }
                    for (auto& [ai, coef] : e.arrows) {
                        std::vector<int> ext{ai};
                        ext.insert(ext.end(), tail_path.begin(), tail_path.end());
                        auto it = std::find(paths[yc][w].begin(), paths[yc][w].end(), ext);
                        if (it == paths[yc][w].end())
                            throw std::logic_error("presentation_cokernel: bad arrow path");
                        row[col_index(d, static_cast<int>(c),
                                      static_cast<int>(it - paths[yc][w].begin()))] += coef;
                    }
                }
                rows.push_back(row);
            }
        }
        RatMatrix f(static_cast<int>(rows.size()), static_cast<int>(d.col_paths.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j) f(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        d.pivots = rref_inplace(f);
        d.rref = f;
        std::vector<bool> is_p(d.col_paths.size(), false);
        for (int c : d.pivots) is_p[c] = true;
        for (size_t c = 0; c < d.col_paths.size(); ++c)
            if (!is_p[c]) d.free_cols.push_back(static_cast<int>(c));
        m.dims[w] = static_cast<long>(d.free_cols.size());
    }

    // Reduce a coordinate vector at w to quotient coordinates.
    auto to_quotient = [&](int w, std::vector<Rat> vec) {
        const VertexData& d = vd[w];
        for (size_t r = 0; r < d.pivots.size(); ++r) {
            Rat f = vec[d.pivots[r]];
            if (f == 0) continue;
            for (size_t j = 0; j < vec.size(); ++j) vec[j] -= f * d.rref(static_cast<int>(r), static_cast<int>(j));
        }
        std::vector<Rat> out;
        for (int c : d.free_cols) out.push_back(vec[c]);
        return out;
    };

    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        const Arrow& a = q.arrows[ai];
        RatMatrix ma(static_cast<int>(m.dims[a.tail]), static_cast<int>(m.dims[a.head]));
        const VertexData& dt = vd[a.tail];
        const VertexData& dh = vd[a.head];
        for (size_t bi = 0; bi < dt.free_cols.size(); ++bi) {
            auto [c, pi] = dt.col_paths[dt.free_cols[bi]];
            std::vector<int> ext = paths[p.col_vertices[c]][a.tail][pi];
            ext.push_back(ai);
            auto it = std::find(paths[p.col_vertices[c]][a.head].begin(),
                                paths[p.col_vertices[c]][a.head].end(), ext);
            if (it == paths[p.col_vertices[c]][a.head].end())
                throw std::logic_error("presentation_cokernel: concat path missing");
            std::vector<Rat> vec(dh.col_paths.size());
            vec[col_index(dh, c, static_cast<int>(it - paths[p.col_vertices[c]][a.head].begin()))] = 1;
            std::vector<Rat> qv = to_quotient(a.head, vec);
            for (size_t j = 0; j < qv.size(); ++j) ma(static_cast<int>(bi), static_cast<int>(j)) = qv[j];
        }
        m.matrices.push_back(ma);
    }
    return m;
}

struct Summand {
    Representation rep;
    int multiplicity = 1;
    bool iso_inconclusive = false;
};

// Split M into indecomposable summands via a complete family of orthogonal
// idempotents of End(M), then group the pieces by is_isomorphic.
inline std::vector<Summand> decompose_indecomposables(const Representation& m,
                                                      std::uint64_t seed = 1) {
    std::vector<Summand> out;
    if (m.total_dim() == 0) return out;
    std::vector<std::vector<RatMatrix>> homs;
    MatrixAlgebra alg = end_algebra(m, &homs);
    std::vector<RatMatrix> idems = idempotents_in_end(alg, seed);
    std::vector<Representation> pieces;
    for (const RatMatrix& e : idems) {
        // unpack the block-diagonal idempotent to per-vertex maps (transpose back)
        std::vector<RatMatrix> ev;
        int off = 0;
        for (int v = 0; v < m.q().num_vertices(); ++v) {
            int d = static_cast<int>(m.dims[v]);
            ev.push_back(e.block(off, off, d, d).transpose());
            off += d;
        }
        Representation piece = image_representation(m, ev);
        if (piece.total_dim() > 0) pieces.push_back(piece);
    }
    Rng rng(seed);
    for (auto& piece : pieces) {
        bool matched = false;
        for (auto& s : out) {
            IsoResult r = is_isomorphic(piece, s.rep, 5, rng.next_u64());
            if (r == IsoResult::yes) {
                ++s.multiplicity;
                matched = true;
                break;
            }
            if (r == IsoResult::inconclusive) s.iso_inconclusive = true;
        }
        if (!matched) out.push_back({piece, 1, false});
    }
    return out;
}

}  // namespace qsmash
