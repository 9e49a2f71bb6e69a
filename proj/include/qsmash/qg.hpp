#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qsmash/partitions.hpp"
#include "qsmash/quiver.hpp"
#include "qsmash/schur.hpp"
#include "qsmash/symmetric_group.hpp"

namespace qsmash {

// Group data acting on the base quiver.
struct FiniteDatum {
    FiniteAction action;
};

struct GlDatum {
    int n = 0;
    // constituents of the arrow module R_{uv} per vertex pair with arrows;
    // all constituents of one pair must have equal size (homogeneous degree)
    std::map<std::pair<int, int>, std::vector<Partition>> arrow_modules;
};

struct TorusDatum {
    int rank = 0;
    std::vector<std::vector<int>> arrow_weights;  // per arrow of Q
};

using GroupDatum = std::variant<FiniteDatum, GlDatum, TorusDatum>;

inline void validate_gl_datum(const Quiver& q, const GlDatum& d) {
    std::map<std::pair<int, int>, int> arrow_count;
    for (const Arrow& a : q.arrows) ++arrow_count[{a.tail, a.head}];
    for (auto& [uv, count] : arrow_count) {
        auto it = d.arrow_modules.find(uv);
        if (it == d.arrow_modules.end())
            throw std::invalid_argument("GlDatum: missing arrow module for a vertex pair");
        Int total = 0;
        int deg = -1;
        for (const Partition& mu : it->second) {
            total += dim_gl_irrep(mu, d.n);
            if (deg < 0) deg = partition_size(mu);
            if (partition_size(mu) != deg)
                throw std::invalid_argument("GlDatum: mixed degrees in one arrow module");
        }
        if (total != Int(count))
            throw std::invalid_argument("GlDatum: constituent dimensions do not match arrow count");
    }
}

// Vertex of Q_G: a base vertex with an irreducible label (partition for
// finite symmetric stabilizers and for GL_n; integer weight for tori).
struct QGVertex {
    int base_vertex = 0;
    Partition label;           // finite / gl
    std::vector<int> weight;   // torus
    bool torus = false;

    std::string name(const Quiver& base) const {
        if (torus) {
            std::string s = base.vertices[base_vertex] + ":(";
            for (size_t i = 0; i < weight.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(weight[i]);
            }
            return s + ")";
        }
        return base.vertices[base_vertex] + ":" + partition_str(label);
    }

    auto operator<=>(const QGVertex&) const = default;
};

// Q_G with its provenance: per arrow, the (tail,head) bundle and copy index.
struct QGQuiver {
    std::shared_ptr<const Quiver> base;
    Quiver quiver;
    std::vector<QGVertex> labels;            // per quiver vertex
    std::vector<long> label_dim;             // d_rho per quiver vertex
    std::vector<int> bundle_copy;            // per arrow: index within its bundle
    // finite case bookkeeping
    std::vector<int> orbit_rep;              // per base vertex: representative
    bool finite_case = false;

    int vertex_of(const QGVertex& v) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == v) return static_cast<int>(i);
        throw std::invalid_argument("QGQuiver: unknown vertex " + v.name(*base));
    }

    long bundle_multiplicity(int tail, int head) const {
        long m = 0;
        for (const Arrow& a : quiver.arrows)
            if (a.tail == tail && a.head == head) ++m;
        return m;
    }
};

namespace detail {

inline void add_bundle(QGQuiver& qg, int tail, int head, long mult) {
    for (long k = 0; k < mult; ++k) {
        qg.quiver.arrows.push_back({"b" + std::to_string(qg.quiver.arrows.size() + 1), tail, head});
        qg.bundle_copy.push_back(static_cast<int>(k));
    }
}

}  // namespace detail

// Q_G for a finite group action: vertices (orbit representative, irreducible
// of the stabilizer), arrow multiplicities summed over pair-orbit
// representatives via character inner products.
inline QGQuiver build_qg_finite(std::shared_ptr<const Quiver> base, const FiniteDatum& datum) {
    const Quiver& q = *base;
    auto group = group_closure(datum.action, q.num_vertices(), q.num_arrows());
    OrbitData od = orbits_and_stabilizers(group, q.num_vertices());

    QGQuiver qg;
    qg.base = base;
    qg.finite_case = true;
    qg.orbit_rep = od.rep_of;
    for (int u : od.reps) {
        int m = stabilizer_symmetric_degree(od, u, group);
        for (const Partition& rho : partitions_of(m)) {
            QGVertex v{u, rho, {}, false};
            qg.labels.push_back(v);
            qg.label_dim.push_back(to_long(Rat(dim_symgroup_irrep(rho))));
            qg.quiver.vertices.push_back(v.name(q));
        }
    }

    // pair-orbit representatives for each pair of vertex orbits
    for (int u : od.reps)
        for (int v : od.reps) {
            std::set<std::pair<int, int>> seen;
            std::vector<std::pair<int, int>> pair_reps;
            for (int w = 0; w < q.num_vertices(); ++w) {
                if (od.rep_of[w] != u) continue;
                for (int w2 = 0; w2 < q.num_vertices(); ++w2) {
                    if (od.rep_of[w2] != v) continue;
                    if (seen.count({w, w2})) continue;
                    pair_reps.push_back({w, w2});
                    for (const GroupElement& g : group)
                        seen.insert({g.vertex_map[w], g.vertex_map[w2]});
                }
            }
            // arrow multiplicities for each label pair
            int mu = stabilizer_symmetric_degree(od, u, group);
            int mv = stabilizer_symmetric_degree(od, v, group);
            for (const Partition& rho : partitions_of(mu))
                for (const Partition& sigma : partitions_of(mv)) {
                    long mult = 0;
                    for (auto& [w, w2] : pair_reps) {
                        std::vector<int> arrows;
                        for (int ai = 0; ai < q.num_arrows(); ++ai)
                            if (q.arrows[ai].tail == w && q.arrows[ai].head == w2)
                                arrows.push_back(ai);
                        if (arrows.empty()) continue;
                        mult += module_multiplicity(group, od, w, w2, rho, sigma, arrows);
                    }
                    if (mult > 0)
                        detail::add_bundle(qg, qg.vertex_of({u, rho, {}, false}),
                                           qg.vertex_of({v, sigma, {}, false}), mult);
                }
        }
    return qg;
}

namespace detail {

// Arrow multiplicity (u,rho) -> (v,sigma) in the GL case: sum over the
// constituents mu of R_{uv} of the Littlewood-Richardson numbers c_{sigma,mu}^rho.
inline long gl_multiplicity(const GlDatum& d, int u, int v, const Partition& rho,
                            const Partition& sigma) {
    auto it = d.arrow_modules.find({u, v});
    if (it == d.arrow_modules.end()) return 0;
    long m = 0;
    for (const Partition& mu : it->second) m += lr_coefficient(sigma, mu, rho);
    return m;
}

inline int gl_arrow_degree(const GlDatum& d, int u, int v) {
    auto it = d.arrow_modules.find({u, v});
    if (it == d.arrow_modules.end() || it->second.empty()) return -1;
    return partition_size(it->second.front());
}

}  // namespace detail

// Truncated Q_G for a polynomial GL_n action: all labels of size at most the
// degree window.
inline QGQuiver build_qg_gl(std::shared_ptr<const Quiver> base, const GlDatum& datum,
                            int degree_window) {
    validate_gl_datum(*base, datum);
    if (degree_window < 0) throw std::invalid_argument("build_qg_gl: empty window");
    QGQuiver qg;
    qg.base = base;
    const Quiver& q = *base;
    for (int u = 0; u < q.num_vertices(); ++u)
        for (int deg = 0; deg <= degree_window; ++deg)
            for (const Partition& lam : partitions_of(deg, datum.n)) {
                QGVertex v{u, lam, {}, false};
                qg.labels.push_back(v);
                qg.label_dim.push_back(to_long(Rat(dim_gl_irrep(lam, datum.n))));
                qg.quiver.vertices.push_back(v.name(q));
            }
    for (size_t i = 0; i < qg.labels.size(); ++i)
        for (size_t j = 0; j < qg.labels.size(); ++j) {
            long mult = detail::gl_multiplicity(datum, qg.labels[i].base_vertex,
                                                qg.labels[j].base_vertex, qg.labels[i].label,
                                                qg.labels[j].label);
            if (mult > 0)
                detail::add_bundle(qg, static_cast<int>(i), static_cast<int>(j), mult);
        }
    return qg;
}

// Universal abelian covering layer for a torus action, truncated to the box
// |w_i| <= window.
inline QGQuiver build_qg_torus(std::shared_ptr<const Quiver> base, const TorusDatum& datum,
                               int window) {
    const Quiver& q = *base;
    if (static_cast<int>(datum.arrow_weights.size()) != q.num_arrows())
        throw std::invalid_argument("build_qg_torus: one weight per arrow required");
    QGQuiver qg;
    qg.base = base;
    std::vector<std::vector<int>> box{{}};
    for (int i = 0; i < datum.rank; ++i) {
        std::vector<std::vector<int>> next;
        for (auto& w : box)
            for (int x = -window; x <= window; ++x) {
                auto w2 = w;
                w2.push_back(x);
                next.push_back(w2);
            }
        box = next;
    }
    for (int u = 0; u < q.num_vertices(); ++u)
        for (auto& w : box) {
            QGVertex v{u, {}, w, true};
            qg.labels.push_back(v);
            qg.label_dim.push_back(1);
            qg.quiver.vertices.push_back(v.name(q));
        }
    auto find = [&](int u, const std::vector<int>& w) -> int {
        QGVertex v{u, {}, w, true};
        for (size_t i = 0; i < qg.labels.size(); ++i)
            if (qg.labels[i] == v) return static_cast<int>(i);
        return -1;
    };
    for (int ai = 0; ai < q.num_arrows(); ++ai)
        for (size_t i = 0; i < qg.labels.size(); ++i) {
            if (qg.labels[i].base_vertex != q.arrows[ai].tail) continue;
            std::vector<int> w2 = qg.labels[i].weight;
            for (int k = 0; k < datum.rank; ++k) w2[k] += datum.arrow_weights[ai][k];
            int j = find(q.arrows[ai].head, w2);
            if (j >= 0) detail::add_bundle(qg, static_cast<int>(i), j, 1);
        }
    return qg;
}

// Connected component (undirected closure) of the vertex v0 in Q_G; for GL
// data the component is generated on demand, growing degrees until closed,
// which terminates for acyclic base quivers. `cap` bounds the label degree.
inline QGQuiver component_of(const QGQuiver& qg, int v0) {
    std::vector<int> keep;
    std::vector<bool> in(qg.labels.size(), false);
    std::vector<int> frontier{v0};
    in[v0] = true;
    while (!frontier.empty()) {
        int v = frontier.back();
        frontier.pop_back();
        keep.push_back(v);
        for (const Arrow& a : qg.quiver.arrows) {
            int other = -1;
            if (a.tail == v) other = a.head;
            if (a.head == v) other = a.tail;
            if (other >= 0 && !in[other]) {
                in[other] = true;
                frontier.push_back(other);
            }
        }
    }
    std::sort(keep.begin(), keep.end());
    QGQuiver comp;
    comp.base = qg.base;
    comp.finite_case = qg.finite_case;
    comp.orbit_rep = qg.orbit_rep;
    std::vector<int> newidx(qg.labels.size(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        newidx[keep[i]] = static_cast<int>(i);
        comp.labels.push_back(qg.labels[keep[i]]);
        comp.label_dim.push_back(qg.label_dim[keep[i]]);
        comp.quiver.vertices.push_back(qg.quiver.vertices[keep[i]]);
    }
    for (size_t ai = 0; ai < qg.quiver.arrows.size(); ++ai) {
        const Arrow& a = qg.quiver.arrows[ai];
        if (newidx[a.tail] >= 0 && newidx[a.head] >= 0) {
            comp.quiver.arrows.push_back(
                {"b" + std::to_string(comp.quiver.arrows.size() + 1), newidx[a.tail], newidx[a.head]});
            comp.bundle_copy.push_back(qg.bundle_copy[ai]);
        }
    }
    return comp;
}

// GL component by demand-driven closure from a seed label; grows the degree
// window until the component closes, with a hard cap.
inline QGQuiver gl_component(std::shared_ptr<const Quiver> base, const GlDatum& datum,
                             int seed_vertex, const Partition& seed_label, int cap = 40) {
    int max_deg = 1;
    for (auto& [uv, mus] : datum.arrow_modules)
        if (!mus.empty()) max_deg = std::max(max_deg, partition_size(mus.front()));
    int window = partition_size(seed_label) + max_deg + 1;
    for (; window <= cap; ++window) {
        QGQuiver full = build_qg_gl(base, datum, window);
        int v0 = full.vertex_of({seed_vertex, seed_label, {}, false});
        QGQuiver comp = component_of(full, v0);
        // closed iff no component vertex could receive an arrow from a label
        // beyond the window
        bool closed = true;
        for (const QGVertex& v : comp.labels) {
            for (int t = 0; t < base->num_vertices() && closed; ++t) {
                int deg = detail::gl_arrow_degree(datum, t, v.base_vertex);
                if (deg < 0) continue;
                if (partition_size(v.label) + deg > window) {
                    // a bigger label could map onto v; check existence
                    for (const Partition& tau :
                         partitions_of(partition_size(v.label) + deg, datum.n))
                        if (detail::gl_multiplicity(datum, t, v.base_vertex, tau, v.label) > 0) {
                            closed = false;
                            break;
                        }
                }
            }
            if (!closed) break;
        }
        if (closed) return comp;
    }
    throw std::runtime_error("gl_component: window exhausted before closure; enlarge the cap");
}

// K_0 map: r(beta)(w) = sum over Q_G vertices above (the orbit of) w of
// dim(V_rho) * beta(u, rho).
inline DimVector r_map(const QGQuiver& qg, const DimVector& beta) {
    if (static_cast<int>(beta.size()) != qg.quiver.num_vertices())
        throw std::invalid_argument("r_map: dimension vector size mismatch");
    DimVector alpha(qg.base->num_vertices(), 0);
    for (int w = 0; w < qg.base->num_vertices(); ++w) {
        int rep = qg.finite_case ? qg.orbit_rep[w] : w;
        for (size_t i = 0; i < qg.labels.size(); ++i)
            if (qg.labels[i].base_vertex == rep) alpha[w] += qg.label_dim[i] * beta[i];
    }
    return alpha;
}

// Group element acting on a representation of the base quiver by
// recombining arrows: act(g, M)(a_j) = sum_l pi(g)_{lj} M(a_l) on spaces
// M_w pulled back along the vertex action.
inline Representation group_act_rep_finite(const GroupElement& g, const Representation& m) {
    Representation out;
    out.quiver = m.quiver;
    out.dims.resize(m.dims.size());
    for (int w = 0; w < m.q().num_vertices(); ++w) out.dims[w] = m.dims[g.vertex_map[w]];
    for (int aj = 0; aj < m.q().num_arrows(); ++aj) {
        const Arrow& a = m.q().arrows[aj];
        RatMatrix acc(static_cast<int>(out.dims[a.tail]), static_cast<int>(out.dims[a.head]));
        for (int al = 0; al < m.q().num_arrows(); ++al)
            if (g.arrow_matrix(al, aj) != 0) acc += m.matrices[al].scaled(g.arrow_matrix(al, aj));
        out.matrices.push_back(acc);
    }
    return out;
}

// GL element: the action matrix on each arrow module comes from the
// realized constituents.
inline Representation group_act_rep_gl(const GlDatum& datum, const RatMatrix& g,
                                       const Representation& m) {
    if (g.rows() != datum.n || g.cols() != datum.n)
        throw std::invalid_argument("group_act_rep_gl: wrong group element size");
    Representation out = m;
    // per vertex pair: assemble the block-diagonal action on the arrow span
    std::map<std::pair<int, int>, std::vector<int>> arrows_by_pair;
    for (int ai = 0; ai < m.q().num_arrows(); ++ai)
        arrows_by_pair[{m.q().arrows[ai].tail, m.q().arrows[ai].head}].push_back(ai);
    for (auto& [uv, arrows] : arrows_by_pair) {
        auto it = datum.arrow_modules.find(uv);
        if (it == datum.arrow_modules.end())
            throw std::invalid_argument("group_act_rep_gl: missing arrow module");
        int r = static_cast<int>(arrows.size());
        RatMatrix action(r, r);
        int off = 0;
        for (const Partition& mu : it->second) {
            GlIrrep v = gl_irrep_realization(mu, datum.n);
            action.set_block(off, off, v.act_group(g));
            off += v.dim();
        }
        for (int j = 0; j < r; ++j) {
            RatMatrix acc(out.matrices[arrows[j]].rows(), out.matrices[arrows[j]].cols());
            for (int l = 0; l < r; ++l)
                if (action(l, j) != 0) acc += m.matrices[arrows[l]].scaled(action(l, j));
            out.matrices[arrows[j]] = acc;
        }
    }
    return out;
}

// Symmetrized Euler matrix of the underlying graph.
inline RatMatrix symmetrized_euler_matrix(const Quiver& q) {
    int n = q.num_vertices();
    RatMatrix b(n, n);
    for (int i = 0; i < n; ++i) b(i, i) = 2;
    for (const Arrow& a : q.arrows) {
        if (a.tail == a.head) { b(a.tail, a.tail) -= 2; continue; }
        b(a.tail, a.head) -= 1;
        b(a.head, a.tail) -= 1;
    }
    return b;
}

// positive definite <=> Dynkin underlying graph (finite representation type)
inline bool is_finite_type(const Quiver& q) {
    RatMatrix b = symmetrized_euler_matrix(q);
    for (int k = 1; k <= q.num_vertices(); ++k)
        if (det(b.block(0, 0, k, k)) <= 0) return false;
    return true;
}

inline bool is_tame_type(const Quiver& q) {
    RatMatrix b = symmetrized_euler_matrix(q);
    if (is_finite_type(q)) return false;
    // positive semidefinite with one-dimensional radical
    int n = q.num_vertices();
    if (rank(b) != n - 1) return false;
    // psd check: all principal leading minors nonnegative on a permutation;
    // use the Tits form on a sampled box instead (exact but heuristic-free
    // for our small components): q(x) >= 0 for all 0 <= x_i <= 3
    std::vector<long> x(n, 0);
    while (true) {
        long val = 0;
        DimVector dv(x.begin(), x.end());
        val = tits_form(q, dv);
        if (val < 0) return false;
        int k = 0;
        while (k < n && x[k] == 3) x[k++] = 0;
        if (k == n) break;
        ++x[k];
    }
    return true;
}

struct GRootWitness {
    DimVector beta;          // dimension vector on the component
    bool probabilistic = false;
};

// Search for a root beta of the component with r(beta) = alpha. Finite and
// tame components use the exact Tits-form root criterion; wild components
// fall back to a seeded indecomposability witness.
inline std::optional<GRootWitness> g_root_witness(const QGQuiver& comp, const DimVector& alpha,
                                                  long bound = 6, std::uint64_t seed = 11) {
    int nv = comp.quiver.num_vertices();
    // enumerate the fiber r(beta) = alpha with entries bounded
    std::vector<DimVector> fiber;
    DimVector beta(nv, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (static_cast<long>(fiber.size()) > 20000) return;
        if (i == nv) {
            if (r_map(comp, beta) == alpha) fiber.push_back(beta);
            return;
        }
        for (long x = 0; x <= bound; ++x) {
            beta[i] = x;
            self(self, i + 1);
        }
        beta[i] = 0;
    };
    rec(rec, 0);
    bool finite = is_finite_type(comp.quiver);
    bool tame = !finite && is_tame_type(comp.quiver);
    Rng rng(seed);
    for (const DimVector& b : fiber) {
        long total = 0;
        for (long x : b) total += x;
        if (total == 0) continue;
        if (finite) {
            if (tits_form(comp.quiver, b) == 1) return GRootWitness{b, false};
        } else if (tame) {
            long t = tits_form(comp.quiver, b);
            if (t == 1 || t == 0) return GRootWitness{b, false};
        } else {
            auto q = std::make_shared<const Quiver>(comp.quiver);
            Representation m = random_rep(q, b, rng.next_u64(), 5);
            auto summands = decompose_indecomposables(m, rng.next_u64());
            if (summands.size() == 1 && summands[0].multiplicity == 1)
                return GRootWitness{b, true};
        }
    }
    return std::nullopt;
}

}  // namespace qsmash
