#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qsmash/qg.hpp"
#include "qsmash/quiver.hpp"
#include "qsmash/schur.hpp"
#include "qsmash/semisimple.hpp"
#include "qsmash/symmetric_group.hpp"

namespace qsmash {

// Rational combination of component arrows (the symbols B_k).
struct SymbolicEntry {
    std::map<int, Rat> terms;  // component arrow index -> coefficient

    bool is_zero() const { return terms.empty(); }
    void add(int arrow, const Rat& c) {
        if (c == 0) return;
        Rat& slot = terms[arrow];
        slot += c;
        if (slot == 0) terms.erase(arrow);
    }
};

// Copies of component vertices sitting over one base vertex: the block row
// and column layout of all lifted matrices.
struct CopyLayout {
    std::vector<std::pair<int, int>> copies;  // (component vertex, copy index)
    std::vector<long> copy_dim;               // dim of N at that component vertex
};

// The lifted functor data: for each base arrow, a block matrix of arrow
// symbols; substituting representation matrices for the symbols realizes
// R_c, and the same tables blow up projective presentations for T_c.
struct LiftedFunctor {
    QGQuiver comp;
    std::vector<std::vector<std::vector<SymbolicEntry>>> tables;  // [base arrow][row][col]
    std::vector<CopyLayout> tail_layout;  // per base arrow
    std::vector<CopyLayout> head_layout;
};

namespace detail {

inline std::vector<std::pair<int, int>> copies_at(const QGQuiver& comp, int base_vertex) {
    int rep = comp.finite_case ? comp.orbit_rep[base_vertex] : base_vertex;
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < comp.labels.size(); ++i)
        if (comp.labels[i].base_vertex == rep)
            for (long k = 0; k < comp.label_dim[i]; ++k)
                out.push_back({static_cast<int>(i), static_cast<int>(k)});
    return out;
}

// ---------- finite (skew group algebra) engine ----------

struct FiniteCtx {
    std::vector<GroupElement> group;
    OrbitData orbits;
    std::map<std::vector<int>, int> index;      // permutation -> element index
    std::vector<std::vector<int>> mult;         // multiplication table g*h
    std::vector<int> inverse;

    int idx(const Permutation& p) const { return index.at(p.img); }
};

inline FiniteCtx make_finite_ctx(const Quiver& q, const FiniteAction& act) {
    FiniteCtx ctx;
    ctx.group = group_closure(act, q.num_vertices(), q.num_arrows());
    ctx.orbits = orbits_and_stabilizers(ctx.group, q.num_vertices());
    for (size_t i = 0; i < ctx.group.size(); ++i) ctx.index[ctx.group[i].perm.img] = static_cast<int>(i);
    int n = static_cast<int>(ctx.group.size());
    ctx.mult.assign(n, std::vector<int>(n));
    ctx.inverse.assign(n, 0);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            ctx.mult[g][h] = ctx.idx(ctx.group[g].perm * ctx.group[h].perm);
        ctx.inverse[g] = ctx.idx(ctx.group[g].perm.inverse());
    }
    return ctx;
}

// group algebra element as coefficients over element indices
using GAlg = std::map<int, Rat>;

// degree-one part of the skew algebra: coefficients over (arrow, element)
using Deg1 = std::map<std::pair<int, int>, Rat>;

// (e_u (x) x) * y for y in the degree-one part:
// (e_u g)(a h) = e_u (g.a) (x) gh, keeping arrows with tail u.
inline Deg1 skew_left_mul(const FiniteCtx& ctx, const Quiver& q, int u, const GAlg& x,
                          const Deg1& y) {
    Deg1 out;
    for (auto& [g, c] : x)
        for (auto& [ah, d] : y) {
            auto [a, h] = ah;
            const RatMatrix& act = ctx.group[g].arrow_matrix;
            int gh = ctx.mult[g][h];
            for (int b = 0; b < q.num_arrows(); ++b) {
                if (act(b, a) == 0) continue;
                if (q.arrows[b].tail != u) continue;
                Rat& slot = out[{b, gh}];
                slot += c * d * act(b, a);
                if (slot == 0) out.erase({b, gh});
            }
        }
    return out;
}

// y * (e_v (x) x): (a h)(e_v g) = [head a = h(v)] a (x) hg.
inline Deg1 skew_right_mul(const FiniteCtx& ctx, const Quiver& q, const Deg1& y, int v,
                           const GAlg& x) {
    Deg1 out;
    for (auto& [ah, d] : y) {
        auto [a, h] = ah;
        if (q.arrows[a].head != ctx.group[h].vertex_map[v]) continue;
        for (auto& [g, c] : x) {
            int hg = ctx.mult[h][g];
            Rat& slot = out[{a, hg}];
            slot += c * d;
            if (slot == 0) out.erase({a, hg});
        }
    }
    return out;
}

inline std::vector<Rat> deg1_coords(const Deg1& y, const Quiver& q, int ngroup) {
    std::vector<Rat> v(static_cast<size_t>(q.num_arrows()) * ngroup);
    for (auto& [ah, c] : y) v[static_cast<size_t>(ah.first) * ngroup + ah.second] = c;
    return v;
}

// Matrix units of k[G_u] for the stabilizer of the representative u,
// transported from the abstract symmetric group on its moved letters.
inline std::map<Partition, std::vector<std::vector<GAlg>>> stabilizer_units(const FiniteCtx& ctx,
                                                                            int u) {
    std::map<Partition, std::vector<std::vector<GAlg>>> out;
    const std::vector<int>& letters = ctx.orbits.moved[u];
    int m = static_cast<int>(letters.size());
    int ambient_letters = ctx.group.empty() ? 1 : ctx.group[0].perm.degree();
    auto to_index = [&](const Permutation& abstract) {
        Permutation big = Permutation::identity(ambient_letters);
        for (int i = 0; i < m; ++i) big.img[letters[i]] = letters[abstract(i)];
        return ctx.idx(big);
    };
    if (m <= 1) {
        GAlg one{{ctx.idx(Permutation::identity(ambient_letters)), rat(1)}};
        out[Partition{1}] = {{one}};
        return out;
    }
    for (const Partition& rho : partitions_of(m)) {
        auto units = symmetric_group_matrix_units(rho);
        std::vector<std::vector<GAlg>> converted(units.size(),
                                                 std::vector<GAlg>(units.size()));
        for (size_t i = 0; i < units.size(); ++i)
            for (size_t j = 0; j < units.size(); ++j) {
                GAlg g;
                for (auto& [perm, c] : units[i][j].terms) g[to_index(Permutation{perm})] = c;
                converted[i][j] = g;
            }
        out[rho] = converted;
    }
    return out;
}

// ---------- GL (truncated smash product) engine ----------

struct GlArrowModule {
    std::vector<int> arrow_ids;                 // arrows of the base pair, in order
    int degree = 0;
    std::map<Biword, RatMatrix> pi;             // action of each xi basis element on R
};

inline GlArrowModule make_gl_arrow_module(const Quiver& q, const GlDatum& datum, int u, int v) {
    GlArrowModule mod;
    for (int ai = 0; ai < q.num_arrows(); ++ai)
        if (q.arrows[ai].tail == u && q.arrows[ai].head == v) mod.arrow_ids.push_back(ai);
    auto it = datum.arrow_modules.find({u, v});
    if (it == datum.arrow_modules.end())
        throw std::invalid_argument("make_gl_arrow_module: no module for this pair");
    mod.degree = partition_size(it->second.front());
    int r = static_cast<int>(mod.arrow_ids.size());
    std::vector<GlIrrep> parts;
    for (const Partition& mu : it->second) parts.push_back(gl_irrep_realization(mu, datum.n));
    for (const Biword& b : xi_basis(datum.n, mod.degree)) {
        XiElement x(datum.n, mod.degree);
        x.coeffs[b] = 1;
        RatMatrix op = xi_to_operator(x);
        RatMatrix act(r, r);
        int off = 0;
        for (const GlIrrep& p : parts) {
            act.set_block(off, off, p.act(op));
            off += p.dim();
        }
        if (!act.is_zero()) mod.pi[b] = act;
    }
    return mod;
}

// Units e^{kl} of the rho-block of S(n, |rho|): the tabulated families for
// degree <= 3, the general construction beyond.
inline std::vector<std::vector<RatMatrix>> gl_block_units(int n, const Partition& rho) {
    int d = partition_size(rho);
    if (d == 0) return {{RatMatrix::identity(1)}};
    if (d <= 3) {
        std::vector<RatMatrix> diag;
        for (auto& e : schur_idempotents(n, d))
            if (e.label == rho) diag.push_back(xi_to_operator(e.xi));
        if (diag.empty()) throw std::logic_error("gl_block_units: label missing from table");
        MatrixAlgebra alg{static_cast<int>(power(n, d)), {}};
        for (const Biword& b : xi_basis(n, d)) {
            XiElement x(n, d);
            x.coeffs[b] = 1;
            alg.basis.push_back(xi_to_operator(x));
        }
        auto units = matrix_units_from(diag, alg);
        int bd = static_cast<int>(diag.size());
        std::vector<std::vector<RatMatrix>> out(bd, std::vector<RatMatrix>(bd));
        for (int i = 0; i < bd; ++i)
            for (int j = 0; j < bd; ++j) out[i][j] = units.at({i + 1, j + 1});
        return out;
    }
    for (auto& blk : schur_idempotents_general(n, d))
        if (blk.label == rho) return blk.units;
    throw std::logic_error("gl_block_units: label not found");
}

}  // namespace detail

// Explicit basis of Hom_G(V_rho, R (x) V_sigma) for the GL case, computed as
// the joint kernel of equivariance conditions over a generating set whose
// Zariski closure is the whole group (elementary transvections, a diagonal
// with distinct primes, and a scalar).
inline std::vector<RatMatrix> intertwiner_basis_gl(const GlDatum& datum,
                                                   const std::vector<Partition>& module,
                                                   const Partition& rho, const Partition& sigma) {
    int n = datum.n;
    GlIrrep vr = gl_irrep_realization(rho, n);
    GlIrrep vs = gl_irrep_realization(sigma, n);
    std::vector<GlIrrep> parts;
    for (const Partition& mu : module) parts.push_back(gl_irrep_realization(mu, n));
    int r = 0;
    for (auto& p : parts) r += p.dim();

    std::vector<RatMatrix> gens;
    for (int p = 0; p < n; ++p)
        for (int q2 = 0; q2 < n; ++q2) {
            if (p == q2) continue;
            RatMatrix e = RatMatrix::identity(n);
            e(p, q2) = 1;
            gens.push_back(e);
        }
    RatMatrix diag(n, n);
    long primes[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < n; ++i) diag(i, i) = rat(primes[i]);
    gens.push_back(diag);
    gens.push_back(RatMatrix::identity(n).scaled(rat(2)));

    int rows = vs.dim() * r;  // target dimension
    int cols = vr.dim();
    // unknown F: rows x cols (column convention target <- source)
    RatMatrix sys(rows * cols, static_cast<int>(gens.size()) * rows * cols);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        RatMatrix ar = vr.act_group(gens[gi]);
        RatMatrix amod(r, r);
        int off = 0;
        for (auto& p : parts) {
            amod.set_block(off, off, p.act_group(gens[gi]));
            off += p.dim();
        }
        RatMatrix target = kronecker_product(amod, vs.act_group(gens[gi]));
        // condition: target * F - F * ar = 0
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                for (int s = 0; s < rows; ++s)
                    for (int t = 0; t < cols; ++t) {
                        Rat c = 0;
                        if (j == t) c += target(s, i);
                        if (i == s) c -= ar(j, t);
                        if (c != 0)
                            sys(i * cols + j,
                                static_cast<int>(gi) * rows * cols + s * cols + t) = c;
                    }
    }
    RatMatrix ker = kernel_basis(sys);
    std::vector<RatMatrix> out;
    for (int kk = 0; kk < ker.rows(); ++kk) {
        RatMatrix f(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) f(i, j) = ker(kk, i * cols + j);
        out.push_back(f);
    }
    return out;
}

// Build the coefficient tables c_k^{ij} of the lifted functors for a
// component, by exact multiplication e^{1i} a e^{j1} in the skew group
// algebra (finite case) or the degree-truncated smash product (GL case).
inline LiftedFunctor build_idempotent_data(const QGQuiver& comp, const GroupDatum& datum) {
    LiftedFunctor lf;
    lf.comp = comp;
    const Quiver& q = *comp.base;
    int na = q.num_arrows();
    lf.tables.resize(na);
    lf.tail_layout.resize(na);
    lf.head_layout.resize(na);

    // layouts
    for (int ai = 0; ai < na; ++ai) {
        for (auto& c : detail::copies_at(comp, q.arrows[ai].tail)) {
            lf.tail_layout[ai].copies.push_back(c);
            lf.tail_layout[ai].copy_dim.push_back(0);
        }
        for (auto& c : detail::copies_at(comp, q.arrows[ai].head)) {
            lf.head_layout[ai].copies.push_back(c);
            lf.head_layout[ai].copy_dim.push_back(0);
        }
        lf.tables[ai].assign(lf.tail_layout[ai].copies.size(),
                             std::vector<SymbolicEntry>(lf.head_layout[ai].copies.size()));
    }

    // bundles of component arrows
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int bi = 0; bi < comp.quiver.num_arrows(); ++bi)
        bundles[{comp.quiver.arrows[bi].tail, comp.quiver.arrows[bi].head}].push_back(bi);

    if (std::holds_alternative<FiniteDatum>(datum)) {
        const FiniteAction& act = std::get<FiniteDatum>(datum).action;
        detail::FiniteCtx ctx = detail::make_finite_ctx(q, act);
        int ng = static_cast<int>(ctx.group.size());
        // stabilizer units per representative present in the component
        std::map<int, std::map<Partition, std::vector<std::vector<detail::GAlg>>>> units;
        for (auto& v : comp.labels)
            if (!units.count(v.base_vertex))
                units[v.base_vertex] = detail::stabilizer_units(ctx, v.base_vertex);

        for (auto& [ij, arrows] : bundles) {
            int i = ij.first, j = ij.second;
            const QGVertex& vi = comp.labels[i];
            const QGVertex& vj = comp.labels[j];
            auto& units_i = units[vi.base_vertex].at(vi.label);
            auto& units_j = units[vj.base_vertex].at(vj.label);
            // corner basis over all (arrow, group element) generators
            SpanBuilder corner(q.num_arrows() * ng);
            const detail::GAlg& e11i = units_i[0][0];
            const detail::GAlg& e11j = units_j[0][0];
            for (int a0 = 0; a0 < na; ++a0)
                for (int g0 = 0; g0 < ng; ++g0) {
                    detail::Deg1 seed{{{a0, g0}, rat(1)}};
                    detail::Deg1 x = detail::skew_left_mul(ctx, q, vi.base_vertex, e11i, seed);
                    x = detail::skew_right_mul(ctx, q, x, vj.base_vertex, e11j);
                    if (!x.empty()) corner.add(detail::deg1_coords(x, q, ng));
                }
            if (corner.size() != static_cast<int>(arrows.size()))
                throw std::logic_error(
                    "build_idempotent_data: corner dimension does not match the arrow count");
            // table entries per base arrow w -> w' lying over (rep_i, rep_j)
            for (int ai = 0; ai < na; ++ai) {
                int w = q.arrows[ai].tail, w2 = q.arrows[ai].head;
                if (ctx.orbits.rep_of[w] != vi.base_vertex) continue;
                if (ctx.orbits.rep_of[w2] != vj.base_vertex) continue;
                int gw = ctx.orbits.witness[w], gw2 = ctx.orbits.witness[w2];
                int gwi = ctx.inverse[gw];
                // twisted middle element: (g_w^{-1} . a) (x) g_w^{-1} g_{w'}
                detail::Deg1 middle;
                const RatMatrix& actm = ctx.group[gwi].arrow_matrix;
                int gmid = ctx.mult[gwi][gw2];
                for (int b = 0; b < na; ++b)
                    if (actm(b, ai) != 0) middle[{b, gmid}] = actm(b, ai);
                for (size_t k = 0; k < units_i.size(); ++k)
                    for (size_t l = 0; l < units_j.size(); ++l) {
                        detail::Deg1 x =
                            detail::skew_left_mul(ctx, q, vi.base_vertex, units_i[0][k], middle);
                        x = detail::skew_right_mul(ctx, q, x, vj.base_vertex, units_j[l][0]);
                        auto coords = corner.coordinates(detail::deg1_coords(x, q, ng));
                        if (!coords)
                            throw std::logic_error(
                                "build_idempotent_data: product left the corner space");
                        // locate the (i,k) row and (j,l) column in the layouts
                        int row = -1, col = -1;
                        for (size_t t = 0; t < lf.tail_layout[ai].copies.size(); ++t)
                            if (lf.tail_layout[ai].copies[t] ==
                                std::make_pair(i, static_cast<int>(k)))
                                row = static_cast<int>(t);
                        for (size_t t = 0; t < lf.head_layout[ai].copies.size(); ++t)
                            if (lf.head_layout[ai].copies[t] ==
                                std::make_pair(j, static_cast<int>(l)))
                                col = static_cast<int>(t);
                        if (row < 0 || col < 0) throw std::logic_error("layout lookup failed");
                        for (size_t bb = 0; bb < arrows.size(); ++bb)
                            lf.tables[ai][row][col].add(arrows[bb], (*coords)[bb]);
                    }
            }
        }
        return lf;
    }

    if (std::holds_alternative<GlDatum>(datum)) {
        const GlDatum& gl = std::get<GlDatum>(datum);
        // block units per label present
        std::map<Partition, std::vector<std::vector<RatMatrix>>> units;
        for (auto& v : comp.labels)
            if (!units.count(v.label)) units[v.label] = detail::gl_block_units(gl.n, v.label);
        // arrow modules per base pair present
        std::map<std::pair<int, int>, detail::GlArrowModule> modules;
        for (auto& [ij, arrows] : bundles) {
            int u = comp.labels[ij.first].base_vertex, v = comp.labels[ij.second].base_vertex;
            if (!modules.count({u, v}))
                modules.insert({{u, v}, detail::make_gl_arrow_module(q, gl, u, v)});
        }

        for (auto& [ij, arrows] : bundles) {
            int i = ij.first, j = ij.second;
            const QGVertex& vi = comp.labels[i];
            const QGVertex& vj = comp.labels[j];
            const detail::GlArrowModule& mod =
                modules.at({vi.base_vertex, vj.base_vertex});
            int r = static_cast<int>(mod.arrow_ids.size());
            int dsig = partition_size(vj.label);
            long sdim = power(gl.n, dsig);
            auto& units_i = units.at(vi.label);
            auto& units_j = units.at(vj.label);
            auto flatten = [&](const std::vector<RatMatrix>& elem) {
                std::vector<Rat> v2;
                v2.reserve(static_cast<size_t>(r) * sdim * sdim);
                for (const RatMatrix& m : elem)
                    for (const Rat& x : m.flat()) v2.push_back(x);
                return v2;
            };
            // sliced(k, l', m) = sum_B pi(B)[l'][m] * slice(e^{1k}, B)
            auto sliced = [&](const RatMatrix& h, int lprime, int m) {
                RatMatrix acc(static_cast<int>(sdim), static_cast<int>(sdim));
                for (auto& [b, act] : mod.pi) {
                    if (act(lprime, m) == 0) continue;
                    acc += slice_operator(h, gl.n, partition_size(vi.label), b)
                               .scaled(act(lprime, m));
                }
                return acc;
            };
            // corner basis: e^{11} (a_m (x) f) e^{11} over m and the xi basis f
            SpanBuilder corner(static_cast<int>(r * sdim * sdim));
            const RatMatrix& e11i = units_i[0][0];
            const RatMatrix& e11j = units_j[0][0];
            std::vector<RatMatrix> sliced_e11(r * r, RatMatrix(static_cast<int>(sdim),
                                                               static_cast<int>(sdim)));
            for (int lp = 0; lp < r; ++lp)
                for (int m = 0; m < r; ++m) sliced_e11[lp * r + m] = sliced(e11i, lp, m);
            for (int m = 0; m < r; ++m)
                for (const Biword& b : xi_basis(gl.n, dsig)) {
                    XiElement f(gl.n, dsig);
                    f.coeffs[b] = 1;
                    RatMatrix fop = xi_to_operator(f) * e11j;
                    std::vector<RatMatrix> elem(r, RatMatrix(static_cast<int>(sdim),
                                                             static_cast<int>(sdim)));
                    bool nz = false;
                    for (int lp = 0; lp < r; ++lp) {
                        elem[lp] = sliced_e11[lp * r + m] * fop;
                        if (!elem[lp].is_zero()) nz = true;
                    }
                    if (nz) corner.add(flatten(elem));
                }
            if (corner.size() != static_cast<int>(arrows.size()))
                throw std::logic_error(
                    "build_idempotent_data: corner dimension does not match the arrow count");
            // table entries (only one base arrow set: u -> v arrows themselves)
            for (size_t mi = 0; mi < mod.arrow_ids.size(); ++mi) {
                int ai = mod.arrow_ids[mi];
                for (size_t k = 0; k < units_i.size(); ++k) {
                    std::vector<RatMatrix> sl(r, RatMatrix(static_cast<int>(sdim),
                                                           static_cast<int>(sdim)));
                    for (int lp = 0; lp < r; ++lp)
                        sl[lp] = sliced(units_i[0][k], lp, static_cast<int>(mi));
                    for (size_t l = 0; l < units_j.size(); ++l) {
                        std::vector<RatMatrix> elem(r, RatMatrix(static_cast<int>(sdim),
                                                                 static_cast<int>(sdim)));
                        for (int lp = 0; lp < r; ++lp) elem[lp] = sl[lp] * units_j[l][0];
                        auto coords = corner.coordinates(flatten(elem));
                        if (!coords)
                            throw std::logic_error(
                                "build_idempotent_data: product left the corner space");
                        int row = -1, col = -1;
                        for (size_t t = 0; t < lf.tail_layout[ai].copies.size(); ++t)
                            if (lf.tail_layout[ai].copies[t] ==
                                std::make_pair(i, static_cast<int>(k)))
                                row = static_cast<int>(t);
                        for (size_t t = 0; t < lf.head_layout[ai].copies.size(); ++t)
                            if (lf.head_layout[ai].copies[t] ==
                                std::make_pair(j, static_cast<int>(l)))
                                col = static_cast<int>(t);
                        if (row < 0 || col < 0) throw std::logic_error("layout lookup failed");
                        for (size_t bb = 0; bb < arrows.size(); ++bb)
                            lf.tables[ai][row][col].add(arrows[bb], (*coords)[bb]);
                    }
                }
            }
        }
        return lf;
    }

    throw std::invalid_argument("build_idempotent_data: torus data has no lifted functor here");
}

// The symbolic matrices of R_c: per base arrow, blocks over arrow symbols.
inline const std::vector<std::vector<std::vector<SymbolicEntry>>>& rc_symbolic(
    const LiftedFunctor& lf) {
    return lf.tables;
}

// Substitute the matrices of a component representation into the tables.
inline Representation rc_apply(const LiftedFunctor& lf, const Representation& n) {
    if (n.quiver->vertices != lf.comp.quiver.vertices)
        throw std::invalid_argument("rc_apply: representation not on the component");
    n.check_shapes();
    Representation m;
    m.quiver = lf.comp.base;
    m.dims = r_map(lf.comp, n.dims);
    const Quiver& q = *lf.comp.base;
    for (int ai = 0; ai < q.num_arrows(); ++ai) {
        const CopyLayout& tl = lf.tail_layout[ai];
        const CopyLayout& hl = lf.head_layout[ai];
        std::vector<int> roff(tl.copies.size() + 1, 0), coff(hl.copies.size() + 1, 0);
        for (size_t t = 0; t < tl.copies.size(); ++t)
            roff[t + 1] = roff[t] + static_cast<int>(n.dims[tl.copies[t].first]);
        for (size_t t = 0; t < hl.copies.size(); ++t)
            coff[t + 1] = coff[t] + static_cast<int>(n.dims[hl.copies[t].first]);
        RatMatrix ma(roff.back(), coff.back());
        for (size_t rr = 0; rr < tl.copies.size(); ++rr)
            for (size_t cc = 0; cc < hl.copies.size(); ++cc)
                for (auto& [b, coef] : lf.tables[ai][rr][cc].terms) {
                    RatMatrix blk = n.matrices[b].scaled(coef);
                    // accumulate
                    for (int x = 0; x < blk.rows(); ++x)
                        for (int y = 0; y < blk.cols(); ++y)
                            ma(roff[rr] + x, coff[cc] + y) += blk(x, y);
                }
        m.matrices.push_back(ma);
    }
    return m;
}

// Blow up a degree-<=1 presentation over the base quiver to one over the
// component: P_w goes to the sum of its label copies, trivial paths to
// diagonal blocks, arrows through the coefficient tables.
inline ProjectivePresentation tc_on_projectives(const LiftedFunctor& lf,
                                                const ProjectivePresentation& pres) {
    ProjectivePresentation out;
    out.quiver = std::make_shared<const Quiver>(lf.comp.quiver);
    // expanded summands
    std::vector<std::vector<std::pair<int, int>>> row_copies, col_copies;
    std::vector<int> row_base(pres.row_vertices.size()), col_base(pres.col_vertices.size());
    for (size_t r = 0; r < pres.row_vertices.size(); ++r) {
        auto copies = detail::copies_at(lf.comp, pres.row_vertices[r]);
        row_base[r] = static_cast<int>(out.row_vertices.size());
        for (auto& c : copies) out.row_vertices.push_back(c.first);
        row_copies.push_back(copies);
    }
    for (size_t c = 0; c < pres.col_vertices.size(); ++c) {
        auto copies = detail::copies_at(lf.comp, pres.col_vertices[c]);
        col_base[c] = static_cast<int>(out.col_vertices.size());
        for (auto& cp : copies) out.col_vertices.push_back(cp.first);
        col_copies.push_back(copies);
    }
    out.entries.assign(out.row_vertices.size(),
                       std::vector<ArrowLin>(out.col_vertices.size()));
    for (size_t r = 0; r < pres.row_vertices.size(); ++r)
        for (size_t c = 0; c < pres.col_vertices.size(); ++c) {
            const ArrowLin& e = pres.entries[r][c];
            if (e.is_zero()) continue;
            if (e.c0 != 0) {
                // identity pattern on matching copies
                for (size_t x = 0; x < row_copies[r].size(); ++x)
                    for (size_t y = 0; y < col_copies[c].size(); ++y)
                        if (row_copies[r][x] == col_copies[c][y])
                            out.entries[row_base[r] + x][col_base[c] + y].c0 += e.c0;
            }
            for (auto& [ai, coef] : e.arrows) {
                // base arrow ai: tail = col vertex, head = row vertex; tables
                // are indexed (tail copy, head copy)
                const CopyLayout& tl = lf.tail_layout[ai];
                const CopyLayout& hl = lf.head_layout[ai];
                for (size_t kk = 0; kk < tl.copies.size(); ++kk)
                    for (size_t ll = 0; ll < hl.copies.size(); ++ll) {
                        const SymbolicEntry& se = lf.tables[ai][kk][ll];
                        for (auto& [b, cf] : se.terms) {
                            // row: head copy (P_1 side), col: tail copy
                            size_t x = 0, y = 0;
                            bool fx = false, fy = false;
                            for (size_t t = 0; t < row_copies[r].size(); ++t)
                                if (row_copies[r][t] == hl.copies[ll]) { x = t; fx = true; }
                            for (size_t t = 0; t < col_copies[c].size(); ++t)
                                if (col_copies[c][t] == tl.copies[kk]) { y = t; fy = true; }
                            if (!fx || !fy) throw std::logic_error("tc_on_projectives: layout");
                            out.entries[row_base[r] + x][col_base[c] + y].arrows[b] += cf * coef;
                        }
                    }
            }
        }
    // prune explicit zeros
    for (auto& row : out.entries)
        for (auto& e : row)
            for (auto it = e.arrows.begin(); it != e.arrows.end();)
                it = (it->second == 0) ? e.arrows.erase(it) : std::next(it);
    return out;
}

// T_c on representations: blow up the canonical resolution and take the
// cokernel over the component.
inline Representation tc_apply(const LiftedFunctor& lf, const Representation& m) {
    ProjectivePresentation pres = canonical_resolution(m);
    ProjectivePresentation blown = tc_on_projectives(lf, pres);
    return presentation_cokernel(blown);
}

}  // namespace qsmash
