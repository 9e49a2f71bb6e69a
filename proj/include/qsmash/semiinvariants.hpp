#pragma once

#include <optional>
#include <vector>

#include "qsmash/functors.hpp"
#include "qsmash/quiver.hpp"

namespace qsmash {

using Weight = std::vector<long>;

// sigma_beta^vee = -<-, beta>: the weight of c_N for N of dimension beta.
inline Weight weight_of(const Quiver& q, const DimVector& beta) {
    Weight w(q.num_vertices(), 0);
    for (int v = 0; v < q.num_vertices(); ++v) {
        DimVector ev(q.num_vertices(), 0);
        ev[v] = 1;
        w[v] = -euler_form(q, ev, beta);
    }
    return w;
}

// sigma_alpha = <alpha, ->: the weight of c^M for M of dimension alpha.
inline Weight coweight_of(const Quiver& q, const DimVector& alpha) {
    Weight w(q.num_vertices(), 0);
    for (int v = 0; v < q.num_vertices(); ++v) {
        DimVector ev(q.num_vertices(), 0);
        ev[v] = 1;
        w[v] = euler_form(q, alpha, ev);
    }
    return w;
}

// Schofield's c(M,N) = det of the Hom pairing matrix assembled from the
// canonical projective presentation of M; defined when <dim M, dim N> = 0,
// and the fixed summand ordering pins the sign.
inline Rat schofield_c(const Representation& m, const Representation& n) {
    if (euler_form(m.q(), m.dims, n.dims) != 0)
        throw std::invalid_argument("schofield_c: Euler pairing does not vanish");
    ProjectivePresentation p = canonical_resolution(m);
    RatMatrix phi = presentation_hom_matrix(p, n);
    if (phi.rows() != phi.cols()) throw std::logic_error("schofield_c: phi not square");
    return det(phi);
}

// Base change by invertible vertex matrices: (g.M)(a) = g_ta M(a) g_ha^{-1}.
inline Representation gl_alpha_act(const std::vector<RatMatrix>& g, const Representation& m) {
    std::vector<RatMatrix> ginv;
    for (const RatMatrix& gv : g) {
        if (gv.rows() == 0) {
            ginv.push_back(gv);
            continue;
        }
        auto inv = solve_left(gv, RatMatrix::identity(gv.rows()));
        if (!inv) throw std::invalid_argument("gl_alpha_act: singular vertex matrix");
        ginv.push_back(*inv);
    }
    Representation out = m;
    for (int ai = 0; ai < m.q().num_arrows(); ++ai) {
        const Arrow& a = m.q().arrows[ai];
        out.matrices[ai] = g[a.tail] * m.matrices[ai] * ginv[a.head];
    }
    return out;
}

inline Rat weight_character(const Weight& w, const std::vector<RatMatrix>& g) {
    Rat c = 1;
    for (size_t v = 0; v < w.size(); ++v) {
        if (g[v].rows() == 0) continue;
        Rat d = det(g[v]);
        long e = w[v];
        Rat p = 1;
        for (long i = 0; i < (e < 0 ? -e : e); ++i) p *= d;
        if (e < 0) p = rat(1) / p;
        c *= p;
    }
    return c;
}

struct TransformationReport {
    bool gl_law_ok = true;
    bool g_direction_ok = true;
    int trials_run = 0;
    std::vector<Rat> g_ratios;  // character values observed per group sample
};

// Exact transformation law: c_N(g.M) = sigma(g) c_N(M) for sampled M and g,
// plus the testable form of G-semi-invariance: the ratio c_N(g_W.M)/c_N(M)
// does not depend on M.
inline TransformationReport transformation_check(const Representation& n, const DimVector& alpha,
                                                 int trials, std::uint64_t seed,
                                                 const GroupDatum* datum = nullptr,
                                                 int group_samples = 3) {
    const Quiver& q = n.q();
    if (euler_form(q, alpha, n.dims) != 0)
        throw std::invalid_argument("transformation_check: Euler pairing does not vanish");
    Weight sigma = weight_of(q, n.dims);
    TransformationReport rep;
    Rng rng(seed);
    auto qp = n.quiver;
    for (int t = 0; t < trials; ++t) {
        Representation m = random_rep(qp, alpha, rng.next_u64(), 5);
        std::vector<RatMatrix> g;
        for (int v = 0; v < q.num_vertices(); ++v)
            g.push_back(alpha[v] > 0 ? random_invertible(rng, static_cast<int>(alpha[v]), 3)
                                     : RatMatrix(0, 0));
        Rat lhs = schofield_c(gl_alpha_act(g, m), n);
        Rat rhs = weight_character(sigma, g) * schofield_c(m, n);
        ++rep.trials_run;
        if (lhs != rhs) rep.gl_law_ok = false;
    }
    if (datum) {
        for (int s = 0; s < group_samples; ++s) {
            // sample a group element
            std::optional<Rat> ratio;
            bool ok = true;
            for (int t = 0; t < trials; ++t) {
                Representation m = random_rep(qp, alpha, rng.next_u64(), 5);
                Rat denom = schofield_c(m, n);
                if (denom == 0) continue;  // resample
                Representation gm;
                if (std::holds_alternative<GlDatum>(*datum)) {
                    const GlDatum& gl = std::get<GlDatum>(*datum);
                    Rng gr(seed + 1000 * s + 17);
                    RatMatrix gw = random_invertible(gr, gl.n, 3);
                    gm = group_act_rep_gl(gl, gw, m);
                } else if (std::holds_alternative<FiniteDatum>(*datum)) {
                    const FiniteAction& act = std::get<FiniteDatum>(*datum).action;
                    auto group = group_closure(act, q.num_vertices(), q.num_arrows());
                    gm = group_act_rep_finite(group[(s + 1) % group.size()], m);
                } else {
                    throw std::invalid_argument("transformation_check: unsupported datum");
                }
                Rat r = schofield_c(gm, n) / denom;
                if (!ratio)
                    ratio = r;
                else if (*ratio != r)
                    ok = false;
            }
            if (!ratio) ok = false;
            if (ratio) rep.g_ratios.push_back(*ratio);
            if (!ok) rep.g_direction_ok = false;
        }
    }
    return rep;
}

// Rank of the evaluation matrix of the generator family at seeded random
// points; an exact lower bound for the span dimension, an exact value with
// high confidence (a nonzero polynomial would have to vanish at all points).
inline long span_dim(const std::vector<Representation>& generators, const DimVector& alpha,
                     int eval_points, std::uint64_t seed) {
    if (generators.empty()) return 0;
    auto qp = generators[0].quiver;
    RatMatrix eval(static_cast<int>(generators.size()), eval_points);
    Rng rng(seed);
    for (int s = 0; s < eval_points; ++s) {
        Representation m = random_rep(qp, alpha, rng.next_u64(), 6);
        for (size_t t = 0; t < generators.size(); ++t)
            eval(static_cast<int>(t), s) = schofield_c(m, generators[t]);
    }
    return rank(eval);
}

struct AdjunctionReport {
    bool constant = true;
    bool equals_one = true;
    std::vector<Rat> ratios;
    int degenerate = 0;
};

// c(M, R_c(N)) against det of the blown-up presentation evaluated at N
// (that determinant is c(T_c(M), N) since the blow-up is a projective
// resolution of T_c(M)).
inline Rat tc_side_determinant(const LiftedFunctor& lf, const Representation& m,
                               const Representation& n) {
    ProjectivePresentation blown = tc_on_projectives(lf, canonical_resolution(m));
    RatMatrix phi = presentation_hom_matrix(blown, n);
    if (phi.rows() != phi.cols())
        throw std::invalid_argument("tc_side_determinant: pairing does not vanish");
    return det(phi);
}

inline AdjunctionReport adjunction_check(const LiftedFunctor& lf, const Representation& m,
                                         int n_samples, const DimVector& beta,
                                         std::uint64_t seed) {
    AdjunctionReport rep;
    auto qc = std::make_shared<const Quiver>(lf.comp.quiver);
    Rng rng(seed);
    int got = 0;
    int budget = 4 * n_samples;
    while (got < n_samples && budget-- > 0) {
        Representation n = random_rep(qc, beta, rng.next_u64(), 5);
        Rat lhs = schofield_c(m, rc_apply(lf, n));
        Rat rhs = tc_side_determinant(lf, m, n);
        if (lhs == 0 && rhs == 0) {
            ++rep.degenerate;
            continue;
        }
        if (rhs == 0) {
            rep.constant = false;
            break;
        }
        Rat ratio = lhs / rhs;
        rep.ratios.push_back(ratio);
        if (ratio != 1) rep.equals_one = false;
        ++got;
    }
    for (size_t i = 1; i < rep.ratios.size(); ++i)
        if (rep.ratios[i] != rep.ratios[0]) rep.constant = false;
    return rep;
}

struct ReciprocityReport {
    long left = 0;
    long right = 0;
};

// dim SI_alpha^{sigma_{R_c(beta)}^vee}(Q) vs dim SI_{R_c(beta)}^{sigma_alpha}(Q):
// the left span is generated by c_{R_c(N)} evaluated at random M of dim
// alpha; the right span by the restrictions of c^M to the image of R_c,
// evaluated at R_c of random N.
inline ReciprocityReport restricted_span_dim(const LiftedFunctor& lf, const DimVector& alpha,
                                             const DimVector& beta, int generators,
                                             int points, std::uint64_t seed) {
    ReciprocityReport rep;
    auto qb = lf.comp.base;
    auto qc = std::make_shared<const Quiver>(lf.comp.quiver);
    Rng rng(seed);
    {
        std::vector<Representation> gens;
        for (int t = 0; t < generators; ++t)
            gens.push_back(rc_apply(lf, random_rep(qc, beta, rng.next_u64(), 5)));
        rep.left = span_dim(gens, alpha, points, rng.next_u64());
    }
    {
        RatMatrix eval(generators, points);
        std::vector<Representation> ms;
        for (int t = 0; t < generators; ++t) ms.push_back(random_rep(qb, alpha, rng.next_u64(), 5));
        for (int s = 0; s < points; ++s) {
            Representation n = random_rep(qc, beta, rng.next_u64(), 5);
            Representation rcn = rc_apply(lf, n);
            for (int t = 0; t < generators; ++t) eval(t, s) = schofield_c(ms[t], rcn);
        }
        rep.right = rank(eval);
    }
    return rep;
}

}  // namespace qsmash
