#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qsmash/matrix.hpp"
#include "qsmash/partitions.hpp"
#include "qsmash/symmetric_group.hpp"

namespace qsmash {

// Words of length d over 1..n indexed big-endian: the first letter is the
// most significant digit.
inline long word_index(const std::vector<int>& w, int n) {
    long idx = 0;
    for (int c : w) idx = idx * n + (c - 1);
    return idx;
}

inline std::vector<int> index_word(long idx, int n, int d) {
    std::vector<int> w(d);
    for (int k = d - 1; k >= 0; --k) {
        w[k] = static_cast<int>(idx % n) + 1;
        idx /= n;
    }
    return w;
}

inline long power(int n, int d) {
    long p = 1;
    for (int i = 0; i < d; ++i) p *= n;
    return p;
}

// Generalized permutation: d pairs (i_k, j_k), entries in 1..n, stored in
// non-decreasing lexicographic order.
using Biword = std::vector<std::pair<int, int>>;

inline Biword make_biword(const std::vector<int>& top, const std::vector<int>& bottom) {
    if (top.size() != bottom.size()) throw std::invalid_argument("make_biword: length mismatch");
    Biword b(top.size());
    for (size_t k = 0; k < top.size(); ++k) b[k] = {top[k], bottom[k]};
    std::sort(b.begin(), b.end());
    return b;
}

inline std::string biword_str(const Biword& b) {
    std::string top = "{", bot = "{";
    for (size_t k = 0; k < b.size(); ++k) {
        top += std::to_string(b[k].first);
        bot += std::to_string(b[k].second);
    }
    return "xi^" + top + "}_" + bot + "}";
}

// Element of the Schur algebra S(n,d) in the xi (dual standard monomial)
// basis. Multiplication is defined through the tensor-operator realization.
struct XiElement {
    int n = 0, d = 0;
    std::map<Biword, Rat> coeffs;

    XiElement() = default;
    XiElement(int n_, int d_) : n(n_), d(d_) {}

    XiElement& add(const std::vector<int>& top, const std::vector<int>& bottom, const Rat& c) {
        for (int x : top)
            if (x < 1 || x > n) throw std::invalid_argument("XiElement: letter out of range");
        for (int x : bottom)
            if (x < 1 || x > n) throw std::invalid_argument("XiElement: letter out of range");
        Biword b = make_biword(top, bottom);
        Rat& slot = coeffs[b];
        slot += c;
        if (slot == 0) coeffs.erase(b);
        return *this;
    }

    XiElement scaled(const Rat& c) const {
        XiElement r(n, d);
        if (c == 0) return r;
        for (auto& [b, x] : coeffs) r.coeffs[b] = x * c;
        return r;
    }
};

// All generalized permutations for S(n,d): multisets of size d out of the
// n^2 pairs, in lexicographic order.
inline std::vector<Biword> xi_basis(int n, int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pairs.push_back({i, j});
    std::vector<Biword> out;
    Biword cur;
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (left == 0) { out.push_back(cur); return; }
        for (size_t k = from; k < pairs.size(); ++k) {
            cur.push_back(pairs[k]);
            self(self, k, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

// Tensor operator on V^{(x)d} (column convention: columns are inputs).
// xi^{I}_{J} sends e_{w} to the sum of e_{w'} over words w' with
// pair multiset (w', w) equal to (I, J).
inline RatMatrix xi_to_operator(const XiElement& x) {
    long dim = power(x.n, x.d);
    RatMatrix op(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> perm(x.d);
    for (auto& [biword, c] : x.coeffs) {
        for (int k = 0; k < x.d; ++k) perm[k] = k;
        std::sort(perm.begin(), perm.end());
        // enumerate distinct orderings of the pair multiset
        std::vector<std::pair<int, int>> arr(biword);
        std::sort(arr.begin(), arr.end());
        do {
            std::vector<int> top(x.d), bottom(x.d);
            for (int k = 0; k < x.d; ++k) {
                top[k] = arr[k].first;
                bottom[k] = arr[k].second;
            }
            op(static_cast<int>(word_index(top, x.n)), static_cast<int>(word_index(bottom, x.n))) = c;
        } while (std::next_permutation(arr.begin(), arr.end()));
    }
    return op;
}

// Inverse of xi_to_operator; rejects operators outside the centralizer span
// (entries must agree on equal pair-multisets).
inline XiElement operator_to_xi(const RatMatrix& op, int n, int d) {
    XiElement x(n, d);
    long dim = power(n, d);
    if (op.rows() != dim || op.cols() != dim)
        throw std::invalid_argument("operator_to_xi: wrong shape");
    std::map<Biword, Rat> seen;
    for (long j = 0; j < dim; ++j) {
        std::vector<int> bottom = index_word(j, n, d);
        for (long i = 0; i < dim; ++i) {
            if (op(static_cast<int>(i), static_cast<int>(j)) == 0) continue;
            std::vector<int> top = index_word(i, n, d);
            Biword b = make_biword(top, bottom);
            auto it = seen.find(b);
            if (it == seen.end())
                seen[b] = op(static_cast<int>(i), static_cast<int>(j));
            else if (it->second != op(static_cast<int>(i), static_cast<int>(j)))
                throw std::invalid_argument("operator_to_xi: not in the Schur algebra");
        }
    }
    // check vanishing entries agree too: reconstruct and compare
    for (auto& [b, c] : seen) x.coeffs[b] = c;
    if (!(xi_to_operator(x) == op))
        throw std::invalid_argument("operator_to_xi: not in the Schur algebra");
    return x;
}

// Place permutation action of S_d on V^{(x)d}: e_w -> e_{w.w^{-1}-indexed}.
inline RatMatrix place_permutation(const Permutation& w, int n, int d) {
    long dim = power(n, d);
    RatMatrix op(static_cast<int>(dim), static_cast<int>(dim));
    for (long j = 0; j < dim; ++j) {
        std::vector<int> word = index_word(j, n, d);
        std::vector<int> moved(d);
        for (int k = 0; k < d; ++k) moved[w(k)] = word[k];
        op(static_cast<int>(word_index(moved, n)), static_cast<int>(j)) = 1;
    }
    return op;
}

inline RatMatrix schur_identity_operator(int n, int d) {
    return RatMatrix::identity(static_cast<int>(power(n, d)));
}

struct LabeledIdempotent {
    Partition label;
    XiElement xi;
};

// The complete idempotent tables of S(n,2) and S(n,3).
inline std::vector<LabeledIdempotent> schur_idempotents(int n, int d) {
    std::vector<LabeledIdempotent> out;
    Rat half = rat(1, 2), third = rat(1, 3), sixth = rat(1, 6);
    if (d == 2) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                XiElement e(n, 2);
                e.add({i, j}, {i, j}, half).add({j, i}, {i, j}, -half);
                out.push_back({{1, 1}, e});
            }
        for (int i = 1; i <= n; ++i) {
            XiElement e(n, 2);
            e.add({i, i}, {i, i}, 1);
            out.push_back({{2}, e});
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                XiElement e(n, 2);
                e.add({i, j}, {i, j}, half).add({j, i}, {i, j}, half);
                out.push_back({{2}, e});
            }
        return out;
    }
    if (d == 3) {
        auto perms3 = all_permutations(3);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    XiElement e(n, 3);
                    std::vector<int> base{i, j, k};
                    for (const Permutation& w : perms3) {
                        std::vector<int> moved{base[w(0)], base[w(1)], base[w(2)]};
                        e.add(base, moved, w.sign() > 0 ? sixth : -sixth);
                    }
                    out.push_back({{1, 1, 1}, e});
                }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                XiElement e1(n, 3);
                e1.add({i, i, j}, {i, i, j}, third * 2).add({i, j, i}, {i, i, j}, -third);
                out.push_back({{2, 1}, e1});
                XiElement e2(n, 3);
                e2.add({i, j, j}, {i, j, j}, third * 2).add({i, j, j}, {j, i, j}, -third);
                out.push_back({{2, 1}, e2});
            }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    // First term corrected to the identity substitution: as
                    // printed it would coincide with the third term and the
                    // element would not be idempotent.
                    XiElement e3(n, 3);
                    e3.add({i, j, k}, {i, j, k}, third)
                        .add({i, j, k}, {j, k, i}, -third)
                        .add({i, j, k}, {i, k, j}, third)
                        .add({i, j, k}, {j, i, k}, -third);
                    out.push_back({{2, 1}, e3});
                    XiElement e4(n, 3);
                    e4.add({i, j, k}, {i, j, k}, third)
                        .add({i, j, k}, {i, k, j}, -third)
                        .add({i, j, k}, {j, i, k}, third)
                        .add({i, j, k}, {k, i, j}, -third);
                    out.push_back({{2, 1}, e4});
                }
        for (int i = 1; i <= n; ++i) {
            XiElement e(n, 3);
            e.add({i, i, i}, {i, i, i}, 1);
            out.push_back({{3}, e});
        }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                XiElement e1(n, 3);
                e1.add({i, i, j}, {i, i, j}, third).add({i, j, i}, {i, i, j}, third);
                out.push_back({{3}, e1});
                XiElement e2(n, 3);
                e2.add({i, j, j}, {i, j, j}, third).add({i, j, j}, {j, i, j}, third);
                out.push_back({{3}, e2});
            }
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    XiElement e(n, 3);
                    std::vector<int> base{i, j, k};
                    for (const Permutation& w : perms3) {
                        std::vector<int> moved{base[w(0)], base[w(1)], base[w(2)]};
                        e.add(base, moved, sixth);
                    }
                    out.push_back({{3}, e});
                }
        return out;
    }
    if (d == 1) {
        for (int i = 1; i <= n; ++i) {
            XiElement e(n, 1);
            e.add({i}, {i}, 1);
            out.push_back({{1}, e});
        }
        return out;
    }
    throw std::invalid_argument("schur_idempotents: only d in {1,2,3} are tabulated");
}

// Isotypic central idempotent z_lambda of S(n,d), from the symmetric group
// character projection through the place permutation action.
inline RatMatrix schur_central_idempotent(const Partition& lambda, int n) {
    int d = partition_size(lambda);
    Rat norm = Rat(dim_symgroup_irrep(lambda)) / Rat(factorial(d));
    long dim = power(n, d);
    RatMatrix z(static_cast<int>(dim), static_cast<int>(dim));
    for (const Permutation& w : all_permutations(d)) {
        Rat c = norm * rat(symgroup_character(lambda, w.cycle_type()));
        if (c == 0) continue;
        z += place_permutation(w, n, d).scaled(c);
    }
    return z;
}

// Diagonal weight idempotent: projection onto the words of a given content.
inline RatMatrix weight_idempotent(const Partition& content, int n, int d) {
    std::vector<int> target(n + 1, 0);
    for (size_t i = 0; i < content.size(); ++i) target[i + 1] = content[i];
    long dim = power(n, d);
    RatMatrix p(static_cast<int>(dim), static_cast<int>(dim));
    for (long j = 0; j < dim; ++j) {
        std::vector<int> w = index_word(j, n, d);
        std::vector<int> cnt(n + 1, 0);
        for (int c : w) ++cnt[c];
        if (cnt == target) p(static_cast<int>(j), static_cast<int>(j)) = 1;
    }
    return p;
}

// Basis of the column space as an (ambient x r) matrix.
inline RatMatrix column_space(const RatMatrix& m) {
    return row_space_basis(m.transpose()).transpose();
}

// A with op * U = U * A for the column basis U; throws if the column space
// is not invariant.
inline RatMatrix restrict_to_columns(const RatMatrix& op, const RatMatrix& u) {
    RatMatrix lhs = (op * u).transpose();
    auto sol = solve_left(u.transpose(), lhs);
    if (!sol) throw std::invalid_argument("restrict_to_columns: subspace not invariant");
    return sol->transpose();
}

// dim of e S(n,d) e for an idempotent tensor operator e, computed as
// dim End_{S_d}(im e): the Schur algebra is the full centralizer, so corner
// dimensions are intertwiner dimensions of the image.
inline long schur_corner_dim(const RatMatrix& e, int n, int d) {
    RatMatrix u = column_space(e);
    int r = u.cols();
    if (r == 0) return 0;
    std::vector<RatMatrix> gens;
    if (d >= 2) gens.push_back(place_permutation(transposition(d, 0, 1), n, d));
    if (d >= 3) {
        std::vector<int> c(d);
        for (int i = 0; i < d; ++i) c[i] = i;
        gens.push_back(place_permutation(cycle(d, c), n, d));
    }
    std::vector<RatMatrix> rg;
    for (auto& g : gens) rg.push_back(restrict_to_columns(g, u));
    // {A : R_g A = A R_g for all generators}
    RatMatrix sys(r * r, static_cast<int>(rg.size()) * r * r);
    for (size_t g = 0; g < rg.size(); ++g)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                // d/dA[i][j] of (R A - A R)[s][t]
                for (int s = 0; s < r; ++s)
                    for (int t = 0; t < r; ++t) {
                        Rat c = 0;
                        if (j == t) c += rg[g](s, i);
                        if (i == s) c -= rg[g](j, t);
                        if (c != 0)
                            sys(i * r + j, static_cast<int>(g) * r * r + s * r + t) = c;
                    }
            }
    return kernel_basis(sys).rows();
}

struct SchurBlockUnits {
    Partition label;
    std::vector<std::vector<RatMatrix>> units;  // units[i][j] = e^{(i+1)(j+1)}
};

// Matrix units of one isotypic block of S(n,d), completed from a designated
// primitive idempotent by exact linear algebra in the left ideal S e.
inline SchurBlockUnits schur_block_units(const Partition& lambda, int n,
                                         const RatMatrix& seed_e11) {
    int d = partition_size(lambda);
    long dim2 = power(n, d);
    dim2 *= dim2;
    long block_dim = to_long(Rat(dim_gl_irrep(lambda, n)));
    int bd = static_cast<int>(block_dim);

    std::vector<Biword> basis = xi_basis(n, d);
    // Left ideal basis {e, y_2, ..., y_bd} with e*y = 0 for the later ones.
    std::vector<RatMatrix> xs{seed_e11};
    SpanBuilder span(static_cast<int>(dim2));
    span.add(seed_e11.flat());
    for (const Biword& b : basis) {
        if (static_cast<int>(xs.size()) == bd) break;
        XiElement xi(n, d);
        xi.coeffs[b] = 1;
        RatMatrix y = xi_to_operator(xi) * seed_e11;
        y = y - seed_e11 * y;
        if (span.add(y.flat())) xs.push_back(y);
    }
    if (static_cast<int>(xs.size()) != bd)
        throw std::logic_error("schur_block_units: left ideal too small");

    std::vector<RatMatrix> es;
    SpanBuilder espan(static_cast<int>(dim2));
    for (const Biword& b : basis) {
        if (static_cast<int>(es.size()) == bd) break;
        XiElement xi(n, d);
        xi.coeffs[b] = 1;
        RatMatrix y = seed_e11 * xi_to_operator(xi);
        if (espan.add(y.flat())) es.push_back(y);
    }
    if (static_cast<int>(es.size()) != bd)
        throw std::logic_error("schur_block_units: right ideal too small");

    int amb = xs[0].rows();
    RatMatrix sys(bd, bd * amb * amb), rhs(bd, bd * amb * amb);
    for (int t = 0; t < bd; ++t)
        for (int j = 0; j < bd; ++j) {
            RatMatrix prod = es[t] * xs[j];
            for (int k = 0; k < amb * amb; ++k)
                sys(t, j * amb * amb + k) = prod.flat()[k];
        }
    for (int i = 0; i < bd; ++i)
        for (int k = 0; k < amb * amb; ++k) rhs(i, i * amb * amb + k) = seed_e11.flat()[k];
    auto sol = solve_left(sys, rhs);
    if (!sol) throw std::logic_error("schur_block_units: dual basis solve failed");
    std::vector<RatMatrix> ys(bd, RatMatrix(amb, amb));
    for (int i = 0; i < bd; ++i)
        for (int t = 0; t < bd; ++t)
            if ((*sol)(i, t) != 0) ys[i] += es[t].scaled((*sol)(i, t));

    SchurBlockUnits out;
    out.label = lambda;
    out.units.assign(bd, std::vector<RatMatrix>(bd, RatMatrix(amb, amb)));
    for (int i = 0; i < bd; ++i)
        for (int j = 0; j < bd; ++j) out.units[i][j] = xs[i] * ys[j];
    return out;
}

// Complete labeled primitive idempotent families for any degree: central
// character projections refined through the weight-space idempotent of
// content lambda (a one-dimensional weight space of V_lambda, hence a
// primitive seed), completed to matrix units per block.
inline std::vector<SchurBlockUnits> schur_idempotents_general(int n, int d,
                                                              long budget = 4096) {
    if (power(n, d) > budget)
        throw std::invalid_argument("schur_idempotents_general: n^d exceeds budget");
    std::vector<SchurBlockUnits> out;
    for (const Partition& lambda : partitions_of(d, n)) {
        RatMatrix z = schur_central_idempotent(lambda, n);
        RatMatrix e = z * weight_idempotent(lambda, n, d);
        if (!(e * e == e)) throw std::logic_error("schur_idempotents_general: seed not idempotent");
        out.push_back(schur_block_units(lambda, n, e));
    }
    return out;
}

// Realization of the polynomial GL_n irreducible V_lambda as the image of a
// Young symmetrizer acting by place permutations on V^{(x)|lambda|}.
struct GlIrrep {
    Partition lambda;
    int n = 0;
    RatMatrix basis;  // n^d x dim, columns form a basis of the image

    int dim() const { return basis.cols(); }
    int degree() const { return partition_size(lambda); }

    // Action of an operator on V^{(x)d} restricted to the module.
    RatMatrix act(const RatMatrix& op) const { return restrict_to_columns(op, basis); }

    // Action of a group element g (n x n, column convention).
    RatMatrix act_group(const RatMatrix& g) const {
        RatMatrix p = RatMatrix::identity(1);
        for (int k = 0; k < degree(); ++k) p = kronecker_product(p, g);
        return act(p);
    }
};

inline GlIrrep gl_irrep_realization(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("gl_irrep_realization: more than n rows");
    int d = partition_size(lambda);
    GlIrrep v;
    v.lambda = lambda;
    v.n = n;
    if (d == 0) {
        v.basis = RatMatrix::identity(1);
        return v;
    }
    GroupAlgebraElement e = young_symmetrizer(row_reading_tableau(lambda));
    long dim = power(n, d);
    RatMatrix p(static_cast<int>(dim), static_cast<int>(dim));
    for (auto& [perm, c] : e.terms) p += place_permutation(Permutation{perm}, n, d).scaled(c);
    v.basis = column_space(p);
    if (Int(v.basis.cols()) != dim_gl_irrep(lambda, n))
        throw std::logic_error("gl_irrep_realization: dimension mismatch");
    return v;
}

// Degree-lowering contraction: the operator of x_M . h on V^{(x)(d-e)} for a
// degree-e monomial with pair list M; entries are slices of h with the pair
// letters appended in the trailing slots.
inline RatMatrix slice_operator(const RatMatrix& h, int n, int d,
                                const std::vector<std::pair<int, int>>& pairs) {
    int e = static_cast<int>(pairs.size());
    if (e > d) throw std::invalid_argument("slice_operator: degree too large");
    long outer = power(n, d - e);
    long inner = power(n, e);
    std::vector<int> top(e), bottom(e);
    for (int k = 0; k < e; ++k) {
        top[k] = pairs[k].first;
        bottom[k] = pairs[k].second;
    }
    long ti = word_index(top, n), bi = word_index(bottom, n);
    RatMatrix s(static_cast<int>(outer), static_cast<int>(outer));
    for (long i = 0; i < outer; ++i)
        for (long j = 0; j < outer; ++j)
            s(static_cast<int>(i), static_cast<int>(j)) =
                h(static_cast<int>(i * inner + ti), static_cast<int>(j * inner + bi));
    return s;
}

}  // namespace qsmash
