#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qsmash/matrix.hpp"
#include "qsmash/partitions.hpp"
#include "qsmash/semisimple.hpp"

namespace qsmash {

// Permutation of {0,..,m-1}; composition is function composition,
// (p*q)(x) = p(q(x)).
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int m) {
        Permutation p;
        p.img.resize(m);
        for (int i = 0; i < m; ++i) p.img[i] = i;
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }

    Permutation operator*(const Permutation& q) const {
        Permutation r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[q.img[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != static_cast<int>(i)) return false;
        return true;
    }

    int sign() const {
        std::vector<bool> seen(img.size(), false);
        int s = 1;
        for (size_t i = 0; i < img.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = static_cast<int>(i); !seen[j]; j = img[j]) { seen[j] = true; ++len; }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    // Cycle type on a subset of letters the permutation stabilizes.
    Partition cycle_type_on(const std::vector<int>& letters) const {
        std::set<int> in(letters.begin(), letters.end());
        std::set<int> seen;
        Partition type;
        for (int l : letters) {
            if (seen.count(l)) continue;
            int len = 0, j = l;
            do {
                if (!in.count(j)) throw std::invalid_argument("cycle_type_on: subset not stable");
                seen.insert(j);
                ++len;
                j = img[j];
            } while (j != l);
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<int>());
        return type;
    }

    Partition cycle_type() const {
        std::vector<int> all(img.size());
        for (size_t i = 0; i < img.size(); ++i) all[i] = static_cast<int>(i);
        return cycle_type_on(all);
    }

    auto operator<=>(const Permutation&) const = default;
};

inline Permutation transposition(int m, int a, int b) {
    Permutation p = Permutation::identity(m);
    std::swap(p.img[a], p.img[b]);
    return p;
}

inline Permutation cycle(int m, const std::vector<int>& c) {
    Permutation p = Permutation::identity(m);
    for (size_t i = 0; i < c.size(); ++i) p.img[c[i]] = c[(i + 1) % c.size()];
    return p;
}

inline std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Element of the rational group algebra of a symmetric group; zero
// coefficients are never stored.
struct GroupAlgebraElement {
    int m = 0;
    std::map<std::vector<int>, Rat> terms;

    static GroupAlgebraElement zero(int m) { return {m, {}}; }

    static GroupAlgebraElement of(const Permutation& p, const Rat& c = Rat(1)) {
        GroupAlgebraElement e{p.degree(), {}};
        if (c != 0) e.terms[p.img] = c;
        return e;
    }

    static GroupAlgebraElement one(int m) {
        return of(Permutation::identity(m));
    }

    GroupAlgebraElement& add_term(const Permutation& p, const Rat& c) {
        if (c == 0) return *this;
        Rat& slot = terms[p.img];
        slot += c;
        if (slot == 0) terms.erase(p.img);
        return *this;
    }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
        GroupAlgebraElement r = *this;
        for (const auto& [p, c] : o.terms) r.add_term(Permutation{p}, c);
        return r;
    }

    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const {
        GroupAlgebraElement r = *this;
        for (const auto& [p, c] : o.terms) r.add_term(Permutation{p}, -c);
        return r;
    }

    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
        GroupAlgebraElement r = zero(m);
        for (const auto& [p, c] : terms)
            for (const auto& [q, d] : o.terms)
                r.add_term(Permutation{p} * Permutation{q}, c * d);
        return r;
    }

    GroupAlgebraElement scaled(const Rat& c) const {
        GroupAlgebraElement r = zero(m);
        for (const auto& [p, d] : terms) r.add_term(Permutation{p}, c * d);
        return r;
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return m == o.m && terms == o.terms;
    }
};

// Young symmetrizer e_T = kappa^{-1} sum_{v in V(T), h in H(T)} sgn(v) v h,
// with H/V the row/column stabilizers of the tableau. kappa is the product
// of the hook lengths, which is what makes e_T idempotent.
inline GroupAlgebraElement young_symmetrizer(const Tableau& t) {
    if (!t.is_standard())
        throw std::invalid_argument("young_symmetrizer: tableau must be standard");
    int m = t.size();
    std::vector<std::vector<int>> rows, cols;
    for (const auto& row : t.filling) {
        std::vector<int> r;
        for (int v : row) r.push_back(v - 1);
        rows.push_back(r);
    }
    size_t ncols = t.shape.empty() ? 0 : static_cast<size_t>(t.shape[0]);
    for (size_t j = 0; j < ncols; ++j) {
        std::vector<int> c;
        for (const auto& row : t.filling)
            if (j < row.size()) c.push_back(row[j] - 1);
        cols.push_back(c);
    }
    // Enumerate a direct product of symmetric groups on the given blocks.
    auto block_perms = [m](const std::vector<std::vector<int>>& blocks) {
        std::vector<Permutation> out{Permutation::identity(m)};
        for (const auto& b : blocks) {
            std::vector<Permutation> next;
            std::vector<int> order = b;
            std::sort(order.begin(), order.end());
            std::vector<int> arr = order;
            do {
                Permutation p = Permutation::identity(m);
                for (size_t i = 0; i < order.size(); ++i) p.img[order[i]] = arr[i];
                for (const Permutation& q : out) next.push_back(q * p);
            } while (std::next_permutation(arr.begin(), arr.end()));
            out = std::move(next);
        }
        return out;
    };
    std::vector<Permutation> hs = block_perms(rows);
    std::vector<Permutation> vs = block_perms(cols);
    GroupAlgebraElement e = GroupAlgebraElement::zero(m);
    Rat kappa_inv = rat(1) / Rat(hook_product(t.shape));
    for (const Permutation& v : vs)
        for (const Permutation& h : hs)
            e.add_term(v * h, v.sign() > 0 ? kappa_inv : -kappa_inv);
    return e;
}

// A finite group acting on a quiver: abstract elements are permutations of
// 1..letters, each carrying a vertex permutation and a matrix on the arrow
// span (column convention: g.a_j = sum_i A[i][j] a_i).
struct ActionGenerator {
    Permutation perm;
    std::vector<int> vertex_map;  // vertex index -> vertex index
    RatMatrix arrow_matrix;
};

struct FiniteAction {
    int letters = 0;
    std::vector<ActionGenerator> generators;
};

struct GroupElement {
    Permutation perm;
    std::vector<int> vertex_map;
    RatMatrix arrow_matrix;
};

// Closure of the generators; verifies that vertex and arrow data define a
// homomorphism (reaching an element twice with different data is an error).
inline std::vector<GroupElement> group_closure(const FiniteAction& act, int num_vertices,
                                               int num_arrows) {
    std::map<std::vector<int>, GroupElement> elems;
    GroupElement id;
    id.perm = Permutation::identity(act.letters);
    id.vertex_map.resize(num_vertices);
    for (int v = 0; v < num_vertices; ++v) id.vertex_map[v] = v;
    id.arrow_matrix = RatMatrix::identity(num_arrows);
    elems[id.perm.img] = id;
    std::vector<GroupElement> frontier{id};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier)
            for (const ActionGenerator& s : act.generators) {
                GroupElement h;
                h.perm = s.perm * g.perm;
                h.vertex_map.resize(num_vertices);
                for (int v = 0; v < num_vertices; ++v) h.vertex_map[v] = s.vertex_map[g.vertex_map[v]];
                h.arrow_matrix = s.arrow_matrix * g.arrow_matrix;
                auto it = elems.find(h.perm.img);
                if (it == elems.end()) {
                    elems[h.perm.img] = h;
                    next.push_back(h);
                } else if (it->second.vertex_map != h.vertex_map ||
                           it->second.arrow_matrix != h.arrow_matrix) {
                    throw std::invalid_argument("group_closure: action is not a homomorphism");
                }
            }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out;
    for (auto& [k, g] : elems) out.push_back(g);
    return out;
}

// Orbit data for a finite action on the vertex set.
struct OrbitData {
    std::vector<int> rep_of;                  // vertex -> orbit representative
    std::vector<int> witness;                 // vertex w -> index of g with g(rep)=w
    std::vector<int> reps;                    // representatives in vertex order
    std::vector<std::vector<int>> stabilizer; // per vertex: element indices fixing it
    std::vector<std::vector<int>> moved;      // per vertex: letters moved by its stabilizer
};

inline OrbitData orbits_and_stabilizers(const std::vector<GroupElement>& group, int num_vertices) {
    OrbitData od;
    od.rep_of.assign(num_vertices, -1);
    od.witness.assign(num_vertices, -1);
    int id_index = -1;
    for (size_t i = 0; i < group.size(); ++i)
        if (group[i].perm.is_identity()) id_index = static_cast<int>(i);
    for (int v = 0; v < num_vertices; ++v) {
        if (od.rep_of[v] >= 0) continue;
        od.reps.push_back(v);
        od.rep_of[v] = v;
        od.witness[v] = id_index;
        // BFS over group elements in index order gives deterministic witnesses.
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t gi = 0; gi < group.size(); ++gi)
                for (int w = 0; w < num_vertices; ++w) {
                    if (od.rep_of[w] != v) continue;
                    int u = group[gi].vertex_map[w];
                    if (od.rep_of[u] < 0) {
                        od.rep_of[u] = v;
                        // witness maps the representative directly to u
                        // (compose with the witness of w).
                        for (size_t hi = 0; hi < group.size(); ++hi) {
                            if (group[hi].vertex_map[v] == u) { od.witness[u] = static_cast<int>(hi); break; }
                        }
                        changed = true;
                    }
                }
        }
    }
    od.stabilizer.resize(num_vertices);
    od.moved.resize(num_vertices);
    for (int v = 0; v < num_vertices; ++v) {
        std::set<int> moved;
        for (size_t i = 0; i < group.size(); ++i)
            if (group[i].vertex_map[v] == v) {
                od.stabilizer[v].push_back(static_cast<int>(i));
                for (int l = 0; l < group[i].perm.degree(); ++l)
                    if (group[i].perm(l) != l) moved.insert(l);
            }
        od.moved[v] = std::vector<int>(moved.begin(), moved.end());
    }
    return od;
}

// The stabilizers in scope are full symmetric groups on their moved letters.
// Returns the number of letters m (0 or 1 for the trivial group).
inline int stabilizer_symmetric_degree(const OrbitData& od, int v,
                                       const std::vector<GroupElement>& group) {
    size_t order = od.stabilizer[v].size();
    int m = static_cast<int>(od.moved[v].size());
    if (order == 1) return 1;  // trivial stabilizer: treat as S_1
    Int expected = factorial(m);
    if (expected != Int(static_cast<unsigned long>(order)))
        throw std::domain_error("stabilizer is not a full symmetric group (out of scope)");
    (void)group;
    return m;
}

// Left-regular realization of the group algebra over an explicit element
// list (column convention: L_g e_h = e_{gh}).
inline MatrixAlgebra regular_realization(const std::vector<Permutation>& elements) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elements.size(); ++i) index[elements[i].img] = static_cast<int>(i);
    int n = static_cast<int>(elements.size());
    MatrixAlgebra alg{n, {}};
    for (int gi = 0; gi < n; ++gi) {
        RatMatrix l(n, n);
        for (int hi = 0; hi < n; ++hi) {
            auto it = index.find((elements[gi] * elements[hi]).img);
            if (it == index.end())
                throw std::invalid_argument("regular_realization: element list not closed");
            l(it->second, hi) = 1;
        }
        alg.basis.push_back(l);
    }
    return alg;
}

inline MatrixAlgebra group_algebra_realization(int m, int bound = 6) {
    if (m > bound)
        throw std::invalid_argument("group_algebra_realization: degree exceeds configured bound");
    return regular_realization(all_permutations(m));
}

inline RatMatrix to_regular_matrix(const GroupAlgebraElement& x,
                                   const std::vector<Permutation>& elements) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elements.size(); ++i) index[elements[i].img] = static_cast<int>(i);
    int n = static_cast<int>(elements.size());
    RatMatrix m(n, n);
    for (const auto& [p, c] : x.terms) {
        Permutation g{p};
        for (int hi = 0; hi < n; ++hi) m(index[(g * elements[hi]).img], hi) += c;
    }
    return m;
}

// Central idempotent of k[S_m] attached to the irreducible rho:
// z = (dim rho / m!) sum_g chi_rho(g) g.
inline GroupAlgebraElement central_idempotent(const Partition& rho) {
    int m = partition_size(rho);
    Rat norm = Rat(dim_symgroup_irrep(rho)) / Rat(factorial(m));
    GroupAlgebraElement z = GroupAlgebraElement::zero(m);
    for (const Permutation& g : all_permutations(m))
        z.add_term(g, norm * rat(symgroup_character(rho, g.cycle_type())));
    return z;
}

// Full matrix-unit family of the rho-block of k[S_m]. The designated
// e^{11} is the Young symmetrizer of the row-reading standard tableau;
// Young symmetrizers of other tableaux are not pairwise orthogonal, so the
// rest of the family is completed by exact linear algebra in the left ideal.
inline std::vector<std::vector<GroupAlgebraElement>> symmetric_group_matrix_units(
    const Partition& rho) {
    int m = partition_size(rho);
    int d = static_cast<int>(to_long(Rat(dim_symgroup_irrep(rho))));
    GroupAlgebraElement e = young_symmetrizer(row_reading_tableau(rho));
    if (!((e * e) == e)) throw std::logic_error("young symmetrizer is not idempotent");

    std::vector<Permutation> elements = all_permutations(m);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elements.size(); ++i) index[elements[i].img] = static_cast<int>(i);
    int n = static_cast<int>(elements.size());
    auto flat = [&](const GroupAlgebraElement& x) {
        std::vector<Rat> v(n);
        for (const auto& [p, c] : x.terms) v[index.at(p)] = c;
        return v;
    };

    // Basis {e, y_2, ..., y_d} of the left ideal Se with e*y_i = 0.
    std::vector<GroupAlgebraElement> xs{e};
    SpanBuilder span(n);
    span.add(flat(e));
    for (const Permutation& g : elements) {
        if (static_cast<int>(xs.size()) == d) break;
        GroupAlgebraElement y = GroupAlgebraElement::of(g) * e;
        y = y - e * y;
        if (span.add(flat(y))) xs.push_back(y);
    }
    if (static_cast<int>(xs.size()) != d)
        throw std::logic_error("symmetric_group_matrix_units: left ideal too small");

    // Dual basis in eS: y_i * x_j = delta_{ij} e.
    std::vector<GroupAlgebraElement> es;
    SpanBuilder espan(n);
    for (const Permutation& g : elements) {
        GroupAlgebraElement y = e * GroupAlgebraElement::of(g);
        if (espan.add(flat(y))) es.push_back(y);
        if (static_cast<int>(es.size()) == d) break;
    }
    if (static_cast<int>(es.size()) != d)
        throw std::logic_error("symmetric_group_matrix_units: right ideal too small");
    RatMatrix sys(d, d * n), rhs(d, d * n);
    for (int t = 0; t < d; ++t)
        for (int j = 0; j < d; ++j) {
            std::vector<Rat> prod = flat(es[t] * xs[j]);
            for (int k = 0; k < n; ++k) sys(t, j * n + k) = prod[k];
        }
    std::vector<Rat> ef = flat(e);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < n; ++k) rhs(i, i * n + k) = ef[k];
    auto sol = solve_left(sys, rhs);
    if (!sol) throw std::logic_error("symmetric_group_matrix_units: dual basis solve failed");
    std::vector<GroupAlgebraElement> ys(d, GroupAlgebraElement::zero(m));
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t)
            if ((*sol)(i, t) != 0) ys[i] = ys[i] + es[t].scaled((*sol)(i, t));

    std::vector<std::vector<GroupAlgebraElement>> units(
        d, std::vector<GroupAlgebraElement>(d, GroupAlgebraElement::zero(m)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) units[i][j] = xs[i] * ys[j];
    return units;
}

// dim Hom_{H}(V_rho, R (x) V_sigma) for H the joint stabilizer of (u', v'),
// rho/sigma irreducibles of the vertex stabilizers transported along the
// orbit witnesses, R the span of the arrows u' -> v'.
//
// chi_rho is evaluated through cycle types on the stabilizer's moved letters,
// padded with fixed points, which realizes the conjugation identification.
inline long module_multiplicity(const std::vector<GroupElement>& group, const OrbitData& od,
                                int u_prime, int v_prime, const Partition& rho,
                                const Partition& sigma,
                                const std::vector<int>& arrows_between_cols) {
    // Letters carrying the stabilizer symmetric groups at u' and v'.
    auto padded_type = [&](const GroupElement& g, int vertex, int target_size) {
        std::vector<int> letters = od.moved[vertex];
        Partition type = g.perm.cycle_type_on(letters);
        int covered = partition_size(type);
        for (int i = covered; i < target_size; ++i) type.push_back(1);
        std::sort(type.begin(), type.end(), std::greater<int>());
        return type;
    };
    int ru = partition_size(rho), rv = partition_size(sigma);
    Rat sum = 0;
    long order = 0;
    for (size_t gi = 0; gi < group.size(); ++gi) {
        const GroupElement& g = group[gi];
        if (g.vertex_map[u_prime] != u_prime || g.vertex_map[v_prime] != v_prime) continue;
        ++order;
        Rat trace_R = 0;
        for (int a : arrows_between_cols) trace_R += g.arrow_matrix(a, a);
        Rat chr = rat(symgroup_character(rho, padded_type(g, u_prime, ru)));
        Rat chs = rat(symgroup_character(sigma, padded_type(g, v_prime, rv)));
        sum += chr * trace_R * chs;
    }
    sum /= rat(order);
    if (!is_integer(sum)) throw std::logic_error("module_multiplicity: non-integer");
    return to_long(sum);
}

}  // namespace qsmash
