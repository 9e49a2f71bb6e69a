#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qsmash/rational.hpp"

namespace qsmash {

// Weakly decreasing list of positive parts; [] is the empty partition.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

inline Partition partition_parse(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition_parse: expected [a,b,...]: " + s);
    Partition p;
    size_t i = 1;
    while (i < s.size() - 1) {
        size_t j = s.find(',', i);
        if (j == std::string::npos || j > s.size() - 1) j = s.size() - 1;
        p.push_back(std::stoi(s.substr(i, j - i)));
        i = j + 1;
    }
    if (!is_partition(p)) throw std::invalid_argument("partition_parse: not a partition: " + s);
    return p;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    for (int j = 0; p.empty() ? false : j < p[0]; ++j) {
        int count = 0;
        for (int part : p)
            if (part > j) ++count;
        c.push_back(count);
    }
    return c;
}

// All partitions of d with at most max_rows parts, in descending
// lexicographic order ([4] > [3,1] > [2,2] > [2,1,1] > [1,1,1,1]).
inline std::vector<Partition> partitions_of(int d, int max_rows = -1) {
    if (d < 0) return {};
    if (max_rows < 0) max_rows = d;
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int cap, int rows_left) -> void {
        if (rest == 0) { out.push_back(cur); return; }
        if (rows_left == 0) return;
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part, rows_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, d, d, max_rows);
    return out;
}

inline std::vector<int> hook_lengths(const Partition& p) {
    Partition c = conjugate(p);
    std::vector<int> hooks;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks.push_back(p[i] - j + c[j] - static_cast<int>(i) - 1);
    return hooks;
}

// Product of all hook lengths; this is the normalization making the Young
// symmetrizer idempotent.
inline Int hook_product(const Partition& p) {
    Int h = 1;
    for (int x : hook_lengths(p)) h *= x;
    return h;
}

inline Int dim_symgroup_irrep(const Partition& p) {
    return factorial(partition_size(p)) / hook_product(p);
}

// Hook content formula for polynomial GL_n irreducibles.
inline Int dim_gl_irrep(const Partition& p, int n) {
    if (static_cast<int>(p.size()) > n)
        throw std::invalid_argument("dim_gl_irrep: more than n rows");
    Partition c = conjugate(p);
    Rat dim = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int content = j - static_cast<int>(i);
            int hook = p[i] - j + c[j] - static_cast<int>(i) - 1;
            dim *= rat(n + content, hook);
        }
    if (!is_integer(dim)) throw std::logic_error("dim_gl_irrep: non-integer");
    return dim.get_num();
}

// z_mu = prod_i m_i! * i^{m_i}; |class of cycle type mu| = d!/z_mu.
inline Int centralizer_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    Int z = 1;
    for (auto& [part, m] : mult) {
        z *= factorial(m);
        for (int i = 0; i < m; ++i) z *= part;
    }
    return z;
}

inline Int class_size(const Partition& mu) {
    return factorial(partition_size(mu)) / centralizer_order(mu);
}

namespace detail {

// Murnaghan-Nakayama on beta-numbers: removing a border strip of length r
// moves one beta number down by r; the sign counts the numbers jumped over.
inline long mn_character(std::vector<int> beta, std::vector<int> mu_rest);

inline std::vector<int> beta_numbers(const Partition& p, int len) {
    std::vector<int> beta(len);
    for (int k = 0; k < len; ++k) {
        int part = k < static_cast<int>(p.size()) ? p[k] : 0;
        beta[k] = part + (len - 1 - k);
    }
    return beta;
}

inline long mn_character(std::vector<int> beta, std::vector<int> mu_rest) {
    if (mu_rest.empty()) return 1;
    int r = mu_rest.back();
    mu_rest.pop_back();
    long total = 0;
    for (size_t k = 0; k < beta.size(); ++k) {
        int target = beta[k] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[k]) ++jumped;
        std::vector<int> nb = beta;
        nb[k] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        long sub = mn_character(nb, mu_rest);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace detail

// Character of the symmetric group irreducible labeled by lambda at the
// conjugacy class of cycle type mu (Murnaghan-Nakayama recursion).
inline long symgroup_character(const Partition& lambda, const Partition& mu) {
    if (partition_size(lambda) != partition_size(mu))
        throw std::invalid_argument("symgroup_character: size mismatch");
    int len = static_cast<int>(lambda.size()) + (mu.empty() ? 0 : mu[0]);
    if (len == 0) return 1;
    std::vector<int> mu_sorted(mu.begin(), mu.end());
    std::sort(mu_sorted.begin(), mu_sorted.end());  // strip largest parts first
    return detail::mn_character(detail::beta_numbers(lambda, len), mu_sorted);
}

struct CharacterTable {
    int d;
    std::vector<Partition> irreps;   // rows
    std::vector<Partition> classes;  // columns
    std::vector<Int> sizes;          // class sizes
    std::vector<std::vector<long>> chi;
};

inline const CharacterTable& character_table(int d) {
    static std::map<int, CharacterTable> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    CharacterTable t;
    t.d = d;
    t.irreps = partitions_of(d);
    t.classes = t.irreps;
    for (const Partition& mu : t.classes) t.sizes.push_back(class_size(mu));
    for (const Partition& lam : t.irreps) {
        std::vector<long> row;
        for (const Partition& mu : t.classes) row.push_back(symgroup_character(lam, mu));
        t.chi.push_back(row);
    }
    return cache.emplace(d, std::move(t)).first->second;
}

// Kronecker coefficient g_{rho,pi}^sigma via the class sum formula.
inline long kronecker(const Partition& rho, const Partition& pi, const Partition& sigma) {
    int d = partition_size(rho);
    if (partition_size(pi) != d || partition_size(sigma) != d)
        throw std::invalid_argument("kronecker: size mismatch");
    const CharacterTable& t = character_table(d);
    Rat sum = 0;
    for (size_t c = 0; c < t.classes.size(); ++c) {
        long prod = symgroup_character(rho, t.classes[c]) *
                    symgroup_character(pi, t.classes[c]) *
                    symgroup_character(sigma, t.classes[c]);
        sum += Rat(t.sizes[c]) * rat(prod);
    }
    sum /= Rat(factorial(d));
    if (!is_integer(sum)) throw std::logic_error("kronecker: non-integer");
    return to_long(sum);
}

// Littlewood-Richardson coefficient by lattice-word backtracking over skew
// tableaux of shape nu/lambda and content mu.
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (partition_size(lambda) + partition_size(mu) != partition_size(nu)) return 0;
    if (lambda.size() > nu.size()) return 0;
    size_t rows = nu.size();
    for (size_t i = 0; i < rows; ++i) {
        int lam = i < lambda.size() ? lambda[i] : 0;
        if (lam > nu[i]) return 0;
        if (i < lambda.size() && lambda[i] > (i < nu.size() ? nu[i] : 0)) return 0;
    }
    // Cells in row-reading order, right-to-left within each row, so that the
    // reverse reading word is consumed in order and the lattice condition can
    // be checked greedily.
    struct Cell { int row, col; };
    std::vector<Cell> cells;
    for (size_t i = 0; i < rows; ++i) {
        int lam = i < lambda.size() ? lambda[i] : 0;
        for (int j = nu[i] - 1; j >= lam; --j) cells.push_back({static_cast<int>(i), j});
    }
    int k = static_cast<int>(mu.size());
    std::vector<int> remaining(mu.begin(), mu.end());
    std::vector<int> placed(k, 0);
    // fill[i][j] for the skew cells only.
    std::vector<std::vector<int>> fill(rows);
    for (size_t i = 0; i < rows; ++i) fill[i].assign(nu[i], 0);

    long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) { ++count; return; }
        auto [i, j] = cells[idx];
        int lam = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        for (int v = 1; v <= k; ++v) {
            if (remaining[v - 1] == 0) continue;
            // Lattice word: value v may appear only if v-1 has appeared more
            // often so far in the reverse reading word.
            if (v > 1 && placed[v - 1] + 1 > placed[v - 2]) continue;
            // Rows weakly increase left to right.
            if (j + 1 < nu[i] && fill[i][j + 1] != 0 && v > fill[i][j + 1]) continue;
            // Columns strictly increase top to bottom.
            if (i > 0 && j >= lam) {
                int up_lam = (i - 1) < static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
                if (j >= up_lam) {
                    if (j >= nu[i - 1]) continue;  // no cell above in nu
                    if (fill[i - 1][j] == 0 || fill[i - 1][j] >= v) continue;
                }
                // cell above is in lambda: nothing to check
            }
            fill[i][j] = v;
            --remaining[v - 1];
            ++placed[v - 1];
            self(self, idx + 1);
            fill[i][j] = 0;
            ++remaining[v - 1];
            --placed[v - 1];
        }
    };
    rec(rec, 0);
    return count;
}

// Multiplicity of rho (partition of n-1) in the restriction of sigma
// (partition of n); by Pieri this is the add-one-box indicator.
inline long branching_multiplicity(const Partition& rho, const Partition& sigma) {
    if (partition_size(rho) + 1 != partition_size(sigma))
        throw std::invalid_argument("branching_multiplicity: sizes must differ by one");
    return lr_coefficient(rho, Partition{1}, sigma);
}

// Young tableau: a shape plus a bijective filling by 1..d, stored row by row.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> filling;

    int size() const { return partition_size(shape); }

    bool is_valid() const {
        if (filling.size() != shape.size()) return false;
        std::vector<bool> seen(size(), false);
        for (size_t i = 0; i < shape.size(); ++i) {
            if (static_cast<int>(filling[i].size()) != shape[i]) return false;
            for (int v : filling[i]) {
                if (v < 1 || v > size() || seen[v - 1]) return false;
                seen[v - 1] = true;
            }
        }
        return true;
    }

    bool is_standard() const {
        if (!is_valid()) return false;
        for (size_t i = 0; i < filling.size(); ++i)
            for (size_t j = 0; j < filling[i].size(); ++j) {
                if (j + 1 < filling[i].size() && filling[i][j] >= filling[i][j + 1]) return false;
                if (i + 1 < filling.size() && j < filling[i + 1].size() &&
                    filling[i][j] >= filling[i + 1][j])
                    return false;
            }
        return true;
    }
};

// Row-reading tableau: 1..d filled row by row; always standard.
inline Tableau row_reading_tableau(const Partition& shape) {
    Tableau t;
    t.shape = shape;
    int next = 1;
    for (int part : shape) {
        std::vector<int> row(part);
        for (int j = 0; j < part; ++j) row[j] = next++;
        t.filling.push_back(row);
    }
    return t;
}

inline std::vector<Tableau> standard_tableaux(const Partition& shape) {
    int d = partition_size(shape);
    std::vector<Tableau> out;
    Tableau t;
    t.shape = shape;
    t.filling.resize(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) t.filling[i].assign(shape[i], 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v > d) { out.push_back(t); return; }
        for (size_t i = 0; i < shape.size(); ++i) {
            int j = 0;
            while (j < shape[i] && t.filling[i][j] != 0) ++j;
            if (j == shape[i]) continue;
            bool ok = (j == 0 || t.filling[i][j - 1] != 0) &&
                      (i == 0 || (j < static_cast<int>(t.filling[i - 1].size()) &&
                                  t.filling[i - 1][j] != 0));
            if (!ok) continue;
            t.filling[i][j] = v;
            self(self, v + 1);
            t.filling[i][j] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace qsmash
