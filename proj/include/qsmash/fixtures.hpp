#pragma once

#include <memory>
#include <vector>

#include "qsmash/quiver.hpp"

namespace qsmash {

// Printed matrix families: per arrow of the base quiver, a pattern matrix
// whose entries are rational multiples of the symbols B_1, B_2, ...
struct SymbolPattern {
    int rows = 0, cols = 0;
    // (row, col, symbol index 1-based, coefficient)
    std::vector<std::tuple<int, int, int, Rat>> entries;
};

struct MatrixFamily {
    std::string name;
    std::shared_ptr<const Quiver> base;
    int num_symbols = 0;
    std::vector<long> symbol_rows, symbol_cols;  // block shape of each symbol (units of b)
    std::vector<SymbolPattern> per_arrow;

    // Evaluate at concrete symbol matrices B_k of size (symbol_rows[k]*b) x
    // (symbol_cols[k]*b)? Symbols here are all square b x b blocks; the
    // pattern has fixed block shape, so evaluation just scales by b.
    Representation evaluate(const std::vector<RatMatrix>& symbols) const {
        int b = symbols.empty() ? 1 : symbols[0].rows();
        for (auto& s : symbols)
            if (s.rows() != b || s.cols() != b)
                throw std::invalid_argument("MatrixFamily: symbols must be square, equal size");
        Representation m;
        m.quiver = base;
        m.dims.assign(base->num_vertices(), 0);
        for (int v = 0; v < base->num_vertices(); ++v) {
            // derive dims from pattern shapes
            for (int ai = 0; ai < base->num_arrows(); ++ai) {
                if (base->arrows[ai].tail == v) m.dims[v] = per_arrow[ai].rows * b;
                if (base->arrows[ai].head == v) m.dims[v] = per_arrow[ai].cols * b;
            }
        }
        for (int ai = 0; ai < base->num_arrows(); ++ai) {
            const SymbolPattern& p = per_arrow[ai];
            RatMatrix ma(p.rows * b, p.cols * b);
            for (auto& [r, c, sym, coef] : p.entries) {
                RatMatrix blk = symbols[sym - 1].scaled(coef);
                for (int x = 0; x < b; ++x)
                    for (int y = 0; y < b; ++y) ma(r * b + x, c * b + y) += blk(x, y);
            }
            m.matrices.push_back(ma);
        }
        return m;
    }
};

namespace fixtures {

inline std::shared_ptr<const Quiver> kq(int n) {
    return std::make_shared<const Quiver>(kronecker_quiver(n));
}

// K_2 with the S_2 swap action: rows/cols ([1,1], [2]).
inline MatrixFamily k2_s2() {
    MatrixFamily f;
    f.name = "K2/S2";
    f.base = kq(2);
    f.num_symbols = 4;
    auto E = [](std::initializer_list<std::tuple<int, int, int, long>> l) {
        SymbolPattern p;
        p.rows = 2;
        p.cols = 2;
        for (auto& [r, c, s, v] : l) p.entries.push_back({r, c, s, rat(v)});
        return p;
    };
    f.per_arrow = {E({{0, 0, 1, 1}, {0, 1, 2, 1}, {1, 0, 3, 1}, {1, 1, 4, 1}}),
                   E({{0, 0, 1, 1}, {0, 1, 2, -1}, {1, 0, 3, -1}, {1, 1, 4, 1}})};
    return f;
}

// K_3 with the natural S_3 action: rows/cols ([1,1,1], [2,1], [2,1], [3]).
inline MatrixFamily k3_s3() {
    MatrixFamily f;
    f.name = "K3/S3";
    f.base = kq(3);
    f.num_symbols = 8;
    auto half = rat(1, 2);
    SymbolPattern a1, a2, a3;
    a1.rows = a1.cols = a2.rows = a2.cols = a3.rows = a3.cols = 4;
    // A_1
    a1.entries = {{0, 0, 1, rat(1)},  {0, 1, 2, rat(1)},  {0, 2, 2, rat(1)},
                  {1, 0, 3, rat(1)},  {1, 1, 4, half},    {1, 1, 5, half},
                  {1, 2, 5, half},    {1, 2, 4, -half},   {1, 3, 6, rat(1)},
                  {2, 0, 3, rat(-1)}, {2, 1, 4, half},    {2, 1, 5, -half},
                  {2, 2, 4, -half},   {2, 2, 5, -half},   {2, 3, 6, rat(1)},
                  {3, 1, 7, rat(1)},  {3, 2, 7, rat(-1)}, {3, 3, 8, rat(1)}};
    // A_2
    a2.entries = {{0, 0, 1, rat(1)},  {0, 1, 2, rat(1)}, {0, 2, 2, rat(-2)},
                  {1, 1, 4, rat(1)},  {1, 3, 6, rat(-2)},
                  {2, 0, 3, rat(1)},  {2, 1, 5, half},   {2, 1, 4, -half},
                  {2, 2, 5, rat(-1)}, {2, 3, 6, rat(1)},
                  {3, 1, 7, rat(-1)}, {3, 3, 8, rat(1)}};
    // A_3
    a3.entries = {{0, 0, 1, rat(1)},  {0, 1, 2, rat(-2)}, {0, 2, 2, rat(1)},
                  {1, 0, 3, rat(-1)}, {1, 1, 5, rat(1)},  {1, 2, 4, half},
                  {1, 2, 5, -half},   {1, 3, 6, rat(1)},
                  {2, 2, 4, rat(-1)}, {2, 3, 6, rat(-2)},
                  {3, 2, 7, rat(1)},  {3, 3, 8, rat(1)}};
    f.per_arrow = {a1, a2, a3};
    return f;
}

// S_4 subspace quiver with the natural S_4 action: 4 x 10 patterns over
// B_1..B_7; rows ([3], [2,1], [2,1], [1,1,1]), columns the partitions of 4.
inline MatrixFamily s4_subspace() {
    MatrixFamily f;
    f.name = "S4/S4";
    f.base = std::make_shared<const Quiver>(subspace_quiver(4));
    f.num_symbols = 7;
    auto P = [](std::initializer_list<std::tuple<int, int, int, long>> l) {
        SymbolPattern p;
        p.rows = 4;
        p.cols = 10;
        for (auto& [r, c, s, v] : l) p.entries.push_back({r, c, s, rat(v)});
        return p;
    };
    f.per_arrow = {
        P({{0, 0, 1, 1}, {0, 1, 2, 1},  {0, 2, 2, -1}, {0, 3, 2, -1},
           {1, 1, 3, 1}, {1, 3, 3, 1},  {1, 4, 4, 1},  {1, 6, 5, 1},  {1, 7, 5, -2}, {1, 8, 5, 1},
           {2, 2, 3, 1}, {2, 3, 3, -1}, {2, 4, 4, -1}, {2, 5, 4, -1}, {2, 6, 5, 1},  {2, 7, 5, 1},
           {2, 8, 5, -2},
           {3, 6, 6, 1}, {3, 7, 6, 1},  {3, 8, 6, 1},  {3, 9, 7, 1}}),
        P({{0, 0, 1, 1}, {0, 1, 2, 1},  {0, 2, 2, -1}, {0, 3, 2, 3},
           {1, 1, 3, 1}, {1, 4, 4, 1},  {1, 5, 4, 1},  {1, 6, 5, 1},  {1, 7, 5, 3},
           {2, 2, 3, 1}, {2, 4, 4, -1}, {2, 6, 5, 1},  {2, 8, 5, 3},
           {3, 6, 6, 1}, {3, 9, 7, -1}}),
        P({{0, 0, 1, 1}, {0, 1, 2, 1},  {0, 2, 2, 3},  {0, 3, 2, -1},
           {1, 1, 3, 1}, {1, 4, 4, -1}, {1, 5, 4, -1}, {1, 6, 5, -3}, {1, 7, 5, -1},
           {2, 3, 3, 1}, {2, 5, 4, 1},  {2, 7, 5, -1}, {2, 8, 5, -3},
           {3, 7, 6, -1}, {3, 9, 7, -1}}),
        P({{0, 0, 1, 1}, {0, 1, 2, -3}, {0, 2, 2, -1}, {0, 3, 2, -1},
           {1, 2, 3, -1}, {1, 4, 4, -1}, {1, 6, 5, 3}, {1, 8, 5, 1},
           {2, 3, 3, 1}, {2, 5, 4, -1}, {2, 7, 5, 3}, {2, 8, 5, 1},
           {3, 8, 6, 1}, {3, 9, 7, 1}})};
    return f;
}

// First GL component of K_3 (natural action of GL_3), 9 x 3 over B_1, B_2.
inline MatrixFamily k3_gl_first() {
    MatrixFamily f;
    f.name = "K3 GL first";
    f.base = kq(3);
    f.num_symbols = 2;
    auto P = [](std::initializer_list<std::tuple<int, int, int, long>> l) {
        SymbolPattern p;
        p.rows = 9;
        p.cols = 3;
        for (auto& [r, c, s, v] : l) p.entries.push_back({r, c, s, rat(v)});
        return p;
    };
    f.per_arrow = {P({{0, 1, 1, -1}, {1, 2, 1, 1}, {3, 1, 2, 1}, {4, 2, 2, 1}, {6, 0, 2, 1}}),
                   P({{0, 0, 1, 1}, {2, 2, 1, -1}, {3, 0, 2, 1}, {5, 2, 2, 1}, {7, 1, 2, 1}}),
                   P({{1, 0, 1, -1}, {2, 1, 1, 1}, {4, 0, 2, 1}, {5, 1, 2, 1}, {8, 2, 2, 1}})};
    return f;
}

// First GL component of K_4, 16 x 4 over B_1, B_2 (from the Yale triplets).
inline MatrixFamily k4_gl_first() {
    MatrixFamily f;
    f.name = "K4 GL first";
    f.base = kq(4);
    f.num_symbols = 2;
    struct Y {
        std::vector<long> vals, rows, cols;
    };
    // upper blocks (6 x 4, symbol 1), lower blocks (10 x 4, symbol 2)
    std::vector<Y> up = {{{-1, 1, 1}, {1, 2, 4}, {2, 3, 4}},
                         {{1, -1, -1}, {1, 3, 5}, {1, 3, 4}},
                         {{-1, 1, 1}, {2, 3, 6}, {1, 2, 4}},
                         {{-1, 1, -1}, {4, 5, 6}, {1, 2, 3}}};
    std::vector<Y> down = {{{1, 1, 1, 1}, {1, 2, 4, 7}, {2, 3, 4, 1}},
                           {{1, 1, 1, 1}, {1, 3, 5, 8}, {1, 3, 4, 2}},
                           {{1, 1, 1, 1}, {2, 3, 6, 9}, {1, 2, 4, 3}},
                           {{1, 1, 1, 1}, {4, 5, 6, 10}, {1, 2, 3, 4}}};
    for (int a = 0; a < 4; ++a) {
        SymbolPattern p;
        p.rows = 16;
        p.cols = 4;
        for (size_t k = 0; k < up[a].vals.size(); ++k)
            p.entries.push_back({static_cast<int>(up[a].rows[k]) - 1,
                                 static_cast<int>(up[a].cols[k]) - 1, 1, rat(up[a].vals[k])});
        for (size_t k = 0; k < down[a].vals.size(); ++k)
            p.entries.push_back({static_cast<int>(down[a].rows[k]) - 1 + 6,
                                 static_cast<int>(down[a].cols[k]) - 1, 2, rat(down[a].vals[k])});
        f.per_arrow.push_back(p);
    }
    return f;
}

// The Yale-form blocks of the second GL component of K_3 (19 x 9 over
// B_1..B_4): A_i = [[A_iu, 0], [A_il, A_ir], [0, A_id]].
struct SecondComponentBlocks {
    SymbolPattern full[3];
    // block shapes: u: 1x3, l: 8x3, r: 8x6, d: 10x6
};

inline SecondComponentBlocks k3_gl_second_blocks() {
    SecondComponentBlocks out;
    struct Y {
        std::vector<Rat> vals;
        std::vector<long> rows, cols;
    };
    auto mk = [](std::vector<Rat> v, std::vector<long> r, std::vector<long> c) {
        return Y{std::move(v), std::move(r), std::move(c)};
    };
    Rat h = rat(1, 2), q = rat(1, 4), e = rat(1, 8);
    std::vector<Y> u = {mk({rat(1)}, {1}, {3}), mk({rat(1)}, {1}, {2}), mk({rat(1)}, {1}, {1})};
    std::vector<Y> l = {mk({rat(-2), rat(2), rat(-1)}, {1, 3, 7}, {1, 2, 3}),
                        mk({rat(2), rat(2), rat(1), rat(-1)}, {2, 4, 7, 8}, {1, 3, 2, 2}),
                        mk({rat(2), rat(2), rat(1)}, {5, 6, 8}, {2, 3, 1})};
    std::vector<Y> r = {
        mk({rat(1), rat(-2), rat(1), rat(2), h, rat(-1)}, {1, 2, 3, 5, 7, 8}, {1, 5, 2, 6, 3, 3}),
        mk({rat(-2), rat(1), rat(-1), rat(-2), h, h}, {1, 2, 4, 6, 7, 8}, {4, 1, 3, 6, 2, 2}),
        mk({rat(-2), rat(2), rat(-1), rat(1), rat(-1), h}, {3, 4, 5, 6, 7, 8},
           {4, 5, 2, 3, 1, 1})};
    std::vector<Y> d = {
        mk({rat(3), rat(1), rat(1), rat(1), h, e}, {1, 4, 5, 6, 8, 10}, {4, 1, 5, 2, 6, 3}),
        mk({rat(3), rat(1), rat(1), h, q, e}, {2, 4, 5, 7, 9, 10}, {5, 4, 1, 3, 6, 2}),
        mk({rat(3), rat(1), h, h, q, e}, {3, 6, 7, 8, 9, 10}, {6, 4, 5, 2, 3, 1})};
    for (int a = 0; a < 3; ++a) {
        SymbolPattern p;
        p.rows = 19;
        p.cols = 9;
        auto put = [&](const Y& y, int roff, int coff, int sym) {
            for (size_t k = 0; k < y.vals.size(); ++k)
                p.entries.push_back({static_cast<int>(y.rows[k]) - 1 + roff,
                                     static_cast<int>(y.cols[k]) - 1 + coff, sym, y.vals[k]});
        };
        put(u[a], 0, 0, 1);   // 1x3 at top-left
        put(l[a], 1, 0, 2);   // 8x3
        put(r[a], 1, 3, 3);   // 8x6
        put(d[a], 9, 3, 4);   // 10x6
        out.full[a] = p;
    }
    return out;
}

inline MatrixFamily k3_gl_second() {
    MatrixFamily f;
    f.name = "K3 GL second";
    f.base = kq(3);
    f.num_symbols = 4;
    auto blocks = k3_gl_second_blocks();
    f.per_arrow = {blocks.full[0], blocks.full[1], blocks.full[2]};
    return f;
}

// K_3 with the symmetric-square GL_2 action, 6 x 2 over B_1, B_2.
inline MatrixFamily k3_s2w_first() {
    MatrixFamily f;
    f.name = "K3 S^2 GL2 first";
    f.base = kq(3);
    f.num_symbols = 2;
    auto P = [](std::initializer_list<std::tuple<int, int, int, long>> l) {
        SymbolPattern p;
        p.rows = 6;
        p.cols = 2;
        for (auto& [r, c, s, v] : l) p.entries.push_back({r, c, s, rat(v)});
        return p;
    };
    f.per_arrow = {P({{0, 1, 1, -1}, {2, 0, 2, 3}, {4, 1, 2, 1}}),
                   P({{0, 0, 1, 1}, {1, 1, 1, 1}, {4, 0, 2, 2}, {5, 1, 2, 2}}),
                   P({{1, 0, 1, -1}, {3, 1, 2, 3}, {5, 0, 2, 1}})};
    return f;
}

// Sub-patterns for the proposition suites.
inline MatrixFamily proposition_pattern(const std::string& which) {
    auto second = k3_gl_second_blocks();
    auto slice = [&](int roff, int rows, int coff, int cols,
                     std::vector<int> symbols) {
        MatrixFamily f;
        f.name = "P:" + which;
        f.base = kq(3);
        f.num_symbols = 0;
        for (int a = 0; a < 3; ++a) {
            SymbolPattern p;
            p.rows = rows;
            p.cols = cols;
            for (auto& [r, c, s, coef] : second.full[a].entries) {
                if (r < roff || r >= roff + rows || c < coff || c >= coff + cols) continue;
                bool keep = false;
                int newsym = 0;
                for (size_t t = 0; t < symbols.size(); ++t)
                    if (symbols[t] == s) { keep = true; newsym = static_cast<int>(t) + 1; }
                if (!keep) continue;
                p.entries.push_back({r - roff, c - coff, newsym, coef});
                f.num_symbols = std::max(f.num_symbols, newsym);
            }
            f.per_arrow.push_back(p);
        }
        return f;
    };
    if (which == "33-N1") return slice(1, 8, 3, 6, {3});           // A_ir
    if (which == "33-N2") return slice(9, 10, 3, 6, {4});          // A_id
    if (which == "33-N3") return slice(1, 8, 0, 9, {2, 3});        // [A_il A_ir]
    if (which == "33-N4") return slice(1, 18, 0, 9, {2, 3, 4});    // [[A_il,A_ir],[0,A_id]]
    if (which == "33-N5") return slice(0, 19, 0, 9, {1, 2, 3, 4}); // full
    throw std::invalid_argument("proposition_pattern: unknown " + which);
}

// P:32 patterns: N_1 = the B_1 blocks (3x3), N_2 = the B_2 blocks (6x3) of
// the first GL component of K_3.
inline MatrixFamily p32_n1() {
    MatrixFamily f;
    f.name = "P:32 N1";
    f.base = kq(3);
    f.num_symbols = 1;
    MatrixFamily first = k3_gl_first();
    for (int a = 0; a < 3; ++a) {
        SymbolPattern p;
        p.rows = 3;
        p.cols = 3;
        for (auto& [r, c, s, coef] : first.per_arrow[a].entries)
            if (s == 1) p.entries.push_back({r, c, 1, coef});
        f.per_arrow.push_back(p);
    }
    return f;
}

inline MatrixFamily p32_n2() {
    MatrixFamily f;
    f.name = "P:32 N2";
    f.base = kq(3);
    f.num_symbols = 1;
    MatrixFamily first = k3_gl_first();
    for (int a = 0; a < 3; ++a) {
        SymbolPattern p;
        p.rows = 6;
        p.cols = 3;
        for (auto& [r, c, s, coef] : first.per_arrow[a].entries)
            if (s == 2) p.entries.push_back({r - 3, c, 1, coef});
        f.per_arrow.push_back(p);
    }
    return f;
}

// P:42 patterns: the two halves of the K_4 family.
inline MatrixFamily p42_n(int which) {
    MatrixFamily f;
    f.name = "P:42 N" + std::to_string(which);
    f.base = kq(4);
    f.num_symbols = 1;
    MatrixFamily first = k4_gl_first();
    for (int a = 0; a < 4; ++a) {
        SymbolPattern p;
        p.rows = which == 1 ? 6 : 10;
        p.cols = 4;
        for (auto& [r, c, s, coef] : first.per_arrow[a].entries)
            if (s == which) p.entries.push_back({which == 1 ? r : r - 6, c, 1, coef});
        f.per_arrow.push_back(p);
    }
    return f;
}

// P:233 patterns: the two halves of the symmetric-square family.
inline MatrixFamily p233_n(int which) {
    MatrixFamily f;
    f.name = "P:233 N" + std::to_string(which);
    f.base = kq(3);
    f.num_symbols = 1;
    MatrixFamily first = k3_s2w_first();
    for (int a = 0; a < 3; ++a) {
        SymbolPattern p;
        p.rows = which == 1 ? 2 : 4;
        p.cols = 2;
        for (auto& [r, c, s, coef] : first.per_arrow[a].entries)
            if (s == which) p.entries.push_back({which == 1 ? r : r - 2, c, 1, coef});
        f.per_arrow.push_back(p);
    }
    return f;
}

}  // namespace fixtures
}  // namespace qsmash
