#include <catch2/catch_amalgamated.hpp>

#include "qsmash/qg.hpp"

using namespace qsmash;

namespace {

FiniteAction kronecker_action(int n) {
    FiniteAction act;
    act.letters = n;
    std::vector<Permutation> gens;
    if (n >= 2) gens.push_back(transposition(n, 0, 1));
    if (n >= 3) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = i;
        gens.push_back(cycle(n, c));
    }
    for (const Permutation& p : gens) {
        ActionGenerator g;
        g.perm = p;
        g.vertex_map = {0, 1};
        RatMatrix m(n, n);
        for (int j = 0; j < n; ++j) m(p(j), j) = 1;
        g.arrow_matrix = m;
        act.generators.push_back(g);
    }
    return act;
}

FiniteAction subspace_action(int n) {
    FiniteAction act;
    act.letters = n;
    std::vector<Permutation> gens{transposition(n, 0, 1)};
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    gens.push_back(cycle(n, c));
    for (const Permutation& p : gens) {
        ActionGenerator g;
        g.perm = p;
        g.vertex_map.resize(n + 1);
        for (int v = 0; v < n; ++v) g.vertex_map[v] = p(v);
        g.vertex_map[n] = n;
        RatMatrix m(n, n);
        for (int j = 0; j < n; ++j) m(p(j), j) = 1;
        g.arrow_matrix = m;
        act.generators.push_back(g);
    }
    return act;
}

GlDatum natural_gl(int n) {
    GlDatum d;
    d.n = n;
    d.arrow_modules[{0, 1}] = {{1}};
    return d;
}

}  // namespace

TEST_CASE("finite Q_G of the subspace quiver") {
    auto q = std::make_shared<const Quiver>(subspace_quiver(4));
    QGQuiver qg = build_qg_finite(q, {subspace_action(4)});
    // 3 partitions of 3 plus 5 partitions of 4
    CHECK(qg.quiver.num_vertices() == 8);
    // arrows are pieri indicators
    long arrows = 0;
    for (const Partition& rho : partitions_of(3))
        for (const Partition& sigma : partitions_of(4)) {
            long mult = qg.bundle_multiplicity(qg.vertex_of({0, rho, {}, false}),
                                               qg.vertex_of({4, sigma, {}, false}));
            CHECK(mult == lr_coefficient(rho, {1}, sigma));
            arrows += mult;
        }
    CHECK(arrows == qg.quiver.num_arrows());
    CHECK(arrows == 7);
}

TEST_CASE("finite Q_G of kronecker quivers") {
    for (int n : {2, 3}) {
        auto q = std::make_shared<const Quiver>(kronecker_quiver(n));
        QGQuiver qg = build_qg_finite(q, {kronecker_action(n)});
        long np = static_cast<long>(partitions_of(n).size());
        CHECK(qg.quiver.num_vertices() == 2 * np);
        for (const Partition& rho : partitions_of(n))
            for (const Partition& sigma : partitions_of(n)) {
                long expected = kronecker(rho, {n - 1, 1}, sigma) + (rho == sigma ? 1 : 0);
                CHECK(qg.bundle_multiplicity(qg.vertex_of({0, rho, {}, false}),
                                             qg.vertex_of({1, sigma, {}, false})) == expected);
            }
    }
    // K_2 has the four single arrows of the printed example
    auto q2 = std::make_shared<const Quiver>(kronecker_quiver(2));
    QGQuiver qg2 = build_qg_finite(q2, {kronecker_action(2)});
    CHECK(qg2.quiver.num_arrows() == 4);
}

TEST_CASE("trivial group gives back the quiver") {
    auto q = std::make_shared<const Quiver>(subspace_quiver(2));
    FiniteAction trivial;
    trivial.letters = 1;
    QGQuiver qg = build_qg_finite(q, {trivial});
    CHECK(qg.quiver.num_vertices() == q->num_vertices());
    CHECK(qg.quiver.num_arrows() == q->num_arrows());
}

TEST_CASE("wedderburn count: sum of squared label dims is the stabilizer order") {
    auto q = std::make_shared<const Quiver>(subspace_quiver(4));
    QGQuiver qg = build_qg_finite(q, {subspace_action(4)});
    std::map<int, long> sum;
    for (size_t i = 0; i < qg.labels.size(); ++i)
        sum[qg.labels[i].base_vertex] += qg.label_dim[i] * qg.label_dim[i];
    CHECK(sum[0] == 6);   // S_3
    CHECK(sum[4] == 24);  // S_4
}

TEST_CASE("first GL component of K_n is the printed 3-vertex quiver") {
    for (int n : {2, 3, 4}) {
        auto q = std::make_shared<const Quiver>(kronecker_quiver(n));
        QGQuiver comp = gl_component(q, natural_gl(n), 1, {1});
        REQUIRE(comp.quiver.num_vertices() == 3);
        CHECK(comp.quiver.num_arrows() == 2);
        int v11 = comp.vertex_of({0, {1, 1}, {}, false});
        int v2 = comp.vertex_of({0, {2}, {}, false});
        int w = comp.vertex_of({1, {1}, {}, false});
        CHECK(comp.bundle_multiplicity(v11, w) == 1);
        CHECK(comp.bundle_multiplicity(v2, w) == 1);
    }
}

TEST_CASE("second GL component of K_3 is the printed 5-vertex quiver") {
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    QGQuiver comp = gl_component(q, natural_gl(3), 1, {2});
    REQUIRE(comp.quiver.num_vertices() == 5);
    CHECK(comp.quiver.num_arrows() == 4);
    int s111 = comp.vertex_of({0, {1, 1, 1}, {}, false});
    int s21 = comp.vertex_of({0, {2, 1}, {}, false});
    int s3 = comp.vertex_of({0, {3}, {}, false});
    int t11 = comp.vertex_of({1, {1, 1}, {}, false});
    int t2 = comp.vertex_of({1, {2}, {}, false});
    CHECK(comp.bundle_multiplicity(s111, t11) == 1);
    CHECK(comp.bundle_multiplicity(s21, t11) == 1);
    CHECK(comp.bundle_multiplicity(s21, t2) == 1);
    CHECK(comp.bundle_multiplicity(s3, t2) == 1);
}

TEST_CASE("third GL component of K_3 has E7 vertex and arrow counts") {
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    QGQuiver comp = gl_component(q, natural_gl(3), 1, {2, 1});
    CHECK(comp.quiver.num_vertices() == 7);
    CHECK(comp.quiver.num_arrows() == 6);
    // it is a tree with degree sequence of E7
    std::vector<int> deg(7, 0);
    for (const Arrow& a : comp.quiver.arrows) {
        ++deg[a.tail];
        ++deg[a.head];
    }
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
    CHECK(is_finite_type(comp.quiver));
}

TEST_CASE("K_3 with the symmetric square action of GL_2") {
    GlDatum d;
    d.n = 2;
    d.arrow_modules[{0, 1}] = {{2}};
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    validate_gl_datum(*q, d);
    QGQuiver comp = gl_component(q, d, 1, {1});
    REQUIRE(comp.quiver.num_vertices() == 3);
    int s21 = comp.vertex_of({0, {2, 1}, {}, false});
    int s3 = comp.vertex_of({0, {3}, {}, false});
    int w = comp.vertex_of({1, {1}, {}, false});
    CHECK(comp.bundle_multiplicity(s21, w) == 1);
    CHECK(comp.bundle_multiplicity(s3, w) == 1);
}

TEST_CASE("torus layer: universal abelian cover") {
    // loop quiver: one vertex, one loop, weight 1 -> A_infinity strip segments
    Quiver loop;
    loop.vertices = {"1"};
    loop.arrows = {{"a", 0, 0}};
    TorusDatum d{1, {{1}}};
    QGQuiver qg = build_qg_torus(std::make_shared<const Quiver>(loop), d, 3);
    CHECK(qg.quiver.num_vertices() == 7);
    CHECK(qg.quiver.num_arrows() == 6);  // path segment within the window

    // zero weights: Q x single label per window cell, disconnected copies
    TorusDatum z{1, {{0}}};
    auto k2 = std::make_shared<const Quiver>(kronecker_quiver(1));
    QGQuiver qz = build_qg_torus(k2, z, 1);
    QGQuiver comp = component_of(qz, qz.vertex_of({0, {}, {0}, true}));
    CHECK(comp.quiver.num_vertices() == 2);
    CHECK(comp.quiver.num_arrows() == 1);

    // distinct weights on K_2 give a tree pattern within the window
    TorusDatum d2{1, {{1}, {-1}}};
    auto kq = std::make_shared<const Quiver>(kronecker_quiver(2));
    QGQuiver q2 = build_qg_torus(kq, d2, 2);
    QGQuiver c2 = component_of(q2, q2.vertex_of({0, {}, {0}, true}));
    CHECK(c2.quiver.num_arrows() == c2.quiver.num_vertices() - 1);  // tree
}

TEST_CASE("r_map on the first GL component of K_3") {
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    QGQuiver comp = gl_component(q, natural_gl(3), 1, {1});
    int v11 = comp.vertex_of({0, {1, 1}, {}, false});
    int v2 = comp.vertex_of({0, {2}, {}, false});
    int w = comp.vertex_of({1, {1}, {}, false});
    DimVector beta(3, 0);
    beta[v11] = 1;
    CHECK(r_map(comp, beta) == DimVector{3, 0});
    beta[w] = 1;
    CHECK(r_map(comp, beta) == DimVector{3, 3});
    beta[v2] = 2;
    CHECK(r_map(comp, beta) == DimVector{3 + 12, 3});
    CHECK(r_map(comp, DimVector(3, 0)) == DimVector{0, 0});
}

TEST_CASE("r_map is additive") {
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    QGQuiver comp = gl_component(q, natural_gl(3), 1, {2});
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        DimVector b1(5), b2(5), sum(5);
        for (int i = 0; i < 5; ++i) {
            b1[i] = rng.uniform(0, 4);
            b2[i] = rng.uniform(0, 4);
            sum[i] = b1[i] + b2[i];
        }
        DimVector r1 = r_map(comp, b1), r2 = r_map(comp, b2), rs = r_map(comp, sum);
        for (size_t i = 0; i < r1.size(); ++i) CHECK(rs[i] == r1[i] + r2[i]);
    }
}

TEST_CASE("finite r_map spreads over the orbit") {
    auto q = std::make_shared<const Quiver>(subspace_quiver(4));
    QGQuiver qg = build_qg_finite(q, {subspace_action(4)});
    DimVector beta(qg.quiver.num_vertices(), 0);
    beta[qg.vertex_of({0, {2, 1}, {}, false})] = 1;  // dim 2 irrep of S_3
    DimVector alpha = r_map(qg, beta);
    CHECK(alpha == DimVector{2, 2, 2, 2, 0});
}

TEST_CASE("group action on representations is functorial") {
    // finite case
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    auto group = group_closure(kronecker_action(3), 2, 3);
    Representation m = random_rep(q, {2, 2}, 3, 4);
    for (size_t gi = 0; gi < group.size(); ++gi)
        for (size_t hi = 0; hi < group.size(); ++hi) {
            const GroupElement &g = group[gi], &h = group[hi];
            Representation lhs = group_act_rep_finite(h, group_act_rep_finite(g, m));
            GroupElement gh;
            gh.perm = g.perm * h.perm;
            gh.vertex_map.resize(2);
            for (int v = 0; v < 2; ++v) gh.vertex_map[v] = g.vertex_map[h.vertex_map[v]];
            gh.arrow_matrix = g.arrow_matrix * h.arrow_matrix;
            Representation rhs = group_act_rep_finite(gh, m);
            CHECK(lhs.matrices[0] == rhs.matrices[0]);
            CHECK(lhs.matrices[2] == rhs.matrices[2]);
        }

    // identity acts trivially; gl functoriality on random elements
    GlDatum d = natural_gl(3);
    Representation id_act = group_act_rep_gl(d, RatMatrix::identity(3), m);
    CHECK(id_act.matrices[0] == m.matrices[0]);
    Rng rng(9);
    RatMatrix g1 = random_invertible(rng, 3, 2);
    RatMatrix g2 = random_invertible(rng, 3, 2);
    Representation lhs = group_act_rep_gl(d, g1, group_act_rep_gl(d, g2, m));
    Representation rhs = group_act_rep_gl(d, g2 * g1, m);
    for (int a = 0; a < 3; ++a) CHECK(lhs.matrices[a] == rhs.matrices[a]);
}

TEST_CASE("finite swap action on K_2 exchanges arrow matrices") {
    auto q = std::make_shared<const Quiver>(kronecker_quiver(2));
    auto group = group_closure(kronecker_action(2), 2, 2);
    Representation m = random_rep(q, {1, 2}, 7, 3);
    const GroupElement* swap = nullptr;
    for (auto& g : group)
        if (!g.perm.is_identity()) swap = &g;
    REQUIRE(swap != nullptr);
    Representation sm = group_act_rep_finite(*swap, m);
    CHECK(sm.matrices[0] == m.matrices[1]);
    CHECK(sm.matrices[1] == m.matrices[0]);
}

TEST_CASE("g-root witness on the first GL component of K_3") {
    auto q = std::make_shared<const Quiver>(kronecker_quiver(3));
    QGQuiver comp = gl_component(q, natural_gl(3), 1, {1});
    auto w = g_root_witness(comp, {3, 3});
    REQUIRE(w.has_value());
    CHECK_FALSE(w->probabilistic);
    CHECK(r_map(comp, w->beta) == DimVector{3, 3});
    CHECK(tits_form(comp.quiver, w->beta) == 1);
    // beta = (1,0,1) in component coordinates
    long total = 0;
    for (long x : w->beta) total += x;
    CHECK(total == 2);

    CHECK_FALSE(g_root_witness(comp, {1, 0}).has_value());
    CHECK_FALSE(g_root_witness(comp, {2, 0}).has_value());
}

TEST_CASE("dynkin type checks") {
    CHECK(is_finite_type(kronecker_quiver(1)));
    CHECK_FALSE(is_finite_type(kronecker_quiver(2)));
    CHECK(is_tame_type(kronecker_quiver(2)));
    CHECK_FALSE(is_tame_type(kronecker_quiver(3)));
}
