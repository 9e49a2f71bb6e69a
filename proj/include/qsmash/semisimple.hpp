#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsmash/matrix.hpp"

namespace qsmash {

// A subalgebra of Mat_N(Q) given by a linearly independent basis (column
// convention). The faithful realization is what all decompositions run on.
struct MatrixAlgebra {
    int ambient = 0;
    std::vector<RatMatrix> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

namespace detail {

inline RatMatrix basis_rows(const std::vector<RatMatrix>& basis, int ambient) {
    RatMatrix rows(static_cast<int>(basis.size()), ambient * ambient);
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& f = basis[i].flat();
        for (size_t j = 0; j < f.size(); ++j) rows(static_cast<int>(i), static_cast<int>(j)) = f[j];
    }
    return rows;
}

inline RatMatrix flat_row(const RatMatrix& m) {
    RatMatrix r(1, m.rows() * m.cols());
    for (size_t j = 0; j < m.flat().size(); ++j) r(0, static_cast<int>(j)) = m.flat()[j];
    return r;
}

inline RatMatrix from_coords(const std::vector<RatMatrix>& basis, int ambient,
                             const std::vector<Rat>& c) {
    RatMatrix x(ambient, ambient);
    for (size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) x += basis[i].scaled(c[i]);
    return x;
}

// Polynomials as coefficient vectors, lowest degree first.
using Poly = std::vector<Rat>;

inline Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly_trim(c);
}

// Division with remainder; q and r with a = q*b + r, deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    Poly q;
    a = poly_trim(a);
    Poly bb = poly_trim(b);
    if (bb.empty()) throw std::invalid_argument("poly_divmod: division by zero");
    if (a.size() >= bb.size()) q.assign(a.size() - bb.size() + 1, Rat(0));
    while (a.size() >= bb.size() && !a.empty()) {
        Rat f = a.back() / bb.back();
        size_t shift = a.size() - bb.size();
        q[shift] = f;
        for (size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
        a = poly_trim(a);
    }
    return {poly_trim(q), a};
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> poly_ext_gcd(Poly a, Poly b) {
    Poly r0 = poly_trim(a), r1 = poly_trim(b);
    Poly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = s0, t2 = t0;
        Poly qs = poly_mul(q, s1), qt = poly_mul(q, t1);
        s2.resize(std::max(s2.size(), qs.size()));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        t2.resize(std::max(t2.size(), qt.size()));
        for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        r0 = r1; r1 = r;
        s0 = s1; s1 = poly_trim(s2);
        t0 = t1; t1 = poly_trim(t2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rat lead = r0.back();
        for (Rat& c : r0) c /= lead;
        for (Rat& c : s0) c /= lead;
        for (Rat& c : t0) c /= lead;
    }
    return {r0, s0, t0};
}

// Monic minimal polynomial of a square matrix, by Krylov iteration on powers.
inline Poly minimal_polynomial(const RatMatrix& z) {
    int n = z.rows();
    std::vector<RatMatrix> powers{RatMatrix::identity(n)};
    while (true) {
        RatMatrix next = powers.back() * z;
        RatMatrix rows(static_cast<int>(powers.size()), n * n);
        for (size_t p = 0; p < powers.size(); ++p)
            for (int j = 0; j < n * n; ++j) rows(static_cast<int>(p), j) = powers[p].flat()[j];
        auto sol = solve_left(rows, flat_row(next));
        if (sol.has_value()) {
            Poly mp(powers.size() + 1);
            mp[powers.size()] = 1;
            for (size_t i = 0; i < powers.size(); ++i) mp[i] = -(*sol)(0, static_cast<int>(i));
            return mp;
        }
        powers.push_back(next);
        if (powers.size() > static_cast<size_t>(n) + 1)
            throw std::logic_error("minimal_polynomial: Krylov runaway");
    }
}

inline Rat poly_apply_to(const Poly& p, const RatMatrix& y, RatMatrix& out) {
    int n = y.rows();
    RatMatrix acc(n, n);
    RatMatrix power = RatMatrix::identity(n);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) acc += power.scaled(p[i]);
        if (i + 1 < p.size()) power = power * y;
    }
    out = acc;
    return 0;
}

// All rational roots of the minimal polynomial of y. The minimal polynomial
// of the denominator-cleared (integer) matrix is monic integer, so rational
// roots are integers inside the Gershgorin disc; a prime residue sieve finds
// the candidates and each is verified exactly.
inline std::vector<Rat> rational_eigenvalues(const RatMatrix& y, const Poly& minpoly) {
    int n = y.rows();
    Int den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) den = lcm(den, y(i, j).get_den());
    // minpoly of den*y: q(t) = den^k p(t/den), integer when p is the minimal
    // polynomial of a matrix that clears to integers
    size_t k = minpoly.size() - 1;
    std::vector<Int> q(minpoly.size());
    Int scale = 1;
    for (size_t i = 0; i <= k; ++i) {
        Rat c = minpoly[k - i] * Rat(scale);
        if (!is_integer(c)) return {};
        q[k - i] = c.get_num();
        scale *= den;
    }
    Int bound = 0;
    for (int i = 0; i < n; ++i) {
        Rat row = 0;
        for (int j = 0; j < n; ++j) row += abs(y(i, j) * Rat(den));
        Int ceil_row = row.get_num() / row.get_den() + 1;
        if (ceil_row > bound) bound = ceil_row;
    }
    const long primes[] = {9973, 9967, 9949, 9931, 9923};
    std::vector<Int> candidates{Int(0)};
    Int modulus = 1;
    for (long p : primes) {
        std::vector<long> residues;
        for (long r = 0; r < p; ++r) {
            long v = 0;
            for (size_t i = q.size(); i-- > 0;) {
                Int term = (Int(v) * r + q[i]) % p;
                v = static_cast<long>(term.get_si());
                if (v < 0) v += p;
            }
            if (v == 0) residues.push_back(r);
        }
        // inverse of modulus mod p by extended euclid
        long mred;
        {
            Int t = modulus % p;
            mred = static_cast<long>(t.get_si());
        }
        long s0 = 1, s1 = 0, a0 = mred, a1 = p;
        while (a1 != 0) {
            long quot = a0 / a1;
            long tmp = a0 - quot * a1;
            a0 = a1; a1 = tmp;
            tmp = s0 - quot * s1;
            s0 = s1; s1 = tmp;
        }
        long minv = s0 % p;
        if (minv < 0) minv += p;
        std::vector<Int> next;
        for (const Int& c : candidates)
            for (long r : residues) {
                Int diff = (Int(r) - c) % p;
                Int t = diff * minv % p;
                if (t < 0) t += p;
                next.push_back(c + modulus * t);
            }
        candidates = std::move(next);
        modulus *= p;
        if (modulus > 2 * bound + 1) break;
        if (candidates.empty()) break;
    }
    if (modulus <= 2 * bound + 1) return {};
    std::vector<Rat> roots;
    std::set<Int> seen;
    for (const Int& c : candidates) {
        Int t = c % modulus;
        if (t > modulus / 2) t -= modulus;
        if (t < 0 && -t > modulus / 2) t += modulus;
        if (abs(t) > bound) continue;
        if (seen.count(t)) continue;
        seen.insert(t);
        Int v = 0;
        for (size_t i = q.size(); i-- > 0;) v = v * t + q[i];
        if (v == 0) roots.push_back(rat(t, den));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

inline void check_closed(const MatrixAlgebra& alg) {
    SpanBuilder span(alg.ambient * alg.ambient);
    for (const RatMatrix& b : alg.basis)
        if (!span.add(b.flat()))
            throw std::invalid_argument("MatrixAlgebra: basis not linearly independent");
    for (const RatMatrix& a : alg.basis)
        for (const RatMatrix& b : alg.basis)
            if (!span.contains((a * b).flat()))
                throw std::invalid_argument("MatrixAlgebra: basis not closed under product");
}

// Multiplicative identity of the algebra (not necessarily the ambient one).
inline RatMatrix algebra_identity(const MatrixAlgebra& alg) {
    int n = alg.dim();
    int amb2 = alg.ambient * alg.ambient;
    RatMatrix sys(n, 2 * n * amb2), rhs(1, 2 * n * amb2);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            RatMatrix left = alg.basis[i] * alg.basis[k];
            RatMatrix right = alg.basis[k] * alg.basis[i];
            for (int j = 0; j < amb2; ++j) {
                sys(i, k * amb2 + j) = left.flat()[j];
                sys(i, (n + k) * amb2 + j) = right.flat()[j];
            }
        }
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < amb2; ++j) {
            rhs(0, k * amb2 + j) = alg.basis[k].flat()[j];
            rhs(0, (n + k) * amb2 + j) = alg.basis[k].flat()[j];
        }
    auto sol = solve_left(sys, rhs);
    if (!sol) throw std::invalid_argument("algebra_identity: algebra has no identity");
    return detail::from_coords(alg.basis, alg.ambient, sol->row(0));
}

// Radical = kernel of the trace form (x,y) -> trace(xy) on the faithful
// realization; valid in characteristic 0. Returns a basis.
inline std::vector<RatMatrix> radical(const MatrixAlgebra& alg) {
    int n = alg.dim();
    RatMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = (alg.basis[i] * alg.basis[j]).trace();
    RatMatrix k = kernel_basis(gram);
    std::vector<RatMatrix> rad;
    for (int i = 0; i < k.rows(); ++i) rad.push_back(detail::from_coords(alg.basis, alg.ambient, k.row(i)));
    return rad;
}

namespace detail {

// A corner algebra e A e with identity element `unit`, carried as an explicit
// basis on the shared ambient space.
struct Corner {
    int ambient;
    RatMatrix unit;
    std::vector<RatMatrix> basis;
};

inline Corner corner_of(const std::vector<RatMatrix>& basis, int ambient, const RatMatrix& e) {
    Corner c{ambient, e, {}};
    SpanBuilder span(ambient * ambient);
    for (const RatMatrix& b : basis) {
        RatMatrix x = e * b * e;
        if (span.add(x.flat())) c.basis.push_back(x);
    }
    return c;
}

inline int radical_dim(const Corner& c) {
    int n = static_cast<int>(c.basis.size());
    RatMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = (c.basis[i] * c.basis[j]).trace();
    return n - rank(gram);
}

// Elements commuting with the whole corner modulo its radical; returns
// coordinate rows in the corner basis (the strict center when rad = 0).
inline std::vector<std::vector<Rat>> central_coords(const Corner& c) {
    int n = static_cast<int>(c.basis.size());
    int amb2 = c.ambient * c.ambient;
    // radical span for the mod-rad condition
    RatMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = (c.basis[i] * c.basis[j]).trace();
    RatMatrix radc = kernel_basis(gram);
    SpanBuilder rad_span(amb2);
    for (int i = 0; i < radc.rows(); ++i)
        rad_span.add(from_coords(c.basis, c.ambient, radc.row(i)).flat());

    RatMatrix sys(n, n * amb2);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            RatMatrix comm = c.basis[i] * c.basis[k] - c.basis[k] * c.basis[i];
            // condition: commutator vanishes modulo the radical
            std::vector<Rat> v = rad_span.residual(comm.flat());
            for (int j = 0; j < amb2; ++j) sys(i, k * amb2 + j) = v[j];
        }
    RatMatrix ker = kernel_basis(sys);
    std::vector<std::vector<Rat>> out;
    for (int i = 0; i < ker.rows(); ++i) out.push_back(ker.row(i));
    return out;
}

// One split: produce a nontrivial idempotent of the corner from an element
// with at least one rational eigenvalue separating the spectrum, via the
// CRT idempotent of the minimal polynomial. Returns nullopt if y separates
// nothing.
inline std::optional<RatMatrix> crt_split(const Corner& c, const RatMatrix& y) {
    Poly p = minimal_polynomial(y);
    if (p.size() <= 2) return std::nullopt;  // scalar on the corner
    std::vector<Rat> roots = rational_eigenvalues(y, p);
    for (const Rat& r : roots) {
        if (r == 0) continue;  // the 0-clump contains the off-corner ambient part
        // A = (t-r)^e, B = p/A
        Poly lin{-r, Rat(1)};
        Poly a{Rat(1)};
        Poly rest = p;
        while (true) {
            auto [q, rem] = poly_divmod(rest, lin);
            if (!rem.empty()) break;
            rest = q;
            a = poly_mul(a, lin);
        }
        if (rest.size() <= 1) continue;  // y has only this eigenvalue on the corner
        auto [g, u, v] = poly_ext_gcd(a, rest);
        if (g.size() != 1) continue;  // not coprime (cannot happen)
        // f = v * rest: f == 1 mod A, 0 mod B
        Poly f = poly_mul(v, rest);
        auto [q2, f_red] = poly_divmod(f, p);
        RatMatrix e(c.ambient, c.ambient);
        poly_apply_to(f_red, y, e);
        // Constant term acts by the ambient identity; restrict it to the corner.
        if (!f_red.empty() && f_red[0] != 0)
            e = e + c.unit.scaled(f_red[0]) - RatMatrix::identity(c.ambient).scaled(f_red[0]);
        e = c.unit * e * c.unit;
        if (!(e * e == e)) continue;
        if (e.is_zero() || e == c.unit) continue;
        return e;
    }
    return std::nullopt;
}

// Try to exhibit the corner as a full matrix algebra acting on a simple
// module generated by one vector; on success returns the diagonal matrix
// units. Requires a semisimple single-block corner and a rank-one vector.
inline std::optional<std::vector<RatMatrix>> module_units(const Corner& c, Rng& rng,
                                                          std::vector<RatMatrix>* full_units) {
    int bdim = static_cast<int>(c.basis.size());
    int amb = c.ambient;
    std::vector<RatMatrix> candidates;
    for (int j = 0; j < amb; ++j) {
        bool nz = false;
        for (int i = 0; i < amb; ++i)
            if (c.unit(i, j) != 0) { nz = true; break; }
        if (!nz) continue;
        RatMatrix v(amb, 1);
        for (int i = 0; i < amb; ++i) v(i, 0) = c.unit(i, j);
        candidates.push_back(v);
    }
    for (int t = 0; t < 8; ++t) {
        RatMatrix w = random_matrix(rng, amb, 1, 3);
        candidates.push_back(c.unit * w);
    }
    for (const RatMatrix& vec : candidates) {
        SpanBuilder uspan(amb);
        std::vector<RatMatrix> ubasis;
        for (const RatMatrix& b : c.basis) {
            RatMatrix bv = b * vec;
            std::vector<Rat> fl(amb);
            for (int i = 0; i < amb; ++i) fl[i] = bv(i, 0);
            if (uspan.add(fl)) ubasis.push_back(bv);
        }
        int d = static_cast<int>(ubasis.size());
        if (d == 0 || d * d != bdim) continue;
        // Solve E^{ij} u_k = delta_{jk} u_i inside the corner.
        RatMatrix sys(bdim, d * amb);
        for (int t2 = 0; t2 < bdim; ++t2)
            for (int k = 0; k < d; ++k) {
                RatMatrix bu = c.basis[t2] * ubasis[k];
                for (int i = 0; i < amb; ++i) sys(t2, k * amb + i) = bu(i, 0);
            }
        std::vector<RatMatrix> units;
        bool ok = true;
        for (int i = 1; i <= d && ok; ++i)
            for (int j = 1; j <= d && ok; ++j) {
                RatMatrix rhs(1, d * amb);
                for (int row = 0; row < amb; ++row)
                    rhs(0, (j - 1) * amb + row) = ubasis[i - 1](row, 0);
                auto sol = solve_left(sys, rhs);
                if (!sol) { ok = false; break; }
                units.push_back(from_coords(c.basis, amb, sol->row(0)));
            }
        if (!ok) continue;
        // Validate the unit relations; failure means the module was not simple.
        RatMatrix sum(amb, amb);
        for (int i = 0; i < d; ++i) sum += units[i * d + i];
        if (!(sum == c.unit)) continue;
        bool rel = true;
        for (int i = 0; i < d && rel; ++i)
            for (int j = 0; j < d && rel; ++j) {
                RatMatrix prod = units[i * d + j] * units[j * d + i];
                if (!(prod == units[i * d + i])) rel = false;
            }
        if (!rel) continue;
        if (full_units) *full_units = units;
        std::vector<RatMatrix> diag;
        for (int i = 0; i < d; ++i) diag.push_back(units[i * d + i]);
        return diag;
    }
    return std::nullopt;
}

// Complete family of orthogonal idempotents of the corner, each primitive
// (local corner). Radical is allowed: splitting elements are taken central
// modulo the radical, whose spectra are rational for algebras split over Q.
inline void primitive_family(const Corner& c, Rng& rng, std::vector<RatMatrix>& out, int depth) {
    if (depth > 64) throw std::logic_error("primitive_family: recursion runaway");
    int n = static_cast<int>(c.basis.size());
    if (n == 0) return;
    int raddim = radical_dim(c);
    if (n - raddim == 1) {  // local corner: primitive idempotent
        out.push_back(c.unit);
        return;
    }

    auto recurse_pair = [&](const RatMatrix& e) {
        Corner c1 = corner_of(c.basis, c.ambient, e);
        RatMatrix f = c.unit - e;
        Corner c2 = corner_of(c.basis, c.ambient, f);
        primitive_family(c1, rng, out, depth + 1);
        primitive_family(c2, rng, out, depth + 1);
    };

    // Elements central mod radical separate the blocks; their spectra are
    // rational whenever the algebra is split, so the CRT split succeeds.
    auto centrals = central_coords(c);
    if (centrals.size() > 1) {
        for (int attempt = 0; attempt < 20; ++attempt) {
            std::vector<Rat> coef(centrals.size());
            for (size_t i = 0; i < centrals.size(); ++i) coef[i] = rng.rat_in(4 + attempt);
            std::vector<Rat> yc(n);
            for (size_t i = 0; i < centrals.size(); ++i)
                for (int k = 0; k < n; ++k) yc[k] += coef[i] * centrals[i][k];
            RatMatrix y = from_coords(c.basis, c.ambient, yc);
            auto e = crt_split(c, y);
            if (e) { recurse_pair(*e); return; }
        }
    }

    // Single block. Semisimple corners may expose the simple module directly.
    if (raddim == 0) {
        std::vector<RatMatrix> full;
        auto diag = module_units(c, rng, &full);
        if (diag) {
            for (const RatMatrix& e : *diag) out.push_back(e);
            return;
        }
    }

    // Fall back to elements with partially rational spectrum (basis elements
    // of finite order, idempotent-like elements, seeded random combinations).
    for (const RatMatrix& b : c.basis) {
        auto e = crt_split(c, b);
        if (e) { recurse_pair(*e); return; }
    }
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Rat> yc(n);
        for (int k = 0; k < n; ++k) yc[k] = rng.rat_in(3 + attempt);
        RatMatrix y = from_coords(c.basis, c.ambient, yc);
        auto e = crt_split(c, y);
        if (e) { recurse_pair(*e); return; }
    }
    throw std::domain_error(
        "primitive_family: could not split a matrix block over the rationals "
        "(block may be non-split, or no rank-one module vector was found)");
}

}  // namespace detail

struct SemisimpleBlock {
    std::string label;
    RatMatrix central_idempotent;
    int matrix_size = 0;                             // d for a Mat_d block
    std::vector<RatMatrix> diag_units;               // e^{11},...,e^{dd}
    std::map<std::pair<int, int>, RatMatrix> units;  // 1-based (i,j) -> e^{ij}
};

struct SemisimpleDecomposition {
    std::vector<SemisimpleBlock> blocks;

    std::vector<RatMatrix> primitive_idempotents() const {
        std::vector<RatMatrix> out;
        for (const auto& b : blocks)
            for (const auto& e : b.diag_units) out.push_back(e);
        return out;
    }
};

// Given primitive orthogonal idempotents grouped into one block, produce the
// full matrix-unit family with e^{11} the first idempotent of the group.
// Exact linear solves inside the corner spaces e_1 S e_i.
inline std::map<std::pair<int, int>, RatMatrix> matrix_units_from(
    const std::vector<RatMatrix>& idems, const MatrixAlgebra& alg) {
    int d = static_cast<int>(idems.size());
    if (d == 0) throw std::invalid_argument("matrix_units_from: empty block");
    std::map<std::pair<int, int>, RatMatrix> units;
    const RatMatrix& e1 = idems[0];
    std::vector<RatMatrix> u(d), v(d);
    u[0] = e1;
    v[0] = e1;
    for (int i = 1; i < d; ++i) {
        std::optional<RatMatrix> cand;
        for (const RatMatrix& b : alg.basis) {
            RatMatrix x = e1 * b * idems[i];
            if (!x.is_zero()) { cand = x; break; }
        }
        if (!cand)
            throw std::domain_error("matrix_units_from: e1 S e_i = 0; inconsistent grouping");
        u[i] = *cand;
        // w in e_i S e1 with u_i w = e1.
        bool ok = false;
        for (const RatMatrix& b : alg.basis) {
            RatMatrix w = idems[i] * b * e1;
            if (w.is_zero()) continue;
            RatMatrix prod = u[i] * w;
            Rat cscale;
            bool scalar = true, set = false;
            for (int r = 0; r < alg.ambient && scalar; ++r)
                for (int s = 0; s < alg.ambient; ++s) {
                    if (e1(r, s) != 0) {
                        Rat ratio = prod(r, s) / e1(r, s);
                        if (!set) { cscale = ratio; set = true; }
                        else if (ratio != cscale) { scalar = false; break; }
                    } else if (prod(r, s) != 0) { scalar = false; break; }
                }
            if (!scalar || !set || cscale == 0) continue;
            v[i] = w.scaled(rat(1) / cscale);
            ok = true;
            break;
        }
        if (!ok)
            throw std::domain_error("matrix_units_from: could not normalize corner element");
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) units[{i + 1, j + 1}] = v[i] * u[j];
    return units;
}

using BlockLabeler = std::function<std::string(int block_index, const SemisimpleBlock&)>;

// Wedderburn decomposition of a split semisimple matrix algebra: central
// idempotents from a random central element (its minimal polynomial splits
// into distinct rational roots exactly when the element separates blocks,
// and the Lagrange projections are the central idempotents), then primitive
// refinement and matrix units inside each block.
inline SemisimpleDecomposition decompose(const MatrixAlgebra& alg, std::uint64_t seed = 1,
                                         const BlockLabeler& labeler = nullptr) {
    if (!radical(alg).empty())
        throw std::domain_error("decompose: algebra has nonzero radical");
    RatMatrix one = algebra_identity(alg);
    Rng rng(seed);

    detail::Corner whole{alg.ambient, one, {}};
    {
        SpanBuilder span(alg.ambient * alg.ambient);
        for (const RatMatrix& b : alg.basis)
            if (span.add(b.flat())) whole.basis.push_back(b);
    }

    // Central idempotents.
    std::vector<RatMatrix> central_idems;
    auto centrals = detail::central_coords(whole);
    if (centrals.size() == 1) {
        central_idems.push_back(one);
    } else {
        bool found = false;
        for (int attempt = 0; attempt < 20 && !found; ++attempt) {
            std::vector<Rat> coef(centrals.size());
            for (size_t i = 0; i < centrals.size(); ++i) coef[i] = rng.rat_in(5 + attempt);
            std::vector<Rat> zc(whole.basis.size());
            for (size_t i = 0; i < centrals.size(); ++i)
                for (size_t k = 0; k < zc.size(); ++k) zc[k] += coef[i] * centrals[i][k];
            RatMatrix z = detail::from_coords(whole.basis, alg.ambient, zc);
            detail::Poly p = detail::minimal_polynomial(z);
            std::vector<Rat> roots = detail::rational_eigenvalues(z, p);
            if (roots.size() + 1 != p.size() || roots.size() != centrals.size()) continue;
            central_idems.clear();
            for (size_t i = 0; i < roots.size(); ++i) {
                RatMatrix e = one;
                for (size_t j = 0; j < roots.size(); ++j) {
                    if (i == j) continue;
                    RatMatrix zt = z - one.scaled(roots[j]);
                    e = e * zt.scaled(rat(1) / (roots[i] - roots[j]));
                }
                central_idems.push_back(e);
            }
            found = true;
        }
        if (!found)
            throw std::domain_error(
                "decompose: no random central element split over the rationals (non-split "
                "block?)");
    }

    SemisimpleDecomposition dec;
    for (const RatMatrix& z : central_idems) {
        detail::Corner blk = detail::corner_of(whole.basis, alg.ambient, z);
        SemisimpleBlock block;
        block.central_idempotent = z;

        std::vector<RatMatrix> prims;
        detail::primitive_family(blk, rng, prims, 0);
        block.matrix_size = static_cast<int>(prims.size());
        int bdim = static_cast<int>(blk.basis.size());
        if (block.matrix_size * block.matrix_size != bdim)
            throw std::domain_error("decompose: block is not split over the rationals");

        MatrixAlgebra blk_alg{alg.ambient, blk.basis};
        auto units = matrix_units_from(prims, blk_alg);
        for (auto& [ij, e] : units) block.units[ij] = e;
        for (int i = 1; i <= block.matrix_size; ++i) block.diag_units.push_back(block.units.at({i, i}));
        dec.blocks.push_back(std::move(block));
    }

    for (size_t bi = 0; bi < dec.blocks.size(); ++bi) {
        if (labeler)
            dec.blocks[bi].label = labeler(static_cast<int>(bi), dec.blocks[bi]);
        else
            dec.blocks[bi].label =
                "d" + std::to_string(dec.blocks[bi].matrix_size) + "#" + std::to_string(bi);
    }
    return dec;
}

// Complete set of orthogonal idempotents of a possibly non-semisimple
// algebra (the endomorphism algebra of a representation, typically), each
// primitive, obtained by splitting modulo the radical and lifting: the CRT
// idempotents of elements central mod radical are exact idempotents already,
// and remaining corners are handled by the same machinery.
inline std::vector<RatMatrix> idempotents_in_end(const MatrixAlgebra& alg, std::uint64_t seed = 1) {
    RatMatrix one = algebra_identity(alg);
    Rng rng(seed);
    detail::Corner whole{alg.ambient, one, {}};
    {
        SpanBuilder span(alg.ambient * alg.ambient);
        for (const RatMatrix& b : alg.basis)
            if (span.add(b.flat())) whole.basis.push_back(b);
    }
    std::vector<RatMatrix> out;
    detail::primitive_family(whole, rng, out, 0);
    // Family invariants.
    RatMatrix sum(alg.ambient, alg.ambient);
    for (const RatMatrix& e : out) sum += e;
    if (!(sum == one)) throw std::logic_error("idempotents_in_end: family does not sum to 1");
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j)
            if (i != j && !(out[i] * out[j]).is_zero())
                throw std::logic_error("idempotents_in_end: family not orthogonal");
    return out;
}

}  // namespace qsmash
