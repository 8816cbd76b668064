#pragma once

#include <stdexcept>
#include <vector>

#include "cyclotome/bigint.hpp"
#include "cyclotome/intpoly.hpp"

namespace cyclotome {

/// Sturm chain of a squarefree polynomial, kept primitive over Z.
/// Sign-correct for root counting: each remainder is negated, and the
/// content division preserves signs.
struct SturmChain {
    std::vector<IntPoly> seq;

    explicit SturmChain(const IntPoly& p) {
        if (p.degree() <= 0) {
            if (!p.is_zero()) seq.push_back(p);
            return;
        }
        seq.push_back(p);
        seq.push_back(p.derivative());
        while (seq.back().degree() > 0) {
            const IntPoly& a = seq[seq.size() - 2];
            const IntPoly& b = seq.back();
            auto [r, t] = prem_counted(a, b);
            if (r.is_zero()) break;
            // r == lead(b)^t * (a mod b). The chain needs -(a mod b) up to a
            // positive factor, so flip unless lead(b)^t is negative.
            bool neg_scale = sgn(b.leading()) < 0 && (t % 2) == 1;
            IntPoly next = neg_scale ? r : -r;
            Int g = next.content();  // positive
            for (auto& v : next.c) v = idiv_exact(v, g);
            seq.push_back(std::move(next));
        }
        if (seq.back().is_zero()) seq.pop_back();
    }

    // (lead(b)^t * a mod b, t) without fractions; t = number of applied scalings
    static std::pair<IntPoly, int> prem_counted(const IntPoly& a, const IntPoly& b) {
        IntPoly r = a;
        const Int& lb = b.leading();
        int db = b.degree(), t = 0;
        while (!r.is_zero() && r.degree() >= db) {
            int k = r.degree() - db;
            Int f = r.leading();
            std::vector<Int> nr(r.c.size(), Int{0});
            for (size_t i = 0; i < r.c.size(); ++i) nr[i] = r.c[i] * lb;
            for (int i = 0; i <= db; ++i) nr[k + i] -= f * b.c[i];
            r = IntPoly(std::move(nr));
            ++t;
        }
        return {std::move(r), t};
    }

    static int sign_at(const IntPoly& p, const Rat& q) {
        // evaluate p(num/den) * den^deg exactly; den > 0 so sign matches p(q)
        Int num = q.get_num(), den = q.get_den();
        return sgn(p.eval_scaled(num, den));
    }

    int variations_at(const Rat& q) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_at(p, q);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at_minus_inf() const { return variations_at_inf(-1); }
    int variations_at_plus_inf() const { return variations_at_inf(+1); }

    /// Number of distinct real roots in (a, b].
    int count_roots(const Rat& a, const Rat& b) const {
        return variations_at(a) - variations_at(b);
    }

  private:
    int variations_at_inf(int dir) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sgn(p.leading());
            if (dir < 0 && p.degree() % 2 == 1) s = -s;
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }
};

/// Cauchy-style bound: all real roots of p lie in (-B, B).
inline Rat root_bound(const IntPoly& p) {
    if (p.degree() <= 0) return Rat(1);
    Int mx{0};
    for (int i = 0; i < p.degree(); ++i) {
        Int v = abs(p.c[i]);
        if (v > mx) mx = v;
    }
    Rat b = Rat(mx) / Rat(abs(p.leading()));
    return b + 1;
}

/// Exact multiplicity-aware root counter for (-inf, q], via Yun decomposition.
struct RootCounter {
    // squarefree factors f_i (exponent i+1) with their Sturm chains
    std::vector<std::pair<int, SturmChain>> parts;
    std::vector<IntPoly> factors;

    explicit RootCounter(const IntPoly& p) {
        if (p.is_zero()) throw std::invalid_argument("RootCounter: zero polynomial");
        auto sf = squarefree_decomposition(p);
        for (size_t i = 0; i < sf.size(); ++i) {
            if (sf[i].degree() <= 0) continue;
            parts.emplace_back(static_cast<int>(i) + 1, SturmChain(sf[i]));
            factors.push_back(sf[i]);
        }
    }

    /// Number of real roots (with multiplicity) that are <= q.
    int count_leq(const Rat& q) const {
        int total = 0;
        for (const auto& [mult, chain] : parts)
            total += mult * (chain.variations_at_minus_inf() - chain.variations_at(q));
        return total;
    }

    int total_real_roots() const {
        int total = 0;
        for (const auto& [mult, chain] : parts)
            total += mult * (chain.variations_at_minus_inf() - chain.variations_at_plus_inf());
        return total;
    }
};

/// Rational sample points separating all distinct real roots of p:
/// q_0 < r_1 < q_1 < r_2 < ... < r_m < q_m for distinct roots r_i.
inline std::vector<Rat> root_separators(const IntPoly& p) {
    IntPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return {Rat(0)};
    SturmChain chain(sf);
    Rat B = root_bound(sf);
    Rat lo = -B, hi = B;
    int total = chain.count_roots(lo, hi);
    std::vector<Rat> seps;
    seps.push_back(lo);
    // bisect until every interval (seps[i], seps[i+1]] holds exactly one root
    struct Iv { Rat a, b; int cnt; };
    std::vector<Iv> work{{lo, hi, total}}, done;
    while (!work.empty()) {
        Iv iv = work.back();
        work.pop_back();
        if (iv.cnt == 0) continue;
        if (iv.cnt == 1) {
            done.push_back(iv);
            continue;
        }
        Rat mid = (iv.a + iv.b) / 2;
        int left = chain.count_roots(iv.a, mid);
        work.push_back({iv.a, mid, left});
        work.push_back({mid, iv.b, iv.cnt - left});
    }
    std::sort(done.begin(), done.end(), [](const Iv& x, const Iv& y) { return x.a < y.a; });
    for (const auto& iv : done) seps.push_back(iv.b);
    // right endpoints b may themselves be roots only if b == hi and hi is a root;
    // hi exceeds the root bound, so endpoints are root-free except possibly interior
    // midpoints that landed on a root -- those closed the interval on the right,
    // which count_leq treats correctly ((a, b] semantics).
    return seps;
}

/// Do the roots of child interlace those of parent? Requires deg(child) == deg(parent) - 1.
/// Both polynomials are assumed real-rooted (they are characteristic polynomials here).
/// Decided exactly: with multiplicity counts C_p(q), C_c(q) of roots <= q,
/// interlacing holds iff C_p(q) - 1 <= C_c(q) <= C_p(q) for every real q.
inline bool interlaces(const IntPoly& parent_chi, const IntPoly& child_chi) {
    if (parent_chi.is_zero() || child_chi.is_zero())
        throw std::invalid_argument("interlaces: zero polynomial");
    if (child_chi.degree() != parent_chi.degree() - 1)
        throw std::invalid_argument("interlaces: degree mismatch");
    if (parent_chi.degree() == 0) return true;
    RootCounter cp(parent_chi), cc(child_chi);
    IntPoly prod = parent_chi * child_chi;
    for (const Rat& q : root_separators(prod)) {
        int np = cp.count_leq(q), nc = cc.count_leq(q);
        if (nc > np || nc < np - 1) return false;
    }
    return true;
}

}  // namespace cyclotome
