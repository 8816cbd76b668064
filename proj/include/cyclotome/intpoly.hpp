#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotome/bigint.hpp"

namespace cyclotome {

/// Dense integer-coefficient polynomial, lowest degree first.
/// Invariant: no trailing zero coefficient (the zero polynomial has empty c).
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }
    static IntPoly variable() { return IntPoly(std::vector<Int>{0, 1}); }
    // c0 + c1 x + ... from an initializer-friendly list of longs
    static IntPoly of(std::initializer_list<long> coeffs) {
        std::vector<Int> v;
        for (long x : coeffs) v.emplace_back(x);
        return IntPoly(std::move(v));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const Int& leading() const {
        static const Int z{0};
        return c.empty() ? z : c.back();
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return Int{0};
        return c[i];
    }

    bool operator==(const IntPoly& o) const { return c == o.c; }
    bool operator!=(const IntPoly& o) const { return c != o.c; }
    bool operator<(const IntPoly& o) const {  // arbitrary total order for containers
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }

    Int eval(const Int& x) const {
        Int r{0};
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }
    // den^deg * p(num/den), exact in integers
    Int eval_scaled(const Int& num, const Int& den) const {
        if (is_zero()) return Int{0};
        Int r{0}, dpow{1};
        for (size_t i = c.size(); i-- > 0;) {
            r = r * num + c[i] * dpow;
            if (i > 0) dpow *= den;
        }
        return r;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(c.size(), o.c.size()), Int{0});
        for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
        for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
        return IntPoly(std::move(r));
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<Int> r(c.size() + o.c.size() - 1, Int{0});
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        }
        return IntPoly(std::move(r));
    }
    IntPoly operator*(const Int& k) const {
        IntPoly r = *this;
        for (auto& v : r.c) v *= k;
        r.normalize();
        return r;
    }
    IntPoly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return zero();
        IntPoly r;
        r.c.assign(c.size() + k, Int{0});
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    // p(-x)
    IntPoly negate_variable() const {
        IntPoly r = *this;
        for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }

    // x^deg * p(1/x); meaningful for p(0) != 0
    IntPoly reversed() const {
        IntPoly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.normalize();
        return r;
    }

    bool is_palindromic() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != c[c.size() - 1 - i]) return false;
        return true;
    }

    IntPoly derivative() const {
        if (c.size() <= 1) return zero();
        std::vector<Int> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Int(static_cast<long>(i));
        return IntPoly(std::move(r));
    }

    Int content() const {
        Int g{0};
        for (const auto& v : c) g = igcd(g, v);
        return g;
    }
    IntPoly primitive_part() const {
        if (is_zero()) return zero();
        Int g = content();
        if (sgn(leading()) < 0) g = -g;
        IntPoly r = *this;
        for (auto& v : r.c) v = idiv_exact(v, g);
        return r;
    }

    std::string str(const std::string& var = "x") const;
};

/// Exact division: returns quotient iff divisor*q == dividend identically over Z.
inline std::optional<IntPoly> div_exact(const IntPoly& dividend, const IntPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
    if (dividend.is_zero()) return IntPoly::zero();
    if (dividend.degree() < divisor.degree()) return std::nullopt;
    std::vector<Int> rem = dividend.c;
    int dq = dividend.degree() - divisor.degree();
    std::vector<Int> q(dq + 1, Int{0});
    const Int& lead = divisor.leading();
    for (int k = dq; k >= 0; --k) {
        Int& top = rem[k + divisor.degree()];
        if (top == 0) continue;
        if (!divides(lead, top)) return std::nullopt;
        Int f = idiv_exact(top, lead);
        q[k] = f;
        for (int i = 0; i <= divisor.degree(); ++i) rem[k + i] -= f * divisor.c[i];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

// Quotient and remainder of division by a monic (or +-1-leading) divisor, exact over Z.
inline std::pair<IntPoly, IntPoly> divmod_unit(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero() || (b.leading() != 1 && b.leading() != -1))
        throw std::invalid_argument("divmod_unit: divisor must have unit leading coefficient");
    if (a.degree() < b.degree()) return {IntPoly::zero(), a};
    std::vector<Int> rem = a.c;
    int dq = a.degree() - b.degree();
    std::vector<Int> q(dq + 1, Int{0});
    for (int k = dq; k >= 0; --k) {
        Int f = rem[k + b.degree()] * b.leading();  // lead is +-1
        if (f == 0) continue;
        q[k] = f;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= f * b.c[i];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(rem))};
}

// ---- subresultant-style gcd over Z (primitive PRS) ----

// b.leading()^(deg a - deg b + 1) * a  mod b, computed without fractions
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    IntPoly r = a;
    const Int& lb = b.leading();
    int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Int f = r.leading();
        std::vector<Int> nr(r.c.size(), Int{0});
        for (size_t i = 0; i < r.c.size(); ++i) nr[i] = r.c[i] * lb;
        for (int i = 0; i <= db; ++i) nr[k + i] -= f * b.c[i];
        r = IntPoly(std::move(nr));
        if (!r.is_zero() && r.degree() > k + db - 1) throw std::logic_error("pseudo_rem");
    }
    return r;
}

inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Yun square-free decomposition: p = lead * prod f_i^i with each f_i squarefree, primitive.
/// Returns the list [f_1, f_2, ...]; trivial factors are the constant 1.
inline std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    if (p.degree() <= 0) return out;
    IntPoly a = p.primitive_part();
    IntPoly g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back(a);
        return out;
    }
    IntPoly w = *div_exact(a, g);
    while (g.degree() > 0) {
        IntPoly y = poly_gcd(w, g);
        out.push_back(*div_exact(w, y));
        w = y;
        g = *div_exact(g, y);
    }
    out.push_back(w);
    for (auto& f : out) f = f.primitive_part();
    return out;
}

inline IntPoly squarefree_part(const IntPoly& p) {
    IntPoly r = IntPoly::constant(1);
    for (const auto& f : squarefree_decomposition(p))
        if (f.degree() > 0) r = r * f;
    return r;
}

// ---- cyclotomic polynomials ----

namespace detail {
// multiply in place by (x^k - 1)
inline void mul_binomial(std::vector<Int>& c, int k) {
    std::vector<Int> r(c.size() + k, Int{0});
    for (size_t i = 0; i < c.size(); ++i) {
        r[i + k] += c[i];
        r[i] -= c[i];
    }
    c = std::move(r);
}
// divide in place by (x^k - 1); division must be exact
inline void div_binomial(std::vector<Int>& c, int k) {
    // synthetic division by x^k - 1: q[i] = c[i+k] + q[i+k]
    int dq = static_cast<int>(c.size()) - 1 - k;
    std::vector<Int> q(dq + 1, Int{0});
    for (int i = dq; i >= 0; --i) {
        q[i] = c[i + k];
        if (i + k <= dq) q[i] += q[i + k];
    }
    for (int i = 0; i < k; ++i) {
        Int qi = (i <= dq) ? q[i] : Int{0};
        if (c[i] != -qi) throw std::logic_error("div_binomial: not divisible");
    }
    c = std::move(q);
}
}  // namespace detail

/// The m-th cyclotomic polynomial Phi_m, via the Moebius product
/// Phi_m(x) = prod_{d | m} (x^{m/d} - 1)^{mu(d)}.
inline IntPoly cyclotomic_poly(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
    thread_local std::map<long, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<long> divs;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        divs.push_back(d);
        if (d != m / d) divs.push_back(m / d);
    }
    std::vector<int> pos, neg;  // exponents k with factor (x^k - 1)^{+1} resp. ^{-1}
    for (long e : divs) {
        int mu = moebius(e);
        if (mu == 1) pos.push_back(static_cast<int>(m / e));
        else if (mu == -1) neg.push_back(static_cast<int>(m / e));
    }
    std::vector<Int> c{Int{1}};
    for (int k : pos) detail::mul_binomial(c, k);
    for (int k : neg) detail::div_binomial(c, k);
    IntPoly r{std::move(c)};
    cache[m] = r;
    return r;
}

/// Monic integer Chebyshev-like polynomial with T_m(z + 1/z) = z^m + 1/z^m.
/// T_0 = 2, T_1 = x, T_{m+1} = x T_m - T_{m-1}.
inline IntPoly chebyshev_first_kind(long m) {
    if (m < 0) throw std::invalid_argument("chebyshev_first_kind: m must be >= 0");
    IntPoly prev = IntPoly::constant(2);
    if (m == 0) return prev;
    IntPoly cur = IntPoly::variable();
    for (long i = 1; i < m; ++i) {
        IntPoly next = cur * IntPoly::variable() - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// R(z) = z^n chi(z + 1/z) for monic chi of degree n. Palindromic of degree 2n.
inline IntPoly reciprocal_transform(const IntPoly& chi) {
    if (!chi.is_monic()) throw std::invalid_argument("reciprocal_transform: chi must be monic");
    int n = chi.degree();
    // sum_k c_k (z^2+1)^k z^(n-k)
    IntPoly zsq1 = IntPoly::of({1, 0, 1});
    IntPoly pw = IntPoly::constant(1);
    IntPoly r = IntPoly::zero();
    for (int k = 0; k <= n; ++k) {
        if (chi.coeff(k) != 0) r = r + (pw * chi.coeff(k)).shifted(n - k);
        if (k < n) pw = pw * zsq1;
    }
    return r;
}

/// If R == +-prod Phi_m^{e_m}, return the multiset {m -> e_m}; otherwise nullopt.
/// Tries every m with phi(m) <= deg R in ascending order, dividing out repeatedly.
inline std::optional<std::map<long, int>> factor_into_cyclotomics(const IntPoly& R) {
    if (R.is_zero()) throw std::invalid_argument("factor_into_cyclotomics: zero polynomial");
    std::map<long, int> out;
    IntPoly cur = R;
    if (cur.degree() == 0) {
        if (cur.c[0] == 1 || cur.c[0] == -1) return out;
        return std::nullopt;
    }
    int d = cur.degree();
    // phi(m) >= sqrt(m/2), so phi(m) <= d implies m <= 2 d^2.
    long mmax = 2L * d * d + 1;
    for (long m = 1; m <= mmax && cur.degree() > 0; ++m) {
        if (euler_phi(m) > d) continue;
        if (euler_phi(m) > cur.degree()) continue;
        IntPoly phi = cyclotomic_poly(m);
        for (;;) {
            auto q = div_exact(cur, phi);
            if (!q) break;
            cur = *q;
            ++out[m];
            if (cur.degree() == 0) break;
        }
    }
    if (cur.degree() == 0 && (cur.c[0] == 1 || cur.c[0] == -1)) return out;
    return std::nullopt;
}

inline std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        const Int& v = c[i];
        if (v == 0) continue;
        if (!first) os << (sgn(v) > 0 ? " + " : " - ");
        else if (sgn(v) < 0) os << "-";
        Int av = abs(v);
        if (i == 0 || av != 1) os << av.get_str();
        if (i > 0) {
            if (av != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

/// Render a cyclotomic factor multiset compactly: matched Phi_1^a Phi_2^a pairs
/// print as (z^2-1)^a, lone Phi_1/Phi_2 as (z-1)/(z+1), the rest as Phi_m(z).
inline std::string cyclotomic_product_str(const std::map<long, int>& f) {
    std::ostringstream os;
    auto emit = [&os](const std::string& base, int e) {
        os << base;
        if (e != 1) os << "^" << e;
    };
    int e1 = f.count(1) ? f.at(1) : 0;
    int e2 = f.count(2) ? f.at(2) : 0;
    int paired = std::min(e1, e2);
    if (paired > 0) emit("(z^2-1)", paired);
    if (e1 > paired) emit("(z-1)", e1 - paired);
    if (e2 > paired) emit("(z+1)", e2 - paired);
    for (const auto& [m, e] : f) {
        if (m <= 2 || e == 0) continue;
        emit("Phi_" + std::to_string(m) + "(z)", e);
    }
    std::string s = os.str();
    return s.empty() ? "1" : s;
}

}  // namespace cyclotome
