#include "cdl/zonal.hpp"

#include <stdexcept>

namespace cdl {

BigInt hom_dim(int d, BiDegree deg) {
    return binomial(d + deg.k - 1, d - 1) * binomial(d + deg.l - 1, d - 1);
}

BigInt harm_dim(int d, BiDegree deg) {
    if (d < 1) throw std::invalid_argument("harm_dim: dimension must be >= 1");
    if (deg.k < 0 || deg.l < 0) throw std::invalid_argument("harm_dim: negative degree");
    return hom_dim(d, deg) - binomial(d + deg.k - 2, d - 1) * binomial(d + deg.l - 2, d - 1);
}

ZonalPoly jacobi(int d, BiDegree deg) {
    if (d < 2) throw std::invalid_argument("jacobi: dimension must be >= 2");
    if (deg.k < 0 || deg.l < 0) throw std::invalid_argument("jacobi: negative degree");
    const int k = deg.k, l = deg.l;
    ZonalPoly::CoeffMap coeffs;
    const BigInt dm1f = factorial(d - 1);
    for (int r = 0; r <= std::min(k, l); ++r) {
        BigInt num = BigInt(d + k + l - 1) * factorial(d + k + l - r - 2);
        BigInt den = dm1f * factorial(r) * factorial(k - r) * factorial(l - r);
        Rational c(num, den);
        if (r % 2 == 1) c = -c;
        coeffs[{k - r, l - r}] = c;
    }
    return ZonalPoly(d, std::move(coeffs));
}

Rational jacobi_leading_coeff(int d, BiDegree deg) {
    return Rational(factorial(d + deg.k + deg.l - 1),
                    factorial(d - 1) * factorial(deg.k) * factorial(deg.l));
}

Complex eval(const ZonalPoly& p, Complex z) {
    // powers of z and conj(z) up to the maximal exponents present
    int amax = 0, bmax = 0;
    for (const auto& [key, c] : p.coeffs()) {
        amax = std::max(amax, key.first);
        bmax = std::max(bmax, key.second);
    }
    std::vector<Complex> za(amax + 1), zb(bmax + 1);
    za[0] = zb[0] = 1.0;
    for (int i = 1; i <= amax; ++i) za[i] = za[i - 1] * z;
    const Complex zc = std::conj(z);
    for (int i = 1; i <= bmax; ++i) zb[i] = zb[i - 1] * zc;
    Complex acc = 0.0;
    for (const auto& [key, c] : p.coeffs()) acc += to_double(c) * za[key.first] * zb[key.second];
    return acc;
}

Rational ZonalPoly::eval_rational(const Rational& x) const {
    Rational acc = 0;
    for (const auto& [key, c] : coeffs_) {
        Rational term = c;
        for (int i = 0; i < key.first + key.second; ++i) term *= x;
        acc += term;
    }
    return acc;
}

JacobiExpansion expand(int d, const ZonalPoly& F) {
    if (d < 2) throw std::invalid_argument("expand: dimension must be >= 2");
    JacobiExpansion out;
    out.dim = d;
    ZonalPoly rem = F;
    // peel the total-degree-maximal monomial; subtracting its Jacobi polynomial
    // only disturbs strictly smaller diagonal shifts, so this terminates
    while (!rem.empty()) {
        auto best = rem.coeffs().begin();
        for (auto it = rem.coeffs().begin(); it != rem.coeffs().end(); ++it) {
            int tb = best->first.first + best->first.second;
            int ti = it->first.first + it->first.second;
            if (ti > tb || (ti == tb && it->first.first > best->first.first)) best = it;
        }
        BiDegree deg{best->first.first, best->first.second};
        Rational f = best->second / jacobi_leading_coeff(d, deg);
        out.terms[deg] = f;
        ZonalPoly g = jacobi(d, deg);
        g *= -f;
        rem += g;
    }
    return out;
}

namespace {

// expansion of x * (expansion), via x g_{k,l} = (k+1)/(d+k+l) g_{k+1,l} + (d+l-2)/(d+k+l-2) g_{k,l-1}
std::map<BiDegree, Rational> shift_x(int d, const std::map<BiDegree, Rational>& e, bool conjugate) {
    std::map<BiDegree, Rational> out;
    auto add = [&out](BiDegree deg, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = out.emplace(deg, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto& [deg0, c] : e) {
        BiDegree deg = conjugate ? deg0.conj() : deg0;
        const int k = deg.k, l = deg.l;
        Rational a(k + 1, d + k + l);
        add(conjugate ? BiDegree{l, k + 1} : BiDegree{k + 1, l}, a * c);
        if (l >= 1) {
            Rational b(d + l - 2, d + k + l - 2);
            add(conjugate ? BiDegree{l - 1, k} : BiDegree{k, l - 1}, b * c);
        }
    }
    return out;
}

}  // namespace

JacobiExpansion expand_by_recurrence(int d, const ZonalPoly& F) {
    JacobiExpansion out;
    out.dim = d;
    for (const auto& [key, c] : F.coeffs()) {
        std::map<BiDegree, Rational> e{{BiDegree{0, 0}, Rational(1)}};
        for (int i = 0; i < key.first; ++i) e = shift_x(d, e, false);
        for (int i = 0; i < key.second; ++i) e = shift_x(d, e, true);
        for (const auto& [deg, v] : e) {
            auto [it, fresh] = out.terms.emplace(deg, c * v);
            if (!fresh) {
                it->second += c * v;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

ZonalPoly synthesize(const JacobiExpansion& e) {
    ZonalPoly out(e.dim);
    for (const auto& [deg, c] : e.terms) {
        ZonalPoly g = jacobi(e.dim, deg);
        g *= c;
        out += g;
    }
    return out;
}

JacobiExpansion product_expand(int d, BiDegree degA, BiDegree degB) {
    return expand(d, jacobi(d, degA) * jacobi(d, degB));
}

std::vector<Rational> gegenbauer(int d, int k) {
    if (d < 2) throw std::invalid_argument("gegenbauer: dimension must be >= 2");
    if (k < 0) throw std::invalid_argument("gegenbauer: negative degree");
    if (k == 0) return {Rational(1)};
    if (k == 1) return {Rational(0), Rational(d)};
    auto lambda = [d](int j) { return j == 0 ? Rational(0) : Rational(j, d + 2 * j - 2); };
    std::vector<Rational> qm2{Rational(1)}, qm1{Rational(0), Rational(d)};
    for (int j = 1; j < k; ++j) {
        std::vector<Rational> q(j + 2, Rational(0));
        for (std::size_t i = 0; i < qm1.size(); ++i) q[i + 1] += qm1[i];
        Rational c = lambda(j - 1) - 1;
        for (std::size_t i = 0; i < qm2.size(); ++i) q[i] += c * qm2[i];
        Rational inv = lambda(j + 1);
        for (auto& v : q) v /= inv;
        qm2 = std::move(qm1);
        qm1 = std::move(q);
    }
    return qm1;
}

double gegenbauer_eval(const std::vector<Rational>& q, double x) {
    double acc = 0.0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Rational jacobi_via_classical(int d, BiDegree deg, const Rational& x) {
    // g_{k,l}(x) = m_{k,l} l!(d-2)!/(l+d-2)! x^{k-l} P_l^{(d-2,k-l)}(2x^2-1) for k >= l, real x
    int k = deg.k, l = deg.l;
    if (k < l) std::swap(k, l);
    Rational m(harm_dim(d, deg));
    Rational pref = m * Rational(factorial(l) * factorial(d - 2), factorial(l + d - 2));
    // P_n^{(a,b)}(y) = sum_s C(n+a, n-s) C(n+b, s) ((y-1)/2)^s ((y+1)/2)^{n-s}
    const int a = d - 2, b = k - l;
    Rational y = 2 * x * x - 1;
    Rational ym = (y - 1) / 2, yp = (y + 1) / 2;
    Rational P = 0;
    for (int s = 0; s <= l; ++s) {
        Rational term(binomial(l + a, l - s) * binomial(l + b, s));
        for (int i = 0; i < s; ++i) term *= ym;
        for (int i = 0; i < l - s; ++i) term *= yp;
        P += term;
    }
    Rational xpow = 1;
    for (int i = 0; i < k - l; ++i) xpow *= x;
    return pref * xpow * P;
}

}  // namespace cdl
