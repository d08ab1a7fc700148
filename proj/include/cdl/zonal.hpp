#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "cdl/bidegree.hpp"
#include "cdl/rational.hpp"

namespace cdl {

using Complex = std::complex<double>;

// Bivariate polynomial sum c_{a,b} x^a xbar^b with exact rational coefficients.
// Zero coefficients are never stored.
class ZonalPoly {
public:
    using CoeffMap = std::map<std::pair<int, int>, Rational>;

    ZonalPoly() = default;
    explicit ZonalPoly(int dim) : dim_(dim) {}
    ZonalPoly(int dim, CoeffMap coeffs) : dim_(dim), coeffs_(std::move(coeffs)) { prune(); }

    int dim() const { return dim_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    Rational coeff(int a, int b) const {
        auto it = coeffs_.find({a, b});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(int a, int b, const Rational& c) {
        auto key = std::make_pair(a, b);
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    ZonalPoly& operator+=(const ZonalPoly& o) {
        for (const auto& [key, c] : o.coeffs_) add_term(key.first, key.second, c);
        return *this;
    }

    ZonalPoly& operator*=(const Rational& c) {
        if (c == 0) { coeffs_.clear(); return *this; }
        for (auto& [key, v] : coeffs_) v *= c;
        return *this;
    }

    friend ZonalPoly operator*(const ZonalPoly& f, const ZonalPoly& g) {
        ZonalPoly out(f.dim_);
        for (const auto& [ka, ca] : f.coeffs_)
            for (const auto& [kb, cb] : g.coeffs_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    // swap x and xbar
    ZonalPoly conj() const {
        ZonalPoly out(dim_);
        for (const auto& [key, c] : coeffs_) out.coeffs_[{key.second, key.first}] = c;
        return out;
    }

    // exact value at a rational point on the real axis
    Rational eval_rational(const Rational& x) const;

    friend bool operator==(const ZonalPoly&, const ZonalPoly&) = default;

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }

    int dim_ = 0;
    CoeffMap coeffs_;
};

// Expansion F = sum f_{k,l} g_{k,l} in the zonal Jacobi basis, exact.
struct JacobiExpansion {
    int dim = 0;
    std::map<BiDegree, Rational> terms;

    Rational coeff(const BiDegree& d) const {
        auto it = terms.find(d);
        return it == terms.end() ? Rational(0) : it->second;
    }
};

// dim Harm(k,l) for the unit sphere in C^d
BigInt harm_dim(int d, BiDegree deg);
BigInt hom_dim(int d, BiDegree deg);

// zonal Jacobi polynomial g_{k,l}, normalized so g_{k,l}(1) = dim Harm(k,l); requires d >= 2
ZonalPoly jacobi(int d, BiDegree deg);

// leading coefficient of g_{k,l} (the x^k xbar^l monomial)
Rational jacobi_leading_coeff(int d, BiDegree deg);

// floating evaluation at a complex point
Complex eval(const ZonalPoly& p, Complex z);

// exact Jacobi-basis expansion by triangular back-substitution in the monomial basis
JacobiExpansion expand(int d, const ZonalPoly& F);

// alternative route via the three-term recurrences; used as a cross-check
JacobiExpansion expand_by_recurrence(int d, const ZonalPoly& F);

// reassemble a polynomial from its expansion
ZonalPoly synthesize(const JacobiExpansion& e);

// expansion of g_{degA} * g_{degB}
JacobiExpansion product_expand(int d, BiDegree degA, BiDegree degB);

// Gegenbauer polynomial Q_{d,k} (univariate, coefficient of x^j at index j)
std::vector<Rational> gegenbauer(int d, int k);

double gegenbauer_eval(const std::vector<Rational>& q, double x);

// classical-Jacobi route to g_{k,l}(x) for real-axis cross-checks (test oracle)
Rational jacobi_via_classical(int d, BiDegree deg, const Rational& x);

}  // namespace cdl
