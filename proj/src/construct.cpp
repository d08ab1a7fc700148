#include "cdl/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "cdl/grouprep.hpp"

namespace cdl {

namespace {

constexpr double kPi = std::numbers::pi;

Complex root_of_unity(int num, int den) { return std::polar(1.0, 2 * kPi * num / den); }

Matrix rows_to_matrix(const std::vector<Vector>& rows) {
    Matrix out(static_cast<Eigen::Index>(rows.size()), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i];
    return out;
}

// keep first occurrence; rounding key at 1e-7
std::vector<Vector> dedup(const std::vector<Vector>& vs) {
    std::vector<Vector> out;
    std::set<std::vector<long>> seen;
    for (const auto& v : vs) {
        std::vector<long> key;
        key.reserve(2 * v.size());
        for (int i = 0; i < v.size(); ++i) {
            key.push_back(std::lround(v(i).real() * 1e7));
            key.push_back(std::lround(v(i).imag() * 1e7));
        }
        if (seen.insert(std::move(key)).second) out.push_back(v);
    }
    return out;
}

PointSet make_pointset(int d, const std::vector<Vector>& raw, int expected_size, const char* what) {
    auto vs = dedup(raw);
    if (expected_size > 0 && static_cast<int>(vs.size()) != expected_size)
        throw std::runtime_error(std::string(what) + ": generated " + std::to_string(vs.size()) +
                                 " points, expected " + std::to_string(expected_size));
    return PointSet(d, rows_to_matrix(vs));
}

}  // namespace

// ---------------- Galois ring ----------------

namespace {

// primitive binary polynomials, coefficient i of x^i, degree r
const std::map<int, std::vector<int>>& primitive_binary() {
    static const std::map<int, std::vector<int>> table = {
        {1, {1, 1}},           // x + 1
        {2, {1, 1, 1}},        // x^2 + x + 1
        {3, {1, 1, 0, 1}},     // x^3 + x + 1
        {4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
        {5, {1, 0, 1, 0, 0, 1}},
        {6, {1, 1, 0, 0, 0, 0, 1}},
    };
    return table;
}

}  // namespace

GaloisRing4::GaloisRing4(int r) : r_(r) {
    auto it = primitive_binary().find(r);
    if (it == primitive_binary().end())
        throw std::invalid_argument("GaloisRing4: no primitive polynomial tabulated for r = " + std::to_string(r));
    const auto& f = it->second;
    // Graeffe/Hensel lift: h(x^2) = +- f(x) f(-x) mod 4
    std::vector<int> fneg(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) fneg[i] = ((i % 2 ? -f[i] : f[i]) % 4 + 4) % 4;
    std::vector<int> prod(2 * r_ + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < fneg.size(); ++j) prod[i + j] = (prod[i + j] + f[i] * fneg[j]) % 4;
    h_.resize(r_ + 1);
    for (int i = 0; i <= r_; ++i) h_[i] = prod[2 * i] % 4;
    if (h_[r_] == 3)
        for (auto& c : h_) c = (4 - c) % 4;
    if (h_[r_] != 1) throw std::runtime_error("GaloisRing4: lift is not monic");

    // Teichmuller set: 0 and the powers of x
    teich_.push_back(zero());
    if (r_ == 1) {
        teich_.push_back(one());
    } else {
        Elem xi(r_, 0);
        xi[1] = 1;
        Elem cur = one();
        for (int k = 0; k < (1 << r_) - 1; ++k) {
            teich_.push_back(cur);
            cur = mul(cur, xi);
        }
        if (cur != one()) throw std::runtime_error("GaloisRing4: Teichmuller unit has wrong order");
    }
}

GaloisRing4::Elem GaloisRing4::one() const {
    Elem e(r_, 0);
    e[0] = 1;
    return e;
}

GaloisRing4::Elem GaloisRing4::add(const Elem& a, const Elem& b) const {
    Elem out(r_);
    for (int i = 0; i < r_; ++i) out[i] = static_cast<uint8_t>((a[i] + b[i]) % 4);
    return out;
}

GaloisRing4::Elem GaloisRing4::mul(const Elem& a, const Elem& b) const {
    std::vector<int> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % 4;
    }
    for (int i = 2 * r_ - 2; i >= r_; --i) {
        int c = prod[i];
        if (!c) continue;
        for (int j = 0; j <= r_; ++j)
            prod[i - r_ + j] = ((prod[i - r_ + j] - c * h_[j]) % 4 + 4) % 4;
    }
    Elem out(r_);
    for (int i = 0; i < r_; ++i) out[i] = static_cast<uint8_t>(prod[i]);
    return out;
}

std::pair<GaloisRing4::Elem, GaloisRing4::Elem> GaloisRing4::teich_decompose(const Elem& a) const {
    for (const auto& t0 : teich_) {
        bool even = true;
        Elem diff(r_);
        for (int i = 0; i < r_; ++i) {
            int d = ((a[i] - t0[i]) % 4 + 4) % 4;
            if (d % 2) { even = false; break; }
            diff[i] = static_cast<uint8_t>(d / 2);
        }
        if (!even) continue;
        for (const auto& t1 : teich_) {
            bool match = true;
            for (int i = 0; i < r_; ++i)
                if ((t1[i] - diff[i]) % 2 != 0) { match = false; break; }
            if (match) return {t0, t1};
        }
    }
    throw std::runtime_error("GaloisRing4: 2-adic decomposition failed");
}

GaloisRing4::Elem GaloisRing4::frobenius(const Elem& a) const {
    auto [t0, t1] = teich_decompose(a);
    Elem sq0 = mul(t0, t0), sq1 = mul(t1, t1);
    for (auto& c : sq1) c = static_cast<uint8_t>((2 * c) % 4);
    return add(sq0, sq1);
}

int GaloisRing4::trace(const Elem& a) const {
    Elem acc = zero(), cur = a;
    for (int i = 0; i < r_; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    for (int i = 1; i < r_; ++i)
        if (acc[i] != 0) throw std::runtime_error("GaloisRing4: trace escaped Z4");
    return acc[0];
}

std::vector<GaloisRing4::Elem> GaloisRing4::all_elements() const {
    std::vector<Elem> out;
    out.reserve(teich_.size() * teich_.size());
    for (const auto& t0 : teich_)
        for (const auto& t1 : teich_) {
            Elem two_t1 = t1;
            for (auto& c : two_t1) c = static_cast<uint8_t>((2 * c) % 4);
            out.push_back(add(t0, two_t1));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// ---------------- generators ----------------

PointSet cross_polytope(int d, int n) {
    if (d < 1 || n < 2) throw std::invalid_argument("cross_polytope: need d >= 1, n >= 2");
    std::vector<Vector> vs;
    for (int k = 0; k < n; ++k) {
        Complex w = root_of_unity(k, n);
        for (int j = 0; j < d; ++j) {
            Vector v = Vector::Zero(d);
            v(j) = w;
            vs.push_back(v);
        }
    }
    return make_pointset(d, vs, n * d, "cross_polytope");
}

namespace {

std::vector<Matrix> pauli_xz(int d) {
    Matrix Px = Matrix::Zero(d, d), Pz = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        Px((i + 1) % d, i) = 1.0;
        Pz(i, i) = root_of_unity(i, d);
    }
    return {Px, Pz};
}

}  // namespace

PointSet sic_d2() {
    auto xz = pauli_xz(2);
    Matrix iI = Complex(0, 1) * Matrix::Identity(2, 2);
    FiniteUnitaryGroup G = close_group({xz[0], xz[1], iI}, 256);
    Vector v(2);
    v << Complex(1.0), Complex((-1.0 - std::sqrt(3.0)) / 2.0) * Complex(1.0, 1.0);
    v /= v.norm();
    std::vector<Vector> vs;
    for (const auto& g : G.elements) vs.push_back(g * v);
    return make_pointset(2, vs, 16, "sic_d2");
}

PointSet hoggar() {
    auto xz = pauli_xz(2);
    Matrix iI = Complex(0, 1) * Matrix::Identity(2, 2);
    std::vector<Matrix> gens1{xz[0], xz[1], iI};
    std::vector<Matrix> gens;
    for (const auto& a : gens1)
        for (const auto& b : gens1)
            for (const auto& c : gens1) {
                Matrix ab = Matrix::Zero(4, 4);
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) ab.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
                Matrix abc = Matrix::Zero(8, 8);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) abc.block(2 * i, 2 * j, 2, 2) = ab(i, j) * c;
                gens.push_back(abc);
            }
    FiniteUnitaryGroup G = close_group(gens, 4096);
    Vector v(8);
    v << Complex(0), Complex(0), Complex(1, 1), Complex(1, -1), Complex(1, 1), Complex(-1, -1),
        Complex(0), Complex(2);
    v /= v.norm();
    std::vector<Vector> vs;
    for (const auto& g : G.elements) vs.push_back(g * v);
    return make_pointset(8, vs, 256, "hoggar");
}

PointSet kerdock_code_set(int r) {
    if (r < 1) throw std::invalid_argument("kerdock_code_set: r must be >= 1");
    GaloisRing4 gr(r);
    const int d = 1 << r;
    const auto& teich = gr.teichmuller();
    const Complex i_pow[4] = {1.0, {0.0, 1.0}, -1.0, {0.0, -1.0}};
    std::vector<Vector> vs;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (const auto& lam : gr.all_elements()) {
        std::vector<int> tr(d);
        for (int t = 0; t < d; ++t) tr[t] = gr.trace(gr.mul(lam, teich[t]));
        for (int eps = 0; eps < 4; ++eps) {
            Vector v(d);
            for (int t = 0; t < d; ++t) v(t) = scale * i_pow[(tr[t] + eps) % 4];
            vs.push_back(v);
        }
    }
    // weight-class guard: inner products of codeword vectors must take only the
    // values implied by the printed weight distribution of the lifted code
    {
        const double cross = 1.0 / std::sqrt(2.0 * d);
        for (std::size_t a = 0; a < vs.size(); a += 7) {
            for (std::size_t b = a + 1; b < vs.size(); b += 5) {
                Complex ip = vs[a].dot(vs[b]);
                double m = std::abs(ip);
                bool ok = m < 1e-9 || std::abs(m - 1.0) < 1e-9 ||
                          (r % 2 == 1 ? std::abs(m - std::sqrt(2.0) * cross) < 1e-9
                                      : std::abs(m - 1.0 / std::sqrt(static_cast<double>(d))) < 1e-9);
                if (!ok)
                    throw std::runtime_error("kerdock_code_set: inner product outside printed weight classes");
            }
        }
    }
    if (r % 2 == 1) {
        const double s2 = std::sqrt(2.0);
        for (int j = 0; j < d; ++j)
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s2i = 0; s2i < 2; ++s2i) {
                    Vector v = Vector::Zero(d);
                    v(j) = Complex(s1 ? -1.0 : 1.0, s2i ? -1.0 : 1.0) / s2;
                    vs.push_back(v);
                }
    } else {
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < 4; ++k) {
                Vector v = Vector::Zero(d);
                v(j) = i_pow[k];
                vs.push_back(v);
            }
    }
    return make_pointset(d, vs, 4 * d * (d + 1), "kerdock_code_set");
}

PointSet mub_cover(MubFamily family, int r) {
    if ((family == MubFamily::Odd) != (r % 2 == 1))
        throw std::invalid_argument("mub_cover: family parity must match r");
    PointSet X = kerdock_code_set(r);
    const int d = 1 << r;
    // unbiasedness gate: nonzero cross moduli must all be 1/sqrt(d), plus the
    // root-of-unity self-angles of the 4-antipodal structure
    AngleSet A = angle_set(X);
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < A.alphas.size(); ++i) {
        double m = std::abs(A.alphas[i]);
        if (m > 1e-9 && std::abs(m - 1.0) > 1e-9 && std::abs(m - target) > 1e-9)
            throw std::runtime_error("mub_cover: unbiasedness check failed");
    }
    if (!detect_antipodal(X, 4)) throw std::runtime_error("mub_cover: not 4-antipodal");
    return X;
}

PointSet coxeter_27() {
    std::vector<Vector> vs;
    const double s2 = std::sqrt(2.0);
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) {
            Complex a = root_of_unity(mu, 3), b = root_of_unity(nu, 3);
            Vector v1(3), v2(3), v3(3);
            v1 << 0.0, a / s2, -b / s2;
            v2 << -a / s2, 0.0, b / s2;
            v3 << a / s2, -b / s2, 0.0;
            vs.push_back(v1);
            vs.push_back(v2);
            vs.push_back(v3);
        }
    return make_pointset(3, vs, 27, "coxeter_27");
}

namespace {

void all_permutations_signed(const Vector& base, bool with_negation, std::vector<Vector>& out) {
    std::vector<int> idx(base.size());
    for (int i = 0; i < base.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    do {
        Vector v(base.size());
        for (int i = 0; i < base.size(); ++i) v(i) = base(idx[i]);
        out.push_back(v);
        if (with_negation) out.push_back(-v);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace

PointSet coxeter_42() {
    const Complex lam(-0.5, -std::sqrt(7.0) / 2.0);
    const double c = 2.0 * std::sqrt(2.0);
    std::vector<Vector> vs;
    std::vector<Vector> bases;
    Vector b(3);
    b << lam * lam / c, lam * lam / c, 0.0;
    bases.push_back(b);
    b << (lam + 2.0) / c, -(lam + 2.0) / c, 0.0;
    bases.push_back(b);
    b << lam / std::sqrt(2.0), 0.0, 0.0;
    bases.push_back(b);
    b << lam / c, lam / c, 2.0 / c;
    bases.push_back(b);
    b << lam / c, -lam / c, 2.0 / c;
    bases.push_back(b);
    b << -lam / c, -lam / c, 2.0 / c;
    bases.push_back(b);
    for (const auto& base : bases) all_permutations_signed(base, true, vs);
    return make_pointset(3, vs, 42, "coxeter_42");
}

PointSet coxeter_56() {
    const Complex lam(-0.5, -std::sqrt(7.0) / 2.0);
    const Complex lb = std::conj(lam);
    const double c = std::sqrt(6.0);
    std::vector<Vector> vs;
    for (int s0 = 0; s0 < 2; ++s0)
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
                Vector v(3);
                v << (s0 ? -lam : lam) / c, (s1 ? -lam : lam) / c, (s2 ? -lam : lam) / c;
                vs.push_back(v);
            }
    // signed permutations of (lam^2, 1, 1) and (lb^2, lb, 0)
    for (auto base : {std::vector<Complex>{lam * lam, 1.0, 1.0}, std::vector<Complex>{lb * lb, lb, 0.0}}) {
        std::vector<int> idx{0, 1, 2};
        std::sort(idx.begin(), idx.end());
        std::set<std::vector<int>> seen;
        do {
            for (int mask = 0; mask < 8; ++mask) {
                Vector v(3);
                for (int i = 0; i < 3; ++i)
                    v(i) = base[idx[i]] * ((mask >> i) & 1 ? -1.0 : 1.0) / c;
                vs.push_back(v);
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return make_pointset(3, vs, 56, "coxeter_56");
}

PointSet coxeter_240() {
    std::vector<Vector> vs;
    // axis vectors i w^m e_j
    for (int j = 0; j < 4; ++j)
        for (int m = 0; m < 6; ++m) {
            Vector v = Vector::Zero(4);
            v(j) = Complex(0, 1) * root_of_unity(m, 6);
            vs.push_back(v);
        }
    // tetracode sign patterns per zero position, cube-root entries, global sign
    const int pats[4][4] = {{0, 1, -1, 1}, {-1, 0, 1, 1}, {1, -1, 0, 1}, {-1, -1, -1, 0}};
    const double r3 = std::sqrt(3.0);
    for (int p = 0; p < 4; ++p)
        for (int mu = 0; mu < 3; ++mu)
            for (int nu = 0; nu < 3; ++nu)
                for (int la = 0; la < 3; ++la) {
                    int exps[3] = {mu, nu, la};
                    Vector v = Vector::Zero(4);
                    int e = 0;
                    for (int c = 0; c < 4; ++c) {
                        if (pats[p][c] == 0) continue;
                        v(c) = static_cast<double>(pats[p][c]) * root_of_unity(exps[e++], 3) / r3;
                    }
                    vs.push_back(v);
                    vs.push_back(-v);
                }
    return make_pointset(4, vs, 240, "coxeter_240");
}

PointSet coxeter_756() {
    std::vector<Vector> vs;
    const double r2 = std::sqrt(2.0);
    const Complex r3i(0.0, std::sqrt(3.0));
    for (int a = 0; a < 6; ++a) {
        const Complex w = root_of_unity(a, 6);
        // pairs (s1, s2, 0, 0, 0, 0) / sqrt 2 at all position pairs
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int s1 = 0; s1 < 2; ++s1)
                    for (int s2 = 0; s2 < 2; ++s2) {
                        Vector v = Vector::Zero(6);
                        v(i) = w * (s1 ? -1.0 : 1.0) / r2;
                        v(j) = w * (s2 ? -1.0 : 1.0) / r2;
                        vs.push_back(v);
                    }
        // sqrt(3) i in one slot, +-1 elsewhere, even number of minus signs
        for (int pos = 0; pos < 6; ++pos)
            for (int mask = 0; mask < 64; ++mask) {
                if (__builtin_popcount(mask) % 2) continue;
                Vector v(6);
                for (int i = 0; i < 6; ++i) v(i) = w * ((mask >> i) & 1 ? -1.0 : 1.0) / (2.0 * r2);
                v(pos) *= r3i;
                vs.push_back(v);
            }
    }
    return make_pointset(6, vs, 756, "coxeter_756");
}

PointSet mub_odd_prime(long p, bool with_standard_basis) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("mub_odd_prime: p must be an odd prime");
    const int d = static_cast<int>(p);
    std::vector<Vector> vs;
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (long i = 0; i < p; ++i)
        for (long y = 0; y < p; ++y) {
            Vector v(d);
            for (long x = 0; x < p; ++x)
                v(static_cast<int>(x)) = scale * root_of_unity(static_cast<int>((i * x * x + y * x) % p), d);
            vs.push_back(v);
        }
    if (with_standard_basis)
        for (int j = 0; j < d; ++j) {
            Vector v = Vector::Zero(d);
            v(j) = 1.0;
            vs.push_back(v);
        }
    PointSet X = make_pointset(d, vs, static_cast<int>(p * p) + (with_standard_basis ? d : 0),
                               "mub_odd_prime");
    // unbiasedness: |x^* y| in {0, 1, 1/sqrt p}
    AngleSet A = angle_set(X);
    for (auto a : A.alphas) {
        double m = std::abs(a);
        if (m > 1e-9 && std::abs(m - 1.0) > 1e-9 && std::abs(m - scale) > 1e-9)
            throw std::runtime_error("mub_odd_prime: unbiasedness check failed");
    }
    return X;
}

namespace {

// GF(q^3) as polynomials mod the lexicographically smallest irreducible cubic
struct CubicField {
    long q;
    std::array<long, 3> cubic;  // x^3 + c2 x^2 + c1 x + c0

    explicit CubicField(long qq) : q(qq) {
        for (long c2 = 0; c2 < q; ++c2)
            for (long c1 = 0; c1 < q; ++c1)
                for (long c0 = 0; c0 < q; ++c0) {
                    bool root = false;
                    for (long x = 0; x < q && !root; ++x)
                        if (((x * x % q) * x + c2 * x * x + c1 * x + c0) % q == 0) root = true;
                    if (!root) {
                        cubic = {c0, c1, c2};
                        return;
                    }
                }
        throw std::runtime_error("CubicField: no irreducible cubic found");
    }

    using E = std::array<long, 3>;
    E one() const { return {1, 0, 0}; }
    E mul(const E& a, const E& b) const {
        long prod[5] = {0, 0, 0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
        for (int i = 4; i >= 3; --i) {
            long c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            prod[i - 3] = ((prod[i - 3] - c * cubic[0]) % q + q) % q;
            prod[i - 2] = ((prod[i - 2] - c * cubic[1]) % q + q) % q;
            prod[i - 1] = ((prod[i - 1] - c * cubic[2]) % q + q) % q;
        }
        return {prod[0], prod[1], prod[2]};
    }
    E pow(E a, long e) const {
        E r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long trace(const E& a) const {
        E x1 = pow(a, q), x2 = pow(x1, q);
        return (a[0] + x1[0] + x2[0]) % q;  // trace is the constant coordinate sum
    }
};

}  // namespace

PointSet singer_design(long q) {
    if (!is_prime(q)) throw std::invalid_argument("singer_design: q must be prime");
    CubicField F(q);
    const long N = q * q * q - 1;
    const long n = q * q + q + 1;
    // generator of GF(q^3)^*
    CubicField::E gen{};
    bool found = false;
    for (long a0 = 0; a0 < q && !found; ++a0)
        for (long a1 = 0; a1 < q && !found; ++a1)
            for (long a2 = 0; a2 < q && !found; ++a2) {
                if (a0 == 0 && a1 == 0 && a2 == 0) continue;
                CubicField::E cand{a0, a1, a2};
                // order check via the maximal divisors of N
                bool ok = true;
                for (long pdiv = 2; pdiv * pdiv <= N && ok; ++pdiv)
                    if (N % pdiv == 0) {
                        if (F.pow(cand, N / pdiv) == F.one()) ok = false;
                        long other = N / pdiv;
                        if (ok && other != pdiv && F.pow(cand, N / other) == F.one()) ok = false;
                    }
                if (ok && F.pow(cand, N) == F.one()) {
                    gen = cand;
                    found = true;
                }
            }
    if (!found) throw std::runtime_error("singer_design: no field generator found");
    // trace map must be checked against GF(q)-subfield membership; the trace of
    // gen^k depends only on k, and tr(c x) = c tr(x) makes D well defined mod n
    std::set<long> D;
    CubicField::E cur = F.one();
    for (long k = 0; k < N; ++k) {
        CubicField::E x1 = F.pow(cur, q), x2 = F.pow(x1, q);
        long t0 = (cur[0] + x1[0] + x2[0]) % q;
        long t1 = (cur[1] + x1[1] + x2[1]) % q;
        long t2 = (cur[2] + x1[2] + x2[2]) % q;
        if (t1 != 0 || t2 != 0) throw std::runtime_error("singer_design: trace escaped the base field");
        if (t0 == 0) D.insert(k % n);
        cur = F.mul(cur, gen);
    }
    const int d = static_cast<int>(D.size());
    if (d != q + 1) throw std::runtime_error("singer_design: |D| != q + 1");
    std::vector<Vector> vs;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (long g = 0; g < n; ++g) {
        Vector v(d);
        int c = 0;
        for (long x : D) v(c++) = scale * root_of_unity(static_cast<int>((g * x) % n), static_cast<int>(n));
        vs.push_back(v);
    }
    return make_pointset(d, vs, static_cast<int>(n), "singer_design");
}

PointSet oa_design(const std::vector<std::vector<int>>& rows, int q) {
    if (q < 3) throw std::invalid_argument("oa_design: q must be >= 3");
    if (rows.empty()) throw std::invalid_argument("oa_design: empty array");
    const int d = static_cast<int>(rows.front().size());
    int r = 0;
    for (int v : rows.front())
        if (v != 0) ++r;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != d) throw std::invalid_argument("oa_design: ragged rows");
        int rr = 0;
        for (int v : row) {
            if (v < 0 || v > q) throw std::invalid_argument("oa_design: entry out of range");
            if (v != 0) ++rr;
        }
        if (rr != r) throw std::invalid_argument("oa_design: rank varies across rows");
    }
    // strength-2 verification: lambda_2 constant over all rank-2 words below the rows
    long lambda2 = -1;
    for (int c1 = 0; c1 < d; ++c1)
        for (int c2 = c1 + 1; c2 < d; ++c2)
            for (int v1 = 1; v1 <= q; ++v1)
                for (int v2 = 1; v2 <= q; ++v2) {
                    long cnt = 0;
                    for (const auto& row : rows)
                        if (row[c1] == v1 && row[c2] == v2) ++cnt;
                    if (lambda2 < 0)
                        lambda2 = cnt;
                    else if (cnt != lambda2)
                        throw std::invalid_argument("oa_design: strength-2 count is not constant");
                }
    std::vector<Vector> vs;
    const double scale = 1.0 / std::sqrt(static_cast<double>(r));
    for (const auto& row : rows) {
        Vector v(d);
        for (int j = 0; j < d; ++j)
            v(j) = row[j] == 0 ? Complex(0.0) : scale * root_of_unity(row[j], q);
        vs.push_back(v);
    }
    return make_pointset(d, vs, static_cast<int>(rows.size()), "oa_design");
}

std::vector<std::vector<int>> oa_from_prime_lines(int q, int columns) {
    if (!is_prime(q)) throw std::invalid_argument("oa_from_prime_lines: q must be prime");
    if (columns < 2 || columns > q + 1)
        throw std::invalid_argument("oa_from_prime_lines: need 2 <= columns <= q+1");
    std::vector<std::vector<int>> rows;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<int> row;
            row.push_back(a + 1);
            row.push_back(b + 1);
            for (int c = 1; c <= columns - 2; ++c) row.push_back((a + c * b) % q + 1);
            rows.push_back(row);
        }
    return rows;
}

PointSet paley_tournament_design(long q) {
    if (!is_prime(q) || q % 4 != 3)
        throw std::invalid_argument("paley_tournament_design: q must be a prime = 3 mod 4");
    const int n = static_cast<int>(q);
    const int d = (n - 1) / 2;
    // E_1 for the tournament A_1 (quadratic-residue differences), eigenvalue
    // (-1 + i sqrt q)/2; build it from the character-sum formula directly
    Matrix E = Matrix::Zero(n, n);
    const Complex ev(-0.5, std::sqrt(static_cast<double>(q)) / 2.0);
    // E = (d/n) (I + a A_1 + conj(a) A_2) with a = ev / d determined by the
    // eigenvector relation; instead diagonalize A_1 exactly via characters:
    // characters chi_t are eigenvectors with eigenvalue sum over QR of chi_t
    Matrix A1 = Matrix::Zero(n, n);
    std::vector<int> qr;
    for (long x = 1; x < q; ++x)
        if (legendre_symbol(x, q) == 1) qr.push_back(static_cast<int>(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && legendre_symbol(y - x, q) == 1) A1(x, y) = 1.0;
    for (int t = 1; t < n; ++t) {
        Complex lam = 0.0;
        for (int x : qr) lam += root_of_unity(t * x % n, n);
        if (std::abs(lam - ev) > 1e-9) continue;
        Vector chi(n);
        for (int x = 0; x < n; ++x) chi(x) = root_of_unity(t * x % n, n) / std::sqrt(static_cast<double>(n));
        E += chi * chi.adjoint();
    }
    if (std::lround(E.trace().real()) != d)
        throw std::runtime_error("paley_tournament_design: idempotent rank mismatch");
    Matrix pts(n, d);
    Eigen::SelfAdjointEigenSolver<Matrix> es(E);
    int col = 0;
    for (int i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > 0.5) pts.col(col++) = es.eigenvectors().col(i);
    for (int i = 0; i < n; ++i) pts.row(i) /= pts.row(i).norm();
    return PointSet(d, std::move(pts), 1e-8);
}

PointSet regular_simplex_cover(int d) {
    if (d < 1) throw std::invalid_argument("regular_simplex_cover: d must be >= 1");
    const int m = 2 * d, N = m + 1;
    // vertices of a regular simplex in the hyperplane 1-perp of R^N, carried to
    // coordinates 2..N by the Householder reflection sending 1/sqrt N to e_1
    Eigen::VectorXd one = Eigen::VectorXd::Constant(N, 1.0 / std::sqrt(static_cast<double>(N)));
    Eigen::VectorXd u = one;
    u(0) -= 1.0;
    u /= u.norm();
    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(N, N) - 2.0 * u * u.transpose();
    std::vector<Vector> vs;
    for (int i = 0; i < N; ++i) {
        Eigen::VectorXd v = -Eigen::VectorXd::Constant(N, 1.0 / N);
        v(i) += 1.0;
        v *= std::sqrt(static_cast<double>(N) / m);
        Eigen::VectorXd w = H * v;
        Vector z(d);
        for (int j = 0; j < d; ++j) z(j) = Complex(w(2 * j + 1), w(2 * j + 2));
        vs.push_back(z);
    }
    return make_pointset(d, vs, N, "regular_simplex_cover");
}

}  // namespace cdl
