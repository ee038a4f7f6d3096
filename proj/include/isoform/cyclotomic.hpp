#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "isoform/rational.hpp"

namespace isoform {

namespace detail {

inline int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Quotient of integer polynomials, assuming exact divisibility and a monic
// divisor up to sign of the leading coefficient (true for x^n - 1 / cyclotomics).
inline std::vector<Integer> poly_div_exact_int(std::vector<Integer> num,
                                               const std::vector<Integer>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<Integer> quot(dn - dd + 1, Integer(0));
    for (int k = dn - dd; k >= 0; --k) {
        Integer c = num[k + dd] / den[dd];
        quot[k] = c;
        if (c != 0)
            for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw consistency_error("inexact polynomial division");
    return quot;
}

}  // namespace detail

// Shared per-conductor data: the n-th cyclotomic polynomial and the power
// basis reduction rows x^k mod Phi_n. Instances are built once and never
// mutated, so lookups are safe to share across threads after warm-up.
class CycloField {
public:
    int conductor() const { return n_; }
    int degree() const { return phi_; }

    // x^k mod Phi_n as an integer coefficient row of length phi(n); k < n.
    const std::vector<Integer>& power_row(int k) const { return pow_[k]; }

    const std::vector<Integer>& minpoly() const { return minpoly_; }

    static const CycloField& get(int n) {
        if (n < 1) throw domain_error("conductor must be positive");
        static std::map<int, std::unique_ptr<CycloField>> cache;
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
        return *it->second;
    }

private:
    explicit CycloField(int n) : n_(n), phi_(detail::euler_phi(n)) {
        std::vector<Integer> full = cyclotomic_poly(n);
        if (static_cast<int>(full.size()) != phi_ + 1 || full.back() != 1)
            throw consistency_error("cyclotomic polynomial has unexpected shape");
        full.pop_back();
        minpoly_ = std::move(full);
        // Rows for x^k, k = 0 .. max(n, 2*phi - 1) - 1, enough for both the
        // multiplication reduction and exponent lookups mod n.
        const int rows = std::max(n, 2 * phi_ - 1);
        pow_.assign(rows, std::vector<Integer>(phi_, Integer(0)));
        for (int k = 0; k < rows; ++k) {
            if (k < phi_) {
                pow_[k][k] = 1;
                continue;
            }
            // x^k = x * x^(k-1), then eliminate the degree-phi term using
            // x^phi = -(minpoly_[0] + ... + minpoly_[phi-1] x^(phi-1)).
            const auto& prev = pow_[k - 1];
            std::vector<Integer> row(phi_, Integer(0));
            for (int i = 0; i + 1 < phi_; ++i) row[i + 1] = prev[i];
            const Integer& lead = prev[phi_ - 1];
            if (lead != 0)
                for (int i = 0; i < phi_; ++i) row[i] -= lead * minpoly_[i];
            pow_[k] = std::move(row);
        }
    }

    static std::vector<Integer> cyclotomic_poly(int n) {
        // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            num = detail::poly_div_exact_int(num, get(d).minpoly_full());
        }
        return num;
    }

    // Phi_n including the monic leading term (degree phi).
    std::vector<Integer> minpoly_full() const {
        std::vector<Integer> p = minpoly_;
        p.push_back(Integer(1));
        return p;
    }

    int n_;
    int phi_;
    std::vector<Integer> minpoly_;  // low phi coefficients of Phi_n (monic part implicit)
    std::vector<std::vector<Integer>> pow_;
};

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
// reduced modulo the n-th cyclotomic polynomial. The representation is
// canonical, so equality is coefficient-wise. Values are immutable in spirit:
// every operation returns a fresh element.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}

    explicit Cyclotomic(const Rational& q) : n_(1), c_(1, q) {}
    explicit Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}

    Cyclotomic(int conductor, std::vector<Rational> coeffs) : n_(conductor), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != CycloField::get(n_).degree())
            throw domain_error("coefficient count must equal phi(conductor)");
    }

    // zeta_n^k
    static Cyclotomic zeta(int n, long k = 1) {
        const CycloField& f = CycloField::get(n);
        k %= n;
        if (k < 0) k += n;
        std::vector<Rational> c(f.degree());
        const auto& row = f.power_row(static_cast<int>(k));
        for (int i = 0; i < f.degree(); ++i) c[i] = Rational(row[i]);
        return Cyclotomic(n, std::move(c));
    }

    static Cyclotomic rational_in(int n, const Rational& q) {
        std::vector<Rational> c(CycloField::get(n).degree(), Rational(0));
        c[0] = q;
        return Cyclotomic(n, std::move(c));
    }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    // Only valid when is_rational().
    Rational rational_value() const {
        if (!is_rational()) throw consistency_error("value is not rational");
        return c_[0];
    }

    // Embeds into Q(zeta_m); requires conductor | m.
    Cyclotomic embedded(int m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw conductor_mismatch("embedding requires a divisible conductor");
        const CycloField& f = CycloField::get(m);
        const int step = m / n_;
        std::vector<Rational> out(f.degree(), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = f.power_row(static_cast<int>(i) * step);
            for (int j = 0; j < f.degree(); ++j)
                if (row[j] != 0) out[j] += c_[i] * Rational(row[j]);
        }
        return Cyclotomic(m, std::move(out));
    }

    // Galois map zeta -> zeta^t; requires gcd(t, n) = 1.
    Cyclotomic galois(long t) const {
        long tm = t % n_;
        if (tm < 0) tm += n_;
        if (std::gcd(tm, static_cast<long>(n_)) != 1)
            throw domain_error("galois exponent must be coprime to the conductor");
        const CycloField& f = CycloField::get(n_);
        std::vector<Rational> out(f.degree(), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = f.power_row(static_cast<int>((i * tm) % n_));
            for (int j = 0; j < f.degree(); ++j)
                if (row[j] != 0) out[j] += c_[i] * Rational(row[j]);
        }
        return Cyclotomic(n_, std::move(out));
    }

    // Complex conjugation zeta -> zeta^(-1). Fixed points are exactly the
    // real-valued elements.
    Cyclotomic conj() const {
        if (n_ <= 2) return *this;
        return galois(n_ - 1);
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& q : r.c_) q = -q;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }

    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote(a, b);
        const CycloField& f = CycloField::get(x.n_);
        const int phi = f.degree();
        // Convolution, then reduction of the overflow powers by table rows.
        std::vector<Rational> conv(2 * phi - 1, Rational(0));
        for (int i = 0; i < phi; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j)
                if (y.c_[j] != 0) conv[i + j] += x.c_[i] * y.c_[j];
        }
        std::vector<Rational> out(conv.begin(), conv.begin() + phi);
        for (int k = phi; k < 2 * phi - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = f.power_row(k);
            for (int j = 0; j < phi; ++j)
                if (row[j] != 0) out[j] += conv[k] * Rational(row[j]);
        }
        return Cyclotomic(x.n_, std::move(out));
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& s) {
        Cyclotomic r = a;
        for (auto& q : r.c_) q *= s;
        return r;
    }

    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) { return a * s; }

    // Multiplicative inverse via the extended Euclidean algorithm on the
    // coefficient polynomial modulo Phi_n.
    Cyclotomic inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        if (is_rational()) return rational_in(n_, Rational(1) / c_[0]);
        const CycloField& f = CycloField::get(n_);
        std::vector<Rational> r0 = full_minpoly_rational(f);
        std::vector<Rational> r1 = trimmed(c_);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        while (true) {
            auto [q, rem] = poly_divmod(r0, r1);
            if (rem.empty()) break;
            // s_{k+1} = s_{k-1} - q * s_k
            std::vector<Rational> s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant gcd (Phi_n is irreducible over Q).
        if (r1.size() != 1) throw consistency_error("cyclotomic gcd is not constant");
        const Rational lead = r1[0];
        std::vector<Rational> out(f.degree(), Rational(0));
        for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / lead;
        return Cyclotomic(n_, std::move(out));
    }

    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic acc = rational_in(n_, Rational(1));
        Cyclotomic base = *this;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote(a, b);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        const double tau = 6.283185307179586476925286766559;
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            double coeff = mpq_get_d(c_[i].get_mpq_t());
            double ang = tau * static_cast<double>(i) / static_cast<double>(n_);
            acc += coeff * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return acc;
    }

    // Canonical serialization; equal elements of equal conductor give equal keys.
    std::string key() const {
        std::ostringstream os;
        os << n_;
        for (const auto& q : c_) os << '|' << rational_str(q);
        return os.str();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rational q = c_[i];
            if (!first) {
                os << (q < 0 ? " - " : " + ");
                if (q < 0) q = -q;
            }
            first = false;
            const bool unit = (q == 1 || q == -1);
            if (i == 0 || !unit) os << rational_str(q);
            if (i > 0) {
                if (!unit) os << "*";
                os << "z" << n_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

    // Lexicographic coefficient order; both operands must share a conductor.
    static int lex_cmp(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = promote(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            int c = cmp_rational(x.c_[i], y.c_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    // Common field of two elements: equal conductors, or one dividing the other.
    static std::pair<Cyclotomic, Cyclotomic> promote(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return {a, b};
        if (b.n_ % a.n_ == 0) return {a.embedded(b.n_), b};
        if (a.n_ % b.n_ == 0) return {a, b.embedded(a.n_)};
        throw conductor_mismatch("conductors " + std::to_string(a.n_) + " and " +
                                 std::to_string(b.n_) + " are incompatible");
    }

private:
    static std::vector<Rational> trimmed(std::vector<Rational> p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    }

    static std::vector<Rational> full_minpoly_rational(const CycloField& f) {
        std::vector<Rational> p(f.degree() + 1);
        for (int i = 0; i < f.degree(); ++i) p[i] = Rational(f.minpoly()[i]);
        p[f.degree()] = 1;
        return p;
    }

    static std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return trimmed(std::move(out));
    }

    static std::vector<Rational> poly_sub(const std::vector<Rational>& a,
                                          const std::vector<Rational>& b) {
        std::vector<Rational> out(std::max(a.size(), b.size()), Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        return trimmed(std::move(out));
    }

    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        if (den.empty()) throw division_by_zero("polynomial division by zero");
        if (num.size() < den.size()) return {{}, trimmed(std::move(num))};
        std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
        const Rational lead = den.back();
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            Rational c = num[k + den.size() - 1] / lead;
            quot[k] = c;
            if (c != 0)
                for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
        }
        return {trimmed(std::move(quot)), trimmed(std::move(num))};
    }

    int n_;
    std::vector<Rational> c_;
};

}  // namespace isoform
