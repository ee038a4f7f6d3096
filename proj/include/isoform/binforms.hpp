#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoform/linalg.hpp"
#include "isoform/polygroup.hpp"

namespace isoform {

// Homogeneous form in two variables; coefficient of X^(deg-k) Y^k sits at
// index k. The zero form keeps its degree tag.
class BinaryForm {
public:
    BinaryForm() : deg_(0), c_(1) {}
    explicit BinaryForm(int degree) : deg_(degree), c_(degree + 1) {
        if (degree < 0) throw domain_error("negative form degree");
    }
    BinaryForm(int degree, std::vector<Cyclotomic> coeffs) : deg_(degree), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != degree + 1)
            throw domain_error("coefficient count must be degree + 1");
    }

    static BinaryForm constant(const Cyclotomic& v) { return BinaryForm(0, {v}); }

    // coefficient * X^a Y^b
    static BinaryForm monomial(const Cyclotomic& coeff, int a, int b) {
        BinaryForm f(a + b);
        f.c_[b] = coeff;
        return f;
    }

    int degree() const { return deg_; }
    const Cyclotomic& coeff(int k) const { return c_[k]; }
    const std::vector<Cyclotomic>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend BinaryForm operator+(const BinaryForm& p, const BinaryForm& q) {
        if (p.deg_ != q.deg_) throw domain_error("adding forms of different degrees");
        BinaryForm out = p;
        for (int k = 0; k <= p.deg_; ++k) out.c_[k] = out.c_[k] + q.c_[k];
        return out;
    }

    friend BinaryForm operator-(const BinaryForm& p, const BinaryForm& q) {
        if (p.deg_ != q.deg_) throw domain_error("subtracting forms of different degrees");
        BinaryForm out = p;
        for (int k = 0; k <= p.deg_; ++k) out.c_[k] = out.c_[k] - q.c_[k];
        return out;
    }

    friend BinaryForm operator*(const BinaryForm& p, const BinaryForm& q) {
        BinaryForm out(p.deg_ + q.deg_);
        for (int i = 0; i <= p.deg_; ++i) {
            if (p.c_[i].is_zero()) continue;
            for (int j = 0; j <= q.deg_; ++j)
                if (!q.c_[j].is_zero()) out.c_[i + j] = out.c_[i + j] + p.c_[i] * q.c_[j];
        }
        return out;
    }

    friend BinaryForm operator*(const BinaryForm& p, const Cyclotomic& s) {
        BinaryForm out = p;
        for (auto& v : out.c_) v = v * s;
        return out;
    }

    friend BinaryForm operator*(const Cyclotomic& s, const BinaryForm& p) { return p * s; }

    friend bool operator==(const BinaryForm& p, const BinaryForm& q) {
        if (p.deg_ != q.deg_) return false;
        for (int k = 0; k <= p.deg_; ++k)
            if (!(p.c_[k] == q.c_[k])) return false;
        return true;
    }

    BinaryForm pow(int e) const {
        BinaryForm acc = constant(Cyclotomic(1));
        for (int i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    Cyclotomic eval(const ProjPoint& p) const {
        // x^(deg-k) y^k accumulated from the high-X end.
        Cyclotomic acc;
        Cyclotomic xpow = Cyclotomic::rational_in(p.x().conductor(), Rational(1));
        std::vector<Cyclotomic> ypows(deg_ + 1);
        ypows[0] = Cyclotomic::rational_in(p.x().conductor(), Rational(1));
        for (int k = 1; k <= deg_; ++k) ypows[k] = ypows[k - 1] * p.y();
        // Walk k downward so x-powers build up once.
        for (int k = deg_; k >= 0; --k) {
            if (!c_[k].is_zero()) acc = acc + c_[k] * xpow * ypows[k];
            if (k > 0) xpow = xpow * p.x();
        }
        return acc;
    }

    // Scales so the first nonzero coefficient (lowest index) becomes 1.
    BinaryForm normalized() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return (*this) * v.inverse();
        return *this;
    }

    // Number of Y factors: the lowest index with a nonzero coefficient.
    int y_multiplicity() const {
        for (int k = 0; k <= deg_; ++k)
            if (!c_[k].is_zero()) return k;
        return deg_ + 1;  // zero form
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = 0; k <= deg_; ++k) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[k].str() + ")";
            int a = deg_ - k, b = k;
            if (a > 0) out += "*X" + (a > 1 ? "^" + std::to_string(a) : "");
            if (b > 0) out += "*Y" + (b > 1 ? "^" + std::to_string(b) : "");
        }
        return out;
    }

private:
    int deg_;
    std::vector<Cyclotomic> c_;
};

namespace detail {

// (aX + bY)^t for t = 0..d, as coefficient vectors.
inline std::vector<std::vector<Cyclotomic>> linear_powers(const Cyclotomic& a,
                                                          const Cyclotomic& b, int d) {
    std::vector<std::vector<Cyclotomic>> pows(d + 1);
    pows[0] = {Cyclotomic::rational_in(a.conductor(), Rational(1))};
    for (int t = 1; t <= d; ++t) {
        std::vector<Cyclotomic> next(t + 1);
        for (int k = 0; k < t; ++k) {
            if (pows[t - 1][k].is_zero()) continue;
            next[k] = next[k] + pows[t - 1][k] * a;
            next[k + 1] = next[k + 1] + pows[t - 1][k] * b;
        }
        pows[t] = std::move(next);
    }
    return pows;
}

}  // namespace detail

// Substitution action (g . P)(X, Y) = P(g^-1 (X, Y)); a left group action
// preserving the degree.
inline BinaryForm act_on_form(const Mat2& g, const BinaryForm& p) {
    const Mat2 gi = g.inverse();
    const int d = p.degree();
    auto xs = detail::linear_powers(gi.at(0, 0), gi.at(0, 1), d);
    auto ys = detail::linear_powers(gi.at(1, 0), gi.at(1, 1), d);
    BinaryForm out(d);
    for (int k = 0; k <= d; ++k) {
        if (p.coeff(k).is_zero()) continue;
        // p_k * (aX+bY)^(d-k) * (cX+dY)^k
        const auto& u = xs[d - k];
        const auto& v = ys[k];
        std::vector<Cyclotomic> conv(d + 1);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!v[j].is_zero()) conv[i + j] = conv[i + j] + u[i] * v[j];
        }
        BinaryForm term(d, std::move(conv));
        out = out + term * p.coeff(k);
    }
    return out;
}

// Matrix of the substitution action on the monomial basis X^d, X^(d-1)Y, ...
// of degree-d forms; column j is the image of X^(d-j) Y^j.
inline Matrix<Cyclotomic> sym_power_matrix(const Mat2& g, int d) {
    const Mat2 gi = g.inverse();
    auto xs = detail::linear_powers(gi.at(0, 0), gi.at(0, 1), d);
    auto ys = detail::linear_powers(gi.at(1, 0), gi.at(1, 1), d);
    Matrix<Cyclotomic> m(d + 1, d + 1);
    for (int j = 0; j <= d; ++j) {
        const auto& u = xs[d - j];
        const auto& v = ys[j];
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero()) m(i + k, j) = m(i + k, j) + u[i] * v[k];
        }
    }
    return m;
}

// Exact quotient P / F, or nothing when F does not divide P. Works through
// the dehomogenization p(t) = P(t, 1), with the Y multiplicity tracked
// separately since it is invisible in p.
inline std::optional<BinaryForm> divide_exact(const BinaryForm& p, const BinaryForm& f) {
    if (f.is_zero()) throw division_by_zero("form division by zero");
    if (p.degree() < f.degree()) return std::nullopt;
    const int dq = p.degree() - f.degree();
    if (p.is_zero()) return BinaryForm(dq);

    const int yp = p.y_multiplicity();
    const int yf = f.y_multiplicity();
    if (yp < yf) return std::nullopt;

    // Univariate coefficients, descending in t = X/Y: num[m] = coeff of t^m.
    const int dp = p.degree() - yp;  // degree of p(t)
    const int df = f.degree() - yf;
    if (dp < df) return std::nullopt;
    std::vector<Cyclotomic> num(dp + 1), den(df + 1);
    for (int m = 0; m <= dp; ++m) num[m] = p.coeff(p.degree() - m);
    for (int m = 0; m <= df; ++m) den[m] = f.coeff(f.degree() - m);

    std::vector<Cyclotomic> quot(dp - df + 1);
    const Cyclotomic lead_inv = den[df].inverse();
    for (int k = dp - df; k >= 0; --k) {
        Cyclotomic c = num[k + df] * lead_inv;
        quot[k] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= df; ++j) num[k + j] = num[k + j] - c * den[j];
    }
    for (const auto& r : num)
        if (!r.is_zero()) return std::nullopt;

    // q(t) has degree dp - df; the quotient form regains yp - yf factors of Y
    // through the indices below yp - yf staying zero.
    std::vector<Cyclotomic> qc(dq + 1);
    for (int m = 0; m <= dp - df; ++m) qc[dq - m] = quot[m];
    return BinaryForm(dq, std::move(qc));
}

// The form of degree |orbit| vanishing exactly on the orbit, normalized so
// its first nonzero coefficient is 1, together with the root-of-unity
// multiplier picked up under each labeled generator.
struct GroundForm {
    BinaryForm form;
    OrbitData orbit;
    std::map<std::string, Cyclotomic> multipliers;  // generator name -> scalar
};

inline GroundForm ground_form(const FiniteMatrixGroup& g, const OrbitData& orbit) {
    const Cyclotomic one = Cyclotomic::rational_in(g.conductor, Rational(1));
    BinaryForm f = BinaryForm::constant(one);
    for (const ProjPoint& p : orbit.points) {
        // y0 X - x0 Y vanishes at (x0 : y0).
        BinaryForm lin(1, {p.y(), -p.x()});
        f = f * lin;
    }
    GroundForm out{f.normalized(), orbit, {}};
    for (std::size_t i = 0; i < g.gen_indices.size(); ++i) {
        BinaryForm moved = act_on_form(g.elements[g.gen_indices[i]], out.form);
        // moved = multiplier * form, with the multiplier a root of unity.
        int k = out.form.y_multiplicity();
        Cyclotomic mult = moved.coeff(k);  // form.coeff(k) == 1 after normalization
        if (!(moved == out.form * mult))
            throw consistency_error("orbit product is not a relative invariant");
        bool root_of_unity = false;
        Cyclotomic acc = mult;
        for (int e = 1; e <= 2 * g.lift_order() && !root_of_unity; ++e) {
            root_of_unity = acc == one;
            acc = acc * mult;
        }
        if (!root_of_unity) throw consistency_error("ground form multiplier is not a root of unity");
        out.multipliers[g.gen_names[i]] = mult;
    }
    if (out.form.degree() != orbit.size)
        throw consistency_error("ground form degree differs from the orbit size");
    return out;
}

}  // namespace isoform
