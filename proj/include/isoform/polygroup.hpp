#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "isoform/cyclotomic.hpp"

namespace isoform {

enum class Family { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

struct GroupSpec {
    Family family = Family::Cyclic;
    int parameter = 1;  // N, for the cyclic and dihedral families

    // "C<N>", "D<N>", "T", "O", "Y"
    static GroupSpec parse(const std::string& s) {
        if (s.empty()) throw usage_error("empty group spec");
        GroupSpec spec;
        switch (s[0]) {
            case 'T': spec.family = Family::Tetrahedral; break;
            case 'O': spec.family = Family::Octahedral; break;
            case 'Y': spec.family = Family::Icosahedral; break;
            case 'C': spec.family = Family::Cyclic; break;
            case 'D': spec.family = Family::Dihedral; break;
            default: throw usage_error("unknown group spec '" + s + "'");
        }
        if (spec.family == Family::Cyclic || spec.family == Family::Dihedral) {
            if (s.size() < 2) throw usage_error("missing parameter in '" + s + "'");
            try {
                spec.parameter = std::stoi(s.substr(1));
            } catch (const std::exception&) {
                throw usage_error("bad parameter in '" + s + "'");
            }
            if (spec.family == Family::Cyclic && spec.parameter < 1)
                throw usage_error("cyclic parameter must be at least 1");
            if (spec.family == Family::Dihedral && spec.parameter < 2)
                throw usage_error("dihedral parameter must be at least 2");
        } else if (s.size() > 1) {
            throw usage_error("unexpected parameter in '" + s + "'");
        }
        return spec;
    }

    std::string str() const {
        switch (family) {
            case Family::Cyclic: return "C" + std::to_string(parameter);
            case Family::Dihedral: return "D" + std::to_string(parameter);
            case Family::Tetrahedral: return "T";
            case Family::Octahedral: return "O";
            case Family::Icosahedral: return "Y";
        }
        return {};
    }

    // One field holding the matrix entries, all character values and every
    // exceptional point. Minimality is not required.
    int conductor() const {
        switch (family) {
            case Family::Cyclic: return parameter;
            case Family::Dihedral: return 4 * parameter;
            case Family::Tetrahedral: return 24;
            case Family::Octahedral: return 24;
            case Family::Icosahedral: return 60;
        }
        return 1;
    }

    bool operator==(const GroupSpec& o) const {
        return family == o.family && parameter == o.parameter;
    }
};

// 2x2 matrix over a cyclotomic field with cached determinant.
class Mat2 {
public:
    Mat2() = default;
    Mat2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d)
        : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
        det_ = e_[0] * e_[3] - e_[1] * e_[2];
        if (det_.is_zero()) throw domain_error("singular 2x2 matrix");
    }

    static Mat2 identity(int conductor) {
        Cyclotomic one = Cyclotomic::rational_in(conductor, Rational(1));
        Cyclotomic zero = Cyclotomic::rational_in(conductor, Rational(0));
        return Mat2(one, zero, zero, one);
    }

    const Cyclotomic& at(int i, int j) const { return e_[2 * i + j]; }
    const Cyclotomic& det() const { return det_; }
    Cyclotomic trace() const { return e_[0] + e_[3]; }

    Mat2 inverse() const {
        Cyclotomic inv_det = det_.inverse();
        return Mat2(e_[3] * inv_det, -e_[1] * inv_det, -e_[2] * inv_det, e_[0] * inv_det);
    }

    Mat2 negated() const { return Mat2(-e_[0], -e_[1], -e_[2], -e_[3]); }

    bool is_scalar() const { return e_[1].is_zero() && e_[2].is_zero() && e_[0] == e_[3]; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2],
                    x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                    x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2],
                    x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
    }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        for (int i = 0; i < 4; ++i)
            if (!(x.e_[i] == y.e_[i])) return false;
        return true;
    }

    Mat2 embedded(int conductor) const {
        return Mat2(e_[0].embedded(conductor), e_[1].embedded(conductor),
                    e_[2].embedded(conductor), e_[3].embedded(conductor));
    }

    std::string key() const {
        return e_[0].key() + "#" + e_[1].key() + "#" + e_[2].key() + "#" + e_[3].key();
    }

private:
    std::array<Cyclotomic, 4> e_;
    Cyclotomic det_;
};

// A point of the projective line, normalized to y = 1, or x = 1 when y = 0.
class ProjPoint {
public:
    static ProjPoint of(const Cyclotomic& x, const Cyclotomic& y) {
        if (y.is_zero()) {
            if (x.is_zero()) throw domain_error("(0,0) is not a projective point");
            return infinity(x.conductor());
        }
        ProjPoint p;
        p.x_ = x / y;
        p.y_ = Cyclotomic::rational_in(p.x_.conductor(), Rational(1));
        p.inf_ = false;
        return p;
    }

    static ProjPoint finite(const Cyclotomic& lambda) {
        return of(lambda, Cyclotomic::rational_in(lambda.conductor(), Rational(1)));
    }

    static ProjPoint infinity(int conductor) {
        ProjPoint p;
        p.x_ = Cyclotomic::rational_in(conductor, Rational(1));
        p.y_ = Cyclotomic::rational_in(conductor, Rational(0));
        p.inf_ = true;
        return p;
    }

    bool is_infinity() const { return inf_; }
    const Cyclotomic& x() const { return x_; }
    const Cyclotomic& y() const { return y_; }

    Cyclotomic lambda() const {
        if (inf_) throw domain_error("point at infinity has no affine coordinate");
        return x_;
    }

    ProjPoint apply(const Mat2& m) const {
        return of(m.at(0, 0) * x_ + m.at(0, 1) * y_, m.at(1, 0) * x_ + m.at(1, 1) * y_);
    }

    friend bool operator==(const ProjPoint& p, const ProjPoint& q) {
        if (p.inf_ != q.inf_) return false;
        return p.inf_ || p.x_ == q.x_;
    }

    std::string key() const { return inf_ ? "inf" : x_.key(); }

    // Infinity sorts before every finite point; finite points sort by the
    // coefficient vector of their affine coordinate.
    static int cmp(const ProjPoint& p, const ProjPoint& q) {
        if (p.inf_ && q.inf_) return 0;
        if (p.inf_) return -1;
        if (q.inf_) return 1;
        return Cyclotomic::lex_cmp(p.x_, q.x_);
    }

    std::string str() const { return inf_ ? "inf" : x_.str(); }

private:
    Cyclotomic x_, y_;
    bool inf_ = false;
};

struct OrbitData {
    char label = 'g';  // 'a', 'b', 'c', or 'g' for a generic orbit
    std::vector<ProjPoint> points;
    int stabiliser_order = 1;  // nu
    int size = 0;              // d

    bool contains(const ProjPoint& p) const {
        for (const auto& q : points)
            if (q == p) return true;
        return false;
    }
};

// A fully enumerated 2x2 matrix lift of a polyhedral Moebius group, with
// multiplication tables for both the lift and the Moebius quotient,
// conjugacy classes, labeled generators and the exceptional orbit data.
// Immutable after build_group returns.
class FiniteMatrixGroup {
public:
    GroupSpec spec;
    int conductor = 1;
    std::vector<Mat2> elements;  // index 0 = identity
    bool is_double_cover = false;
    int z_index = -1;  // index of -Id for double covers

    // Labeled generators as element indices. Non-cyclic: {g_a, g_b, g_c};
    // cyclic: one entry. Dihedral groups additionally expose r and s.
    std::vector<int> gen_indices;
    std::vector<std::string> gen_names;
    int r_index = -1, s_index = -1;

    std::vector<int> class_of;               // lift element -> class
    std::vector<std::vector<int>> classes;   // class -> sorted element indices
    std::vector<int> order_of;               // lift element orders

    std::vector<int> mobius_of;              // lift element -> Moebius element
    std::vector<int> mobius_rep;             // Moebius element -> lift representative
    int mobius_order = 0;

    std::vector<OrbitData> exceptional;      // labeled a, b, c (cyclic: a, b)

    int lift_order() const { return static_cast<int>(elements.size()); }

    int mult(int i, int j) const { return mult_[i * elements.size() + j]; }
    int inv(int i) const { return inv_[i]; }

    int pow(int i, long e) const {
        long m = static_cast<long>(elements.size());
        e %= m * 2;  // element orders divide the exponent; keep it small
        int acc = 0;
        int base = e >= 0 ? i : inv_[i];
        long k = e >= 0 ? e : -e;
        for (long t = 0; t < k; ++t) acc = mult(acc, base);
        return acc;
    }

    int mobius_mult(int i, int j) const { return mobius_of[mult(mobius_rep[i], mobius_rep[j])]; }
    int mobius_inv(int i) const { return mobius_of[inv_[mobius_rep[i]]]; }

    int mobius_element_order(int mi) const {
        int acc = mi, n = 1;
        while (acc != 0) {
            acc = mobius_mult(acc, mi);
            ++n;
        }
        return n;
    }

    ProjPoint mobius_apply(int mi, const ProjPoint& p) const {
        return p.apply(elements[mobius_rep[mi]]);
    }

    int find(const Mat2& m) const {
        auto it = index_.find(m.key());
        return it == index_.end() ? -1 : it->second;
    }

    // Index of the labeled generator by name ("g_a", "r", "g", ...).
    int generator(const std::string& name) const {
        for (std::size_t i = 0; i < gen_names.size(); ++i)
            if (gen_names[i] == name) return gen_indices[i];
        throw domain_error("no generator named '" + name + "'");
    }

    const OrbitData& orbit(char label) const {
        for (const auto& o : exceptional)
            if (o.label == label) return o;
        throw domain_error(std::string("no exceptional orbit '") + label + "'");
    }

    // Moebius stabiliser of a point, as Moebius element indices.
    std::vector<int> stabiliser(const ProjPoint& p) const {
        std::vector<int> result;
        for (int mi = 0; mi < mobius_order; ++mi)
            if (mobius_apply(mi, p) == p) result.push_back(mi);
        // Stabilisers of points on the projective line are cyclic.
        bool cyclic = false;
        for (int mi : result)
            if (mobius_element_order(mi) == static_cast<int>(result.size())) cyclic = true;
        if (!cyclic) throw consistency_error("point stabiliser is not cyclic");
        return result;
    }

    OrbitData orbit_of(const ProjPoint& seed) const {
        std::map<std::string, ProjPoint> seen;
        std::vector<ProjPoint> queue{seed};
        seen.emplace(seed.key(), seed);
        while (!queue.empty()) {
            ProjPoint p = queue.back();
            queue.pop_back();
            for (int g : gen_indices) {
                ProjPoint q = p.apply(elements[g]);
                if (seen.emplace(q.key(), q).second) queue.push_back(q);
            }
        }
        OrbitData orbit;
        for (auto& [k, p] : seen) orbit.points.push_back(p);
        std::sort(orbit.points.begin(), orbit.points.end(),
                  [](const ProjPoint& p, const ProjPoint& q) { return ProjPoint::cmp(p, q) < 0; });
        orbit.size = static_cast<int>(orbit.points.size());
        orbit.stabiliser_order = mobius_order / orbit.size;
        orbit.label = 'g';
        for (const auto& exc : exceptional)
            if (exc.contains(seed)) orbit.label = exc.label;
        return orbit;
    }

    friend FiniteMatrixGroup build_group(const GroupSpec& spec);

private:
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::unordered_map<std::string, int> index_;
};

namespace detail {

struct GeneratorSeed {
    std::vector<Mat2> gens;
    std::vector<std::string> names;
};

inline GeneratorSeed seed_generators(const GroupSpec& spec) {
    const int n = spec.conductor();
    auto zeta = [&](int m, long k) { return Cyclotomic::zeta(m, k).embedded(n); };
    auto rat = [&](long v) { return Cyclotomic::rational_in(n, Rational(v)); };
    auto half = [&](const Cyclotomic& v) { return v * Rational(1, 2); };

    GeneratorSeed seed;
    switch (spec.family) {
        case Family::Cyclic: {
            // diag(zeta_N, 1): faithful for every N, plain lift.
            seed.gens = {Mat2(zeta(spec.parameter, 1), rat(0), rat(0), rat(1))};
            seed.names = {"g"};
            break;
        }
        case Family::Dihedral: {
            const int N = spec.parameter;
            if (N % 2 == 1) {
                // Plain lift: r = diag(w, w^(N-1)), s = antidiag(1, 1).
                Mat2 r(zeta(N, 1), rat(0), rat(0), zeta(N, N - 1));
                Mat2 s(rat(0), rat(1), rat(1), rat(0));
                seed.gens = {r, s};
            } else {
                // Binary dihedral: r = diag(z2N, z2N^-1), s = ((0,1),(-1,0)).
                Mat2 r(zeta(2 * N, 1), rat(0), rat(0), zeta(2 * N, 2 * N - 1));
                Mat2 s(rat(0), rat(1), rat(-1), rat(0));
                seed.gens = {r, s};
            }
            seed.names = {"r", "s"};
            break;
        }
        case Family::Tetrahedral: {
            // Unit quaternions (1+i+j+k)/2 and i.
            Cyclotomic i = zeta(4, 1);
            Mat2 ga(half(rat(1) + i), half(rat(1) + i), half(rat(-1) + i), half(rat(1) - i));
            Mat2 gc(i, rat(0), rat(0), -i);
            seed.gens = {ga, gc};
            seed.names = {"g_a", "g_c"};
            break;
        }
        case Family::Octahedral: {
            // diag(z8, z8^-1) and the unit quaternion (i+j)/sqrt(2).
            Cyclotomic i = zeta(4, 1);
            Cyclotomic inv_sqrt2 = (zeta(8, 1) + zeta(8, 7)).inverse();
            Mat2 ga(zeta(8, 1), rat(0), rat(0), zeta(8, 7));
            Mat2 gc(i * inv_sqrt2, inv_sqrt2, -inv_sqrt2, -i * inv_sqrt2);
            seed.gens = {ga, gc};
            seed.names = {"g_a", "g_c"};
            break;
        }
        case Family::Icosahedral: {
            // -diag(e^3, e^2) with e = zeta_5, and the classical trace-zero
            // involution lift with entries in Q(zeta_5).
            Cyclotomic e1 = zeta(5, 1), e2 = zeta(5, 2), e3 = zeta(5, 3), e4 = zeta(5, 4);
            Cyclotomic sqrt5 = e1 - e2 - e3 + e4;
            Cyclotomic inv_sqrt5 = sqrt5.inverse();
            Mat2 ga(-e3, rat(0), rat(0), -e2);
            Mat2 gc((e4 - e1) * inv_sqrt5, (e2 - e3) * inv_sqrt5, (e2 - e3) * inv_sqrt5,
                    (e1 - e4) * inv_sqrt5);
            seed.gens = {ga, gc};
            seed.names = {"g_a", "g_c"};
            break;
        }
    }
    return seed;
}

}  // namespace detail

// Fixed points of a nonscalar matrix acting on the projective line. The
// eigenvalues of a finite-order element are roots of unity in the working
// field, so the quadratic for the fixed points splits exactly.
inline std::vector<ProjPoint> fixed_points(const Mat2& m) {
    const int n = m.at(0, 0).conductor();
    const Cyclotomic& a = m.at(0, 0);
    const Cyclotomic& b = m.at(0, 1);
    const Cyclotomic& c = m.at(1, 0);
    const Cyclotomic& d = m.at(1, 1);
    std::vector<ProjPoint> pts;
    if (c.is_zero()) {
        pts.push_back(ProjPoint::infinity(n));
        Cyclotomic diff = d - a;
        if (!diff.is_zero()) pts.push_back(ProjPoint::finite(b / diff));
        else if (!b.is_zero())
            throw consistency_error("parabolic element in a finite group");
        return pts;
    }
    const Cyclotomic tr = m.trace();
    const Cyclotomic& det = m.det();
    for (int k = 0; k < n; ++k) {
        Cyclotomic mu = Cyclotomic::zeta(n, k);
        if (!(mu * mu - tr * mu + det).is_zero()) continue;
        // Eigenvector (mu - d, c); c != 0 keeps it nonzero.
        ProjPoint p = ProjPoint::of(mu - d, c);
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(p);
    }
    if (pts.empty()) throw consistency_error("no eigenvalue found in the working field");
    return pts;
}

inline FiniteMatrixGroup build_group(const GroupSpec& spec) {
    FiniteMatrixGroup g;
    g.spec = spec;
    g.conductor = spec.conductor();

    detail::GeneratorSeed seed = detail::seed_generators(spec);

    // Closure from the generators, breadth first; index 0 is the identity.
    g.elements.push_back(Mat2::identity(g.conductor));
    g.index_[g.elements[0].key()] = 0;
    std::vector<int> closure_gens;
    for (const Mat2& gen : seed.gens) {
        auto [it, fresh] = g.index_.emplace(gen.key(), static_cast<int>(g.elements.size()));
        if (fresh) g.elements.push_back(gen);
        closure_gens.push_back(it->second);
    }
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (std::size_t v = 0; v < closure_gens.size(); ++v) {
            Mat2 prod = g.elements[head] * g.elements[closure_gens[v]];
            auto [it, fresh] = g.index_.emplace(prod.key(), static_cast<int>(g.elements.size()));
            if (fresh) g.elements.push_back(prod);
        }
        if (g.elements.size() > 400) throw consistency_error("closure does not terminate");
    }
    const int n = static_cast<int>(g.elements.size());

    // Multiplication table, built from matrix products once.
    g.mult_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat2 prod = g.elements[i] * g.elements[j];
            auto it = g.index_.find(prod.key());
            if (it == g.index_.end()) throw consistency_error("multiplication leaves the closure");
            g.mult_[static_cast<std::size_t>(i) * n + j] = it->second;
        }
    g.inv_.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.mult(i, j) == 0) g.inv_[i] = j;

    // Element orders.
    g.order_of.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int acc = i, k = 1;
        while (acc != 0) {
            acc = g.mult(acc, i);
            ++k;
        }
        g.order_of[i] = k;
    }

    // Center element -Id, present exactly for the double covers.
    Mat2 neg = g.elements[0].negated();
    g.z_index = g.find(neg);
    g.is_double_cover = g.z_index > 0;

    // Conjugacy classes by closure under conjugation with the generators.
    g.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (g.class_of[x] >= 0) continue;
        int cls = static_cast<int>(g.classes.size());
        std::vector<int> members{x};
        g.class_of[x] = cls;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (int v : closure_gens) {
                int y = g.mult(g.mult(v, members[head]), g.inv_[v]);
                if (g.class_of[y] < 0) {
                    g.class_of[y] = cls;
                    members.push_back(y);
                }
            }
        std::sort(members.begin(), members.end());
        g.classes.push_back(std::move(members));
    }

    // Moebius quotient.
    g.mobius_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (g.mobius_of[i] >= 0) continue;
        int mi = static_cast<int>(g.mobius_rep.size());
        g.mobius_of[i] = mi;
        g.mobius_rep.push_back(i);
        if (g.is_double_cover) g.mobius_of[g.mult(g.z_index, i)] = mi;
    }
    g.mobius_order = static_cast<int>(g.mobius_rep.size());

    // Provisional generators so orbit_of works during the orbit scan; the
    // labeled triple replaces them below (both sets generate the group).
    g.gen_indices = closure_gens;
    g.gen_names = seed.names;

    // Exceptional orbits: fixed points of the nontrivial Moebius elements.
    std::map<std::string, ProjPoint> points;
    for (int mi = 1; mi < g.mobius_order; ++mi) {
        const Mat2& m = g.elements[g.mobius_rep[mi]];
        if (m.is_scalar()) throw consistency_error("scalar lift of a nontrivial Moebius element");
        for (const ProjPoint& p : fixed_points(m)) points.emplace(p.key(), p);
    }
    std::map<std::string, char> assigned;
    for (auto& [key, p] : points) {
        if (assigned.count(key)) continue;
        OrbitData orbit = g.orbit_of(p);
        if (g.mobius_order % orbit.size != 0)
            throw consistency_error("orbit size does not divide the group order");
        orbit.stabiliser_order = g.mobius_order / orbit.size;
        if (orbit.stabiliser_order < 2)
            throw consistency_error("exceptional point with trivial stabiliser");
        if (static_cast<int>(g.stabiliser(orbit.points.front()).size()) != orbit.stabiliser_order)
            throw consistency_error("stabiliser order does not match the orbit index");
        for (const auto& q : orbit.points) assigned[q.key()] = 'x';
        g.exceptional.push_back(std::move(orbit));
    }
    // Labels: descending stabiliser order, ties by ascending maximal point key.
    std::sort(g.exceptional.begin(), g.exceptional.end(),
              [](const OrbitData& u, const OrbitData& v) {
                  if (u.stabiliser_order != v.stabiliser_order)
                      return u.stabiliser_order > v.stabiliser_order;
                  return ProjPoint::cmp(u.points.back(), v.points.back()) < 0;
              });
    for (std::size_t i = 0; i < g.exceptional.size(); ++i)
        g.exceptional[i].label = static_cast<char>('a' + i);

    const std::size_t expected_orbits = spec.family == Family::Cyclic ? 2 : 3;
    if (spec.family == Family::Cyclic && spec.parameter == 1) {
        if (!g.exceptional.empty()) throw consistency_error("trivial group with orbits");
    } else if (g.exceptional.size() != expected_orbits) {
        throw consistency_error("unexpected number of exceptional orbits");
    }

    // Labeled generators.
    if (spec.family == Family::Cyclic) {
        g.gen_indices = {closure_gens[0]};
        g.gen_names = {"g"};
    } else {
        if (spec.family == Family::Dihedral) {
            g.r_index = closure_gens[0];
            g.s_index = closure_gens[1];
        }
        const int target = g.is_double_cover ? g.z_index : 0;
        const int nu_a = g.exceptional[0].stabiliser_order;
        const int nu_b = g.exceptional[1].stabiliser_order;
        const int nu_c = g.exceptional[2].stabiliser_order;
        auto fixes_orbit = [&](int lift, const OrbitData& orbit) {
            for (const ProjPoint& p : fixed_points(g.elements[lift]))
                if (orbit.contains(p)) return true;
            return false;
        };
        const int ga = closure_gens[0];  // canonical a-generator in every family
        if (g.pow(ga, nu_a) != target || !fixes_orbit(ga, g.exceptional[0]))
            throw consistency_error("canonical generator fails the a-orbit conditions");
        int gb = -1, gc = -1;
        for (int e = 1; e < n && gb < 0; ++e) {
            if (g.mobius_element_order(g.mobius_of[e]) != nu_c) continue;
            if (g.pow(e, nu_c) != target) continue;
            if (!fixes_orbit(e, g.exceptional[2])) continue;
            int b = g.mult(g.mult(g.inv_[ga], target), g.inv_[e]);
            if (g.pow(b, nu_b) != target) continue;
            if (!fixes_orbit(b, g.exceptional[1])) continue;
            gb = b;
            gc = e;
        }
        if (gb < 0) throw consistency_error("no presentation-compatible generator triple");
        g.gen_indices = {ga, gb, gc};
        g.gen_names = {"g_a", "g_b", "g_c"};
    }

    return g;
}

// Exponent data: the Moebius exponent, the exponent 2*lcm(nu_a, nu_b, nu_c)
// of the binary group, and the Schur multiplier order inferred from it.
struct ExponentData {
    int mobius_exponent = 1;
    int binary_exponent = 1;
    int schur_multiplier_order = 1;
};

inline ExponentData exponent_and_schur(const FiniteMatrixGroup& g) {
    ExponentData out;
    for (int mi = 0; mi < g.mobius_order; ++mi)
        out.mobius_exponent = std::lcm(out.mobius_exponent, g.mobius_element_order(mi));
    int lcm_nu = 1;
    for (const auto& orbit : g.exceptional) lcm_nu = std::lcm(lcm_nu, orbit.stabiliser_order);
    out.binary_exponent = 2 * lcm_nu;
    if (g.is_double_cover) {
        int lift_exp = 1;
        for (int o : g.order_of) lift_exp = std::lcm(lift_exp, o);
        if (lift_exp != out.binary_exponent)
            throw consistency_error("double cover exponent disagrees with 2*lcm(nu)");
    }
    if ((2 * g.mobius_order) % out.binary_exponent != 0)
        throw consistency_error("binary exponent does not divide 2|G|");
    out.schur_multiplier_order = 2 * g.mobius_order / out.binary_exponent;
    return out;
}

// Fixed-space dimension of a subgroup H (Moebius indices) acting on the
// regular representation, computed from the explicit permutation action
// h: x -> h*x on the |G| basis labels: the dimension is the orbit count.
inline int regular_fixed_dim(const FiniteMatrixGroup& g, const std::vector<int>& subgroup) {
    std::vector<bool> seen(g.mobius_order, false);
    int orbits = 0;
    for (int x = 0; x < g.mobius_order; ++x) {
        if (seen[x]) continue;
        ++orbits;
        std::vector<int> stack{x};
        seen[x] = true;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (int h : subgroup) {
                int w = g.mobius_mult(h, y);
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return orbits;
}

// The cyclic Moebius subgroup generated by the image of a lift element.
inline std::vector<int> cyclic_subgroup(const FiniteMatrixGroup& g, int lift_index) {
    std::vector<int> sub;
    int mi = g.mobius_of[lift_index];
    int acc = 0;
    do {
        sub.push_back(acc);
        acc = g.mobius_mult(acc, mi);
    } while (acc != 0);
    return sub;
}

}  // namespace isoform
