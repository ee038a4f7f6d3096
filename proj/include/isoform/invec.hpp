#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoform/binforms.hpp"
#include "isoform/chartab.hpp"

namespace isoform {

// Explicit matrices of an irreducible representation, one per lift element.
// The matrix of the distinguished diagonal generator is diagonal, which the
// fixed-space computations exploit.
struct IrrepRealization {
    std::string label;
    int dimension = 1;
    std::vector<Matrix<Cyclotomic>> matrices;

    const Matrix<Cyclotomic>& at(int lift_index) const { return matrices[lift_index]; }
};

// A vector of equal-degree forms; an element of V tensor the degree-d forms,
// with components in the basis of the attached irrep realization.
struct FormTuple {
    std::string irrep_label;
    std::vector<BinaryForm> components;

    int degree() const { return components.front().degree(); }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    std::vector<Cyclotomic> eval(const ProjPoint& p) const {
        std::vector<Cyclotomic> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.eval(p));
        return out;
    }

    std::vector<Cyclotomic> flattened() const {
        std::vector<Cyclotomic> out;
        for (const auto& c : components)
            for (const auto& v : c.coeffs()) out.push_back(v);
        return out;
    }

    friend FormTuple operator*(const FormTuple& t, const BinaryForm& f) {
        FormTuple out;
        out.irrep_label = t.irrep_label;
        for (const auto& c : t.components) out.components.push_back(c * f);
        return out;
    }

    friend bool operator==(const FormTuple& a, const FormTuple& b) {
        return a.irrep_label == b.irrep_label && a.components == b.components;
    }
};

// numerator / F_pole^power, with degree(numerator) = power * |pole orbit|.
struct RationalVector {
    FormTuple numerator;
    char pole_label = 'g';
    int pole_size = 0;        // |Gamma|
    int denominator_power = 0;

    bool is_zero() const { return numerator.is_zero(); }
};

struct GeneratorSet {
    std::string irrep_label;
    char orbit_label = 'g';
    OrbitData orbit;
    std::vector<RationalVector> generators;
    std::string base_ring;
};

// Scalar rational function F_zero^{nu} / F_pole^{nu_pole}; the constant 1
// when the two orbits coincide.
struct AutomorphicFunction {
    char zero_label = 'a';
    BinaryForm numerator;  // degree |G| or 0
    char pole_label = 'g';
    int denominator_power = 0;
};

// Owns one group's derived data and caches the expensive pieces: realized
// irreps, symmetric-power action matrices and invariant bases. Not movable;
// the character table points back into the group.
class GroupContext {
public:
    explicit GroupContext(const GroupSpec& spec)
        : g_(build_group(spec)), t_(character_table(g_)) {
        for (const auto& orbit : g_.exceptional) grounds_.emplace(orbit.label, ground_form(g_, orbit));
        generic_ = g_.orbit_of(ProjPoint::finite(Cyclotomic::rational_in(g_.conductor, Rational(2))));
        if (generic_.size != g_.mobius_order)
            throw consistency_error("reference point 2 is not generic for " + spec.str());
        generic_.label = 'g';
        switch (g_.spec.family) {
            case Family::Cyclic:
                diag_gen_ = g_.gen_indices[0];
                other_gen_ = -1;
                break;
            case Family::Dihedral:
                diag_gen_ = g_.r_index;
                other_gen_ = g_.s_index;
                break;
            case Family::Tetrahedral:
                diag_gen_ = g_.generator("g_c");
                other_gen_ = g_.generator("g_a");
                break;
            default:
                diag_gen_ = g_.generator("g_a");
                other_gen_ = g_.generator("g_c");
                break;
        }
        const Mat2& d = g_.elements[diag_gen_];
        if (!d.at(0, 1).is_zero() || !d.at(1, 0).is_zero())
            throw consistency_error("distinguished generator is not diagonal");
    }

    GroupContext(const GroupContext&) = delete;
    GroupContext& operator=(const GroupContext&) = delete;

    const FiniteMatrixGroup& group() const { return g_; }
    const CharacterTable& table() const { return t_; }
    const GroundForm& ground(char label) const { return grounds_.at(label); }
    const OrbitData& generic_orbit() const { return generic_; }
    int diag_gen() const { return diag_gen_; }
    int other_gen() const { return other_gen_; }

    // Ground form of an arbitrary orbit (exceptional ones come from the cache).
    GroundForm orbit_form(const OrbitData& orbit) const {
        if (orbit.label != 'g') return grounds_.at(orbit.label);
        return ground_form(g_, orbit);
    }

    // "a" | "b" | "c" | "pt:<rational>" | "pt:inf"
    OrbitData orbit_for_selector(const std::string& sel) const {
        if (sel == "a" || sel == "b" || sel == "c") return g_.orbit(sel[0]);
        if (sel.rfind("pt:", 0) == 0) {
            std::string v = sel.substr(3);
            ProjPoint p = v == "inf"
                              ? ProjPoint::infinity(g_.conductor)
                              : ProjPoint::finite(Cyclotomic::rational_in(
                                    g_.conductor, rational_from_strings(
                                                      v.substr(0, v.find('/')),
                                                      v.find('/') == std::string::npos
                                                          ? "1"
                                                          : v.substr(v.find('/') + 1))));
            return g_.orbit_of(p);
        }
        throw usage_error("bad orbit selector '" + sel + "'");
    }

    const Matrix<Cyclotomic>& sigma(int lift_index, int d) {
        auto key = std::make_pair(lift_index, d);
        auto it = sigmas_.find(key);
        if (it == sigmas_.end())
            it = sigmas_.emplace(key, sym_power_matrix(g_.elements[lift_index], d)).first;
        return it->second;
    }

    const IrrepRealization& irrep(const std::string& label);
    const std::vector<FormTuple>& invariant_basis(const std::string& label, int d);

    // Multiplicity of the conjugate character in the degree-d symmetric power;
    // the predicted dimension of invariant_basis(label, d).
    long predicted_dimension(const std::string& label, int d) {
        Cyclotomic m = inner_product(sym_power_char(g_, d), t_.by_label(label).chi.conj());
        return to_long(m.rational_value());
    }

private:
    IrrepRealization realize(const std::string& label);
    IrrepRealization realize_dihedral_psi(const std::string& label, int mobius_j);
    IrrepRealization realize_by_projector(const std::string& label);
    void diagonalize_at_generator(IrrepRealization& rho);
    void validate_realization(const IrrepRealization& rho);

    FiniteMatrixGroup g_;
    CharacterTable t_;
    std::map<char, GroundForm> grounds_;
    OrbitData generic_;
    int diag_gen_ = -1, other_gen_ = -1;
    std::map<std::string, IrrepRealization> irreps_;
    std::map<std::pair<int, int>, Matrix<Cyclotomic>> sigmas_;
    std::map<std::pair<std::string, int>, std::vector<FormTuple>> bases_;
};

inline const IrrepRealization& GroupContext::irrep(const std::string& label) {
    auto it = irreps_.find(label);
    if (it == irreps_.end()) it = irreps_.emplace(label, realize(label)).first;
    return it->second;
}

inline IrrepRealization GroupContext::realize(const std::string& label) {
    const Irreducible& ir = t_.by_label(label);
    IrrepRealization rho;
    rho.label = label;
    rho.dimension = ir.degree;
    const int n = g_.lift_order();
    if (ir.degree == 1) {
        rho.matrices.reserve(n);
        for (int e = 0; e < n; ++e) {
            Matrix<Cyclotomic> m(1, 1);
            m(0, 0) = ir.chi.at_element(e);
            rho.matrices.push_back(std::move(m));
        }
    } else if (g_.spec.family == Family::Dihedral && label.rfind("psi", 0) == 0) {
        rho = realize_dihedral_psi(label, std::stoi(label.substr(3)));
    } else {
        rho = realize_by_projector(label);
    }
    diagonalize_at_generator(rho);
    validate_realization(rho);
    return rho;
}

// rho(r) = diag(w^j, w^-j) on the rotation order, rho(s) = antidiag(1, 1);
// the bases match the explicit dihedral module generators.
inline IrrepRealization GroupContext::realize_dihedral_psi(const std::string& label,
                                                           int mobius_j) {
    const int N = g_.spec.parameter;
    const bool even = (N % 2 == 0);
    const int rot_order = even ? 2 * N : N;
    const int lift_j = even ? 2 * mobius_j : mobius_j;
    const Cyclotomic zero = Cyclotomic::rational_in(g_.conductor, Rational(0));
    const Cyclotomic one = Cyclotomic::rational_in(g_.conductor, Rational(1));

    Matrix<Cyclotomic> rr(2, 2), ss(2, 2);
    rr(0, 0) = Cyclotomic::zeta(rot_order, lift_j).embedded(g_.conductor);
    rr(1, 1) = Cyclotomic::zeta(rot_order, -lift_j).embedded(g_.conductor);
    rr(0, 1) = rr(1, 0) = zero;
    ss(0, 1) = ss(1, 0) = one;
    ss(0, 0) = ss(1, 1) = zero;

    // Decompose each element as r^k or r^k s.
    IrrepRealization rho;
    rho.label = label;
    rho.dimension = 2;
    rho.matrices.assign(g_.lift_order(), Matrix<Cyclotomic>());
    std::vector<int> r_power_of(g_.lift_order(), -1);
    int acc = 0;
    for (int k = 0; k < rot_order; ++k) {
        r_power_of[acc] = k;
        acc = g_.mult(acc, g_.r_index);
    }
    Matrix<Cyclotomic> rpow = Matrix<Cyclotomic>::identity(2, one);
    std::vector<Matrix<Cyclotomic>> rpows;
    for (int k = 0; k < rot_order; ++k) {
        rpows.push_back(rpow);
        rpow = rpow * rr;
    }
    for (int e = 0; e < g_.lift_order(); ++e) {
        if (r_power_of[e] >= 0) {
            rho.matrices[e] = rpows[r_power_of[e]];
        } else {
            int k = r_power_of[g_.mult(e, g_.inv(g_.s_index))];
            if (k < 0) throw consistency_error("dihedral element escapes <r, s>");
            rho.matrices[e] = rpows[k] * ss;
        }
    }
    return rho;
}

// Cuts the representation out of the smallest symmetric power that contains
// it exactly once, through the isotypical projector.
inline IrrepRealization GroupContext::realize_by_projector(const std::string& label) {
    const Irreducible& ir = t_.by_label(label);
    const int n = g_.lift_order();
    int h = -1;
    for (int cand = 1; cand <= 2 * n; ++cand) {
        Cyclotomic m = inner_product(sym_power_char(g_, cand), ir.chi);
        if (m == Cyclotomic::rational_in(g_.conductor, Rational(1))) {
            h = cand;
            break;
        }
    }
    if (h < 0) throw consistency_error("no multiplicity-one symmetric power for " + label);

    // P = (dim/|G|) sum conj(chi(g)) sigma_h(g), the projector onto the
    // isotypical block, here a single copy of the representation.
    Matrix<Cyclotomic> proj(h + 1, h + 1);
    for (int e = 0; e < n; ++e) {
        const Cyclotomic w = ir.chi.at_element(e).conj();
        if (w.is_zero()) continue;
        const Matrix<Cyclotomic>& s = sigma(e, h);
        for (int i = 0; i <= h; ++i)
            for (int j = 0; j <= h; ++j)
                if (!s(i, j).is_zero()) proj(i, j) = proj(i, j) + w * s(i, j);
    }
    proj = proj * Cyclotomic::rational_in(g_.conductor, Rational(ir.degree, n));

    Matrix<Cyclotomic> reduced = proj;
    std::vector<std::size_t> pivots = rref(reduced);
    if (pivots.size() != static_cast<std::size_t>(ir.degree))
        throw consistency_error("projector rank differs from the character degree");
    Matrix<Cyclotomic> basis(h + 1, ir.degree);
    for (int c = 0; c < ir.degree; ++c)
        for (int row = 0; row <= h; ++row) basis(row, c) = proj(row, pivots[c]);

    IrrepRealization rho;
    rho.label = label;
    rho.dimension = ir.degree;
    rho.matrices.reserve(n);
    for (int e = 0; e < n; ++e) {
        auto m = solve_matrix(basis, sigma(e, h) * basis);
        if (!m) throw consistency_error("projector image is not invariant");
        rho.matrices.push_back(std::move(*m));
    }
    return rho;
}

inline void GroupContext::diagonalize_at_generator(IrrepRealization& rho) {
    const int dim = rho.dimension;
    const Matrix<Cyclotomic>& d = rho.matrices[diag_gen_];
    bool diagonal = true;
    for (int i = 0; i < dim && diagonal; ++i)
        for (int j = 0; j < dim && diagonal; ++j)
            if (i != j && !d(i, j).is_zero()) diagonal = false;
    if (diagonal) return;

    const Cyclotomic one = Cyclotomic::rational_in(g_.conductor, Rational(1));
    const int ord = g_.order_of[diag_gen_];
    Matrix<Cyclotomic> q(dim, dim);
    int col = 0;
    for (int k = 0; k < g_.conductor && col < dim; ++k) {
        // Eigenvalues satisfy mu^ord = 1.
        if ((static_cast<long>(k) * ord) % g_.conductor != 0) continue;
        Cyclotomic mu = Cyclotomic::zeta(g_.conductor, k);
        Matrix<Cyclotomic> shifted = d;
        for (int i = 0; i < dim; ++i) shifted(i, i) = shifted(i, i) - mu;
        for (const auto& v : nullspace(shifted, one)) {
            if (col >= dim) throw consistency_error("too many eigenvectors");
            for (int i = 0; i < dim; ++i) q(i, col) = v[i];
            ++col;
        }
    }
    if (col != dim) throw consistency_error("diagonal generator is not diagonalizable");
    Matrix<Cyclotomic> qinv = inverse_matrix(q, one);
    for (auto& m : rho.matrices) m = qinv * m * q;
}

inline void GroupContext::validate_realization(const IrrepRealization& rho) {
    const Irreducible& ir = t_.by_label(rho.label);
    const int n = g_.lift_order();
    for (int e = 0; e < n; ++e) {
        Cyclotomic tr = Cyclotomic::rational_in(g_.conductor, Rational(0));
        for (int i = 0; i < rho.dimension; ++i) tr = tr + rho.matrices[e](i, i);
        if (!(tr == ir.chi.at_element(e)))
            throw consistency_error("realized trace differs from the character");
    }
    // The per-element construction forces the homomorphism property; sample it.
    for (int e = 0; e < n; e += std::max(1, n / 7)) {
        for (int f : g_.gen_indices) {
            if (!(rho.matrices[g_.mult(e, f)] == rho.matrices[e] * rho.matrices[f]))
                throw consistency_error("realization is not a homomorphism");
        }
    }
}

// Exact basis of the invariant vectors of degree d: the joint fixed space of
// rho tensor sigma_d over the two distinguished generators. The diagonal
// generator contributes a plain eigenvalue selection; the second generator a
// nullspace over the selected coordinates.
inline const std::vector<FormTuple>& GroupContext::invariant_basis(const std::string& label,
                                                                   int d) {
    auto key = std::make_pair(label, d);
    auto hit = bases_.find(key);
    if (hit != bases_.end()) return hit->second;

    const IrrepRealization& rho = irrep(label);
    const int dim = rho.dimension;
    const Cyclotomic one = Cyclotomic::rational_in(g_.conductor, Rational(1));

    const Matrix<Cyclotomic>& s1 = sigma(diag_gen_, d);
    const Matrix<Cyclotomic>& r1 = rho.at(diag_gen_);
    std::vector<std::pair<int, int>> selected;  // (component i, monomial p)
    for (int i = 0; i < dim; ++i)
        for (int p = 0; p <= d; ++p)
            if (r1(i, i) * s1(p, p) == one) selected.emplace_back(i, p);

    std::vector<std::vector<Cyclotomic>> kernel;
    if (other_gen_ < 0) {
        // Cyclic: the selection is already the fixed space.
        kernel.reserve(selected.size());
        for (std::size_t c = 0; c < selected.size(); ++c) {
            std::vector<Cyclotomic> v(selected.size());
            v[c] = one;
            kernel.push_back(std::move(v));
        }
    } else {
        const Matrix<Cyclotomic>& s2 = sigma(other_gen_, d);
        const Matrix<Cyclotomic>& r2 = rho.at(other_gen_);
        Matrix<Cyclotomic> m(static_cast<std::size_t>(dim) * (d + 1), selected.size());
        for (std::size_t c = 0; c < selected.size(); ++c) {
            auto [ic, pc] = selected[c];
            for (int i = 0; i < dim; ++i) {
                if (r2(i, ic).is_zero()) continue;
                for (int p = 0; p <= d; ++p)
                    if (!s2(p, pc).is_zero())
                        m(static_cast<std::size_t>(i) * (d + 1) + p, c) = r2(i, ic) * s2(p, pc);
            }
            m(static_cast<std::size_t>(ic) * (d + 1) + pc, c) =
                m(static_cast<std::size_t>(ic) * (d + 1) + pc, c) - one;
        }
        kernel = nullspace(m, one);
    }

    std::vector<FormTuple> basis;
    for (const auto& v : kernel) {
        FormTuple t;
        t.irrep_label = label;
        t.components.assign(dim, BinaryForm(d));
        for (std::size_t c = 0; c < selected.size(); ++c) {
            if (v[c].is_zero()) continue;
            auto [i, p] = selected[c];
            std::vector<Cyclotomic> coeffs = t.components[i].coeffs();
            coeffs[p] = coeffs[p] + v[c];
            t.components[i] = BinaryForm(d, std::move(coeffs));
        }
        basis.push_back(std::move(t));
    }
    if (static_cast<long>(basis.size()) != predicted_dimension(label, d))
        throw consistency_error("invariant basis dimension differs from the character count");
    return bases_.emplace(key, std::move(basis)).first->second;
}

// v / F_Gamma^r with r |Gamma| = deg v; the zero vector when |Gamma| does not
// divide the degree (the projection by degree annihilates v).
inline RationalVector homogenise(const FormTuple& v, const OrbitData& gamma) {
    RationalVector out;
    out.numerator = v;
    out.pole_label = gamma.label;
    out.pole_size = gamma.size;
    if (v.degree() % gamma.size != 0) {
        FormTuple zero;
        zero.irrep_label = v.irrep_label;
        zero.components.assign(v.components.size(), BinaryForm(0));
        out.numerator = zero;
        out.denominator_power = 0;
        return out;
    }
    out.denominator_power = v.degree() / gamma.size;
    return out;
}

// Divides out every shared F_Gamma factor, the canonical representative of
// the associate class.
inline RationalVector canonicalized(const RationalVector& v, const BinaryForm& pole_form) {
    RationalVector out = v;
    bool changed = true;
    while (changed && out.denominator_power > 0) {
        std::vector<BinaryForm> next;
        changed = true;
        for (const auto& c : out.numerator.components) {
            auto q = divide_exact(c, pole_form);
            if (!q) {
                changed = false;
                break;
            }
            next.push_back(std::move(*q));
        }
        if (changed) {
            out.numerator.components = std::move(next);
            out.denominator_power -= 1;
        }
    }
    return out;
}

inline AutomorphicFunction automorphic_function(const GroupContext& ctx, char zero_label,
                                                const OrbitData& pole) {
    AutomorphicFunction f;
    f.zero_label = zero_label;
    f.pole_label = pole.label;
    if (pole.label == zero_label) {
        f.numerator = BinaryForm::constant(Cyclotomic::rational_in(ctx.group().conductor, Rational(1)));
        f.denominator_power = 0;
        return f;
    }
    const GroundForm& gf = ctx.ground(zero_label);
    f.numerator = gf.form.pow(gf.orbit.stabiliser_order);
    f.denominator_power = ctx.group().mobius_order / pole.size;
    return f;
}

// The free generators of the isotypical component with poles on the orbit:
// the degree-|G| invariant basis homogenised by F_Gamma^{nu_Gamma}.
inline GeneratorSet generator_set(GroupContext& ctx, const std::string& label,
                                  const OrbitData& gamma) {
    const Irreducible& ir = ctx.table().by_label(label);
    if (ir.spinorial)
        throw domain_error("generator sets exist for characters of the Moebius group only");
    if (ir.label == ctx.table().trivial().label)
        throw domain_error("the trivial component is handled by its own route");
    const int order = ctx.group().mobius_order;
    const auto& basis = ctx.invariant_basis(label, order);
    if (static_cast<int>(basis.size()) != ir.degree)
        throw consistency_error("generator count differs from the character degree");
    GeneratorSet out;
    out.irrep_label = label;
    out.orbit_label = gamma.label;
    out.orbit = gamma;
    for (const auto& v : basis) out.generators.push_back(homogenise(v, gamma));
    for (const auto& orbit : ctx.group().exceptional) {
        if (orbit.label != gamma.label) {
            out.base_ring = std::string("C[I_") + orbit.label + "]";
            break;
        }
    }
    return out;
}

// The trivial isotypical component: C[I] itself at m = 1; at m = 2 a free
// module over C[I_i^2] with secondary generators 1 and I_i I_j. Secondary
// numerators are forms over the pole power written next to them.
struct TrivialComponent {
    std::string base_ring;
    char pole_label = 'g';
    std::vector<std::string> secondary_names;
    std::vector<BinaryForm> secondary_numerators;
    std::vector<int> secondary_powers;
};

inline TrivialComponent trivial_component(const GroupContext& ctx, const OrbitData& gamma,
                                          int m) {
    if (m != 1 && m != 2) throw domain_error("trivial component is described for m = 1, 2");
    const FiniteMatrixGroup& g = ctx.group();
    char i = 0, j = 0;
    for (const auto& orbit : g.exceptional) {
        if (orbit.label == gamma.label) continue;
        if (!i) i = orbit.label;
        else if (!j) j = orbit.label;
    }
    if (!j) j = gamma.label == 'g' ? i : gamma.label;  // cyclic: only one other orbit

    TrivialComponent out;
    out.pole_label = gamma.label;
    const Cyclotomic one = Cyclotomic::rational_in(g.conductor, Rational(1));
    out.secondary_names.push_back("1");
    out.secondary_numerators.push_back(BinaryForm::constant(one));
    out.secondary_powers.push_back(0);
    if (m == 1) {
        out.base_ring = std::string("C[I_") + i + "]";
    } else {
        out.base_ring = std::string("C[I_") + i + "^2]";
        auto power_form = [&](char label) {
            if (label == 'g') return ctx.orbit_form(gamma).form;  // nu = 1 on a generic orbit
            return ctx.ground(label).form.pow(g.orbit(label).stabiliser_order);
        };
        out.secondary_names.push_back(std::string("I_") + i + "*I_" + j);
        out.secondary_numerators.push_back(power_form(i) * power_form(j));
        out.secondary_powers.push_back(2 * g.mobius_order / gamma.size);
    }
    return out;
}

struct SpanResult {
    int rank = 0;
    int predicted = 0;
};

// Evaluates the generator set (and the degree-2|G| basis for robustness) at
// a point off the pole orbit; the rank must match the fixed-space dimension
// of the stabiliser, computed independently from the realized matrices.
inline SpanResult evaluate_span(GroupContext& ctx, const std::string& label,
                                const OrbitData& gamma, const ProjPoint& at) {
    if (gamma.contains(at)) throw domain_error("evaluation point lies on the pole orbit");
    const FiniteMatrixGroup& g = ctx.group();
    const IrrepRealization& rho = ctx.irrep(label);
    const int order = g.mobius_order;

    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& v : ctx.invariant_basis(label, order)) rows.push_back(v.eval(at));
    for (const auto& v : ctx.invariant_basis(label, 2 * order)) rows.push_back(v.eval(at));
    Matrix<Cyclotomic> m(rows.size(), rho.dimension);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rho.dimension; ++j) m(i, j) = rows[i][j];

    SpanResult out;
    out.rank = static_cast<int>(rank(m));

    // Fixed space of the stabiliser via the averaged projector.
    std::vector<int> stab = g.stabiliser(at);
    Matrix<Cyclotomic> proj(rho.dimension, rho.dimension);
    for (int mi : stab) {
        const Matrix<Cyclotomic>& rm = rho.at(g.mobius_rep[mi]);
        proj = proj + rm;
    }
    proj = proj * Cyclotomic::rational_in(g.conductor, Rational(1, static_cast<long>(stab.size())));
    out.predicted = static_cast<int>(rank(proj));

    // Same number through the character average.
    std::vector<int> lift_elems;
    for (int mi : stab) lift_elems.push_back(g.mobius_rep[mi]);
    Rational char_dim = fixed_dim(ctx.table().by_label(label).chi, lift_elems);
    if (char_dim != Rational(out.predicted))
        throw consistency_error("projector rank differs from the character average");
    return out;
}

// Exact scalars with F_a^{nu_a} = c1 F_b^{nu_b} + c2 F_c^{nu_c} in degree |G|.
inline std::pair<Cyclotomic, Cyclotomic> syzygy_coeffs(const GroupContext& ctx) {
    const FiniteMatrixGroup& g = ctx.group();
    if (g.spec.family == Family::Cyclic)
        throw domain_error("the syzygy needs three exceptional orbits");
    BinaryForm fa = ctx.ground('a').form.pow(g.orbit('a').stabiliser_order);
    BinaryForm fb = ctx.ground('b').form.pow(g.orbit('b').stabiliser_order);
    BinaryForm fc = ctx.ground('c').form.pow(g.orbit('c').stabiliser_order);
    const int d = g.mobius_order;
    Matrix<Cyclotomic> m(d + 1, 2);
    std::vector<Cyclotomic> rhs(d + 1);
    for (int k = 0; k <= d; ++k) {
        m(k, 0) = fb.coeff(k);
        m(k, 1) = fc.coeff(k);
        rhs[k] = fa.coeff(k);
    }
    auto x = solve(m, rhs);
    if (!x) throw consistency_error("degree-|G| invariants do not span a plane");
    return {(*x)[0], (*x)[1]};
}

// Every degree-2|G| invariant vector must be a C[I]-combination of the
// degree-|G| generators: v = sum (alpha_r + beta_r I) zeta_r, verified by an
// exact solve on numerators.
inline bool surjectivity_holds(GroupContext& ctx, const std::string& label,
                               const OrbitData& gamma) {
    const FiniteMatrixGroup& g = ctx.group();
    const int order = g.mobius_order;
    const auto& gens = ctx.invariant_basis(label, order);
    const auto& high = ctx.invariant_basis(label, 2 * order);
    if (gens.empty()) return high.empty();

    const GroundForm pole = ctx.orbit_form(gamma);
    BinaryForm pole_pow = pole.form.pow(order / gamma.size);
    char other = 0;
    for (const auto& orbit : g.exceptional)
        if (orbit.label != gamma.label) {
            other = orbit.label;
            break;
        }
    BinaryForm zero_pow = ctx.ground(other).form.pow(g.orbit(other).stabiliser_order);

    std::vector<FormTuple> columns;
    for (const auto& z : gens) columns.push_back(z * pole_pow);
    for (const auto& z : gens) columns.push_back(z * zero_pow);

    const std::size_t rows = high.front().flattened().size();
    Matrix<Cyclotomic> m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto flat = columns[c].flattened();
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = flat[r];
    }
    for (const auto& v : high) {
        if (!solve(m, v.flattened())) return false;
    }
    return true;
}

}  // namespace isoform
