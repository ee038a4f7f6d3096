#pragma once

#include <map>
#include <string>
#include <vector>

#include "isoform/polygroup.hpp"

namespace isoform {

// A function constant on the conjugacy classes of the lift, stored as one
// exact value per class.
struct ClassFunction {
    const FiniteMatrixGroup* group = nullptr;
    std::vector<Cyclotomic> values;

    ClassFunction() = default;
    ClassFunction(const FiniteMatrixGroup& g, std::vector<Cyclotomic> vals)
        : group(&g), values(std::move(vals)) {
        if (values.size() != g.classes.size())
            throw domain_error("one value per conjugacy class required");
    }

    static ClassFunction zero(const FiniteMatrixGroup& g) {
        return ClassFunction(
            g, std::vector<Cyclotomic>(g.classes.size(), Cyclotomic::rational_in(g.conductor, Rational(0))));
    }

    static ClassFunction constant(const FiniteMatrixGroup& g, const Rational& v) {
        return ClassFunction(
            g, std::vector<Cyclotomic>(g.classes.size(), Cyclotomic::rational_in(g.conductor, v)));
    }

    const Cyclotomic& at_class(std::size_t c) const { return values[c]; }
    const Cyclotomic& at_element(int lift_index) const {
        return values[group->class_of[lift_index]];
    }

    ClassFunction conj() const {
        ClassFunction out = *this;
        for (auto& v : out.values) v = v.conj();
        return out;
    }

    bool is_real() const {
        for (const auto& v : values)
            if (!(v == v.conj())) return false;
        return true;
    }

    friend ClassFunction operator+(const ClassFunction& f, const ClassFunction& g) {
        require_same_group(f, g);
        ClassFunction out = f;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = out.values[i] + g.values[i];
        return out;
    }

    friend ClassFunction operator-(const ClassFunction& f, const ClassFunction& g) {
        require_same_group(f, g);
        ClassFunction out = f;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = out.values[i] - g.values[i];
        return out;
    }

    friend ClassFunction operator*(const ClassFunction& f, const ClassFunction& g) {
        require_same_group(f, g);
        ClassFunction out = f;
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] = out.values[i] * g.values[i];
        return out;
    }

    friend ClassFunction operator*(const ClassFunction& f, const Rational& s) {
        ClassFunction out = f;
        for (auto& v : out.values) v = v * s;
        return out;
    }

    friend bool operator==(const ClassFunction& f, const ClassFunction& g) {
        if (f.group != g.group) return false;
        for (std::size_t i = 0; i < f.values.size(); ++i)
            if (!(f.values[i] == g.values[i])) return false;
        return true;
    }

    static void require_same_group(const ClassFunction& f, const ClassFunction& g) {
        if (f.group != g.group) throw domain_error("class functions on different groups");
    }
};

// (f, g) = (1/|G|) sum |class| f(c) conj(g(c)); exact.
inline Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
    ClassFunction::require_same_group(f, g);
    const FiniteMatrixGroup& grp = *f.group;
    Cyclotomic acc = Cyclotomic::rational_in(grp.conductor, Rational(0));
    for (std::size_t c = 0; c < grp.classes.size(); ++c)
        acc = acc + f.values[c] * g.values[c].conj() * Rational(static_cast<long>(grp.classes[c].size()));
    return acc * Rational(1, grp.lift_order());
}

// Trace of the substitution action on linear forms: g acts on a form by
// precomposition with g^-1, so the character value at g is tr(g^-1).
inline ClassFunction natural_character(const FiniteMatrixGroup& g) {
    std::vector<Cyclotomic> vals;
    vals.reserve(g.classes.size());
    for (const auto& cls : g.classes)
        vals.push_back(g.elements[g.inv(cls.front())].trace().embedded(g.conductor));
    return ClassFunction(g, std::move(vals));
}

// det of the same substitution action; identically 1 on the special linear
// lifts, nontrivial on the plain cyclic and odd dihedral lifts.
inline ClassFunction determinant_character(const FiniteMatrixGroup& g) {
    std::vector<Cyclotomic> vals;
    vals.reserve(g.classes.size());
    for (const auto& cls : g.classes)
        vals.push_back(g.elements[g.inv(cls.front())].det().embedded(g.conductor));
    return ClassFunction(g, std::move(vals));
}

// Character of the symmetric power of the natural representation in degree h,
// via the two-term recurrence chi_h = chi * chi_{h-1} - det * chi_{h-2} with
// chi_{-1} = 0 and chi_0 = 1. The det twist is invisible on the special
// linear lifts, where this is the plain Clebsch-Gordan recurrence.
inline ClassFunction sym_power_char(const FiniteMatrixGroup& g, long h) {
    if (h < -1) throw domain_error("symmetric power degree must be at least -1");
    ClassFunction prev2 = ClassFunction::zero(g);                      // chi_{-1}
    ClassFunction prev1 = ClassFunction::constant(g, Rational(1));     // chi_0
    if (h == -1) return prev2;
    if (h == 0) return prev1;
    const ClassFunction chi = natural_character(g);
    const ClassFunction twist = determinant_character(g);
    for (long k = 1; k <= h; ++k) {
        ClassFunction next = chi * prev1 - twist * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

// Independent route to the same character: per class, diagonalize the
// substitution matrix exactly (its eigenvalues are roots of unity in the
// working field) and sum the h-degree monomials in the two eigenvalues.
inline ClassFunction sym_power_char_closed(const FiniteMatrixGroup& g, long h) {
    if (h == -1) return ClassFunction::zero(g);
    std::vector<Cyclotomic> vals;
    for (const auto& cls : g.classes) {
        const Mat2 m = g.elements[g.inv(cls.front())];
        const Cyclotomic tr = m.trace().embedded(g.conductor);
        const Cyclotomic det = m.det().embedded(g.conductor);
        // Roots of x^2 - tr x + det among the roots of unity.
        std::vector<Cyclotomic> eig;
        for (int k = 0; k < g.conductor && eig.size() < 2; ++k) {
            Cyclotomic mu = Cyclotomic::zeta(g.conductor, k);
            if ((mu * mu - tr * mu + det).is_zero()) eig.push_back(mu);
        }
        if (eig.size() == 1) eig.push_back(eig[0]);  // double eigenvalue (scalar element)
        if (eig.size() != 2) throw consistency_error("substitution matrix is not diagonalizable");
        const Cyclotomic &mu1 = eig[0], &mu2 = eig[1];
        if (mu1 == mu2) {
            vals.push_back(mu1.pow(h) * Rational(h + 1));
        } else {
            vals.push_back((mu1.pow(h + 1) - mu2.pow(h + 1)) / (mu1 - mu2));
        }
    }
    return ClassFunction(g, std::move(vals));
}

struct Irreducible {
    std::string label;
    ClassFunction chi;
    int degree = 1;
    bool spinorial = false;
    bool real = true;
    bool natural = false;
};

class CharacterTable {
public:
    const FiniteMatrixGroup* group = nullptr;
    std::vector<Irreducible> irreps;

    const Irreducible& by_label(const std::string& label) const {
        for (const auto& ir : irreps)
            if (ir.label == label) return ir;
        throw domain_error("no irreducible character labeled '" + label + "'");
    }

    bool has_label(const std::string& label) const {
        for (const auto& ir : irreps)
            if (ir.label == label) return true;
        return false;
    }

    const Irreducible& trivial() const { return irreps.front(); }

    // The labels of the nontrivial characters that factor through the
    // Moebius group, in table order.
    std::vector<std::string> nonspinorial_nontrivial() const {
        std::vector<std::string> out;
        for (std::size_t i = 1; i < irreps.size(); ++i)
            if (!irreps[i].spinorial) out.push_back(irreps[i].label);
        return out;
    }
};

namespace detail {

inline int word_index(const FiniteMatrixGroup& g, const std::string& word) {
    if (word == "1") return 0;
    int acc = 0;
    for (char ch : word) {
        int gen;
        switch (ch) {
            case 'a': gen = g.generator("g_a"); break;
            case 'b': gen = g.generator("g_b"); break;
            case 'c': gen = g.generator("g_c"); break;
            case 'z': gen = g.z_index; break;
            default: throw consistency_error("bad generator word");
        }
        acc = g.mult(acc, gen);
    }
    return acc;
}

struct TranscribedTable {
    std::vector<std::string> column_words;
    std::vector<long> centralizer_orders;
    std::vector<std::string> labels;
    std::vector<std::vector<Cyclotomic>> rows;
    std::string natural_label;
};

// Validates a transcription against the constructed group: the column words
// must hit every conjugacy class exactly once with the listed centralizer
// orders; the rows must be exactly orthonormal; the flagged natural row must
// match the matrix traces.
inline CharacterTable assemble_table(const FiniteMatrixGroup& g, const TranscribedTable& t) {
    const std::size_t k = g.classes.size();
    if (t.column_words.size() != k)
        throw consistency_error("table width differs from the class count");
    std::vector<int> col_class(k);
    std::vector<bool> hit(k, false);
    for (std::size_t j = 0; j < k; ++j) {
        int cls = g.class_of[word_index(g, t.column_words[j])];
        if (hit[cls]) throw consistency_error("two table columns land in one conjugacy class");
        hit[cls] = true;
        col_class[j] = cls;
        long centralizer = g.lift_order() / static_cast<long>(g.classes[cls].size());
        if (centralizer != t.centralizer_orders[j])
            throw consistency_error("centralizer order mismatch at column " + t.column_words[j]);
    }

    CharacterTable table;
    table.group = &g;
    for (std::size_t r = 0; r < t.labels.size(); ++r) {
        std::vector<Cyclotomic> values(k);
        for (std::size_t j = 0; j < k; ++j)
            values[col_class[j]] = t.rows[r][j].embedded(g.conductor);
        Irreducible ir;
        ir.label = t.labels[r];
        ir.chi = ClassFunction(g, std::move(values));
        ir.degree = static_cast<int>(to_long(ir.chi.at_element(0).rational_value()));
        ir.real = ir.chi.is_real();
        ir.natural = (t.labels[r] == t.natural_label);
        if (g.is_double_cover) {
            const Cyclotomic at_z = ir.chi.at_element(g.z_index);
            ir.spinorial = (at_z == Cyclotomic::rational_in(g.conductor, Rational(-ir.degree)));
            if (!ir.spinorial && !(at_z == Cyclotomic::rational_in(g.conductor, Rational(ir.degree))))
                throw consistency_error("central value is neither degree nor -degree");
        }
        table.irreps.push_back(std::move(ir));
    }
    return table;
}

inline void validate_table(const CharacterTable& table) {
    const FiniteMatrixGroup& g = *table.group;
    const Cyclotomic one = Cyclotomic::rational_in(g.conductor, Rational(1));
    const Cyclotomic zero = Cyclotomic::rational_in(g.conductor, Rational(0));
    long sum_sq = 0;
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        sum_sq += static_cast<long>(table.irreps[i].degree) * table.irreps[i].degree;
        for (std::size_t j = 0; j < table.irreps.size(); ++j) {
            Cyclotomic ip = inner_product(table.irreps[i].chi, table.irreps[j].chi);
            if (!(ip == (i == j ? one : zero)))
                throw consistency_error("character table rows are not orthonormal");
        }
    }
    if (sum_sq != g.lift_order())
        throw consistency_error("degree squares do not sum to the group order");
    // The flagged natural character must be the matrix trace, classwise.
    const ClassFunction nat = natural_character(g);
    int naturals = 0;
    for (const auto& ir : table.irreps)
        if (ir.natural) {
            ++naturals;
            if (!(ir.chi == nat))
                throw consistency_error("natural character does not match matrix traces");
        }
    if (g.spec.family != Family::Cyclic && naturals != 1)
        throw consistency_error("expected exactly one natural character");
}

inline CharacterTable cyclic_table(const FiniteMatrixGroup& g) {
    const int n = g.mobius_order;
    CharacterTable table;
    table.group = &g;
    const int gen = g.gen_indices[0];
    for (int j = 0; j < n; ++j) {
        std::vector<Cyclotomic> values(g.classes.size());
        for (int k = 0, e = 0; k < n; ++k, e = g.mult(e, gen))
            values[g.class_of[e]] = Cyclotomic::zeta(n == 1 ? 1 : n, static_cast<long>(j) * k);
        Irreducible ir;
        ir.label = "chi" + std::to_string(j + 1);
        ir.chi = ClassFunction(g, std::move(values));
        ir.degree = 1;
        ir.real = ir.chi.is_real();
        table.irreps.push_back(std::move(ir));
    }
    return table;
}

inline CharacterTable dihedral_table(const FiniteMatrixGroup& g) {
    const int N = g.spec.parameter;
    CharacterTable table;
    table.group = &g;
    const int r = g.r_index;
    const bool even = (N % 2 == 0);
    const int rot_order = even ? 2 * N : N;  // order of r in the lift

    // Indices of the rotation classes as powers of r, plus the reflection
    // classes anchored at the labeled generators g_c and g_b.
    std::vector<int> class_of_rk(rot_order);
    for (int k = 0, e = 0; k < rot_order; ++k, e = g.mult(e, r)) class_of_rk[k] = g.class_of[e];
    const int cls_gc = g.class_of[g.generator("g_c")];
    const int cls_gb = even ? g.class_of[g.generator("g_b")] : cls_gc;

    auto one_dim = [&](const std::string& label, const Rational& on_r, const Rational& on_gc,
                       const Rational& on_gb) {
        std::vector<Cyclotomic> values(g.classes.size());
        for (int k = 0; k < rot_order; ++k)
            values[class_of_rk[k]] = Cyclotomic::rational_in(g.conductor, pow_rational(on_r, k));
        values[cls_gc] = Cyclotomic::rational_in(g.conductor, on_gc);
        if (even) values[cls_gb] = Cyclotomic::rational_in(g.conductor, on_gb);
        Irreducible ir;
        ir.label = label;
        ir.chi = ClassFunction(g, std::move(values));
        ir.degree = 1;
        table.irreps.push_back(std::move(ir));
    };

    auto two_dim = [&](const std::string& label, int lift_j) {
        // rho(r) = diag(zeta^j, zeta^-j) with zeta of the rotation order,
        // zero on every reflection.
        std::vector<Cyclotomic> values(g.classes.size(),
                                       Cyclotomic::rational_in(g.conductor, Rational(0)));
        for (int k = 0; k < rot_order; ++k)
            values[class_of_rk[k]] =
                (Cyclotomic::zeta(rot_order, static_cast<long>(lift_j) * k) +
                 Cyclotomic::zeta(rot_order, -static_cast<long>(lift_j) * k))
                    .embedded(g.conductor);
        Irreducible ir;
        ir.label = label;
        ir.chi = ClassFunction(g, std::move(values));
        ir.degree = 2;
        ir.natural = (lift_j == 1);
        table.irreps.push_back(std::move(ir));
    };

    one_dim("chi1", Rational(1), Rational(1), Rational(1));
    one_dim("chi2", Rational(1), Rational(-1), Rational(-1));
    if (even) {
        // chi3 is +1 on the reflection class containing g_c, chi4 on the one
        // containing g_b; both send r to -1.
        one_dim("chi3", Rational(-1), Rational(1), Rational(-1));
        one_dim("chi4", Rational(-1), Rational(-1), Rational(1));
    }
    if (even) {
        for (int j = 2; j < N; j += 2) two_dim("psi" + std::to_string(j / 2), j);
        for (int j = 1; j < N; j += 2) two_dim("spin" + std::to_string(j), j);
    } else {
        for (int j = 1; 2 * j < N; ++j) two_dim("psi" + std::to_string(j), j);
    }

    for (auto& ir : table.irreps) {
        ir.real = ir.chi.is_real();
        if (g.is_double_cover)
            ir.spinorial =
                ir.chi.at_element(g.z_index) ==
                Cyclotomic::rational_in(g.conductor, Rational(-ir.degree));
    }
    return table;
}

CharacterTable tetrahedral_table(const FiniteMatrixGroup& g);
CharacterTable octahedral_table(const FiniteMatrixGroup& g);
CharacterTable icosahedral_table(const FiniteMatrixGroup& g);

}  // namespace detail

inline CharacterTable character_table(const FiniteMatrixGroup& g) {
    CharacterTable table;
    switch (g.spec.family) {
        case Family::Cyclic: table = detail::cyclic_table(g); break;
        case Family::Dihedral: table = detail::dihedral_table(g); break;
        case Family::Tetrahedral: table = detail::tetrahedral_table(g); break;
        case Family::Octahedral: table = detail::octahedral_table(g); break;
        case Family::Icosahedral: table = detail::icosahedral_table(g); break;
    }
    detail::validate_table(table);
    return table;
}

namespace detail {

inline CharacterTable tetrahedral_table(const FiniteMatrixGroup& g) {
    const Cyclotomic w = Cyclotomic::zeta(3).embedded(24);
    const Cyclotomic w2 = w * w;
    auto r = [](long v) { return Cyclotomic(v); };
    TranscribedTable t;
    t.column_words = {"1", "aa", "c", "z", "bb", "b", "a"};
    t.centralizer_orders = {24, 6, 4, 24, 6, 6, 6};
    t.labels = {"T1", "T2", "T3", "T4", "T5", "T6", "T7"};
    t.natural_label = "T4";
    t.rows = {
        {r(1), r(1), r(1), r(1), r(1), r(1), r(1)},
        {r(1), w, r(1), r(1), w2, w, w2},
        {r(1), w2, r(1), r(1), w, w2, w},
        {r(2), r(-1), r(0), r(-2), r(-1), r(1), r(1)},
        {r(2), -w2, r(0), r(-2), -w, w2, w},
        {r(2), -w, r(0), r(-2), -w2, w, w2},
        {r(3), r(0), r(-1), r(3), r(0), r(0), r(0)},
    };
    return assemble_table(g, t);
}

inline CharacterTable octahedral_table(const FiniteMatrixGroup& g) {
    const Cyclotomic s2 = (Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7)).embedded(24);
    auto r = [](long v) { return Cyclotomic(v); };
    TranscribedTable t;
    t.column_words = {"1", "c", "bb", "aa", "z", "aaa", "b", "a"};
    t.centralizer_orders = {48, 4, 6, 8, 48, 8, 6, 8};
    t.labels = {"O1", "O2", "O3", "O4", "O5", "O6", "O7", "O8"};
    t.natural_label = "O4";
    t.rows = {
        {r(1), r(1), r(1), r(1), r(1), r(1), r(1), r(1)},
        {r(1), r(-1), r(1), r(1), r(1), r(-1), r(1), r(-1)},
        {r(2), r(0), r(-1), r(2), r(2), r(0), r(-1), r(0)},
        {r(2), r(0), r(-1), r(0), r(-2), -s2, r(1), s2},
        {r(2), r(0), r(-1), r(0), r(-2), s2, r(1), -s2},
        {r(3), r(1), r(0), r(-1), r(3), r(-1), r(0), r(-1)},
        {r(3), r(-1), r(0), r(-1), r(3), r(1), r(0), r(1)},
        {r(4), r(0), r(1), r(0), r(-4), r(0), r(-1), r(0)},
    };
    return assemble_table(g, t);
}

inline CharacterTable icosahedral_table(const FiniteMatrixGroup& g) {
    const Cyclotomic s5 = (Cyclotomic::zeta(5, 1) - Cyclotomic::zeta(5, 2) -
                           Cyclotomic::zeta(5, 3) + Cyclotomic::zeta(5, 4))
                              .embedded(60);
    const Cyclotomic one60 = Cyclotomic::rational_in(60, Rational(1));
    const Cyclotomic fp = (one60 + s5) * Rational(1, 2);   // (1+sqrt5)/2
    const Cyclotomic fm = (one60 - s5) * Rational(1, 2);   // (1-sqrt5)/2
    auto r = [](long v) { return Cyclotomic(v); };
    TranscribedTable t;
    t.column_words = {"1", "aa", "aaaa", "b", "c", "bb", "aaa", "z", "a"};
    t.centralizer_orders = {120, 10, 10, 6, 4, 6, 10, 120, 10};
    t.labels = {"Y1", "Y2", "Y3", "Y4", "Y5", "Y6", "Y7", "Y8", "Y9"};
    t.natural_label = "Y2";
    t.rows = {
        {r(1), r(1), r(1), r(1), r(1), r(1), r(1), r(1), r(1)},
        {r(2), -fm, -fp, r(1), r(0), r(-1), fm, r(-2), fp},
        {r(2), -fp, -fm, r(1), r(0), r(-1), fp, r(-2), fm},
        {r(3), fp, fm, r(0), r(-1), r(0), fp, r(3), fm},
        {r(3), fm, fp, r(0), r(-1), r(0), fm, r(3), fp},
        {r(4), r(-1), r(-1), r(1), r(0), r(1), r(-1), r(4), r(-1)},
        {r(4), r(-1), r(-1), r(-1), r(0), r(1), r(1), r(-4), r(1)},
        {r(5), r(0), r(0), r(-1), r(1), r(-1), r(0), r(5), r(0)},
        {r(6), r(1), r(1), r(0), r(0), r(0), r(-1), r(-6), r(-1)},
    };
    return assemble_table(g, t);
}

}  // namespace detail

// Multiplicities of the irreducible characters inside a genuine character.
// Rejects class functions whose multiplicities are not nonnegative integers.
inline std::map<std::string, long> decompose(const CharacterTable& table,
                                             const ClassFunction& f) {
    std::map<std::string, long> out;
    ClassFunction recon = ClassFunction::zero(*table.group);
    for (const auto& ir : table.irreps) {
        Cyclotomic m = inner_product(f, ir.chi);
        if (!m.is_rational() || !is_integer(m.rational_value()) || m.rational_value() < 0)
            throw domain_error("class function is not a character (multiplicity of " + ir.label +
                               " is " + m.str() + ")");
        long mult = to_long(m.rational_value());
        if (mult > 0) out[ir.label] = mult;
        recon = recon + ir.chi * Rational(mult);
    }
    if (!(recon == f)) throw domain_error("class function is not a character (reconstruction)");
    return out;
}

// Average of a character over an explicit set of lift elements; the dimension
// of the fixed space when the set is a subgroup.
inline Rational fixed_dim(const ClassFunction& chi, const std::vector<int>& lift_elements,
                          bool require_integral = true) {
    const FiniteMatrixGroup& g = *chi.group;
    Cyclotomic acc = Cyclotomic::rational_in(g.conductor, Rational(0));
    for (int e : lift_elements) acc = acc + chi.at_element(e);
    acc = acc * Rational(1, static_cast<long>(lift_elements.size()));
    if (!acc.is_rational())
        throw consistency_error("fixed dimension is not rational");
    Rational v = acc.rational_value();
    if (require_integral && !is_integer(v))
        throw consistency_error("fixed dimension of a genuine character is not integral");
    return v;
}

// Average over the cyclic Moebius subgroup generated by the image of a lift
// element; the character must factor through the Moebius group.
inline Rational fixed_dim_mobius_cyclic(const ClassFunction& chi, int lift_gen, int nu,
                                        bool require_integral = true) {
    const FiniteMatrixGroup& g = *chi.group;
    std::vector<int> powers;
    int acc = 0;
    for (int j = 0; j < nu; ++j) {
        powers.push_back(acc);
        acc = g.mult(acc, lift_gen);
    }
    return fixed_dim(chi, powers, require_integral);
}

// Half the codimension of the fixed space of each exceptional stabiliser,
// recorded with the stabiliser orders.
struct KappaRecord {
    std::string label;
    std::vector<Rational> kappa;     // per orbit a, b(, c)
    std::vector<Rational> nu_kappa;  // stabiliser order times kappa
};

inline KappaRecord kappa(const CharacterTable& table, const std::string& label) {
    const Irreducible& ir = table.by_label(label);
    if (ir.spinorial)
        throw domain_error("kappa is defined for characters of the Moebius group only");
    const FiniteMatrixGroup& g = *table.group;
    KappaRecord rec;
    rec.label = label;
    Rational total(0);
    for (std::size_t i = 0; i < g.exceptional.size(); ++i) {
        const int nu = g.exceptional[i].stabiliser_order;
        const int gen = g.spec.family == Family::Cyclic ? g.gen_indices[0] : g.gen_indices[i];
        Rational fix = fixed_dim_mobius_cyclic(ir.chi, gen, nu);
        Rational k = (Rational(ir.degree) - fix) / 2;
        if (k < 0 || k * 2 > ir.degree)
            throw consistency_error("kappa out of range");
        rec.kappa.push_back(k);
        rec.nu_kappa.push_back(Rational(nu) * k);
        total += k;
    }
    Cyclotomic triv_mult = inner_product(ir.chi, table.trivial().chi);
    if (total != Rational(ir.degree) - triv_mult.rational_value())
        throw consistency_error("kappa sum rule failed");
    return rec;
}

// Pullback of the regular character of the Moebius group: |G| on the kernel
// of the covering map, zero elsewhere.
inline ClassFunction regular_mobius_pullback(const FiniteMatrixGroup& g) {
    ClassFunction f = ClassFunction::zero(g);
    Cyclotomic v = Cyclotomic::rational_in(g.conductor, Rational(g.mobius_order));
    f.values[g.class_of[0]] = v;
    if (g.is_double_cover) f.values[g.class_of[g.z_index]] = v;
    return f;
}

// Regular character of the binary group: 2|G| at the identity. On a double
// cover this is the lift's own regular character.
inline ClassFunction regular_binary(const FiniteMatrixGroup& g) {
    ClassFunction f = ClassFunction::zero(g);
    f.values[g.class_of[0]] =
        Cyclotomic::rational_in(g.conductor, Rational(2 * g.mobius_order));
    return f;
}

}  // namespace isoform
