#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "isoform/invec.hpp"

using namespace isoform;

namespace {

GroupContext& ctx(const std::string& s) {
    static std::map<std::string, std::unique_ptr<GroupContext>> cache;
    auto it = cache.find(s);
    if (it == cache.end())
        it = cache.emplace(s, std::make_unique<GroupContext>(GroupSpec::parse(s))).first;
    return *it->second;
}

// The defining fixed-vector condition, checked directly against the action
// on forms: sum_j rho(g)_{ij} (g . v_j) = v_i.
bool tuple_is_invariant(GroupContext& c, const FormTuple& t, int lift_e) {
    const auto& rho = c.irrep(t.irrep_label).at(lift_e);
    const Mat2& m = c.group().elements[lift_e];
    for (std::size_t i = 0; i < t.components.size(); ++i) {
        BinaryForm acc(t.degree());
        for (std::size_t j = 0; j < t.components.size(); ++j) {
            if (rho(i, j).is_zero()) continue;
            acc = acc + act_on_form(m, t.components[j]) * rho(i, j);
        }
        if (!(acc == t.components[i])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("irrep realizations are validated homomorphisms with matching traces") {
    // Construction itself validates; spot-check dimensions and a few entries.
    CHECK(ctx("T").irrep("T7").dimension == 3);
    CHECK(ctx("T").irrep("T4").dimension == 2);
    CHECK(ctx("O").irrep("O8").dimension == 4);
    CHECK(ctx("D5").irrep("psi2").dimension == 2);
    CHECK(ctx("Y").irrep("Y8").dimension == 5);

    // O8 sits inside the cubic forms with multiplicity one.
    GroupContext& o = ctx("O");
    Cyclotomic m3 = inner_product(sym_power_char(o.group(), 3), o.table().by_label("O8").chi);
    CHECK(m3 == Cyclotomic::rational_in(o.group().conductor, Rational(1)));

    // The distinguished generator acts diagonally in every realization.
    for (auto [grp, lbl] : std::vector<std::pair<std::string, std::string>>{
             {"T", "T7"}, {"O", "O6"}, {"Y", "Y4"}, {"D4", "psi1"}}) {
        GroupContext& c = ctx(grp);
        const auto& rho = c.irrep(lbl);
        const auto& d = rho.at(c.diag_gen());
        for (int i = 0; i < rho.dimension; ++i)
            for (int j = 0; j < rho.dimension; ++j)
                if (i != j) CHECK(d(i, j).is_zero());
    }

    // The dihedral 2-dimensional realization keeps the antidiagonal basis.
    GroupContext& d5 = ctx("D5");
    const auto& ps = d5.irrep("psi1").at(d5.group().s_index);
    CHECK(ps(0, 0).is_zero());
    CHECK(ps(0, 1) == Cyclotomic::rational_in(d5.group().conductor, Rational(1)));
}

TEST_CASE("invariant basis dimensions follow the character counts") {
    GroupContext& t = ctx("T");
    CHECK(t.invariant_basis("T7", 12).size() == 3);
    CHECK(t.invariant_basis("T1", 12).size() == 2);
    CHECK(t.invariant_basis("T4", 12).size() == 0);  // spinorial, even degree
    CHECK(t.invariant_basis("T4", 11).size() == 2);
}

TEST_CASE("invariant basis elements satisfy the fixed-vector condition") {
    std::mt19937 rng(29);
    for (const char* s : {"C5", "D3", "D4", "T"}) {
        GroupContext& c = ctx(s);
        std::uniform_int_distribution<int> idx(0, c.group().lift_order() - 1);
        for (const std::string& label : c.table().nonspinorial_nontrivial()) {
            const auto& basis = c.invariant_basis(label, c.group().mobius_order);
            REQUIRE(!basis.empty());
            for (const auto& v : basis) {
                for (int g : c.group().gen_indices) CHECK(tuple_is_invariant(c, v, g));
                CHECK(tuple_is_invariant(c, v, idx(rng)));
            }
        }
    }
}

TEST_CASE("generator sets have chi(1) elements of numerator degree |G|") {
    for (const char* s : {"D3", "D4", "D5", "D6", "T"}) {
        GroupContext& c = ctx(s);
        std::vector<OrbitData> orbits;
        for (const auto& o : c.group().exceptional) orbits.push_back(o);
        orbits.push_back(c.generic_orbit());
        for (const std::string& label : c.table().nonspinorial_nontrivial()) {
            const int deg = c.table().by_label(label).degree;
            for (const auto& orbit : orbits) {
                GeneratorSet gs = generator_set(c, label, orbit);
                CHECK(static_cast<int>(gs.generators.size()) == deg);
                for (const auto& gen : gs.generators) {
                    CHECK(gen.numerator.degree() == c.group().mobius_order);
                    CHECK(gen.denominator_power * orbit.size == c.group().mobius_order);
                }
            }
        }
        CHECK_THROWS_AS(generator_set(c, c.table().trivial().label, orbits[0]), domain_error);
    }
    GroupContext& t = ctx("T");
    CHECK_THROWS_AS(generator_set(t, "T5", t.generic_orbit()), domain_error);
}

TEST_CASE("homogenisation") {
    GroupContext& t = ctx("T");
    const OrbitData& gc = t.group().orbit('c');  // size 6

    FormTuple v{"T1", {BinaryForm::monomial(Cyclotomic(1).embedded(24), 7, 0)}};
    CHECK(homogenise(v, gc).is_zero());  // 6 does not divide 7

    FormTuple w{"T1", {BinaryForm::monomial(Cyclotomic(1).embedded(24), 12, 0)}};
    RationalVector rv = homogenise(w, gc);
    CHECK(rv.denominator_power == 2);

    FormTuple c0{"T1", {BinaryForm::constant(Cyclotomic(5).embedded(24))}};
    RationalVector rv0 = homogenise(c0, gc);
    CHECK(rv0.denominator_power == 0);
    CHECK(!rv0.is_zero());
}

TEST_CASE("automorphic functions") {
    GroupContext& t = ctx("T");
    const OrbitData& ga = t.group().orbit('a');
    const OrbitData& gc = t.group().orbit('c');

    AutomorphicFunction ic = automorphic_function(t, 'c', ga);
    CHECK(ic.numerator == t.ground('c').form.pow(2));  // nu_c = 2, degree 12
    CHECK(ic.denominator_power == 3);                  // nu_a

    AutomorphicFunction self = automorphic_function(t, 'c', gc);
    CHECK(self.denominator_power == 0);
    CHECK(self.numerator == BinaryForm::constant(Cyclotomic(1).embedded(24)));
}

TEST_CASE("quotient model: multiplying by the pole invariant changes nothing") {
    GroupContext& t = ctx("T");
    const OrbitData& ga = t.group().orbit('a');
    BinaryForm pole_inv = t.ground('a').form.pow(ga.stabiliser_order);
    GeneratorSet gs = generator_set(t, "T7", ga);
    for (const auto& gen : gs.generators) {
        RationalVector lifted = gen;
        lifted.numerator = gen.numerator * pole_inv;
        lifted.denominator_power += ga.stabiliser_order;
        RationalVector back = canonicalized(lifted, t.ground('a').form);
        RationalVector base = canonicalized(gen, t.ground('a').form);
        CHECK(back.numerator == base.numerator);
        CHECK(back.denominator_power == base.denominator_power);
    }
}

TEST_CASE("evaluation spans") {
    GroupContext& t = ctx("T");
    const OrbitData& ga = t.group().orbit('a');
    ProjPoint generic = ProjPoint::finite(Cyclotomic::rational_in(24, Rational(2)));

    SpanResult full = evaluate_span(t, "T7", ga, generic);
    CHECK(full.rank == 3);
    CHECK(full.predicted == 3);

    ProjPoint pc = t.group().orbit('c').points.front();
    SpanResult at_c = evaluate_span(t, "T7", ga, pc);
    CHECK(at_c.rank == 1);
    CHECK(at_c.predicted == 1);

    CHECK_THROWS_AS(evaluate_span(t, "T7", ga, ga.points.front()), domain_error);

    // Cyclic: at 0 with poles at infinity, nontrivial characters vanish.
    GroupContext& c5 = ctx("C5");
    const auto& inf_orbit = c5.group().orbit_of(ProjPoint::infinity(c5.group().conductor));
    ProjPoint zero = ProjPoint::finite(Cyclotomic::rational_in(c5.group().conductor, Rational(0)));
    SpanResult s = evaluate_span(c5, "chi2", inf_orbit, zero);
    CHECK(s.rank == 0);
    CHECK(s.predicted == 0);
    SpanResult sg = evaluate_span(c5, "chi2", inf_orbit,
                                  ProjPoint::finite(Cyclotomic::rational_in(c5.group().conductor, Rational(2))));
    CHECK(sg.rank == 1);
}

TEST_CASE("syzygy of the degree-|G| invariants") {
    for (const char* s : {"D3", "D4", "D6", "T", "O"}) {
        GroupContext& c = ctx(s);
        auto [c1, c2] = syzygy_coeffs(c);
        const FiniteMatrixGroup& g = c.group();
        BinaryForm fa = c.ground('a').form.pow(g.orbit('a').stabiliser_order);
        BinaryForm fb = c.ground('b').form.pow(g.orbit('b').stabiliser_order);
        BinaryForm fc = c.ground('c').form.pow(g.orbit('c').stabiliser_order);
        CHECK(fa == fb * c1 + fc * c2);
        CHECK(!c1.is_zero());
        CHECK(!c2.is_zero());
    }
    // Normalized dihedral forms give Fa^N = (Fb^2 - Fc^2)/4.
    GroupContext& d = ctx("D5");
    auto [c1, c2] = syzygy_coeffs(d);
    CHECK(c1 == Cyclotomic(Rational(1, 4)).embedded(d.group().conductor));
    CHECK(c2 == Cyclotomic(Rational(-1, 4)).embedded(d.group().conductor));
}

TEST_CASE("surjectivity in degree 2|G|") {
    GroupContext& t = ctx("T");
    for (const std::string& label : t.table().nonspinorial_nontrivial()) {
        CHECK(surjectivity_holds(t, label, t.group().orbit('a')));
        CHECK(surjectivity_holds(t, label, t.generic_orbit()));
    }
    GroupContext& d4 = ctx("D4");
    CHECK(surjectivity_holds(d4, "psi1", d4.group().orbit('c')));
}

TEST_CASE("trivial component description") {
    GroupContext& t = ctx("T");
    TrivialComponent m1 = trivial_component(t, t.group().orbit('a'), 1);
    CHECK(m1.base_ring == "C[I_b]");
    CHECK(m1.secondary_names == std::vector<std::string>{"1"});

    TrivialComponent m2 = trivial_component(t, t.generic_orbit(), 2);
    CHECK(m2.base_ring == "C[I_a^2]");
    REQUIRE(m2.secondary_names.size() == 2);
    CHECK(m2.secondary_names[1] == "I_a*I_b");
    CHECK(m2.secondary_numerators[1].degree() == 24);
    CHECK(m2.secondary_powers[1] == 2);

    // Cyclic: poles on one fixed orbit, parameters from the other.
    GroupContext& c4 = ctx("C4");
    TrivialComponent cm2 = trivial_component(c4, c4.group().exceptional[0], 2);
    CHECK(cm2.secondary_numerators[1].degree() == 8);
}

TEST_CASE("the m = 2 route doubles the generator count") {
    for (const char* s : {"C3", "C5", "D3", "D5"}) {
        GroupContext& c = ctx(s);
        const int order = c.group().mobius_order;
        for (const std::string& label : c.table().nonspinorial_nontrivial()) {
            const int deg = c.table().by_label(label).degree;
            CHECK(static_cast<int>(c.invariant_basis(label, order).size()) == deg);
            CHECK(static_cast<int>(c.invariant_basis(label, 2 * order).size()) == 2 * deg);
        }
    }
}
