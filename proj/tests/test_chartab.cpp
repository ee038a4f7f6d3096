#include <catch2/catch_amalgamated.hpp>

#include "isoform/chartab.hpp"

using namespace isoform;

namespace {

struct Ctx {
    FiniteMatrixGroup g;
    CharacterTable t;
    explicit Ctx(const std::string& s) : g(build_group(GroupSpec::parse(s))), t(character_table(g)) {}
};

// Tables hold pointers into their group, so contexts are built in place and
// never moved.
const Ctx& ctx(const std::string& s) {
    static std::map<std::string, Ctx> cache;
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.try_emplace(s, s).first;
    return it->second;
}

Cyclotomic value_at_word(const Ctx& c, const std::string& label, const std::string& word) {
    return c.t.by_label(label).chi.at_element(detail::word_index(c.g, word));
}

}  // namespace

TEST_CASE("tables build and validate for every family") {
    for (const char* s : {"C2", "C3", "C5", "C8", "D3", "D4", "D5", "D6", "T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        CHECK(c.t.irreps.size() == c.g.classes.size());
    }
}

TEST_CASE("transcribed values") {
    CHECK(value_at_word(ctx("T"), "T7", "c") == Cyclotomic(-1));
    CHECK(value_at_word(ctx("T"), "T7", "z") == Cyclotomic(3));
    CHECK(value_at_word(ctx("O"), "O8", "z") == Cyclotomic(-4));

    // Y2 at g_a is the golden section.
    Cyclotomic s5 = Cyclotomic::zeta(5, 1) - Cyclotomic::zeta(5, 2) - Cyclotomic::zeta(5, 3) +
                    Cyclotomic::zeta(5, 4);
    Cyclotomic golden = (Cyclotomic(1).embedded(60) + s5.embedded(60)) * Rational(1, 2);
    CHECK(value_at_word(ctx("Y"), "Y2", "a") == golden);
}

TEST_CASE("flags") {
    const Ctx& t = ctx("T");
    CHECK(t.t.by_label("T4").natural);
    CHECK(t.t.by_label("T4").spinorial);
    CHECK(t.t.by_label("T7").real);
    CHECK(!t.t.by_label("T2").real);
    CHECK(!t.t.by_label("T7").spinorial);
    CHECK(t.t.nonspinorial_nontrivial() == std::vector<std::string>{"T2", "T3", "T7"});

    const Ctx& o = ctx("O");
    CHECK(o.t.nonspinorial_nontrivial() == std::vector<std::string>{"O2", "O3", "O6", "O7"});
    const Ctx& y = ctx("Y");
    CHECK(y.t.nonspinorial_nontrivial() == std::vector<std::string>{"Y4", "Y5", "Y6", "Y8"});

    // Dihedral: all real; spinorials exist only for even N.
    for (const auto& ir : ctx("D5").t.irreps) {
        CHECK(ir.real);
        CHECK(!ir.spinorial);
    }
    CHECK(ctx("D4").t.by_label("spin1").spinorial);
    CHECK(!ctx("D4").t.by_label("psi1").spinorial);
    CHECK(ctx("D6").t.nonspinorial_nontrivial() ==
          std::vector<std::string>{"chi2", "chi3", "chi4", "psi1", "psi2"});
}

TEST_CASE("inner products") {
    const Ctx& c = ctx("T");
    Cyclotomic one = Cyclotomic::rational_in(c.g.conductor, Rational(1));
    CHECK(inner_product(c.t.by_label("T7").chi, c.t.by_label("T7").chi) == one);
    CHECK(inner_product(c.t.by_label("T2").chi, c.t.by_label("T3").chi).is_zero());

    ClassFunction chi12 = sym_power_char(c.g, 12);
    CHECK(inner_product(chi12, c.t.by_label("T7").chi) ==
          Cyclotomic::rational_in(c.g.conductor, Rational(3)));
}

TEST_CASE("symmetric power characters") {
    const Ctx& c = ctx("T");
    CHECK(sym_power_char(c.g, 0) == c.t.trivial().chi);
    CHECK(sym_power_char(c.g, 1) == natural_character(c.g));
    CHECK(sym_power_char(c.g, 2) == c.t.by_label("T7").chi);

    auto m12 = decompose(c.t, sym_power_char(c.g, 12));
    std::map<std::string, long> expect{{"T1", 2}, {"T2", 1}, {"T3", 1}, {"T7", 3}};
    CHECK(m12 == expect);
}

TEST_CASE("recurrence agrees with the eigenvalue route everywhere") {
    for (const char* s : {"C3", "C6", "D3", "D4", "T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        for (long h : {0L, 1L, 2L, 5L, 11L, 24L}) {
            CHECK(sym_power_char(c.g, h) == sym_power_char_closed(c.g, h));
        }
    }
}

TEST_CASE("degree reduction on elements of order above two") {
    for (const char* s : {"C5", "D4", "T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        const long bound = 2 * c.g.mobius_order;
        for (std::size_t cls = 0; cls < c.g.classes.size(); ++cls) {
            int e = c.g.classes[cls].front();
            int order = c.g.order_of[e];
            if (order <= 2) continue;
            for (long h : {0L, 1L, 7L, bound}) {
                CHECK(sym_power_char(c.g, h + order).at_class(cls) ==
                      sym_power_char(c.g, h).at_class(cls));
            }
        }
    }
}

TEST_CASE("decompose of the regular degrees") {
    const Ctx& o = ctx("O");
    auto m = decompose(o.t, sym_power_char(o.g, 24));
    for (const auto& ir : o.t.irreps) {
        if (ir.spinorial) {
            CHECK(m.count(ir.label) == 0);
        } else if (ir.label == "O1") {
            CHECK(m.at(ir.label) == 2);
        } else {
            CHECK(m.at(ir.label) == ir.degree);
        }
    }

    auto m0 = decompose(o.t, sym_power_char(o.g, 0));
    CHECK(m0 == std::map<std::string, long>{{"O1", 1}});
}

TEST_CASE("decompose rejects non-characters") {
    const Ctx& c = ctx("T");
    // Half the trivial character has multiplicity 1/2.
    ClassFunction half = c.t.trivial().chi * Rational(1, 2);
    CHECK_THROWS_AS(decompose(c.t, half), domain_error);
    // Negative multiplicity.
    ClassFunction neg = ClassFunction::zero(c.g) - c.t.by_label("T7").chi;
    CHECK_THROWS_AS(decompose(c.t, neg), domain_error);
}

TEST_CASE("character identity in the regular degrees") {
    for (const char* s : {"T", "O", "Y", "D4", "D6", "C3", "C5", "D3", "D5"}) {
        const Ctx& c = ctx(s);
        auto e = exponent_and_schur(c.g);
        const ClassFunction pullback = regular_mobius_pullback(c.g);
        const ClassFunction binary = regular_binary(c.g);
        const ClassFunction triv = c.t.trivial().chi;
        for (long m : {2 / e.schur_multiplier_order, 4 / e.schur_multiplier_order}) {
            const long d = m * c.g.mobius_order;
            CHECK(sym_power_char(c.g, d) == pullback * Rational(m) + triv);
            CHECK(sym_power_char(c.g, d - 1) == (binary - pullback) * Rational(m));
        }
    }
}

TEST_CASE("spinorial characters vanish in even degrees") {
    for (const char* s : {"D4", "T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        for (const auto& ir : c.t.irreps) {
            if (!ir.spinorial) continue;
            for (long d : {0L, 2L, 8L, 2L * c.g.mobius_order}) {
                CHECK(inner_product(sym_power_char(c.g, d), ir.chi).is_zero());
            }
        }
    }
}

TEST_CASE("poincare series coefficients") {
    for (const char* s : {"T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        const long G = c.g.mobius_order;  // m = 1 for these groups
        for (const auto& ir : c.t.irreps) {
            for (long k : {0L, 1L, 2L, 3L}) {
                Cyclotomic dim_cy =
                    inner_product(sym_power_char(c.g, k * G), ir.chi.conj()) * Rational(ir.degree);
                long expected;
                if (ir.spinorial)
                    expected = 0;
                else if (ir.label == c.t.trivial().label)
                    expected = k + 1;
                else
                    expected = k * ir.degree * ir.degree;
                CHECK(dim_cy == Cyclotomic::rational_in(c.g.conductor, Rational(expected)));
            }
        }
    }
}

TEST_CASE("fixed dimensions") {
    const Ctx& t = ctx("T");
    CHECK(fixed_dim_mobius_cyclic(t.t.by_label("T7").chi, t.g.generator("g_c"), 2) == Rational(1));
    CHECK(fixed_dim_mobius_cyclic(t.t.trivial().chi, t.g.generator("g_a"), 3) == Rational(1));

    const Ctx& y = ctx("Y");
    CHECK(fixed_dim_mobius_cyclic(y.t.by_label("Y8").chi, y.g.generator("g_a"), 5) == Rational(1));
}

TEST_CASE("serre-lusztig identity for every irreducible of the non-cyclic groups") {
    for (const char* s : {"D3", "D4", "D5", "D6", "T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        for (const auto& ir : c.t.irreps) {
            if (ir.spinorial) continue;
            Rational lhs = Rational(ir.degree) +
                           Rational(2) * inner_product(ir.chi, c.t.trivial().chi).rational_value();
            Rational rhs(0);
            for (int i = 0; i < 3; ++i) {
                int nu = c.g.exceptional[i].stabiliser_order;
                rhs += fixed_dim_mobius_cyclic(ir.chi, c.g.gen_indices[i], nu);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("kappa records") {
    // psi_j of D_N: kappa = (1, 1/2, 1/2), nu*kappa = (N, 1, 1)
    for (const char* s : {"D3", "D4", "D5", "D6"}) {
        const Ctx& c = ctx(s);
        for (const auto& ir : c.t.irreps) {
            if (ir.label.rfind("psi", 0) != 0) continue;
            KappaRecord r = kappa(c.t, ir.label);
            CHECK(r.kappa == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 2)});
            CHECK(r.nu_kappa ==
                  std::vector<Rational>{Rational(c.g.spec.parameter), Rational(1), Rational(1)});
        }
    }

    KappaRecord y8 = kappa(ctx("Y").t, "Y8");
    CHECK(y8.kappa == std::vector<Rational>{Rational(2), Rational(2), Rational(1)});
    CHECK(y8.nu_kappa == std::vector<Rational>{Rational(10), Rational(6), Rational(2)});

    KappaRecord triv = kappa(ctx("T").t, "T1");
    CHECK(triv.kappa == std::vector<Rational>{Rational(0), Rational(0), Rational(0)});

    CHECK_THROWS_AS(kappa(ctx("T").t, "T4"), domain_error);

    // nu*kappa integral exactly for the real-valued characters. This holds on
    // the non-cyclic groups; C4's non-real chi2 has integral nu*kappa = (2,2),
    // so the cyclic case only keeps the forward direction.
    for (const char* s : {"D3", "D4", "D5", "D6", "T", "O", "Y"}) {
        const Ctx& c = ctx(s);
        for (const auto& ir : c.t.irreps) {
            if (ir.spinorial) continue;
            KappaRecord r = kappa(c.t, ir.label);
            bool integral = true;
            for (const auto& v : r.nu_kappa) integral = integral && is_integer(v);
            CHECK(integral == ir.real);
        }
    }
    for (const char* s : {"C4", "C5", "C6"}) {
        const Ctx& c = ctx(s);
        for (const auto& ir : c.t.irreps) {
            if (!ir.real) continue;
            KappaRecord r = kappa(c.t, ir.label);
            for (const auto& v : r.nu_kappa) CHECK(is_integer(v));
        }
    }
}

TEST_CASE("kappa table columns for the octahedral group") {
    const Ctx& o = ctx("O");
    auto check = [&](const std::string& label, std::vector<Rational> nk) {
        CHECK(kappa(o.t, label).nu_kappa == nk);
    };
    check("O2", {Rational(2), Rational(0), Rational(1)});
    check("O3", {Rational(2), Rational(3), Rational(1)});
    check("O6", {Rational(6), Rational(3), Rational(1)});
    check("O7", {Rational(4), Rational(3), Rational(2)});
}
