#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "isoform/cyclotomic.hpp"

using namespace isoform;

namespace {

Cyclotomic random_element(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    const int phi = CycloField::get(n).degree();
    std::vector<Rational> c(phi);
    for (int i = 0; i < phi; ++i) c[i] = make_rational(num(rng), den(rng));
    return Cyclotomic(n, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomial data") {
    CHECK(CycloField::get(1).degree() == 1);
    CHECK(CycloField::get(12).degree() == 4);
    CHECK(CycloField::get(60).degree() == 16);
    CHECK(CycloField::get(24).degree() == 8);
    // Phi_12 = x^4 - x^2 + 1
    const auto& f12 = CycloField::get(12);
    CHECK(f12.minpoly() == std::vector<Integer>{1, 0, -1, 0});
}

TEST_CASE("basic arithmetic identities") {
    // i * i = -1
    Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1));

    // 1 + z3 + z3^2 = 0
    Cyclotomic w = Cyclotomic::zeta(3);
    CHECK((Cyclotomic(1) + w + w * w).is_zero());

    // (z5 - z5^2 - z5^3 + z5^4)^2 = 5, and the element is sqrt(5) numerically
    Cyclotomic s5 = Cyclotomic::zeta(5, 1) - Cyclotomic::zeta(5, 2) -
                    Cyclotomic::zeta(5, 3) + Cyclotomic::zeta(5, 4);
    CHECK(s5 * s5 == Cyclotomic::rational_in(5, Rational(5)));
    CHECK(std::abs(s5.to_complex() - std::complex<double>(std::sqrt(5.0), 0.0)) < 1e-12);
}

TEST_CASE("inverse") {
    CHECK(Cyclotomic(1).inverse() == Cyclotomic(1));

    Cyclotomic z8 = Cyclotomic::zeta(8);
    CHECK(z8.inverse() == Cyclotomic::zeta(8, 7));

    // 1 + z3 = -z3^2, so its inverse is -z3.
    Cyclotomic w = Cyclotomic::zeta(3);
    Cyclotomic a = Cyclotomic(1) + w;
    CHECK(a.inverse() == -w);
    CHECK(a * a.inverse() == Cyclotomic::rational_in(3, Rational(1)));

    CHECK_THROWS_AS(Cyclotomic().inverse(), division_by_zero);
}

TEST_CASE("conjugation") {
    Cyclotomic w = Cyclotomic::zeta(3);
    CHECK(w.conj() == Cyclotomic::zeta(3, 2));

    // sqrt(5) is real, hence fixed.
    Cyclotomic s5 = Cyclotomic::zeta(5, 1) - Cyclotomic::zeta(5, 2) -
                    Cyclotomic::zeta(5, 3) + Cyclotomic::zeta(5, 4);
    CHECK(s5.conj() == s5);

    CHECK(Cyclotomic(Rational(7, 3)).conj() == Cyclotomic(Rational(7, 3)));

    // Involution and ring homomorphism on random pairs.
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        Cyclotomic a = random_element(rng, 12);
        Cyclotomic b = random_element(rng, 12);
        CHECK(a.conj().conj() == a);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("numeric embedding") {
    CHECK(std::abs(Cyclotomic::zeta(4).to_complex() - std::complex<double>(0, 1)) < 1e-12);
    CHECK(std::abs(Cyclotomic().to_complex()) == 0.0);

    // golden section (1 + sqrt 5)/2 = 1.6180339887...
    Cyclotomic s5 = Cyclotomic::zeta(5, 1) - Cyclotomic::zeta(5, 2) -
                    Cyclotomic::zeta(5, 3) + Cyclotomic::zeta(5, 4);
    Cyclotomic phi = (Cyclotomic::rational_in(5, Rational(1)) + s5) * Rational(1, 2);
    CHECK(std::abs(phi.to_complex() - std::complex<double>(1.61803398874989485, 0)) < 1e-12);
}

TEST_CASE("conductor promotion and mismatch") {
    Cyclotomic w3 = Cyclotomic::zeta(3);
    Cyclotomic w12 = Cyclotomic::zeta(12);
    // z3 = z12^4 inside the larger field
    CHECK(w3 + w12 == Cyclotomic::zeta(12, 4) + w12);
    CHECK(w3.embedded(12).conductor() == 12);

    Cyclotomic w8 = Cyclotomic::zeta(8);
    CHECK_THROWS_AS(w3 * w8, conductor_mismatch);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(23);
    for (int n : {3, 4, 5, 8, 12, 20, 24, 60}) {
        for (int rep = 0; rep < 8; ++rep) {
            Cyclotomic a = random_element(rng, n);
            Cyclotomic b = random_element(rng, n);
            Cyclotomic c = random_element(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) + c == a + (b + c));
            if (!a.is_zero()) {
                CHECK(a.inverse().inverse() == a);
                CHECK(a * a.inverse() == Cyclotomic::rational_in(n, Rational(1)));
            }
        }
    }
}

TEST_CASE("canonical form uniqueness along two arithmetic routes") {
    // (1 + z)^2 computed as square versus expanded by distributivity.
    for (int n : {5, 8, 24}) {
        Cyclotomic z = Cyclotomic::zeta(n);
        Cyclotomic one = Cyclotomic::rational_in(n, Rational(1));
        Cyclotomic lhs = (one + z) * (one + z);
        Cyclotomic rhs = one + z * Rational(2) + z * z;
        CHECK(lhs == rhs);
        CHECK(lhs.coeffs() == rhs.coeffs());
    }
}

TEST_CASE("powers and galois maps") {
    Cyclotomic z = Cyclotomic::zeta(60);
    CHECK(z.pow(60) == Cyclotomic::rational_in(60, Rational(1)));
    CHECK(z.pow(-1) == z.conj());
    CHECK(z.galois(7).galois(43) == z.galois(7 * 43 % 60));
}
