#include <gtest/gtest.h>

#include <numeric>

#include "homring/homring.hpp"
#include "oracle.hpp"

using namespace homring;

namespace {

std::vector<Elem> ints(const Ring& R, std::initializer_list<int> v) {
    std::vector<Elem> out;
    for (int k : v) out.push_back(R.from_int(k));
    std::sort(out.begin(), out.end());
    return out;
}

// Brute-force nilpotents and annihilator, independent of Ring::radical/socle.
std::pair<std::vector<Elem>, std::vector<Elem>> radical_socle(const Ring& R) {
    std::vector<Elem> nil, soc;
    for (Elem a = 0; a < R.order(); ++a) {
        Elem x = a;
        for (std::size_t i = 0; i < R.order() && x != 0; ++i) x = R.mul(x, a);
        if (x == 0) nil.push_back(a);
    }
    for (Elem a = 0; a < R.order(); ++a) {
        bool kills = true;
        for (Elem n : nil) kills = kills && R.mul(a, n) == 0;
        if (kills) soc.push_back(a);
    }
    return {nil, soc};
}

}  // namespace

TEST(IntegerRing, OrderAndUnits) {
    const auto Z6 = make_integer_ring(6);
    EXPECT_EQ(Z6->order(), 6u);
    EXPECT_EQ(Z6->units(), ints(*Z6, {1, 5}));
    const auto Z10 = make_integer_ring(10);
    EXPECT_EQ(Z10->characteristic(), 10u);
    EXPECT_EQ(Z10->units().size(), 4u);
}

TEST(IntegerRing, RadicalAndSocleOfZ4) {
    const auto Z4 = make_integer_ring(4);
    EXPECT_EQ(Z4->radical().elements, ints(*Z4, {0, 2}));
    EXPECT_EQ(Z4->socle().elements, ints(*Z4, {0, 2}));
    EXPECT_TRUE(Z4->is_local());
    EXPECT_FALSE(make_integer_ring(6)->is_local());
}

TEST(IntegerRing, ArithmeticMatchesMachineIntegers) {
    for (int m : {4, 7, 9, 10, 14}) {
        const auto R = make_integer_ring(m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                ASSERT_EQ(R->add(R->from_int(a), R->from_int(b)), R->from_int((a + b) % m));
                ASSERT_EQ(R->mul(R->from_int(a), R->from_int(b)), R->from_int(a * b % m));
            }
    }
}

TEST(IntegerRing, RejectsBadModulus) {
    EXPECT_THROW(make_integer_ring(1), Error);
    try {
        make_integer_ring(5000);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(GaloisRing, Sizes) {
    const auto R = make_galois_ring(2, 2, 2);
    EXPECT_EQ(R->order(), 16u);
    EXPECT_EQ(R->characteristic(), 4u);
    EXPECT_EQ(teichmuller(*R).elements.size(), 4u);

    const auto F8 = make_galois_ring(2, 1, 3);
    EXPECT_EQ(F8->order(), 8u);
    EXPECT_EQ(F8->socle().elements.size(), 8u);
    EXPECT_EQ(F8->radical().elements.size(), 1u);

    const auto G = make_galois_ring(2, 3, 2);
    EXPECT_EQ(G->order(), 64u);
    EXPECT_EQ(G->radical().elements.size(), 16u);
    EXPECT_EQ(G->units().size(), 48u);
}

TEST(GaloisRing, RadicalAndSocleMatchBruteForce) {
    for (auto R : {make_galois_ring(2, 2, 2), make_galois_ring(3, 2, 2), make_galois_ring(2, 3, 2),
                   make_table_ring("FXY:2"), make_table_ring("Z4X"), make_integer_ring(8)}) {
        const auto [nil, soc] = radical_socle(*R);
        EXPECT_EQ(R->radical().elements, nil) << R->spec();
        EXPECT_EQ(R->socle().elements, soc) << R->spec();
    }
}

TEST(GaloisRing, ResidueFieldIsAField) {
    // R/M has |R|/|M| elements and every nonzero Teichmüller element is a unit of order dividing q-1.
    for (auto R : {make_galois_ring(2, 2, 2), make_galois_ring(3, 2, 2), make_galois_ring(2, 3, 2)}) {
        const auto td = teichmuller(*R);
        EXPECT_EQ(td.q, R->order() / R->radical().elements.size());
        for (std::size_t i = 1; i < td.q; ++i) EXPECT_EQ(R->pow(td.elements[i], td.q - 1), R->one());
    }
}

TEST(GaloisRing, DefiningPolynomialDividesXqMinusX) {
    // The class xi satisfies xi^(q-1) = 1 and has order exactly q-1.
    const auto R = make_galois_ring(3, 2, 2);
    const Elem xi = *R->teichmuller_hint();
    EXPECT_EQ(multiplicative_order(*R, xi), 8u);
}

TEST(GaloisRing, SmallestPrimitivePolynomial) {
    EXPECT_EQ(smallest_primitive_polynomial(2, 2), (std::vector<std::int64_t>{1, 1, 1}));
    EXPECT_EQ(smallest_primitive_polynomial(2, 3), (std::vector<std::int64_t>{1, 1, 0, 1}));
    // Coefficients compare from the top degree down: x^2 + x + 2 comes first over F_3.
    EXPECT_EQ(smallest_primitive_polynomial(3, 2), (std::vector<std::int64_t>{2, 1, 1}));
}

TEST(GaloisRing, RejectsNonPrime) { EXPECT_THROW(make_galois_ring(4, 1, 2), Error); }

TEST(TableRing, FxyStructure) {
    const auto R2 = make_table_ring("FXY:2");
    EXPECT_EQ(R2->order(), 16u);
    EXPECT_EQ(R2->radical().elements.size(), 8u);
    ASSERT_EQ(R2->socle().elements.size(), 2u);
    EXPECT_EQ(R2->render(R2->socle().elements[1]), "xy");

    const auto R3 = make_table_ring("FXY:3");
    EXPECT_EQ(R3->order(), 81u);
    EXPECT_EQ(R3->radical().elements.size(), 27u);
    EXPECT_EQ(R3->units().size(), 54u);
}

TEST(TableRing, Z4x) {
    const auto R = make_table_ring("Z4X");
    EXPECT_EQ(R->order(), 16u);
    EXPECT_EQ(R->characteristic(), 4u);
    const std::vector<std::int64_t> t{0, 1};
    const Elem theta = R->from_coords(t);
    EXPECT_EQ(R->mul(theta, theta), R->from_int(2));
    EXPECT_EQ(R->render(R->add(R->from_int(2), R->mul(R->from_int(3), theta))), "2+3t");
}

TEST(TableRing, UnknownPreset) {
    try {
        make_table_ring(std::string_view("ABC"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownPreset);
    }
}

TEST(TableRing, NonAssociativeStructureIsRejected) {
    // Basis {1, a, b} over F_2 with a*a = b, a*b = 0, b*b = a breaks (a a) b = a (a b)... and more.
    RingStructure s;
    s.orders = {2, 2, 2};
    s.basis_names = {"1", "a", "b"};
    s.products = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, {{0, 0, 1}, {0, 0, 0}, {0, 1, 0}}};
    s.one = {1, 0, 0};
    try {
        make_table_ring(s, "bad");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidRing);
    }
}

TEST(Teichmuller, Z9) {
    const auto R = make_integer_ring(9);
    const auto td = teichmuller(*R);
    auto set = td.elements;
    std::sort(set.begin(), set.end());
    EXPECT_EQ(set, ints(*R, {0, 1, 8}));
    EXPECT_EQ(td.nu[R->from_int(4)], R->from_int(1));
}

TEST(Teichmuller, Z4) {
    const auto R = make_integer_ring(4);
    const auto td = teichmuller(*R);
    EXPECT_EQ(td.elements.size(), 2u);
    EXPECT_EQ(td.nu[R->from_int(3)], R->from_int(1));
}

TEST(Teichmuller, Gr42IsZeroAndCubeRoots) {
    const auto R = make_galois_ring(2, 2, 2);
    const auto td = teichmuller(*R);
    std::vector<Elem> oracle{0};
    for (Elem u : R->units())
        if (R->pow(u, 3) == R->one()) oracle.push_back(u);
    std::sort(oracle.begin(), oracle.end());
    auto got = td.elements;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle);
    const Elem xi = *R->teichmuller_hint();
    EXPECT_EQ(R->pow(xi, 3), R->one());
    EXPECT_NE(xi, R->one());
}

TEST(Teichmuller, NonLocalRingThrows) {
    try {
        teichmuller(*make_integer_ring(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotLocal);
    }
}

TEST(PadicDigits, Gr42) {
    const auto R = make_galois_ring(2, 2, 2);
    const Elem xi = *R->teichmuller_hint();
    const Elem a = R->add(R->one(), R->mul(R->from_int(2), xi));
    EXPECT_EQ(padic_digits(*R, a), (std::vector<Elem>{R->one(), xi}));
    EXPECT_EQ(padic_digits(*R, 0), (std::vector<Elem>{0, 0}));
}

TEST(PadicDigits, Z9FiveByExhaustiveSearch) {
    const auto R = make_integer_ring(9);
    const auto td = teichmuller(*R);
    std::vector<std::pair<int, int>> found;
    for (int t0 : {0, 1, 8})
        for (int t1 : {0, 1, 8})
            if ((t0 + 3 * t1) % 9 == 5) found.emplace_back(t0, t1);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], std::make_pair(8, 8));
    EXPECT_EQ(padic_digits(*R, td, R->from_int(5)), (std::vector<Elem>{R->from_int(8), R->from_int(8)}));
}

TEST(PadicDigits, RoundTripEveryGaloisElement) {
    for (auto R : {make_galois_ring(2, 2, 2), make_galois_ring(3, 2, 2), make_galois_ring(2, 3, 2)}) {
        const auto td = teichmuller(*R);
        for (Elem a = 0; a < R->order(); ++a) {
            const auto d = padic_digits(*R, td, a);
            ASSERT_EQ(from_padic_digits(*R, d), a);
            for (Elem t : d) ASSERT_GE(td.position[t], 0);
        }
    }
}

TEST(PadicDigits, NeedGaloisRing) {
    const auto R = make_table_ring("FXY:2");
    try {
        padic_digits(*R, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WrongRingFamily);
    }
}

TEST(Automorphism, FrobeniusOnGr42) {
    const auto R = make_galois_ring(2, 2, 2);
    const auto s = frobenius(R);
    const Elem xi = *R->teichmuller_hint();
    EXPECT_EQ(s(xi), R->mul(xi, xi));
    EXPECT_TRUE(compose(s, s).is_identity());
    EXPECT_EQ(automorphism_order(s), 2u);
}

TEST(Automorphism, SwapXy) {
    const auto R = make_table_ring("FXY:2");
    const auto s = swap_xy(R);
    const std::vector<std::int64_t> x{0, 1, 0, 0}, y{0, 0, 1, 0}, xy{0, 0, 0, 1};
    EXPECT_EQ(s(R->from_coords(x)), R->from_coords(y));
    EXPECT_EQ(s(R->from_coords(xy)), R->from_coords(xy));
    EXPECT_TRUE(compose(s, s).is_identity());
    EXPECT_THROW(swap_xy(make_galois_ring(2, 2, 2)), Error);
}

TEST(Automorphism, FrobeniusFixesGaloisTraceOnGr82) {
    const auto R = make_galois_ring(2, 3, 2);
    const auto T = galois_trace(R, make_integer_ring(8));
    const auto tau = frobenius(R);
    for (Elem a = 0; a < R->order(); ++a) ASSERT_EQ(T(tau(a)), T(a));
}

TEST(Automorphism, NamedLookup) {
    const auto R = make_galois_ring(3, 2, 2);
    EXPECT_TRUE(named_automorphism(R, "identity").is_identity());
    EXPECT_TRUE(named_automorphism(R, "frobenius^2").is_identity());
    EXPECT_EQ(named_automorphism(R, "frobenius").table, frobenius(R).table);
    EXPECT_THROW(named_automorphism(R, "swap-xy"), Error);
}

TEST(Cyclotomic, Polynomials) {
    EXPECT_EQ(cyclotomic_poly(4), (std::vector<std::int64_t>{1, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(6), (std::vector<std::int64_t>{1, -1, 1}));
    EXPECT_EQ(cyclotomic_poly(8), (std::vector<std::int64_t>{1, 0, 0, 0, 1}));
    EXPECT_EQ(cyclotomic_poly(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, Sums) {
    CyclotomicNumber s(4);
    for (int e = 0; e < 4; ++e) s = s + CyclotomicNumber::root_power(4, e);
    EXPECT_EQ(s.to_rational(), 0);

    const auto t = CyclotomicNumber::root_power(6, 1) + CyclotomicNumber::root_power(6, 5);
    EXPECT_EQ(t.to_rational(), 1);

    try {
        CyclotomicNumber::root_power(8, 1).to_rational();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotRational);
    }
}

TEST(Cyclotomic, ArithmeticAcrossConductors) {
    // omega_4 * omega_4 = -1 and omega_3 + omega_3^2 = -1, compared after lifting to Q(omega_12).
    const auto i = CyclotomicNumber::root_power(4, 1);
    EXPECT_EQ((i * i).to_rational(), -1);
    const auto w = CyclotomicNumber::root_power(3, 1) + CyclotomicNumber::root_power(3, 2);
    EXPECT_EQ(w, CyclotomicNumber::from_rational(12, Rational(-1)));
    EXPECT_EQ(i.lift(12), CyclotomicNumber::root_power(12, 3));
}

TEST(Cyclotomic, RamanujanSumsMatchOracle) {
    for (std::int64_t m : {4, 6, 8, 9, 10, 12, 14, 15}) {
        for (std::int64_t x = 0; x < m; ++x) {
            std::vector<std::int64_t> counts(m, 0);
            for (std::int64_t u = 1; u < m; ++u)
                if (std::gcd(u, m) == 1) ++counts[x * u % m];
            const Rational got = CyclotomicNumber::from_exponent_counts(m, counts).to_rational();
            const std::int64_t n = m / std::gcd(x == 0 ? m : x, m);
            const Rational want = Rational(oracle::mobius(n) * oracle::euler_phi(m), oracle::euler_phi(n));
            ASSERT_EQ(got, want) << "m=" << m << " x=" << x;
        }
    }
}

TEST(Rationals, Formatting) {
    EXPECT_EQ(to_fraction_string(Rational(12)), "12/1");
    EXPECT_EQ(to_fraction_string(Rational(-9, 2)), "-9/2");
    EXPECT_EQ(to_short_string(Rational(81, 2)), "81/2");
    EXPECT_EQ(parse_rational("128/3"), Rational(128, 3));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("x"), Error);
}
