#include "quadprime/ideals.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace quadprime;

namespace {

// All valid [m, shift] with m prime below the bound, ascending.
std::vector<IdealSpec> valid_ideals_upto(const FieldParams& f, int64_t m_bound) {
    std::vector<IdealSpec> out;
    for (int64_t m = 2; m <= m_bound; ++m)
        for (int64_t s = 0; s < m; ++s)
            if (validate_ideal(f, {m, s})) out.push_back({m, s});
    return out;
}

} // namespace

TEST_CASE("validate_ideal") {
    const FieldParams f5 = make_field(-5); // d = -20
    CHECK(validate_ideal(f5, {2, 1}));     // N(1 + sqrt(-5)) = 6
    CHECK_FALSE(validate_ideal(f5, {3, 0})); // N(sqrt(-5)) = 5, 3 does not divide
    CHECK(validate_ideal(f5, {3, 1}));     // N(1 + sqrt(-5)) = 6

    const FieldParams f23 = make_field(-23);
    CHECK(validate_ideal(f23, {2, 0})); // N(tau) = 6

    CHECK_FALSE(validate_ideal(f5, {4, 1}));  // not prime
    CHECK_FALSE(validate_ideal(f5, {11, 0})); // 11 is inert in d = -20
    CHECK_FALSE(validate_ideal(f5, {2, 2}));  // shift out of range
    CHECK_FALSE(validate_ideal(f5, {2, -1}));
    CHECK_FALSE(validate_ideal(f5, {0, 0}));
}

TEST_CASE("contains") {
    const FieldParams f5 = make_field(-5);
    const IdealSpec I{2, 1};
    CHECK(contains(f5, I, {1, 1}));
    CHECK_FALSE(contains(f5, I, {1, 0}));
    CHECK(contains(f5, I, {2, 0})); // the norm generator
    CHECK(contains(f5, I, {0, 0}));

    CHECK_THROWS_AS(contains(f5, IdealSpec{3, 0}, RingElement{1, 1}), std::domain_error);
}

TEST_CASE("conjugate_ideal") {
    const FieldParams f23 = make_field(-23); // d odd
    CHECK(conjugate_ideal(f23, {2, 0}) == IdealSpec{2, 1});
    CHECK(conjugate_ideal(f23, {2, 1}) == IdealSpec{2, 0});

    const FieldParams f5 = make_field(-5); // d even
    CHECK(conjugate_ideal(f5, {2, 1}) == IdealSpec{2, 1}); // ramified, self-conjugate

    for (int64_t r : {-5, -23, 79, 229}) {
        const FieldParams f = make_field(r);
        for (const IdealSpec& I : valid_ideals_upto(f, 60)) {
            const IdealSpec conj = conjugate_ideal(f, I);
            CHECK(validate_ideal(f, conj));
            CHECK(conj.m == I.m);
            CHECK(conjugate_ideal(f, conj) == I);
        }
    }
}

TEST_CASE("ideal_display_class") {
    const FieldParams f5 = make_field(-5);
    const NormSet T = sieve_norms_odd(f5, 100);
    const IdealSpec I{2, 1};

    CHECK(ideal_display_class(f5, I, T, {1, 1}) == IdealClass::ClassI); // N = 6 = 2*3
    CHECK(ideal_display_class(f5, I, T, {1, 0}) == IdealClass::None);   // a unit
    CHECK(ideal_display_class(f5, I, T, {3, 1}) == IdealClass::ClassI); // N = 14 = 2*7
    CHECK(ideal_display_class(f5, I, T, {0, 0}) == IdealClass::None);
    CHECK(ideal_display_class(f5, I, T, {2, 1}) == IdealClass::None); // N = 9, odd

    // norm quotient above the sieved range must not be answered silently
    CHECK_THROWS_AS(ideal_display_class(f5, I, sieve_norms_odd(f5, 2), RingElement{9, 3}),
                    std::out_of_range);

    // conjugate classes in a class-number-3 field: d = -23, I = [2, 0]
    const FieldParams f23 = make_field(-23);
    const NormSet T23 = sieve_norms_odd(f23, 200);
    const IdealSpec J{2, 0};
    // N(tau) = 6 = 2*3 and tau = (0, 1) lies in [2, 0 + tau]
    CHECK(ideal_display_class(f23, J, T23, {0, 1}) == IdealClass::ClassI);
    // its conjugate lies in the conjugate class
    CHECK(ideal_display_class(f23, J, T23, conjugate(f23, {0, 1})) == IdealClass::ClassConjI);
}

TEST_CASE("ideal membership is closed under ring operations") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int64_t> coord(-30, 30);
    for (int64_t r : {-5, -23, 79}) {
        const FieldParams f = make_field(r);
        const auto ideals = valid_ideals_upto(f, 20);
        REQUIRE_FALSE(ideals.empty());
        for (const IdealSpec& I : ideals) {
            int checked = 0;
            while (checked < 200) {
                const RingElement a{coord(rng), coord(rng)};
                const RingElement b{coord(rng), coord(rng)};
                if (!contains(f, I, a) || !contains(f, I, b)) continue;
                ++checked;
                REQUIRE(contains(f, I, {a.x + b.x, a.y + b.y}));
                REQUIRE(contains(f, I, {-a.x, -a.y}));
                const RingElement any{coord(rng), coord(rng)};
                REQUIRE(contains(f, I, multiply(f, a, any)));
                REQUIRE(norm(f, a) % I.m == 0);
            }
        }
    }
}

TEST_CASE("ideal has index m: one member among m consecutive x") {
    for (int64_t r : {-5, -23, 229}) {
        const FieldParams f = make_field(r);
        for (const IdealSpec& I : valid_ideals_upto(f, 15)) {
            for (int64_t y = -10; y <= 10; ++y)
                for (int64_t x0 = -7; x0 <= 7; x0 += 3) {
                    int hits = 0;
                    for (int64_t x = x0; x < x0 + I.m; ++x)
                        if (contains(f, I, {x, y})) ++hits;
                    REQUIRE(hits == 1);
                }
        }
    }
}

TEST_CASE("find_default_ideal returns the smallest valid split-prime ideal") {
    const FieldParams f5 = make_field(-5);
    const IdealSpec I = find_default_ideal(f5);
    CHECK(I == IdealSpec{3, 1}); // 2 ramifies in d = -20; 3 is the first split prime
    CHECK(validate_ideal(f5, I));

    const FieldParams f23 = make_field(-23);
    const IdealSpec J = find_default_ideal(f23);
    CHECK(J.m == 2); // -23 = 1 (mod 8), 2 splits
    CHECK(validate_ideal(f23, J));
}
