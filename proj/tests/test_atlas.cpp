#include "quadprime/atlas.hpp"

#include "quadprime/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace quadprime;

namespace {

int64_t count_glyph(const std::string& text, char g) {
    int64_t c = 0;
    for (char ch : text)
        if (ch == g) ++c;
    return c;
}

int64_t count_substr(const std::string& hay, const std::string& needle) {
    int64_t c = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++c;
    return c;
}

} // namespace

TEST_CASE("classify_point in the Gaussian integers") {
    const FieldParams gauss = make_field(-1);
    const NormSet T = sieve_norms_odd(gauss, 200);
    const auto cls = [&](int64_t x, int64_t y) {
        return classify_point(gauss, T, std::nullopt, {x, y});
    };
    CHECK(cls(1, 1) == PointClass::Prime);  // N = 2
    CHECK(cls(3, 0) == PointClass::Prime);  // N = 9, 3 inert
    CHECK(cls(5, 0) == PointClass::Other);  // N = 25, 5 splits
    CHECK(cls(0, 1) == PointClass::Unit);
    CHECK(cls(3, 4) == PointClass::Other);  // N = 25, composite
    CHECK(cls(0, 0) == PointClass::Other);
    CHECK(cls(2, 1) == PointClass::Prime);  // N = 5

    CHECK_THROWS_AS(classify_point(gauss, sieve_norms_odd(gauss, 10), std::nullopt,
                                   RingElement{10, 10}),
                    std::out_of_range);
}

TEST_CASE("region_max_norm") {
    CHECK(region_max_norm(make_field(-1), {-10, 10, -10, 10}) == 200);
    CHECK(region_max_norm(make_field(2), {-10, 10, -10, 10}) == 200);
    CHECK(region_max_norm(make_field(-1), {0, 0, 0, 0}) == 0);
    CHECK_THROWS_AS(region_max_norm(make_field(-1), {3, 2, 0, 0}), std::domain_error);

    // exact against exhaustive evaluation, including indefinite forms and
    // asymmetric boxes
    for (int64_t r : {-1, -3, 2, 5, 10, 79, -23}) {
        const FieldParams f = make_field(r);
        for (const Region rg : {Region{-7, 7, -7, 7}, Region{2, 9, -3, 5},
                                Region{-6, -1, 1, 8}, Region{0, 0, -9, 9}}) {
            int64_t brute = 0;
            for (int64_t y = rg.y_min; y <= rg.y_max; ++y)
                for (int64_t x = rg.x_min; x <= rg.x_max; ++x)
                    brute = std::max(brute, norm(f, {x, y}));
            REQUIRE(region_max_norm(f, rg) == brute);
        }
    }
}

TEST_CASE("enumerate_atlas on the Gaussian box of radius 2") {
    const FieldParams gauss = make_field(-1);
    const Region rg{-2, 2, -2, 2};
    const NormSet T = sieve_norms_odd(gauss, region_max_norm(gauss, rg));
    const auto atlas = enumerate_atlas(gauss, rg, T);
    REQUIRE(atlas.size() == 25);

    // row-major: y ascending outer, x ascending inner
    CHECK(atlas.front().first == RingElement{-2, -2});
    CHECK(atlas[1].first == RingElement{-1, -2});
    CHECK(atlas.back().first == RingElement{2, 2});

    std::map<PointClass, int> counts;
    std::map<std::pair<int64_t, int64_t>, PointClass> at;
    for (const auto& [z, c] : atlas) {
        ++counts[c];
        at[{z.x, z.y}] = c;
    }
    CHECK(counts[PointClass::Unit] == 4);
    CHECK(counts[PointClass::Prime] == 12); // N = 2 at four corners, N = 5 at eight
    CHECK(counts[PointClass::Other] == 9);
    CHECK(at[{1, 1}] == PointClass::Prime);
    CHECK(at[{-1, -1}] == PointClass::Prime);
    CHECK(at[{2, 1}] == PointClass::Prime);
    CHECK(at[{0, 0}] == PointClass::Other);
    CHECK(at[{2, 0}] == PointClass::Other); // N = 4 is not a prime-ideal norm
}

TEST_CASE("atlas with a non-principal ideal, r = -5") {
    const FieldParams f = make_field(-5);
    const Region rg{-1, 1, -1, 1};
    const NormSet T = sieve_norms_odd(f, std::max<int64_t>(region_max_norm(f, rg), 2));

    // [2, 1] is ramified and self-conjugate: both classes collapse to ClassI
    const auto atlas2 = enumerate_atlas(f, rg, T, IdealSpec{2, 1});
    std::map<std::pair<int64_t, int64_t>, PointClass> at;
    for (const auto& [z, c] : atlas2) at[{z.x, z.y}] = c;
    CHECK(at[{1, 1}] == PointClass::IdealClassI);
    CHECK(at[{-1, -1}] == PointClass::IdealClassI);
    CHECK(at[{1, -1}] == PointClass::IdealClassI);
    CHECK(at[{-1, 1}] == PointClass::IdealClassI);
    CHECK(at[{0, 0}] == PointClass::Other);
    CHECK(at[{1, 0}] == PointClass::Unit);

    // [3, 1] is split: the conjugate class shows up on the other diagonal
    const auto atlas3 = enumerate_atlas(f, rg, T, IdealSpec{3, 1});
    for (const auto& [z, c] : atlas3) at[{z.x, z.y}] = c;
    CHECK(at[{1, 1}] == PointClass::IdealClassI);
    CHECK(at[{-1, -1}] == PointClass::IdealClassI);
    CHECK(at[{1, -1}] == PointClass::IdealClassConjI);
    CHECK(at[{-1, 1}] == PointClass::IdealClassConjI);
}

TEST_CASE("classification symmetries") {
    const FieldParams f = make_field(-5);
    const Region rg{-8, 8, -8, 8};
    const NormSet T = sieve_norms_odd(f, region_max_norm(f, rg));
    const IdealSpec I{3, 1};
    const IdealSpec conj = conjugate_ideal(f, I);
    for (int64_t y = -8; y <= 8; ++y)
        for (int64_t x = -8; x <= 8; ++x) {
            const RingElement z{x, y};
            const PointClass c = classify_point(f, T, I, z);
            // negation preserves the class
            REQUIRE(classify_point(f, T, I, {-x, -y}) == c);
            // conjugation swaps the two ideal classes; points lying in both
            // I and conj(I) tie-break to ClassI on both sides
            const PointClass cc = classify_point(f, T, I, conjugate(f, z));
            const bool tie = contains(f, I, z) && contains(f, conj, z);
            if (c == PointClass::IdealClassI) {
                REQUIRE(cc == (tie ? PointClass::IdealClassI : PointClass::IdealClassConjI));
            } else if (c == PointClass::IdealClassConjI) {
                REQUIRE(cc == PointClass::IdealClassI);
            } else {
                REQUIRE(cc == c);
            }
        }
}

TEST_CASE("unit multiplication preserves unit/prime/other") {
    const FieldParams gauss = make_field(-1);
    const Region rg{-10, 10, -10, 10};
    const NormSet T = sieve_norms_odd(gauss, region_max_norm(gauss, rg));
    const RingElement i{0, 1};
    for (int64_t y = -10; y <= 10; ++y)
        for (int64_t x = -10; x <= 10; ++x) {
            const RingElement z{x, y};
            const RingElement zi = multiply(gauss, z, i);
            REQUIRE(classify_point(gauss, T, std::nullopt, z) ==
                    classify_point(gauss, T, std::nullopt, zi));
        }
}

TEST_CASE("classification matches the irreducibility oracle on a small box") {
    for (int64_t r : {-1, -3}) {
        const FieldParams f = make_field(r);
        const Region rg{-12, 12, -12, 12};
        const NormSet T = sieve_norms_odd(f, std::max<int64_t>(region_max_norm(f, rg), 2));
        for (int64_t y = rg.y_min; y <= rg.y_max; ++y)
            for (int64_t x = rg.x_min; x <= rg.x_max; ++x) {
                const RingElement z{x, y};
                REQUIRE(classify_point(f, T, std::nullopt, z) ==
                        verify::reference_point_class(f, z));
            }
    }
}

TEST_CASE("render_text") {
    const FieldParams gauss = make_field(-1);
    const Region box1{-1, 1, -1, 1};
    const NormSet T = sieve_norms_odd(gauss, 2);
    const auto atlas = enumerate_atlas(gauss, box1, T);
    CHECK(render_text(atlas, gauss) == "PUP\nU.U\nPUP\n");

    // single origin point
    const auto origin = enumerate_atlas(gauss, {0, 0, 0, 0}, T);
    CHECK(render_text(origin, gauss) == ".\n");

    // staggered grid: odd rows are indented one column, cells two wide
    const FieldParams f5 = make_field(5);
    const NormSet T5 = sieve_norms_odd(f5, 2);
    const auto a5 = enumerate_atlas(f5, box1, T5);
    CHECK(render_text(a5, f5) == " U U U\nU . U\n U U U\n");

    CHECK(render_text({}, gauss).empty());
    CHECK(render_text(atlas, gauss) == render_text(atlas, gauss));
}

TEST_CASE("render_svg") {
    const FieldParams gauss = make_field(-1);
    const Region rg{-2, 2, -2, 2};
    const NormSet T = sieve_norms_odd(gauss, region_max_norm(gauss, rg));
    const auto atlas = enumerate_atlas(gauss, rg, T);
    const RenderConfig cfg;
    const std::string svg = render_svg(atlas, gauss, cfg);

    CHECK(svg.find("<?xml") == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("0+0-") != std::string::npos); // character row in the header
    CHECK(count_substr(svg, "fill=\"" + cfg.unit_color + "\"") == 4);
    CHECK(count_substr(svg, "fill=\"" + cfg.prime_color + "\"") == 12);
    CHECK(count_substr(svg, "<circle") == 25);

    // byte determinism
    CHECK(render_svg(atlas, gauss, cfg) == svg);

    // empty atlas still yields a headed, axed document
    const std::string empty = render_svg({}, gauss, cfg);
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("<line") != std::string::npos);
    CHECK(empty.find("<circle") == std::string::npos);

    // staggered fields shift consecutive rows by half a cell
    const FieldParams f5 = make_field(5);
    const auto a5 = enumerate_atlas(f5, {0, 0, 0, 1}, sieve_norms_odd(f5, 2));
    const std::string s5 = render_svg(a5, f5, cfg);
    std::vector<std::string> cxs;
    for (std::size_t pos = s5.find("cx=\""); pos != std::string::npos;
         pos = s5.find("cx=\"", pos + 1))
        cxs.push_back(s5.substr(pos + 4, s5.find('"', pos + 4) - pos - 4));
    REQUIRE(cxs.size() == 2); // points (0,0) and (0,1)
    CHECK(cxs[0] != cxs[1]);
}
