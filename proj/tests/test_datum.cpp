#include <random>

#include "doctest.h"
#include "hopfcy/datum.hpp"

using namespace hopfcy;

namespace {
const ParamList P({"q"});
Character ch(IntMatrix E) { return Character(std::move(E), 1); }

GenericDatum sl2_datum() {
    DatumInput in{P, 1, cartan_from_type("A1xA1"), {{1}, {1}}, {ch({{2}}), ch({{-2}})}, {}};
    in.linking[{0, 1}] = parse_rf("1/(q-q^-1)", P);
    return validate_datum(in);
}

GenericDatum rank2_datum() {
    DatumInput in{P, 2, cartan_from_type("A1xA1"), {{1, 0}, {0, 1}}, {ch({{2}, {-4}}), ch({{4}, {-2}})}, {}};
    return validate_datum(in);
}

CocycleData rank2_sigma() {
    CocycleData s(2, 1);
    s.set_ratio(1, 0, {3});
    return s;
}
}  // namespace

TEST_CASE("validate datum") {
    auto d = sl2_datum();
    CHECK(d.q(0, 0) == Monomial::param(1, 0, 2));
    CHECK(d.q(1, 1) == Monomial::param(1, 0, -2));
    CHECK(mono_is_one(d.q(0, 1) * d.q(1, 0)));
    auto e = rank2_datum();
    CHECK(mono_is_one(braiding_matrix(e)[0][1] * braiding_matrix(e)[1][0]));
    CHECK(e.linking.empty());

    // missing character
    DatumInput bad{P, 1, cartan_from_type("A1xA1"), {{1}, {1}}, {ch({{2}})}, {}};
    CHECK_THROWS_WITH_AS(validate_datum(bad), doctest::Contains("character count"), DatumError);

    // primed datum with lambda != 0 although chi1 chi2 != eps
    DatumInput pr{P, 2, cartan_from_type("A1xA1"), {{1, 0}, {0, 1}}, {ch({{-2}, {1}}), ch({{-1}, {2}})}, {}};
    pr.linking[{0, 1}] = parse_rf("1/(q-1)", P);
    CHECK_THROWS_AS(validate_datum(pr), DatumError);
    auto loose = validate_datum(pr, Mode::Permissive);
    CHECK(loose.warnings.size() == 1);

    DatumInput rank0{P, 1, validate_cartan({}), {}, {}, {}};
    CHECK(braiding_matrix(validate_datum(rank0)).empty());
}

TEST_CASE("cocycle ratio and deformation") {
    auto s = rank2_sigma();
    CHECK(cocycle_ratio(s, {2, 2}, {1, 0}) == Monomial::param(1, 0, 6));
    CHECK(cocycle_ratio(s, {2, 2}, {0, 1}) == Monomial::param(1, 0, -6));
    CHECK(mono_is_one(cocycle_ratio(s, {3, -1}, {3, -1})));

    auto dd = deform_datum(rank2_datum(), s);
    CHECK(dd.chi[0]({0, 1}) == Monomial::param(1, 0, -1));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(dd.q[i][j] * dd.q[j][i] == rank2_datum().q(i, j) * rank2_datum().q(j, i));
    auto back = deform_datum(validate_datum({P, 2, rank2_datum().cartan, rank2_datum().g, dd.chi, {}}, Mode::Permissive),
                             s.inverse_class());
    CHECK(back.chi == rank2_datum().chi);

    auto triv = deform_datum(sl2_datum(), CocycleData::trivial(1, 1));
    CHECK(triv.chi == sl2_datum().chi);
    CHECK(triv.xi == std::vector<IndexPair>{{0, 1}});
}

TEST_CASE("tau from cleft") {
    auto cd = make_cleft(rank2_datum(), rank2_sigma(), {});
    CHECK(tau_from_cleft(cd).xx_values.empty());
    auto c1 = make_cleft(sl2_datum(), CocycleData::trivial(1, 1), {});
    CHECK(tau_from_cleft(c1).xx(0, 1) == parse_rf("1/(q-q^-1)", P));
    auto c2 = make_cleft(sl2_datum(), CocycleData::trivial(1, 1), {{{0, 1}, parse_rf("q", P)}});
    CHECK(tau_from_cleft(c2).xx(0, 1) == parse_rf("1/(q-q^-1) - q", P));
    CHECK_THROWS_AS(make_cleft(rank2_datum(), rank2_sigma(), {{{0, 1}, parse_rf("q", P)}}), DatumError);
}

TEST_CASE("property: ratio is bimultiplicative") {
    std::mt19937 gen(99);
    std::uniform_int_distribution<long> e(-4, 4);
    for (int it = 0; it < 1000; ++it) {
        std::size_t s = 3;
        CocycleData c(s, 2);
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t k = j + 1; k < s; ++k) c.set_ratio(j, k, {e(gen), e(gen)});
        auto rnd = [&] { return GroupElement{e(gen), e(gen), e(gen)}; };
        GroupElement g = rnd(), k = rnd(), h = rnd();
        CHECK(c.ratio(group_add(g, k), h) == c.ratio(g, h) * c.ratio(k, h));
        CHECK(c.ratio(g, h) == c.value(g, h) / c.value(h, g));
    }
}

TEST_CASE("property: coboundaries keep ratios and Xi") {
    std::mt19937 gen(5);
    std::uniform_int_distribution<long> e(-3, 3);
    auto cd = make_cleft(sl2_datum(), CocycleData::trivial(1, 1), {{{0, 1}, parse_rf("q+1", P)}});
    for (int it = 0; it < 50; ++it) {
        Coboundary f = Coboundary::identity(1, 1);
        f.c[0] = Rational(e(gen) == 0 ? 2 : 3, 5);
        f.L[0] = {e(gen)};
        f.Q[0][0] = {e(gen)};
        auto n = normalize_pair(cd, f);
        CHECK(n.sigma.ratio({2}, {-1}) == cd.sigma.ratio({2}, {-1}));
        CHECK(deform_datum(n.base, n.sigma).xi == deform_datum(cd.base, cd.sigma).xi);
        // cocycle identity for the normalized representative
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                long c = a - b;
                CHECK(n.sigma.value({a}, {b}) * n.sigma.value({a + b}, {c}) ==
                      n.sigma.value({b}, {c}) * n.sigma.value({a}, {b + c}));
            }
    }
}
