#include <set>

#include "doctest.h"
#include "hopfcy/cartan.hpp"

using namespace hopfcy;

TEST_CASE("validate") {
    auto a2 = validate_cartan({{2, -1}, {-1, 2}});
    CHECK(a2.d == std::vector<long>{1, 1});
    CHECK(a2.components.size() == 1);
    auto a1a1 = validate_cartan({{2, 0}, {0, 2}});
    CHECK(a1a1.components.size() == 2);
    CHECK(a1a1.all_a1());
    CHECK_THROWS_AS(validate_cartan({{2, -2}, {-2, 2}}), CartanError);
    CHECK_THROWS_AS(validate_cartan({{2, -1}, {0, 2}}), CartanError);
    CHECK_THROWS_AS(validate_cartan({{2, 1}, {1, 2}}), CartanError);
    auto g2 = validate_cartan({{2, -1}, {-3, 2}});
    CHECK(g2.d == std::vector<long>{3, 1});
    auto b2 = cartan_from_type("B2");
    CHECK(b2.d[0] * b2.A[0][1] == b2.d[1] * b2.A[1][0]);
}

TEST_CASE("positive roots") {
    auto R = positive_roots(cartan_from_type("A2"));
    std::set<std::vector<long>> got(R.roots.begin(), R.roots.end());
    CHECK(got == std::set<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}});
    CHECK(positive_roots(cartan_from_type("A1xA1")).p() == 2);
    CHECK(positive_roots(cartan_from_type("A3")).p() == 6);
    CHECK(positive_roots(cartan_from_type("A2xA2")).p() == 6);
}

TEST_CASE("classical counts and reflection permutation") {
    struct Row {
        const char* t;
        std::size_t p;
    };
    for (auto [t, p] : {Row{"A1", 1}, Row{"A2", 3}, Row{"A3", 6}, Row{"A4", 10}, Row{"B2", 4}, Row{"G2", 6},
                        Row{"B3", 9}, Row{"C3", 9}, Row{"D4", 12}, Row{"F4", 24}, Row{"E6", 36}}) {
        CAPTURE(t);
        auto C = cartan_from_type(t);
        auto R = positive_roots(C);
        CHECK(R.p() == p);
        std::set<std::vector<long>> all(R.roots.begin(), R.roots.end());
        for (std::size_t k = 0; k < C.rank(); ++k) {
            std::vector<long> a(C.rank(), 0);
            a[k] = 1;
            CHECK(R.roots[R.j[k]] == a);
            std::set<std::vector<long>> rest = all, img;
            rest.erase(a);
            for (const auto& b : rest) img.insert(reflect(C, k, b));
            CHECK(img == rest);
        }
        CHECK(positive_roots(C).roots == R.roots);
    }
}
