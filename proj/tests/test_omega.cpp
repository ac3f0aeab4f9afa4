#include <catch_amalgamated.hpp>

#include <random>

#include "gst/omega.hpp"

using namespace gst;

TEST_CASE("omega weights") {
    CHECK(omega_weight(3, 2, 1) == 3);   // (9-3)/2
    CHECK(omega_weight(3, 2, 2) == 4);   // (9-1)/2
    CHECK(omega_weight(5, 2, 1) == 10);  // (25-5)/2
    CHECK(omega_weight(5, 2, 2) == 12);  // (25-1)/2
    CHECK(omega_weight(7, 3, 3) == 171);
}

TEST_CASE("solution values reconstruct") {
    OmegaLevel lv{5, 2};
    OmegaSolution s{1, {2, 3}};
    CHECK(s.value(lv) == 25 + 2 * 10 + 3 * 12);
}

TEST_CASE("membership criterion against the reachability oracle") {
    for (i64 p : {3, 5, 7}) {
        for (i64 N = 1; N <= 4; ++N) {
            OmegaLevel lv{p, N};
            for (i64 y = 0; y <= 900; ++y) {
                auto witness = omega_brute(lv, y);
                bool crit = omega_contains(lv, y);
                INFO("p=" << p << " N=" << N << " y=" << y);
                REQUIRE(crit == witness.has_value());
                if (witness) REQUIRE(witness->value(lv) == y);
            }
        }
    }
}

TEST_CASE("level zero and boundary conventions") {
    CHECK(omega_contains(OmegaLevel{3, 0}, 0));
    CHECK(omega_contains(OmegaLevel{3, 0}, 17));
    CHECK(omega_contains(OmegaLevel{5, 3}, 0));
    CHECK_FALSE(omega_contains(OmegaLevel{5, 2}, -1));
    CHECK_THROWS_AS(omega_contains(OmegaLevel{4, 1}, 3), domain_error);
    CHECK_THROWS_AS(omega_brute(OmegaLevel{3, 0}, 3), domain_error);
}

TEST_CASE("frozen membership window at p=5, N=2") {
    OmegaLevel lv{5, 2};
    CHECK_FALSE(omega_contains(lv, 63));
    CHECK(omega_contains(lv, 64));
    CHECK(omega_contains(lv, 65));
    CHECK(omega_contains(lv, 66));
}

TEST_CASE("omega is closed under addition") {
    std::mt19937_64 rng(99);
    for (i64 p : {3, 5}) {
        for (i64 N = 1; N <= 3; ++N) {
            OmegaLevel lv{p, N};
            std::vector<i64> members;
            for (i64 y = 0; y <= 400; ++y)
                if (omega_contains(lv, y)) members.push_back(y);
            for (int t = 0; t < 500; ++t) {
                i64 a = members[rng() % members.size()];
                i64 b = members[rng() % members.size()];
                INFO("p=" << p << " N=" << N << " a=" << a << " b=" << b);
                REQUIRE(omega_contains(lv, a + b));
            }
        }
    }
}

TEST_CASE("sigma stable closed form and canonical witness") {
    CHECK(sigma_stable(3, 1) == 0);
    CHECK(sigma_stable(3, 2) == 6);
    CHECK(sigma_stable(3, 3) == 42);
    CHECK(sigma_stable(5, 2) == 64);
    CHECK(sigma_stable(5, 3) == 564);
    CHECK(sigma_stable(7, 2) == 222);
    CHECK(sigma_stable(7, 3) == 2574);
    CHECK_THROWS_AS(sigma_stable(3, 0), domain_error);

    // Canonical witness: h = 0, x_1 = ... = x_{e-1} = p-1, x_e = p-3.
    for (i64 p : {3, 5, 7}) {
        for (i64 e = 1; e <= 3; ++e) {
            OmegaLevel lv{p, e};
            OmegaSolution s;
            s.x.assign(static_cast<size_t>(e), p - 1);
            s.x.back() = p - 3;
            REQUIRE(s.value(lv) == sigma_stable(p, e));
        }
    }
}

TEST_CASE("sigma stable is the least stable point") {
    for (i64 p : {3, 5, 7}) {
        for (i64 e = 1; e <= 3; ++e) {
            OmegaLevel lv{p, e};
            i64 sigma = sigma_stable(p, e);
            i64 pe = ipow(p, e);
            for (i64 y = sigma; y <= sigma + 2 * pe; ++y) {
                INFO("p=" << p << " e=" << e << " y=" << y);
                REQUIRE(omega_contains(lv, y));
            }
            if (sigma > 0) REQUIRE_FALSE(omega_contains(lv, sigma - 1));
        }
    }
}
