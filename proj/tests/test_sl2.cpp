#include <doctest.h>

#include "oracles.hpp"
#include "sympchar/decomp_matrices.hpp"
#include "sympchar/sl2.hpp"

using namespace sympchar;
using namespace sympchar::sl2;

TEST_SUITE("sl2") {

TEST_CASE("restricted weights are simple")
{
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t r = 0; r < p; ++r) {
            CHECK(sl2_weyl_factors(r, p) == std::vector<std::int64_t>{r});
            CHECK(sl2_simple_char(r, p) == std::map<std::int64_t, std::int64_t>{{r, 1}});
        }
    CHECK(sl2_weyl_factors(2, 2) == std::vector<std::int64_t>{2, 0});
    for (std::int64_t p : {2, 3, 5, 7})
        CHECK(sl2_simple_char(p, p) == std::map<std::int64_t, std::int64_t>{{p, 1}, {p - 2, -1}});
}

TEST_CASE("composition factors agree with Winter's digit equation")
{
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t r = 0; r <= 150; ++r) {
            std::vector<std::int64_t> expected;
            for (std::int64_t s = r; s >= 0; --s)
                if (oracle::winter_factor(r, s, p))
                    expected.push_back(s);
            INFO("p=" << p << " r=" << r);
            REQUIRE(sl2_weyl_factors(r, p) == expected);
        }
}

TEST_CASE("simple characters have Lucas weight multiplicities")
{
    for (std::int64_t p : {2, 3, 5}) {
        const std::int64_t limit = ipow(p, p == 5 ? 3 : 4) - 2;
        for (std::int64_t r = 0; r <= limit; ++r) {
            const auto w = weight_vector(sl2_simple_char(r, p), r);
            REQUIRE(w == lucas_weight_vector(r, p));
        }
    }
    // Lucas vector against Pascal
    for (std::int64_t r = 0; r <= 40; ++r) {
        const auto v = lucas_weight_vector(r, 3);
        for (std::int64_t k = 0; k <= r; ++k)
            REQUIRE(v[k] == (oracle::pascal(r, k) % 3 != 0 ? 1 : 0));
    }
}

TEST_CASE("decomposition matrix")
{
    const auto m = sl2_decomp_matrix(3, 2);
    CHECK(m.entries == decomp::build_direct(3, 2, decomp::MatrixKind::B).entries);
    CHECK(decomp::is_identity(sl2_decomp_matrix(2, 3).entries));
    for (std::int64_t p : {2, 3, 5})
        for (int e = 1; e <= (p == 5 ? 3 : 4); ++e) {
            const int n = static_cast<int>(ipow(p, e)) - 1;
            const auto d = sl2_decomp_matrix(n, p);
            for (int r = 1; r <= n; ++r)
                for (int s = 1; s <= n; ++s)
                    REQUIRE(d.at(r, s) == (oracle::winter_factor(r - 1, s - 1, p) ? 1 : 0));
            REQUIRE(d.entries == decomp::build_direct(n, p, decomp::MatrixKind::B).entries);
            REQUIRE(decomp::is_identity(decomp::sparse_product(d.entries, decomp::build_direct(n, p, decomp::MatrixKind::A).entries)));
        }
    CHECK_THROWS_AS(sl2_decomp_matrix(5, 2), std::invalid_argument);
}

}
