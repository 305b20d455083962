#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anbim/ratmat.hpp"

using namespace anbim;

namespace {

RatMat from_rows(const std::vector<std::vector<int>>& rows) {
    RatMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("rref and rank on a singular matrix") {
    RatMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(m.rank() == 2);

    RatMat r = m;
    std::vector<int> pivots = r.rref();
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);
    // pivot entries normalized to 1
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(1, 1) == 1);
    CHECK(r.at(0, 1) == 0);
}

TEST_CASE("kernel basis spans the null space") {
    RatMat m = from_rows({{1, 2, 3}, {2, 4, 6}});
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        auto img = m.apply(v);
        for (const auto& x : img) CHECK(x == 0);
    }
}

TEST_CASE("solve finds a particular solution or reports none") {
    RatMat m = from_rows({{2, 0}, {0, 3}});
    auto s = m.solve({Rat(1), Rat(1)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == Rat(1, 2));
    CHECK((*s)[1] == Rat(1, 3));

    RatMat sing = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(sing.solve({Rat(0), Rat(1)}).has_value());
    auto z = sing.solve({Rat(2), Rat(2)});
    REQUIRE(z.has_value());
    CHECK((*z)[0] + (*z)[1] == 2);
}

TEST_CASE("inverse round-trips") {
    RatMat m = from_rows({{1, 2}, {3, 5}});
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK(m.mul(*inv) == RatMat::identity(2));
    CHECK(inv->mul(m) == RatMat::identity(2));

    CHECK_FALSE(from_rows({{1, 2}, {2, 4}}).inverse().has_value());
}

TEST_CASE("bareiss rank matches rational rank on random small matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> val(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        IntMat a(rows, cols);
        RatMat b(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                int v = val(rng);
                a.at(r, c) = v;
                b.at(r, c) = v;
            }
        auto br = a.bareiss_rank();
        REQUIRE(br.has_value());
        CHECK(*br == b.rank());
    }
}

TEST_CASE("bareiss reports overflow instead of a wrong answer") {
    // Fraction-free elimination keeps k x k minors as entries; a diagonal of
    // 2^40 pushes the 2 x 2 minors to 2^80, well past int64.
    const std::int64_t big = std::int64_t{1} << 40;
    IntMat a(3, 3);
    for (int r = 0; r < 3; ++r) a.at(r, r) = big;
    CHECK_FALSE(a.bareiss_rank().has_value());
}

TEST_CASE("rational arithmetic is exact where doubles are not") {
    Rat x(1, 3);
    Rat sum = x + x + x;
    CHECK(sum == 1);
    CHECK(rat_is_integer(sum));
    CHECK_FALSE(rat_is_integer(x));
}
