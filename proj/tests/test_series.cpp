#include <doctest.h>

#include <random>

#include "qhol/series.hpp"

using namespace qhol;

namespace {

// independent oracle: enumerate partitions of `total` with parts <= `parts_max`
long brute_force_partitions(int parts_max, int total, int largest_allowed) {
    if (total == 0)
        return 1;
    long count = 0;
    for (int part = std::min(parts_max, std::min(total, largest_allowed)); part >= 1; --part)
        count += brute_force_partitions(parts_max, total - part, part);
    return count;
}

long brute_force_partitions(int parts_max, int total) {
    return brute_force_partitions(parts_max, total, total);
}

// independent oracle for symmetric powers: count multisets of basis elements
// (dims[d] independent elements in degree d) of size m and total degree D
long multiset_count(const std::vector<long>& dims, size_t d, int m, int degree) {
    if (m == 0)
        return degree == 0 ? 1 : 0;
    if (d >= dims.size())
        return 0;
    long total = 0;
    for (int take = 0; take <= m; ++take) {
        if (static_cast<int>(d) * take > degree)
            break;
        // multisets of size `take` from dims[d] elements
        long ways = 1;
        for (int i = 1; i <= take; ++i)
            ways = ways * (dims[d] - 1 + i) / i;
        if (dims[d] == 0 && take > 0)
            ways = 0;
        total += ways * multiset_count(dims, d + 1, m - take, degree - static_cast<int>(d) * take);
    }
    return total;
}

TruncatedSeries random_series(std::mt19937& rng, int cap) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    TruncatedSeries s(cap);
    for (int d = 0; d <= cap; ++d)
        s.set(d, coeff(rng));
    return s;
}

}  // namespace

TEST_CASE("series addition and multiplication") {
    TruncatedSeries one_plus_t(4);
    one_plus_t.set(0, 1);
    one_plus_t.set(1, 1);
    const TruncatedSeries square = one_plus_t * one_plus_t;
    CHECK(square.at(0) == 1);
    CHECK(square.at(1) == 2);
    CHECK(square.at(2) == 1);
    CHECK(square.at(3) == 0);

    // (1 + t^2 + t^4 + ...)^2 counts pairs (a, b) with a + b = d
    const int cap = 24;
    const TruncatedSeries evens = one_minus_power(2, cap).inverse();
    const TruncatedSeries prod = evens * evens;
    for (int d = 0; d <= cap / 2; ++d) {
        CHECK(prod.at(2 * d) == d + 1);
        if (2 * d + 1 <= cap)
            CHECK(prod.at(2 * d + 1) == 0);
    }

    const TruncatedSeries sum = one_plus_t + TruncatedSeries(4);
    CHECK(sum == one_plus_t);
}

TEST_CASE("cap propagation and out-of-range reads") {
    TruncatedSeries a(5), b(3);
    a.set(5, 7);
    const TruncatedSeries c = a * b;
    CHECK(c.cap() == 3);
    CHECK_THROWS_AS(c.at(4), std::out_of_range);
    CHECK_THROWS_AS(a.at(6), std::out_of_range);
}

TEST_CASE("series inverse") {
    const int cap = 12;
    const TruncatedSeries geometric = one_minus_power(1, cap).inverse();
    for (int d = 0; d <= cap; ++d)
        CHECK(geometric.at(d) == 1);

    const TruncatedSeries alternating = one_minus_power(2, cap).inverse();
    TruncatedSeries one_plus_t2 = TruncatedSeries::constant(1, cap);
    one_plus_t2.set(2, 1);
    const TruncatedSeries inv = one_plus_t2.inverse();
    for (int d = 0; d <= cap; d += 2)
        CHECK(inv.at(d) == ((d / 2) % 2 == 0 ? 1 : -1));
    CHECK(inv.at(3) == 0);

    CHECK_THROWS_AS(TruncatedSeries::constant(2, 4).inverse(), std::invalid_argument);
}

TEST_CASE("series multiplication is commutative and associative") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const TruncatedSeries a = random_series(rng, 10);
        const TruncatedSeries b = random_series(rng, 10);
        const TruncatedSeries c = random_series(rng, 10);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("inverse is a two-sided inverse for unit constant terms") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries a = random_series(rng, 9);
        a.set(0, trial % 2 == 0 ? 1 : -1);
        const TruncatedSeries prod = a * a.inverse();
        CHECK(prod == TruncatedSeries::constant(1, 9));
    }
}

TEST_CASE("partition counts match brute-force enumeration") {
    for (int m = 0; m <= 12; ++m)
        CHECK(partition_count(1, m) == 1);
    CHECK(partition_count(2, 5) == brute_force_partitions(2, 5));
    CHECK(partition_count(2, 5) == 3);
    CHECK(partition_count(3, 6) == brute_force_partitions(3, 6));
    CHECK(partition_count(3, 6) == 7);
    for (int k = 1; k <= 8; ++k)
        for (int m = 0; m <= 30; ++m)
            CHECK(partition_count(k, m) == brute_force_partitions(k, m));
    CHECK_THROWS_AS(partition_count(0, 3), std::invalid_argument);
}

TEST_CASE("symmetric powers") {
    const int cap = 20;
    const TruncatedSeries evens = one_minus_power(2, cap).inverse();

    CHECK(symmetric_power(evens, 1) == evens);

    const TruncatedSeries sym2 = symmetric_power(evens, 2);
    for (int d = 0; 2 * d <= cap; ++d)
        CHECK(sym2.at(2 * d) == d / 2 + 1);

    CHECK(symmetric_power(TruncatedSeries::constant(1, 6), 2) ==
          TruncatedSeries::constant(1, 6));

    TruncatedSeries negative(4);
    negative.set(1, -1);
    CHECK_THROWS_AS(symmetric_power(negative, 2), std::invalid_argument);
}

TEST_CASE("symmetric powers match multiset enumeration") {
    // a handful of small supports, all m <= 4
    const std::vector<std::vector<long>> supports = {
        {1, 0, 1},        // 1 + t^2
        {1, 2, 0, 1},     // 1 + 2t + t^3
        {2, 1},           // 2 + t
        {0, 0, 3, 0, 1},  // 3t^2 + t^4
    };
    for (const auto& dims : supports) {
        const int cap = 16;
        TruncatedSeries f(cap);
        for (size_t d = 0; d < dims.size(); ++d)
            f.set(static_cast<int>(d), dims[d]);
        for (int m = 1; m <= 4; ++m) {
            const TruncatedSeries sym = symmetric_power(f, m);
            for (int degree = 0; degree <= cap; ++degree)
                CHECK(sym.at(degree) == multiset_count(dims, 0, m, degree));
        }
    }
}
