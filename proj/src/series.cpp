#include "qhol/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace qhol {

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int p_valuation(Int n, const Int& p) {
    if (n == 0)
        throw std::invalid_argument("p_valuation of zero");
    if (n < 0)
        n = -n;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Int binomial(const Int& n, long k) {
    if (k < 0 || n < 0)
        throw std::invalid_argument("binomial requires nonnegative arguments");
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - (k - i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

std::vector<long> odd_primes_up_to(long bound) {
    std::vector<long> primes;
    for (long p = 3; p <= bound; p += 2)
        if (is_prime(Int(p)))
            primes.push_back(p);
    return primes;
}

TruncatedSeries::TruncatedSeries(int cap) : cap_(cap) {
    if (cap < 0)
        throw std::invalid_argument("series cap must be nonnegative");
    coeffs_.assign(static_cast<size_t>(cap) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::constant(const Int& value, int cap) {
    TruncatedSeries s(cap);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Int& value, int degree, int cap) {
    TruncatedSeries s(cap);
    s.set(degree, value);
    return s;
}

const Int& TruncatedSeries::at(int degree) const {
    if (degree < 0 || degree > cap_)
        throw std::out_of_range(
            fmt::format("series coefficient at degree {} requested, cap is {}", degree, cap_));
    return coeffs_[static_cast<size_t>(degree)];
}

void TruncatedSeries::set(int degree, Int value) {
    if (degree < 0 || degree > cap_)
        throw std::out_of_range(
            fmt::format("series coefficient at degree {} set, cap is {}", degree, cap_));
    coeffs_[static_cast<size_t>(degree)] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(cap_, rhs.cap_));
    for (int d = 0; d <= out.cap_; ++d)
        out.coeffs_[d] = at(d) + rhs.at(d);
    return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(cap_, rhs.cap_));
    for (int d = 0; d <= out.cap_; ++d)
        out.coeffs_[d] = at(d) - rhs.at(d);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    TruncatedSeries out(std::min(cap_, rhs.cap_));
    for (int i = 0; i <= out.cap_; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= out.cap_; ++j) {
            if (rhs.coeffs_[j] == 0)
                continue;
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Int& c0 = coeffs_[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument(fmt::format(
            "series inverse requires constant term +1 or -1, got {}", c0.str()));
    TruncatedSeries out(cap_);
    out.coeffs_[0] = c0;  // 1/c0 == c0 for units of Z
    for (int d = 1; d <= cap_; ++d) {
        Int acc = 0;
        for (int i = 1; i <= d; ++i)
            acc += coeffs_[i] * out.coeffs_[d - i];
        out.coeffs_[d] = -c0 * acc;
    }
    return out;
}

TruncatedSeries one_minus_power(int step, int cap) {
    if (step < 1)
        throw std::invalid_argument("one_minus_power requires step >= 1");
    TruncatedSeries s = TruncatedSeries::constant(1, cap);
    if (step <= cap)
        s.set(step, -1);
    return s;
}

TruncatedSeries partition_series(int parts_max, int cap) {
    if (parts_max < 0)
        throw std::invalid_argument("partition_series requires parts_max >= 0");
    TruncatedSeries s = TruncatedSeries::constant(1, cap);
    for (int i = 1; i <= parts_max; ++i)
        s = s * one_minus_power(i, cap).inverse();
    return s;
}

Int partition_count(int parts_max, int total) {
    if (parts_max < 1)
        throw std::invalid_argument("partition_count requires parts_max >= 1");
    if (total < 0)
        throw std::invalid_argument("partition_count requires total >= 0");
    return partition_series(parts_max, total).at(total);
}

TruncatedSeries symmetric_power(const TruncatedSeries& f, int m) {
    if (m < 1)
        throw std::invalid_argument("symmetric_power requires m >= 1");
    const int cap = f.cap();
    for (int d = 0; d <= cap; ++d)
        if (f.at(d) < 0)
            throw std::invalid_argument(fmt::format(
                "symmetric_power requires nonnegative coefficients; degree {} is {}",
                d, f.at(d).str()));

    // acc[j] = coefficient of z^j, a truncated series in t.
    std::vector<TruncatedSeries> acc;
    acc.reserve(static_cast<size_t>(m) + 1);
    acc.emplace_back(TruncatedSeries::constant(1, cap));
    for (int j = 1; j <= m; ++j)
        acc.emplace_back(TruncatedSeries(cap));

    for (int d = 0; d <= cap; ++d) {
        const Int& a_d = f.at(d);
        if (a_d == 0)
            continue;
        // (1 - z t^d)^(-a_d) = sum_j binom(a_d - 1 + j, j) z^j t^(d j)
        std::vector<TruncatedSeries> next(static_cast<size_t>(m) + 1, TruncatedSeries(cap));
        for (int j = 0; j <= m; ++j) {
            if (d > 0 && d * j > cap)
                break;
            const TruncatedSeries factor =
                TruncatedSeries::monomial(binomial(a_d - 1 + j, j), d * j, cap);
            for (int i = 0; i + j <= m; ++i)
                next[i + j] = next[i + j] + acc[i] * factor;
        }
        acc = std::move(next);
    }
    return acc[static_cast<size_t>(m)];
}

}  // namespace qhol
