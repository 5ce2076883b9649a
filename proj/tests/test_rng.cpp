#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "projlab/rng.hpp"

using namespace projlab;

TEST_CASE("identical stream descriptors give bit-identical sequences") {
    Rng a({42, 3});
    Rng b({42, 3});
    for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());

    const Matrix u1 = haar_unitary(16, {42, 3});
    const Matrix u2 = haar_unitary(16, {42, 3});
    CHECK((u1 - u2).norm() == 0.0);
}

TEST_CASE("streams are independent of consumption order") {
    // consuming stream 0 must not change what stream 1 produces
    std::vector<std::uint64_t> direct;
    {
        Rng r({42, 1});
        for (int i = 0; i < 16; ++i) direct.push_back(r.next_u64());
    }
    {
        Rng waste({42, 0});
        for (int i = 0; i < 1000; ++i) waste.next_u64();
        Rng r(RngStream{42, 0}.derive(1));
        for (int i = 0; i < 16; ++i) CHECK(r.next_u64() == direct[i]);
    }
    Rng r0({42, 0});
    Rng r1({42, 1});
    CHECK(r0.next_u64() != r1.next_u64());
}

TEST_CASE("gaussian draws have the standard moments") {
    Rng rng({7, 0});
    const int n = 100'000;
    double mean = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.gaussian();
        mean += x;
        sq += x * x;
    }
    mean /= n;
    sq /= n;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sq - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("1x1 haar unitary is a phase") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        const Matrix u = haar_unitary(1, {5, i});
        CHECK(std::abs(std::abs(u(0, 0)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("haar unitaries satisfy the unitarity residual bound") {
    for (int n : {4, 32, 128}) {
        const Matrix u = haar_unitary(n, {11, static_cast<std::uint64_t>(n)});
        CHECK(unitary_residual(u) <= 1e-10);
        CHECK(is_unitary(u, 1e-10));
    }
}

TEST_CASE("haar_unitary rejects dimension zero") {
    CHECK_THROWS_AS(haar_unitary(0, {1, 0}), dimension_error);
}

TEST_CASE("E |tr U|^2 = 1 over Haar samples") {
    const int samples = 10'000;
    double mean = 0.0, sq = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Matrix u = haar_unitary(3, {2024, static_cast<std::uint64_t>(i)});
        const double v = std::norm(u.trace());
        mean += v;
        sq += v * v;
    }
    mean /= samples;
    sq /= samples;
    const double se = std::sqrt((sq - mean * mean) / samples);
    CHECK(std::abs(mean - 1.0) <= 3.0 * se);
}

TEST_CASE("left multiplication by a fixed unitary preserves first moments") {
    const Matrix w = haar_unitary(3, {999, 0});
    const int samples = 10'000;
    double m_u = 0.0, m_wu = 0.0, s_u = 0.0, s_wu = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Matrix u = haar_unitary(3, {31337, static_cast<std::uint64_t>(i)});
        const double a = (u.trace()).real();
        const double b = ((w * u).trace()).real();
        m_u += a;
        m_wu += b;
        s_u += a * a;
        s_wu += b * b;
    }
    m_u /= samples;
    m_wu /= samples;
    const double se = std::sqrt((s_u / samples - m_u * m_u) / samples +
                                (s_wu / samples - m_wu * m_wu) / samples);
    CHECK(std::abs(m_u - m_wu) <= 3.0 * se);
}
