#include "doctest.h"
#include "helpers.hpp"
#include "sfspin/ion.hpp"

using namespace sfspin;
using namespace testing_support;

TEST_CASE("ionization energy")
{
    // series k^2/2 + k^4/(8c^2) + k^6/(16c^4) of c^2 - sqrt(c^4 - c^2 k^2)
    const double k = 1.0;
    const double series = k * k / 2 + std::pow(k, 4) / (8 * c * c) + std::pow(k, 6) / (16 * std::pow(c, 4));
    const IonSpecies h = make_ion(1.0);
    CHECK(h.Ip == doctest::Approx(series).epsilon(1e-14));
    CHECK(h.Ip == doctest::Approx(0.50000666).epsilon(1e-8));

    const IonSpecies tiny = make_ion(1e-4);
    CHECK(tiny.Ip / (0.5e-8) == doctest::Approx(1.0).epsilon(1e-12));

    const IonSpecies u = make_ion(90.0);
    CHECK(u.Ip > 90.0 * 90.0 / 2);
    const long double cl = 137.035999084L;
    const long double direct = cl * cl - std::sqrt(cl * cl * cl * cl - cl * cl * 8100.0L);
    CHECK(u.Ip == doctest::Approx(double(direct)).epsilon(1e-12));
    CHECK(u.eps0 == doctest::Approx(c * c - u.Ip));
    CHECK(u.Ea == doctest::Approx(std::pow(2 * u.Ip, 1.5)));
}

TEST_CASE("derived constants are consistent")
{
    for (double k = 0.5; k < 137.0; k += 3.7) {
        const IonSpecies i = make_ion(k);
        CHECK(std::abs(i.rho * i.rho - 2 * i.Ip / (c * c)) < 1e-14);
        CHECK(std::abs(i.delta - (1 - i.rho * i.rho / 3)) < 1e-14);
        CHECK(i.rho > 0);
        CHECK(i.rho < std::sqrt(2.0));
        CHECK(i.delta > 1.0 / 3);
        CHECK(i.delta <= 1.0);
    }
}

TEST_CASE("monotone in the charge")
{
    IonSpecies prev = make_ion(0.01);
    for (double k = 0.02; k < 137.03; k += 0.37) {
        const IonSpecies i = make_ion(k);
        CHECK(i.Ip > prev.Ip);
        CHECK(i.rho > prev.rho);
        CHECK(i.Ea > prev.Ea);
        prev = i;
    }
}

TEST_CASE("charge validation and Keldysh parameter")
{
    CHECK_THROWS_AS(make_ion(0.0), DomainError);
    CHECK_THROWS_AS(make_ion(-1.0), DomainError);
    CHECK_THROWS_AS(make_ion(c), DomainError);
    CHECK_THROWS_AS(make_ion(200.0), DomainError);
    const IonSpecies i = make_ion(20.0);
    const auto L = make_laser(10.0, 0.05, 1.0);
    CHECK(keldysh_gamma(i, L) == doctest::Approx(std::sqrt(2 * i.Ip) * 0.05 / 10.0));
}
