// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

#include <doctest.h>

#include <antilim/interpolation.hpp>

#include <cmath>
#include <vector>

using namespace antilim;

TEST_CASE("richardson: exact for polynomials in the interpolation points")
{
	const double limit = 4.0;
	const std::vector<double> c = { 1.0, -2.0, 0.5, 3.0 };
	for (long k = 1; k <= 4; ++k)
	{
		RichardsonExtrapolation<double> rich;
		Estimate<double> est;
		for (long n = 0; n <= k; ++n)
		{
			const double x = 1.0 / double(n + 1);
			double s = limit;
			for (long j = 0; j < k; ++j)
				s += c[static_cast<std::size_t>(j)] * ipow(x, j + 1);
			est = rich.next(s, x);
		}
		CHECK(est.k == k);
		CHECK(est.n == 0);
		CHECK(std::abs(est.value - limit) <= 1e-10 * limit);
	}
}

TEST_CASE("richardson: nine digits of the quadratic zeta value from sixteen sums")
{
	const double limit = 1.6449340668482264;
	RichardsonExtrapolation<double> rich;
	Estimate<double> est;
	double sn = 0.0;
	for (long n = 0; n <= 15; ++n)
	{
		sn += 1.0 / double((n + 1) * (n + 1));
		est = rich.next(sn, 1.0 / double(n + 1));
	}
	CHECK(est.valid);
	CHECK(std::abs(est.value - limit) < 1e-9);
	CHECK(std::abs(sn - limit) > 1e-2);
}

TEST_CASE("rho: exact for ratios of linear and quadratic functions of x")
{
	// degree (1,1): three elements determine the limit x -> infinity
	WynnRho<double> r2;
	Estimate<double> est;
	for (long n = 0; n <= 2; ++n)
	{
		const double x = double(n + 1);
		est = r2.next((4.0 * x + 3.0) / (x + 2.0), x);
	}
	CHECK(est.k == 2);
	CHECK(std::abs(est.value - 4.0) <= 1e-12);

	// degree (2,2): five elements
	WynnRho<double> r4;
	for (long n = 0; n <= 4; ++n)
	{
		const double x = double(n + 1);
		est = r4.next((4.0 * x * x + 3.0 * x - 1.0) / (x * x + 2.0 * x + 5.0), x);
	}
	CHECK(est.k == 4);
	CHECK(std::abs(est.value - 4.0) <= 1e-12);
}

TEST_CASE("rho: handles logarithmic convergence that defeats the epsilon algorithm")
{
	const double limit = 1.6449340668482264;
	WynnRho<double> rho;
	Estimate<double> est;
	double sn = 0.0;
	for (long n = 0; n <= 15; ++n)
	{
		sn += 1.0 / double((n + 1) * (n + 1));
		est = rho.next(sn, double(n + 1));
	}
	CHECK(est.valid);
	CHECK(std::abs(est.value - limit) < 1e-10);
}

TEST_CASE("iterated rho2: standard weights match explicit linear points")
{
	IteratedRho2<double> wstd(Rho2Kind::standard);
	IteratedRho2<double> wpts(Rho2Kind::points);
	Estimate<double> es, ep;
	double sn = 0.0;
	for (long n = 0; n <= 15; ++n)
	{
		sn += 1.0 / double((n + 1) * (n + 1));
		es = wstd.next(sn);
		ep = wpts.next(sn, double(n + 1));
	}
	CHECK(es.k == 7);
	CHECK(ep.value == doctest::Approx(es.value).epsilon(1e-12));
	CHECK(std::abs(es.value - 1.6449340668482264) < 1e-9);
}

TEST_CASE("iterated rho2: first pass equals the second rho column")
{
	const std::vector<double> s = { 1.0, 1.7, 2.05, 2.24 };
	WynnRho<double> rho;
	IteratedRho2<double> w(Rho2Kind::points);
	Estimate<double> er, ew;
	for (long n = 0; n < 3; ++n)
	{
		const double x = 1.0 + double(n);
		er = rho.next(s[static_cast<std::size_t>(n)], x);
		ew = w.next(s[static_cast<std::size_t>(n)], x);
	}
	CHECK(er.k == 2);
	CHECK(ew.k == 1);
	CHECK(ew.value == doctest::Approx(er.value).epsilon(1e-13));
}

TEST_CASE("sidi: exact for the explicit-remainder polynomial model")
{
	const double limit = 4.0;
	for (long k = 1; k <= 3; ++k)
	{
		SidiR<double> sr;
		Estimate<double> est;
		for (long n = 0; n <= k; ++n)
		{
			const double x = 1.0 / double(n + 1);
			const double omega = (n % 2 ? -1.0 : 1.0) / double(n + 1);
			double s = limit;
			double p = 0.0;
			const double c[] = { 1.0, -0.5, 2.0 };
			for (long j = 0; j < k; ++j)
				p += c[j] * ipow(x, j);
			s += omega * p;
			est = sr.next(s, x, omega);
		}
		CHECK(est.k == k);
		CHECK(std::abs(est.value - limit) <= 1e-10 * limit);
	}
}

TEST_CASE("sidi: remainder estimate equal to the point reproduces polynomial extrapolation")
{
	RichardsonExtrapolation<double> rich;
	SidiR<double> sr;
	Estimate<double> er, es;
	double sn = 0.0;
	for (long n = 0; n <= 9; ++n)
	{
		sn += 1.0 / double((n + 1) * (n + 1));
		const double x = 1.0 / double(n + 1);
		er = rich.next(sn, x);
		es = sr.next(sn, x, x);
	}
	CHECK(er.k == es.k);
	CHECK(es.value == doctest::Approx(er.value).epsilon(1e-12));
}

TEST_CASE("point driver: index families")
{
	PointFamily<double> fam;
	fam.kind = PointFamilyKind::reciprocal;
	fam.beta = 2.0;
	PointDriver<double> d1(fam);
	auto it = d1.push(0, 10.0);
	REQUIRE(it.has_value());
	CHECK(*it->pt.x == doctest::Approx(0.5));
	it = d1.push(1, 11.0);
	CHECK(*it->pt.x == doctest::Approx(1.0 / 3.0));
	CHECK(d1.lag() == 0);

	fam.kind = PointFamilyKind::power;
	fam.beta = 1.0;
	fam.alpha = 0.5;
	PointDriver<double> d2(fam);
	it = d2.push(0, 0.0);
	it = d2.push(1, 0.0);
	CHECK(*it->pt.x == doctest::Approx(std::sqrt(2.0)));

	fam.kind = PointFamilyKind::reciprocal_power;
	PointDriver<double> d3(fam);
	it = d3.push(0, 0.0);
	it = d3.push(1, 0.0);
	CHECK(*it->pt.x == doctest::Approx(1.0 / std::sqrt(2.0)));

	fam.kind = PointFamilyKind::linear;
	fam.beta = 3.0;
	PointDriver<double> d4(fam);
	it = d4.push(0, 0.0);
	CHECK(*it->pt.x == doctest::Approx(3.0));
}

TEST_CASE("point driver: difference family buffers one element without a term source")
{
	PointFamily<double> fam;
	fam.kind = PointFamilyKind::gbw;
	PointDriver<double> drv(fam);
	CHECK(drv.lag() == 1);

	auto it = drv.push(0, 1.0);
	CHECK(!it.has_value());
	it = drv.push(1, 1.5);
	REQUIRE(it.has_value());
	CHECK(it->pt.n == 0);
	CHECK(it->pt.s == 1.0);
	CHECK(*it->pt.x == doctest::Approx(0.5));

	// with a term source the lag disappears
	PointDriver<double> drv2(fam, [](long n) { return ipow(0.5, n); });
	CHECK(drv2.lag() == 0);
	it = drv2.push(0, 1.0);
	REQUIRE(it.has_value());
	CHECK(it->pt.n == 0);
	CHECK(*it->pt.x == doctest::Approx(0.5));
}

TEST_CASE("point driver: scaled-difference families substitute the leading element")
{
	PointFamily<double> fam;
	fam.kind = PointFamilyKind::levin_like;
	fam.beta = 2.0;
	PointDriver<double> drv(fam);
	auto it = drv.push(0, 3.0);
	REQUIRE(it.has_value());
	CHECK(*it->pt.x == doctest::Approx(6.0));   // beta * s_0
	it = drv.push(1, 4.0);
	CHECK(*it->pt.x == doctest::Approx(3.0));   // (beta + 1)(s_1 - s_0)

	fam.kind = PointFamilyKind::reciprocal_levin_like;
	PointDriver<double> drv2(fam);
	it = drv2.push(0, 3.0);
	CHECK(*it->pt.x == doctest::Approx(1.0 / 6.0));
	CHECK(!it->taint);
	// a vanishing difference taints the generated point instead of dividing by zero
	it = drv2.push(1, 3.0);
	REQUIRE(it.has_value());
	CHECK(it->taint);
	CHECK(std::isfinite(*it->pt.x));
}

TEST_CASE("point driver: explicit list and validation")
{
	PointFamily<double> fam;
	fam.kind = PointFamilyKind::explicit_points;
	fam.points = { 0.5, 0.25 };
	PointDriver<double> drv(fam);
	auto it = drv.push(0, 1.0);
	CHECK(*it->pt.x == 0.5);
	it = drv.push(1, 2.0);
	CHECK(*it->pt.x == 0.25);
	CHECK_THROWS_AS(drv.push(2, 3.0), std::invalid_argument);

	PointFamily<double> bad;
	bad.beta = -1.0;
	auto makeBad = [&]() { PointDriver<double> d(bad); };
	CHECK_THROWS_AS(makeBad(), std::invalid_argument);
}

TEST_CASE("exponent search: recovers the true decay power of a synthetic model")
{
	// s_n = s + c (1+n)^(-1/2): extrapolation along x_n = (1+n)^(-alpha) is
	// exact only for alpha = 1/2, so the self-consistency score picks it
	std::vector<double> s;
	for (long n = 0; n <= 12; ++n)
		s.push_back(4.0 + 2.0 * std::pow(1.0 + double(n), -0.5));
	const double alpha = beleznay_alpha<double>(s, 1.0, { 0.25, 0.5, 1.0 });
	CHECK(alpha == 0.5);
}

TEST_CASE("degenerate interpolation points taint rather than overflow")
{
	WynnRho<double> rho;
	Estimate<double> est;
	for (long n = 0; n <= 3; ++n)
		est = rho.next(double(n), 1.0);   // all x equal: denominators vanish
	CHECK(std::isfinite(est.value));
	CHECK(!est.valid);

	RichardsonExtrapolation<double> rich;
	rich.next(1.0, 0.5);
	const auto er = rich.next(2.0, 0.5);
	CHECK(std::isfinite(er.value));
	CHECK(!er.valid);
}

TEST_CASE("interpolation streaming interface validates its input")
{
	RichardsonExtrapolation<double> rich;
	SequencePoint<double> noX{ 0, 1.0, {}, {} };
	CHECK_THROWS_AS(rich.next(noX), std::invalid_argument);

	SequencePoint<double> ok{ 0, 1.0, 0.5, {} };
	CHECK_NOTHROW(rich.next(ok));
	SequencePoint<double> wrongOrder{ 5, 1.0, 0.25, {} };
	CHECK_THROWS_AS(rich.next(wrongOrder), std::invalid_argument);

	SidiR<double> sr;
	SequencePoint<double> noOmega{ 0, 1.0, 0.5, {} };
	CHECK_THROWS_AS(sr.next(noOmega), std::invalid_argument);
}
