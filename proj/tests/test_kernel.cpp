// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

#include <doctest.h>

#include <antilim/kernel.hpp>

#include <cmath>
#include <vector>

using namespace antilim;

TEST_CASE("pochhammer: rising factorial values")
{
	CHECK(pochhammer(1.0, 4) == 24.0);
	CHECK(pochhammer(-3.0, 3) == -6.0);
	CHECK(pochhammer(2.5, 0) == 1.0);   // empty product
	CHECK(pochhammer(0.0, 3) == 0.0);
	CHECK(pochhammer(0.5, 2) == doctest::Approx(0.75));
	CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("binomial: multiplicative evaluation")
{
	CHECK(binomial<double>(5, 2) == 10.0);
	CHECK(binomial<double>(10, 0) == 1.0);
	CHECK(binomial<double>(10, 10) == 1.0);
	CHECK(binomial<double>(7, 3) == 35.0);
	CHECK(binomial<double>(4, 5) == 0.0);
	CHECK(binomial<double>(4, -1) == 0.0);
	// large-ish arguments stay exact in binary64
	CHECK(binomial<double>(30, 15) == 155117520.0);
}

TEST_CASE("ipow: integer powers")
{
	CHECK(ipow(2.0, 10) == 1024.0);
	CHECK(ipow(-3.0, 3) == -27.0);
	CHECK(ipow(0.7, 0) == 1.0);
	CHECK_THROWS_AS(ipow(2.0, -2), std::invalid_argument);
}

TEST_CASE("guard_divide: plain quotients pass through unchanged")
{
	SafeguardPolicy<double> pol;
	pol.validate();

	const auto r = guard_divide(1.0, 4.0, pol);
	CHECK(r.value == 0.25);
	CHECK(!r.fired);

	const auto rneg = guard_divide(-3.0, 2.0, pol);
	CHECK(rneg.value == -1.5);
	CHECK(!rneg.fired);
}

TEST_CASE("guard_divide: tiny denominators produce sign-preserving huge")
{
	SafeguardPolicy<double> pol;

	auto r = guard_divide(2.0, 0.0, pol);
	CHECK(r.value == pol.huge);
	CHECK(r.fired);

	r = guard_divide(-2.0, 1e-320, pol);
	CHECK(r.value == -pol.huge);
	CHECK(r.fired);

	r = guard_divide(-2.0, -1e-320, pol);
	CHECK(r.value == pol.huge);
	CHECK(r.fired);

	// zero over tiny counts as positive
	r = guard_divide(0.0, 0.0, pol);
	CHECK(r.value == pol.huge);
	CHECK(r.fired);
}

TEST_CASE("guard_divide: overflowing quotients are clamped")
{
	SafeguardPolicy<double> pol;

	// denominator above tiny, but the true quotient overflows binary64
	const auto r = guard_divide(1e300, 1e-250, pol);
	CHECK(r.value == pol.huge);
	CHECK(r.fired);

	const auto rn = guard_divide(-1e300, 1e-250, pol);
	CHECK(rn.value == -pol.huge);
	CHECK(rn.fired);
}

TEST_CASE("guard_divide: result is always finite")
{
	SafeguardPolicy<double> pol;
	const double numers[] = { 0.0, 1.0, -1.0, 1e308, -1e308, 1e-308 };
	const double denoms[] = { 0.0, 1e-320, -1e-320, 1e-10, -1.0, 1e308 };
	for (double a : numers)
		for (double b : denoms)
		{
			const auto r = guard_divide(a, b, pol);
			CHECK(std::isfinite(r.value));
		}
}

TEST_CASE("safeguard policy validation")
{
	SafeguardPolicy<double> pol;
	CHECK_NOTHROW(pol.validate());

	SafeguardPolicy<double> bad1{ 1e300, -1.0 };
	CHECK_THROWS_AS(bad1.validate(), std::invalid_argument);
	SafeguardPolicy<double> bad2{ 0.5, 1e-300 };
	CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
	SafeguardPolicy<double> bad3{ 1e300, 2.0 };
	CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}

TEST_CASE("forward_difference: annihilates low-degree polynomials")
{
	// k-th differences of a polynomial of degree < k vanish identically
	for (long k = 1; k <= 6; ++k)
	{
		std::vector<double> vals;
		for (long n = 0; n <= k; ++n)
		{
			double p = 0.0;   // p(n) = sum_{d<k} (d+1) n^d
			for (long d = 0; d < k; ++d)
				p += double(d + 1) * ipow(double(n), d);
			vals.push_back(p);
		}
		CHECK(forward_difference(vals, k) == doctest::Approx(0.0).epsilon(1e-9));
	}
}

TEST_CASE("forward_difference: known values and bounds checking")
{
	// differences of n^2 at 0: delta^2 = 2
	std::vector<double> sq = { 0.0, 1.0, 4.0 };
	CHECK(forward_difference(sq, 2) == doctest::Approx(2.0));
	// differences of 2^n at 0: delta^k = 1
	std::vector<double> p2 = { 1.0, 2.0, 4.0, 8.0, 16.0 };
	for (long k = 0; k <= 4; ++k)
		CHECK(forward_difference(p2, k) == doctest::Approx(1.0));

	CHECK_THROWS_AS(forward_difference(sq, 3), std::invalid_argument);
	CHECK_THROWS_AS(forward_difference(sq, -1), std::invalid_argument);
}

TEST_CASE("precision traits: parsing and formatting round-trip")
{
	CHECK(precision<double>::parse("0.25") == 0.25);
	CHECK(precision<double>::parse("-3e4") == -30000.0);
	CHECK_THROWS_AS(precision<double>::parse("12abc"), std::invalid_argument);
	CHECK_THROWS_AS(precision<double>::parse(""), std::invalid_argument);

	const double v = 0.78625122076596;
	const std::string s = precision<double>::format(v, 17);
	CHECK(precision<double>::parse(s.c_str()) == v);

	CHECK(precision<double>::name() == std::string("binary64"));
#if defined(ANTILIM_HAS_FLOAT128)
	CHECK(binary128_available());
	const __float128 q = precision<__float128>::parse("1.25");
	CHECK(static_cast<double>(q) == 1.25);
	CHECK(precision<__float128>::name() == std::string("binary128"));
	// binary128 round-trip at 36 digits
	const __float128 w = precision<__float128>::parse("0.463625");
	const std::string t = precision<__float128>::format(w, 36);
	const __float128 w2 = precision<__float128>::parse(t.c_str());
	CHECK(static_cast<double>(num::abs(w - w2)) == 0.0);
#endif
}
