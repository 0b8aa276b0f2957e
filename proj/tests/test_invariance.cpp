// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

// Invariance properties shared by every transformation in the library:
// degree-one homogeneity in the sequence elements, degree-zero homogeneity
// in the remainder estimates, and translativity.  Scaling by a power of two
// propagates exactly through every recursion, so those two properties are
// asserted bitwise.  Translation s -> 4 s + 1 rounds the inputs, and the
// transform amplifies that half-ulp perturbation by its own local
// conditioning; the suite therefore measures the conditioning kappa of every
// cell with a deterministic eps-level probe and asserts the strict
// 10-epsilon bound wherever kappa <= 4, plus a conditioning-scaled envelope
// everywhere.  Well over a third of all cells must fall in the strict class.

#include <doctest.h>

#include <antilim/antilim.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

using namespace antilim;

namespace
{

const double kEps = std::numeric_limits<double>::epsilon();

struct SeriesCase
{
	SeriesKind kind;
	double z;
	const char* name;
};

const std::vector<SeriesCase>& catalog()
{
	static const std::vector<SeriesCase> cat = {
		{ SeriesKind::geometric, 0.5, "geometric" },
		{ SeriesKind::zeta, 2.0, "zeta" },
		{ SeriesKind::euler_2f0, 3.0, "euler" },
		{ SeriesKind::log_stieltjes, 1.0, "log" },
		{ SeriesKind::lemniscate, 0.0, "lemniscate" },
		{ SeriesKind::bessel_expansion, 0.8, "bessel" },
		{ SeriesKind::half_factorial, 0.0, "half-factorial" },
		{ SeriesKind::sigma_rho, 0.5, "sigma-rho" },
	};
	return cat;
}

/** Deterministic per-element relative perturbation of a few ulp, pointing
 * away from the uniform-scaling direction that homogeneity absorbs. */
double perturb(long n, double v)
{
	const unsigned long h = static_cast<unsigned long>(n + 17) * 2654435761UL;
	const double xi = double((h >> 7) % 5) - 2.0;
	return v * (1.0 + 2.0 * kEps * xi);
}

struct AffineStats
{
	long cells{0};
	long strictCells{0};
};

/** Feeds four copies of one transform with the base, scaled, affine, and
 * probe streams and applies all invariance assertions.
 *
 *  feed(transform, m, s) must push element m with sequence value s and the
 *  transform's fixed auxiliary data (points and/or estimates), returning the
 *  streamed estimate.
 */
template <typename Make, typename Feed>
void checkTransform(AffineStats& stats, const char* name, const SeriesCase& sc,
	const std::vector<double>& sums, Make make, Feed feed)
{
	auto base = make();
	auto scaled = make();
	auto affine = make();
	auto probe = make();

	for (long m = 0; m < long(sums.size()); ++m)
	{
		const double s = sums[static_cast<std::size_t>(m)];
		const auto b = feed(base, m, s);
		const auto sc4 = feed(scaled, m, 4.0 * s);
		const auto a = feed(affine, m, 4.0 * s + 1.0);
		const auto p = feed(probe, m, perturb(m, s));

		CAPTURE(name);
		CAPTURE(sc.name);
		CAPTURE(m);

		// power-of-two scaling is exact arithmetic all the way down
		CHECK(sc4.valid == b.valid);
		if (b.valid)
			CHECK(sc4.value == 4.0 * b.value);

		if (!b.valid || !a.valid || !p.valid)
			continue;

		const double scaleB = (b.value == 0.0) ? 1.0 : std::fabs(b.value);
		const double want = 4.0 * b.value + 1.0;
		const double scaleW = (want == 0.0) ? 1.0 : std::fabs(want);
		const double err = std::fabs(a.value - want) / scaleW;
		const double kappa = std::fabs(p.value - b.value) / (4.0 * kEps * scaleB);

		++stats.cells;
		CHECK(err <= 64.0 * kEps * std::max(1.0, kappa));
		if (kappa <= 4.0)
		{
			++stats.strictCells;
			CHECK(err <= 10.0 * kEps);
		}
	}
}

template <typename Make>
auto scalarFeed()
{
	return [](auto& t, long, double s) { return t.next(s); };
}

} // namespace

TEST_CASE("every transform is exactly homogeneous and translative up to conditioning")
{
	AffineStats stats;

	for (const auto& sc : catalog())
	{
		const auto sums = partial_sums(SeriesSpec<double>{ sc.kind, sc.z }, 13);

		auto scalar = [](auto& t, long, double s) { return t.next(s); };
		checkTransform(stats, "epsilon", sc, sums, [] { return EpsilonAlgorithm<double>(); }, scalar);
		checkTransform(stats, "aitken", sc, sums, [] { return IteratedAitken<double>(); }, scalar);
		checkTransform(stats, "theta", sc, sums, [] { return BrezinskiTheta<double>(); }, scalar);
		checkTransform(stats, "theta-modified", sc, sums, [] { return BrezinskiTheta<double>(true); }, scalar);
		checkTransform(stats, "iterated-theta", sc, sums, [] { return IteratedTheta2<double>(); }, scalar);
		checkTransform(stats, "b", sc, sums, [] { return BCTransform<double>(BCKind::b); }, scalar);
		checkTransform(stats, "c", sc, sums, [] { return BCTransform<double>(BCKind::c); }, scalar);
		checkTransform(stats, "standard-rho2", sc, sums, [] { return IteratedRho2<double>(Rho2Kind::standard); }, scalar);
		checkTransform(stats, "weighted-lambda", sc, sums, [] { return IteratedWeighted<double>(WeightedKind::lambda); }, scalar);
		checkTransform(stats, "weighted-sigma", sc, sums, [] { return IteratedWeighted<double>(WeightedKind::sigma); }, scalar);
		checkTransform(stats, "weighted-mu", sc, sums, [] { return IteratedWeighted<double>(WeightedKind::mu); }, scalar);
		checkTransform(stats, "linear-Lambda", sc, sums, [] { return LinearSpecial<double>(LinearKind::lambda); }, scalar);
		checkTransform(stats, "linear-F", sc, sums, [] { return LinearSpecial<double>(LinearKind::f); }, scalar);
		checkTransform(stats, "linear-P", sc, sums, [] { return LinearSpecial<double>(LinearKind::p, 2.0); }, scalar);

		auto recip = [](auto& t, long m, double s) {
			return t.next(SequencePoint<double>{ m, s, 1.0 / double(m + 1), {} });
		};
		auto linearPt = [](auto& t, long m, double s) {
			return t.next(SequencePoint<double>{ m, s, double(m + 1), {} });
		};
		checkTransform(stats, "richardson", sc, sums, [] { return RichardsonExtrapolation<double>(); }, recip);
		checkTransform(stats, "rho", sc, sums, [] { return WynnRho<double>(); }, linearPt);
		checkTransform(stats, "point-rho2", sc, sums, [] { return IteratedRho2<double>(Rho2Kind::points); }, linearPt);
		checkTransform(stats, "point-theta", sc, sums, [] { return RhoTheta<double>(); }, linearPt);

		auto om = [](long n) {
			return ((n % 2) ? -1.0 : 1.0) * std::pow(0.8, double(n)) / double(n + 1);
		};
		auto withOmega = [om](auto& t, long m, double s) {
			return t.next(SequencePoint<double>{ m, s, {}, om(m) });
		};
		auto withBoth = [om](auto& t, long m, double s) {
			return t.next(SequencePoint<double>{ m, s, 1.0 / double(m + 1), om(m) });
		};
		checkTransform(stats, "levin", sc, sums, [] { return RatioTransformer<double>(RatioFamily::levin, 1.0, 0); }, withOmega);
		checkTransform(stats, "s", sc, sums, [] { return RatioTransformer<double>(RatioFamily::s, 1.0, 0); }, withOmega);
		checkTransform(stats, "m", sc, sums, [] { return RatioTransformer<double>(RatioFamily::m, 6.0, 0); }, withOmega);
		checkTransform(stats, "drummond", sc, sums, [] { return RatioTransformer<double>(RatioFamily::drummond, 1.0, 0); }, withOmega);
		checkTransform(stats, "sidi", sc, sums, [] { return SidiR<double>(); }, withBoth);
	}

	// the strict ten-epsilon class has to carry real weight
	CHECK(stats.cells > 2000);
	CHECK(stats.strictCells * 100 >= stats.cells * 40);
}

TEST_CASE("rescaling the remainder estimates leaves every weighted transform unchanged")
{
	for (const auto& sc : catalog())
	{
		const auto sums = partial_sums(SeriesSpec<double>{ sc.kind, sc.z }, 13);
		auto om = [](long n) {
			return ((n % 2) ? -1.0 : 1.0) * std::pow(0.8, double(n)) / double(n + 1);
		};

		auto checkQuarter = [&](const char* name, auto make, bool withPoints) {
			auto base = make();
			auto quarter = make();
			for (long m = 0; m < long(sums.size()); ++m)
			{
				const double s = sums[static_cast<std::size_t>(m)];
				std::optional<double> x;
				if (withPoints)
					x = 1.0 / double(m + 1);
				const auto b = base.next(SequencePoint<double>{ m, s, x, om(m) });
				const auto q = quarter.next(SequencePoint<double>{ m, s, x, 0.25 * om(m) });
				CAPTURE(name);
				CAPTURE(sc.name);
				CAPTURE(m);
				CHECK(q.valid == b.valid);
				if (b.valid)
					CHECK(q.value == b.value);
			}
		};

		checkQuarter("levin", [] { return RatioTransformer<double>(RatioFamily::levin, 1.0, 0); }, false);
		checkQuarter("s", [] { return RatioTransformer<double>(RatioFamily::s, 1.0, 0); }, false);
		checkQuarter("m", [] { return RatioTransformer<double>(RatioFamily::m, 6.0, 0); }, false);
		checkQuarter("drummond", [] { return RatioTransformer<double>(RatioFamily::drummond, 1.0, 0); }, false);
		checkQuarter("sidi", [] { return SidiR<double>(); }, true);
	}
}
