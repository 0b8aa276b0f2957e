// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** Test-series laboratory.
 *
 * A small catalog of infinite series whose acceleration behaviour spans the
 * interesting cases: linear convergence, logarithmic convergence, alternating
 * divergence, and everything in between.  Each catalog entry generates terms
 * and partial sums from stable recurrences, and - where a closed form or an
 * established tabulation exists - knows its own limit.
 *
 * The laboratory also generates the model sequences that the transforms in
 * this library annihilate exactly.  Those sequences drive the exactness
 * property suites: a transform that is exact by construction on its model
 * must reproduce the model's limit to rounding from a short prefix.
 */

#ifndef ANTILIM_SERIES_LAB_HPP_
#define ANTILIM_SERIES_LAB_HPP_

#include <antilim/kernel.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace antilim
{

// ---------------------------------------------------------------------------
//  special-function helper
// ---------------------------------------------------------------------------

/** Reduced Bessel function of half-integral order n + 1/2, evaluated through
 * its terminating confluent hypergeometric sum.  Positive everywhere, and
 * bounded by its value at the origin: 0 < value <= 2^n (1/2)_n.
 */
template <typename T>
T reduced_bessel(long n, T z)
{
	if (n < 0)
		throw std::invalid_argument("reduced_bessel: order must be non-negative");
	if (!(z > T(0)))
		throw std::invalid_argument("reduced_bessel: argument must be positive");

	T f = T(0), term = T(1);
	for (long j = 0; j <= n; ++j)
	{
		f += term;
		if (j < n)
			term *= ((T(j) - T(n)) / (T(j) - T(2) * T(n))) * (T(2) * z) / T(j + 1);
	}
	return ipow(T(2), n) * pochhammer(T(1) / T(2), n) * num::exp(-z) * f;
}

// ---------------------------------------------------------------------------
//  series catalog
// ---------------------------------------------------------------------------

enum class SeriesKind
{
	geometric,        // z^m                     -> 1/(1-z)
	zeta,             // (m+1)^(-z), z > 1       -> zeta(z)
	euler_2f0,        // (-1)^m m! z^(-m)        (alternating divergent)
	log_stieltjes,    // (-1)^m z^(m+1)/(m+1)    -> log(1+z)
	lemniscate,       // [(1/2)_m/m!] / (4m+1)   (logarithmic)
	bessel_expansion, // reduced-Bessel terms    -> 1/z (slow monotone)
	half_factorial,   // [(1/2)_m/m!] / (2m+2)   -> 1 (slow monotone)
	sigma_rho         // 0, then rho^(m-1)       -> 1/(1-rho), first sum empty
};

inline const char* seriesKindName(SeriesKind kind)
{
	switch (kind)
	{
		case SeriesKind::geometric: return "geometric";
		case SeriesKind::zeta: return "zeta";
		case SeriesKind::euler_2f0: return "euler_2f0";
		case SeriesKind::log_stieltjes: return "log_stieltjes";
		case SeriesKind::lemniscate: return "lemniscate";
		case SeriesKind::bessel_expansion: return "bessel_expansion";
		case SeriesKind::half_factorial: return "half_factorial";
		default: return "sigma_rho";
	}
}

inline std::optional<SeriesKind> seriesKindFromName(const std::string& name)
{
	for (SeriesKind kind : { SeriesKind::geometric, SeriesKind::zeta, SeriesKind::euler_2f0,
			SeriesKind::log_stieltjes, SeriesKind::lemniscate, SeriesKind::bessel_expansion,
			SeriesKind::half_factorial, SeriesKind::sigma_rho })
		if (name == seriesKindName(kind))
			return kind;
	return std::nullopt;
}

/** A catalog entry: the kind plus its single parameter (z, or the ratio for
 * the shifted geometric sums).  Parameter-free kinds ignore the field.
 */
template <typename T>
struct SeriesSpec
{
	SeriesKind kind{SeriesKind::geometric};
	T z{};

	void validate() const
	{
		switch (kind)
		{
			case SeriesKind::geometric:
				if (z == T(1))
					throw std::invalid_argument("geometric series: ratio one never sums");
				break;
			case SeriesKind::zeta:
				if (!(z > T(1)))
					throw std::invalid_argument("zeta series: exponent must exceed one");
				break;
			case SeriesKind::euler_2f0:
				if (!(z > T(0)))
					throw std::invalid_argument("euler series: argument must be positive");
				break;
			case SeriesKind::log_stieltjes:
				if (!(z > T(-1)) || z == T(0))
					throw std::invalid_argument("logarithm series: argument must exceed minus one and be nonzero");
				break;
			case SeriesKind::bessel_expansion:
				if (!(z > T(0)))
					throw std::invalid_argument("reduced-Bessel expansion: argument must be positive");
				break;
			case SeriesKind::sigma_rho:
				if (z == T(1))
					throw std::invalid_argument("shifted geometric sums: ratio one never sums");
				break;
			default:
				break; // lemniscate and half_factorial carry no parameter
		}
	}
};

/** First `count` terms of the series, leading term first. */
template <typename T>
std::vector<T> terms(const SeriesSpec<T>& spec, long count)
{
	spec.validate();
	if (count < 0)
		throw std::invalid_argument("series terms: count must be non-negative");

	std::vector<T> out;
	out.reserve(static_cast<std::size_t>(count));
	const T z = spec.z;

	switch (spec.kind)
	{
		case SeriesKind::geometric:
		{
			T a = T(1);
			for (long m = 0; m < count; ++m, a *= z)
				out.push_back(a);
			break;
		}
		case SeriesKind::zeta:
			for (long m = 0; m < count; ++m)
				out.push_back(num::pow(T(m + 1), -z));
			break;
		case SeriesKind::euler_2f0:
		{
			T a = T(1);
			for (long m = 0; m < count; ++m)
			{
				out.push_back(a);
				a *= -T(m + 1) / z;
			}
			break;
		}
		case SeriesKind::log_stieltjes:
		{
			T a = z;
			for (long m = 0; m < count; ++m)
			{
				out.push_back(a);
				a *= -z * T(m + 1) / T(m + 2);
			}
			break;
		}
		case SeriesKind::lemniscate:
		{
			T h = T(1); // (1/2)_m / m!
			for (long m = 0; m < count; ++m)
			{
				out.push_back(h / T(4 * m + 1));
				h *= (T(m) + T(1) / T(2)) / T(m + 1);
			}
			break;
		}
		case SeriesKind::bessel_expansion:
		{
			// a_0 = exp(-z)/z; later terms fold the reduced-Bessel prefactor
			// into a slowly varying product p_m = (1/2)_(m-1) / (2 m!)
			if (count > 0)
				out.push_back(num::exp(-z) / z);
			T p = T(1) / T(2);
			for (long m = 1; m < count; ++m)
			{
				const long n = m - 1;
				T f = T(0), term = T(1);
				for (long j = 0; j <= n; ++j)
				{
					f += term;
					if (j < n)
						term *= ((T(j) - T(n)) / (T(j) - T(2) * T(n))) * (T(2) * z) / T(j + 1);
				}
				out.push_back(num::exp(-z) * f * p);
				p *= (T(m) - T(1) / T(2)) / T(m + 1);
			}
			break;
		}
		case SeriesKind::half_factorial:
		{
			T h = T(1);
			for (long m = 0; m < count; ++m)
			{
				out.push_back(h / T(2 * m + 2));
				h *= (T(m) + T(1) / T(2)) / T(m + 1);
			}
			break;
		}
		case SeriesKind::sigma_rho:
		{
			T a = T(1);
			for (long m = 0; m < count; ++m)
			{
				out.push_back((m == 0) ? T(0) : a);
				if (m > 0)
					a *= z;
			}
			break;
		}
	}
	return out;
}

/** Partial sums s_n = a_0 + ... + a_n for n < count, accumulated in input
 * order so they agree with terms() to the last bit.
 */
template <typename T>
std::vector<T> partial_sums(const SeriesSpec<T>& spec, long count)
{
	auto out = terms(spec, count);
	T s = T(0);
	for (auto& v : out)
	{
		s += v;
		v = s;
	}
	return out;
}

/** A term source for the remainder-estimate drivers: n -> a_n, memoized so
 * random access stays cheap.
 */
template <typename T>
std::function<T(long)> term_source(const SeriesSpec<T>& spec)
{
	spec.validate();
	auto cache = std::make_shared<std::vector<T>>();
	return [spec, cache](long n) {
		if (n < 0)
			throw std::invalid_argument("term source: negative index");
		if (static_cast<std::size_t>(n) >= cache->size())
			*cache = terms(spec, n + 32);
		return (*cache)[static_cast<std::size_t>(n)];
	};
}

enum class RefProvenance
{
	closed_form,
	tabulated
};

template <typename T>
struct SeriesReference
{
	T value{};
	RefProvenance provenance{RefProvenance::closed_form};
	const char* text{""};
};

/** The series' limit (or antilimit for the divergent kinds), when a closed
 * form or an established tabulation provides one.
 */
template <typename T>
std::optional<SeriesReference<T>> reference(const SeriesSpec<T>& spec)
{
	spec.validate();
	switch (spec.kind)
	{
		case SeriesKind::geometric:
			return SeriesReference<T>{ T(1) / (T(1) - spec.z), RefProvenance::closed_form, "1/(1-z)" };
		case SeriesKind::zeta:
			if (spec.z == T(2))
				return SeriesReference<T>{ num::pi<T>() * num::pi<T>() / T(6),
					RefProvenance::closed_form, "pi^2/6" };
			return std::nullopt;
		case SeriesKind::euler_2f0:
			if (spec.z == T(3))
				return SeriesReference<T>{ precision<T>::parse("0.78625122076594"),
					RefProvenance::tabulated, "established 14-digit tabulation" };
			if (spec.z == T(1) / T(2))
				return SeriesReference<T>{ precision<T>::parse("0.46145531624187"),
					RefProvenance::tabulated, "established 14-digit tabulation" };
			return std::nullopt;
		case SeriesKind::log_stieltjes:
			return SeriesReference<T>{ num::log1p(spec.z), RefProvenance::closed_form, "log(1+z)" };
		case SeriesKind::lemniscate:
		{
			const T g = num::tgamma(T(1) / T(4));
			return SeriesReference<T>{ g * g / (T(4) * num::sqrt(T(2) * num::pi<T>())),
				RefProvenance::closed_form, "gamma(1/4)^2 / (4 sqrt(2 pi))" };
		}
		case SeriesKind::bessel_expansion:
			return SeriesReference<T>{ T(1) / spec.z, RefProvenance::closed_form, "1/z" };
		case SeriesKind::half_factorial:
			return SeriesReference<T>{ T(1), RefProvenance::closed_form, "1" };
		default:
			return SeriesReference<T>{ T(1) / (T(1) - spec.z), RefProvenance::closed_form, "1/(1-rho)" };
	}
}

// ---------------------------------------------------------------------------
//  model sequences
// ---------------------------------------------------------------------------

enum class ModelKind
{
	exp_sum,          // s + sum_j c_j lambda_j^n
	two_geometric,    // s + a x^n + b y^n
	rational_in_x,    // P(x_n) / Q(x_n)
	poly_in_x,        // s + sum_j c_j x_n^(j+1)
	levin_model,      // s + w_n sum_j c_j / (beta+n)^j
	sidi_model,       // s + w_n sum_j c_j x_n^j
	s_model,          // s + w_n sum_j c_j / ((beta+n)_j)
	m_model,          // s + w_n sum_j c_j / ((-gamma-n)_j)
	drummond_model,   // s + w_n sum_j c_j n^j
	pochhammer_ratio  // s + (a)_(n+1) / (b)_(n+1)
};

/** Everything a model generator may need; which fields matter depends on the
 * kind.  validate() enforces the per-kind requirements.
 */
template <typename T>
struct ModelSequenceSpec
{
	ModelKind kind{ModelKind::exp_sum};
	T limit{};
	std::vector<T> c{};            // transient coefficients
	std::vector<T> lambda{};       // transient bases (exp_sum)
	std::vector<T> num{};          // rational numerator, constant first
	std::vector<T> den{};          // rational denominator, constant first
	T a{}, b{};                    // two_geometric / pochhammer_ratio data
	T shift{1};                    // beta (levin/s) or gamma (m) shift
	std::function<T(long)> x{};    // interpolation points where required
	std::function<T(long)> omega{}; // remainder estimates where required

	void validate() const
	{
		auto needC = [&] {
			if (c.empty())
				throw std::invalid_argument("model sequence: coefficient list is empty");
		};
		auto needOmega = [&] {
			if (!omega)
				throw std::invalid_argument("model sequence: remainder-estimate generator missing");
		};
		auto needX = [&] {
			if (!x)
				throw std::invalid_argument("model sequence: interpolation-point generator missing");
		};
		switch (kind)
		{
			case ModelKind::exp_sum:
				needC();
				if (lambda.size() != c.size())
					throw std::invalid_argument("model sequence: one base per coefficient required");
				break;
			case ModelKind::two_geometric:
				if (a == T(0) || b == T(0))
					throw std::invalid_argument("model sequence: both transient weights must be nonzero");
				if (lambda.size() != 2)
					throw std::invalid_argument("model sequence: exactly two transient bases required");
				break;
			case ModelKind::rational_in_x:
				needX();
				if (num.empty() || den.empty())
					throw std::invalid_argument("model sequence: rational model needs both polynomials");
				break;
			case ModelKind::poly_in_x:
				needC();
				needX();
				break;
			case ModelKind::levin_model:
			case ModelKind::s_model:
				needC();
				needOmega();
				if (!(shift > T(0)))
					throw std::invalid_argument("model sequence: shift must be positive");
				break;
			case ModelKind::m_model:
				needC();
				needOmega();
				if (!(shift > T(0)))
					throw std::invalid_argument("model sequence: shift must be positive");
				break;
			case ModelKind::drummond_model:
				needC();
				needOmega();
				break;
			case ModelKind::sidi_model:
				needC();
				needOmega();
				needX();
				break;
			case ModelKind::pochhammer_ratio:
				if (!(b > T(0)))
					throw std::invalid_argument("model sequence: denominator base must be positive");
				break;
		}
	}
};

/** Elements of the model sequence, with interpolation points and remainder
 * estimates attached where the model defines them.
 */
template <typename T>
std::vector<SequencePoint<T>> model_sequence(const ModelSequenceSpec<T>& spec, long count)
{
	spec.validate();
	if (count < 0)
		throw std::invalid_argument("model sequence: count must be non-negative");

	std::vector<SequencePoint<T>> out;
	out.reserve(static_cast<std::size_t>(count));
	for (long n = 0; n < count; ++n)
	{
		SequencePoint<T> pt;
		pt.n = n;
		switch (spec.kind)
		{
			case ModelKind::exp_sum:
			{
				T s = spec.limit;
				for (std::size_t j = 0; j < spec.c.size(); ++j)
					s += spec.c[j] * ipow(spec.lambda[j], n);
				pt.s = s;
				break;
			}
			case ModelKind::two_geometric:
				pt.s = spec.limit + spec.a * ipow(spec.lambda[0], n) + spec.b * ipow(spec.lambda[1], n);
				break;
			case ModelKind::rational_in_x:
			{
				const T xn = spec.x(n);
				T p = T(0), q = T(0);
				for (std::size_t j = spec.num.size(); j-- > 0;)
					p = p * xn + spec.num[j];
				for (std::size_t j = spec.den.size(); j-- > 0;)
					q = q * xn + spec.den[j];
				pt.s = p / q;
				pt.x = xn;
				break;
			}
			case ModelKind::poly_in_x:
			{
				const T xn = spec.x(n);
				T s = T(0);
				for (std::size_t j = spec.c.size(); j-- > 0;)
					s = (s + spec.c[j]) * xn;
				pt.s = spec.limit + s;
				pt.x = xn;
				break;
			}
			case ModelKind::levin_model:
			{
				T s = T(0);
				for (std::size_t j = 0; j < spec.c.size(); ++j)
					s += spec.c[j] / ipow(spec.shift + T(n), static_cast<long>(j));
				pt.omega = spec.omega(n);
				pt.s = spec.limit + *pt.omega * s;
				break;
			}
			case ModelKind::sidi_model:
			{
				const T xn = spec.x(n);
				T s = T(0);
				for (std::size_t j = spec.c.size(); j-- > 0;)
					s = s * xn + spec.c[j];
				pt.x = xn;
				pt.omega = spec.omega(n);
				pt.s = spec.limit + *pt.omega * s;
				break;
			}
			case ModelKind::s_model:
			{
				T s = T(0);
				for (std::size_t j = 0; j < spec.c.size(); ++j)
					s += spec.c[j] / pochhammer(spec.shift + T(n), static_cast<long>(j));
				pt.omega = spec.omega(n);
				pt.s = spec.limit + *pt.omega * s;
				break;
			}
			case ModelKind::m_model:
			{
				T s = T(0);
				for (std::size_t j = 0; j < spec.c.size(); ++j)
					s += spec.c[j] / pochhammer(-spec.shift - T(n), static_cast<long>(j));
				pt.omega = spec.omega(n);
				pt.s = spec.limit + *pt.omega * s;
				break;
			}
			case ModelKind::drummond_model:
			{
				T s = T(0);
				for (std::size_t j = spec.c.size(); j-- > 0;)
					s = s * T(n) + spec.c[j];
				pt.omega = spec.omega(n);
				pt.s = spec.limit + *pt.omega * s;
				break;
			}
			case ModelKind::pochhammer_ratio:
				pt.s = spec.limit + pochhammer(spec.a, n + 1) / pochhammer(spec.b, n + 1);
				break;
		}
		out.push_back(pt);
	}
	return out;
}

} // namespace antilim

#endif // ANTILIM_SERIES_LAB_HPP_
