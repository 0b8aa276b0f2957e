// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** Common numeric kernel shared by every transformation in the library.
 *
 * All transformations operate in a streaming fashion: partial sums (and,
 * where needed, interpolation points or remainder estimates) arrive one at a
 * time and internal tables are updated in place along counterdiagonals.  The
 * helpers collected here define the pieces that every such update needs:
 *
 *  - a precision layer that lets the same template code run in IEEE binary64,
 *    extended, and (when the toolchain provides __float128) binary128;
 *  - a guarded division that never produces a non-finite value.  Whenever a
 *    denominator falls below a tiny threshold, or the quotient overflows, a
 *    huge value of the appropriate sign is substituted and the event is
 *    reported so that downstream consumers can mark the affected entries as
 *    unreliable rather than silently propagate garbage;
 *  - small combinatorial utilities (Pochhammer symbols, binomial
 *    coefficients, finite differences) used by model sequences and by the
 *    explicit-sum oracles in the test suites.
 */

#ifndef ANTILIM_KERNEL_HPP_
#define ANTILIM_KERNEL_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#if defined(ANTILIM_HAS_FLOAT128)
	#include <quadmath.h>
#endif

namespace antilim
{

namespace num
{
	// Plain overload sets so that template code can call e.g. num::abs(x)
	// without caring which floating point type is active.

	inline double abs(double x) { return std::fabs(x); }
	inline long double abs(long double x) { return std::fabs(x); }
	inline bool isfinite(double x) { return std::isfinite(x); }
	inline bool isfinite(long double x) { return std::isfinite(x); }
	inline double sqrt(double x) { return std::sqrt(x); }
	inline long double sqrt(long double x) { return std::sqrt(x); }
	inline double pow(double x, double y) { return std::pow(x, y); }
	inline long double pow(long double x, long double y) { return std::pow(x, y); }
	inline double exp(double x) { return std::exp(x); }
	inline long double exp(long double x) { return std::exp(x); }
	inline double log1p(double x) { return std::log1p(x); }
	inline long double log1p(long double x) { return std::log1p(x); }
	inline double tgamma(double x) { return std::tgamma(x); }
	inline long double tgamma(long double x) { return std::tgamma(x); }

#if defined(ANTILIM_HAS_FLOAT128)
	inline __float128 abs(__float128 x) { return fabsq(x); }
	inline bool isfinite(__float128 x) { return !isinfq(x) && !isnanq(x); }
	inline __float128 sqrt(__float128 x) { return sqrtq(x); }
	inline __float128 pow(__float128 x, __float128 y) { return powq(x, y); }
	inline __float128 exp(__float128 x) { return expq(x); }
	inline __float128 log1p(__float128 x) { return log1pq(x); }
	inline __float128 tgamma(__float128 x) { return tgammaq(x); }
#endif

	template <typename T>
	inline T pi()
	{
#if defined(ANTILIM_HAS_FLOAT128)
		if constexpr (std::is_same_v<T, __float128>)
			return M_PIq;
		else
#endif
			return static_cast<T>(3.14159265358979323846264338327950288L);
	}
}

/** Precision traits: thresholds, parsing, and formatting for each supported
 * floating point type.  The tiny / huge pair drives the guarded division; the
 * defaults sit close to the edge of each type's range so that the safeguard
 * only fires on genuine breakdowns.
 */
template <typename T>
struct precision;

template <>
struct precision<double>
{
	static double epsilon() { return std::numeric_limits<double>::epsilon(); }
	static double tiny() { return 1e-300; }
	static double huge() { return 1e300; }
	static const char* name() { return "binary64"; }

	static double parse(const char* str)
	{
		char* end = nullptr;
		const double v = std::strtod(str, &end);
		if ((end == str) || (*end != '\0'))
			throw std::invalid_argument(std::string("not a valid number: ") + str);
		return v;
	}

	static std::string format(double v, int digits)
	{
		char buf[64];
		std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
		return buf;
	}
};

template <>
struct precision<long double>
{
	static long double epsilon() { return std::numeric_limits<long double>::epsilon(); }
	static long double tiny() { return 1e-4900L; }
	static long double huge() { return 1e4900L; }
	static const char* name() { return "extended"; }

	static long double parse(const char* str)
	{
		char* end = nullptr;
		const long double v = std::strtold(str, &end);
		if ((end == str) || (*end != '\0'))
			throw std::invalid_argument(std::string("not a valid number: ") + str);
		return v;
	}

	static std::string format(long double v, int digits)
	{
		char buf[80];
		std::snprintf(buf, sizeof(buf), "%.*Lg", digits, v);
		return buf;
	}
};

#if defined(ANTILIM_HAS_FLOAT128)
template <>
struct precision<__float128>
{
	static __float128 epsilon() { return FLT128_EPSILON; }
	static __float128 tiny() { return 1e-4900Q; }
	static __float128 huge() { return 1e4900Q; }
	static const char* name() { return "binary128"; }

	static __float128 parse(const char* str)
	{
		char* end = nullptr;
		const __float128 v = strtoflt128(str, &end);
		if ((end == str) || (*end != '\0'))
			throw std::invalid_argument(std::string("not a valid number: ") + str);
		return v;
	}

	static std::string format(__float128 v, int digits)
	{
		char buf[128];
		quadmath_snprintf(buf, sizeof(buf), "%.*Qg", digits, v);
		return buf;
	}
};
#endif

/** Which floating point width a run should use. */
enum class PrecisionMode
{
	binary64,
	binary128
};

inline bool binary128_available()
{
#if defined(ANTILIM_HAS_FLOAT128)
	return true;
#else
	return false;
#endif
}

/** One element of an input stream.
 *
 * @c n is the zero-based index, @c s the partial sum (or sequence element).
 * Transformations that use interpolation points read @c x; those that use
 * explicit remainder estimates read @c omega.  Both are optional so that the
 * same carrier type serves every transformation.
 */
template <typename T>
struct SequencePoint
{
	long n{0};
	T s{};
	std::optional<T> x{};
	std::optional<T> omega{};
};

/** Result of feeding one point into a transformation.
 *
 * @c value is the current best extrapolated estimate, located at column
 * @c k (the transformation order) and row @c n of the underlying table.
 * @c valid is cleared whenever the guarded division fired anywhere along the
 * dependency path of this entry, i.e. the value may be unreliable.
 */
template <typename T>
struct Estimate
{
	T value{};
	long n{0};
	long k{0};
	bool valid{true};
};

/** Thresholds for the guarded division.  Requires 0 < tiny < 1 < huge. */
template <typename T>
struct SafeguardPolicy
{
	T huge{precision<T>::huge()};
	T tiny{precision<T>::tiny()};

	void validate() const
	{
		if (!(T(0) < tiny) || !(tiny < T(1)) || !(T(1) < huge))
			throw std::invalid_argument("safeguard policy requires 0 < tiny < 1 < huge");
	}
};

template <typename T>
struct GuardedValue
{
	T value{};
	bool fired{false};
};

/** Division that never returns a non-finite value.
 *
 * If |denom| < tiny, or the quotient itself is non-finite, the result is
 * +-huge carrying the sign the exact quotient would have had (the sign of
 * numer * denom; a zero numerator over a tiny denominator yields +huge), and
 * @c fired is set.  Callers are expected to propagate @c fired into the
 * validity flag of every table entry that depends on this quotient.
 */
template <typename T>
inline GuardedValue<T> guard_divide(T numer, T denom, const SafeguardPolicy<T>& pol)
{
	if (num::abs(denom) < pol.tiny)
	{
		const bool negative = (numer < T(0)) != (denom < T(0));
		return { negative ? -pol.huge : pol.huge, true };
	}
	const T q = numer / denom;
	if (!num::isfinite(q))
	{
		const bool negative = (numer < T(0)) != (denom < T(0));
		return { negative ? -pol.huge : pol.huge, true };
	}
	return { q, false };
}

/** Rising factorial (z)_m = z (z+1) ... (z+m-1); the empty product is 1. */
template <typename T>
inline T pochhammer(T z, long m)
{
	if (m < 0)
		throw std::invalid_argument("pochhammer: negative order");
	T prod = T(1);
	for (long i = 0; i < m; ++i)
		prod *= z + T(i);
	return prod;
}

/** Binomial coefficient C(k, j) as a floating point value. */
template <typename T>
inline T binomial(long k, long j)
{
	if ((j < 0) || (j > k))
		return T(0);
	if (j > k - j)
		j = k - j;
	T prod = T(1);
	for (long i = 0; i < j; ++i)
		prod = prod * T(k - i) / T(i + 1);
	return prod;
}

/** Integer power by repeated multiplication (exponent >= 0). */
template <typename T>
inline T ipow(T base, long exp)
{
	if (exp < 0)
		throw std::invalid_argument("ipow: negative exponent");
	T prod = T(1);
	for (long i = 0; i < exp; ++i)
		prod *= base;
	return prod;
}

/** k-th forward difference of a table, anchored at its first element:
 * sum_{j=0..k} (-1)^(k-j) C(k,j) values[j].  Used by the explicit-sum
 * oracles; requires at least k+1 entries.
 */
template <typename T>
inline T forward_difference(const std::vector<T>& values, long k)
{
	if (k < 0)
		throw std::invalid_argument("forward_difference: negative order");
	if (static_cast<long>(values.size()) < k + 1)
		throw std::invalid_argument("forward_difference: too few values");
	T sum = T(0);
	for (long j = 0; j <= k; ++j)
	{
		const T term = binomial<T>(k, j) * values[static_cast<std::size_t>(j)];
		sum += (((k - j) % 2) != 0) ? -term : term;
	}
	return sum;
}

} // namespace antilim

#endif // ANTILIM_KERNEL_HPP_
