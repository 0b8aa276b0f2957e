// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** The theta family and its iterated relatives.
 *
 * BrezinskiTheta replaces the fixed auxiliary step of the epsilon algorithm
 * by a data-driven one, which makes it one of the most versatile
 * transformations available: it handles linear convergence, logarithmic
 * convergence, and many divergent series without any tuning parameter.  Its
 * second column, iterated on its own output, gives IteratedTheta2 - usually
 * at least as powerful and much thriftier with input: each pass consumes
 * three elements.  RhoTheta applies the same construction to the rational
 * extrapolation recursion with interpolation points.
 *
 * BCTransform holds two further three-elements-per-order iterations derived
 * from the same closed form; they are occasionally useful as cross-checks
 * but usually weaker.  IteratedWeighted covers three two-elements-per-order
 * iterations with index-dependent weights, plus the plain unit-weight rule
 * they all collapse to far out in the table.
 *
 * Everything streams: one new element updates one counterdiagonal in place.
 * The theta tables additionally alternate between two rows, since their
 * recursions reach two counterdiagonals back.
 */

#ifndef ANTILIM_THETA_LIKE_HPP_
#define ANTILIM_THETA_LIKE_HPP_

#include <antilim/kernel.hpp>

namespace antilim
{

/** Streaming theta algorithm.
 *
 * After element m the fresh string holds entries with subscript q = 0 ..
 * floor((2m+1)/3); the estimate is the largest even subscript 2*floor(m/3).
 * The modified flag drops the carry term from the auxiliary (odd) rule,
 * which turns the even columns into the iterated second column exactly.
 */
template <typename T>
class BrezinskiTheta
{
public:
	explicit BrezinskiTheta(bool modified = false, SafeguardPolicy<T> pol = {})
		: _modified(modified), _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return _modified ? "theta_modified" : "theta"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_arr[0].clear();
		_arr[1].clear();
		_tnt[0].clear();
		_tnt[1].clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("theta: points must arrive in order starting at 0");
		return next(pt.s, inputTaint);
	}

	Estimate<T> next(T s, bool inputTaint = false)
	{
		const long m = _count;
		const long qmax = (2 * m + 1) / 3;

		auto& C = _arr[m & 1];          // row being rewritten (last touched at m-2)
		auto& O = _arr[1 - (m & 1)];    // row written at m-1
		auto& CT = _tnt[m & 1];
		auto& OT = _tnt[1 - (m & 1)];
		C.resize(static_cast<std::size_t>(qmax) + 1, T(0));
		CT.resize(static_cast<std::size_t>(qmax) + 1, false);

		// o1 / o2 carry the pre-overwrite entries one and two positions back;
		// ahead of the string they stand for the identically zero column
		T o1 = T(0), o2 = T(0);
		bool o1t = false, o2t = false;
		for (long q = 0; q <= qmax; ++q)
		{
			const std::size_t uq = static_cast<std::size_t>(q);
			const T curOld = C[uq];
			const bool curOldT = CT[uq];

			if (q == 0)
			{
				C[0] = s;
				CT[0] = inputTaint;
			}
			else if (q & 1)
			{
				const auto g = guard_divide(T(1), C[uq - 1] - O[uq - 1], _pol);
				C[uq] = (_modified ? T(0) : o2) + g.value;
				CT[uq] = (!_modified && o2t) || CT[uq - 1] || OT[uq - 1] || g.fired;
			}
			else
			{
				const auto g = guard_divide((O[uq - 2] - o2) * (C[uq - 1] - O[uq - 1]),
				                            C[uq - 1] - T(2) * O[uq - 1] + o1, _pol);
				C[uq] = o2 + g.value;
				CT[uq] = o2t || OT[uq - 2] || CT[uq - 1] || OT[uq - 1] || o1t || g.fired;
			}

			o2 = o1;
			o2t = o1t;
			o1 = curOld;
			o1t = curOldT;
		}
		++_count;

		const std::size_t qSel = static_cast<std::size_t>(2 * (m / 3));
		return { C[qSel], m % 3, 2 * (m / 3), !CT[qSel] };
	}

private:
	bool _modified;
	std::vector<T> _arr[2];
	std::vector<bool> _tnt[2];
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** The same auxiliary-step construction applied to rational extrapolation
 * with interpolation points x_n.  More versatile than the plain rational
 * scheme (it copes with linear convergence and some divergence) but weaker
 * than the theta algorithm on most input; provided as a cross-check.
 */
template <typename T>
class RhoTheta
{
public:
	explicit RhoTheta(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "theta_rho"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_arr[0].clear();
		_arr[1].clear();
		_tnt[0].clear();
		_tnt[1].clear();
		_x.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("theta_rho: points must arrive in order starting at 0");
		if (!pt.x)
			throw std::invalid_argument("theta_rho: interpolation point missing");
		return next(pt.s, *pt.x, inputTaint);
	}

	Estimate<T> next(T s, T x, bool inputTaint = false)
	{
		const long m = _count;
		const long qmax = (2 * m + 1) / 3;

		_x.push_back(x);
		auto& C = _arr[m & 1];
		auto& O = _arr[1 - (m & 1)];
		auto& CT = _tnt[m & 1];
		auto& OT = _tnt[1 - (m & 1)];
		C.resize(static_cast<std::size_t>(qmax) + 1, T(0));
		CT.resize(static_cast<std::size_t>(qmax) + 1, false);

		auto xat = [&](long i) { return _x[static_cast<std::size_t>(i)]; };

		T o1 = T(0), o2 = T(0);
		bool o1t = false, o2t = false;
		for (long q = 0; q <= qmax; ++q)
		{
			const std::size_t uq = static_cast<std::size_t>(q);
			const T curOld = C[uq];
			const bool curOldT = CT[uq];

			if (q == 0)
			{
				C[0] = s;
				CT[0] = inputTaint;
			}
			else if (q & 1)
			{
				const long k = (q - 1) / 2;
				const auto g = guard_divide(xat(m - k) - xat(m - 3 * k - 1),
				                            C[uq - 1] - O[uq - 1], _pol);
				C[uq] = o2 + g.value;
				CT[uq] = o2t || CT[uq - 1] || OT[uq - 1] || g.fired;
			}
			else
			{
				const long k = q / 2 - 1;
				const T dEven = O[uq - 2] - o2;
				const T dOddNew = C[uq - 1] - O[uq - 1];
				const T dOddOld = O[uq - 1] - o1;
				const auto g = guard_divide(
					(xat(m - k - 1) - xat(m - 3 * k - 3)) * dEven * dOddNew,
					(xat(m - k - 1) - xat(m - 3 * k - 2)) * dOddOld
						- (xat(m - k - 2) - xat(m - 3 * k - 3)) * dOddNew, _pol);
				C[uq] = o2 - g.value;
				CT[uq] = o2t || OT[uq - 2] || CT[uq - 1] || OT[uq - 1] || o1t || g.fired;
			}

			o2 = o1;
			o2t = o1t;
			o1 = curOld;
			o1t = curOldT;
		}
		++_count;

		const std::size_t qSel = static_cast<std::size_t>(2 * (m / 3));
		return { C[qSel], m % 3, 2 * (m / 3), !CT[qSel] };
	}

private:
	std::vector<T> _arr[2];
	std::vector<bool> _tnt[2];
	std::vector<T> _x;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Iterating the closed form of the second theta column on its own output.
 * Each pass consumes three elements and raises the order of convergence by
 * three; in practice this is one of the strongest general-purpose
 * transformations in the library.
 */
template <typename T>
class IteratedTheta2
{
public:
	explicit IteratedTheta2(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "j"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_j.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("iterated theta2: points must arrive in order starting at 0");
		return next(pt.s, inputTaint);
	}

	Estimate<T> next(T s, bool inputTaint = false)
	{
		const long m = _count;
		_j.push_back(s);
		_taint.push_back(inputTaint);

		for (long l = 1; 3 * l <= m; ++l)
		{
			const std::size_t i = static_cast<std::size_t>(m - 3 * l);
			const T d0 = _j[i + 1] - _j[i];
			const T d1 = _j[i + 2] - _j[i + 1];
			const T d2 = _j[i + 3] - _j[i + 2];
			const T dd0 = d1 - d0;
			const T dd1 = d2 - d1;
			const auto g = guard_divide(d0 * d1 * dd1, d2 * dd0 - d0 * dd1, _pol);
			_j[i] = _j[i + 1] - g.value;
			_taint[i] = _taint[i] || _taint[i + 1] || _taint[i + 2] || _taint[i + 3] || g.fired;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m % 3);
		return { _j[iSel], m % 3, m / 3, !_taint[iSel] };
	}

private:
	std::vector<T> _j;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Two sibling iterations with the same three-element stride, derived from
 * the same closed form but anchored differently.  Mostly useful as
 * independent cross-checks of the iterated second theta column.
 */
enum class BCKind
{
	b,
	c
};

template <typename T>
class BCTransform
{
public:
	explicit BCTransform(BCKind kind, SafeguardPolicy<T> pol = {}) : _kind(kind), _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return (_kind == BCKind::b) ? "b" : "c"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_a.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("stride-three iteration: points must arrive in order starting at 0");
		return next(pt.s, inputTaint);
	}

	Estimate<T> next(T s, bool inputTaint = false)
	{
		const long m = _count;
		_a.push_back(s);
		_taint.push_back(inputTaint);

		for (long l = 1; 3 * l <= m; ++l)
		{
			const std::size_t i = static_cast<std::size_t>(m - 3 * l);
			const T d0 = _a[i + 1] - _a[i];
			const T d1 = _a[i + 2] - _a[i + 1];
			const T d2 = _a[i + 3] - _a[i + 2];
			const T dd0 = d1 - d0;
			const T dd1 = d2 - d1;

			GuardedValue<T> g;
			if (_kind == BCKind::b)
			{
				g = guard_divide(d0 * d0 * d0 * dd1, d0 * d0 * dd1 - d1 * d1 * dd0, _pol);
				_a[i] = _a[i] + g.value;
			}
			else
			{
				g = guard_divide(d1 * d1 * d2 * dd1, d1 * d1 * dd1 - d2 * d2 * dd0, _pol);
				_a[i] = _a[i + 2] + g.value;
			}
			_taint[i] = _taint[i] || _taint[i + 1] || _taint[i + 2] || _taint[i + 3] || g.fired;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m % 3);
		return { _a[iSel], m % 3, m / 3, !_taint[iSel] };
	}

private:
	BCKind _kind;
	std::vector<T> _a;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Two-element-stride iterations with index-dependent weights a and a+1.
 *
 *  lambda        a = shift + n            (n: superscript of the entry)
 *  sigma         a = shift + n + k - 1    (k: order being built)
 *  mu            a = shift + n - k + 1
 *  equal_weights unit weight on both difference terms
 *
 * Far out in the table all three approach the equal-weights rule, which is
 * also exactly the iterated form of the second two-point difference scheme.
 */
enum class WeightedKind
{
	lambda,
	sigma,
	mu,
	equal_weights
};

template <typename T>
class IteratedWeighted
{
public:
	explicit IteratedWeighted(WeightedKind kind, T shift = T(1), SafeguardPolicy<T> pol = {})
		: _kind(kind), _shift(shift), _pol(pol)
	{
		_pol.validate();
		if ((kind != WeightedKind::equal_weights) && !(shift > T(0)))
			throw std::invalid_argument("weighted iteration: parameter must be positive");
	}

	const char* name() const
	{
		switch (_kind)
		{
			case WeightedKind::lambda: return "lambda";
			case WeightedKind::sigma: return "sigma";
			case WeightedKind::mu: return "mu";
			default: return "equal_weights";
		}
	}

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_a.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("weighted iteration: points must arrive in order starting at 0");
		return next(pt.s, inputTaint);
	}

	Estimate<T> next(T s, bool inputTaint = false)
	{
		const long m = _count;
		_a.push_back(s);
		_taint.push_back(inputTaint);

		for (long j = 1; 2 * j <= m; ++j)
		{
			const std::size_t i = static_cast<std::size_t>(m - 2 * j);
			const T d0 = _a[i + 1] - _a[i];
			const T d1 = _a[i + 2] - _a[i + 1];

			T a{}, b{};
			switch (_kind)
			{
				case WeightedKind::lambda: a = _shift + T(m - 2 * j); b = a + T(1); break;
				case WeightedKind::sigma: a = _shift + T(m - j - 1); b = a + T(1); break;
				case WeightedKind::mu: a = _shift + T(m - 3 * j + 1); b = a + T(1); break;
				case WeightedKind::equal_weights: a = T(1); b = T(1); break;
			}

			const auto g = guard_divide(a * d0 * d1, b * d1 - a * d0, _pol);
			_a[i] = _a[i + 1] - g.value;
			_taint[i] = _taint[i] || _taint[i + 1] || _taint[i + 2] || g.fired;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m % 2);
		return { _a[iSel], m % 2, m / 2, !_taint[iSel] };
	}

private:
	WeightedKind _kind;
	T _shift;
	std::vector<T> _a;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

} // namespace antilim

#endif // ANTILIM_THETA_LIKE_HPP_
