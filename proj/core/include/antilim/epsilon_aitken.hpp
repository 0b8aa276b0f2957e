// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** The two classic nonlinear workhorses.
 *
 * EpsilonAlgorithm eliminates a finite sum of geometric transients from a
 * sequence of partial sums.  Its even columns reproduce the diagonal and
 * staircase Pade approximants of the underlying power series, which makes it
 * the method of choice for summing many alternating divergent expansions.
 *
 * IteratedAitken repeatedly applies the classic Delta^2 extrapolation to its
 * own output.  Order for order it is usually a little less effective than the
 * even epsilon columns, but it only needs three sequence elements per step
 * and often does well on mildly irregular input.
 *
 * Both consume one partial sum at a time and update a single backward
 * counterdiagonal in place; memory grows linearly with the number of points.
 */

#ifndef ANTILIM_EPSILON_AITKEN_HPP_
#define ANTILIM_EPSILON_AITKEN_HPP_

#include <antilim/kernel.hpp>

namespace antilim
{

/** Streaming form of the epsilon algorithm.
 *
 * After m+1 partial sums the internal row holds the current counterdiagonal:
 * entry i carries the column (m - i) element, so the newest partial sum sits
 * at the end and the deepest transform at the front.  Odd columns are
 * auxiliary; the returned estimate is the deepest even column, i.e. the
 * entry at index m mod 2.
 */
template <typename T>
class EpsilonAlgorithm
{
public:
	explicit EpsilonAlgorithm(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "epsilon"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_e.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt)
	{
		if (pt.n != _count)
			throw std::invalid_argument("epsilon: points must arrive in order starting at 0");
		return next(pt.s);
	}

	Estimate<T> next(T s)
	{
		const long m = _count;
		_e.push_back(s);
		_taint.push_back(false);

		// Entry i of the row holds the column (m - i) element of the current
		// counterdiagonal.  Walking i downwards, prev2 carries the pre-update
		// value one position above, i.e. the entry two columns back on the
		// previous counterdiagonal; above the fresh partial sum that entry is
		// the identically zero auxiliary column.
		T prev2 = T(0);
		bool taint2 = false;
		for (long i = m - 1; i >= 0; --i)
		{
			const std::size_t ui = static_cast<std::size_t>(i);
			const T oldi = _e[ui];
			const bool oldTaint = _taint[ui];

			const T diff = _e[ui + 1] - oldi;
			const auto inv = guard_divide(T(1), diff, _pol);
			_e[ui] = prev2 + inv.value;
			_taint[ui] = taint2 || _taint[ui + 1] || oldTaint || inv.fired;

			prev2 = oldi;
			taint2 = oldTaint;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m & 1);
		return { _e[iSel], m & 1, m - (m & 1), !_taint[iSel] };
	}

private:
	std::vector<T> _e;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Streaming iterated Delta^2 extrapolation.
 *
 * The row stores, from index m downwards in steps of two, the iterates of
 * increasing order; each new partial sum allows every entry two below the top
 * to advance one order.  The returned estimate is the deepest available
 * iterate, stored at index m mod 2.
 */
template <typename T>
class IteratedAitken
{
public:
	explicit IteratedAitken(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "aitken"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_a.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt)
	{
		if (pt.n != _count)
			throw std::invalid_argument("aitken: points must arrive in order starting at 0");
		return next(pt.s);
	}

	Estimate<T> next(T s)
	{
		const long m = _count;
		_a.push_back(s);
		_taint.push_back(false);

		for (long j = 1; 2 * j <= m; ++j)
		{
			const std::size_t i = static_cast<std::size_t>(m - 2 * j);
			const T d1 = _a[i + 1] - _a[i];
			const T d2 = _a[i + 2] - T(2) * _a[i + 1] + _a[i];
			const auto corr = guard_divide(d1 * d1, d2, _pol);
			_a[i] = _a[i] - corr.value;
			_taint[i] = _taint[i] || _taint[i + 1] || _taint[i + 2] || corr.fired;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m % 2);
		return { _a[iSel], m % 2, m / 2, !_taint[iSel] };
	}

private:
	std::vector<T> _a;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

} // namespace antilim

#endif // ANTILIM_EPSILON_AITKEN_HPP_
