// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** Transformations driven by interpolation points.
 *
 * The methods in this header extrapolate a sequence together with a set of
 * points x_n: polynomial extrapolation to x = 0 (Richardson / Neville),
 * rational extrapolation (the rho algorithm and its iterated two-column
 * form), and a divided-difference scheme with explicit remainder estimates.
 * A small driver translates a raw stream of partial sums into (s, x) pairs
 * for the common point families, and a grid search picks a decay exponent
 * when none is known a priori.
 *
 * All transformations follow the same streaming pattern as the rest of the
 * library: one new element updates a single counterdiagonal in place.
 */

#ifndef ANTILIM_INTERPOLATION_HPP_
#define ANTILIM_INTERPOLATION_HPP_

#include <antilim/kernel.hpp>

#include <functional>

namespace antilim
{

/** Families of interpolation points generated from the element index and,
 * for some kinds, the sequence itself.
 *
 *  reciprocal             x_n = 1 / (beta + n)
 *  reciprocal_power       x_n = (beta + n)^(-alpha)
 *  linear                 x_n = beta + n
 *  power                  x_n = (beta + n)^alpha
 *  gbw                    x_n = s_{n+1} - s_n   (difference of partial sums)
 *  levin_like             x_n = (beta + n) (s_n - s_{n-1}), x_0 = beta s_0
 *  reciprocal_levin_like  x_n = 1 / [(beta + n) (s_n - s_{n-1})]
 *  explicit_points        x_n supplied by the caller
 */
enum class PointFamilyKind
{
	reciprocal,
	reciprocal_power,
	linear,
	power,
	gbw,
	levin_like,
	reciprocal_levin_like,
	explicit_points
};

template <typename T>
struct PointFamily
{
	PointFamilyKind kind{PointFamilyKind::reciprocal};
	T beta{T(1)};
	T alpha{T(1)};
	std::vector<T> points{};   // used by explicit_points only

	void validate() const
	{
		if ((kind != PointFamilyKind::explicit_points) && !(beta > T(0)))
			throw std::invalid_argument("point family: beta must be positive");
	}
};

/** One (s, x) pair ready for consumption, plus a flag when generating the
 * point itself needed a guarded division. */
template <typename T>
struct DriverItem
{
	SequencePoint<T> pt{};
	bool taint{false};
};

/** Turns a raw stream of partial sums into (s, x) pairs for a point family.
 *
 * Families that reference the difference s_{n+1} - s_n ahead of the current
 * element buffer one point unless a term source is available: with a term
 * source, term(n) must return the n-th series term a_n = s_n - s_{n-1}, so
 * forward differences are known without waiting.  lag() reports how many
 * elements the output trails the input.
 */
template <typename T>
class PointDriver
{
public:
	using TermSource = std::function<T(long)>;

	explicit PointDriver(PointFamily<T> family, TermSource term = {},
	                     SafeguardPolicy<T> pol = {})
		: _family(std::move(family)), _term(std::move(term)), _pol(pol)
	{
		_family.validate();
		_pol.validate();
	}

	long lag() const
	{
		return ((_family.kind == PointFamilyKind::gbw) && !_term) ? 1 : 0;
	}

	void reset()
	{
		_count = 0;
		_prevS = T(0);
	}

	/** Feed s_n; returns the next ready (s, x) pair, or nothing while the
	 * driver still buffers. */
	std::optional<DriverItem<T>> push(long n, T s)
	{
		if (n != _count)
			throw std::invalid_argument("point driver: elements must arrive in order starting at 0");
		++_count;

		DriverItem<T> item;
		switch (_family.kind)
		{
			case PointFamilyKind::reciprocal:
				item.pt = { n, s, T(1) / (_family.beta + T(n)), {} };
				break;
			case PointFamilyKind::reciprocal_power:
				item.pt = { n, s, num::pow(_family.beta + T(n), -_family.alpha), {} };
				break;
			case PointFamilyKind::linear:
				item.pt = { n, s, _family.beta + T(n), {} };
				break;
			case PointFamilyKind::power:
				item.pt = { n, s, num::pow(_family.beta + T(n), _family.alpha), {} };
				break;
			case PointFamilyKind::gbw:
			{
				if (_term)
				{
					item.pt = { n, s, _term(n + 1), {} };
					break;
				}
				std::optional<DriverItem<T>> out;
				if (n >= 1)
					out = DriverItem<T>{ { n - 1, _prevS, s - _prevS, {} }, false };
				_prevS = s;
				return out;
			}
			case PointFamilyKind::levin_like:
			case PointFamilyKind::reciprocal_levin_like:
			{
				// the leading element has no predecessor; the customary
				// substitution treats s_0 itself as the first difference
				const T an = _term ? _term(n) : ((n == 0) ? s : (s - _prevS));
				_prevS = s;
				const T w = (_family.beta + T(n)) * an;
				if (_family.kind == PointFamilyKind::levin_like)
					item.pt = { n, s, w, {} };
				else
				{
					const auto inv = guard_divide(T(1), w, _pol);
					item.pt = { n, s, inv.value, {} };
					item.taint = inv.fired;
				}
				break;
			}
			case PointFamilyKind::explicit_points:
				if (static_cast<std::size_t>(n) >= _family.points.size())
					throw std::invalid_argument("point driver: explicit point list exhausted");
				item.pt = { n, s, _family.points[static_cast<std::size_t>(n)], {} };
				break;
		}
		return item;
	}

private:
	PointFamily<T> _family;
	TermSource _term;
	SafeguardPolicy<T> _pol;
	long _count{0};
	T _prevS{};
};

/** Streaming polynomial extrapolation to x = 0 (Neville scheme).
 *
 * Exact whenever s_n = s + sum_{j=0..k-1} c_j x_n^(j+1) once k+1 elements
 * have arrived.  The returned estimate is always the full-order corner of
 * the table.
 */
template <typename T>
class RichardsonExtrapolation
{
public:
	explicit RichardsonExtrapolation(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "richardson"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_n.clear();
		_x.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("richardson: points must arrive in order starting at 0");
		if (!pt.x)
			throw std::invalid_argument("richardson: interpolation point missing");
		return next(pt.s, *pt.x, inputTaint);
	}

	Estimate<T> next(T s, T x, bool inputTaint = false)
	{
		const long m = _count;
		_n.push_back(s);
		_x.push_back(x);
		_taint.push_back(inputTaint);

		const T xm = _x[static_cast<std::size_t>(m)];
		for (long i = m - 1; i >= 0; --i)
		{
			const std::size_t ui = static_cast<std::size_t>(i);
			const auto q = guard_divide(_x[ui] * _n[ui + 1] - xm * _n[ui], _x[ui] - xm, _pol);
			_n[ui] = q.value;
			_taint[ui] = _taint[ui] || _taint[ui + 1] || q.fired;
		}
		++_count;

		return { _n[0], 0, m, !_taint[0] };
	}

	/** Entry j of the current counterdiagonal (order m - j at superscript j);
	 * used by the exponent search. */
	T tableEntry(long j) const { return _n[static_cast<std::size_t>(j)]; }

private:
	std::vector<T> _n;
	std::vector<T> _x;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Streaming rho algorithm: rational extrapolation in x_n, even columns
 * carry the estimates.  With x_n = beta + n this is the classic scheme for
 * logarithmically convergent sequences; exact for s_n that are ratios of two
 * linear functions of x_n after three elements.
 */
template <typename T>
class WynnRho
{
public:
	explicit WynnRho(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "rho"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_r.clear();
		_x.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("rho: points must arrive in order starting at 0");
		if (!pt.x)
			throw std::invalid_argument("rho: interpolation point missing");
		return next(pt.s, *pt.x, inputTaint);
	}

	Estimate<T> next(T s, T x, bool inputTaint = false)
	{
		const long m = _count;
		_r.push_back(s);
		_x.push_back(x);
		_taint.push_back(inputTaint);

		const T xm = _x[static_cast<std::size_t>(m)];
		T prev2 = T(0);
		bool taint2 = false;
		for (long i = m - 1; i >= 0; --i)
		{
			const std::size_t ui = static_cast<std::size_t>(i);
			const T oldi = _r[ui];
			const bool oldTaint = _taint[ui];

			const auto q = guard_divide(xm - _x[ui], _r[ui + 1] - oldi, _pol);
			_r[ui] = prev2 + q.value;
			_taint[ui] = taint2 || _taint[ui + 1] || oldTaint || q.fired;

			prev2 = oldi;
			taint2 = oldTaint;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m & 1);
		return { _r[iSel], m & 1, m - (m & 1), !_taint[iSel] };
	}

private:
	std::vector<T> _r;
	std::vector<T> _x;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Which update rule the iterated two-column rho scheme uses. */
enum class Rho2Kind
{
	points,     ///< general interpolation points, supplied with every element
	standard    ///< the classic choice x_n = beta + n folded into the weights
};

/** Iterating the first rational extrapolation step on its own output.
 *
 * Each pass consumes two more elements.  The standard kind needs no points
 * at all and is a strong general-purpose method for logarithmic convergence;
 * the points kind accepts arbitrary (increasing) x_n.
 */
template <typename T>
class IteratedRho2
{
public:
	explicit IteratedRho2(Rho2Kind kind = Rho2Kind::standard, SafeguardPolicy<T> pol = {})
		: _kind(kind), _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return (_kind == Rho2Kind::standard) ? "w_standard" : "w"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_w.clear();
		_x.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("iterated rho2: points must arrive in order starting at 0");
		if (_kind == Rho2Kind::points)
		{
			if (!pt.x)
				throw std::invalid_argument("iterated rho2: interpolation point missing");
			return next(pt.s, *pt.x, inputTaint);
		}
		return next(pt.s, T(0), inputTaint);
	}

	Estimate<T> next(T s, T x = T(0), bool inputTaint = false)
	{
		const long m = _count;
		_w.push_back(s);
		_taint.push_back(inputTaint);
		if (_kind == Rho2Kind::points)
			_x.push_back(x);

		for (long j = 1; 2 * j <= m; ++j)
		{
			const std::size_t i = static_cast<std::size_t>(m - 2 * j);
			const T d0 = _w[i + 1] - _w[i];
			const T d1 = _w[i + 2] - _w[i + 1];

			GuardedValue<T> corr;
			if (_kind == Rho2Kind::points)
			{
				const std::size_t um = static_cast<std::size_t>(m);
				corr = guard_divide((_x[um] - _x[i]) * d1 * d0,
				                    (_x[um] - _x[i + 1]) * d0 - (_x[um - 1] - _x[i]) * d1, _pol);
				_w[i] = _w[i + 1] + corr.value;
			}
			else
			{
				corr = guard_divide(T(2 * j) * d1 * d0, T(2 * j - 1) * (d1 - d0), _pol);
				_w[i] = _w[i + 1] - corr.value;
			}
			_taint[i] = _taint[i] || _taint[i + 1] || _taint[i + 2] || corr.fired;
		}
		++_count;

		const std::size_t iSel = static_cast<std::size_t>(m % 2);
		return { _w[iSel], m % 2, m / 2, !_taint[iSel] };
	}

private:
	Rho2Kind _kind;
	std::vector<T> _w;
	std::vector<T> _x;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Streaming ratio of divided-difference tables with explicit remainder
 * estimates.
 *
 * Exact for s_n = s + omega_n (c_0 + c_1 x_n + ... + c_{k-1} x_n^(k-1))
 * once k+1 elements have arrived.  With omega_n = x_n the scheme reproduces
 * the values of plain polynomial extrapolation.
 */
template <typename T>
class SidiR
{
public:
	explicit SidiR(SafeguardPolicy<T> pol = {}) : _pol(pol)
	{
		_pol.validate();
	}

	const char* name() const { return "sidi"; }

	long pointsConsumed() const { return _count; }

	void reset()
	{
		_num.clear();
		_den.clear();
		_x.clear();
		_taint.clear();
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("sidi: points must arrive in order starting at 0");
		if (!pt.x)
			throw std::invalid_argument("sidi: interpolation point missing");
		if (!pt.omega)
			throw std::invalid_argument("sidi: remainder estimate missing");
		return next(pt.s, *pt.x, *pt.omega, inputTaint);
	}

	Estimate<T> next(T s, T x, T omega, bool inputTaint = false)
	{
		const long m = _count;
		const auto n0 = guard_divide(s, omega, _pol);
		const auto d0 = guard_divide(T(1), omega, _pol);
		_num.push_back(n0.value);
		_den.push_back(d0.value);
		_x.push_back(x);
		_taint.push_back(inputTaint || n0.fired || d0.fired);

		const T xm = _x[static_cast<std::size_t>(m)];
		for (long i = m - 1; i >= 0; --i)
		{
			const std::size_t ui = static_cast<std::size_t>(i);
			const T dx = _x[ui] - xm;
			const auto qn = guard_divide(_num[ui] - _num[ui + 1], dx, _pol);
			const auto qd = guard_divide(_den[ui] - _den[ui + 1], dx, _pol);
			_num[ui] = qn.value;
			_den[ui] = qd.value;
			_taint[ui] = _taint[ui] || _taint[ui + 1] || qn.fired || qd.fired;
		}
		++_count;

		const auto r = guard_divide(_num[0], _den[0], _pol);
		return { r.value, 0, m, !(_taint[0] || r.fired) };
	}

private:
	std::vector<T> _num;
	std::vector<T> _den;
	std::vector<T> _x;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** Grid search for the decay exponent of x_n = (beta + n)^(-alpha).
 *
 * Runs polynomial extrapolation over the whole sample once per candidate
 * exponent and keeps the one whose two deepest diagonal entries agree best:
 * a self-consistency criterion that needs no knowledge of the limit.  An
 * empty grid selects 0.25, 0.5, ..., 2.0.
 */
template <typename T>
T beleznay_alpha(const std::vector<T>& s, T beta, std::vector<T> grid = {},
                 SafeguardPolicy<T> pol = {})
{
	if (s.size() < 3)
		throw std::invalid_argument("exponent search: need at least three elements");
	if (grid.empty())
		for (int g = 1; g <= 8; ++g)
			grid.push_back(T(g) / T(4));

	T best = grid.front();
	T bestScore = precision<T>::huge();
	for (const T alpha : grid)
	{
		RichardsonExtrapolation<T> rich(pol);
		T prevCorner = T(0);
		Estimate<T> est;
		for (std::size_t n = 0; n < s.size(); ++n)
		{
			if (n + 1 == s.size())
				prevCorner = est.value;
			est = rich.next(s[n], num::pow(beta + T(n), -alpha));
		}
		// deepest entry of the previous sweep vs the one-order-lower entry of
		// the final sweep: both approximate the limit at the same order
		const T score = num::abs(rich.tableEntry(1) - prevCorner);
		if (score < bestScore)
		{
			bestScore = score;
			best = alpha;
		}
	}
	return best;
}

} // namespace antilim

#endif // ANTILIM_INTERPOLATION_HPP_
