// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** Ratio-of-differences transformations and their linear relatives.
 *
 * The four families in RatioTransformer share one shape: numerator and
 * denominator tables seeded with s_n / (P_l(n) omega_n) and 1 / (P_l(n)
 * omega_n) are pushed through the same weighted difference recursion, and
 * the estimate is the ratio of the two deepest entries.  They differ only in
 * the polynomial model divided out of the remainder:
 *
 *  levin     powers of 1/(shift + n)      - the classic all-round choice
 *  s         inverse Pochhammer factors   - often better for divergent input
 *  m         rising factors with a cap    - a variant whose order cannot
 *                                           exceed shift + 1, so its window
 *                                           slides once that depth is reached
 *  drummond  plain polynomials in n       - simplest, usually weakest
 *
 * The offset l >= 0 starts the model at a later column, which pays off when
 * the early remainder behaviour is irregular; drummond has no such knob.
 *
 * LinearSpecial covers three classic linear schemes obtained from the same
 * families for fixed remainder rules; they need no omega input at all.
 */

#ifndef ANTILIM_LEVIN_LIKE_HPP_
#define ANTILIM_LEVIN_LIKE_HPP_

#include <antilim/kernel.hpp>

namespace antilim
{

enum class RatioFamily
{
	levin,
	s,
	m,
	drummond
};

inline const char* ratioFamilyName(RatioFamily f)
{
	switch (f)
	{
		case RatioFamily::levin: return "levin";
		case RatioFamily::s: return "s";
		case RatioFamily::m: return "m";
		default: return "drummond";
	}
}

template <typename T>
class RatioTransformer
{
public:
	/** @param family  which weight family to use
	 *  @param shift   beta for levin / s (must be > 0), gamma for m (> 0);
	 *                 ignored by drummond
	 *  @param ell     model start offset (drummond supports 0 only)
	 */
	explicit RatioTransformer(RatioFamily family, T shift = T(1), long ell = 0,
	                          SafeguardPolicy<T> pol = {})
		: _family(family), _shift(shift), _ell(ell), _pol(pol)
	{
		_pol.validate();
		if (ell < 0)
			throw std::invalid_argument("ratio transformer: negative start offset");
		switch (family)
		{
			case RatioFamily::levin:
			case RatioFamily::s:
				if (!(shift > T(0)))
					throw std::invalid_argument("ratio transformer: beta must be positive");
				break;
			case RatioFamily::m:
				if (!(shift > T(0)))
					throw std::invalid_argument("ratio transformer: gamma must be positive");
				_kmax = static_cast<long>(shift + T(1) + T(1e-12));
				break;
			case RatioFamily::drummond:
				if (ell != 0)
					throw std::invalid_argument("ratio transformer: drummond has no start offset");
				break;
		}
	}

	const char* name() const { return ratioFamilyName(_family); }

	long pointsConsumed() const { return _count; }

	bool frozen() const { return _frozen; }

	void reset()
	{
		_num.clear();
		_den.clear();
		_taint.clear();
		_base = 0;
		_frozen = false;
		_count = 0;
	}

	Estimate<T> next(const SequencePoint<T>& pt, bool inputTaint = false)
	{
		if (pt.n != _count)
			throw std::invalid_argument("ratio transformer: points must arrive in order starting at 0");
		if (!pt.omega)
			throw std::invalid_argument("ratio transformer: remainder estimate missing");
		return next(pt.s, *pt.omega, inputTaint);
	}

	Estimate<T> next(T s, T omega, bool inputTaint = false)
	{
		const long m = _count;

		const T scale = startFactor(m) * omega;
		const auto sn = guard_divide(s, scale, _pol);
		const auto sd = guard_divide(T(1), scale, _pol);
		_num.push_back(sn.value);
		_den.push_back(sd.value);
		_taint.push_back(inputTaint || sn.fired || sd.fired);

		const long jmax = (_kmax > 0) ? std::min(m - _base, _kmax) : (m - _base);
		for (long j = 1; j <= jmax; ++j)
		{
			const std::size_t i = static_cast<std::size_t>(m - j - _base);
			const T c = weight(m, j);
			_num[i] = _num[i + 1] - c * _num[i];
			_den[i] = _den[i + 1] - c * _den[i];
			_taint[i] = _taint[i] || _taint[i + 1];
		}

		if ((_kmax > 0) && (m - _base > _kmax))
		{
			// the capped family advances its window instead of deepening
			_num.erase(_num.begin());
			_den.erase(_den.begin());
			_taint.erase(_taint.begin());
			++_base;
			_frozen = true;
		}
		++_count;

		const auto r = guard_divide(_num[0], _den[0], _pol);
		return { r.value, _base, m - _base, !(_taint[0] || r.fired) };
	}

private:
	/** P_l(n): the factor that starts the divided-out model at column l. */
	T startFactor(long n) const
	{
		switch (_family)
		{
			case RatioFamily::levin: return ipow(_shift + T(n), _ell);
			case RatioFamily::s: return pochhammer(_shift + T(n), _ell);
			case RatioFamily::m: return pochhammer(-_shift - T(n), _ell);
			default: return T(1);
		}
	}

	/** Weight multiplying the shallower entry when element m extends the
	 * table to order j.  Order one is the plain difference in every family.
	 */
	T weight(long m, long j) const
	{
		if (j == 1)
			return T(1);
		switch (_family)
		{
			case RatioFamily::levin:
				return (_shift + T(m - j)) * ipow(_shift + T(m - 1), j - 2)
				       / ipow(_shift + T(m), j - 1);
			case RatioFamily::s:
				return ((_shift + T(m - 1)) * (_shift + T(m - 2)))
				       / ((_shift + T(m + j - 2)) * (_shift + T(m + j - 3)));
			case RatioFamily::m:
				return (_shift + T(m - 2 * j + 2)) / (_shift + T(m));
			default:
				return T(1);
		}
	}

	RatioFamily _family;
	T _shift;
	long _ell;
	long _kmax{0};   ///< 0: unlimited depth
	long _base{0};
	bool _frozen{false};
	std::vector<T> _num;
	std::vector<T> _den;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

/** The three linear schemes.
 *
 *  lambda  weights (shift + n)/j       - equivalent to polynomial
 *                                        extrapolation along 1/(shift + n);
 *                                        strong for logarithmic convergence
 *  f       weights (shift + m - 1)/j   - a fixed-estimate variant of the
 *                                        Pochhammer family
 *  p       weights (shift + m - 2j + 1)/j - its capped-family counterpart
 *
 * Linear means: no data-dependent denominators, hence no guard is ever
 * needed and input taint is the only taint.
 */
enum class LinearKind
{
	lambda,
	f,
	p
};

template <typename T>
class LinearSpecial
{
public:
	explicit LinearSpecial(LinearKind kind, T shift = T(1), SafeguardPolicy<T> pol = {})
		: _kind(kind), _shift(shift), _pol(pol)
	{
		_pol.validate();
		if (!(shift > T(0)))
			throw std::invalid_argument("linear scheme: parameter must be positive");
	}

	const char* name() const
	{
		switch (_kind)
		{
			case LinearKind::lambda: return "Lambda";
			case LinearKind::f: return "F";
			default: return "P";
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
			throw std::invalid_argument("linear scheme: points must arrive in order starting at 0");
		return next(pt.s, inputTaint);
	}

	Estimate<T> next(T s, bool inputTaint = false)
	{
		const long m = _count;
		_a.push_back(s);
		_taint.push_back(inputTaint);

		for (long j = 1; j <= m; ++j)
		{
			const std::size_t i = static_cast<std::size_t>(m - j);
			T cfac{};
			switch (_kind)
			{
				case LinearKind::lambda: cfac = (_shift + T(m - j)) / T(j); break;
				case LinearKind::f: cfac = (_shift + T(m - 1)) / T(j); break;
				case LinearKind::p: cfac = (_shift + T(m - 2 * j + 1)) / T(j); break;
			}
			_a[i] = _a[i + 1] + cfac * (_a[i + 1] - _a[i]);
			_taint[i] = _taint[i] || _taint[i + 1];
		}
		++_count;

		return { _a[0], 0, m, !_taint[0] };
	}

private:
	LinearKind _kind;
	T _shift;
	std::vector<T> _a;
	std::vector<bool> _taint;
	long _count{0};
	SafeguardPolicy<T> _pol;
};

} // namespace antilim

#endif // ANTILIM_LEVIN_LIKE_HPP_
