// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

/** Remainder estimates for the ratio-of-differences transformations.
 *
 * Those transformations divide out an explicit estimate omega_n of the
 * remainder s_n - s.  The rules collected here build omega_n from the series
 * terms a_n = s_n - s_{n-1}:
 *
 *  u  : omega_n = (shift + n) a_n      scaled last term
 *  t  : omega_n = a_n                  last term
 *  d  : omega_n = a_{n+1}              next term
 *  v  : omega_n = a_n a_{n+1} / (a_n - a_{n+1})
 *  stieltjes : omega_n = (-1)^(n+1) mu_{n+1} z^(n+1)
 *              from the moment sequence of an integral representation;
 *              for such series this is the true truncation error up to a
 *              factor in (0, 1)
 *  explicit_rule : any user supplied function of n
 *
 * When the input is a series whose terms are generated rather than streamed,
 * a term source makes every rule available without delay.  Without one, the
 * rules that look one term ahead (d, v) emit their output one element late;
 * lag() reports this so callers can align tables.  The leading element uses
 * the customary substitution a_0 = s_0.
 */

#ifndef ANTILIM_OMEGA_HPP_
#define ANTILIM_OMEGA_HPP_

#include <antilim/interpolation.hpp>
#include <antilim/kernel.hpp>

#include <functional>

namespace antilim
{

enum class RemainderRule
{
	u,
	t,
	d,
	v,
	stieltjes,
	explicit_rule
};

inline const char* remainderRuleName(RemainderRule r)
{
	switch (r)
	{
		case RemainderRule::u: return "u";
		case RemainderRule::t: return "t";
		case RemainderRule::d: return "d";
		case RemainderRule::v: return "v";
		case RemainderRule::stieltjes: return "stieltjes";
		default: return "explicit";
	}
}

template <typename T>
struct RemainderEstimator
{
	using Source = std::function<T(long)>;

	RemainderRule rule{RemainderRule::u};
	T shift{T(1)};              ///< the shift in (shift + n) a_n for the u rule
	bool negateShift{false};    ///< u rule variant omega_n = -(shift + n) a_n
	Source term{};              ///< a_n; optional, removes all lookahead delay
	Source omegaFn{};           ///< explicit_rule: omega_n directly
	Source moment{};            ///< stieltjes: mu_n
	T z{T(1)};                  ///< stieltjes: series argument

	void validate() const
	{
		if ((rule == RemainderRule::stieltjes) && !moment)
			throw std::invalid_argument("stieltjes remainder estimate needs a moment source");
		if ((rule == RemainderRule::explicit_rule) && !omegaFn)
			throw std::invalid_argument("explicit remainder estimate needs an omega source");
	}

	long lag() const
	{
		if (term)
			return 0;
		return ((rule == RemainderRule::d) || (rule == RemainderRule::v)) ? 1 : 0;
	}
};

/** Turns a raw stream of partial sums into (s, omega) pairs for one of the
 * remainder rules.  Throws if an estimate comes out exactly zero, since a
 * vanishing omega carries no scale information and would poison the whole
 * table.
 */
template <typename T>
class OmegaDriver
{
public:
	explicit OmegaDriver(RemainderEstimator<T> est, SafeguardPolicy<T> pol = {})
		: _est(std::move(est)), _pol(pol)
	{
		_est.validate();
		_pol.validate();
	}

	long lag() const { return _est.lag(); }

	void reset()
	{
		_count = 0;
		_prevS = T(0);
		_prevA = T(0);
	}

	std::optional<DriverItem<T>> push(long n, T s)
	{
		if (n != _count)
			throw std::invalid_argument("omega driver: elements must arrive in order starting at 0");
		++_count;

		const T aCur = _est.term ? _est.term(n) : ((n == 0) ? s : (s - _prevS));

		std::optional<DriverItem<T>> out;
		switch (_est.rule)
		{
			case RemainderRule::u:
			{
				T w = (_est.shift + T(n)) * aCur;
				if (_est.negateShift)
					w = -w;
				out = makeItem(n, s, w, false);
				break;
			}
			case RemainderRule::t:
				out = makeItem(n, s, aCur, false);
				break;
			case RemainderRule::d:
				if (_est.term)
					out = makeItem(n, s, _est.term(n + 1), false);
				else if (n >= 1)
					out = makeItem(n - 1, _prevS, aCur, false);
				break;
			case RemainderRule::v:
				if (_est.term)
				{
					const T aNext = _est.term(n + 1);
					const auto q = guard_divide(aCur * aNext, aCur - aNext, _pol);
					out = makeItem(n, s, q.value, q.fired);
				}
				else if (n >= 1)
				{
					const auto q = guard_divide(_prevA * aCur, _prevA - aCur, _pol);
					out = makeItem(n - 1, _prevS, q.value, q.fired);
				}
				break;
			case RemainderRule::stieltjes:
			{
				const T w = ((n % 2) ? T(1) : T(-1)) * _est.moment(n + 1) * ipow(_est.z, n + 1);
				out = makeItem(n, s, w, false);
				break;
			}
			case RemainderRule::explicit_rule:
				out = makeItem(n, s, _est.omegaFn(n), false);
				break;
		}

		_prevS = s;
		_prevA = aCur;
		return out;
	}

private:
	DriverItem<T> makeItem(long n, T s, T omega, bool taint) const
	{
		if (omega == T(0))
			throw std::invalid_argument(std::string(remainderRuleName(_est.rule))
				+ " remainder estimate vanished at element " + std::to_string(n));
		DriverItem<T> item;
		item.pt = { n, s, {}, omega };
		item.taint = taint;
		return item;
	}

	RemainderEstimator<T> _est;
	SafeguardPolicy<T> _pol;
	long _count{0};
	T _prevS{};
	T _prevA{};
};

/** omega_n = (beta + n)^(-1/2): a useful guess for series whose terms decay
 * like an inverse square root. */
template <typename T>
std::function<T(long)> omega_recip_sqrt(T beta = T(1))
{
	return [beta](long n) { return T(1) / num::sqrt(beta + T(n)); };
}

/** omega_n = (2n-1)!!/(2n)!!: the half-integer ratio that appears as the
 * remainder scale of several hypergeometric unit series. */
template <typename T>
std::function<T(long)> omega_half_factorial()
{
	return [](long n)
	{
		T h = T(1);
		for (long i = 1; i <= n; ++i)
			h *= (T(i) - T(1) / T(2)) / T(i);
		return h;
	};
}

} // namespace antilim

#endif // ANTILIM_OMEGA_HPP_
