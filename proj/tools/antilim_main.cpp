// =============================================================================
//  antilim - streaming convergence acceleration and series summation
//
//  Copyright (c) 2026 The antilim authors
//
//  Distributed under the MIT License (see the accompanying LICENSE file).
// =============================================================================

// Command line front end.  Partial sums come from the built-in series
// catalog, a file, or standard input; one or more transformations run side
// by side; the result is a table (one row per element, one column per
// transformation) or a JSON document carrying the same numbers at full
// precision.
//
// Exit codes: 0 ok, 1 --check failed, 2 usage error, 3 input error.

#include <CLI11.hpp>

#include <antilim/antilim.hpp>

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace
{

using namespace antilim;

// ---------------------------------------------------------------------------
//  option plumbing
// ---------------------------------------------------------------------------

struct CliOptions
{
	std::string series;
	std::vector<std::string> transforms;
	long maxN{-1};                     // -1: 15 for catalog runs, all input rows otherwise
	std::string precision{"binary64"};
	std::string format{"table"};
	std::string check;
	std::string input;
	bool partialSums{false};
	std::string reference;

	// table-wide parameter defaults, merged into every transform that
	// accepts the corresponding key and does not set it itself
	std::string beta, gamma, alpha, ell, omegaRule, points;
};

struct TransformRequest
{
	std::string raw;   // exactly as typed; doubles as the column header / id
	std::string id;
	std::vector<std::pair<std::string, std::string>> kv;

	bool has(const std::string& key) const
	{
		for (const auto& [k, v] : kv)
			if (k == key)
				return true;
		return false;
	}

	std::string get(const std::string& key, const std::string& fallback) const
	{
		for (const auto& [k, v] : kv)
			if (k == key)
				return v;
		return fallback;
	}
};

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

TransformRequest parseTransform(const std::string& raw)
{
	TransformRequest req;
	req.raw = raw;

	std::stringstream ss(raw);
	std::string tok;
	bool first = true;
	while (std::getline(ss, tok, ','))
	{
		if (first)
		{
			req.id = tok;
			first = false;
			continue;
		}
		const auto eq = tok.find('=');
		if ((eq == std::string::npos) || (eq == 0) || (eq + 1 == tok.size()))
			throw UsageError("transform '" + raw + "': expected key=value, got '" + tok + "'");
		req.kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
	}
	if (req.id.empty())
		throw UsageError("empty transform id");
	return req;
}

/** Which key=value parameters a transform id understands. */
std::vector<std::string> acceptedKeys(const std::string& id)
{
	if (id == "levin" || id == "s" || id == "drummond")
		return { "rule", "beta", "ell" };
	if (id == "m")
		return { "rule", "gamma", "beta", "ell" };
	if (id == "sidi")
		return { "rule", "points", "beta", "alpha" };
	if (id == "richardson" || id == "rho" || id == "w" || id == "theta_rho")
		return { "points", "beta", "alpha" };
	if (id == "lambda" || id == "sigma" || id == "mu"
		|| id == "Lambda" || id == "F" || id == "P")
		return { "beta" };
	if (id == "epsilon" || id == "aitken" || id == "w_standard" || id == "theta"
		|| id == "theta_modified" || id == "j" || id == "b" || id == "c")
		return {};
	throw UsageError("unknown transform id '" + id + "' (see --help for the list)");
}

void mergeDefaults(TransformRequest& req, const CliOptions& opts)
{
	const auto keys = acceptedKeys(req.id);
	auto accepts = [&](const char* k) {
		return std::find(keys.begin(), keys.end(), k) != keys.end();
	};
	for (const auto& [k, v] : req.kv)
		if (!accepts(k.c_str()))
			throw UsageError("transform '" + req.id + "' does not take '" + k + "='");

	auto fill = [&](const char* key, const std::string& val) {
		if (!val.empty() && accepts(key) && !req.has(key))
			req.kv.emplace_back(key, val);
	};
	fill("beta", opts.beta);
	fill("gamma", opts.gamma);
	fill("alpha", opts.alpha);
	fill("ell", opts.ell);
	fill("rule", opts.omegaRule);
	fill("points", opts.points);
}

// ---------------------------------------------------------------------------
//  series selection
// ---------------------------------------------------------------------------

struct SeriesChoice
{
	bool external{false};
	SeriesKind kind{SeriesKind::geometric};
	bool hasZ{false};
	std::string zText;
};

bool kindNeedsZ(SeriesKind kind)
{
	return (kind != SeriesKind::lemniscate) && (kind != SeriesKind::half_factorial);
}

SeriesChoice parseSeries(const std::string& text)
{
	SeriesChoice choice;
	std::string name = text;
	const auto open = text.find('(');
	if (open != std::string::npos)
	{
		if (text.back() != ')')
			throw UsageError("series '" + text + "': missing closing parenthesis");
		name = text.substr(0, open);
		choice.zText = text.substr(open + 1, text.size() - open - 2);
		choice.hasZ = !choice.zText.empty();
	}
	const auto kind = seriesKindFromName(name);
	if (!kind)
		throw UsageError("unknown series '" + name + "' (see --help for the catalog)");
	choice.kind = *kind;
	if (kindNeedsZ(choice.kind) && !choice.hasZ)
		throw UsageError("series '" + name + "' needs an argument, e.g. " + name + "(2)");
	if (!kindNeedsZ(choice.kind) && choice.hasZ)
		throw UsageError("series '" + name + "' takes no argument");
	return choice;
}

// ---------------------------------------------------------------------------
//  type-erased transform columns
// ---------------------------------------------------------------------------

template <typename T>
class Column
{
public:
	virtual ~Column() = default;

	/** Feed s_n; returns the best estimate available after this element, or
	 * nothing while a lagged driver is still buffering. */
	virtual std::optional<Estimate<T>> feed(long n, T s) = 0;
};

template <typename T, typename X>
class PureColumn : public Column<T>
{
public:
	explicit PureColumn(X t) : _t(std::move(t)) {}

	std::optional<Estimate<T>> feed(long n, T s) override
	{
		(void)n;
		_last = _t.next(s);
		return _last;
	}

private:
	X _t;
	std::optional<Estimate<T>> _last;
};

template <typename T, typename X>
class PointColumn : public Column<T>
{
public:
	PointColumn(X t, PointDriver<T> drv) : _t(std::move(t)), _drv(std::move(drv)) {}

	std::optional<Estimate<T>> feed(long n, T s) override
	{
		if (auto item = _drv.push(n, s))
			_last = _t.next(item->pt, item->taint);
		return _last;
	}

private:
	X _t;
	PointDriver<T> _drv;
	std::optional<Estimate<T>> _last;
};

template <typename T, typename X>
class OmegaColumn : public Column<T>
{
public:
	OmegaColumn(X t, OmegaDriver<T> drv) : _t(std::move(t)), _drv(std::move(drv)) {}

	std::optional<Estimate<T>> feed(long n, T s) override
	{
		if (auto item = _drv.push(n, s))
			_last = _t.next(item->pt, item->taint);
		return _last;
	}

private:
	X _t;
	OmegaDriver<T> _drv;
	std::optional<Estimate<T>> _last;
};

/** Interpolation points and remainder estimates come from two independent
 * drivers with possibly different lookahead; pair their outputs by index
 * before anything reaches the transformer. */
template <typename T>
class SidiColumn : public Column<T>
{
public:
	SidiColumn(SidiR<T> t, PointDriver<T> pts, OmegaDriver<T> om)
		: _t(std::move(t)), _pts(std::move(pts)), _om(std::move(om))
	{
	}

	std::optional<Estimate<T>> feed(long n, T s) override
	{
		if (auto item = _pts.push(n, s))
			_xq.push_back(*item);
		if (auto item = _om.push(n, s))
			_wq.push_back(*item);
		while (!_xq.empty() && !_wq.empty())
		{
			const auto& xi = _xq.front();
			const auto& wi = _wq.front();
			SequencePoint<T> pt{ wi.pt.n, wi.pt.s, xi.pt.x, wi.pt.omega };
			_last = _t.next(pt, xi.taint || wi.taint);
			_xq.pop_front();
			_wq.pop_front();
		}
		return _last;
	}

private:
	SidiR<T> _t;
	PointDriver<T> _pts;
	OmegaDriver<T> _om;
	std::deque<DriverItem<T>> _xq;
	std::deque<DriverItem<T>> _wq;
	std::optional<Estimate<T>> _last;
};

// ---------------------------------------------------------------------------
//  column factory
// ---------------------------------------------------------------------------

template <typename T>
T parseNum(const std::string& text, const std::string& what)
{
	try
	{
		return precision<T>::parse(text.c_str());
	}
	catch (const std::invalid_argument&)
	{
		throw UsageError(what + ": not a valid number: '" + text + "'");
	}
}

long parseCount(const std::string& text, const std::string& what)
{
	try
	{
		std::size_t used = 0;
		const long v = std::stol(text, &used);
		if (used != text.size())
			throw std::invalid_argument(text);
		return v;
	}
	catch (const std::exception&)
	{
		throw UsageError(what + ": not a valid integer: '" + text + "'");
	}
}

template <typename T>
PointFamily<T> makeFamily(const TransformRequest& req, const char* fallback)
{
	const std::string name = req.get("points", fallback);
	PointFamily<T> fam;
	if (name == "reciprocal")
		fam.kind = PointFamilyKind::reciprocal;
	else if (name == "reciprocal_power")
		fam.kind = PointFamilyKind::reciprocal_power;
	else if (name == "linear")
		fam.kind = PointFamilyKind::linear;
	else if (name == "power")
		fam.kind = PointFamilyKind::power;
	else if (name == "gbw")
		fam.kind = PointFamilyKind::gbw;
	else if (name == "levin_like")
		fam.kind = PointFamilyKind::levin_like;
	else if (name == "reciprocal_levin_like")
		fam.kind = PointFamilyKind::reciprocal_levin_like;
	else
		throw UsageError("unknown point family '" + name + "'");
	fam.beta = parseNum<T>(req.get("beta", "1"), "points beta");
	fam.alpha = parseNum<T>(req.get("alpha", "1"), "points alpha");
	return fam;
}

template <typename T>
struct SeriesContext
{
	bool catalog{false};
	SeriesKind kind{SeriesKind::geometric};
	T z{};
	std::function<T(long)> term;   // empty for external input
};

template <typename T>
RemainderEstimator<T> makeEstimator(const TransformRequest& req, const SeriesContext<T>& ctx)
{
	const std::string rule = req.get("rule", "u");
	RemainderEstimator<T> est;
	est.shift = parseNum<T>(req.get("beta", "1"), "remainder beta");
	est.term = ctx.term;
	if (rule == "u")
		est.rule = RemainderRule::u;
	else if (rule == "t")
		est.rule = RemainderRule::t;
	else if (rule == "d")
		est.rule = RemainderRule::d;
	else if (rule == "v")
		est.rule = RemainderRule::v;
	else if (rule == "stieltjes")
	{
		est.rule = RemainderRule::stieltjes;
		if (!ctx.catalog)
			throw UsageError("rule=stieltjes needs a catalog series with known moments");
		if (ctx.kind == SeriesKind::euler_2f0)
			est.moment = [](long n) { return num::tgamma(T(n) + T(1)); };
		else if (ctx.kind == SeriesKind::log_stieltjes)
			est.moment = [](long n) { return T(1) / T(n + 1); };
		else
			throw UsageError("rule=stieltjes: no moment sequence on record for this series");
		est.z = ctx.z;
	}
	else if (rule == "recip_sqrt")
	{
		est.rule = RemainderRule::explicit_rule;
		est.omegaFn = omega_recip_sqrt<T>(est.shift);
	}
	else if (rule == "half_factorial")
	{
		est.rule = RemainderRule::explicit_rule;
		est.omegaFn = omega_half_factorial<T>();
	}
	else
		throw UsageError("unknown remainder rule '" + rule + "'");
	return est;
}

template <typename T>
std::unique_ptr<Column<T>> makeColumn(const TransformRequest& req,
                                      const SeriesContext<T>& ctx,
                                      const SafeguardPolicy<T>& pol)
{
	const std::string& id = req.id;

	if (id == "epsilon")
		return std::make_unique<PureColumn<T, EpsilonAlgorithm<T>>>(EpsilonAlgorithm<T>(pol));
	if (id == "aitken")
		return std::make_unique<PureColumn<T, IteratedAitken<T>>>(IteratedAitken<T>(pol));
	if (id == "theta")
		return std::make_unique<PureColumn<T, BrezinskiTheta<T>>>(BrezinskiTheta<T>(false, pol));
	if (id == "theta_modified")
		return std::make_unique<PureColumn<T, BrezinskiTheta<T>>>(BrezinskiTheta<T>(true, pol));
	if (id == "j")
		return std::make_unique<PureColumn<T, IteratedTheta2<T>>>(IteratedTheta2<T>(pol));
	if (id == "b")
		return std::make_unique<PureColumn<T, BCTransform<T>>>(BCTransform<T>(BCKind::b, pol));
	if (id == "c")
		return std::make_unique<PureColumn<T, BCTransform<T>>>(BCTransform<T>(BCKind::c, pol));
	if (id == "w_standard")
		return std::make_unique<PureColumn<T, IteratedRho2<T>>>(
			IteratedRho2<T>(Rho2Kind::standard, pol));

	if (id == "lambda" || id == "sigma" || id == "mu")
	{
		const WeightedKind kind = (id == "lambda") ? WeightedKind::lambda
			: (id == "sigma") ? WeightedKind::sigma : WeightedKind::mu;
		const T shift = parseNum<T>(req.get("beta", "1"), id + " beta");
		return std::make_unique<PureColumn<T, IteratedWeighted<T>>>(
			IteratedWeighted<T>(kind, shift, pol));
	}
	if (id == "Lambda" || id == "F" || id == "P")
	{
		const LinearKind kind = (id == "Lambda") ? LinearKind::lambda
			: (id == "F") ? LinearKind::f : LinearKind::p;
		const T shift = parseNum<T>(req.get("beta", "1"), id + " beta");
		return std::make_unique<PureColumn<T, LinearSpecial<T>>>(
			LinearSpecial<T>(kind, shift, pol));
	}

	if (id == "richardson")
		return std::make_unique<PointColumn<T, RichardsonExtrapolation<T>>>(
			RichardsonExtrapolation<T>(pol),
			PointDriver<T>(makeFamily<T>(req, "reciprocal"), ctx.term, pol));
	if (id == "rho")
		return std::make_unique<PointColumn<T, WynnRho<T>>>(
			WynnRho<T>(pol),
			PointDriver<T>(makeFamily<T>(req, "linear"), ctx.term, pol));
	if (id == "w")
		return std::make_unique<PointColumn<T, IteratedRho2<T>>>(
			IteratedRho2<T>(Rho2Kind::points, pol),
			PointDriver<T>(makeFamily<T>(req, "linear"), ctx.term, pol));
	if (id == "theta_rho")
		return std::make_unique<PointColumn<T, RhoTheta<T>>>(
			RhoTheta<T>(pol),
			PointDriver<T>(makeFamily<T>(req, "linear"), ctx.term, pol));

	if (id == "levin" || id == "s" || id == "m" || id == "drummond")
	{
		const RatioFamily family = (id == "levin") ? RatioFamily::levin
			: (id == "s") ? RatioFamily::s
			: (id == "m") ? RatioFamily::m : RatioFamily::drummond;
		T shift = T(1);
		if (family == RatioFamily::m)
		{
			if (!req.has("gamma"))
				throw UsageError("transform 'm' needs gamma= (use gamma >= k-1 for depth k)");
			shift = parseNum<T>(req.get("gamma", "1"), "m gamma");
		}
		else
			shift = parseNum<T>(req.get("beta", "1"), id + " beta");
		const long ell = parseCount(req.get("ell", "0"), id + " ell");
		auto est = makeEstimator<T>(req, ctx);
		// the scaled-difference estimate for this family couples to its own
		// shift parameter, with a sign flip; an explicit beta= overrides
		if (family == RatioFamily::m && est.rule == RemainderRule::u && !req.has("beta"))
		{
			est.shift = shift;
			est.negateShift = true;
		}
		return std::make_unique<OmegaColumn<T, RatioTransformer<T>>>(
			RatioTransformer<T>(family, shift, ell, pol),
			OmegaDriver<T>(est, pol));
	}

	if (id == "sidi")
		return std::make_unique<SidiColumn<T>>(
			SidiR<T>(pol),
			PointDriver<T>(makeFamily<T>(req, "reciprocal"), ctx.term, pol),
			OmegaDriver<T>(makeEstimator<T>(req, ctx), pol));

	throw UsageError("unknown transform id '" + id + "'");
}

// ---------------------------------------------------------------------------
//  run + rendering
// ---------------------------------------------------------------------------

template <typename T>
struct RowData
{
	long n{0};
	T s{};
	std::vector<std::optional<Estimate<T>>> cells;
};

template <typename T>
int tableDigits()
{
	return 13;
}

template <typename T>
int jsonDigits()
{
	return 17;
}

#if defined(ANTILIM_HAS_FLOAT128)
template <>
int tableDigits<__float128>()
{
	return 14;
}

template <>
int jsonDigits<__float128>()
{
	return 36;
}
#endif

std::vector<std::string> readInputLines(const std::string& where)
{
	std::vector<std::string> lines;
	auto drain = [&lines](std::istream& in) {
		std::string line;
		while (std::getline(in, line))
		{
			while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
				line.pop_back();
			std::size_t at = 0;
			while ((at < line.size()) && (line[at] == ' ' || line[at] == '\t'))
				++at;
			line.erase(0, at);
			if (line.empty() || line[0] == '#')
				continue;
			lines.push_back(line);
		}
	};
	if (where == "-")
		drain(std::cin);
	else
	{
		std::ifstream file(where);
		if (!file)
			throw InputError("cannot open input file '" + where + "'");
		drain(file);
	}
	if (lines.empty())
		throw InputError("input '" + where + "' holds no values");
	return lines;
}

void jsonEscape(std::string& out, const std::string& text)
{
	for (char ch : text)
	{
		switch (ch)
		{
			case '"': out += "\\\""; break;
			case '\\': out += "\\\\"; break;
			case '\n': out += "\\n"; break;
			case '\t': out += "\\t"; break;
			default:
				if (static_cast<unsigned char>(ch) < 0x20)
				{
					char buf[8];
					std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
					out += buf;
				}
				else
					out += ch;
		}
	}
}

template <typename T>
struct RunResult
{
	std::vector<RowData<T>> rows;
	std::optional<T> refValue;
	std::string refProvenance;   // "closed_form", "tabulated", "override"
	std::string refText;
};

template <typename T>
std::string renderTable(const RunResult<T>& res, const std::vector<TransformRequest>& reqs)
{
	const int digits = tableDigits<T>();

	std::vector<std::vector<std::string>> grid;
	std::vector<std::string> header{ "n", "s_n" };
	for (const auto& req : reqs)
		header.push_back(req.raw);
	grid.push_back(header);

	for (const auto& row : res.rows)
	{
		std::vector<std::string> out{ std::to_string(row.n),
			precision<T>::format(row.s, digits) };
		for (const auto& cell : row.cells)
		{
			if (!cell)
				out.push_back("-");
			else
				out.push_back(precision<T>::format(cell->value, digits)
					+ (cell->valid ? "" : "*"));
		}
		grid.push_back(out);
	}

	if (res.refValue)
	{
		std::vector<std::string> foot{ "ref", precision<T>::format(*res.refValue, digits) };
		foot.push_back("(" + res.refText + ")");
		while (foot.size() < header.size())
			foot.emplace_back("");
		grid.push_back(foot);
	}

	std::vector<std::size_t> width(header.size(), 0);
	for (const auto& row : grid)
		for (std::size_t c = 0; c < row.size(); ++c)
			width[c] = std::max(width[c], row[c].size());

	std::string text;
	for (const auto& row : grid)
	{
		for (std::size_t c = 0; c < row.size(); ++c)
		{
			const bool last = (c + 1 == row.size());
			if (c)
				text += "  ";
			if (last && (row[c].size() < width[c]) && !row[c].empty() && row[c][0] == '(')
			{
				text += row[c];   // provenance note spills left-aligned
				continue;
			}
			text.append(width[c] - row[c].size(), ' ');
			text += row[c];
		}
		text += '\n';
	}
	return text;
}

template <typename T>
std::string renderJson(const RunResult<T>& res, const std::vector<TransformRequest>& reqs,
                       const CliOptions& opts, const SeriesChoice& choice)
{
	const int digits = jsonDigits<T>();
	auto num = [&](T v) { return precision<T>::format(v, digits); };

	std::string out;
	out += "{\"series\":\"";
	jsonEscape(out, choice.external ? "external" : seriesKindName(choice.kind));
	out += "\",\"params\":{\"z\":";
	if (!choice.external && kindNeedsZ(choice.kind))
		out += num(parseNum<T>(choice.zText, "series argument"));
	else
		out += "null";
	out += ",\"max_n\":" + std::to_string(res.rows.empty() ? -1 : res.rows.back().n);
	out += ",\"precision\":\"";
	jsonEscape(out, precision<T>::name());
	out += "\",\"input\":\"";
	jsonEscape(out, choice.external ? (opts.partialSums ? "partial_sums" : "terms") : "catalog");
	out += "\",\"transforms\":[";
	for (std::size_t i = 0; i < reqs.size(); ++i)
	{
		if (i)
			out += ',';
		out += '"';
		jsonEscape(out, reqs[i].raw);
		out += '"';
	}
	out += "]},\"rows\":[";
	for (std::size_t r = 0; r < res.rows.size(); ++r)
	{
		const auto& row = res.rows[r];
		if (r)
			out += ',';
		out += "{\"n\":" + std::to_string(row.n) + ",\"s\":" + num(row.s) + ",\"cells\":[";
		for (std::size_t c = 0; c < row.cells.size(); ++c)
		{
			if (c)
				out += ',';
			out += "{\"id\":\"";
			jsonEscape(out, reqs[c].raw);
			out += "\",\"value\":";
			const auto& cell = row.cells[c];
			if (!cell)
				out += "null,\"k\":-1,\"n\":-1,\"tainted\":false";
			else
				out += num(cell->value) + ",\"k\":" + std::to_string(cell->k)
					+ ",\"n\":" + std::to_string(cell->n)
					+ ",\"tainted\":" + (cell->valid ? "false" : "true");
			out += '}';
		}
		out += "]}";
	}
	out += "],\"reference\":";
	if (res.refValue)
	{
		out += "{\"value\":" + num(*res.refValue) + ",\"provenance\":\"";
		jsonEscape(out, res.refProvenance);
		out += "\"}";
	}
	else
		out += "null";
	out += "}\n";
	return out;
}

/** Apply --check VALUE:DIGITS against the last transform column.  Returns the
 * process exit code and appends a human-readable verdict line. */
template <typename T>
int applyCheck(const RunResult<T>& res, const std::vector<TransformRequest>& reqs,
               const std::string& spec, std::string& verdict)
{
	const auto colon = spec.rfind(':');
	if ((colon == std::string::npos) || (colon == 0) || (colon + 1 == spec.size()))
		throw UsageError("--check expects VALUE:DIGITS");
	const T expected = parseNum<T>(spec.substr(0, colon), "--check value");
	const long digits = parseCount(spec.substr(colon + 1), "--check digits");
	if (digits < 1)
		throw UsageError("--check digits must be positive");
	if (!num::isfinite(expected))
		throw UsageError("--check value must be finite");

	const std::size_t col = reqs.size() - 1;
	const Estimate<T>* best = nullptr;
	for (auto it = res.rows.rbegin(); it != res.rows.rend() && !best; ++it)
		if (it->cells[col] && it->cells[col]->valid)
			best = &*it->cells[col];

	if (!best)
	{
		verdict = "check FAIL: column '" + reqs[col].raw
			+ "' has no untainted estimate (guarded divisions fired throughout)\n";
		return 1;
	}

	const T scale = (expected == T(0)) ? T(1) : num::abs(expected);
	const T err = num::abs(best->value - expected) / scale;
	const T tol = T(1) / T(2) * num::pow(T(10), T(1 - digits));
	const bool pass = err <= tol;

	verdict = std::string("check ") + (pass ? "PASS" : "FAIL")
		+ ": column '" + reqs[col].raw + "' final estimate "
		+ precision<T>::format(best->value, tableDigits<T>())
		+ " (n=" + std::to_string(best->n) + ", k=" + std::to_string(best->k) + ")"
		+ " vs " + precision<T>::format(expected, tableDigits<T>())
		+ ": relative error " + precision<T>::format(err, 3)
		+ (pass ? " <= " : " > ") + precision<T>::format(tol, 3)
		+ " (" + std::to_string(digits) + " digits)\n";
	return pass ? 0 : 1;
}

template <typename T>
int runTyped(const CliOptions& opts)
{
	std::vector<TransformRequest> reqs;
	for (const auto& raw : opts.transforms)
	{
		auto req = parseTransform(raw);
		mergeDefaults(req, opts);
		reqs.push_back(std::move(req));
	}
	if (reqs.empty())
		throw UsageError("at least one --transform is required");

	const SafeguardPolicy<T> pol{};
	SeriesChoice choice;
	SeriesContext<T> ctx;
	RunResult<T> res;

	std::vector<T> sums;
	if (!opts.input.empty())
	{
		choice.external = true;
		const auto lines = readInputLines(opts.input);
		std::vector<T> values;
		values.reserve(lines.size());
		for (std::size_t i = 0; i < lines.size(); ++i)
		{
			T v{};
			try
			{
				v = precision<T>::parse(lines[i].c_str());
			}
			catch (const std::invalid_argument&)
			{
				throw InputError("value " + std::to_string(i) + ": not a number: '" + lines[i] + "'");
			}
			if (!num::isfinite(v))
				throw InputError("value " + std::to_string(i) + " is not finite");
			values.push_back(v);
		}
		if (opts.partialSums)
			sums = std::move(values);
		else
		{
			sums.reserve(values.size());
			T acc = T(0);
			for (T v : values)
				sums.push_back(acc += v);
		}
		long maxN = static_cast<long>(sums.size()) - 1;
		if (opts.maxN >= 0)
		{
			if (opts.maxN > maxN)
				throw InputError("input supplies " + std::to_string(sums.size())
					+ " values but --n asks for " + std::to_string(opts.maxN + 1));
			maxN = opts.maxN;
			sums.resize(static_cast<std::size_t>(maxN) + 1);
		}
	}
	else if (!opts.series.empty())
	{
		choice = parseSeries(opts.series);
		SeriesSpec<T> spec;
		spec.kind = choice.kind;
		if (choice.hasZ)
			spec.z = parseNum<T>(choice.zText, "series argument");
		try
		{
			spec.validate();
		}
		catch (const std::invalid_argument& e)
		{
			throw UsageError(std::string("series parameters: ") + e.what());
		}
		const long maxN = (opts.maxN >= 0) ? opts.maxN : 15;
		sums = partial_sums(spec, maxN + 1);
		ctx.catalog = true;
		ctx.kind = choice.kind;
		ctx.z = spec.z;
		ctx.term = term_source(spec);
		if (const auto ref = reference(spec))
		{
			res.refValue = ref->value;
			res.refProvenance = (ref->provenance == RefProvenance::closed_form)
				? "closed_form" : "tabulated";
			res.refText = ref->text;
		}
	}
	else
		throw UsageError("either --series or --input is required");

	if (!opts.reference.empty())
	{
		res.refValue = parseNum<T>(opts.reference, "--reference");
		res.refProvenance = "override";
		res.refText = "user supplied";
	}

	std::vector<std::unique_ptr<Column<T>>> cols;
	for (const auto& req : reqs)
		cols.push_back(makeColumn<T>(req, ctx, pol));

	try
	{
		for (long n = 0; n < static_cast<long>(sums.size()); ++n)
		{
			RowData<T> row;
			row.n = n;
			row.s = sums[static_cast<std::size_t>(n)];
			for (auto& col : cols)
				row.cells.push_back(col->feed(n, row.s));
			res.rows.push_back(std::move(row));
		}
	}
	catch (const std::invalid_argument& e)
	{
		throw InputError(std::string("while streaming element data: ") + e.what());
	}

	std::string verdict;
	int code = 0;
	if (!opts.check.empty())
		code = applyCheck<T>(res, reqs, opts.check, verdict);

	if (opts.format == "json")
	{
		std::cout << renderJson<T>(res, reqs, opts, choice);
		std::cerr << verdict;
	}
	else
	{
		std::cout << renderTable<T>(res, reqs);
		std::cout << verdict;
	}
	return code;
}

} // namespace

int main(int argc, char** argv)
{
	CliOptions opts;

	CLI::App app{ "antilim - streaming convergence acceleration and series summation" };
	app.add_option("--series", opts.series,
		"catalog series, e.g. euler_2f0(3), zeta(2), lemniscate");
	app.add_option("--transform", opts.transforms,
		"transform id with key=value parameters, e.g. levin,rule=u,beta=1 (repeatable)");
	app.add_option("--n", opts.maxN, "last element index fed to the transforms");
	app.add_option("--precision", opts.precision, "binary64 or binary128")
		->check(CLI::IsMember({ "binary64", "binary128" }));
	app.add_option("--format", opts.format, "table or json")
		->check(CLI::IsMember({ "table", "json" }));
	app.add_option("--check", opts.check,
		"VALUE:DIGITS - require the last column's final untainted estimate to match");
	app.add_option("--input", opts.input, "read values from FILE, or - for standard input");
	app.add_flag("--partial-sums", opts.partialSums,
		"treat input values as partial sums instead of terms");
	app.add_option("--reference", opts.reference, "override the footer reference value");
	app.add_option("--beta", opts.beta, "default beta for transforms that take one");
	app.add_option("--gamma", opts.gamma, "default gamma for transforms that take one");
	app.add_option("--alpha", opts.alpha, "default alpha for point families");
	app.add_option("--ell", opts.ell, "default start offset for the ratio families");
	app.add_option("--omega-rule", opts.omegaRule,
		"default remainder rule: u t d v stieltjes recip_sqrt half_factorial");
	app.add_option("--points", opts.points,
		"default point family: reciprocal reciprocal_power linear power gbw levin_like reciprocal_levin_like");
	app.set_version_flag("--version", "antilim 1.0.0");
	app.footer(
		"transform ids:\n"
		"  epsilon aitken richardson rho w w_standard sidi levin s m drummond\n"
		"  Lambda F P theta theta_modified theta_rho j b c lambda sigma mu\n"
		"series catalog:\n"
		"  geometric(z) zeta(z) euler_2f0(z) log_stieltjes(z) lemniscate\n"
		"  bessel_expansion(z) half_factorial sigma_rho(z)\n"
		"notes:\n"
		"  tainted table cells (a safeguarded division fired on the value's path)\n"
		"  carry a trailing '*'; cells still waiting on a lagged driver print '-'.\n"
		"  catalog runs know every series term, so no transform ever lags there.\n"
		"exit codes: 0 ok, 1 check failed, 2 usage error, 3 input error");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::Success& e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError& e)
	{
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	}

	try
	{
		if (opts.precision == "binary128")
		{
#if defined(ANTILIM_HAS_FLOAT128)
			return runTyped<__float128>(opts);
#else
			std::cerr << "usage error: this build has no binary128 support\n";
			return 2;
#endif
		}
		return runTyped<double>(opts);
	}
	catch (const UsageError& e)
	{
		std::cerr << "usage error: " << e.what() << "\n";
		return 2;
	}
	catch (const InputError& e)
	{
		std::cerr << "input error: " << e.what() << "\n";
		return 3;
	}
	catch (const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
}
