#include "treereduce/catalog.hpp"

#include <array>
#include <cctype>

#include "treereduce/error.hpp"

namespace treereduce {

RelationSpec RelationSpec::identity()
{
	return RelationSpec{};
}

RelationSpec RelationSpec::dw_sim(bool strict)
{
	return RelationSpec{RelationFamily::DwSim, strict, 1, nullptr};
}

RelationSpec RelationSpec::dw_la(unsigned k, bool strict)
{
	return RelationSpec{RelationFamily::DwLa, strict, k, nullptr};
}

RelationSpec RelationSpec::up_sim(RelationSpec inducing, bool strict)
{
	return RelationSpec{RelationFamily::UpSim, strict, 1, std::make_shared<const RelationSpec>(std::move(inducing))};
}

RelationSpec RelationSpec::up_la(unsigned k, RelationSpec inducing, bool strict)
{
	return RelationSpec{RelationFamily::UpLa, strict, k, std::make_shared<const RelationSpec>(std::move(inducing))};
}

bool operator==(const RelationSpec& a, const RelationSpec& b)
{
	if (a.family != b.family || a.strict != b.strict)
		return false;
	if (a.is_lookahead() && a.k != b.k)
		return false;
	if (static_cast<bool>(a.inducing) != static_cast<bool>(b.inducing))
		return false;
	return !a.inducing || *a.inducing == *b.inducing;
}

namespace {

class SpecParser
{
public:
	explicit SpecParser(std::string_view text) : text_(text) { }

	RelationSpec parse()
	{
		RelationSpec s = spec();
		if (pos_ != text_.size())
			fail("trailing input");
		return s;
	}

private:
	RelationSpec spec()
	{
		RelationSpec s;
		s.strict = accept("strict-");
		if (accept("id")) {
			s.family = RelationFamily::Identity;
		} else if (accept("dw-sim")) {
			s.family = RelationFamily::DwSim;
		} else if (accept("dw-la:")) {
			s.family = RelationFamily::DwLa;
			s.k = number();
		} else if (accept("up-sim")) {
			s.family = RelationFamily::UpSim;
			s.inducing = inner();
		} else if (accept("up-la:")) {
			s.family = RelationFamily::UpLa;
			s.k = number();
			s.inducing = inner();
		} else {
			fail("unknown relation kind");
		}
		return s;
	}

	std::shared_ptr<const RelationSpec> inner()
	{
		if (!accept("("))
			fail("expected '(' before the inducing relation");
		auto s = std::make_shared<const RelationSpec>(spec());
		if (!accept(")"))
			fail("expected ')'");
		return s;
	}

	unsigned number()
	{
		std::size_t start = pos_;
		while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected a lookahead depth");
		return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
	}

	bool accept(std::string_view word)
	{
		if (text_.substr(pos_, word.size()) != word)
			return false;
		pos_ += word.size();
		return true;
	}

	[[noreturn]] void fail(const std::string& msg) const
	{
		throw CatalogError("relation spec '" + std::string(text_) + "', offset " + std::to_string(pos_) + ": " + msg);
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

/// Column of a downward (or identity) spec: id, strict sim, sim, strict trace, trace.
int down_index(const RelationSpec& d)
{
	switch (d.family) {
	case RelationFamily::Identity:
		return 0;
	case RelationFamily::DwSim:
		return d.strict ? 1 : 2;
	case RelationFamily::DwLa:
		if (d.k == 1)
			return d.strict ? 1 : 2;
		return d.strict ? 3 : 4;
	default:
		throw CatalogError("'" + to_string(d) + "' is not a downward relation");
	}
}

// Upward blocks: strict sim, sim, strict trace, trace. Rows by inducing
// relation, columns by d, both in down_index order. '-' marks reflexive
// combinations that are not strict orders.
constexpr std::array<std::array<const char*, 5>, 4> kGfpUp = {{
	{"YYYYY", "NYNNN", "NYNNN", "NNNNN", "NNNNN"},
	{"-Y-N-", "-Y-N-", "-Y-N-", "-N-N-", "-N-N-"},
	{"YYNNN", "NYNNN", "NYNNN", "NNNNN", "NNNNN"},
	{"-Y-N-", "-Y-N-", "-Y-N-", "-N-N-", "-N-N-"},
}};

constexpr const char* kGfpIdentity = "-Y-Y-";

// Nonstrict upward kernels by inducing relation.
constexpr const char* kGfqUp = "Y-N-N";

int up_block(const RelationSpec& u)
{
	bool trace = u.family == RelationFamily::UpLa && u.k > 1;
	return (trace ? 2 : 0) + (u.strict ? 0 : 1);
}

Verdict from_cell(char c)
{
	switch (c) {
	case 'Y':
		return Verdict::Yes;
	case 'N':
		return Verdict::No;
	default:
		return Verdict::Invalid;
	}
}

} // namespace

void validate_spec(const RelationSpec& spec)
{
	if (spec.family == RelationFamily::Identity && spec.strict)
		throw CatalogError("the strict identity is empty and has no use");
	if (spec.is_lookahead() && spec.k == 0)
		throw CatalogError("lookahead depth must be at least 1");
	if (spec.is_upward()) {
		if (!spec.inducing)
			throw CatalogError("upward relation without an inducing relation");
		if (spec.inducing->is_upward())
			throw CatalogError("inducing relation must be the identity or downward");
		validate_spec(*spec.inducing);
	} else if (spec.inducing) {
		throw CatalogError("only upward relations take an inducing relation");
	}
}

RelationSpec parse_spec(std::string_view text)
{
	RelationSpec s = SpecParser(text).parse();
	validate_spec(s);
	return s;
}

std::string to_string(const RelationSpec& spec)
{
	std::string out = spec.strict ? "strict-" : "";
	switch (spec.family) {
	case RelationFamily::Identity:
		out += "id";
		break;
	case RelationFamily::DwSim:
		out += "dw-sim";
		break;
	case RelationFamily::DwLa:
		out += "dw-la:" + std::to_string(spec.k);
		break;
	case RelationFamily::UpSim:
		out += "up-sim";
		break;
	case RelationFamily::UpLa:
		out += "up-la:" + std::to_string(spec.k);
		break;
	}
	if (spec.inducing)
		out += "(" + to_string(*spec.inducing) + ")";
	return out;
}

std::string to_string(Verdict v)
{
	switch (v) {
	case Verdict::Yes:
		return "yes";
	case Verdict::No:
		return "no";
	case Verdict::Invalid:
		return "invalid";
	}
	return "invalid";
}

Verdict gfp_allowed(const RelationSpec& u, const RelationSpec& d)
{
	validate_spec(u);
	validate_spec(d);
	if (u.is_downward())
		throw CatalogError("'" + to_string(u) + "' cannot compare sources; expected the identity or an upward relation");
	const int col = down_index(d);
	if (u.family == RelationFamily::Identity)
		return from_cell(kGfpIdentity[col]);
	const int row = down_index(*u.inducing);
	return from_cell(kGfpUp[up_block(u)][row][col]);
}

Verdict gfq_allowed(const RelationSpec& r)
{
	validate_spec(r);
	if (r.strict)
		return Verdict::Invalid;
	if (r.family == RelationFamily::Identity || r.is_downward())
		return Verdict::Yes;
	return from_cell(kGfqUp[down_index(*r.inducing)]);
}

} // namespace treereduce
