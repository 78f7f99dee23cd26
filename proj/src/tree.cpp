#include "treereduce/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "treereduce/error.hpp"

namespace treereduce {

std::size_t Tree::height() const
{
	std::size_t h = 0;
	for (const auto& c : children)
		h = std::max(h, c.height());
	return h + 1;
}

std::size_t Tree::size() const
{
	std::size_t s = 1;
	for (const auto& c : children)
		s += c.size();
	return s;
}

std::string Tree::to_string() const
{
	std::string out = symbol;
	if (!children.empty()) {
		out += '(';
		for (std::size_t i = 0; i < children.size(); ++i) {
			if (i > 0)
				out += ',';
			out += children[i].to_string();
		}
		out += ')';
	}
	return out;
}

std::map<NodeAddress, std::string> Tree::nodes() const
{
	std::map<NodeAddress, std::string> out;
	std::function<void(const Tree&, NodeAddress&)> walk = [&](const Tree& t, NodeAddress& addr) {
		out.emplace(addr, t.symbol);
		for (unsigned i = 0; i < t.children.size(); ++i) {
			addr.push_back(i + 1);
			walk(t.children[i], addr);
			addr.pop_back();
		}
	};
	NodeAddress root;
	walk(*this, root);
	return out;
}

namespace {

class TreeParser
{
public:
	explicit TreeParser(std::string_view text) : text_(text) { }

	Tree parse()
	{
		Tree t = parse_node();
		skip_ws();
		if (pos_ != text_.size())
			fail("trailing input");
		return t;
	}

private:
	Tree parse_node()
	{
		skip_ws();
		std::size_t start = pos_;
		while (pos_ < text_.size() && is_name_char(text_[pos_]))
			++pos_;
		if (start == pos_)
			fail("expected a symbol name");
		Tree t;
		t.symbol = std::string(text_.substr(start, pos_ - start));
		skip_ws();
		if (pos_ < text_.size() && text_[pos_] == '(') {
			++pos_;
			while (true) {
				t.children.push_back(parse_node());
				skip_ws();
				if (pos_ < text_.size() && text_[pos_] == ',') {
					++pos_;
					continue;
				}
				if (pos_ < text_.size() && text_[pos_] == ')') {
					++pos_;
					break;
				}
				fail("expected ',' or ')'");
			}
		}
		return t;
	}

	static bool is_name_char(char c)
	{
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' ||
			c == '-' || c == '$' || c == '@' || c == '{' || c == '}' || c == '[' || c == ']';
	}

	void skip_ws()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	[[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

	std::string_view text_;
	std::size_t pos_ = 0;
};

} // namespace

Tree parse_tree(std::string_view text)
{
	return TreeParser(text).parse();
}

void check_closed(const Tree& t, const RankedAlphabet& alphabet)
{
	auto id = alphabet.find(t.symbol);
	if (!id)
		throw ValidationError("symbol '" + t.symbol + "' is not in the alphabet");
	if (alphabet.rank(*id) != t.children.size()) {
		throw ValidationError("node '" + t.symbol + "' has " + std::to_string(t.children.size()) +
			" children but rank " + std::to_string(alphabet.rank(*id)));
	}
	for (const auto& c : t.children)
		check_closed(c, alphabet);
}

namespace {

std::vector<bool> derive(const TreeAutomaton& aut, const Tree& t)
{
	const auto n = aut.state_count();
	SymbolId a = *aut.alphabet().find(t.symbol);
	std::vector<bool> result(n, false);
	if (t.children.empty()) {
		for (auto id : aut.by_symbol(a))
			result[aut.transitions()[id].source] = true;
		return result;
	}

	std::vector<std::vector<bool>> sub;
	sub.reserve(t.children.size());
	for (const auto& c : t.children)
		sub.push_back(derive(aut, c));
	for (auto id : aut.by_symbol(a)) {
		const auto& tr = aut.transitions()[id];
		bool ok = true;
		for (std::size_t i = 0; i < tr.children.size() && ok; ++i)
			ok = sub[i][tr.children[i]];
		if (ok)
			result[tr.source] = true;
	}
	return result;
}

} // namespace

std::vector<StateId> derivable_states(const TreeAutomaton& aut, const Tree& t)
{
	check_closed(t, aut.alphabet());
	auto flags = derive(aut, t);
	std::vector<StateId> out;
	for (StateId q = 0; q < flags.size(); ++q) {
		if (flags[q])
			out.push_back(q);
	}
	return out;
}

bool membership(const TreeAutomaton& aut, const Tree& t)
{
	check_closed(t, aut.alphabet());
	auto flags = derive(aut, t);
	return std::any_of(aut.initial().begin(), aut.initial().end(), [&](StateId q) { return flags[q]; });
}

} // namespace treereduce
