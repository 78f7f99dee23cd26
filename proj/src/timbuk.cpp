#include "treereduce/timbuk.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "treereduce/error.hpp"

namespace treereduce {

namespace {

bool is_name_char(char c)
{
	return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
		c != ':' && c != '#';
}

/// Scanner over one line; reports 1-based columns.
class LineCursor
{
public:
	LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) { }

	void skip_ws()
	{
		while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
			++pos_;
	}

	bool at_end()
	{
		skip_ws();
		return pos_ >= line_.size();
	}

	bool peek(char c)
	{
		skip_ws();
		return pos_ < line_.size() && line_[pos_] == c;
	}

	bool peek_arrow()
	{
		skip_ws();
		return line_.substr(pos_, 2) == "->";
	}

	void expect(char c)
	{
		if (!peek(c))
			fail(std::string("expected '") + c + "'");
		++pos_;
	}

	void expect_arrow()
	{
		if (!peek_arrow())
			fail("expected '->'");
		pos_ += 2;
	}

	/// A name stops at whitespace, punctuation or the start of "->".
	std::string name()
	{
		skip_ws();
		std::size_t start = pos_;
		while (pos_ < line_.size() && is_name_char(line_[pos_]) && line_.substr(pos_, 2) != "->")
			++pos_;
		if (start == pos_)
			fail("expected a name");
		return std::string(line_.substr(start, pos_ - start));
	}

	unsigned number()
	{
		skip_ws();
		std::size_t start = pos_;
		while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected a non-negative rank");
		return static_cast<unsigned>(std::stoul(std::string(line_.substr(start, pos_ - start))));
	}

	std::size_t column()
	{
		skip_ws();
		return pos_ + 1;
	}

	[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_no_, column()); }
	[[noreturn]] void fail_at(const std::string& msg, std::size_t col) { throw ParseError(msg, line_no_, col); }

	bool starts_with_keyword(std::string_view kw)
	{
		skip_ws();
		if (line_.substr(pos_, kw.size()) != kw)
			return false;
		std::size_t end = pos_ + kw.size();
		if (end < line_.size() && !std::isspace(static_cast<unsigned char>(line_[end])))
			return false;
		pos_ = end;
		return true;
	}

private:
	std::string_view line_;
	std::size_t line_no_;
	std::size_t pos_ = 0;
};

enum class Section { Start, Ops, Automaton, States, Final, Transitions };

} // namespace

TreeAutomaton parse_timbuk(std::string_view text)
{
	RankedAlphabet alphabet;
	std::string aut_name = "A";
	std::vector<std::string> state_names;
	std::map<std::string, StateId, std::less<>> state_ids;
	std::vector<StateId> initial;
	std::vector<Transition> transitions;
	Section section = Section::Start;

	std::size_t line_no = 0;
	std::size_t begin = 0;
	while (begin <= text.size()) {
		std::size_t end = text.find('\n', begin);
		if (end == std::string_view::npos)
			end = text.size();
		std::string_view raw = text.substr(begin, end - begin);
		begin = end + 1;
		++line_no;

		if (auto hash = raw.find('#'); hash != std::string_view::npos)
			raw = raw.substr(0, hash);
		if (!raw.empty() && raw.back() == '\r')
			raw.remove_suffix(1);
		LineCursor cur(raw, line_no);
		if (cur.at_end()) {
			if (end == text.size())
				break;
			continue;
		}

		const std::size_t col = cur.column();
		if (cur.starts_with_keyword("Ops")) {
			if (section != Section::Start)
				cur.fail_at("unexpected 'Ops' section", col);
			section = Section::Ops;
			while (!cur.at_end()) {
				std::size_t sym_col = cur.column();
				std::string sym = cur.name();
				cur.expect(':');
				unsigned rank = cur.number();
				try {
					alphabet.add(sym, rank);
				} catch (const ValidationError& e) {
					cur.fail_at(e.what(), sym_col);
				}
			}
		} else if (cur.starts_with_keyword("Automaton")) {
			if (section == Section::Start)
				cur.fail_at("'Automaton' header before 'Ops'", col);
			if (section != Section::Ops)
				cur.fail_at("duplicate automaton header", col);
			section = Section::Automaton;
			aut_name = cur.name();
			if (!cur.at_end())
				cur.fail("unexpected text after automaton name");
		} else if (cur.starts_with_keyword("States")) {
			if (section != Section::Automaton)
				cur.fail_at("unexpected 'States' section", col);
			section = Section::States;
			while (!cur.at_end()) {
				std::size_t st_col = cur.column();
				std::string st = cur.name();
				// libvata writes optional ":0" state annotations
				if (cur.peek(':')) {
					cur.expect(':');
					cur.number();
				}
				auto id = static_cast<StateId>(state_names.size() + 1);
				if (!state_ids.emplace(st, id).second)
					cur.fail_at("duplicate state '" + st + "'", st_col);
				state_names.push_back(st);
			}
		} else if (cur.starts_with_keyword("Final")) {
			if (!cur.starts_with_keyword("States"))
				cur.fail("expected 'Final States'");
			if (section != Section::States)
				cur.fail_at("unexpected 'Final States' section", col);
			section = Section::Final;
			while (!cur.at_end()) {
				std::size_t st_col = cur.column();
				std::string st = cur.name();
				auto it = state_ids.find(st);
				if (it == state_ids.end())
					cur.fail_at("undeclared state '" + st + "'", st_col);
				initial.push_back(it->second);
			}
		} else if (cur.starts_with_keyword("Transitions")) {
			if (section != Section::Final)
				cur.fail_at("unexpected 'Transitions' section", col);
			section = Section::Transitions;
			if (!cur.at_end())
				cur.fail("unexpected text after 'Transitions'");
		} else {
			if (section != Section::Transitions)
				cur.fail_at("expected a section header", col);

			std::size_t sym_col = cur.column();
			std::string sym = cur.name();
			auto sym_id = alphabet.find(sym);
			if (!sym_id)
				cur.fail_at("undeclared symbol '" + sym + "'", sym_col);

			std::vector<std::pair<std::string, std::size_t>> args;
			if (cur.peek('(')) {
				cur.expect('(');
				do {
					std::size_t arg_col = cur.column();
					args.emplace_back(cur.name(), arg_col);
				} while (cur.peek(',') && (cur.expect(','), true));
				cur.expect(')');
			}
			cur.expect_arrow();
			std::size_t tgt_col = cur.column();
			std::string target = cur.name();
			if (!cur.at_end())
				cur.fail("unexpected text after rule");

			const unsigned rank = alphabet.rank(*sym_id);
			if (rank != args.size()) {
				cur.fail_at("arity mismatch: symbol '" + sym + "' has rank " + std::to_string(rank) +
					" but is applied to " + std::to_string(args.size()) + " states", sym_col);
			}
			auto resolve = [&](const std::string& st, std::size_t at) {
				auto it = state_ids.find(st);
				if (it == state_ids.end())
					cur.fail_at("undeclared state '" + st + "'", at);
				return it->second;
			};

			Transition t{resolve(target, tgt_col), *sym_id, {}};
			if (args.empty()) {
				t.children.push_back(kFinalState);
			} else {
				for (const auto& [st, at] : args)
					t.children.push_back(resolve(st, at));
			}
			transitions.push_back(std::move(t));
		}

		if (end == text.size())
			break;
	}

	if (section != Section::Transitions)
		throw ParseError("incomplete automaton: missing section headers", line_no, 1);

	return TreeAutomaton::create(std::move(alphabet), std::move(state_names), std::move(initial),
		std::move(transitions), std::move(aut_name));
}

std::string serialize_timbuk(const TreeAutomaton& aut)
{
	std::ostringstream out;
	for (const auto& c : aut.comments())
		out << "# " << c << '\n';

	out << "Ops";
	for (const auto& s : aut.alphabet().symbols())
		out << ' ' << s.name << ':' << s.rank;
	out << '\n';
	out << "Automaton " << aut.name() << '\n';
	out << "States";
	for (StateId q = 1; q < aut.state_count(); ++q)
		out << ' ' << aut.state_name(q);
	out << '\n';
	out << "Final States";
	for (StateId q : aut.initial())
		out << ' ' << aut.state_name(q);
	out << '\n';
	out << "Transitions\n";

	std::vector<std::string> rules;
	rules.reserve(aut.transitions().size());
	for (const auto& t : aut.transitions()) {
		std::string rule = aut.alphabet().name(t.symbol);
		if (!t.is_leaf_rule()) {
			rule += '(';
			for (std::size_t i = 0; i < t.children.size(); ++i) {
				if (i > 0)
					rule += ',';
				rule += aut.state_name(t.children[i]);
			}
			rule += ')';
		}
		rule += " -> ";
		rule += aut.state_name(t.source);
		rules.push_back(std::move(rule));
	}
	std::sort(rules.begin(), rules.end());
	for (const auto& r : rules)
		out << r << '\n';
	return out.str();
}

TreeAutomaton read_timbuk_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error("cannot open '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_timbuk(buf.str());
}

void write_timbuk_file(const TreeAutomaton& aut, const std::string& path)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw Error("cannot write '" + path + "'");
	out << serialize_timbuk(aut);
}

} // namespace treereduce
