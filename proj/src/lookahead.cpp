#include "treereduce/lookahead.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "treereduce/error.hpp"

namespace treereduce {

namespace {

using Family = std::vector<BitRow>;

/// Keeps only the subset-minimal members.
void insert_minimal(Family& fam, BitRow set)
{
	for (const auto& e : fam) {
		if (e.is_subset_of(set))
			return;
	}
	fam.erase(std::remove_if(fam.begin(), fam.end(), [&](const BitRow& e) { return set.is_subset_of(e); }),
		fam.end());
	fam.push_back(std::move(set));
}

/**
 * Downward game for one refinement round against a fixed candidate L.
 *
 * families(s, h) lists the minimal sets of states from which Duplicator beats
 * some Spoiler run from s of depth at most h. Spoiler picks the run, so only
 * the smallest answer sets matter.
 */
class DownwardRound
{
public:
	DownwardRound(const TreeAutomaton& aut, const Relation& cand, unsigned k, bool reverse,
		const std::vector<std::vector<std::vector<std::uint32_t>>>& by_first)
		: aut_(aut), cand_(cand), k_(k), reverse_(reverse), by_first_(by_first),
		memo_(aut.state_count() * k), ready_(aut.state_count() * k, false)
	{ }

	/// New row of q: states r that survive every depth-k Spoiler move from q.
	BitRow root_row(StateId q)
	{
		BitRow row = cand_.row(q);
		for_each_move(q, k_, [&](const BitRow& answer) {
			row &= answer;
			return row.any();
		});
		return row;
	}

private:
	/// Calls @p fn with match(symbol, X_1..X_n) for every transition of s and every
	/// combination of child families at depth h-1. Stops early when fn returns false.
	void for_each_move(StateId s, unsigned h, const std::function<bool(const BitRow&)>& fn)
	{
		const auto& delta = aut_.transitions();
		auto out = aut_.outgoing(s);
		if (reverse_)
			std::reverse(out.begin(), out.end());
		for (auto tid : out) {
			const auto& t = delta[tid];
			std::vector<const Family*> child_fams;
			child_fams.reserve(t.children.size());
			for (StateId c : t.children)
				child_fams.push_back(&families(c, h - 1));

			std::vector<std::size_t> pick(t.children.size(), 0);
			while (true) {
				if (!fn(match(t.symbol, child_fams, pick)))
					return;
				std::size_t i = 0;
				for (; i < pick.size(); ++i) {
					if (++pick[i] < child_fams[i]->size())
						break;
					pick[i] = 0;
				}
				if (i == pick.size())
					break;
			}
		}
	}

	const Family& families(StateId s, unsigned h)
	{
		const std::size_t key = static_cast<std::size_t>(s) * k_ + h;
		if (ready_[key])
			return memo_[key];

		Family fam;
		if (h == 0 || aut_.outgoing(s).empty()) {
			fam.push_back(cand_.row(s));
		} else {
			for_each_move(s, h, [&](const BitRow& answer) {
				insert_minimal(fam, cand_.row(s) | answer);
				return true;
			});
		}
		memo_[key] = std::move(fam);
		ready_[key] = true;
		return memo_[key];
	}

	BitRow match(SymbolId a, const std::vector<const Family*>& fams, const std::vector<std::size_t>& pick) const
	{
		const auto& delta = aut_.transitions();
		BitRow out(aut_.state_count());
		const BitRow& first = (*fams[0])[pick[0]];
		for (auto c = first.find_first(); c != BitRow::npos; c = first.find_next(c)) {
			for (auto tid : by_first_[a][c]) {
				const auto& t = delta[tid];
				bool ok = true;
				for (std::size_t i = 1; i < t.children.size() && ok; ++i)
					ok = (*fams[i])[pick[i]].test(t.children[i]);
				if (ok)
					out.set(t.source);
			}
		}
		return out;
	}

	const TreeAutomaton& aut_;
	const Relation& cand_;
	unsigned k_;
	bool reverse_;
	const std::vector<std::vector<std::vector<std::uint32_t>>>& by_first_;
	std::vector<Family> memo_;
	std::vector<bool> ready_;
};

struct UpKey
{
	StateId state;
	unsigned depth;
	BitRow reach;

	bool operator==(const UpKey&) const = default;
};

struct UpKeyHash
{
	std::size_t operator()(const UpKey& key) const
	{
		std::size_t h = std::hash<BitRow>()(key.reach);
		return h ^ (static_cast<std::size_t>(key.state) * 0x9e3779b97f4a7c15ULL + key.depth);
	}
};

/**
 * Upward game for one refinement round. Spoiler walks up from q for at most
 * k steps; reach holds every state Duplicator can stand on while mirroring
 * that path. She wins once some reachable state is related to Spoiler's.
 */
class UpwardRound
{
public:
	UpwardRound(const TreeAutomaton& aut, const Relation& cand, const Relation& side, unsigned k, bool reverse)
		: aut_(aut), cand_(cand), side_(side), k_(k), reverse_(reverse)
	{ }

	bool holds(StateId q, StateId r)
	{
		BitRow start(aut_.state_count());
		start.set(r);
		return wins(q, 0, std::move(start));
	}

private:
	bool wins(StateId s, unsigned depth, BitRow reach)
	{
		if (depth >= 1 && reach.intersects(cand_.row(s)))
			return true;
		if (depth == k_)
			return false;
		const auto& parents = aut_.parents(s);
		if (parents.empty())
			return depth == 0;

		UpKey key{s, depth, reach};
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;

		const auto& delta = aut_.transitions();
		bool result = true;
		const std::size_t count = parents.size();
		for (std::size_t idx = 0; idx < count && result; ++idx) {
			const auto [tid, pos] = parents[reverse_ ? count - 1 - idx : idx];
			const auto& t = delta[tid];
			const bool needs_initial = aut_.is_initial(t.source);

			BitRow next(aut_.state_count());
			for (auto r = reach.find_first(); r != BitRow::npos; r = reach.find_next(r)) {
				for (auto [tid2, pos2] : aut_.parents(static_cast<StateId>(r))) {
					if (pos2 != pos)
						continue;
					const auto& u = delta[tid2];
					if (u.symbol != t.symbol || (needs_initial && !aut_.is_initial(u.source)))
						continue;
					bool sides = true;
					for (std::size_t j = 0; j < t.children.size() && sides; ++j) {
						if (j != pos)
							sides = side_.test(t.children[j], u.children[j]);
					}
					if (sides)
						next.set(u.source);
				}
			}
			result = next.any() && wins(t.source, depth + 1, std::move(next));
		}
		memo_.emplace(std::move(key), result);
		return result;
	}

	const TreeAutomaton& aut_;
	const Relation& cand_;
	const Relation& side_;
	unsigned k_;
	bool reverse_;
	std::unordered_map<UpKey, bool, UpKeyHash> memo_;
};

} // namespace

void check_config(const GameConfig& cfg)
{
	if (cfg.k == 0)
		throw PreconditionError("lookahead must be at least 1");
	if (cfg.k > cfg.max_k)
		throw PreconditionError("lookahead " + std::to_string(cfg.k) + " exceeds the cap of " +
			std::to_string(cfg.max_k));
	if (cfg.direction == Direction::Downward && cfg.inducing)
		throw PreconditionError("a downward game takes no inducing relation");
	if (cfg.direction == Direction::Upward && !cfg.inducing)
		throw PreconditionError("an upward game needs an inducing relation");
}

Relation lookahead_dw(const TreeAutomaton& aut, const GameConfig& cfg)
{
	check_config(cfg);
	if (cfg.direction != Direction::Downward)
		throw PreconditionError("expected a downward game");

	const auto n = aut.state_count();
	const auto& delta = aut.transitions();
	std::vector<std::vector<std::vector<std::uint32_t>>> by_first(
		aut.alphabet().size(), std::vector<std::vector<std::uint32_t>>(n));
	for (std::uint32_t tid = 0; tid < delta.size(); ++tid)
		by_first[delta[tid].symbol][delta[tid].children[0]].push_back(tid);

	Relation cand = Relation::full(n);
	for (StateId r = 1; r < n; ++r)
		cand.reset(kFinalState, r);

	while (true) {
		DownwardRound round(aut, cand, cfg.k, cfg.reverse_spoiler_order, by_first);
		Relation next(n);
		next.row(kFinalState) = cand.row(kFinalState);
		for (StateId q = 1; q < n; ++q)
			next.row(q) = round.root_row(q);
		if (next == cand)
			return cand;
		cand = std::move(next);
	}
}

Relation lookahead_dw(const TreeAutomaton& aut, unsigned k)
{
	GameConfig cfg;
	cfg.k = k;
	return lookahead_dw(aut, cfg);
}

Relation lookahead_dw_closed(const TreeAutomaton& aut, unsigned k)
{
	return transitive_closure(lookahead_dw(aut, k));
}

Relation lookahead_up(const TreeAutomaton& aut, const GameConfig& cfg)
{
	check_config(cfg);
	if (cfg.direction != Direction::Upward)
		throw PreconditionError("expected an upward game");
	const auto n = aut.state_count();
	if (cfg.inducing->size() != n)
		throw PreconditionError("inducing relation has the wrong dimension");
	const Relation side = transitive_closure(*cfg.inducing);

	Relation cand(n);
	for (StateId q = 0; q < n; ++q) {
		for (StateId r = 0; r < n; ++r) {
			if ((q != kFinalState || r == kFinalState) && (!aut.is_initial(q) || aut.is_initial(r)))
				cand.set(q, r);
		}
	}

	while (true) {
		UpwardRound round(aut, cand, side, cfg.k, cfg.reverse_spoiler_order);
		Relation next(n);
		for (StateId q = 0; q < n; ++q) {
			const auto& row = cand.row(q);
			for (auto r = row.find_first(); r != BitRow::npos; r = row.find_next(r)) {
				if (round.holds(q, static_cast<StateId>(r)))
					next.set(q, r);
			}
		}
		if (next == cand)
			return cand;
		cand = std::move(next);
	}
}

Relation lookahead_up(const TreeAutomaton& aut, unsigned k, const Relation& inducing)
{
	GameConfig cfg;
	cfg.k = k;
	cfg.direction = Direction::Upward;
	cfg.inducing = inducing;
	return lookahead_up(aut, cfg);
}

Relation lookahead_up_closed(const TreeAutomaton& aut, unsigned k, const Relation& inducing)
{
	return transitive_closure(lookahead_up(aut, k, inducing));
}

} // namespace treereduce
