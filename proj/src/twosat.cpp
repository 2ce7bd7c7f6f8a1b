#include "opo/twosat.hpp"

#include <algorithm>
#include <stdexcept>

namespace opo {

void TwoSatInstance::add(Literal a, Literal b)
{
	if (a.var() < 0 || a.var() >= var_count || b.var() < 0 || b.var() >= var_count)
		throw std::out_of_range("2-SAT literal references an undeclared variable");
	clauses.push_back({a, b});
}

namespace {

// Iterative Tarjan. Components are numbered in the order they are
// completed, which is a reverse topological order of the condensation.
class Tarjan
{
  public:
	explicit Tarjan(const std::vector<std::vector<int>> &adj)
	    : adj_(adj), index_(adj.size(), -1), low_(adj.size(), 0), on_stack_(adj.size(), 0),
	      comp_(adj.size(), -1)
	{
		for (int v = 0; v < int(adj.size()); ++v)
			if (index_[v] < 0)
				run(v);
	}

	const std::vector<int> &components() const { return comp_; }

  private:
	void run(int root)
	{
		struct Frame
		{
			int v;
			std::size_t next;
		};
		std::vector<Frame> frames{{root, 0}};
		visit(root);
		while (!frames.empty()) {
			Frame &f = frames.back();
			if (f.next < adj_[f.v].size()) {
				int w = adj_[f.v][f.next++];
				if (index_[w] < 0) {
					visit(w);
					frames.push_back({w, 0});
				} else if (on_stack_[w]) {
					low_[f.v] = std::min(low_[f.v], index_[w]);
				}
				continue;
			}
			int v = f.v;
			frames.pop_back();
			if (!frames.empty())
				low_[frames.back().v] = std::min(low_[frames.back().v], low_[v]);
			if (low_[v] == index_[v]) {
				int w;
				do {
					w = stack_.back();
					stack_.pop_back();
					on_stack_[w] = 0;
					comp_[w] = count_;
				} while (w != v);
				++count_;
			}
		}
	}

	void visit(int v)
	{
		index_[v] = low_[v] = counter_++;
		stack_.push_back(v);
		on_stack_[v] = 1;
	}

	const std::vector<std::vector<int>> &adj_;
	std::vector<int> index_, low_;
	std::vector<char> on_stack_;
	std::vector<int> comp_;
	std::vector<int> stack_;
	int counter_ = 0;
	int count_ = 0;
};

} // namespace

std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance &inst)
{
	std::vector<std::vector<int>> adj(2 * std::size_t(inst.var_count));
	for (const Clause &c : inst.clauses) {
		// (a or b) == (!a -> b) and (!b -> a)
		adj[(~c.a).code].push_back(c.b.code);
		adj[(~c.b).code].push_back(c.a.code);
	}
	Tarjan t(adj);
	const auto &comp = t.components();
	std::vector<bool> value(inst.var_count);
	for (int x = 0; x < inst.var_count; ++x) {
		int p = comp[Literal::pos(x).code], n = comp[Literal::neg(x).code];
		if (p == n)
			return std::nullopt;
		// The literal whose component comes later topologically is true.
		value[x] = p < n;
	}
	return value;
}

bool satisfies(const TwoSatInstance &inst, const std::vector<bool> &assignment)
{
	if (int(assignment.size()) != inst.var_count)
		return false;
	auto holds = [&](Literal l) { return assignment[l.var()] != l.negated(); };
	return std::all_of(inst.clauses.begin(), inst.clauses.end(),
	                   [&](const Clause &c) { return holds(c.a) || holds(c.b); });
}

} // namespace opo
