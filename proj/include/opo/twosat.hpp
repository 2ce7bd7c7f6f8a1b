#pragma once

#include "opo/graph.hpp"

#include <optional>
#include <vector>

namespace opo {

// Literal code: 2*var for the positive literal, 2*var+1 for its negation.
struct Literal
{
	int code = 0;

	static Literal pos(int var) { return {2 * var}; }
	static Literal neg(int var) { return {2 * var + 1}; }

	int var() const { return code >> 1; }
	bool negated() const { return code & 1; }
	Literal operator~() const { return {code ^ 1}; }

	friend bool operator==(Literal, Literal) = default;
};

struct Clause
{
	Literal a;
	Literal b;
};

struct TwoSatInstance
{
	int var_count = 0;
	std::vector<Clause> clauses;

	void add(Literal a, Literal b);
};

// Implication graph + Tarjan SCC. Returns an assignment satisfying every
// clause, or nothing when some variable shares a component with its
// negation.
std::optional<std::vector<bool>> solve_2sat(const TwoSatInstance &inst);

bool satisfies(const TwoSatInstance &inst, const std::vector<bool> &assignment);

} // namespace opo
