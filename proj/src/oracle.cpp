#include "opo/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opo {

GuardExceeded::GuardExceeded(int edges, int guard)
    : std::runtime_error("exhaustive search over " + std::to_string(edges) +
                         " edges exceeds guard " + std::to_string(guard) +
                         "; use the polynomial recognizer"),
      edges_(edges), guard_(guard)
{}

bool verify_1perfect(const Orientation &d)
{
	const Graph &g = d.base();
	const int words = g.words();
	for (Vertex v = 0; v < g.order(); ++v) {
		const std::uint64_t *out = d.out_row(v);
		bool ok = true;
		bits::for_each(out, words, [&](int u) {
			if (!ok)
				return;
			const std::uint64_t *nu = g.row(u);
			for (int w = 0; w < words; ++w) {
				std::uint64_t rest = out[w] & ~nu[w];
				if (w == (u >> 6))
					rest &= ~(std::uint64_t{1} << (u & 63));
				if (rest) {
					ok = false;
					return;
				}
			}
		});
		if (!ok)
			return false;
	}
	return true;
}

namespace {

void check_guard(const Graph &g, int guard)
{
	if (guard > 62)
		guard = 62;
	if (g.size() > guard)
		throw GuardExceeded(g.size(), guard);
}

// Scratch state for evaluating masks without building Orientation values.
class MaskKernel
{
  public:
	explicit MaskKernel(const Graph &g)
	    : g_(g), words_(g.words()), edges_(g.edges()), out_(std::size_t(g.order()) * words_)
	{}

	bool perfect(std::uint64_t mask)
	{
		std::fill(out_.begin(), out_.end(), 0);
		for (std::size_t i = 0; i < edges_.size(); ++i) {
			const Edge &e = edges_[i];
			if ((mask >> i) & 1u)
				bits::set(out_.data() + std::size_t(e.u) * words_, e.v);
			else
				bits::set(out_.data() + std::size_t(e.v) * words_, e.u);
		}
		for (Vertex v = 0; v < g_.order(); ++v) {
			const std::uint64_t *out = out_.data() + std::size_t(v) * words_;
			for (int w = 0; w < words_; ++w) {
				std::uint64_t x = out[w];
				while (x) {
					int u = w * 64 + __builtin_ctzll(x);
					x &= x - 1;
					const std::uint64_t *nu = g_.row(u);
					for (int k = 0; k < words_; ++k) {
						std::uint64_t rest = out[k] & ~nu[k];
						if (k == (u >> 6))
							rest &= ~(std::uint64_t{1} << (u & 63));
						if (rest)
							return false;
					}
				}
			}
		}
		return true;
	}

  private:
	const Graph &g_;
	int words_;
	std::vector<Edge> edges_;
	std::vector<std::uint64_t> out_;
};

} // namespace

std::optional<std::uint64_t> first_1perfect_mask_serial(const Graph &g, int guard)
{
	check_guard(g, guard);
	MaskKernel kernel(g);
	const std::uint64_t total = std::uint64_t{1} << g.size();
	for (std::uint64_t mask = 0; mask < total; ++mask)
		if (kernel.perfect(mask))
			return mask;
	return std::nullopt;
}

std::optional<std::uint64_t> first_1perfect_mask_parallel(const Graph &g, int guard)
{
	check_guard(g, guard);
	const std::uint64_t total = std::uint64_t{1} << g.size();
	constexpr std::uint64_t block = 4096;
	const std::int64_t blocks = std::int64_t((total + block - 1) / block);
	std::atomic<std::uint64_t> best{total};

#pragma omp parallel
	{
		MaskKernel kernel(g);
#pragma omp for schedule(dynamic, 1)
		for (std::int64_t b = 0; b < blocks; ++b) {
			std::uint64_t lo = std::uint64_t(b) * block;
			if (lo >= best.load(std::memory_order_relaxed))
				continue;
			std::uint64_t hi = std::min(total, lo + block);
			for (std::uint64_t mask = lo; mask < hi; ++mask) {
				if (kernel.perfect(mask)) {
					std::uint64_t cur = best.load();
					while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
					}
					break;
				}
			}
		}
	}
	if (best.load() == total)
		return std::nullopt;
	return best.load();
}

std::optional<Orientation> is_1po_bruteforce(const Graph &g, int guard)
{
	auto mask = first_1perfect_mask_parallel(g, guard);
	if (!mask)
		return std::nullopt;
	return Orientation::from_mask(g, *mask);
}

void for_each_1perfect_orientation(const Graph &g, const std::function<bool(const Orientation &)> &visit,
                                   int guard)
{
	check_guard(g, guard);
	MaskKernel kernel(g);
	const std::uint64_t total = std::uint64_t{1} << g.size();
	for (std::uint64_t mask = 0; mask < total; ++mask)
		if (kernel.perfect(mask) && !visit(Orientation::from_mask(g, mask)))
			return;
}

std::vector<Orientation> all_1perfect_orientations(const Graph &g, int guard)
{
	std::vector<Orientation> out;
	for_each_1perfect_orientation(
	    g,
	    [&](const Orientation &d) {
		    out.push_back(d);
		    return true;
	    },
	    guard);
	return out;
}

bool is_cycle_cyclic(const Orientation &d, const std::vector<Vertex> &cycle)
{
	const std::size_t k = cycle.size();
	for (std::size_t i = 0; i < k; ++i) {
		Vertex prev = cycle[(i + k - 1) % k], cur = cycle[i], next = cycle[(i + 1) % k];
		int outs = int(d.has_arc(cur, prev)) + int(d.has_arc(cur, next));
		if (outs != 1)
			return false;
	}
	return true;
}

bool check_chordless_cycles_cyclic(const Orientation &d)
{
	for (const auto &cycle : enumerate_chordless_cycles(d.base(), 4))
		if (!is_cycle_cyclic(d, cycle))
			return false;
	return true;
}

std::optional<Orientation> exists_orientation_all_c4_cyclic(const Graph &g, int guard)
{
	check_guard(g, guard);
	const std::vector<Edge> es = g.edges();
	auto index_of = [&](Vertex a, Vertex b) {
		Edge e(a, b);
		return int(std::lower_bound(es.begin(), es.end(), e) - es.begin());
	};

	// Each induced C4 as its four edge indices plus the "forward" sense of
	// each edge along the cycle (true when the cycle runs lower->higher).
	struct Square
	{
		int edge[4];
		bool forward[4];
		int lowest;
	};
	std::vector<Square> squares;
	std::vector<char> relevant(es.size(), 0);
	for (const auto &c : enumerate_chordless_cycles(g, 4)) {
		if (c.size() != 4)
			continue;
		Square s{};
		s.lowest = int(es.size());
		for (int i = 0; i < 4; ++i) {
			Vertex a = c[i], b = c[(i + 1) % 4];
			s.edge[i] = index_of(a, b);
			s.forward[i] = a < b;
			s.lowest = std::min(s.lowest, s.edge[i]);
			relevant[s.edge[i]] = 1;
		}
		squares.push_back(s);
	}
	// Squares are checked once their lowest-index edge is set, which is
	// the last one assigned when branching from high to low indices.
	std::vector<std::vector<int>> closing(es.size());
	for (std::size_t i = 0; i < squares.size(); ++i)
		closing[squares[i].lowest].push_back(int(i));

	std::vector<bool> bit(es.size(), false);
	auto square_ok = [&](const Square &s) {
		// Cyclic iff all four edges agree with the same traversal sense.
		bool along = bit[s.edge[0]] == s.forward[0];
		for (int i = 1; i < 4; ++i)
			if ((bit[s.edge[i]] == s.forward[i]) != along)
				return false;
		return true;
	};

	std::vector<int> order;
	for (int i = int(es.size()) - 1; i >= 0; --i)
		if (relevant[i])
			order.push_back(i);

	auto dfs = [&](auto &&self, std::size_t depth) -> bool {
		if (depth == order.size())
			return true;
		int e = order[depth];
		for (bool value : {false, true}) {
			bit[e] = value;
			bool ok = true;
			for (int s : closing[e])
				if (!square_ok(squares[s])) {
					ok = false;
					break;
				}
			if (ok && self(self, depth + 1))
				return true;
		}
		bit[e] = false;
		return false;
	};
	if (!dfs(dfs, 0))
		return std::nullopt;
	return Orientation::from_edge_bits(g, bit);
}

} // namespace opo
