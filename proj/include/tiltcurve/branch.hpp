#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tube.hpp"

namespace tilt {

/* A connected branch inside one tube: a wing root together with all chosen
   summands of its wing, the root included. */
struct BranchComponent {
	TubeCoord root;
	std::vector<TubeCoord> summands;
};

/* A branch sheaf: connected branches grouped by point label. */
struct BranchSheaf {
	std::map<std::string, std::vector<BranchComponent>> by_point;

	bool empty() const {
		for (const auto& [pt, comps] : by_point)
			if (!comps.empty()) return false;
		return true;
	}
};

inline std::vector<Segment> branch_segments(int p, const std::vector<BranchComponent>& comps) {
	std::vector<Segment> segs;
	for (const auto& c : comps) segs.push_back(wing_segment(p, c.root));
	return segs;
}

/* All connected branches with the given wing root, each a set of summands
   containing the root. Splitting at the socle length s of the mono-side
   subwing gives the Catalan recursion. */
inline std::vector<std::vector<TubeCoord>> enumerate_connected(int p, TubeCoord root) {
	root = tube_normal(p, root);
	if (root.n < 1 || root.n > p - 1) throw error("branch root length must be in [1, p-1]");
	if (root.n == 1) return {{root}};
	std::vector<std::vector<TubeCoord>> out;
	for (long long s = 0; s < root.n; ++s) {
		std::vector<std::vector<TubeCoord>> left{{}}, right{{}};
		if (s > 0) left = enumerate_connected(p, TubeCoord{root.j, s});
		if (root.n - 1 - s > 0)
			right = enumerate_connected(p, TubeCoord{mod_norm(root.j - s - 1, p), root.n - 1 - s});
		for (const auto& l : left)
			for (const auto& r : right) {
				std::vector<TubeCoord> b{root};
				b.insert(b.end(), l.begin(), l.end());
				b.insert(b.end(), r.begin(), r.end());
				out.push_back(std::move(b));
			}
	}
	return out;
}

/* Validation of one tube's branch data: summands lie in their root's wing,
   contain the root, are pairwise rigid and counting-correct (the wing of each
   summand W contains exactly len(W) summands of the branch), and the wings of
   distinct components are pairwise non-adjacent. */
inline void validate_branch(int p, const std::vector<BranchComponent>& comps) {
	if (!nonadjacent_check(p, branch_segments(p, comps)))
		throw error("branch wings are adjacent or overflow the tube");
	for (const auto& c : comps) {
		TubeCoord root = tube_normal(p, c.root);
		std::vector<TubeCoord> sum;
		for (const auto& w : c.summands) sum.push_back(tube_normal(p, w));
		if (static_cast<long long>(sum.size()) != root.n)
			throw error("connected branch must have exactly len(root) summands");
		bool has_root = false;
		for (const auto& w : sum) {
			if (w == root) has_root = true;
			if (!in_wing(p, root, w)) throw error("branch summand outside the wing of its root");
		}
		if (!has_root) throw error("connected branch must contain its root");
		for (size_t i = 0; i < sum.size(); ++i)
			for (size_t k = 0; k < sum.size(); ++k) {
				if (i == k) continue;
				if (sum[i] == sum[k]) throw error("branch summands must be distinct");
				if (ext_dim(p, sum[i], sum[k]) != 0) throw error("branch summands must be rigid");
			}
		for (const auto& w : sum) {
			long long inside = 0;
			for (const auto& v : sum)
				if (in_wing(p, w, v)) ++inside;
			if (inside != w.n) throw error("branch fails the wing counting condition");
		}
	}
}

/* All branch data in a tube of rank p: every non-adjacent family of wing
   roots combined with every connected branch on each root. Components are
   listed with root starts increasing. */
inline std::vector<std::vector<BranchComponent>> enumerate_branches(int p) {
	std::vector<Segment> roots;
	for (int j = 0; j < p; ++j)
		for (int l = 1; l <= p - 1; ++l) roots.push_back(Segment{j, l});
	std::vector<std::vector<Segment>> families{{}};
	/* families of non-adjacent roots, kept sorted by start index */
	auto grow = [&](auto&& self, std::vector<Segment> cur, size_t next) -> void {
		for (size_t i = next; i < roots.size(); ++i) {
			std::vector<Segment> trial = cur;
			trial.push_back(roots[i]);
			if (!nonadjacent_check(p, trial)) continue;
			families.push_back(trial);
			self(self, trial, i + 1);
		}
	};
	if (p >= 2) grow(grow, {}, 0);
	std::vector<std::vector<BranchComponent>> out;
	for (const auto& fam : families) {
		std::vector<std::vector<std::vector<TubeCoord>>> choices;
		for (const auto& seg : fam)
			choices.push_back(enumerate_connected(p, TubeCoord{seg.start, seg.len}));
		std::vector<size_t> idx(fam.size(), 0);
		while (true) {
			std::vector<BranchComponent> comps;
			for (size_t i = 0; i < fam.size(); ++i)
				comps.push_back(BranchComponent{TubeCoord{fam[i].start, fam[i].len}, choices[i][idx[i]]});
			out.push_back(comps);
			size_t carry = 0;
			while (carry < idx.size()) {
				if (++idx[carry] < choices[carry].size()) break;
				idx[carry] = 0;
				++carry;
			}
			if (carry == idx.size()) break;
		}
	}
	return out;
}

/* Interior undercut of a connected branch C: the wing objects U of the root's
   wing with Hom(s, U) = 0 for every summand s of C. The exterior variant runs
   over the tau-shifted wing instead. */
inline std::vector<TubeCoord> undercut(int p, const BranchComponent& c, bool interior = true) {
	TubeCoord base = tube_normal(p, c.root);
	if (!interior) base = tau_shift(p, base);
	std::vector<TubeCoord> out;
	for (const auto& u : wing_of(p, base)) {
		bool ok = true;
		for (const auto& s : c.summands)
			if (hom_dim(p, tube_normal(p, s), u) != 0) { ok = false; break; }
		if (ok) out.push_back(u);
	}
	return out;
}

inline std::vector<TubeCoord> undercut_union(int p, const std::vector<BranchComponent>& comps,
                                             bool interior = true) {
	std::vector<TubeCoord> out;
	for (const auto& c : comps) {
		auto u = undercut(p, c, interior);
		out.insert(out.end(), u.begin(), u.end());
	}
	return out;
}

/* R_x of the branch inside its tube. */
inline std::set<int> branch_rx(int p, const std::vector<BranchComponent>& comps) {
	return rx_set(p, branch_segments(p, comps));
}

}  // namespace tilt
