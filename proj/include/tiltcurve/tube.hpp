#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace tilt {

/* Length marker for Pruefer objects. */
constexpr long long TUBE_INF = -1;

/* The object tau^j S [n] in a stable tube: socle tau^j S, length n.
   Its composition factors from socle to top are tau^j S, tau^{j-1} S, ...,
   tau^{j-n+1} S; the top is tau^{j-n+1} S. n = TUBE_INF marks the Pruefer
   object tau^j S [infty]. */
struct TubeCoord {
	int j = 0;
	long long n = 1;

	bool is_pruefer() const { return n == TUBE_INF; }
	bool operator==(const TubeCoord& o) const { return j == o.j && n == o.n; }
	bool operator<(const TubeCoord& o) const { return j != o.j ? j < o.j : n < o.n; }
};

inline void check_tube_coord(int p, const TubeCoord& t) {
	if (p < 1) throw error("tube rank must be positive");
	if (!t.is_pruefer() && t.n < 1) throw error("tube object length must be positive");
}

inline TubeCoord tube_normal(int p, const TubeCoord& t) {
	check_tube_coord(p, t);
	return TubeCoord{mod_norm(t.j, p), t.n};
}

/* tau shifts the socle index up by one. */
inline TubeCoord tau_shift(int p, const TubeCoord& t, long long k = 1) {
	return tube_normal(p, TubeCoord{mod_norm(t.j + k, p), t.n});
}

/* Hom(X, Y) as a dimension over End(S); multiply by d_x for base field
   dimensions. For finite X = tau^a S[m], Y = tau^b S[n] this counts
   u in [max(0, m-n), m-1] with u = a-b (mod p). A Pruefer Y drops the lower
   bound; a Pruefer X has no maps to finite objects. Hom between two Pruefer
   objects is infinite dimensional and rejected. */
inline long long hom_dim(int p, TubeCoord X, TubeCoord Y) {
	X = tube_normal(p, X);
	Y = tube_normal(p, Y);
	if (X.is_pruefer() && Y.is_pruefer())
		throw error("Hom between two Pruefer objects is not finite dimensional");
	if (X.is_pruefer()) return 0;
	long long lo = Y.is_pruefer() ? 0 : std::max<long long>(0, X.n - Y.n);
	long long hi = X.n - 1;
	if (lo > hi) return 0;
	int r = mod_norm(X.j - Y.j, p);
	/* count u in [lo, hi] with u = r (mod p) */
	long long first = lo + mod_norm(r - lo, p);
	if (first > hi) return 0;
	return (hi - first) / p + 1;
}

/* Ext^1(X, Y) = Hom(Y, tau X) by Serre duality in the tube. Pruefer objects
   are injective, so Ext^1(-, Pruefer) = 0; a Pruefer first argument is
   rejected (the dual formula would need the adic object). */
inline long long ext_dim(int p, TubeCoord X, TubeCoord Y) {
	X = tube_normal(p, X);
	Y = tube_normal(p, Y);
	if (X.is_pruefer())
		throw error("ext_dim with Pruefer first argument is not supported");
	if (Y.is_pruefer()) return 0;
	return hom_dim(p, Y, tau_shift(p, X));
}

/* Level = length from the top ray; colevel = level - length. Two finite
   objects admit an epi X -> Z iff same top and len Z <= len X, and a mono
   Z -> Y iff same socle and len Z <= len Y. */
inline int tube_top(int p, const TubeCoord& t) {
	if (t.is_pruefer()) throw error("Pruefer object has no top");
	return mod_norm(t.j - t.n + 1, p);
}

/* The wing rooted in tau^a S[r], r <= p-1: all tau^{a-s} S[l] with s >= 0,
   l >= 1, s + l <= r. Ordered by socle shift s, then length l. */
inline std::vector<TubeCoord> wing_of(int p, TubeCoord root) {
	root = tube_normal(p, root);
	if (root.is_pruefer()) throw error("wing root must be finite");
	if (root.n > p - 1) throw error("wing root length must be at most p-1");
	std::vector<TubeCoord> out;
	for (long long s = 0; s < root.n; ++s)
		for (long long l = 1; s + l <= root.n; ++l)
			out.push_back(TubeCoord{mod_norm(root.j - s, p), l});
	return out;
}

inline bool in_wing(int p, const TubeCoord& root, const TubeCoord& w) {
	if (w.is_pruefer()) return false;
	long long s = mod_norm(root.j - w.j, p);
	return s + w.n <= root.n;
}

/* A cyclic segment of basis indices: start, start-1, ..., start-len+1 (mod p). */
struct Segment {
	int start = 0;
	long long len = 1;
};

inline Segment wing_segment(int p, const TubeCoord& root) {
	TubeCoord r = tube_normal(p, root);
	return Segment{r.j, r.n};
}

inline std::set<int> segment_members(int p, const Segment& s) {
	std::set<int> out;
	for (long long k = 0; k < s.len; ++k) out.insert(mod_norm(s.start - k, p));
	return out;
}

/* Wings are non-adjacent iff their basis segments are pairwise disjoint,
   cover fewer than p indices in total, and no segment starts exactly where
   another one ends, i.e. b.start = a.start - a.len (mod p) for no pair. */
inline bool nonadjacent_check(int p, const std::vector<Segment>& segs) {
	long long total = 0;
	std::set<int> occupied;
	for (const auto& s : segs) {
		if (s.len < 1 || s.len > p - 1) return false;
		total += s.len;
		for (int m : segment_members(p, s)) occupied.insert(m);
	}
	if (total >= p) return false;
	if (static_cast<long long>(occupied.size()) != total) return false;
	for (size_t i = 0; i < segs.size(); ++i)
		for (size_t k = 0; k < segs.size(); ++k) {
			if (i == k) continue;
			if (mod_norm(segs[i].start - segs[i].len, p) == mod_norm(segs[k].start, p))
				return false;
		}
	return true;
}

/* R_x for a non-adjacent wing family: all j with tau^{j+1} S outside the
   union of the wing bases. */
inline std::set<int> rx_set(int p, const std::vector<Segment>& segs) {
	if (!nonadjacent_check(p, segs))
		throw error("wings are adjacent or overflow the tube");
	std::set<int> occupied;
	for (const auto& s : segs)
		for (int m : segment_members(p, s)) occupied.insert(m);
	std::set<int> out;
	for (int j = 0; j < p; ++j)
		if (!occupied.count(mod_norm(j + 1, p))) out.insert(j);
	return out;
}

inline std::string tube_term_str(const TubeCoord& t, const std::string& point) {
	std::string len = t.is_pruefer() ? "inf" : std::to_string(t.n);
	return "tau^" + std::to_string(t.j) + "S_" + point + "[" + len + "]";
}

}  // namespace tilt
