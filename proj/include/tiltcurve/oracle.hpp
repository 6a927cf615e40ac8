#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "tube.hpp"

namespace tilt {

/* Brute force oracle for tube Hom/Ext, independent of the counting formulas
   in tube.hpp. Objects are realized as nilpotent representations of the
   cyclic quiver with p vertices and arrows v -> v+1; tau^a S[n] has basis
   e_0, ..., e_{n-1} with e_k at vertex a-k (e_0 spans the socle) and the
   arrow action e_k -> e_{k-1}, e_0 -> 0. Hom spaces are kernels of the
   intertwiner constraints, computed by exact integer elimination. */

struct OracleRep {
	int p = 1;
	std::vector<int> dim;                          // per vertex
	std::vector<std::vector<long long>> arrow;     // arrow[v]: dim[v+1] x dim[v], row major
};

inline OracleRep oracle_rep(int p, int a, long long n) {
	if (p < 1 || n < 1) throw error("oracle_rep needs p >= 1, n >= 1");
	OracleRep R;
	R.p = p;
	R.dim.assign(p, 0);
	/* height k sits at vertex a-k; its index inside the vertex is k/p */
	for (long long k = 0; k < n; ++k) R.dim[mod_norm(a - k, p)]++;
	R.arrow.resize(p);
	for (int v = 0; v < p; ++v) {
		int w = mod_norm(v + 1, p);
		R.arrow[v].assign(static_cast<size_t>(R.dim[w]) * R.dim[v], 0);
	}
	for (long long k = 1; k < n; ++k) {
		int v = mod_norm(a - k, p);
		int w = mod_norm(v + 1, p);
		long long row = (k - 1) / p, col = k / p;
		R.arrow[v][static_cast<size_t>(row) * R.dim[v] + col] = 1;
	}
	return R;
}

/* Rank by fraction-free elimination. Entries stay minors of the original
   matrix; for the incidence-like systems here they remain tiny, and the
   guard rejects anything approaching overflow. */
inline long long oracle_matrix_rank(std::vector<std::vector<long long>>& m) {
	const long long LIMIT = 1LL << 40;
	size_t rows = m.size();
	if (rows == 0) return 0;
	size_t cols = m[0].size();
	long long prev = 1;
	size_t rank = 0;
	for (size_t c = 0; c < cols && rank < rows; ++c) {
		size_t piv = rank;
		while (piv < rows && m[piv][c] == 0) ++piv;
		if (piv == rows) continue;
		std::swap(m[rank], m[piv]);
		long long pv = m[rank][c];
		for (size_t r = rank + 1; r < rows; ++r) {
			long long rc = m[r][c];
			if (rc == 0 && pv == prev) continue;
			for (size_t k = c; k < cols; ++k) {
				long long t = checked_sub(checked_mul(pv, m[r][k]), checked_mul(rc, m[rank][k]));
				m[r][k] = t / prev;
				if (m[r][k] > LIMIT || m[r][k] < -LIMIT) throw error("oracle elimination overflow");
			}
		}
		prev = pv;
		++rank;
	}
	return static_cast<long long>(rank);
}

/* dim Hom(X, Y) over the simple's endomorphism ring: the kernel dimension of
   the intertwiner system f_{v+1} A^X_v = A^Y_v f_v. */
inline long long oracle_hom(const OracleRep& X, const OracleRep& Y) {
	if (X.p != Y.p) throw error("oracle_hom across different tubes");
	int p = X.p;
	std::vector<long long> offset(p, 0);
	long long vars = 0;
	for (int v = 0; v < p; ++v) {
		offset[v] = vars;
		vars += static_cast<long long>(Y.dim[v]) * X.dim[v];
	}
	if (vars == 0) return 0;
	auto var_index = [&](int v, long long row, long long col) {
		return offset[v] + row * X.dim[v] + col;
	};
	std::vector<std::vector<long long>> C;
	for (int v = 0; v < p; ++v) {
		int w = mod_norm(v + 1, p);
		for (int i = 0; i < Y.dim[w]; ++i)
			for (int j = 0; j < X.dim[v]; ++j) {
				std::vector<long long> row(vars, 0);
				bool nonzero = false;
				for (int k = 0; k < X.dim[w]; ++k) {
					long long a = X.arrow[v][static_cast<size_t>(k) * X.dim[v] + j];
					if (a != 0) { row[var_index(w, i, k)] += a; nonzero = true; }
				}
				for (int k = 0; k < Y.dim[v]; ++k) {
					long long a = Y.arrow[v][static_cast<size_t>(i) * Y.dim[v] + k];
					if (a != 0) { row[var_index(v, k, j)] -= a; nonzero = true; }
				}
				if (nonzero) C.push_back(std::move(row));
			}
	}
	if (C.empty()) return vars;
	return vars - oracle_matrix_rank(C);
}

inline long long oracle_hom(int p, const TubeCoord& X, const TubeCoord& Y) {
	if (X.is_pruefer() || Y.is_pruefer()) throw error("oracle handles finite objects only");
	return oracle_hom(oracle_rep(p, X.j, X.n), oracle_rep(p, Y.j, Y.n));
}

/* dim Ext^1(X, Y) from a projective presentation over the truncated path
   algebra A_N, paths of length >= N zero. The cover of X = tau^a S[n] with
   top vertex t = a-n+1 is P = tau^{t+N-1} S[N] with syzygy
   O = tau^{t+N-1} S[N-n], and Ext^1(X, Y) = hom(O,Y) - hom(P,Y) + hom(X,Y).
   Any N >= len X + len Y gives the same answer. */
inline long long oracle_ext(int p, const TubeCoord& X, const TubeCoord& Y, long long N = 0) {
	if (X.is_pruefer() || Y.is_pruefer()) throw error("oracle handles finite objects only");
	if (N == 0) N = X.n + Y.n + p;
	if (N < X.n + Y.n) throw error("oracle_ext truncation too small");
	int t = mod_norm(X.j - X.n + 1, p);
	OracleRep P = oracle_rep(p, mod_norm(t + N - 1, p), N);
	OracleRep O = oracle_rep(p, mod_norm(t + N - 1, p), N - X.n);
	OracleRep Xr = oracle_rep(p, X.j, X.n);
	OracleRep Yr = oracle_rep(p, Y.j, Y.n);
	return oracle_hom(O, Yr) - oracle_hom(P, Yr) + oracle_hom(Xr, Yr);
}

/* All tilting objects of the wing rooted in tau^{r-1} S[r] inside the tube of
   rank p = r+1: multiplicity free, r summands, root included, pairwise rigid.
   Pure clique search over oracle_ext; r is capped to keep this honest brute
   force tractable. */
inline std::vector<std::vector<TubeCoord>> oracle_tilting_Ar(int r) {
	if (r < 1 || r > 8) throw error("oracle_tilting_Ar supports 1 <= r <= 8");
	int p = r + 1;
	std::vector<TubeCoord> wing;
	for (int s = 0; s < r; ++s)
		for (int l = 1; s + l <= r; ++l)
			wing.push_back(TubeCoord{mod_norm(r - 1 - s, p), l});
	size_t m = wing.size();
	size_t root = 0;  // s = 0, l = r is not first; locate it
	for (size_t i = 0; i < m; ++i)
		if (wing[i].j == mod_norm(r - 1, p) && wing[i].n == r) root = i;
	std::vector<std::vector<bool>> ok(m, std::vector<bool>(m, false));
	for (size_t i = 0; i < m; ++i)
		for (size_t k = 0; k < m; ++k)
			ok[i][k] = i != k && oracle_ext(p, wing[i], wing[k]) == 0 &&
			           oracle_ext(p, wing[k], wing[i]) == 0;
	std::vector<std::vector<TubeCoord>> out;
	std::vector<size_t> chosen{root};
	auto compatible = [&](size_t cand) {
		for (size_t c : chosen)
			if (!ok[c][cand]) return false;
		return true;
	};
	auto rec = [&](auto&& self, size_t next) -> void {
		if (chosen.size() == static_cast<size_t>(r)) {
			std::vector<TubeCoord> set;
			for (size_t c : chosen) set.push_back(wing[c]);
			out.push_back(std::move(set));
			return;
		}
		for (size_t i = next; i < m; ++i) {
			if (i == root || !compatible(i)) continue;
			chosen.push_back(i);
			self(self, i + 1);
			chosen.pop_back();
		}
	};
	rec(rec, 0);
	return out;
}

}  // namespace tilt
