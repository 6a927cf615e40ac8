#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "branch.hpp"
#include "classify.hpp"
#include "kgroup.hpp"

namespace tilt {

/* Copresentation engine. Tube data is exchanged in display coordinates; the
   anchor c of a weighted point identifies display index c with the lattice
   socle 0, i.e. Hom(L, tau^c S_display) != 0. Arm positions are global:
   L = L(0) -> L(1) -> ... -> L(p-1) -> Lbar, with [L(g)] = eps f [L] +
   [tau^{-1} S_x [g]] in lattice coordinates. */

enum class TermKind { L, Lbar, Arm, G, Branch, Pruefer, Kterm, Generic };

struct CoTerm {
	TermKind kind = TermKind::L;
	std::string point;  // Arm/Branch/Pruefer owner
	int arm_pos = 0;    // Arm: global position 1..p-1
	TubeCoord coord;    // Branch: finite; Pruefer: n = TUBE_INF, j = display ray
	long long mult = 1;
	std::string tag;    // symbolic exponent; empty slots print numerically
	std::string gname;  // G terms only
};

struct SES {
	CoTerm left;
	std::vector<CoTerm> mid_g, mid_branch;
	std::vector<CoTerm> right_branch, right_pruefer;
	std::string rule;  // "step1", "mono", "epi"
};

struct CalComp {
	BranchComponent comp;  // display coordinates, summands normalized
	bool interior = true;
	int base = 0;  // positions base+1 .. base+rho are occupied
	long long rho = 1;
};

struct CalPoint {
	std::string label;
	int p = 1;
	int c = 0;
	bool in_V = false;
	std::vector<CalComp> comps;
	std::set<int> occupied;
	std::set<int> rx;  // display rays, V points only
};

struct CopresentResult {
	std::vector<SES> seqs;
	std::vector<CalPoint> cal;            // weighted points in declared order
	std::vector<std::string> homog_in_V;  // declared order
	std::string x0;
	long long lambda_rank = 0;
	std::vector<std::pair<std::string, TubeCoord>> B0, B1;  // mono / epi applied
	std::map<std::string, std::vector<TubeCoord>> xprime_simples;
	std::map<std::string, long long> p_prime;
	std::vector<CoTerm> lambda_v;   // aggregated G part of Lambda'_V
	std::vector<CoTerm> eta_right;  // aggregated Pruefer part of eta_V
	std::vector<CoTerm> inj_coker;  // declared non-V part of the K-resolution
};

struct CopresentOptions {
	std::map<std::string, int> anchors;
};

namespace detail {

inline bool anchor_valid(int p, int c, const std::vector<BranchComponent>& comps, bool interior) {
	for (const auto& comp : comps) {
		auto basis = segment_members(p, wing_segment(p, comp.root));
		int probe = interior ? c : mod_norm(c - 1, p);
		if (basis.count(probe)) return false;
	}
	return true;
}

/* Branch tree edges: the unique upper neighbour of a non-root summand shares
   its top (epi edge) or its socle (mono edge) and is the shortest such. */
struct BranchNode {
	TubeCoord w;
	long long s = 0, l = 1;  // colevel and length inside the root wing
	int epi_child = -1, mono_child = -1;
};

inline std::vector<BranchNode> branch_tree(int p, const BranchComponent& comp) {
	TubeCoord root = tube_normal(p, comp.root);
	std::vector<BranchNode> nodes;
	for (const auto& w0 : comp.summands) {
		TubeCoord w = tube_normal(p, w0);
		BranchNode n;
		n.w = w;
		n.s = mod_norm(root.j - w.j, p);
		n.l = w.n;
		nodes.push_back(n);
	}
	int root_idx = -1;
	for (size_t i = 0; i < nodes.size(); ++i)
		if (nodes[i].w == root) root_idx = static_cast<int>(i);
	if (root_idx < 0) throw error("branch component without its root");
	if (root_idx != 0) std::swap(nodes[0], nodes[root_idx]);
	for (size_t i = 1; i < nodes.size(); ++i) {
		int parent = -1;
		bool epi = false;
		for (size_t k = 0; k < nodes.size(); ++k) {
			if (k == i || nodes[k].l <= nodes[i].l) continue;
			bool same_top = tube_top(p, nodes[k].w) == tube_top(p, nodes[i].w);
			bool same_socle = nodes[k].w.j == nodes[i].w.j;
			if (!same_top && !same_socle) continue;
			if (!in_wing(p, nodes[k].w, nodes[i].w)) continue;
			if (parent == -1 || nodes[k].l < nodes[parent].l) {
				parent = static_cast<int>(k);
				epi = same_top;
			}
		}
		if (parent < 0) throw error("branch summand without upper neighbour");
		int& slot = epi ? nodes[parent].epi_child : nodes[parent].mono_child;
		if (slot != -1) throw error("branch summand with two lower neighbours of one kind");
		slot = static_cast<int>(i);
	}
	return nodes;
}

inline std::string exp_str(long long mult, const std::string& tag, bool symbolic) {
	if (symbolic && !tag.empty()) return "^" + tag;
	if (mult == 1) return "";
	return "^" + std::to_string(mult);
}

inline std::string term_str(const CoTerm& t, bool symbolic) {
	std::string base;
	switch (t.kind) {
		case TermKind::L: base = "L"; break;
		case TermKind::Lbar: base = "Lbar"; break;
		case TermKind::Arm: base = "L(" + std::to_string(t.arm_pos) + ")"; break;
		case TermKind::G: base = t.gname; break;
		case TermKind::Branch: base = tube_term_str(t.coord, t.point); break;
		case TermKind::Pruefer: base = tube_term_str(TubeCoord{t.coord.j, TUBE_INF}, t.point); break;
		case TermKind::Kterm: base = "K"; break;
		default: base = "..."; break;
	}
	return base + exp_str(t.mult, t.tag, symbolic);
}

inline std::string side_str(const std::vector<const CoTerm*>& terms, bool symbolic) {
	if (terms.empty()) return "0";
	std::string out;
	for (size_t i = 0; i < terms.size(); ++i) {
		if (i) out += " (+) ";
		out += term_str(*terms[i], symbolic);
	}
	return out;
}

inline std::string ses_str(const SES& s, bool symbolic) {
	std::vector<const CoTerm*> mid, right;
	for (const auto& t : s.mid_g) mid.push_back(&t);
	for (const auto& t : s.mid_branch) mid.push_back(&t);
	for (const auto& t : s.right_branch) right.push_back(&t);
	for (const auto& t : s.right_pruefer) right.push_back(&t);
	return "0 -> " + term_str(s.left, symbolic) + " -> " + side_str(mid, symbolic) + " -> " +
	       side_str(right, symbolic) + " -> 0";
}

}  // namespace detail

class Copresenter {
public:
	Copresenter(const CurveDescriptor& cd, const BranchSheaf& branch,
	            const std::set<std::string>& V, const CopresentOptions& opt = {})
	    : cd_(cd) {
		validate_descriptor(cd);
		validate_branch_sheaf(cd, branch);
		for (const auto& x : V) point_of(cd, x);
		res_.x0.clear();
		for (const auto& pt : cd.points)
			if (pt.p == 1 && res_.x0.empty()) res_.x0 = pt.label;
		if (res_.x0.empty()) throw error("copresentation needs a declared homogeneous point");
		calibrate(branch, V, opt);
		run();
	}

	const CopresentResult& result() const { return res_; }

private:
	void calibrate(const BranchSheaf& branch, const std::set<std::string>& V,
	               const CopresentOptions& opt) {
		for (const auto& pt : cd_.points) {
			if (pt.p == 1) {
				if (V.count(pt.label)) res_.homog_in_V.push_back(pt.label);
				continue;
			}
			CalPoint cal;
			cal.label = pt.label;
			cal.p = pt.p;
			cal.in_V = V.count(pt.label) != 0;
			std::vector<BranchComponent> comps;
			auto it = branch.by_point.find(pt.label);
			if (it != branch.by_point.end()) comps = it->second;
			auto anchor_it = opt.anchors.find(pt.label);
			if (anchor_it != opt.anchors.end()) {
				cal.c = mod_norm(anchor_it->second, pt.p);
				if (!detail::anchor_valid(pt.p, cal.c, comps, cal.in_V))
					throw error("anchor " + std::to_string(cal.c) + " is invalid at '" + pt.label + "'");
			} else {
				int c = 0;
				while (c < pt.p && !detail::anchor_valid(pt.p, c, comps, cal.in_V)) ++c;
				if (c == pt.p) throw error("no valid anchor at '" + pt.label + "'");
				cal.c = c;
			}
			long long root_len = 0;
			for (const auto& comp : comps) {
				CalComp cc;
				cc.comp.root = tube_normal(pt.p, comp.root);
				for (const auto& w : comp.summands)
					cc.comp.summands.push_back(tube_normal(pt.p, w));
				cc.interior = cal.in_V;
				cc.rho = cc.comp.root.n;
				int shift = cc.interior ? 1 : 2;
				cc.base = mod_norm(cal.c - cc.comp.root.j - shift, pt.p);
				if (cc.base + cc.rho > pt.p - 1)
					throw error("calibration overflow at '" + pt.label + "'");
				for (long long i = 1; i <= cc.rho; ++i)
					cal.occupied.insert(static_cast<int>(cc.base + i));
				if (cc.interior) root_len += cc.rho;
				cal.comps.push_back(std::move(cc));
			}
			std::sort(cal.comps.begin(), cal.comps.end(),
			          [](const CalComp& a, const CalComp& b) { return a.base < b.base; });
			if (cal.in_V) {
				cal.rx = branch_rx(pt.p, comps);
				res_.p_prime[pt.label] = pt.p - root_len;
			}
			res_.cal.push_back(std::move(cal));
		}
	}

	KClass arm_class(const CalPoint& cal, int pos) const {
		KClass k = kclass_scale(kclass_L(), checked_mul(cd_.epsilon, point_of(cd_, cal.label).f));
		return kclass_add(k, kclass_tube(cd_, cal.label, TubeCoord{-1, pos}));
	}

	/* Lattice class of a left term at a global arm position, scaled by the
	   degeneration factor recorded in input_at: position 0 is L (the caller
	   scales by eps f), position p is Lbar (scaled by f). */
	KClass position_class(const CalPoint& cal, int pos, long long scale) const {
		const PointData& pt = point_of(cd_, cal.label);
		if (pos == 0) return kclass_scale(kclass_L(), scale);
		if (pos == pt.p) {
			KClass lbar = kclass_add(kclass_scale(kclass_L(), cd_.epsilon),
			                         kclass_simple(cd_, res_.x0, 0));
			return kclass_scale(lbar, scale);
		}
		return kclass_scale(arm_class(cal, pos), scale);
	}

	KClass display_tube_class(const CalPoint& cal, const TubeCoord& w) const {
		return kclass_tube(cd_, cal.label, TubeCoord{mod_norm(w.j - cal.c, cal.p), w.n});
	}

	/* Step 1: the universal extension of F by Pruefer sheaves along the rays
	   of the V points, with multiplicities from the lattice. */
	SES step1(const CoTerm& left, const KClass& F, long long rk, const std::string& gname,
	          const std::string& mid_tag) {
		SES s;
		s.rule = "step1";
		s.left = left;
		CoTerm g;
		g.kind = TermKind::G;
		g.gname = gname;
		g.mult = rk;
		g.tag = mid_tag;
		s.mid_g.push_back(g);
		for (const auto& cal : res_.cal) {
			if (!cal.in_V) continue;
			for (int j : cal.rx) {
				long long e = tubular_shift_class(cd_, mod_norm(j - cal.c, cal.p), cal.label, F);
				if (e < 0) throw error("negative Pruefer multiplicity");
				if (e == 0) continue;
				CoTerm t;
				t.kind = TermKind::Pruefer;
				t.point = cal.label;
				t.coord = TubeCoord{j, TUBE_INF};
				t.mult = e;
				t.tag = pruefer_tag(left, cal, j);
				s.right_pruefer.push_back(t);
			}
		}
		for (const auto& y : res_.homog_in_V) {
			long long e = tubular_shift_class(cd_, 0, y, F);
			if (e < 0) throw error("negative Pruefer multiplicity");
			if (e == 0) continue;
			CoTerm t;
			t.kind = TermKind::Pruefer;
			t.point = y;
			t.coord = TubeCoord{0, TUBE_INF};
			t.mult = e;
			s.right_pruefer.push_back(t);
		}
		return s;
	}

	std::string pruefer_tag(const CoTerm& left, const CalPoint& cal, int ray) const {
		bool at_l_ray = ray == mod_norm(cal.c - 1, cal.p);
		switch (left.kind) {
			case TermKind::L: return at_l_ray ? "e" : "";
			case TermKind::Lbar: return at_l_ray ? "εe" : "";
			case TermKind::Arm: {
				if (left.point != cal.label) return "";
				int own = mod_norm(cal.c - left.arm_pos - 1, cal.p);
				if (ray == own) return "εd";
				if (at_l_ray) return "εd-1";
				return "";
			}
			default: return "";
		}
	}

	std::string arm_gname(const CalPoint& cal, int pos) const {
		long long weighted = 0;
		for (const auto& c : res_.cal) (void)c, ++weighted;
		std::string idx = std::to_string(pos - cal.c);
		if (weighted > 1) return "G_" + cal.label + "_" + idx;
		return "G_" + idx;
	}

	const SES& lookup(TermKind kind, const std::string& point, int pos) const {
		const SES* found = nullptr;
		for (const auto& s : res_.seqs) {
			if (s.left.kind != kind) continue;
			if (kind == TermKind::Arm && (s.left.point != point || s.left.arm_pos != pos)) continue;
			if (found) throw error("duplicate left term in copresentation");
			found = &s;
		}
		if (!found) throw error("missing input sequence in copresentation");
		return *found;
	}

	/* Input record for the global position pos at a point, scaled when the
	   position degenerates to L (times eps f) or Lbar (times f). */
	SES input_at(const CalPoint& cal, int pos, long long& scale) const {
		const PointData& pt = point_of(cd_, cal.label);
		scale = 1;
		if (pos == 0) {
			scale = checked_mul(cd_.epsilon, pt.f);
			return scaled(lookup(TermKind::L, "", 0), scale);
		}
		if (pos == pt.p) {
			scale = pt.f;
			return scaled(lookup(TermKind::Lbar, "", 0), scale);
		}
		return lookup(TermKind::Arm, cal.label, pos);
	}

	/* Scaling degrades the slot tags: the symbolic names apply to the record
	   as printed, not to its multiples. */
	static SES scaled(const SES& s, long long k) {
		SES out = s;
		auto scale_terms = [&](std::vector<CoTerm>& v) {
			for (auto& t : v) {
				t.mult = checked_mul(t.mult, k);
				if (k != 1) t.tag.clear();
			}
		};
		out.left.mult = checked_mul(out.left.mult, k);
		scale_terms(out.mid_g);
		scale_terms(out.mid_branch);
		scale_terms(out.right_branch);
		scale_terms(out.right_pruefer);
		return out;
	}

	void check_balance(const CalPoint& cal, int pos_in, long long scale_in, int pos_out,
	                   const TubeCoord& w, bool w_into_mid) const {
		KClass in = position_class(cal, pos_in, scale_in);
		KClass out = position_class(cal, pos_out, 1);
		KClass wc = display_tube_class(cal, w);
		/* mono: out = in + w; epi: in = out + w; both modulo full turns */
		KClass diff = w_into_mid ? kclass_sub(out, kclass_add(in, wc))
		                         : kclass_sub(in, kclass_add(out, wc));
		if (!diff.is_zero() && !is_full_turn_combination(cd_, diff, res_.x0))
			throw error("copresentation step is not K-balanced");
	}

	void apply_node(const CalPoint& cal, const CalComp& cc,
	                const std::vector<detail::BranchNode>& nodes, int idx, bool as_epi) {
		const detail::BranchNode& n = nodes[idx];
		long long lvl = n.s + n.l, colvl = n.s;
		int shift = cc.interior ? 0 : 1;
		int pos_hi = static_cast<int>(cc.base + lvl + shift);
		int pos_lo = static_cast<int>(cc.base + colvl + shift);
		int pos_in = as_epi ? pos_hi : pos_lo;
		int pos_out = as_epi ? pos_lo : pos_hi;
		long long scale = 1;
		SES rec = input_at(cal, pos_in, scale);
		rec.rule = as_epi ? "epi" : "mono";
		CoTerm left;
		left.kind = TermKind::Arm;
		left.point = cal.label;
		left.arm_pos = pos_out;
		rec.left = left;
		CoTerm wt;
		wt.kind = TermKind::Branch;
		wt.point = cal.label;
		wt.coord = n.w;
		if (as_epi) {
			for (const auto& [pt, b] : res_.B0)
				if (pt == cal.label && hom_dim(cal.p, n.w, b) != 0)
					throw error("epi step violates Hom(W, B0) = 0");
			rec.right_branch.push_back(wt);
			res_.B1.emplace_back(cal.label, n.w);
		} else {
			for (const auto& [pt, b] : res_.B1)
				if (pt == cal.label && hom_dim(cal.p, b, n.w) != 0)
					throw error("mono step violates Hom(B1, W) = 0");
			rec.mid_branch.push_back(wt);
			res_.B0.emplace_back(cal.label, n.w);
		}
		check_balance(cal, pos_in, scale, pos_out, n.w, !as_epi);
		res_.seqs.push_back(std::move(rec));
		/* epi subtree first, then mono subtree */
		if (n.epi_child >= 0) apply_node(cal, cc, nodes, n.epi_child, true);
		if (n.mono_child >= 0) apply_node(cal, cc, nodes, n.mono_child, false);
	}

	void run() {
		const long long eps = cd_.epsilon;
		/* Step 1 for Lambda' in order: L, Lbar, then free arm positions */
		CoTerm lterm;
		lterm.kind = TermKind::L;
		res_.seqs.push_back(step1(lterm, kclass_L(), 1, "G", ""));
		res_.lambda_rank = 1;
		CoTerm lbar;
		lbar.kind = TermKind::Lbar;
		KClass lbar_cls = kclass_add(kclass_scale(kclass_L(), eps), kclass_simple(cd_, res_.x0, 0));
		res_.seqs.push_back(step1(lbar, lbar_cls, eps, "G", "ε"));
		res_.lambda_rank = checked_add(res_.lambda_rank, eps);
		for (const auto& cal : res_.cal) {
			const PointData& pt = point_of(cd_, cal.label);
			for (int pos = 1; pos <= cal.p - 1; ++pos) {
				if (cal.occupied.count(pos)) continue;
				CoTerm arm;
				arm.kind = TermKind::Arm;
				arm.point = cal.label;
				arm.arm_pos = pos;
				long long rk = checked_mul(eps, pt.f);
				res_.seqs.push_back(step1(arm, arm_class(cal, pos), rk, arm_gname(cal, pos), "εf"));
				res_.lambda_rank = checked_add(res_.lambda_rank, rk);
			}
		}
		/* Branch steps, one component at a time, epi-first depth first */
		for (const auto& cal : res_.cal)
			for (const auto& cc : cal.comps) {
				auto nodes = detail::branch_tree(cal.p, cc.comp);
				apply_node(cal, cc, nodes, 0, !cc.interior);
			}
		check_coverage();
		build_aggregates();
	}

	void check_coverage() {
		/* every Lambda summand occurs exactly once on the left */
		long long l_cnt = 0, lbar_cnt = 0;
		std::map<std::pair<std::string, int>, int> arm_cnt;
		for (const auto& s : res_.seqs) {
			if (s.left.kind == TermKind::L) ++l_cnt;
			if (s.left.kind == TermKind::Lbar) ++lbar_cnt;
			if (s.left.kind == TermKind::Arm) arm_cnt[{s.left.point, s.left.arm_pos}]++;
		}
		if (l_cnt != 1 || lbar_cnt != 1) throw error("copresentation must list L and Lbar once");
		for (const auto& cal : res_.cal)
			for (int pos = 1; pos <= cal.p - 1; ++pos)
				if (arm_cnt[{cal.label, pos}] != 1)
					throw error("arm position not covered exactly once at '" + cal.label + "'");
		/* the union of the step 1 ray supports is exactly R_y for y in V */
		std::map<std::string, std::set<int>> support;
		for (const auto& s : res_.seqs)
			if (s.rule == "step1")
				for (const auto& t : s.right_pruefer) support[t.point].insert(t.coord.j);
		for (const auto& cal : res_.cal) {
			if (!cal.in_V) continue;
			if (support[cal.label] != cal.rx)
				throw error("Pruefer rays do not cover R_x at '" + cal.label + "'");
		}
		for (const auto& y : res_.homog_in_V)
			if (support[y] != std::set<int>{0})
				throw error("Pruefer ray missing at homogeneous point '" + y + "'");
	}

	void build_aggregates() {
		/* Lambda'_V: G terms with multiplicities summed, first appearance order */
		std::vector<CoTerm> gs;
		for (const auto& s : res_.seqs) {
			if (s.rule != "step1") continue;
			const CoTerm& g = s.mid_g[0];
			bool merged = false;
			for (auto& acc : gs)
				if (acc.gname == g.gname) {
					acc.mult = checked_add(acc.mult, g.mult);
					acc.tag = acc.gname == "G" ? "(1+ε)" : acc.tag;
					merged = true;
				}
			if (!merged) gs.push_back(g);
		}
		res_.lambda_v = gs;
		/* eta_V right hand side: Pruefer multiplicities summed per ray */
		std::map<std::pair<std::string, int>, long long> sums;
		for (const auto& s : res_.seqs)
			if (s.rule == "step1")
				for (const auto& t : s.right_pruefer)
					sums[{t.point, t.coord.j}] = checked_add(sums[{t.point, t.coord.j}], t.mult);
		for (const auto& pt : cd_.points) {
			for (const auto& [key, m] : sums) {
				if (key.first != pt.label) continue;
				CoTerm t;
				t.kind = TermKind::Pruefer;
				t.point = key.first;
				t.coord = TubeCoord{key.second, TUBE_INF};
				t.mult = m;
				for (const auto& cal : res_.cal) {
					if (cal.label != pt.label || !cal.in_V) continue;
					if (key.second == mod_norm(cal.c - 1, cal.p)) {
						long long clean = checked_mul(checked_add(1, cd_.epsilon),
						                              tubular_shift_class(cd_, -1, cal.label, kclass_L()));
						if (m == clean) t.tag = "(1+ε)e";
					} else
						t.tag = "εd";
				}
				res_.eta_right.push_back(t);
			}
		}
		/* tube simples after the recollement, and the non-V part of the
		   K-space resolution of Lambda'_V */
		for (const auto& cal : res_.cal) {
			if (!cal.in_V) continue;
			std::vector<TubeCoord> simples;
			for (int j : cal.rx) {
				long long gap = 0;
				while (!cal.rx.count(mod_norm(j - 1 - gap, cal.p))) ++gap;
				simples.push_back(TubeCoord{j, 1 + gap});
			}
			res_.xprime_simples[cal.label] = simples;
		}
		for (const auto& pt : cd_.points) {
			bool in_v = std::count(res_.homog_in_V.begin(), res_.homog_in_V.end(), pt.label) > 0;
			const CalPoint* cal = nullptr;
			for (const auto& c : res_.cal)
				if (c.label == pt.label) cal = &c;
			if (cal && cal->in_V) continue;
			if (!cal && in_v) continue;
			for (int j = 0; j < pt.p; ++j) {
				long long e = 0;
				for (const auto& s : res_.seqs) {
					if (s.rule != "step1") continue;
					KClass F = left_class(s.left);
					int jl = cal ? mod_norm(j - cal->c, pt.p) : j;
					e = checked_add(e, tubular_shift_class(cd_, jl, pt.label, F));
				}
				if (e == 0) continue;
				if (e < 0) throw error("negative multiplicity in the K-space resolution");
				CoTerm t;
				t.kind = TermKind::Pruefer;
				t.point = pt.label;
				t.coord = TubeCoord{j, TUBE_INF};
				t.mult = e;
				res_.inj_coker.push_back(t);
			}
		}
	}

	KClass left_class(const CoTerm& left) const {
		switch (left.kind) {
			case TermKind::L: return kclass_L();
			case TermKind::Lbar:
				return kclass_add(kclass_scale(kclass_L(), cd_.epsilon),
				                  kclass_simple(cd_, res_.x0, 0));
			case TermKind::Arm: {
				for (const auto& cal : res_.cal)
					if (cal.label == left.point) return arm_class(cal, left.arm_pos);
				throw error("arm term at unknown point");
			}
			default: throw error("term has no lattice class");
		}
	}

	CurveDescriptor cd_;
	CopresentResult res_;
};

inline CopresentResult run_copresentation(const CurveDescriptor& cd, const BranchSheaf& branch,
                                          const std::set<std::string>& V,
                                          const CopresentOptions& opt = {}) {
	return Copresenter(cd, branch, V, opt).result();
}

inline std::string render_copresentation(const CurveDescriptor& cd, const CopresentResult& res,
                                         bool symbolic) {
	std::ostringstream os;
	std::vector<std::string> lambda_terms{"L"};
	for (const auto& s : res.seqs)
		if (s.rule == "step1" && s.left.kind == TermKind::Arm)
			lambda_terms.push_back(detail::term_str(s.left, symbolic));
	lambda_terms.push_back("Lbar");
	os << "Lambda' = ";
	for (size_t i = 0; i < lambda_terms.size(); ++i)
		os << (i ? " (+) " : "") << lambda_terms[i];
	os << "\n";
	for (const auto& cal : res.cal) {
		if (!cal.in_V) continue;
		os << "R_" << cal.label << " = {";
		bool first = true;
		for (int j : cal.rx) {
			os << (first ? "" : ",") << j;
			first = false;
		}
		os << "}\n";
		os << "p'_" << cal.label << " = " << res.p_prime.at(cal.label) << "\n";
		os << "X' simples at " << cal.label << ":";
		for (const auto& t : res.xprime_simples.at(cal.label))
			os << " " << tube_term_str(t, cal.label);
		os << "\n";
	}
	for (size_t i = 0; i < res.seqs.size(); ++i)
		os << "(" << (i + 1) << ") " << detail::ses_str(res.seqs[i], symbolic) << "\n";
	auto list = [&](const std::vector<std::pair<std::string, TubeCoord>>& v) {
		if (v.empty()) return std::string("0");
		std::string out;
		for (size_t i = 0; i < v.size(); ++i) {
			if (i) out += " (+) ";
			out += tube_term_str(v[i].second, v[i].first);
		}
		return out;
	};
	os << "B0 = " << list(res.B0) << "\n";
	os << "B1 = " << list(res.B1) << "\n";
	os << "Lambda'_V = ";
	for (size_t i = 0; i < res.lambda_v.size(); ++i)
		os << (i ? " (+) " : "") << detail::term_str(res.lambda_v[i], symbolic);
	os << "\n";
	os << "eta_V right = ";
	if (res.eta_right.empty()) os << "0";
	for (size_t i = 0; i < res.eta_right.size(); ++i)
		os << (i ? " (+) " : "") << detail::term_str(res.eta_right[i], symbolic);
	os << "\n";
	CoTerm k;
	k.kind = TermKind::Kterm;
	k.mult = res.lambda_rank;
	std::vector<const CoTerm*> coker;
	for (const auto& t : res.inj_coker) coker.push_back(&t);
	CoTerm generic;
	generic.kind = TermKind::Generic;
	coker.push_back(&generic);
	os << "inj: 0 -> Lambda'_V -> " << detail::term_str(k, symbolic) << " -> "
	   << detail::side_str(coker, symbolic) << " -> 0\n";
	(void)cd;
	return os.str();
}

}  // namespace tilt
