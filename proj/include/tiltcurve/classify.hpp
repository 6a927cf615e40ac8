#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "branch.hpp"
#include "curve.hpp"

namespace tilt {

enum class SlopeKind { Finite, Infinite, Irrational };

/* A point of the extended slope line. Irrational slopes carry a rational
   witness interval (lo, hi) marking the cut; two marks denote the same slope
   only if the intervals coincide, and families of marks are expected to be
   pairwise disjoint. */
struct SlopeSpec {
	SlopeKind kind = SlopeKind::Infinite;
	Rational value;
	Rational lo, hi;

	static SlopeSpec infinite() { return SlopeSpec{}; }
	static SlopeSpec finite(const Rational& q) { return SlopeSpec{SlopeKind::Finite, q, {}, {}}; }
	static SlopeSpec irrational(const Rational& lo, const Rational& hi) {
		if (!(lo < hi)) throw error("irrational slope mark needs lo < hi");
		return SlopeSpec{SlopeKind::Irrational, {}, lo, hi};
	}

	std::string str() const {
		switch (kind) {
			case SlopeKind::Finite: return value.str();
			case SlopeKind::Infinite: return "inf";
			default: return "irrational(" + lo.str() + "," + hi.str() + ")";
		}
	}
	bool operator==(const SlopeSpec& o) const {
		if (kind != o.kind) return false;
		if (kind == SlopeKind::Finite) return value == o.value;
		if (kind == SlopeKind::Irrational) return lo == o.lo && hi == o.hi;
		return true;
	}
};

struct ResolvingDescriptor {
	std::string base = "vect(X)";
	std::vector<std::pair<std::string, TubeCoord>> extra;  // tau^- of the undercuts
	std::map<std::string, std::set<int>> rays;             // Pruefer rays per V point
};

/* Invariants of one large tilting sheaf: representation type, slope of the
   torsionfree part where the theory attaches one, branch part, V, Pruefer
   rays, and the induced resolving class. */
struct TiltingDescriptor {
	RepType rtype = RepType::Domestic;
	bool has_slope = false;
	SlopeSpec slope;
	BranchSheaf branch;
	std::set<std::string> V;
	bool window_complement = false;
	std::string torsionfree;
	std::map<std::string, std::set<int>> rays;
	ResolvingDescriptor resolving;
};

inline void validate_branch_sheaf(const CurveDescriptor& cd, const BranchSheaf& b) {
	for (const auto& [label, comps] : b.by_point) {
		const PointData& pt = point_of(cd, label);
		if (!comps.empty() && pt.p < 2)
			throw error("branch data at homogeneous point '" + label + "'");
		validate_branch(pt.p, comps);
	}
}

/* j is an admissible Pruefer ray at x for the branch iff j lies in R_x. */
inline bool pruefer_ray_check(const CurveDescriptor& cd, const BranchSheaf& b,
                              const std::string& point, int j) {
	const PointData& pt = point_of(cd, point);
	std::vector<BranchComponent> comps;
	auto it = b.by_point.find(point);
	if (it != b.by_point.end()) comps = it->second;
	auto rx = branch_rx(pt.p, comps);
	return rx.count(mod_norm(j, pt.p)) != 0;
}

inline ResolvingDescriptor resolving_descriptor(const CurveDescriptor& cd, const BranchSheaf& b,
                                                const std::set<std::string>& V) {
	ResolvingDescriptor rd;
	for (const auto& [label, comps] : b.by_point) {
		const PointData& pt = point_of(cd, label);
		bool interior = V.count(label) != 0;
		for (const auto& u : undercut_union(pt.p, comps, interior))
			rd.extra.emplace_back(label, tau_shift(pt.p, u, -1));
	}
	std::sort(rd.extra.begin(), rd.extra.end());
	for (const auto& x : V) {
		const PointData& pt = point_of(cd, x);
		std::vector<BranchComponent> comps;
		auto it = b.by_point.find(x);
		if (it != b.by_point.end()) comps = it->second;
		rd.rays[x] = branch_rx(pt.p, comps);
	}
	return rd;
}

inline TiltingDescriptor tilting_descriptor(const CurveDescriptor& cd, const BranchSheaf& b,
                                            const std::set<std::string>& V,
                                            std::optional<SlopeSpec> slope = std::nullopt) {
	validate_descriptor(cd);
	validate_branch_sheaf(cd, b);
	for (const auto& x : V) point_of(cd, x);
	TiltingDescriptor td;
	td.rtype = representation_type(cd);
	td.branch = b;
	td.V = V;
	switch (td.rtype) {
		case RepType::Domestic:
			if (slope) throw error("domestic tilting sheaves carry no slope parameter");
			td.torsionfree = "Lukas";
			break;
		case RepType::Tubular: {
			if (!slope) throw error("tubular tilting sheaves need a slope");
			td.has_slope = true;
			td.slope = *slope;
			if (td.slope.kind == SlopeKind::Irrational && (!b.empty() || !V.empty()))
				throw error("irrational slope admits no branch or Pruefer part");
			td.torsionfree = "L_w";
			break;
		}
		case RepType::Elliptic: {
			if (!slope) throw error("elliptic tilting sheaves need a slope");
			td.has_slope = true;
			td.slope = *slope;
			if (!b.empty()) throw error("elliptic curves admit no branch part");
			td.torsionfree = V.empty() ? "L_w" : "T_(w,V)";
			break;
		}
		case RepType::Wild:
			if (slope) throw error("wild tilting sheaves carry no slope parameter");
			if (V.empty()) throw error("wild tilting sheaves need nonempty V");
			td.torsionfree = "R_V";
			break;
	}
	for (const auto& x : V) {
		const PointData& pt = point_of(cd, x);
		std::vector<BranchComponent> comps;
		auto it = b.by_point.find(x);
		if (it != b.by_point.end()) comps = it->second;
		td.rays[x] = branch_rx(pt.p, comps);
	}
	td.resolving = resolving_descriptor(cd, b, V);
	return td;
}

inline std::string branch_sheaf_str(const BranchSheaf& b) {
	if (b.empty()) return "0";
	std::ostringstream os;
	bool first_pt = true;
	for (const auto& [label, comps] : b.by_point) {
		if (comps.empty()) continue;
		if (!first_pt) os << "; ";
		first_pt = false;
		os << label << ":";
		std::vector<BranchComponent> sorted = comps;
		std::sort(sorted.begin(), sorted.end(),
		          [](const BranchComponent& a, const BranchComponent& c) { return a.root < c.root; });
		for (const auto& comp : sorted) {
			std::vector<TubeCoord> s = comp.summands;
			std::sort(s.begin(), s.end());
			os << " [";
			for (size_t i = 0; i < s.size(); ++i) {
				if (i) os << ", ";
				os << tube_term_str(s[i], label);
			}
			os << "]";
		}
	}
	return os.str();
}

inline std::string set_str(const std::set<std::string>& v) {
	std::ostringstream os;
	os << "{";
	bool first = true;
	for (const auto& x : v) {
		if (!first) os << ", ";
		first = false;
		os << x;
	}
	os << "}";
	return os.str();
}

inline std::string descriptor_key(const TiltingDescriptor& td) {
	std::string slope = td.has_slope ? td.slope.str() : "-";
	return "slope=" + slope + "; branch=" + branch_sheaf_str(td.branch) + "; V=" + set_str(td.V);
}

inline std::string descriptor_str(const TiltingDescriptor& td) {
	std::ostringstream os;
	os << "type=" << rep_type_name(td.rtype) << "; " << descriptor_key(td)
	   << "; torsionfree=" << td.torsionfree;
	os << "; rays={";
	bool first = true;
	for (const auto& [x, rs] : td.rays) {
		if (!first) os << "; ";
		first = false;
		os << x << ":{";
		bool f2 = true;
		for (int j : rs) {
			if (!f2) os << ",";
			f2 = false;
			os << j;
		}
		os << "}";
	}
	os << "}";
	return os.str();
}

/* All branch sheaves over the weighted points of the curve. */
inline std::vector<BranchSheaf> enumerate_branch_sheaves(const CurveDescriptor& cd) {
	std::vector<BranchSheaf> out{BranchSheaf{}};
	for (const auto& pt : cd.points) {
		if (pt.p < 2) continue;
		auto local = enumerate_branches(pt.p);
		std::vector<BranchSheaf> next;
		for (const auto& base : out)
			for (const auto& comps : local) {
				BranchSheaf b = base;
				if (!comps.empty()) b.by_point[pt.label] = comps;
				next.push_back(std::move(b));
			}
		out = std::move(next);
	}
	return out;
}

inline std::vector<std::set<std::string>> enumerate_point_subsets(const CurveDescriptor& cd) {
	std::vector<std::set<std::string>> out{{}};
	for (const auto& pt : cd.points) {
		size_t n = out.size();
		for (size_t i = 0; i < n; ++i) {
			std::set<std::string> with = out[i];
			with.insert(pt.label);
			out.push_back(std::move(with));
		}
	}
	return out;
}

/* Enumerates tilting descriptors over the given slope window. Domestic and
   wild types ignore the window; tubular and elliptic types emit one family
   per listed slope. The result is sorted by descriptor key. */
inline std::vector<TiltingDescriptor> enumerate_tilting(const CurveDescriptor& cd,
                                                        const std::vector<SlopeSpec>& window = {}) {
	validate_descriptor(cd);
	RepType rt = representation_type(cd);
	std::vector<TiltingDescriptor> out;
	auto vsets = enumerate_point_subsets(cd);
	switch (rt) {
		case RepType::Domestic:
			for (const auto& b : enumerate_branch_sheaves(cd))
				for (const auto& v : vsets) out.push_back(tilting_descriptor(cd, b, v));
			break;
		case RepType::Wild:
			for (const auto& b : enumerate_branch_sheaves(cd))
				for (const auto& v : vsets)
					if (!v.empty()) out.push_back(tilting_descriptor(cd, b, v));
			break;
		case RepType::Tubular:
			for (const auto& w : window) {
				if (w.kind == SlopeKind::Irrational) {
					out.push_back(tilting_descriptor(cd, BranchSheaf{}, {}, w));
					continue;
				}
				for (const auto& b : enumerate_branch_sheaves(cd))
					for (const auto& v : vsets) out.push_back(tilting_descriptor(cd, b, v, w));
			}
			break;
		case RepType::Elliptic:
			for (const auto& w : window) {
				if (w.kind == SlopeKind::Irrational) {
					out.push_back(tilting_descriptor(cd, BranchSheaf{}, {}, w));
					continue;
				}
				for (const auto& v : vsets) out.push_back(tilting_descriptor(cd, BranchSheaf{}, v, w));
			}
			break;
	}
	std::sort(out.begin(), out.end(), [](const TiltingDescriptor& a, const TiltingDescriptor& b) {
		return descriptor_key(a) < descriptor_key(b);
	});
	return out;
}

}  // namespace tilt
