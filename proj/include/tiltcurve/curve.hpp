#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace tilt {

/* One marked point of the curve. Unlisted points are tacitly homogeneous:
   p = f = e = e_tau = res_deg = 1, so they contribute nothing below. */
struct PointData {
	std::string label;
	int p = 1;             // weight
	long long f = 1;       // multiplicity invariant of the point
	long long e = 1;       // ramification invariant
	long long e_tau = 1;   // twist of e under the AR translation, 1 or 2
	long long res_deg = 1; // residue field degree over the base field
};

struct CurveDescriptor {
	std::vector<PointData> points;
	int epsilon = 1;   // 1 or 2
	long long kappa = 1;
	long long s = 1;
	Rational chi_centre = Rational(1);  // Euler characteristic of the centre curve
	int genus_nw = 0;  // genus of the underlying non-weighted curve, 0 or 1
	std::optional<Rational> chi_orb_override;
};

enum class RepType { Domestic, Tubular, Elliptic, Wild };

inline const char* rep_type_name(RepType t) {
	switch (t) {
		case RepType::Domestic: return "domestic";
		case RepType::Tubular: return "tubular";
		case RepType::Elliptic: return "elliptic";
		default: return "wild";
	}
}

inline const PointData& point_of(const CurveDescriptor& cd, const std::string& label) {
	for (const auto& pt : cd.points)
		if (pt.label == label) return pt;
	throw error("unknown point '" + label + "'");
}

inline int point_index(const CurveDescriptor& cd, const std::string& label) {
	for (size_t i = 0; i < cd.points.size(); ++i)
		if (cd.points[i].label == label) return static_cast<int>(i);
	throw error("unknown point '" + label + "'");
}

/* d_x = kappa*epsilon*f(x)/e(x), the dimension of End(S_x) over the base field. */
inline long long simple_end_dim(const CurveDescriptor& cd, const PointData& pt) {
	long long n = checked_mul(checked_mul(cd.kappa, cd.epsilon), pt.f);
	if (n % pt.e != 0)
		throw error("d_x not integral at point '" + pt.label + "'");
	return n / pt.e;
}

inline void validate_descriptor(const CurveDescriptor& cd) {
	if (cd.epsilon != 1 && cd.epsilon != 2) throw error("epsilon must be 1 or 2");
	if (cd.kappa < 1) throw error("kappa must be positive");
	if (cd.s < 1) throw error("s must be positive");
	if (cd.genus_nw != 0 && cd.genus_nw != 1) throw error("genus_nw must be 0 or 1");
	std::set<std::string> seen;
	for (const auto& pt : cd.points) {
		if (pt.label.empty()) throw error("point with empty label");
		if (!seen.insert(pt.label).second) throw error("duplicate point label '" + pt.label + "'");
		if (pt.p < 1) throw error("weight must be positive at '" + pt.label + "'");
		if (pt.f < 1 || pt.e < 1 || pt.res_deg < 1)
			throw error("point invariants must be positive at '" + pt.label + "'");
		if (pt.e_tau != 1 && pt.e_tau != 2)
			throw error("e_tau must be 1 or 2 at '" + pt.label + "'");
		long long d = simple_end_dim(cd, pt);
		if (d < 1) throw error("d_x must be positive at '" + pt.label + "'");
	}
}

/* lcm of the weights (1 for an empty or homogeneous point set). */
inline long long pbar(const CurveDescriptor& cd) {
	long long l = 1;
	for (const auto& pt : cd.points) l = std::lcm(l, static_cast<long long>(pt.p));
	return l;
}

/* chi'_orb = chi_centre - (1/2) * sum_x (1 - 1/(p(x) e_tau(x))) * res_deg(x). */
inline Rational orbifold_euler_characteristic(const CurveDescriptor& cd) {
	if (cd.chi_orb_override) return *cd.chi_orb_override;
	Rational acc = cd.chi_centre;
	for (const auto& pt : cd.points) {
		Rational term = (Rational(1) - Rational(1, checked_mul(pt.p, pt.e_tau))) * Rational(pt.res_deg);
		acc = acc - term * Rational(1, 2);
	}
	return acc;
}

/* delta = deg(tau L) = -(2 pbar s^2 / (kappa epsilon)) * chi'_orb. */
inline Rational dualizing_degree(const CurveDescriptor& cd) {
	Rational factor(checked_mul(checked_mul(2, pbar(cd)), checked_mul(cd.s, cd.s)),
	                checked_mul(cd.kappa, cd.epsilon));
	return -(factor * orbifold_euler_characteristic(cd));
}

inline RepType representation_type(const CurveDescriptor& cd) {
	Rational chi = orbifold_euler_characteristic(cd);
	if (chi.sign() > 0) return RepType::Domestic;
	if (chi.sign() < 0) return RepType::Wild;
	return pbar(cd) > 1 ? RepType::Tubular : RepType::Elliptic;
}

}  // namespace tilt
