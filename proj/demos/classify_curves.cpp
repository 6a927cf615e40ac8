/* Representation type and numerics for a few classical weight sequences. */

#include "tiltcurve/kgroup.hpp"

#include <iostream>

using namespace tilt;

static CurveDescriptor weighted_line(const std::vector<int>& weights) {
	CurveDescriptor cd;
	int i = 0;
	for (int p : weights) {
		PointData pt;
		pt.label = "x" + std::to_string(++i);
		pt.p = p;
		cd.points.push_back(pt);
	}
	return cd;
}

int main() {
	for (const auto& w : std::vector<std::vector<int>>{
	         {2, 2}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 4}, {3, 3, 3}, {2, 3, 7}, {2, 2, 2, 2}}) {
		auto cd = weighted_line(w);
		std::cout << "(";
		for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
		std::cout << "): " << rep_type_name(representation_type(cd))
		          << ", chi'=" << orbifold_euler_characteristic(cd).str()
		          << ", delta=" << dualizing_degree(cd).str() << ", pbar=" << pbar(cd) << "\n";
	}

	/* Riemann-Roch on the tubular (2,3,6) line: both sides for L against a simple */
	auto cd = weighted_line({2, 3, 6});
	KClass a = kclass_L();
	KClass b = kclass_simple(cd, "x3", 0);
	auto [lhs, rhs] = riemann_roch_sides(cd, a, b);
	std::cout << "\nRiemann-Roch for (L, S): lhs=" << lhs.str() << " rhs=" << rhs.str() << "\n";
	return 0;
}
