/* Branch data in a small tube and the tilting descriptors of a domestic
   curve with one weighted point. */

#include "tiltcurve/classify.hpp"

#include <iostream>

using namespace tilt;

int main() {
	std::cout << "branch data in a tube of rank 3:\n";
	for (const auto& comps : enumerate_branches(3)) {
		if (comps.empty()) {
			std::cout << "  (empty)\n";
			continue;
		}
		std::cout << " ";
		for (const auto& c : comps) {
			std::cout << "  root " << tube_term_str(c.root, "x") << " with";
			for (const auto& s : c.summands) std::cout << " " << tube_term_str(s, "x");
		}
		std::cout << "\n";
	}

	CurveDescriptor cd;
	PointData x;
	x.label = "x";
	x.p = 2;
	cd.points.push_back(x);
	PointData y;
	y.label = "y";
	cd.points.push_back(y);

	std::cout << "\nlarge tilting sheaves on the domestic curve with weights (2):\n";
	for (const auto& td : enumerate_tilting(cd, {}))
		std::cout << "  " << descriptor_str(td) << "\n";
	return 0;
}
