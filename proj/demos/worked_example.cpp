/* Copresentation of the canonical configuration for a single tube of rank 11
   with a two-component branch, printed in both numeric and symbolic form. */

#include "tiltcurve/copresent.hpp"

#include <iostream>

using namespace tilt;

int main() {
	CurveDescriptor cd;
	PointData x;
	x.label = "x";
	x.p = 11;
	cd.points.push_back(x);
	PointData h;
	h.label = "x0";
	cd.points.push_back(h);

	BranchSheaf b;
	b.by_point["x"] = {
	    BranchComponent{TubeCoord{0, 4},
	                    {TubeCoord{0, 4}, TubeCoord{9, 2}, TubeCoord{9, 1}, TubeCoord{0, 1}}},
	    BranchComponent{TubeCoord{5, 3}, {TubeCoord{5, 3}, TubeCoord{5, 2}, TubeCoord{4, 1}}},
	};

	CopresentOptions opt;
	opt.anchors["x"] = 2;
	CopresentResult res = run_copresentation(cd, b, {"x"}, opt);

	std::cout << render_copresentation(cd, res, false);
	std::cout << "\n";
	std::cout << render_copresentation(cd, res, true);
	return 0;
}
