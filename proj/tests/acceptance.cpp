/* Acceptance suite: one line per criterion, nonzero exit if any fails. */

#include "tiltcurve/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace tilt;

#ifndef TILTCURVE_SOURCE_DIR
#define TILTCURVE_SOURCE_DIR "."
#endif

static std::string read_file(const std::string& rel) {
	std::ifstream in(std::string(TILTCURVE_SOURCE_DIR) + "/" + rel);
	if (!in.good()) throw error("cannot open " + rel);
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

static CurveDescriptor tube_curve(int p) {
	CurveDescriptor cd;
	PointData x;
	x.label = "x";
	x.p = p;
	cd.points.push_back(x);
	PointData h;
	h.label = "x0";
	cd.points.push_back(h);
	return cd;
}

static CurveDescriptor weighted_line(std::vector<int> weights, bool homog = false) {
	CurveDescriptor cd;
	int i = 0;
	for (int p : weights) {
		PointData pt;
		pt.label = "x" + std::to_string(++i);
		pt.p = p;
		cd.points.push_back(pt);
	}
	if (homog) {
		PointData o;
		o.label = "o";
		cd.points.push_back(o);
	}
	return cd;
}

struct Checker {
	bool ok = true;
	std::string why;

	void expect(bool cond, const std::string& msg) {
		if (!cond && ok) {
			ok = false;
			why = msg;
		}
	}
};

static int failures = 0;

static void criterion(int num, const std::string& what, long long limit_ms,
                      const std::function<void(Checker&)>& body) {
	Checker c;
	auto t0 = std::chrono::steady_clock::now();
	try {
		body(c);
	} catch (const std::exception& e) {
		c.expect(false, std::string("exception: ") + e.what());
	}
	auto t1 = std::chrono::steady_clock::now();
	long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
	if (ms > limit_ms) c.expect(false, "time limit " + std::to_string(limit_ms) + " ms exceeded");
	if (c.ok) {
		std::cout << "PASS criterion " << num << ": " << what << " [" << ms << " ms]\n";
	} else {
		std::cout << "FAIL criterion " << num << ": " << what << " [" << ms << " ms] " << c.why
		          << "\n";
		++failures;
	}
}

int main() {
	criterion(1, "eleven-weight worked example, numeric and symbolic transcripts", 1000,
	          [](Checker& c) {
		          CurveDescriptor cd = curve_from_json(json::parse(read_file("tests/data/example_curve.json")));
		          BranchSheaf b = branch_from_json(cd, json::parse(read_file("tests/data/example_branch.json")));
		          CopresentOptions opt;
		          opt.anchors["x"] = 2;
		          CopresentResult res = run_copresentation(cd, b, {"x"}, opt);
		          c.expect(res.seqs.size() == 12, "expected 12 sequences");
		          c.expect(render_copresentation(cd, res, false) ==
		                       read_file("tests/golden/copresent_example.txt"),
		                   "numeric transcript mismatch");
		          c.expect(render_copresentation(cd, res, true) ==
		                       read_file("tests/golden/copresent_example_symbolic.txt"),
		                   "symbolic transcript mismatch");
	          });

	criterion(2, "ray index set of the example wings", 1000, [](Checker& c) {
		std::set<int> want{0, 1, 5, 6};
		c.expect(rx_set(11, {{0, 4}, {5, 3}}) == want, "rx_set(11, {(0,4),(5,3)}) wrong");
	});

	{
		Checker c3, c7;
		auto t0 = std::chrono::steady_clock::now();
		for (int p = 1; p <= 5; ++p) {
			CurveDescriptor cd = tube_curve(p);
			long long d = simple_end_dim(cd, point_of(cd, "x"));
			for (int jx = 0; jx < p; ++jx)
				for (long long nx = 1; nx <= 10; ++nx)
					for (int jy = 0; jy < p; ++jy)
						for (long long ny = 1; ny <= 10; ++ny) {
							TubeCoord X{jx, nx}, Y{jy, ny};
							long long h = hom_dim(p, X, Y), e = ext_dim(p, X, Y);
							c3.expect(h == oracle_hom(p, X, Y), "hom mismatch at p=" + std::to_string(p));
							c3.expect(e == oracle_ext(p, X, Y), "ext mismatch at p=" + std::to_string(p));
							long long eu = euler_form(cd, kclass_tube(cd, "x", X), kclass_tube(cd, "x", Y));
							c7.expect(eu == d * (h - e), "euler form mismatch at p=" + std::to_string(p));
						}
		}
		auto t1 = std::chrono::steady_clock::now();
		long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
		if (ms > 60000) c3.expect(false, "time limit 60000 ms exceeded");
		auto report = [&](int num, const std::string& what, Checker& c) {
			if (c.ok)
				std::cout << "PASS criterion " << num << ": " << what << " [" << ms << " ms]\n";
			else {
				std::cout << "FAIL criterion " << num << ": " << what << " [" << ms << " ms] "
				          << c.why << "\n";
				++failures;
			}
		};
		report(3, "tube Hom/Ext formulas agree with the matrix oracle, p <= 5, lengths <= 10", c3);
		report(7, "hom - ext = euler/d on the full criterion 3 grid", c7);
	}

	criterion(4, "wing tilting counts are Catalan and match the oracle", 30000, [](Checker& c) {
		std::vector<long long> want{1, 2, 5, 14, 42};
		for (int r = 1; r <= 5; ++r) {
			long long n = static_cast<long long>(
			    enumerate_connected(r + 1, TubeCoord{0, r}).size());
			c.expect(n == want[r - 1], "enumerate_connected count wrong at r=" + std::to_string(r));
			c.expect(static_cast<long long>(oracle_tilting_Ar(r).size()) == want[r - 1],
			         "oracle tilting count wrong at r=" + std::to_string(r));
		}
	});

	criterion(5, "representation type table", 1000, [](Checker& c) {
		auto d = weighted_line({2, 3, 5});
		c.expect(orbifold_euler_characteristic(d) == Rational(1, 60) &&
		             representation_type(d) == RepType::Domestic,
		         "(2,3,5) wrong");
		auto t = weighted_line({2, 3, 6});
		c.expect(orbifold_euler_characteristic(t) == Rational(0) &&
		             representation_type(t) == RepType::Tubular,
		         "(2,3,6) wrong");
		auto w = weighted_line({2, 3, 7});
		c.expect(orbifold_euler_characteristic(w) == Rational(-1, 84) &&
		             representation_type(w) == RepType::Wild,
		         "(2,3,7) wrong");
		CurveDescriptor e;
		e.genus_nw = 1;
		e.chi_centre = Rational(0);
		c.expect(orbifold_euler_characteristic(e) == Rational(0) &&
		             representation_type(e) == RepType::Elliptic,
		         "genus one wrong");
	});

	criterion(6, "Riemann-Roch on 1000 random pairs plus the full turn radical", 10000,
	          [](Checker& c) {
		          std::mt19937 rng(20260816);
		          auto random_class = [&](const CurveDescriptor& cd) {
			          std::uniform_int_distribution<long long> coeff(-3, 3);
			          std::uniform_int_distribution<size_t> pick(0, cd.points.size() - 1);
			          KClass k = kclass_L(coeff(rng));
			          for (int t = 0; t < 3; ++t) {
				          const PointData& pt = cd.points[pick(rng)];
				          std::uniform_int_distribution<int> off(0, pt.p - 1);
				          kclass_add_simple(cd, k, pt.label, off(rng), coeff(rng));
			          }
			          return k;
		          };
		          for (CurveDescriptor cd : {weighted_line({2, 3, 5}, true), weighted_line({2, 3, 6}, true)}) {
			          for (int i = 0; i < 500; ++i) {
				          KClass a = random_class(cd), b = random_class(cd);
				          auto [lhs, rhs] = riemann_roch_sides(cd, a, b);
				          c.expect(lhs == rhs, "Riemann-Roch sides differ");
			          }
			          for (const auto& pt : cd.points) {
				          if (pt.p == 1) continue;
				          KClass ftc = full_turn_class(cd, pt.label, "o");
				          c.expect(is_full_turn_combination(cd, ftc, "o"), "full turn not recognized");
				          c.expect(euler_form(cd, ftc, kclass_L()) == 0 &&
				                       euler_form(cd, kclass_L(), ftc) == 0,
				                   "full turn pairs with L");
				          for (const auto& q : cd.points)
					          for (int j = 0; j < q.p; ++j) {
						          KClass s = kclass_simple(cd, q.label, j);
						          c.expect(euler_form(cd, ftc, s) == 0 && euler_form(cd, s, ftc) == 0,
						                   "full turn pairs with a simple");
					          }
				          c.expect(avg_euler_form(cd, ftc, random_class(cd)) == Rational(0),
				                   "full turn survives the average form");
			          }
		          }
	          });

	criterion(8, "copresentation sweep over all branch data with p <= 6", 60000, [](Checker& c) {
		for (int p = 2; p <= 6; ++p) {
			CurveDescriptor cd = tube_curve(p);
			for (const auto& comps : enumerate_branches(p)) {
				BranchSheaf b;
				if (!comps.empty()) b.by_point["x"] = comps;
				CopresentResult res = run_copresentation(cd, b, {"x"}, {});
				c.expect(res.seqs.size() == static_cast<size_t>(p) + 1,
				         "sequence count wrong at p=" + std::to_string(p));
				for (const auto& [pt1, t1] : res.B1)
					for (const auto& [pt0, t0] : res.B0)
						if (pt1 == pt0)
							c.expect(hom_dim(p, t1, t0) == 0, "Hom(B1, B0) nonzero at p=" + std::to_string(p));
				std::map<int, int> seen;
				int nl = 0, nlbar = 0;
				for (const auto& s : res.seqs) {
					if (s.left.kind == TermKind::Arm) ++seen[s.left.arm_pos];
					if (s.left.kind == TermKind::L) ++nl;
					if (s.left.kind == TermKind::Lbar) ++nlbar;
				}
				bool cover = nl == 1 && nlbar == 1 && static_cast<int>(seen.size()) == p - 1;
				for (const auto& [pos, cnt] : seen)
					cover = cover && cnt == 1 && pos >= 1 && pos <= p - 1;
				c.expect(cover, "arm coverage wrong at p=" + std::to_string(p));
			}
		}
	});

	criterion(9, "descriptor counts at desk scale", 1000, [](Checker& c) {
		CurveDescriptor ell = curve_from_json(json::parse(read_file("tests/data/elliptic_two.json")));
		auto e = enumerate_tilting(ell, {SlopeSpec::infinite()});
		c.expect(e.size() == 4, "elliptic window expected 4 descriptors");
		CurveDescriptor dom = curve_from_json(json::parse(read_file("tests/data/domestic_small.json")));
		auto d = enumerate_tilting(dom, {});
		std::vector<std::string> got;
		for (const auto& td : d) got.push_back(descriptor_str(td));
		std::vector<std::string> want;
		std::istringstream lines(read_file("tests/golden/domestic_small_list.txt"));
		std::string line;
		while (std::getline(lines, line))
			if (!line.empty()) want.push_back(line);
		c.expect(got == want, "domestic descriptor list differs from the golden list");
	});

	if (failures) {
		std::cout << failures << " criteria failed\n";
		return 1;
	}
	std::cout << "all criteria passed\n";
	return 0;
}
