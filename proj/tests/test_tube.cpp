#include <catch2/catch_amalgamated.hpp>

#include "tiltcurve/oracle.hpp"
#include "tiltcurve/tube.hpp"

#include <set>

using namespace tilt;

TEST_CASE("tube coordinate plumbing", "[tube]") {
	REQUIRE(tube_normal(5, TubeCoord{7, 2}) == TubeCoord{2, 2});
	REQUIRE(tube_normal(5, TubeCoord{-1, TUBE_INF}) == TubeCoord{4, TUBE_INF});
	REQUIRE(tau_shift(5, TubeCoord{4, 3}, 1) == TubeCoord{0, 3});
	REQUIRE(tau_shift(5, TubeCoord{0, 3}, -1) == TubeCoord{4, 3});
	REQUIRE(tube_top(5, TubeCoord{1, 3}) == 4);
	REQUIRE(tube_top(5, TubeCoord{0, 1}) == 0);
	REQUIRE_THROWS_AS(check_tube_coord(5, TubeCoord{0, 0}), error);
	REQUIRE_THROWS_AS(check_tube_coord(5, TubeCoord{0, -2}), error);
}

TEST_CASE("hom formula agrees with the oracle", "[tube]") {
	for (int p = 1; p <= 4; ++p)
		for (int a = 0; a < p; ++a)
			for (int m = 1; m <= 6; ++m)
				for (int b = 0; b < p; ++b)
					for (int n = 1; n <= 6; ++n) {
						TubeCoord X{a, m}, Y{b, n};
						INFO("p=" << p << " X=" << tube_term_str(X, "x") << " Y=" << tube_term_str(Y, "x"));
						REQUIRE(hom_dim(p, X, Y) == oracle_hom(oracle_rep(p, a, m), oracle_rep(p, b, n)));
					}
}

TEST_CASE("ext formula agrees with the oracle", "[tube]") {
	for (int p = 1; p <= 4; ++p)
		for (int a = 0; a < p; ++a)
			for (int m = 1; m <= 5; ++m)
				for (int b = 0; b < p; ++b)
					for (int n = 1; n <= 5; ++n) {
						TubeCoord X{a, m}, Y{b, n};
						REQUIRE(ext_dim(p, X, Y) == oracle_ext(p, X, Y));
					}
}

TEST_CASE("hom into a Pruefer sheaf is the stable column count", "[tube]") {
	/* hom(X, S_b[N]) stabilizes once N is large; the Pruefer value must
	   match the stabilized oracle value */
	for (int p = 1; p <= 4; ++p)
		for (int a = 0; a < p; ++a)
			for (int m = 1; m <= 5; ++m)
				for (int b = 0; b < p; ++b) {
					TubeCoord X{a, m}, Y{b, TUBE_INF};
					int big = m + 3 * p + 5;
					int stable = oracle_hom(oracle_rep(p, a, m), oracle_rep(p, b, big));
					int again = oracle_hom(oracle_rep(p, a, m), oracle_rep(p, b, big + p));
					REQUIRE(stable == again);
					REQUIRE(hom_dim(p, X, Y) == stable);
				}
}

TEST_CASE("Pruefer conventions", "[tube]") {
	TubeCoord P{1, TUBE_INF}, F{0, 2};
	REQUIRE(hom_dim(3, P, F) == 0);
	REQUIRE(ext_dim(3, F, P) == 0);
	REQUIRE_THROWS_AS(hom_dim(3, P, P), error);
	REQUIRE_THROWS_AS(ext_dim(3, P, F), error);
	REQUIRE_THROWS_AS(ext_dim(3, P, P), error);
}

TEST_CASE("hom is invariant under the tube rotation", "[tube]") {
	for (int p = 2; p <= 5; ++p)
		for (int a = 0; a < p; ++a)
			for (int m = 1; m <= 4; ++m)
				for (int b = 0; b < p; ++b)
					for (int n = 1; n <= 4; ++n) {
						TubeCoord X{a, m}, Y{b, n};
						REQUIRE(hom_dim(p, X, Y) == hom_dim(p, tau_shift(p, X, 1), tau_shift(p, Y, 1)));
					}
}

TEST_CASE("wing membership and enumeration", "[tube]") {
	TubeCoord root{0, 3};
	auto w = wing_of(5, root);
	REQUIRE(w.size() == 6);
	std::set<TubeCoord> ws(w.begin(), w.end());
	REQUIRE(ws.count(TubeCoord{0, 1}) == 1);
	REQUIRE(ws.count(TubeCoord{0, 2}) == 1);
	REQUIRE(ws.count(TubeCoord{0, 3}) == 1);
	REQUIRE(ws.count(TubeCoord{4, 1}) == 1);
	REQUIRE(ws.count(TubeCoord{4, 2}) == 1);
	REQUIRE(ws.count(TubeCoord{3, 1}) == 1);
	for (auto& c : w) REQUIRE(in_wing(5, root, c));
	REQUIRE_FALSE(in_wing(5, root, TubeCoord{1, 1}));
	REQUIRE_FALSE(in_wing(5, root, TubeCoord{0, 4}));
	REQUIRE_FALSE(in_wing(5, root, TubeCoord{3, 2}));
	REQUIRE_THROWS_AS(wing_of(3, TubeCoord{0, 3}), error);
}

TEST_CASE("wing segments and adjacency", "[tube]") {
	Segment a = wing_segment(11, TubeCoord{0, 4});
	REQUIRE(a.start == 0);
	REQUIRE(a.len == 4);
	auto mem = segment_members(11, a);
	REQUIRE(mem == std::set<int>{0, 10, 9, 8});

	SECTION("single wing is always fine") {
		REQUIRE(nonadjacent_check(2, {Segment{0, 1}}));
		REQUIRE(nonadjacent_check(5, {Segment{3, 4}}));
	}
	SECTION("touching wings are rejected") {
		REQUIRE_FALSE(nonadjacent_check(3, {Segment{0, 1}, Segment{2, 1}}));
		REQUIRE_FALSE(nonadjacent_check(4, {Segment{0, 1}, Segment{1, 1}}));
	}
	SECTION("gap on both sides is required") {
		REQUIRE(nonadjacent_check(4, {Segment{0, 1}, Segment{2, 1}}));
		REQUIRE_FALSE(nonadjacent_check(4, {Segment{0, 1}, Segment{2, 2}}));
	}
	SECTION("the whole rim never fits") {
		REQUIRE_FALSE(nonadjacent_check(3, {Segment{0, 2}, Segment{0, 1}}));
	}
}

TEST_CASE("ray sets left free by wings", "[tube]") {
	REQUIRE(rx_set(11, {Segment{0, 4}, Segment{5, 3}}) == std::set<int>{0, 1, 5, 6});
	REQUIRE(rx_set(2, {}) == std::set<int>{0, 1});
	REQUIRE(rx_set(2, {Segment{0, 1}}) == std::set<int>{0});
	REQUIRE(rx_set(2, {Segment{1, 1}}) == std::set<int>{1});
	REQUIRE_THROWS_AS(rx_set(3, {Segment{0, 1}, Segment{2, 1}}), error);
}

TEST_CASE("term rendering", "[tube]") {
	REQUIRE(tube_term_str(TubeCoord{0, 4}, "x") == "tau^0S_x[4]");
	REQUIRE(tube_term_str(TubeCoord{9, 2}, "x") == "tau^9S_x[2]");
	REQUIRE(tube_term_str(TubeCoord{5, TUBE_INF}, "x0") == "tau^5S_x0[inf]");
}
