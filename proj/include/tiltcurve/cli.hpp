#pragma once

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "json_io.hpp"
#include "oracle.hpp"

namespace tilt {

namespace clidetail {

inline std::vector<std::string> split_csv(const std::string& s) {
	std::vector<std::string> out;
	std::string cur;
	for (char ch : s) {
		if (ch == ',') {
			if (!cur.empty()) out.push_back(cur);
			cur.clear();
		} else
			cur += ch;
	}
	if (!cur.empty()) out.push_back(cur);
	return out;
}

inline SlopeSpec parse_slope(const std::string& s) {
	if (s == "inf") return SlopeSpec::infinite();
	if (s.rfind("irr:", 0) == 0) {
		auto rest = s.substr(4);
		auto colon = rest.find(':');
		if (colon == std::string::npos) throw input_error("irrational slope must be irr:lo:hi");
		try {
			return SlopeSpec::irrational(Rational::parse(rest.substr(0, colon)),
			                             Rational::parse(rest.substr(colon + 1)));
		} catch (const error& e) {
			throw input_error(e.what());
		}
	}
	try {
		return SlopeSpec::finite(Rational::parse(s));
	} catch (const error& e) {
		throw input_error(e.what());
	}
}

inline std::map<std::string, int> parse_anchors(const std::vector<std::string>& specs) {
	std::map<std::string, int> out;
	for (const auto& a : specs) {
		auto eq = a.find('=');
		if (eq == std::string::npos) throw input_error("anchor must be point=index");
		try {
			out[a.substr(0, eq)] = std::stoi(a.substr(eq + 1));
		} catch (const std::logic_error&) {
			throw input_error("anchor must be point=index");
		}
	}
	return out;
}

inline std::string branch_line(const std::vector<BranchComponent>& comps) {
	if (comps.empty()) return "0";
	std::string out;
	for (size_t i = 0; i < comps.size(); ++i) {
		const auto& c = comps[i];
		if (i) out += " ; ";
		out += "root " + tube_term_str(c.root, "x") + " [";
		for (size_t k = 0; k < c.summands.size(); ++k) {
			if (k) out += ", ";
			out += tube_term_str(c.summands[k], "x");
		}
		out += "]";
	}
	return out;
}

inline std::string diagram_for_point(const CurveDescriptor& cd, const BranchSheaf& branch,
                                     const std::set<std::string>& V, const std::string& label) {
	const PointData& pt = point_of(cd, label);
	int p = pt.p;
	std::vector<BranchComponent> comps;
	auto it = branch.by_point.find(label);
	if (it != branch.by_point.end()) comps = it->second;
	bool in_v = V.count(label) != 0;
	std::set<std::pair<int, long long>> roots, summands, under;
	for (const auto& c : comps) {
		TubeCoord r = tube_normal(p, c.root);
		roots.insert({r.j, r.n});
		for (const auto& w : c.summands) {
			TubeCoord t = tube_normal(p, w);
			summands.insert({t.j, t.n});
		}
	}
	for (const auto& u : undercut_union(p, comps, in_v)) under.insert({u.j, u.n});
	std::set<int> rays;
	if (in_v) rays = branch_rx(p, comps);
	std::ostringstream os;
	os << label << ": p=" << p << (in_v ? " (in V)" : "") << "\n";
	int width = 2 * p;
	os << "inf ";
	for (int col = 0; col < width; ++col)
		os << " " << (rays.count(col % p) ? 'I' : '.');
	os << "\n";
	long long nmax = p > 1 ? p - 1 : 1;
	for (long long n = nmax; n >= 1; --n) {
		std::ostringstream row;
		row << "n=" << n;
		std::string head = row.str();
		head.resize(4, ' ');
		os << head;
		for (int col = 0; col < width; ++col) {
			std::pair<int, long long> key{col % p, n};
			char m = 'o';
			if (under.count(key)) m = 'u';
			if (summands.count(key)) m = '*';
			if (roots.count(key)) m = '^';
			os << " " << m;
		}
		os << "\n";
	}
	return os.str();
}

}  // namespace clidetail

/* In-process CLI entry point: args exclude the program name. */
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"numerics of large tilting sheaves on weighted noncommutative curves"};
	app.require_subcommand(1);
	std::string format;
	app.add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}));

	auto* c_classify = app.add_subcommand("classify", "representation type and curve numerics");
	std::string cl_curve;
	c_classify->add_option("--curve", cl_curve, "curve JSON file")->required();

	auto* c_branches = app.add_subcommand("branches", "enumerate branch data in one tube");
	int br_p = 1;
	bool br_count = false;
	c_branches->add_option("--p", br_p, "tube rank")->required()->check(CLI::Range(1, 12));
	c_branches->add_flag("--count,--count-only", br_count, "print only the number of branches");

	auto* c_tilting = app.add_subcommand("tilting", "tilting sheaf descriptors");
	std::string ti_curve, ti_branch, ti_v, ti_slope, ti_window;
	bool ti_enumerate = false;
	c_tilting->add_option("--curve", ti_curve, "curve JSON file")->required();
	c_tilting->add_option("--branch", ti_branch, "branch sheaf JSON file");
	c_tilting->add_option("--V", ti_v, "comma separated V points");
	c_tilting->add_option("--slope", ti_slope, "slope: inf, a/b, or irr:lo:hi");
	c_tilting->add_flag("--enumerate", ti_enumerate, "enumerate descriptors");
	c_tilting->add_option("--slopes", ti_window, "slope window for --enumerate");

	auto* c_copresent = app.add_subcommand("copresent", "copresentation of the tilting sheaf");
	std::string co_curve, co_branch, co_v;
	std::vector<std::string> co_anchor;
	bool co_symbolic = false;
	c_copresent->add_option("--curve", co_curve, "curve JSON file")->required();
	c_copresent->add_option("--branch", co_branch, "branch sheaf JSON file");
	c_copresent->add_option("--V", co_v, "comma separated V points");
	c_copresent->add_option("--anchor", co_anchor, "display anchor point=index (repeatable)");
	c_copresent->add_flag("--symbolic", co_symbolic, "symbolic exponents");

	auto* c_kform = app.add_subcommand("kform", "Euler form and Riemann-Roch data");
	std::string kf_curve, kf_a, kf_b;
	c_kform->add_option("--curve", kf_curve, "curve JSON file")->required();
	c_kform->add_option("--a", kf_a, "first K-class JSON file")->required();
	c_kform->add_option("--b", kf_b, "second K-class JSON file")->required();

	auto* c_diagram = app.add_subcommand("diagram", "tube diagram of a branch sheaf");
	std::string di_curve, di_branch, di_v, di_point;
	c_diagram->add_option("--curve", di_curve, "curve JSON file")->required();
	c_diagram->add_option("--branch", di_branch, "branch sheaf JSON file");
	c_diagram->add_option("--V", di_v, "comma separated V points");
	c_diagram->add_option("--point", di_point, "only this point");

	auto* c_oracle = app.add_subcommand("oracle", "brute force tube Hom/Ext");
	c_oracle->group("");
	int or_p = 1;
	std::string or_x, or_y;
	long long or_n = 0;
	c_oracle->add_option("--p", or_p, "tube rank")->required()->check(CLI::Range(1, 24));
	c_oracle->add_option("--x", or_x, "first object j,n")->required();
	c_oracle->add_option("--y", or_y, "second object j,n")->required();
	c_oracle->add_option("--N", or_n, "truncation bound");

	std::vector<std::string> argv_store = args;
	std::vector<char*> cargv;
	std::string prog = "tiltcurve";
	cargv.push_back(prog.data());
	for (auto& a : argv_store) cargv.push_back(a.data());
	try {
		app.parse(static_cast<int>(cargv.size()), cargv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return 0;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return 0;
	} catch (const CLI::ParseError& e) {
		err << "usage error: " << e.what() << "\n";
		return 2;
	}

	if (format.empty()) {
		const char* env = std::getenv("TILTCURVE_FORMAT");
		if (env) format = env;
	}
	bool as_json = format == "json";

	try {
		if (c_classify->parsed()) {
			CurveDescriptor cd = curve_from_json(load_json_file(cl_curve));
			Rational chi = orbifold_euler_characteristic(cd);
			Rational delta = dualizing_degree(cd);
			if (as_json) {
				json j;
				j["type"] = rep_type_name(representation_type(cd));
				j["chi_orb"] = chi.str();
				j["delta"] = delta.str();
				j["pbar"] = pbar(cd);
				out << j.dump(2) << "\n";
			} else {
				out << rep_type_name(representation_type(cd)) << ", chi'=" << chi.str()
				    << ", delta=" << delta.str() << ", pbar=" << pbar(cd) << "\n";
			}
		} else if (c_branches->parsed()) {
			auto all = enumerate_branches(br_p);
			if (br_count) {
				if (as_json) out << json{{"count", all.size()}}.dump(2) << "\n";
				else out << all.size() << "\n";
			} else if (as_json) {
				json j = json::array();
				for (const auto& comps : all) {
					json cj = json::array();
					for (const auto& c : comps) {
						json one;
						one["root"] = {{"j", c.root.j}, {"n", c.root.n}};
						one["summands"] = json::array();
						for (const auto& w : c.summands)
							one["summands"].push_back({{"j", w.j}, {"n", w.n}});
						cj.push_back(one);
					}
					j.push_back(cj);
				}
				out << j.dump(2) << "\n";
			} else {
				for (const auto& comps : all) out << clidetail::branch_line(comps) << "\n";
			}
		} else if (c_tilting->parsed()) {
			CurveDescriptor cd = curve_from_json(load_json_file(ti_curve));
			if (ti_enumerate) {
				std::vector<SlopeSpec> window;
				for (const auto& w : clidetail::split_csv(ti_window))
					window.push_back(clidetail::parse_slope(w));
				auto all = enumerate_tilting(cd, window);
				if (as_json) {
					json j = json::array();
					for (const auto& td : all) j.push_back(descriptor_to_json(td));
					out << j.dump(2) << "\n";
				} else {
					for (const auto& td : all) out << descriptor_str(td) << "\n";
				}
			} else {
				BranchSheaf b;
				if (!ti_branch.empty()) b = branch_from_json(cd, load_json_file(ti_branch));
				std::set<std::string> v;
				for (const auto& x : clidetail::split_csv(ti_v)) v.insert(x);
				std::optional<SlopeSpec> slope;
				if (!ti_slope.empty()) slope = clidetail::parse_slope(ti_slope);
				TiltingDescriptor td = tilting_descriptor(cd, b, v, slope);
				if (as_json) out << descriptor_to_json(td).dump(2) << "\n";
				else out << descriptor_str(td) << "\n";
			}
		} else if (c_copresent->parsed()) {
			CurveDescriptor cd = curve_from_json(load_json_file(co_curve));
			BranchSheaf b;
			if (!co_branch.empty()) b = branch_from_json(cd, load_json_file(co_branch));
			std::set<std::string> v;
			for (const auto& x : clidetail::split_csv(co_v)) v.insert(x);
			CopresentOptions opt;
			opt.anchors = clidetail::parse_anchors(co_anchor);
			CopresentResult res = run_copresentation(cd, b, v, opt);
			if (as_json) out << copresent_to_json(res).dump(2) << "\n";
			else out << render_copresentation(cd, res, co_symbolic);
		} else if (c_kform->parsed()) {
			CurveDescriptor cd = curve_from_json(load_json_file(kf_curve));
			KClass a = kclass_from_json(cd, load_json_file(kf_a));
			KClass b = kclass_from_json(cd, load_json_file(kf_b));
			long long euler = euler_form(cd, a, b);
			std::string avg = "undefined", rr_lhs = "undefined", rr_rhs = "undefined";
			try {
				avg = avg_euler_form(cd, a, b).str();
				auto [lhs, rhs] = riemann_roch_sides(cd, a, b);
				rr_lhs = lhs.str();
				rr_rhs = rhs.str();
			} catch (const error&) {
			}
			auto side = [&](const KClass& k) {
				NumericalData nd = numerical_data(cd, k);
				json j;
				j["rank"] = nd.rank;
				j["degree"] = nd.degree;
				j["slope"] = nd.slope_infinite ? "inf" : nd.slope.str();
				return j;
			};
			if (as_json) {
				json j;
				j["euler"] = euler;
				j["avg"] = avg;
				j["rr_lhs"] = rr_lhs;
				j["rr_rhs"] = rr_rhs;
				j["a"] = side(a);
				j["b"] = side(b);
				out << j.dump(2) << "\n";
			} else {
				json ja = side(a), jb = side(b);
				out << "euler=" << euler << "\n"
				    << "avg=" << avg << "\n"
				    << "rr_lhs=" << rr_lhs << "\n"
				    << "rr_rhs=" << rr_rhs << "\n"
				    << "a: rank=" << ja["rank"] << " degree=" << ja["degree"] << " slope="
				    << ja["slope"].get<std::string>() << "\n"
				    << "b: rank=" << jb["rank"] << " degree=" << jb["degree"] << " slope="
				    << jb["slope"].get<std::string>() << "\n";
			}
		} else if (c_diagram->parsed()) {
			CurveDescriptor cd = curve_from_json(load_json_file(di_curve));
			BranchSheaf b;
			if (!di_branch.empty()) b = branch_from_json(cd, load_json_file(di_branch));
			std::set<std::string> v;
			for (const auto& x : clidetail::split_csv(di_v)) v.insert(x);
			for (const auto& x : v) point_of(cd, x);
			std::string text;
			for (const auto& pt : cd.points) {
				if (!di_point.empty() && pt.label != di_point) continue;
				if (pt.p < 2 && !v.count(pt.label)) continue;
				text += clidetail::diagram_for_point(cd, b, v, pt.label);
			}
			if (!di_point.empty()) point_of(cd, di_point);
			if (as_json) out << json{{"diagram", text}}.dump(2) << "\n";
			else out << text;
		} else if (c_oracle->parsed()) {
			auto parse_pair = [](const std::string& s) {
				auto parts = clidetail::split_csv(s);
				if (parts.size() != 2) throw input_error("object must be j,n");
				try {
					return TubeCoord{std::stoi(parts[0]), std::stoll(parts[1])};
				} catch (const std::logic_error&) {
					throw input_error("object must be j,n");
				}
			};
			TubeCoord x = parse_pair(or_x), y = parse_pair(or_y);
			long long h = oracle_hom(or_p, x, y);
			long long e = oracle_ext(or_p, x, y, or_n);
			if (as_json) out << json{{"hom", h}, {"ext", e}}.dump(2) << "\n";
			else out << "hom=" << h << " ext=" << e << "\n";
		}
	} catch (const input_error& e) {
		err << "input error: " << e.what() << "\n";
		return 2;
	} catch (const error& e) {
		err << "error: " << e.what() << "\n";
		return 1;
	}
	return 0;
}

}  // namespace tilt
