#pragma once

#include <fstream>
#include <set>
#include <string>

#include "json.hpp"

#include "classify.hpp"
#include "copresent.hpp"
#include "curve.hpp"
#include "kgroup.hpp"

namespace tilt {

/* Malformed input (files, JSON shapes). CLI maps this to exit code 2. */
struct input_error : std::runtime_error {
	explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw input_error("cannot open '" + path + "'");
	try {
		return json::parse(in);
	} catch (const json::parse_error& e) {
		throw input_error("cannot parse '" + path + "': " + e.what());
	}
}

namespace jdetail {

inline const json& field(const json& j, const char* key) {
	auto it = j.find(key);
	if (it == j.end()) throw input_error(std::string("missing field '") + key + "'");
	return *it;
}

inline long long int_field(const json& j, const char* key, long long dflt, bool required = false) {
	auto it = j.find(key);
	if (it == j.end()) {
		if (required) throw input_error(std::string("missing field '") + key + "'");
		return dflt;
	}
	if (!it->is_number_integer()) throw input_error(std::string("field '") + key + "' must be an integer");
	return it->get<long long>();
}

inline Rational rational_field(const json& j, const char* key, const Rational& dflt) {
	auto it = j.find(key);
	if (it == j.end()) return dflt;
	if (it->is_number_integer()) return Rational(it->get<long long>());
	if (it->is_string()) {
		try {
			return Rational::parse(it->get<std::string>());
		} catch (const error& e) {
			throw input_error(e.what());
		}
	}
	throw input_error(std::string("field '") + key + "' must be an integer or 'a/b' string");
}

}  // namespace jdetail

inline CurveDescriptor curve_from_json(const json& j) {
	if (!j.is_object()) throw input_error("curve must be a JSON object");
	CurveDescriptor cd;
	cd.epsilon = static_cast<int>(jdetail::int_field(j, "epsilon", 1));
	cd.kappa = jdetail::int_field(j, "kappa", 1);
	cd.s = jdetail::int_field(j, "s", 1);
	cd.genus_nw = static_cast<int>(jdetail::int_field(j, "genus_nw", 0));
	cd.chi_centre = jdetail::rational_field(j, "chi_centre", Rational(1) - Rational(cd.genus_nw));
	if (j.count("chi_orb_override"))
		cd.chi_orb_override = jdetail::rational_field(j, "chi_orb_override", Rational(0));
	auto pts = j.find("points");
	if (pts != j.end()) {
		if (!pts->is_array()) throw input_error("'points' must be an array");
		for (const auto& pj : *pts) {
			PointData pt;
			const json& lbl = jdetail::field(pj, "label");
			if (!lbl.is_string()) throw input_error("point label must be a string");
			pt.label = lbl.get<std::string>();
			pt.p = static_cast<int>(jdetail::int_field(pj, "p", 1));
			pt.f = jdetail::int_field(pj, "f", 1);
			pt.e = jdetail::int_field(pj, "e", 1);
			pt.e_tau = jdetail::int_field(pj, "e_tau", 1);
			pt.res_deg = jdetail::int_field(pj, "res_deg", 1);
			cd.points.push_back(pt);
		}
	}
	try {
		validate_descriptor(cd);
	} catch (const error& e) {
		throw input_error(e.what());
	}
	return cd;
}

inline json curve_to_json(const CurveDescriptor& cd) {
	json j;
	j["epsilon"] = cd.epsilon;
	j["kappa"] = cd.kappa;
	j["s"] = cd.s;
	j["genus_nw"] = cd.genus_nw;
	j["chi_centre"] = cd.chi_centre.str();
	if (cd.chi_orb_override) j["chi_orb_override"] = cd.chi_orb_override->str();
	j["points"] = json::array();
	for (const auto& pt : cd.points)
		j["points"].push_back({{"label", pt.label},
		                       {"p", pt.p},
		                       {"f", pt.f},
		                       {"e", pt.e},
		                       {"e_tau", pt.e_tau},
		                       {"res_deg", pt.res_deg}});
	return j;
}

/* Tube coordinates appear in JSON as {"point": "x", "j": 0, "n": 4} with
   "inf" for Pruefer objects. */
inline std::pair<std::string, TubeCoord> tube_from_json(const json& j) {
	const json& lbl = jdetail::field(j, "point");
	if (!lbl.is_string()) throw input_error("tube 'point' must be a string");
	TubeCoord t;
	t.j = static_cast<int>(jdetail::int_field(j, "j", 0, true));
	const json& n = jdetail::field(j, "n");
	if (n.is_string()) {
		if (n.get<std::string>() != "inf") throw input_error("tube 'n' must be an integer or \"inf\"");
		t.n = TUBE_INF;
	} else if (n.is_number_integer()) {
		t.n = n.get<long long>();
		if (t.n < 1) throw input_error("tube 'n' must be positive");
	} else
		throw input_error("tube 'n' must be an integer or \"inf\"");
	return {lbl.get<std::string>(), t};
}

inline json tube_to_json(const std::string& point, const TubeCoord& t) {
	json j;
	j["point"] = point;
	j["j"] = t.j;
	if (t.is_pruefer()) j["n"] = "inf";
	else j["n"] = t.n;
	return j;
}

inline KClass kclass_from_json(const CurveDescriptor& cd, const json& j) {
	if (!j.is_object()) throw input_error("K-class must be a JSON object");
	KClass k;
	k.L = jdetail::int_field(j, "L", 0);
	auto simples = j.find("simples");
	if (simples != j.end()) {
		if (!simples->is_array()) throw input_error("'simples' must be an array");
		for (const auto& sj : *simples) {
			const json& lbl = jdetail::field(sj, "point");
			if (!lbl.is_string()) throw input_error("simple 'point' must be a string");
			long long jj = jdetail::int_field(sj, "j", 0);
			long long c = jdetail::int_field(sj, "c", 1);
			try {
				kclass_add_simple(cd, k, lbl.get<std::string>(), jj, c);
			} catch (const error& e) {
				throw input_error(e.what());
			}
		}
	}
	return k;
}

inline json kclass_to_json(const KClass& k) {
	json j;
	j["L"] = k.L;
	j["simples"] = json::array();
	for (const auto& [key, c] : k.simples)
		j["simples"].push_back({{"point", key.first}, {"j", key.second}, {"c", c}});
	return j;
}

/* A branch sheaf is a JSON array of components {"root": tube, "summands": [tube...]};
   all coordinates of a component must live at the root's point. */
inline BranchSheaf branch_from_json(const CurveDescriptor& cd, const json& j) {
	if (!j.is_array()) throw input_error("branch sheaf must be a JSON array");
	BranchSheaf b;
	for (const auto& cj : j) {
		auto [label, root] = tube_from_json(jdetail::field(cj, "root"));
		point_of(cd, label);
		if (root.is_pruefer()) throw input_error("branch root must be finite");
		BranchComponent comp;
		comp.root = root;
		const json& sj = jdetail::field(cj, "summands");
		if (!sj.is_array()) throw input_error("'summands' must be an array");
		for (const auto& wj : sj) {
			auto [wl, w] = tube_from_json(wj);
			if (wl != label) throw input_error("branch summand at a different point than its root");
			if (w.is_pruefer()) throw input_error("branch summands must be finite");
			comp.summands.push_back(w);
		}
		b.by_point[label].push_back(comp);
	}
	try {
		validate_branch_sheaf(cd, b);
	} catch (const error& e) {
		throw input_error(e.what());
	}
	return b;
}

inline json branch_to_json(const BranchSheaf& b) {
	json j = json::array();
	for (const auto& [label, comps] : b.by_point)
		for (const auto& comp : comps) {
			json cj;
			cj["root"] = tube_to_json(label, comp.root);
			cj["summands"] = json::array();
			for (const auto& w : comp.summands) cj["summands"].push_back(tube_to_json(label, w));
			j.push_back(cj);
		}
	return j;
}

inline json descriptor_to_json(const TiltingDescriptor& td) {
	json j;
	j["type"] = rep_type_name(td.rtype);
	if (td.has_slope) j["slope"] = td.slope.str();
	j["branch"] = branch_to_json(td.branch);
	j["V"] = json::array();
	for (const auto& x : td.V) j["V"].push_back(x);
	j["torsionfree"] = td.torsionfree;
	j["rays"] = json::object();
	for (const auto& [x, rs] : td.rays) {
		json arr = json::array();
		for (int r : rs) arr.push_back(r);
		j["rays"][x] = arr;
	}
	json res;
	res["base"] = td.resolving.base;
	res["extra"] = json::array();
	for (const auto& [pt, t] : td.resolving.extra) res["extra"].push_back(tube_to_json(pt, t));
	res["rays"] = json::object();
	for (const auto& [x, rs] : td.resolving.rays) {
		json arr = json::array();
		for (int r : rs) arr.push_back(r);
		res["rays"][x] = arr;
	}
	j["resolving"] = res;
	return j;
}

inline json coterm_to_json(const CoTerm& t) {
	json j;
	switch (t.kind) {
		case TermKind::L: j["kind"] = "L"; break;
		case TermKind::Lbar: j["kind"] = "Lbar"; break;
		case TermKind::Arm:
			j["kind"] = "arm";
			j["point"] = t.point;
			j["pos"] = t.arm_pos;
			break;
		case TermKind::G:
			j["kind"] = "G";
			j["name"] = t.gname;
			break;
		case TermKind::Branch:
			j["kind"] = "branch";
			j["point"] = t.point;
			j["j"] = t.coord.j;
			j["n"] = t.coord.n;
			break;
		case TermKind::Pruefer:
			j["kind"] = "pruefer";
			j["point"] = t.point;
			j["j"] = t.coord.j;
			break;
		case TermKind::Kterm: j["kind"] = "K"; break;
		default: j["kind"] = "generic"; break;
	}
	j["mult"] = t.mult;
	if (!t.tag.empty()) j["tag"] = t.tag;
	return j;
}

inline json copresent_to_json(const CopresentResult& res) {
	json j;
	j["x0"] = res.x0;
	j["lambda_rank"] = res.lambda_rank;
	j["sequences"] = json::array();
	for (size_t i = 0; i < res.seqs.size(); ++i) {
		const SES& s = res.seqs[i];
		json sj;
		sj["index"] = i + 1;
		sj["rule"] = s.rule;
		sj["left"] = coterm_to_json(s.left);
		sj["mid"] = json::array();
		for (const auto& t : s.mid_g) sj["mid"].push_back(coterm_to_json(t));
		for (const auto& t : s.mid_branch) sj["mid"].push_back(coterm_to_json(t));
		sj["right"] = json::array();
		for (const auto& t : s.right_branch) sj["right"].push_back(coterm_to_json(t));
		for (const auto& t : s.right_pruefer) sj["right"].push_back(coterm_to_json(t));
		j["sequences"].push_back(sj);
	}
	j["rx"] = json::object();
	j["p_prime"] = json::object();
	j["xprime_simples"] = json::object();
	for (const auto& cal : res.cal) {
		if (!cal.in_V) continue;
		json arr = json::array();
		for (int r : cal.rx) arr.push_back(r);
		j["rx"][cal.label] = arr;
		j["p_prime"][cal.label] = res.p_prime.at(cal.label);
		json xs = json::array();
		for (const auto& t : res.xprime_simples.at(cal.label))
			xs.push_back(tube_to_json(cal.label, t));
		j["xprime_simples"][cal.label] = xs;
	}
	for (const auto& y : res.homog_in_V) j["rx"][y] = json::array({0});
	j["B0"] = json::array();
	for (const auto& [pt, t] : res.B0) j["B0"].push_back(tube_to_json(pt, t));
	j["B1"] = json::array();
	for (const auto& [pt, t] : res.B1) j["B1"].push_back(tube_to_json(pt, t));
	j["lambda_v"] = json::array();
	for (const auto& t : res.lambda_v) j["lambda_v"].push_back(coterm_to_json(t));
	j["eta_right"] = json::array();
	for (const auto& t : res.eta_right) j["eta_right"].push_back(coterm_to_json(t));
	j["inj_coker"] = json::array();
	for (const auto& t : res.inj_coker) j["inj_coker"].push_back(coterm_to_json(t));
	return j;
}

}  // namespace tilt
