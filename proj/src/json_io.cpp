#include "equipart/json_io.hpp"

namespace equipart {

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw JsonFormatError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw JsonFormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_from(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.dump());
  throw JsonFormatError("expected a rational \"p/q\" string or an integer");
}

double double_from(const Json& v) {
  if (!v.is_number()) throw JsonFormatError("expected a number");
  return v.get<double>();
}

bool contains_string(const Json& v) {
  if (v.is_string()) return true;
  if (v.is_array())
    for (const auto& e : v)
      if (contains_string(e)) return true;
  return false;
}

template <class S, class Conv>
PointCloud<S> cloud_from(const Json& m, std::size_t dim, Conv conv) {
  const Json& pts = field(m, "points");
  const Json& ws = field(m, "weights");
  if (!pts.is_array() || !ws.is_array()) throw JsonFormatError("points and weights must be arrays");
  std::vector<S> coords;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != dim) throw DimensionError("point of wrong dimension in mass file");
    for (const auto& c : p) coords.push_back(conv(c));
  }
  std::vector<S> weights;
  for (const auto& w : ws) weights.push_back(conv(w));
  return PointCloud<S>(dim, std::move(coords), std::move(weights));
}

MomentIntervals intervals_from(const Json& m, std::size_t dim) {
  std::vector<std::pair<Rational, Rational>> ivs;
  for (const auto& iv : field(m, "intervals")) {
    if (!iv.is_array() || iv.size() != 2) throw JsonFormatError("interval must be a pair");
    ivs.emplace_back(rational_from(iv[0]), rational_from(iv[1]));
  }
  return MomentIntervals(dim, std::move(ivs));
}

Json scalar(double x) { return x; }
Json scalar(const Rational& x) { return to_string(x); }

template <class S>
Json hyperplane_json(const AffineHyperplane<S>& h) {
  Json normal = Json::array();
  for (const auto& c : h.normal) normal.push_back(scalar(c));
  return Json{{"normal", normal}, {"offset", scalar(h.offset)}};
}

template <class S>
Json arrangement_json(const Arrangement<S>& arr) {
  Json hs = Json::array();
  for (const auto& h : arr.hyperplanes()) hs.push_back(hyperplane_json(h));
  return Json{{"hyperplanes", hs}};
}

template <class S, class Conv>
Arrangement<S> arrangement_from(const Json& doc, Conv conv) {
  std::vector<AffineHyperplane<S>> hs;
  for (const auto& h : field(doc, "hyperplanes")) {
    AffineHyperplane<S> hp;
    for (const auto& c : field(h, "normal")) hp.normal.push_back(conv(c));
    hp.offset = conv(field(h, "offset"));
    hs.push_back(std::move(hp));
  }
  return Arrangement<S>(std::move(hs));
}

template <class S>
Json masses_json(const std::vector<Mass<S>>& masses) {
  if (masses.empty()) throw std::invalid_argument("masses_to_json: no masses");
  Json list = Json::array();
  for (const auto& mass : masses) {
    if (const auto* c = std::get_if<PointCloud<S>>(&mass)) {
      Json pts = Json::array(), ws = Json::array();
      for (std::size_t p = 0; p < c->size(); ++p) {
        Json pt = Json::array();
        for (std::size_t i = 0; i < c->dimension(); ++i) pt.push_back(scalar(c->point(p)[i]));
        pts.push_back(pt);
        ws.push_back(scalar(c->weights()[p]));
      }
      list.push_back(Json{{"type", "points"}, {"points", pts}, {"weights", ws}});
    } else {
      const auto& mi = std::get<MomentIntervals>(mass);
      Json ivs = Json::array();
      for (const auto& [a, b] : mi.intervals()) ivs.push_back(Json::array({to_string(a), to_string(b)}));
      list.push_back(Json{{"type", "moment_intervals"}, {"intervals", ivs}});
    }
  }
  return Json{{"dimension", dimension_of(masses.front())}, {"masses", list}};
}

Json rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace

MassDocument masses_from_json(const Json& doc) {
  MassDocument out;
  const Json& dim = field(doc, "dimension");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw JsonFormatError("dimension must be a positive integer");
  out.dimension = dim.get<std::size_t>();
  const Json& list = field(doc, "masses");
  if (!list.is_array() || list.empty()) throw JsonFormatError("masses must be a nonempty array");
  for (const auto& m : list) {
    const std::string type = field(m, "type").get<std::string>();
    if (type == "moment_intervals")
      out.exact = true;
    else if (type == "points") {
      if (contains_string(field(m, "points")) || contains_string(field(m, "weights"))) out.exact = true;
    } else
      throw JsonFormatError("unknown mass type \"" + type + "\"");
  }
  for (const auto& m : list) {
    const std::string type = m["type"].get<std::string>();
    if (out.exact) {
      if (type == "points")
        out.exact_masses.emplace_back(cloud_from<Rational>(m, out.dimension, rational_from));
      else
        out.exact_masses.emplace_back(intervals_from(m, out.dimension));
    } else {
      out.float_masses.emplace_back(cloud_from<double>(m, out.dimension, double_from));
    }
  }
  return out;
}

Json masses_to_json(const std::vector<Mass<double>>& masses) { return masses_json(masses); }
Json masses_to_json(const std::vector<Mass<Rational>>& masses) { return masses_json(masses); }

Json to_json(const Arrangement<double>& arr) { return arrangement_json(arr); }
Json to_json(const Arrangement<Rational>& arr) { return arrangement_json(arr); }

Arrangement<double> float_arrangement_from_json(const Json& doc) { return arrangement_from<double>(doc, double_from); }
Arrangement<Rational> exact_arrangement_from_json(const Json& doc) {
  return arrangement_from<Rational>(doc, rational_from);
}

Json to_json(const BoundsRecord& rec) {
  Json prov = Json::array();
  for (const auto& p : rec.provenance) prov.push_back(p.to_string());
  return Json{{"j", rec.j},
              {"k", rec.k},
              {"lower", rec.lower},
              {"upper", rec.upper},
              {"exact", rec.exact ? Json(*rec.exact) : Json(nullptr)},
              {"provenance", prov}};
}

Json to_json(const Monomial& m) { return Json(m); }

Json to_json(const PolyF2& p) {
  Json out = Json::array();
  for (const auto& m : p.sorted()) out.push_back(to_json(m));
  return out;
}

Json to_json(const IndexCertificate& cert) {
  const auto mani = mani_upper(static_cast<std::int64_t>(cert.j), static_cast<int>(cert.k));
  return Json{{"j", cert.j},
              {"k", cert.k},
              {"d_star", cert.d_star},
              {"witness", to_json(cert.witness)},
              {"mani_upper", mani},
              {"improves_mani", static_cast<std::int64_t>(cert.d_star) < mani}};
}

Json to_json(const EquipartitionCertificate& cert) {
  auto side = [](const std::vector<Rational>& roots, const AffineHyperplane<Rational>& h) {
    Json out = hyperplane_json(h);
    Json ordered{{"roots", rationals(roots)}};
    ordered["normal"] = out["normal"];
    ordered["offset"] = out["offset"];
    return ordered;
  };
  Json orthants = Json::array();
  for (const auto& row : cert.orthants) orthants.push_back(rationals(row));
  return Json{{"j", cert.j},
              {"d", cert.d},
              {"subset", cert.subset},
              {"h1", side(cert.roots1, cert.h1)},
              {"h2", side(cert.roots2, cert.h2)},
              {"orthants", orthants}};
}

EquipartitionCertificate certificate_from_json(const Json& doc) {
  EquipartitionCertificate cert;
  cert.j = field(doc, "j").get<int>();
  cert.d = field(doc, "d").get<std::size_t>();
  cert.subset = field(doc, "subset").get<std::vector<int>>();
  auto side = [](const Json& h, std::vector<Rational>& roots, AffineHyperplane<Rational>& hp) {
    roots.clear();
    if (h.contains("roots"))
      for (const auto& r : h["roots"]) roots.push_back(rational_from(r));
    for (const auto& c : field(h, "normal")) hp.normal.push_back(rational_from(c));
    hp.offset = rational_from(field(h, "offset"));
  };
  side(field(doc, "h1"), cert.roots1, cert.h1);
  side(field(doc, "h2"), cert.roots2, cert.h2);
  if (doc.contains("orthants"))
    for (const auto& row : doc["orthants"]) {
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(rational_from(x));
      cert.orthants.push_back(std::move(r));
    }
  return cert;
}

Json to_json(const RamosTwoDecision& decision) {
  return Json{{"j", decision.j},
              {"d", decision.d},
              {"certified", decision.certified ? Json(*decision.certified) : Json(nullptr)},
              {"status", decision.certified ? "certified" : "inconclusive"},
              {"reasons", decision.reasons},
              {"degree", degree_magnitude(decision.j).get_str()},
              {"degree_valuation", decision.d % 2 == 0 ? Json(decision.degree_valuation) : Json(nullptr)}};
}

Json to_json(const SolveResult& result) {
  return Json{{"status", result.status == SolveStatus::Found ? "Found" : "NotFound"},
              {"residual", result.residual},
              {"arrangement", result.arrangement ? to_json(*result.arrangement) : Json(nullptr)},
              {"evaluations", result.evaluations},
              {"restart_index", result.restart_index}};
}

}  // namespace equipart
