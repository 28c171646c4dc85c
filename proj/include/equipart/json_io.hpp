#pragma once

// JSON encodings of masses, arrangements, certificates and results. Exact
// rationals travel as "p/q" strings; a mass file whose coordinates are
// strings is read as an exact point cloud.

#include <json.hpp>

#include <string>
#include <vector>

#include "equipart/bounds.hpp"
#include "equipart/core.hpp"
#include "equipart/f2poly.hpp"
#include "equipart/moment_curve.hpp"
#include "equipart/solver.hpp"

namespace equipart {

using Json = nlohmann::ordered_json;

/// Raised on structurally invalid input documents.
class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MassDocument {
  std::size_t dimension = 0;
  bool exact = false;  ///< any point coordinate given as a string, or interval masses present
  std::vector<Mass<double>> float_masses;
  std::vector<Mass<Rational>> exact_masses;
};

MassDocument masses_from_json(const Json& doc);
Json masses_to_json(const std::vector<Mass<double>>& masses);
Json masses_to_json(const std::vector<Mass<Rational>>& masses);

Json to_json(const Arrangement<double>& arr);
Json to_json(const Arrangement<Rational>& arr);
Arrangement<double> float_arrangement_from_json(const Json& doc);
Arrangement<Rational> exact_arrangement_from_json(const Json& doc);

Json to_json(const BoundsRecord& rec);
Json to_json(const Monomial& m);
Json to_json(const PolyF2& p);
Json to_json(const IndexCertificate& cert);
Json to_json(const EquipartitionCertificate& cert);
EquipartitionCertificate certificate_from_json(const Json& doc);
Json to_json(const RamosTwoDecision& decision);
Json to_json(const SolveResult& result);

}  // namespace equipart
