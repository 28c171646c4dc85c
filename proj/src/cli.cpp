#include "equipart/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "equipart/json_io.hpp"

namespace equipart::cli {

namespace {

enum class Format { Json, Csv, Markdown, Plain };

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"markdown", Format::Markdown}, {"plain", Format::Plain}};

/// A failure the user caused; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A negative answer (NotFound, failed verification); exit code 1.
struct NegativeResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Row = std::vector<std::pair<std::string, std::string>>;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render_rows(const std::vector<Row>& rows, Format format, std::ostream& out) {
  if (rows.empty()) return;
  const Row& head = rows.front();
  switch (format) {
    case Format::Csv:
      for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << csv_field(head[i].first);
      out << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i].second);
        out << '\n';
      }
      break;
    case Format::Markdown:
      out << '|';
      for (const auto& [k, v] : head) out << ' ' << k << " |";
      out << "\n|";
      for (std::size_t i = 0; i < head.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& r : rows) {
        out << '|';
        for (const auto& [k, v] : r) out << ' ' << v << " |";
        out << '\n';
      }
      break;
    default:
      for (std::size_t n = 0; n < rows.size(); ++n) {
        if (n) out << '\n';
        for (const auto& [k, v] : rows[n]) out << k << ": " << v << '\n';
      }
  }
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string compact(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Flattens a JSON object into one row.
Row row_of(const Json& obj) {
  Row r;
  for (const auto& [k, v] : obj.items()) r.emplace_back(k, v.is_null() ? "" : compact(v));
  return r;
}

void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << doc.dump(2) << '\n';
    return;
  }
  if (doc.is_array()) {
    std::vector<Row> rows;
    for (const auto& e : doc) rows.push_back(row_of(e));
    render_rows(rows, format, out);
  } else {
    render_rows({row_of(doc)}, format, out);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<Mass<double>> float_masses(const MassDocument& doc) {
  if (!doc.exact) return doc.float_masses;
  // Exact clouds are converted explicitly; interval masses have no float form.
  std::vector<Mass<double>> out;
  for (const auto& m : doc.exact_masses) {
    const auto* c = std::get_if<PointCloud<Rational>>(&m);
    if (!c) throw ScalarKindError("solve: moment-interval masses are exact only");
    std::vector<double> coords, weights;
    for (const auto& x : c->coordinates()) coords.push_back(to_double(x));
    for (const auto& w : c->weights()) weights.push_back(to_double(w));
    out.emplace_back(PointCloud<double>(c->dimension(), std::move(coords), std::move(weights)));
  }
  return out;
}

std::string table_plain(const BoundsTable& table) {
  std::ostringstream os;
  for (const auto& c : table.cells()) {
    os << "j=" << c.j << " k=" << c.k << " lower=" << c.lower << " upper=" << c.upper;
    if (c.exact) os << " exact=" << *c.exact;
    os << '\n';
  }
  return os.str();
}

std::string disputed_section(const BoundsTable& table, Format format) {
  const auto claims = disputed_claims(table.jmax(), table.kmax());
  std::ostringstream os;
  if (format == Format::Markdown) {
    os << "\nDisputed upper bounds (published, proofs incomplete; not used above):\n\n";
    os << "| j | k | claimed upper | source |\n|---|---|---|---|\n";
    for (const auto& c : claims) os << "| " << c.j << " | " << c.k << " | " << c.claimed_upper << " | " << c.source << " |\n";
  } else {
    os << "\ndisputed\nj,k,claimed_upper,source\n";
    for (const auto& c : claims) os << c.j << ',' << c.k << ',' << c.claimed_upper << ',' << csv_field(c.source) << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equipartitions of masses by hyperplanes", "equipart"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "equipart 0.1.0");

  std::string format_name;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown", "plain"}));
  };

  int j = 0, k = 0, jmax = 0, kmax = 0;
  bool conjecture = false, disputed = false, with_certificates = false;
  std::string out_path, cert_path, masses_path;
  SolverConfig solver;

  auto* bounds = app.add_subcommand("bounds", "Bounds on Delta(j, k) for one cell");
  bounds->add_option("--j", j, "Number of masses")->required()->check(CLI::Range(1, 1 << 20));
  bounds->add_option("--k", k, "Number of hyperplanes")->required()->check(CLI::Range(1, 16));
  bounds->add_flag("--index-certificates", with_certificates, "Also merge F2 index certificates");
  add_format(bounds);

  auto* table = app.add_subcommand("table", "Propagated bounds table");
  table->add_option("--jmax", jmax, "Largest j")->required()->check(CLI::Range(1, 4096));
  table->add_option("--kmax", kmax, "Largest k")->required()->check(CLI::Range(1, 16));
  auto* conj_opt = table->add_flag("--conjecture", conjecture, "Append the conjectured values");
  auto* disp_opt = table->add_flag("--disputed", disputed, "Append disputed published claims");
  conj_opt->excludes(disp_opt);
  table->add_flag("--index-certificates", with_certificates, "Also merge F2 index certificates");
  add_format(table);

  auto* certify = app.add_subcommand("certify", "F2 index certificate for an upper bound");
  certify->add_option("--j", j, "Number of masses")->required()->check(CLI::PositiveNumber);
  certify->add_option("--k", k, "Number of hyperplanes")->required()->check(CLI::Range(1, 4));
  add_format(certify);

  auto* enumerate = app.add_subcommand("enumerate", "Equipartitions of the standard moment-curve configuration");
  enumerate->add_option("--j", j, "Number of masses (odd, at most 9)")->required();
  enumerate->add_option("--out", out_path, "Write certificates to this file");
  add_format(enumerate);

  auto* verify = app.add_subcommand("verify", "Re-verify certificates exactly");
  verify->add_option("--cert", cert_path, "Certificate JSON (one certificate or a list)")->required();
  verify->add_option("--masses", masses_path, "Interval masses to verify against instead of the standard ones");
  add_format(verify);

  auto* solve_cmd = app.add_subcommand("solve", "Numerical search for an eps-equipartition");
  solve_cmd->add_option("--masses", masses_path, "Mass JSON")->required();
  solve_cmd->add_option("--k", k, "Number of hyperplanes")->required()->check(CLI::Range(1, 16));
  solve_cmd->add_option("--eps", solver.eps, "Per-orthant tolerance")->capture_default_str();
  solve_cmd->add_option("--seed", solver.seed, "RNG seed")->capture_default_str();
  solve_cmd->add_option("--restarts", solver.restarts, "Number of restarts")->capture_default_str();
  solve_cmd->add_option("--max-iters", solver.max_iters, "Simplex iterations per restart")->capture_default_str();
  solve_cmd->add_option("--time-budget", solver.time_budget, "Seconds before giving up")->capture_default_str();
  solve_cmd->add_option("--threads", solver.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_format(solve_cmd);

  auto* decide = app.add_subcommand("decide", "Degree test for Delta(j, 2) = (3j + 1) / 2");
  decide->add_option("--j", j, "Number of masses (odd)")->required()->check(CLI::PositiveNumber);
  add_format(decide);

  std::vector<const char*> argv{"equipart"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const bool is_table = table->parsed();
  const Format format = format_name.empty() ? (is_table ? Format::Markdown : Format::Json) : kFormats.at(format_name);

  try {
    if (bounds->parsed()) {
      emit(to_json(bounds_for(j, k, {with_certificates})), format, out);
    } else if (is_table) {
      const auto t = BoundsTable::build(jmax, kmax, {with_certificates});
      switch (format) {
        case Format::Markdown:
          out << render_table(t, TableFormat::Markdown, {conjecture});
          if (disputed) out << disputed_section(t, format);
          break;
        case Format::Csv:
          out << render_table(t, TableFormat::Csv, {conjecture});
          if (disputed) out << disputed_section(t, format);
          break;
        case Format::Json: {
          // The JSON rendering always carries the disputed list under its own key.
          auto doc = Json::parse(render_table(t, TableFormat::Json, {conjecture}));
          out << doc.dump(2) << '\n';
          break;
        }
        case Format::Plain:
          out << table_plain(t);
          if (disputed) out << disputed_section(t, Format::Csv);
          break;
      }
    } else if (certify->parsed()) {
      emit(to_json(certify_upper_bound(static_cast<std::uint64_t>(j), static_cast<std::size_t>(k))), format, out);
    } else if (enumerate->parsed()) {
      const auto certs = enumerate_standard(j);
      Json list = Json::array();
      for (const auto& c : certs) list.push_back(to_json(c));
      if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
        file << list.dump(2) << '\n';
        if (!file) throw UsageError("write to " + out_path + " failed");
        emit(Json{{"j", j}, {"count", certs.size()}, {"out", out_path}}, format, out);
      } else if (format == Format::Json) {
        out << list.dump(2) << '\n';
      } else {
        Json rows = Json::array();
        for (const auto& c : certs)
          rows.push_back(Json{{"j", c.j}, {"d", c.d}, {"subset", c.subset}, {"h1_offset", to_string(c.h1.offset)}});
        emit(rows, format, out);
      }
    } else if (verify->parsed()) {
      const Json doc = read_json_file(cert_path);
      std::vector<EquipartitionCertificate> certs;
      if (doc.is_array())
        for (const auto& c : doc) certs.push_back(certificate_from_json(c));
      else
        certs.push_back(certificate_from_json(doc));
      if (certs.empty()) throw UsageError("no certificates in " + cert_path);

      std::vector<std::pair<Rational, Rational>> intervals;
      if (!masses_path.empty()) {
        const auto md = masses_from_json(read_json_file(masses_path));
        for (const auto& m : md.exact_masses) {
          const auto* mi = std::get_if<MomentIntervals>(&m);
          if (!mi || mi->intervals().size() != 1)
            throw UsageError("verify: --masses must list single-interval moment masses");
          intervals.push_back(mi->intervals().front());
        }
        if (intervals.empty()) throw UsageError("verify: --masses must list single-interval moment masses");
      }
      Json rows = Json::array();
      for (std::size_t i = 0; i < certs.size(); ++i) {
        auto& c = certs[i];
        try {
          const auto table = intervals.empty() ? verify_certificate(c, StandardConfiguration(c.j))
                                               : verify_certificate(c, intervals);
          if (!c.orthants.empty() && c.orthants != table)
            throw CertificateError("stored orthant table differs from the recomputed one");
        } catch (const CertificateError& e) {
          throw NegativeResult("certificate " + std::to_string(i) + ": " + e.what());
        } catch (const std::domain_error& e) {
          throw NegativeResult("certificate " + std::to_string(i) + ": " + e.what());
        }
        rows.push_back(Json{{"index", i}, {"j", c.j}, {"subset", c.subset}, {"verified", true}});
      }
      if (format == Format::Json)
        out << Json{{"verified", certs.size()}, {"certificates", rows}}.dump(2) << '\n';
      else
        emit(rows, format, out);
    } else if (solve_cmd->parsed()) {
      const auto masses = float_masses(masses_from_json(read_json_file(masses_path)));
      const auto result = solve(masses, static_cast<std::size_t>(k), solver);
      if (format == Format::Json) {
        out << to_json(result).dump(2) << '\n';
      } else {
        Json flat = to_json(result);
        flat.erase("arrangement");
        if (result.arrangement)
          for (std::size_t h = 0; h < result.arrangement->size(); ++h)
            flat["h" + std::to_string(h + 1)] = to_json(*result.arrangement)["hyperplanes"][h];
        emit(flat, format, out);
      }
      if (result.status == SolveStatus::NotFound) {
        err << "no eps-equipartition found within the budget (residual " << result.residual << ")\n";
        return kFailure;
      }
    } else if (decide->parsed()) {
      const auto d = decide_ramos_two(j);
      Json doc = to_json(d);
      if (format != Format::Json) doc["reasons"] = join(d.reasons, "; ");
      emit(doc, format, out);
    }
  } catch (const NegativeResult& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const CertificateError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kSuccess;
}

}  // namespace equipart::cli
