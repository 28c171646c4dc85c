#include "equipart/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "equipart/f2poly.hpp"
#include "json.hpp"

namespace equipart {

std::string Provenance::to_string() const {
  switch (kind) {
    case RuleKind::RamosLower: return "RamosLower";
    case RuleKind::ManiUpper: return "ManiUpper";
    case RuleKind::IndexCertificate: return "IndexCertificate";
    case RuleKind::ReductionHalve: return "ReductionHalve";
    case RuleKind::ReductionMatschke: return "ReductionMatschke";
    case RuleKind::SeededExact: return "SeededExact(" + name + ")";
  }
  return "?";
}

namespace {

void check_jk(std::int64_t j, int k) {
  if (j < 1 || k < 1) throw std::invalid_argument("bounds: j and k must be positive");
  if (k > 40 || j > (std::int64_t{1} << 20)) throw std::invalid_argument("bounds: j or k too large");
}

int floor_log2(std::int64_t j) {
  int t = 0;
  while ((j >> (t + 1)) > 0) ++t;
  return t;
}

void add_tag(BoundsRecord& r, Provenance p) {
  if (std::find(r.provenance.begin(), r.provenance.end(), p) == r.provenance.end())
    r.provenance.push_back(std::move(p));
}

}  // namespace

std::int64_t conjectured_value(std::int64_t j, int k) {
  check_jk(j, k);
  const std::int64_t num = ((std::int64_t{1} << k) - 1) * j;
  return (num + k - 1) / k;
}

std::int64_t ramos_lower(std::int64_t j, int k) { return std::max<std::int64_t>(k, conjectured_value(j, k)); }

std::int64_t mani_upper(std::int64_t j, int k) {
  check_jk(j, k);
  const int t = floor_log2(j);
  const std::int64_t r = j - (std::int64_t{1} << t);
  return (std::int64_t{1} << (t + k - 1)) + r;
}

std::vector<SeededValue> seeded_exact_values(int jmax) {
  std::vector<SeededValue> out;
  if (jmax >= 2) out.push_back({2, 2, 3, "Hadwiger"});
  // Lower and upper bound coincide for j = 2^{t+1} - 1, k = 2.
  for (int t = 0; (std::int64_t{1} << (t + 1)) - 1 <= jmax; ++t)
    out.push_back({(1 << (t + 1)) - 1, 2, 3 * (std::int64_t{1} << t) - 1, "bounds coincide"});
  // Degree argument on the moment curve, j = 2^t + 1 with t >= 2.
  for (int t = 2; (std::int64_t{1} << t) + 1 <= jmax; ++t)
    out.push_back({(1 << t) + 1, 2, 3 * (std::int64_t{1} << (t - 1)) + 2, "moment-curve degree t=" + std::to_string(t)});
  std::sort(out.begin(), out.end(), [](const SeededValue& a, const SeededValue& b) {
    return std::tie(a.j, a.k) < std::tie(b.j, b.k);
  });
  return out;
}

std::vector<DisputedClaim> disputed_claims(int jmax, int kmax) {
  std::vector<DisputedClaim> out;
  auto add = [&](std::int64_t j, int k, std::int64_t upper, const char* source) {
    if (j <= jmax && k <= kmax) out.push_back({static_cast<int>(j), k, upper, source});
  };
  add(5, 2, 8, "Mani-Levitska et al. 2006");
  add(1, 4, 5, "Ramos 1996");
  add(1, 5, 9, "Ramos 1996");
  for (int t = 1; (std::int64_t{1} << t) <= jmax; ++t) {
    const std::int64_t p = std::int64_t{1} << t;
    add(p, 2, 3 * p / 2, "Ramos 1996; Mani-Levitska et al. 2006");
    add(p + 1, 2, 3 * p / 2 + 2, "Zivaljevic 2011");
    add(p, 3, 5 * p / 2, "Ramos 1996");
    add(p, 4, 9 * p / 2, "Ramos 1996");
    add(p, 5, 15 * p / 2, "Ramos 1996");
  }
  std::sort(out.begin(), out.end(), [](const DisputedClaim& a, const DisputedClaim& b) {
    return std::tie(a.j, a.k) < std::tie(b.j, b.k);
  });
  return out;
}

// ----------------------------------------------------------------- table

BoundsTable::BoundsTable(int jmax, int kmax) : jmax_(jmax), kmax_(kmax) {
  if (jmax < 0 || kmax < 0) throw std::invalid_argument("BoundsTable: negative size");
  if (static_cast<std::int64_t>(jmax) * kmax > 5'000'000) throw std::invalid_argument("BoundsTable: grid too large");
  cells_.resize(static_cast<std::size_t>(jmax) * kmax);
}

const BoundsRecord& BoundsTable::at(int j, int k) const {
  if (j < 1 || j > jmax_ || k < 1 || k > kmax_) throw std::out_of_range("BoundsTable::at: cell out of range");
  return cells_[static_cast<std::size_t>(j - 1) * kmax_ + (k - 1)];
}

BoundsRecord& BoundsTable::at(int j, int k) {
  return const_cast<BoundsRecord&>(static_cast<const BoundsTable&>(*this).at(j, k));
}

BoundsTable BoundsTable::initial(int jmax, int kmax, Options options) {
  BoundsTable table(jmax, kmax);
  for (int j = 1; j <= jmax; ++j) {
    for (int k = 1; k <= kmax; ++k) {
      auto& r = table.at(j, k);
      r.j = j;
      r.k = k;
      r.lower = ramos_lower(j, k);
      r.upper = mani_upper(j, k);
      r.provenance = {{RuleKind::RamosLower, ""}, {RuleKind::ManiUpper, ""}};
    }
  }
  for (const auto& seed : seeded_exact_values(jmax)) {
    if (seed.k > kmax) continue;
    auto& r = table.at(seed.j, seed.k);
    if (seed.value < r.lower || seed.value > r.upper)
      throw InconsistentBoundsError("seed " + seed.name + " contradicts the formula bounds at cell (" +
                                    std::to_string(seed.j) + "," + std::to_string(seed.k) + ")");
    r.upper = seed.value;
    add_tag(r, {RuleKind::SeededExact, seed.name});
  }
  if (options.merge_index_certificates) {
    for (int j = 1; j <= jmax; ++j) {
      for (int k = 1; k <= std::min(kmax, 4); ++k) {
        if (static_cast<std::int64_t>(j) * ((1 << k) - 1) > 10'000) continue;
        const auto cert = certify_upper_bound(static_cast<std::uint64_t>(j), static_cast<std::size_t>(k));
        auto& r = table.at(j, k);
        if (static_cast<std::int64_t>(cert.d_star) < r.upper) {
          r.upper = static_cast<std::int64_t>(cert.d_star);
          add_tag(r, {RuleKind::IndexCertificate, ""});
        }
      }
    }
  }
  return table;
}

BoundsTable propagate(BoundsTable table) {
  const int jmax = table.jmax(), kmax = table.kmax();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 1; j <= jmax; ++j) {
      for (int k = 1; k <= kmax; ++k) {
        auto& r = table.at(j, k);
        if (k >= 2 && 2 * j <= jmax) {
          const std::int64_t c = table.at(2 * j, k - 1).upper;
          if (c < r.upper) {
            r.upper = c;
            add_tag(r, {RuleKind::ReductionHalve, ""});
            changed = true;
          }
        }
        if (j + 1 <= jmax) {
          const std::int64_t c = table.at(j + 1, k).upper - 1;
          if (c < r.upper) {
            r.upper = c;
            add_tag(r, {RuleKind::ReductionMatschke, ""});
            changed = true;
          }
        }
      }
    }
  }
  for (int j = 1; j <= jmax; ++j) {
    for (int k = 1; k <= kmax; ++k) {
      auto& r = table.at(j, k);
      if (r.lower > r.upper)
        throw InconsistentBoundsError("cell (" + std::to_string(j) + "," + std::to_string(k) +
                                      "): lower bound " + std::to_string(r.lower) + " exceeds upper bound " +
                                      std::to_string(r.upper));
      r.exact = r.lower == r.upper ? std::optional<std::int64_t>(r.lower) : std::nullopt;
    }
  }
  return table;
}

BoundsTable BoundsTable::build(int jmax, int kmax, Options options) {
  return propagate(initial(jmax, kmax, options));
}

BoundsRecord bounds_for(int j, int k, BoundsTable::Options options) {
  check_jk(j, k);
  if (k > 16) throw std::invalid_argument("bounds_for: k must be at most 16");
  const std::int64_t rows = (static_cast<std::int64_t>(j) << (k - 1)) + 1;
  if (rows * k > 5'000'000) throw std::invalid_argument("bounds_for: required grid too large");
  return BoundsTable::build(static_cast<int>(rows), k, options).at(j, k);
}

// ----------------------------------------------------------------- render

namespace {

std::string center_text(const BoundsRecord& r) {
  const std::int64_t formula_lower = ramos_lower(r.j, r.k);
  const std::int64_t formula_upper = mani_upper(r.j, r.k);
  if (r.exact) {
    const std::string v = std::to_string(*r.exact);
    return formula_lower == formula_upper ? v : "**" + v + "**";
  }
  if (r.upper < formula_upper) return "**<=" + std::to_string(r.upper) + "**";
  return "?";
}

std::string provenance_list(const BoundsRecord& r) {
  std::string s;
  for (const auto& p : r.provenance) {
    if (!s.empty()) s += ';';
    s += p.to_string();
  }
  return s;
}

std::string render_markdown(const BoundsTable& t, const RenderOptions& options) {
  std::ostringstream os;
  auto header = [&] {
    os << "| j \\ k |";
    for (int k = 1; k <= t.kmax(); ++k) os << ' ' << k << " |";
    os << "\n|---|";
    for (int k = 1; k <= t.kmax(); ++k) os << "---|";
    os << '\n';
  };
  header();
  for (int j = 1; j <= t.jmax(); ++j) {
    os << "| " << j << " |";
    for (int k = 1; k <= t.kmax(); ++k) {
      const auto& r = t.at(j, k);
      os << ' ' << ramos_lower(j, k) << " <= " << center_text(r) << " <= " << mani_upper(j, k) << " |";
    }
    os << '\n';
  }
  if (!t.empty()) {
    os << "\nEach cell reads `lower <= value <= upper`: lower is the Ramos bound ceil((2^k-1)j/k), upper the\n"
          "Mani-Levitska et al. bound 2^(t+k-1)+r for j=2^t+r, and the middle entry the exact value or an\n"
          "improved upper bound (`?` if neither is known). Bold entries do not follow from the two bounds coinciding.\n";
  }
  if (options.conjecture && !t.empty()) {
    os << "\nConjectured values ceil((2^k-1)j/k) (Ramos conjecture, unproven):\n\n";
    header();
    for (int j = 1; j <= t.jmax(); ++j) {
      os << "| " << j << " |";
      for (int k = 1; k <= t.kmax(); ++k) os << ' ' << conjectured_value(j, k) << " |";
      os << '\n';
    }
  }
  return os.str();
}

std::string render_csv(const BoundsTable& t, const RenderOptions& options) {
  std::ostringstream os;
  os << "j,k,lower,upper,exact,provenance";
  if (options.conjecture) os << ",conjectured";
  os << '\n';
  for (const auto& r : t.cells()) {
    os << r.j << ',' << r.k << ',' << r.lower << ',' << r.upper << ',';
    if (r.exact) os << *r.exact;
    os << ',' << provenance_list(r);
    if (options.conjecture) os << ',' << conjectured_value(r.j, r.k);
    os << '\n';
  }
  return os.str();
}

std::string render_json(const BoundsTable& t, const RenderOptions& options) {
  nlohmann::ordered_json out;
  out["jmax"] = t.jmax();
  out["kmax"] = t.kmax();
  out["cells"] = nlohmann::ordered_json::array();
  for (const auto& r : t.cells()) {
    nlohmann::ordered_json c;
    c["j"] = r.j;
    c["k"] = r.k;
    c["lower"] = r.lower;
    c["upper"] = r.upper;
    c["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
    c["provenance"] = nlohmann::ordered_json::array();
    for (const auto& p : r.provenance) c["provenance"].push_back(p.to_string());
    if (options.conjecture) c["conjectured"] = conjectured_value(r.j, r.k);
    out["cells"].push_back(std::move(c));
  }
  out["disputed"] = nlohmann::ordered_json::array();
  for (const auto& d : disputed_claims(t.jmax(), t.kmax()))
    out["disputed"].push_back({{"j", d.j}, {"k", d.k}, {"claimed_upper", d.claimed_upper}, {"source", d.source}});
  return out.dump(2) + "\n";
}

}  // namespace

std::string render_table(const BoundsTable& table, TableFormat format, RenderOptions options) {
  switch (format) {
    case TableFormat::Markdown: return render_markdown(table, options);
    case TableFormat::Csv: return render_csv(table, options);
    case TableFormat::Json: return render_json(table, options);
  }
  return {};
}

}  // namespace equipart
