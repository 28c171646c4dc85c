#include "equipart/moment_curve.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "equipart/f2poly.hpp"

namespace equipart {

AffineHyperplane<Rational> hyperplane_through(const std::vector<Rational>& roots, std::size_t d) {
  if (d == 0) throw std::invalid_argument("hyperplane_through: d must be positive");
  if (roots.size() != d) throw std::invalid_argument("hyperplane_through: need exactly d roots");
  auto sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("hyperplane_through: duplicate roots");
  const auto c = RationalPoly::from_roots(roots).coefficients();
  AffineHyperplane<Rational> h;
  h.normal.assign(c.begin() + 1, c.end());
  h.offset = -c[0];
  return h;
}

StandardConfiguration::StandardConfiguration(int j) : j_(j) {
  if (j < 1 || j % 2 == 0) throw std::invalid_argument("StandardConfiguration: j must be odd and positive");
  d_ = static_cast<std::size_t>((3 * j + 1) / 2);
}

std::vector<std::pair<Rational, Rational>> StandardConfiguration::intervals() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (int i = 1; i <= j_; ++i) out.emplace_back(Rational(i), Rational(i + 1));
  return out;
}

std::vector<Mass<Rational>> StandardConfiguration::masses() const {
  std::vector<Mass<Rational>> out;
  for (const auto& iv : intervals()) out.emplace_back(MomentIntervals(d_, {iv}));
  return out;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    for (int i = next; i <= n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

EquipartitionCertificate build_certificate(int j, std::size_t d, std::vector<int> subset) {
  EquipartitionCertificate cert;
  cert.j = j;
  cert.d = d;
  const Rational quarter(1, 4), half(1, 2), three_quarters(3, 4);
  cert.roots2.push_back(Rational(0));
  for (int i = 1; i <= j; ++i) {
    const Rational base(i);
    if (std::binary_search(subset.begin(), subset.end(), i)) {
      cert.roots1.push_back(base + half);
      cert.roots2.push_back(base + quarter);
      cert.roots2.push_back(base + three_quarters);
    } else {
      cert.roots1.push_back(base + quarter);
      cert.roots1.push_back(base + three_quarters);
      cert.roots2.push_back(base + half);
    }
  }
  cert.subset = std::move(subset);
  cert.h1 = normalized(hyperplane_through(cert.roots1, d));
  cert.h2 = normalized(hyperplane_through(cert.roots2, d));
  return cert;
}

std::string label_name(std::size_t idx) { return OrthantLabel::from_index(idx, 2).to_string(); }

void check_curve_crossings(const AffineHyperplane<Rational>& h, const std::vector<Rational>& listed, std::size_t d,
                           const char* which) {
  const RationalPoly p = curve_polynomial(h);
  const Rational bound = root_bound(p);
  const auto iso = real_roots_in_interval(p, -bound, bound);
  for (const auto& r : iso.roots)
    if (r.multiplicity > 1) throw CertificateError(std::string(which) + ": crossing with multiplicity > 1");
  if (iso.roots.size() != d)
    throw CertificateError(std::string(which) + ": meets the curve in " + std::to_string(iso.roots.size()) +
                           " points, expected " + std::to_string(d));
  if (!listed.empty()) {
    auto sorted = listed;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < d; ++i)
      if (!iso.roots[i].exact || *iso.roots[i].exact != sorted[i])
        throw CertificateError(std::string(which) + ": listed roots do not match the hyperplane");
  }
}

}  // namespace

OrthantTable compute_orthant_table(const EquipartitionCertificate& cert,
                                   const std::vector<std::pair<Rational, Rational>>& intervals) {
  const auto arr = cert.arrangement();
  std::vector<Mass<Rational>> masses;
  for (const auto& iv : intervals) masses.emplace_back(MomentIntervals(arr.dimension(), {iv}));
  const auto tv = eval_test_map(masses, arr);
  OrthantTable table(4, std::vector<Rational>(masses.size()));
  const Rational quarter(1, 4);
  for (std::size_t m = 0; m < masses.size(); ++m)
    for (std::size_t label = 0; label < 4; ++label) table[label][m] = tv.values[m][label] + quarter;
  return table;
}

OrthantTable verify_certificate(const EquipartitionCertificate& cert,
                                const std::vector<std::pair<Rational, Rational>>& intervals) {
  if (cert.h1.dimension() != cert.d || cert.h2.dimension() != cert.d)
    throw CertificateError("certificate hyperplanes do not live in dimension d");
  check_curve_crossings(cert.h1, cert.roots1, cert.d, "h1");
  check_curve_crossings(cert.h2, cert.roots2, cert.d, "h2");
  OrthantTable table = compute_orthant_table(cert, intervals);
  const Rational quarter(1, 4);
  for (std::size_t m = 0; m < intervals.size(); ++m)
    for (std::size_t label = 0; label < 4; ++label)
      if (table[label][m] != quarter)
        throw CertificateError("mass " + std::to_string(m + 1) + " orthant " + label_name(label) + " has measure " +
                               to_string(table[label][m]) + ", off by " + to_string(table[label][m] - quarter));
  return table;
}

OrthantTable verify_certificate(const EquipartitionCertificate& cert, const StandardConfiguration& config) {
  if (cert.j != config.j() || cert.d != config.dimension())
    throw CertificateError("certificate (j, d) does not match the configuration");
  return verify_certificate(cert, config.intervals());
}

std::vector<EquipartitionCertificate> enumerate_standard(int j) {
  if (j < 1 || j > 9 || j % 2 == 0) throw std::invalid_argument("enumerate_standard: j must be odd with 1 <= j <= 9");
  const StandardConfiguration config(j);
  std::vector<EquipartitionCertificate> certs;
  for (auto& s : subsets_of_size(j, (j - 1) / 2)) certs.push_back(build_certificate(j, config.dimension(), std::move(s)));

  // Verification is independent per subset; output order is fixed above.
  const std::size_t workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < certs.size(); i += workers) certs[i].orthants = verify_certificate(certs[i], config);
    }));
  }
  for (auto& job : jobs) job.get();
  return certs;
}

BigInt degree_magnitude(int j) {
  if (j < 1 || j % 2 == 0) throw std::invalid_argument("degree_magnitude: j must be odd and positive");
  const long d = (3L * j + 1) / 2;
  if (d % 2 != 0) return BigInt(0);
  return 2 * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>((j - 1) / 2));
}

RamosTwoDecision decide_ramos_two(int j) {
  if (j < 1 || j % 2 == 0) throw std::invalid_argument("decide_ramos_two: j must be odd and positive");
  RamosTwoDecision out;
  out.j = j;
  out.d = (3 * static_cast<std::int64_t>(j) + 1) / 2;
  const std::int64_t d = out.d;
  // 2(d - 1) = 3j - 1 holds by construction of d.
  if ((2 * (d - 1)) % d == 0) out.reasons.push_back("d divides 2(d-1)");
  if (d % 2 != 0) {
    out.reasons.push_back("d odd, degree vanishes");
  } else {
    out.degree_valuation = 1 + kummer_carries(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>((j - 1) / 2), 2);
    if (out.degree_valuation >= 3) out.reasons.push_back("degree divisible by 8");
  }
  if (out.reasons.empty()) out.certified = d;
  return out;
}

}  // namespace equipart
