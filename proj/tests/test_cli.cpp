#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "equipart/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = equipart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("equipart_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string gaussian_mass_file(std::size_t d, std::size_t clouds, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 1);
  json doc{{"dimension", d}, {"masses", json::array()}};
  for (std::size_t c = 0; c < clouds; ++c) {
    json pts = json::array(), ws = json::array();
    for (int p = 0; p < 300; ++p) {
      json pt = json::array();
      for (std::size_t i = 0; i < d; ++i) pt.push_back(g(rng) + 5.0 * c);
      pts.push_back(pt);
      ws.push_back(p < 299 ? 1.0 / 300 : 1.0 - 299.0 / 300);
    }
    doc["masses"].push_back({{"type", "points"}, {"points", pts}, {"weights", ws}});
  }
  return doc.dump();
}

}  // namespace

TEST_CASE("bounds subcommand") {
  const auto r = run({"bounds", "--j", "1", "--k", "1"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["lower"] == 1);
  CHECK(doc["upper"] == 1);
  CHECK(doc["exact"] == 1);
  CHECK(run({"bounds", "--j", "3", "--k", "2", "--format", "csv"}).out.rfind("j,k,lower", 0) == 0);
}

TEST_CASE("decide subcommand") {
  const auto r = run({"decide", "--j", "5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["certified"] == 8);
  const auto three = json::parse(run({"decide", "--j", "3"}).out);
  CHECK(three["certified"].is_null());
  CHECK(three["reasons"][0] == "d odd, degree vanishes");
  CHECK(run({"decide", "--j", "4"}).code == 2);
}

TEST_CASE("enumerate then verify round-trips") {
  const auto r = run({"enumerate", "--j", "3"});
  CHECK(r.code == 0);
  const auto certs = json::parse(r.out);
  CHECK(certs.size() == 3);
  CHECK(certs[0]["orthants"][0][0] == "1/4");

  const auto path = temp_file("certs.json");
  const auto w = run({"enumerate", "--j", "5", "--out", path.string()});
  CHECK(w.code == 0);
  CHECK(json::parse(w.out)["count"] == 10);
  const auto v = run({"verify", "--cert", path.string()});
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["verified"] == 10);

  auto doc = certs[0];
  doc["h1"]["offset"] = "1/1";
  write(path, doc.dump());
  const auto bad = run({"verify", "--cert", path.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  std::filesystem::remove(path);
}

TEST_CASE("certify subcommand") {
  const auto r = run({"certify", "--j", "3", "--k", "2"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["d_star"] == 5);
  CHECK(doc["witness"].size() == 2);
  CHECK(run({"certify", "--j", "3", "--k", "5"}).code == 2);
}

TEST_CASE("table subcommand") {
  const auto md = run({"table", "--jmax", "3", "--kmax", "4"});
  CHECK(md.code == 0);
  CHECK(md.out.rfind("| j \\ k |", 0) == 0);
  CHECK(json::parse(run({"table", "--jmax", "3", "--kmax", "4", "--format", "json"}).out)["cells"].size() == 12);
  const auto both = run({"table", "--jmax", "3", "--kmax", "4", "--conjecture", "--disputed"});
  CHECK(both.code == 2);
  CHECK(both.err.find("--conjecture") != std::string::npos);
  CHECK(both.err.find("--disputed") != std::string::npos);
}

TEST_CASE("solve subcommand") {
  const auto path = temp_file("masses.json");
  write(path, gaussian_mass_file(2, 2, 1));
  const std::vector<std::string> args{"solve", "--masses", path.string(), "--k", "1", "--eps", "0.02", "--seed", "3",
                                      "--restarts", "4"};
  const auto r = run(args);
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["status"] == "Found");
  CHECK(doc["arrangement"]["hyperplanes"].size() == 1);
  CHECK(run(args).out == r.out);

  CHECK(run({"solve", "--masses", path.string(), "--k", "3"}).code == 2);
  write(path, "{not json");
  CHECK(run({"solve", "--masses", path.string(), "--k", "1"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"bounds", "--j", "1"}).code == 2);
  CHECK(run({"bounds", "--j", "1", "--k", "1", "--bogus"}).code == 2);
  CHECK(run({"bounds", "--j", "1", "--k", "1", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--cert", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("every subcommand emits valid JSON and is deterministic") {
  const std::vector<std::vector<std::string>> invocations{
      {"bounds", "--j", "7", "--k", "3"},          {"table", "--jmax", "5", "--kmax", "3", "--format", "json"},
      {"certify", "--j", "4", "--k", "3"},         {"enumerate", "--j", "5"},
      {"decide", "--j", "9"},                       {"decide", "--j", "1"}};
  for (const auto& args : invocations) {
    const auto a = run(args);
    CHECK(a.code == 0);
    CHECK(json::accept(a.out));
    CHECK(run(args).out == a.out);
  }
}
