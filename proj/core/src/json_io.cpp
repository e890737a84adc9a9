#include "mvwb/json_io.hpp"

#include "json.hpp"
#include "mvwb/errors.hpp"

namespace mvwb {

using nlohmann::json;

namespace {

json rational_j(const Rational& r) { return rational_str(r); }

json multiset_j(const Multiset& m) {
  json a = json::array();
  for (const auto& [v, k] : m.runs()) a.push_back({{"v", rational_j(v)}, {"mult", k}});
  return a;
}

Multiset multiset_from_j(const json& a) {
  Multiset m;
  for (const auto& e : a)
    m.add(parse_rational(e.at("v").get<std::string>()), e.at("mult").get<long>());
  return m;
}

json partition_j(const Partition& p) { return json(p.parts()); }

}  // namespace

std::string multiset_json(const Multiset& m) { return multiset_j(m).dump(); }

Multiset multiset_from_json(const std::string& s) {
  return multiset_from_j(json::parse(s));
}

std::string partition_json(const Partition& p) { return partition_j(p).dump(); }

std::string series_json(const SeriesU& s) {
  json coeffs = json::array();
  for (long k = 0; k <= s.order(); ++k)
    coeffs.push_back(rational_j(s.coeff(s.lead() - k)));
  json j{{"var", std::string(1, s.var())},
         {"lead", s.lead()},
         {"coeffs", coeffs},
         {"order", s.order()}};
  return j.dump();
}

std::string combinatorics_json(const SliceCombinatorics& c) {
  json j{{"n", c.n},       {"lambda", c.lambda}, {"mu", c.mu},
         {"N", c.N},       {"m", c.m},           {"mprime", c.mp},
         {"mpp", c.mpp},   {"pi", c.p},          {"tau", c.tau.parts()}};
  return j.dump();
}

std::string slice_point_json(const SlicePoint& g) {
  json rows = json::array();
  int n = g.comb.n;
  for (int i = 1; i <= n; ++i) {
    json row = json::array();
    for (int j = 1; j <= n; ++j) {
      json entry = json::array();
      auto [rmin, rmax] = allowed_r_range(g.comb, i, j);
      for (long r = rmin; r <= rmax; ++r) {
        Rational v = g.coeff(i, j, r);
        if (v != 0) entry.push_back({{"r", r}, {"v", rational_j(v)}});
      }
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  json j{{"n", n}, {"lambda", g.comb.lambda}, {"mu", g.comb.mu}, {"a", rows}};
  return j.dump();
}

SlicePoint slice_point_from_json(const std::string& s) {
  json j = json::parse(s);
  SliceCombinatorics comb = derive_slice_combinatorics(
      j.at("n").get<int>(), j.at("lambda").get<std::vector<long>>(),
      j.at("mu").get<std::vector<long>>());
  SlicePoint g(comb);
  const auto& rows = j.at("a");
  for (int i = 1; i <= comb.n; ++i)
    for (int jj = 1; jj <= comb.n; ++jj)
      for (const auto& e : rows.at(i - 1).at(jj - 1))
        g.set(i, jj, e.at("r").get<long>(),
              parse_rational(e.at("v").get<std::string>()));
  return g;
}

std::string slice_matrix_json(const SliceMatrix& X) {
  json entries = json::array();
  for (long i = 1; i <= X.N(); ++i) {
    json row = json::array();
    for (long j = 1; j <= X.N(); ++j) row.push_back(rational_j(X.X.at(i, j)));
    entries.push_back(row);
  }
  json j{{"pi", X.p}, {"entries", entries}};
  return j.dump();
}

std::string monomial_json(const Monomial& p) {
  json factors = json::array();
  for (const auto& [key, e] : p.factors())
    factors.push_back(
        {{"i", key.first}, {"k", rational_j(key.second)}, {"e", e}});
  return json{{"factors", factors}}.dump();
}

std::string assignment_json(const PartitionAssignment& a) {
  json arr = json::array();
  for (const auto& e : a.entries)
    arr.push_back({{"i", e.i},
                   {"c", rational_j(e.c)},
                   {"partition", e.xi.parts()}});
  return arr.dump();
}

std::string tableau_json(const RowTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (const auto& v : r.values()) row.push_back(rational_j(v));
    rows.push_back(row);
  }
  return json{{"shape", t.shape}, {"rows", rows}}.dump();
}

std::string report_json(const CheckReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures)
    fails.push_back(
        {{"location", f.location}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return json{{"check", r.check},
              {"instances", r.instances},
              {"failures", fails}}
      .dump();
}

std::string pretty_from_json(const std::string& payload) {
  json j = json::parse(payload);
  std::string out;
  if (j.contains("shape") && j.contains("rows")) {
    out += "tableau shape [";
    for (size_t i = 0; i < j["shape"].size(); ++i) {
      if (i) out += ",";
      out += j["shape"][i].dump();
    }
    out += "]\n";
    for (const auto& row : j["rows"]) {
      out += "  |";
      for (const auto& v : row) out += " " + v.get<std::string>();
      out += "\n";
    }
    return out;
  }
  if (j.contains("pi") && j.contains("entries")) {
    out += "slice matrix, pi [";
    for (size_t i = 0; i < j["pi"].size(); ++i) {
      if (i) out += ",";
      out += j["pi"][i].dump();
    }
    out += "]\n";
    for (const auto& row : j["entries"]) {
      out += "  [";
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out += ", ";
        out += row[c].get<std::string>();
      }
      out += "]\n";
    }
    return out;
  }
  if (j.contains("factors")) {
    out += "monomial:";
    if (j["factors"].empty()) out += " 1";
    for (const auto& f : j["factors"]) {
      out += " y(" + f["i"].dump() + "," + f["k"].get<std::string>() + ")";
      long e = f["e"].get<long>();
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out + "\n";
  }
  if (j.contains("check")) {
    out += j["check"].get<std::string>() + ": " +
           std::to_string(j["instances"].get<long>()) + " instances, " +
           std::to_string(j["failures"].size()) + " failures\n";
    for (const auto& f : j["failures"])
      out += "  at " + f["location"].get<std::string>() + ": " +
             f["lhs"].get<std::string>() + " != " +
             f["rhs"].get<std::string>() + "\n";
    return out;
  }
  return j.dump(2) + "\n";
}

}  // namespace mvwb
