#include "kn/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace kn {

using Json = nlohmann::ordered_json;

namespace {

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json details = Json::object();
    for (const auto& [k, v] : c.details) details[k] = v;
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"cases", c.cases},
                      {"violations", c.violations},
                      {"witnesses", c.witnesses},
                      {"details", details}});
  }
  Json info = Json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  return {{"title", r.title},
          {"passed", r.passed()},
          {"summary", summary_line(r)},
          {"checks", checks},
          {"info", info}};
}

Json atom_json(const NamedAtom& a) {
  const char* sym = "L";
  switch (a.symbol) {
    case Symbol::L: sym = "L"; break;
    case Symbol::G: sym = "G"; break;
    case Symbol::T: sym = "T"; break;
    case Symbol::Psi: sym = "Psi"; break;
  }
  return {{"symbol", sym}, {"index", a.index}, {"sub", a.sub.to_string()}};
}

Json terms_json(const Expansion& e) {
  Json out = Json::array();
  for (const auto& [a, c] : e) out.push_back({{"atom", a.to_string()}, {"coeff", c.to_string()}});
  return out;
}

Json rational_json(const Rational& q) {
  if (q.is_integer()) return std::stoll(q.to_string());
  return q.to_string();
}

std::string cell(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else out += ch;
  }
  return out;
}

}  // namespace

std::string summary_line(const Report& r) {
  std::size_t k = r.checks.size(), j = r.passed_count();
  return (j == k ? "PASS " : "FAIL ") + std::to_string(j) + "/" + std::to_string(k);
}

std::string to_json(const Report& r) { return report_json(r).dump(2); }

std::string to_json(const BracketTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json j = {{"family", row.family},
              {"lhs", "[" + row.x.to_string() + ", " + row.y.to_string() + "]"},
              {"params", {{"x", atom_json(row.x)}, {"y", atom_json(row.y)}}},
              {"rhs_terms", terms_json(row.computed)}};
    if (row.expected) j["template_terms"] = terms_json(*row.expected);
    j["match"] = row.match();
    rows.push_back(std::move(j));
  }
  Json out = {{"algebra", t.algebra},
              {"n", t.n_vars},
              {"twist", to_string(t.twist)},
              {"window", t.window},
              {"rows", rows},
              {"report", report_json(t.report)}};
  return out.dump(2);
}

std::string to_json(const Spectrum& s) {
  Json eig = Json::array();
  for (const auto& [q, m] : s.multiset()) eig.push_back({{"value", rational_json(q)}, {"multiplicity", m}});
  Json flat = Json::array();
  for (const auto& [q, m] : s.multiset())
    for (int k = 0; k < m; ++k) flat.push_back(rational_json(q));
  Json non = Json::array();
  for (const auto& a : s.not_eigen) non.push_back(a.to_string());
  Json out = {{"algebra", s.algebra},
              {"part", to_string(s.part)},
              {"window", s.window},
              {"eigenvalues", flat},
              {"multiset", eig},
              {"not_eigenvectors", non}};
  return out.dump(2);
}

std::string to_json(const CentroidResult& c) {
  Json shifts = Json::array();
  for (const auto& s : c.shifts)
    shifts.push_back({{"shift", rational_json(s.shift)},
                      {"unknowns", s.unknowns},
                      {"equations", s.equations},
                      {"rank", s.rank},
                      {"solutions", s.solutions},
                      {"single_multiplier", s.single_multiplier}});
  Json out = {{"n", c.n_vars},
              {"twist", to_string(c.twist)},
              {"window", c.window},
              {"margin", c.margin},
              {"dimension", c.dimension},
              {"shifts", shifts},
              {"report", report_json(c.report)}};
  return out.dump(2);
}

std::string to_markdown(const Report& r) {
  std::ostringstream os;
  os << "## " << r.title << "\n\n| check | cases | violations | result |\n|---|---:|---:|---|\n";
  for (const auto& c : r.checks)
    os << "| " << cell(c.name) << " | " << c.cases << " | " << c.violations << " | "
       << (c.passed() ? "pass" : "FAIL") << " |\n";
  for (const auto& c : r.checks) {
    if (c.witnesses.empty() && c.details.empty()) continue;
    os << "\n**" << c.name << "**\n\n";
    for (const auto& w : c.witnesses) os << "- " << w << "\n";
    for (const auto& [k, v] : c.details) os << "- " << k << ": " << v << "\n";
  }
  if (!r.info.empty()) {
    os << "\n";
    for (const auto& [k, v] : r.info) os << "- " << k << ": " << v << "\n";
  }
  os << "\n" << summary_line(r) << "\n";
  return os.str();
}

std::string to_markdown(const BracketTable& t) {
  std::ostringstream os;
  os << "## Brackets in " << t.algebra << ", window " << t.window << "\n";
  std::string family;
  for (const auto& row : t.rows) {
    if (row.family != family) {
      family = row.family;
      os << "\n### " << family << "\n\n| relation | table | match |\n|---|---|---|\n";
    }
    os << "| [" << row.x.to_string() << ", " << row.y.to_string() << "] = " << cell(render(row.computed)) << " | "
       << (row.expected ? cell(render(*row.expected)) : std::string("-")) << " | " << (row.match() ? "yes" : "NO")
       << " |\n";
  }
  os << "\n" << to_markdown(t.report);
  return os.str();
}

std::string to_markdown(const Spectrum& s) {
  std::ostringstream os;
  os << "## ad L_0 on the " << to_string(s.part) << " part of " << s.algebra << ", window " << s.window
     << "\n\n| eigenvalue | multiplicity |\n|---:|---:|\n";
  for (const auto& [q, m] : s.multiset()) os << "| " << q.to_string() << " | " << m << " |\n";
  if (!s.not_eigen.empty()) {
    os << "\nnot eigenvectors:";
    for (const auto& a : s.not_eigen) os << " " << a.to_string();
    os << "\n";
  }
  return os.str();
}

std::string to_markdown(const CentroidResult& c) {
  std::ostringstream os;
  os << "## Centroid system, N = " << c.n_vars << ", twist " << to_string(c.twist) << ", window " << c.window
     << "\n\n| shift | unknowns | independent equations | solutions | single multiplier |\n|---:|---:|---:|---:|---|\n";
  for (const auto& s : c.shifts)
    os << "| " << s.shift.to_string() << " | " << s.unknowns << " | " << s.equations << " | " << s.solutions << " | "
       << (s.single_multiplier ? "yes" : "NO") << " |\n";
  os << "\nsolution dimension: " << c.dimension << "\n\n" << to_markdown(c.report);
  return os.str();
}

}  // namespace kn
