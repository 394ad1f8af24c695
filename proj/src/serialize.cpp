#include "ordt/serialize.hpp"

#include <sstream>

#include "ordt/errors.hpp"

namespace ordt {

namespace {

Int big(const Json& j) {
  if (!j.is_string()) throw FormatError("expected a decimal string, got " + j.dump());
  return parse_int(j.get<std::string>());
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                const std::string& header) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw FormatError("expected CSV header '" + header + "'");
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

std::uint64_t u64(const std::string& s) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw FormatError("trailing characters in '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("not an unsigned integer: '" + s + "'");
  }
}

}  // namespace

void to_json(Json& j, const Rat& r) {
  j = Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"display", r.to_decimal(12)}};
}

void from_json(const Json& j, Rat& r) { r = make_rat(big(j.at("num")), big(j.at("den"))); }

void to_json(Json& j, const DescentStep& s) {
  j = Json{{"q", s.q.get_str()},
           {"r", s.r.get_str()},
           {"h", s.h.get_str()},
           {"new_den", s.new_den.get_str()},
           {"image", s.image}};
}

void from_json(const Json& j, DescentStep& s) {
  s.q = big(j.at("q"));
  s.r = big(j.at("r"));
  s.h = big(j.at("h"));
  s.new_den = big(j.at("new_den"));
  s.image = j.at("image").get<Rat>();
}

void to_json(Json& j, const OrbitTrace& t) {
  j = Json{{"start", t.start}, {"steps", t.steps}, {"result", t.result}};
}

void from_json(const Json& j, OrbitTrace& t) {
  t.start = j.at("start").get<Rat>();
  t.steps = j.at("steps").get<std::vector<DescentStep>>();
  t.result = j.at("result").get<OrderResult>();
}

void to_json(Json& j, const ClassSet& c) {
  j = Json{{"n", c.n}, {"M", c.M}, {"modulus", c.modulus}, {"residues", c.residues}};
}

void from_json(const Json& j, ClassSet& c) {
  c.n = j.at("n").get<std::uint64_t>();
  c.M = j.at("M").get<std::uint64_t>();
  c.modulus = j.at("modulus").get<std::uint64_t>();
  c.residues = j.at("residues").get<std::vector<std::uint64_t>>();
}

void to_json(Json& j, const EmpiricalCounts& e) {
  Json per = Json::object();
  for (const auto& [n, c] : e.per_order) per[std::to_string(n)] = c;
  j = Json{{"M", e.M},
           {"N_max", e.n_max},
           {"cap", e.cap},
           {"counted_B", e.counted_b},
           {"counted_admissible", e.counted_admissible},
           {"counted_finite", e.counted_finite},
           {"cap_exceeded", e.cap_exceeded},
           {"per_order_counts", per}};
}

void from_json(const Json& j, EmpiricalCounts& e) {
  e.M = j.at("M").get<std::uint64_t>();
  e.n_max = j.at("N_max").get<std::uint64_t>();
  e.cap = j.at("cap").get<std::uint64_t>();
  e.counted_b = j.at("counted_B").get<std::uint64_t>();
  e.counted_admissible = j.at("counted_admissible").get<std::uint64_t>();
  e.counted_finite = j.at("counted_finite").get<std::uint64_t>();
  e.cap_exceeded = j.at("cap_exceeded").get<std::uint64_t>();
  e.per_order.clear();
  for (const auto& [k, v] : j.at("per_order_counts").items())
    e.per_order[u64(k)] = v.get<std::uint64_t>();
}

void to_json(Json& j, const DensityReport& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) {
    Json row{{"n", t.n}, {"A", t.count.get_str()}, {"phi", t.phi.get_str()}, {"term", t.term}};
    if (d.empirical && d.empirical->counted_b > 0) {
      const std::uint64_t seen = d.empirical->observed(t.n);
      row["observed_count"] = seen;
      row["observed"] = Rat(Int(static_cast<unsigned long>(seen)),
                            Int(static_cast<unsigned long>(d.empirical->counted_b)));
    }
    terms.push_back(std::move(row));
  }
  j = Json{{"M", d.M}, {"terms", terms}, {"partial_sum", d.partial_sum}};
  if (d.empirical) j["empirical"] = *d.empirical;
}

void from_json(const Json& j, DensityReport& d) {
  d.M = j.at("M").get<std::uint64_t>();
  d.terms.clear();
  for (const auto& row : j.at("terms")) {
    DensityTerm t;
    t.n = row.at("n").get<std::uint64_t>();
    t.count = big(row.at("A"));
    t.phi = big(row.at("phi"));
    t.term = row.at("term").get<Rat>();
    d.terms.push_back(std::move(t));
  }
  d.partial_sum = j.at("partial_sum").get<Rat>();
  if (j.contains("empirical"))
    d.empirical = j.at("empirical").get<EmpiricalCounts>();
  else
    d.empirical.reset();
}

void to_json(Json& j, const Exceeder& e) {
  j = Json{{"a", std::to_string(e.a)},
           {"M", e.M},
           {"iterations", e.iterations},
           {"last_denominator", e.last_denominator}};
}

void from_json(const Json& j, Exceeder& e) {
  e.a = u64(j.at("a").get<std::string>());
  e.M = j.at("M").get<std::uint64_t>();
  e.iterations = j.at("iterations").get<std::uint64_t>();
  e.last_denominator = j.at("last_denominator").get<std::uint64_t>();
}

void to_json(Json& j, const ScanCheckpoint& cp) {
  Json marks = Json::object();
  for (const auto& [M, a] : cp.a_scanned_up_to) marks[std::to_string(M)] = std::to_string(a);
  j = Json{{"schema_version", cp.schema_version},
           {"created_by", cp.created_by},
           {"M_range", Json::array({cp.m_lo, cp.m_hi})},
           {"cap", cp.cap},
           {"a_scanned_up_to", marks},
           {"exceeders", cp.exceeders}};
}

void from_json(const Json& j, ScanCheckpoint& cp) {
  cp.schema_version = j.at("schema_version").get<std::uint64_t>();
  cp.created_by = j.at("created_by").get<std::string>();
  const auto& range = j.at("M_range");
  if (!range.is_array() || range.size() != 2) throw FormatError("M_range must be [lo, hi]");
  cp.m_lo = range[0].get<std::uint64_t>();
  cp.m_hi = range[1].get<std::uint64_t>();
  cp.cap = j.at("cap").get<std::uint64_t>();
  cp.a_scanned_up_to.clear();
  for (const auto& [k, v] : j.at("a_scanned_up_to").items())
    cp.a_scanned_up_to[u64(k)] = u64(v.get<std::string>());
  cp.exceeders = j.at("exceeders").get<std::vector<Exceeder>>();
}

std::string checkpoint_to_json(const ScanCheckpoint& cp) { return Json(cp).dump(2) + "\n"; }

ScanCheckpoint checkpoint_from_json(const std::string& text) {
  try {
    return Json::parse(text).get<ScanCheckpoint>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("corrupt checkpoint: ") + e.what());
  }
}

void to_json(Json& j, const MuSearchResult& m) {
  std::vector<std::string> incidents;
  for (const auto& a : m.cap_incidents) incidents.push_back(a.get_str());
  j = Json{{"M", m.M},
           {"n", m.n},
           {"limit", m.limit.get_str()},
           {"found", m.entry.has_value()},
           {"cap_incidents", incidents}};
  j["mu"] = m.entry ? Json(m.entry->mu.get_str()) : Json(nullptr);
}

void from_json(const Json& j, MuSearchResult& m) {
  m.M = j.at("M").get<std::uint64_t>();
  m.n = j.at("n").get<std::uint64_t>();
  m.limit = big(j.at("limit"));
  m.cap_incidents.clear();
  for (const auto& a : j.at("cap_incidents")) m.cap_incidents.push_back(big(a));
  if (j.at("found").get<bool>())
    m.entry = MuEntry{m.M, m.n, big(j.at("mu"))};
  else
    m.entry.reset();
}

void to_json(Json& j, const CheckOutcome& c) {
  j = Json{{"name", c.name},
           {"passed", c.passed},
           {"cases", c.cases},
           {"counterexamples", c.counterexamples}};
}

void from_json(const Json& j, CheckOutcome& c) {
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.cases = j.at("cases").get<std::uint64_t>();
  c.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
}

void to_json(Json& j, const VerifyReport& r) {
  j = Json{{"passed", r.all_passed()}, {"checks", r.checks}};
}

void from_json(const Json& j, VerifyReport& r) {
  r.checks = j.at("checks").get<std::vector<CheckOutcome>>();
}

std::vector<CountRow> count_rows(std::uint64_t n_max, std::uint64_t m_max) {
  CountTable table;
  std::vector<CountRow> rows;
  for (std::uint64_t n = 1; n <= n_max; ++n)
    for (std::uint64_t M = 2; M <= m_max; ++M) rows.push_back({n, M, table.get(n, M)});
  return rows;
}

std::string class_set_csv(const ClassSet& c) {
  std::ostringstream os;
  os << "n,M,k\n";
  for (auto k : c.residues) os << c.n << ',' << c.M << ',' << k << '\n';
  return os.str();
}

ClassSet class_set_from_csv(const std::string& text) {
  const auto rows = parse_csv(text, "n,M,k");
  if (rows.empty()) throw FormatError("class set CSV has no rows");
  ClassSet c;
  for (const auto& row : rows) {
    if (row.size() != 3) throw FormatError("class set CSV rows have 3 fields");
    const auto n = u64(row[0]), M = u64(row[1]);
    if (c.residues.empty()) {
      c.n = n;
      c.M = M;
    } else if (n != c.n || M != c.M) {
      throw FormatError("class set CSV mixes several (n, M)");
    }
    c.residues.push_back(u64(row[2]));
  }
  c.modulus = class_modulus(c.n, c.M, UINT64_MAX);
  return c;
}

std::string count_rows_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "n,M,A\n";
  for (const auto& r : rows) os << r.n << ',' << r.M << ',' << r.count.get_str() << '\n';
  return os.str();
}

std::vector<CountRow> count_rows_from_csv(const std::string& text) {
  std::vector<CountRow> out;
  for (const auto& row : parse_csv(text, "n,M,A")) {
    if (row.size() != 3) throw FormatError("count CSV rows have 3 fields");
    out.push_back({u64(row[0]), u64(row[1]), parse_int(row[2])});
  }
  return out;
}

std::string density_csv(const DensityReport& d) {
  std::ostringstream os;
  os << "n,A,phi,term_num,term_den,observed_count\n";
  for (const auto& t : d.terms) {
    os << t.n << ',' << t.count.get_str() << ',' << t.phi.get_str() << ','
       << t.term.num().get_str() << ',' << t.term.den().get_str() << ',';
    if (d.empirical) os << d.empirical->observed(t.n);
    os << '\n';
  }
  return os.str();
}

}  // namespace ordt

namespace nlohmann {

void adl_serializer<ordt::OrderResult>::to_json(json& j, const ordt::OrderResult& r) {
  if (r.is_finite())
    j = json{{"order", r.order()}};
  else
    j = json{{"order", nullptr}, {"cap_exceeded", true}, {"cap", r.cap()}};
}

ordt::OrderResult adl_serializer<ordt::OrderResult>::from_json(const json& j) {
  const auto& order = j.at("order");
  if (order.is_null()) return ordt::OrderResult::cap_exceeded(j.at("cap").get<std::uint64_t>());
  return ordt::OrderResult::finite(order.get<std::uint64_t>());
}

}  // namespace nlohmann
