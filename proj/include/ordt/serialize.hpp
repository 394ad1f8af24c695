#pragma once

// JSON and CSV renderings of every report type. Unbounded integers
// (numerators, A(n,M), fraction parts) are decimal strings; quantities bounded
// by a machine word by construction (n, M, residues below the enumeration
// budget, tallies) are JSON numbers.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordt/classes.hpp"
#include "ordt/density.hpp"
#include "ordt/dynamics.hpp"
#include "ordt/rational.hpp"
#include "ordt/scan.hpp"
#include "ordt/search.hpp"
#include "ordt/verify.hpp"

namespace ordt {

using Json = nlohmann::json;

void to_json(Json& j, const Rat& r);
void from_json(const Json& j, Rat& r);

void to_json(Json& j, const DescentStep& s);
void from_json(const Json& j, DescentStep& s);

void to_json(Json& j, const OrbitTrace& t);
void from_json(const Json& j, OrbitTrace& t);

void to_json(Json& j, const ClassSet& c);
void from_json(const Json& j, ClassSet& c);

void to_json(Json& j, const DensityReport& d);
void from_json(const Json& j, DensityReport& d);

void to_json(Json& j, const EmpiricalCounts& e);
void from_json(const Json& j, EmpiricalCounts& e);

void to_json(Json& j, const Exceeder& e);
void from_json(const Json& j, Exceeder& e);

void to_json(Json& j, const ScanCheckpoint& cp);
void from_json(const Json& j, ScanCheckpoint& cp);

void to_json(Json& j, const MuSearchResult& m);
void from_json(const Json& j, MuSearchResult& m);

void to_json(Json& j, const CheckOutcome& c);
void from_json(const Json& j, CheckOutcome& c);

void to_json(Json& j, const VerifyReport& r);
void from_json(const Json& j, VerifyReport& r);

// Pretty-printed, keys sorted; byte-identical for equal checkpoints.
std::string checkpoint_to_json(const ScanCheckpoint& cp);
// Throws FormatError on malformed input.
ScanCheckpoint checkpoint_from_json(const std::string& text);

struct CountRow {
  std::uint64_t n = 0;
  std::uint64_t M = 0;
  Int count;
  bool operator==(const CountRow&) const = default;
};

// Rows (n, M, A) for 1 <= n <= n_max, 2 <= M <= m_max.
std::vector<CountRow> count_rows(std::uint64_t n_max, std::uint64_t m_max);

std::string class_set_csv(const ClassSet& c);
ClassSet class_set_from_csv(const std::string& text);
std::string count_rows_csv(const std::vector<CountRow>& rows);
std::vector<CountRow> count_rows_from_csv(const std::string& text);
std::string density_csv(const DensityReport& d);

}  // namespace ordt

namespace nlohmann {

template <>
struct adl_serializer<ordt::OrderResult> {
  static void to_json(json& j, const ordt::OrderResult& r);
  static ordt::OrderResult from_json(const json& j);
};

}  // namespace nlohmann
