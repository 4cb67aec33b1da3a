#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stewart/bounds.hpp"
#include "stewart/cyclotomic.hpp"
#include "stewart/fiboracle.hpp"
#include "stewart/splitprimes.hpp"

namespace stewart {

inline constexpr std::string_view kSchema = "stewart-bounds/1";

enum class Format { Human, Json, Csv };

/// "human" | "json" | "csv"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

struct TablesReport {
  int which = 1;
  std::vector<BoundResult> rows;
  friend bool operator==(const TablesReport&, const TablesReport&) = default;
};

struct PrimitiveRow {
  PrimitiveDivisorSet set;
  EliouCheck eliou;
  friend bool operator==(const PrimitiveRow&, const PrimitiveRow&) = default;
};

struct PrimitiveReport {
  std::vector<PrimitiveRow> rows;
  friend bool operator==(const PrimitiveReport&, const PrimitiveReport&) = default;
};

struct CyclotomicRow {
  CyclotomicValue value;
  EsumCheck esum;
  SchinzelReport schinzel;
  friend bool operator==(const CyclotomicRow&, const CyclotomicRow&) = default;
};

struct CyclotomicReport {
  std::vector<CyclotomicRow> rows;
  std::optional<SchwarzReport> schwarz;
  friend bool operator==(const CyclotomicReport&, const CyclotomicReport&) = default;
};

struct YuReport {
  std::vector<YuCheckReport> rows;
  friend bool operator==(const YuReport&, const YuReport&) = default;
};

#define STEWART_REPORT_JSON(T)                  \
  void to_json(nlohmann::json& j, const T& x);  \
  void from_json(const nlohmann::json& j, T& x);

STEWART_REPORT_JSON(Interval)
STEWART_REPORT_JSON(QuadInt)
STEWART_REPORT_JSON(KScanRow)
STEWART_REPORT_JSON(BoundValidity)
STEWART_REPORT_JSON(BoundResult)
STEWART_REPORT_JSON(TablesReport)
STEWART_REPORT_JSON(QkReport)
STEWART_REPORT_JSON(PrimitiveDivisor)
STEWART_REPORT_JSON(PrimitiveDivisorSet)
STEWART_REPORT_JSON(EliouCheck)
STEWART_REPORT_JSON(PrimitiveRow)
STEWART_REPORT_JSON(PrimitiveReport)
STEWART_REPORT_JSON(CyclotomicValue)
STEWART_REPORT_JSON(EsumCheck)
STEWART_REPORT_JSON(SchinzelEntry)
STEWART_REPORT_JSON(SchinzelReport)
STEWART_REPORT_JSON(SchwarzReport)
STEWART_REPORT_JSON(CyclotomicRow)
STEWART_REPORT_JSON(CyclotomicReport)
STEWART_REPORT_JSON(YuInequality)
STEWART_REPORT_JSON(YuCheckReport)
STEWART_REPORT_JSON(YuReport)
STEWART_REPORT_JSON(ChainLink)
STEWART_REPORT_JSON(BigKappaReport)

#undef STEWART_REPORT_JSON

/// Serialized report, newline-terminated. JSON wraps the payload as
/// {"schema": kSchema, "type": <name>, "report": {...}}.
std::string emit(const BoundResult& x, Format format);
std::string emit(const TablesReport& x, Format format);
std::string emit(const QkReport& x, Format format);
std::string emit(const PrimitiveReport& x, Format format);
std::string emit(const CyclotomicReport& x, Format format);
std::string emit(const YuReport& x, Format format);
std::string emit(const BigKappaReport& x, Format format);

/// Inverse of emit(x, Format::Json). Throws std::invalid_argument on a schema
/// or type mismatch and nlohmann::json exceptions on malformed input.
template <typename T>
T parse_report(std::string_view json_text);

}  // namespace stewart
