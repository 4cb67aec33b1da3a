#include "stewart/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace stewart {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "human") return Format::Human;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

namespace {

std::string mpz_string(const mpz_class& z) { return z.get_str(10); }
mpz_class mpz_from(const json& j) { return mpz_class(j.get<std::string>(), 10); }

// Shortest text that reads back to the same double.
std::string num(double x) {
  char buf[32];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string wrap(std::string_view type, const json& payload) {
  json j;
  j["schema"] = kSchema;
  j["type"] = type;
  j["report"] = payload;
  return j.dump(2) + "\n";
}

template <typename T>
constexpr std::string_view type_name();
template <> constexpr std::string_view type_name<BoundResult>() { return "bound_result"; }
template <> constexpr std::string_view type_name<TablesReport>() { return "tables"; }
template <> constexpr std::string_view type_name<QkReport>() { return "qk_verification"; }
template <> constexpr std::string_view type_name<PrimitiveReport>() { return "primitive_divisors"; }
template <> constexpr std::string_view type_name<CyclotomicReport>() { return "cyclotomic"; }
template <> constexpr std::string_view type_name<YuReport>() { return "yu_check"; }
template <> constexpr std::string_view type_name<BigKappaReport>() { return "bigkappa"; }

// Human output: aligned "label  value  (what it is)" lines.
class Lines {
 public:
  Lines& row(const std::string& label, const std::string& value, const std::string& anchor = {}) {
    out_ << label << std::string(label.size() < 28 ? 28 - label.size() : 2, ' ') << value;
    if (!anchor.empty()) out_ << "    [" << anchor << "]";
    out_ << "\n";
    return *this;
  }
  Lines& text(const std::string& s) {
    out_ << s << "\n";
    return *this;
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

constexpr const char* kBoundCsvHeader =
    "kappa,k,n0,log_n_bound,log_n_bound_decimal,theta_k,lambda,precondition_floor,k_ge_8,beyond_table_range,"
    "precision_bits\n";

std::string bound_csv_row(const BoundResult& r) {
  return mpz_string(r.kappa) + "," + std::to_string(r.k) + "," + std::to_string(r.n0) + "," + num(r.log_n_bound) +
         "," + r.log_n_bound_decimal + "," + num(r.theta_k) + "," + num(r.lambda) + "," +
         num(r.validity.precondition_floor) + "," + yes(r.validity.k_ge_8) + "," +
         yes(r.validity.beyond_table_range) + "," + std::to_string(r.precision_bits) + "\n";
}

void bound_human(Lines& out, const BoundResult& r) {
  out.row("kappa", mpz_string(r.kappa))
      .row("k", std::to_string(r.k), "minimizer of the log-n bound over the scanned k")
      .row("Theta_k", short_num(r.theta_k), "height-product bound over q_2..q_k")
      .row("Lambda(k, kappa)", short_num(r.lambda), "master constant")
      .row("log n bound", r.log_n_bound_decimal, "log n < Lambda (2 log Lambda)^(1/(k-1))")
      .row("n0", std::to_string(r.n0), "primitive divisor >= (kappa+1)n - 1 once n >= e^n0")
      .row("precondition floor", short_num(r.validity.precondition_floor), "max(log(e^(3k) k^3 + 1), 100)")
      .row("precision", std::to_string(r.precision_bits) + " bits");
  if (r.validity.beyond_table_range) out.text("note: kappa > 10^6 is outside the tabulated range");
}

}  // namespace

// ---- JSON ----

void to_json(json& j, const Interval& x) {
  j = json{{"lower", x.lower()},
           {"upper", x.upper()},
           {"lo", x.exact_lower()},
           {"hi", x.exact_upper()},
           {"bits", static_cast<long>(x.precision())}};
}
void from_json(const json& j, Interval& x) {
  x = Interval::from_exact(j.at("lo").get<std::string>(), j.at("hi").get<std::string>(),
                           Precision{j.at("bits").get<long>()});
}

void to_json(json& j, const QuadInt& x) { j = json{{"a", mpz_string(x.a)}, {"b", mpz_string(x.b)}}; }
void from_json(const json& j, QuadInt& x) { x = QuadInt{mpz_from(j.at("a")), mpz_from(j.at("b"))}; }

void to_json(json& j, const KScanRow& x) {
  j = json{{"k", x.k}, {"theta_k", x.theta_k}, {"lambda", x.lambda}, {"dsn", x.dsn}};
}
void from_json(const json& j, KScanRow& x) {
  j.at("k").get_to(x.k);
  j.at("theta_k").get_to(x.theta_k);
  j.at("lambda").get_to(x.lambda);
  j.at("dsn").get_to(x.dsn);
}

void to_json(json& j, const BoundValidity& x) {
  j = json{{"k_ge_8", x.k_ge_8},
           {"precondition_floor", x.precondition_floor},
           {"beyond_table_range", x.beyond_table_range}};
}
void from_json(const json& j, BoundValidity& x) {
  j.at("k_ge_8").get_to(x.k_ge_8);
  j.at("precondition_floor").get_to(x.precondition_floor);
  j.at("beyond_table_range").get_to(x.beyond_table_range);
}

void to_json(json& j, const BoundResult& x) {
  j = json{{"kappa", mpz_string(x.kappa)},
           {"k", x.k},
           {"theta_k", x.theta_k},
           {"lambda", x.lambda},
           {"log_n_bound", x.log_n_bound},
           {"log_n_bound_decimal", x.log_n_bound_decimal},
           {"n0", x.n0},
           {"validity", x.validity},
           {"precision_bits", x.precision_bits},
           {"scan", x.scan}};
}
void from_json(const json& j, BoundResult& x) {
  x.kappa = mpz_from(j.at("kappa"));
  j.at("k").get_to(x.k);
  j.at("theta_k").get_to(x.theta_k);
  j.at("lambda").get_to(x.lambda);
  j.at("log_n_bound").get_to(x.log_n_bound);
  j.at("log_n_bound_decimal").get_to(x.log_n_bound_decimal);
  j.at("n0").get_to(x.n0);
  j.at("validity").get_to(x.validity);
  j.at("precision_bits").get_to(x.precision_bits);
  j.at("scan").get_to(x.scan);
}

void to_json(json& j, const TablesReport& x) { j = json{{"which", x.which}, {"rows", x.rows}}; }
void from_json(const json& j, TablesReport& x) {
  j.at("which").get_to(x.which);
  j.at("rows").get_to(x.rows);
}

void to_json(json& j, const QkReport& x) {
  j = json{{"k_from", x.k_from},
           {"k_to", x.k_to},
           {"exponent", x.exponent},
           {"pass", x.pass},
           {"first_fail_k", x.first_fail_k ? json(*x.first_fail_k) : json(nullptr)},
           {"first_fail_q", x.first_fail_q ? json(*x.first_fail_q) : json(nullptr)},
           {"checked", x.checked},
           {"last_q", x.last_q}};
}
void from_json(const json& j, QkReport& x) {
  j.at("k_from").get_to(x.k_from);
  j.at("k_to").get_to(x.k_to);
  j.at("exponent").get_to(x.exponent);
  j.at("pass").get_to(x.pass);
  x.first_fail_k = j.at("first_fail_k").is_null() ? std::nullopt
                                                   : std::optional(j.at("first_fail_k").get<std::int64_t>());
  x.first_fail_q = j.at("first_fail_q").is_null() ? std::nullopt
                                                   : std::optional(j.at("first_fail_q").get<std::uint64_t>());
  j.at("checked").get_to(x.checked);
  j.at("last_q").get_to(x.last_q);
}

void to_json(json& j, const PrimitiveDivisor& x) { j = json{{"p", mpz_string(x.p)}, {"exponent", x.exponent}}; }
void from_json(const json& j, PrimitiveDivisor& x) {
  x.p = mpz_from(j.at("p"));
  j.at("exponent").get_to(x.exponent);
}

void to_json(json& j, const PrimitiveDivisorSet& x) {
  j = json{{"n", x.n},
           {"divisors", x.divisors},
           {"complete", x.complete},
           {"primality_proven", x.primality_proven},
           {"log_primitive_part", x.log_primitive_part}};
}
void from_json(const json& j, PrimitiveDivisorSet& x) {
  j.at("n").get_to(x.n);
  j.at("divisors").get_to(x.divisors);
  j.at("complete").get_to(x.complete);
  j.at("primality_proven").get_to(x.primality_proven);
  j.at("log_primitive_part").get_to(x.log_primitive_part);
}

void to_json(json& j, const EliouCheck& x) {
  j = json{{"n", x.n}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"pass", x.pass}, {"in_regime", x.in_regime}};
}
void from_json(const json& j, EliouCheck& x) {
  j.at("n").get_to(x.n);
  j.at("lhs").get_to(x.lhs);
  j.at("rhs").get_to(x.rhs);
  j.at("pass").get_to(x.pass);
  j.at("in_regime").get_to(x.in_regime);
}

void to_json(json& j, const PrimitiveRow& x) { j = json{{"set", x.set}, {"eliou", x.eliou}}; }
void from_json(const json& j, PrimitiveRow& x) {
  j.at("set").get_to(x.set);
  j.at("eliou").get_to(x.eliou);
}
void to_json(json& j, const PrimitiveReport& x) { j = json{{"rows", x.rows}}; }
void from_json(const json& j, PrimitiveReport& x) { j.at("rows").get_to(x.rows); }

void to_json(json& j, const CyclotomicValue& x) {
  j = json{{"n", x.n}, {"value", x.value}, {"norm", mpz_string(x.norm)}, {"is_unit", x.is_unit}};
}
void from_json(const json& j, CyclotomicValue& x) {
  j.at("n").get_to(x.n);
  j.at("value").get_to(x.value);
  x.norm = mpz_from(j.at("norm"));
  j.at("is_unit").get_to(x.is_unit);
}

void to_json(json& j, const EsumCheck& x) {
  j = json{{"n", x.n},         {"lhs", x.lhs},           {"rhs", x.rhs},
           {"delta", x.delta}, {"remainder", x.remainder}, {"delta_ok", x.delta_ok},
           {"remainder_ok", x.remainder_ok}};
}
void from_json(const json& j, EsumCheck& x) {
  j.at("n").get_to(x.n);
  j.at("lhs").get_to(x.lhs);
  j.at("rhs").get_to(x.rhs);
  j.at("delta").get_to(x.delta);
  j.at("remainder").get_to(x.remainder);
  j.at("delta_ok").get_to(x.delta_ok);
  j.at("remainder_ok").get_to(x.remainder_ok);
}

void to_json(json& j, const SchinzelEntry& x) {
  j = json{{"p", mpz_string(x.p)},     {"prime", x.prime}, {"valuation", x.valuation},
           {"nu_p_n", x.nu_p_n},       {"pass", x.pass},   {"ramified", x.ramified}};
}
void from_json(const json& j, SchinzelEntry& x) {
  x.p = mpz_from(j.at("p"));
  j.at("prime").get_to(x.prime);
  j.at("valuation").get_to(x.valuation);
  j.at("nu_p_n").get_to(x.nu_p_n);
  j.at("pass").get_to(x.pass);
  j.at("ramified").get_to(x.ramified);
}

void to_json(json& j, const SchinzelReport& x) {
  j = json{{"n", x.n}, {"excluded", x.excluded}, {"entries", x.entries}, {"pass", x.pass}};
}
void from_json(const json& j, SchinzelReport& x) {
  j.at("n").get_to(x.n);
  j.at("excluded").get_to(x.excluded);
  j.at("entries").get_to(x.entries);
  j.at("pass").get_to(x.pass);
}

void to_json(json& j, const SchwarzReport& x) {
  j = json{{"n_max", x.n_max},
           {"bound", x.bound},
           {"modulus_bound", x.modulus_bound},
           {"n1_value", x.n1_value},
           {"max_value", x.max_value},
           {"argmax", x.argmax},
           {"values", x.values},
           {"within_bound", x.within_bound},
           {"within_modulus_bound", x.within_modulus_bound},
           {"below_024", x.below_024},
           {"pass", x.pass}};
}
void from_json(const json& j, SchwarzReport& x) {
  j.at("n_max").get_to(x.n_max);
  j.at("bound").get_to(x.bound);
  j.at("modulus_bound").get_to(x.modulus_bound);
  j.at("n1_value").get_to(x.n1_value);
  j.at("max_value").get_to(x.max_value);
  j.at("argmax").get_to(x.argmax);
  j.at("values").get_to(x.values);
  j.at("within_bound").get_to(x.within_bound);
  j.at("within_modulus_bound").get_to(x.within_modulus_bound);
  j.at("below_024").get_to(x.below_024);
  j.at("pass").get_to(x.pass);
}

void to_json(json& j, const CyclotomicRow& x) {
  j = json{{"value", x.value}, {"esum", x.esum}, {"schinzel", x.schinzel}};
}
void from_json(const json& j, CyclotomicRow& x) {
  j.at("value").get_to(x.value);
  j.at("esum").get_to(x.esum);
  j.at("schinzel").get_to(x.schinzel);
}

void to_json(json& j, const CyclotomicReport& x) {
  j = json{{"rows", x.rows}, {"schwarz", x.schwarz ? json(*x.schwarz) : json(nullptr)}};
}
void from_json(const json& j, CyclotomicReport& x) {
  j.at("rows").get_to(x.rows);
  x.schwarz = j.at("schwarz").is_null() ? std::nullopt : std::optional(j.at("schwarz").get<SchwarzReport>());
}

void to_json(json& j, const YuInequality& x) {
  j = json{{"name", x.name}, {"f_p", x.f_p}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"pass", x.pass}};
}
void from_json(const json& j, YuInequality& x) {
  j.at("name").get_to(x.name);
  j.at("f_p").get_to(x.f_p);
  j.at("lhs").get_to(x.lhs);
  j.at("rhs").get_to(x.rhs);
  j.at("pass").get_to(x.pass);
}

void to_json(json& j, const YuCheckReport& x) {
  j = json{{"k", x.k}, {"p_floor", mpz_string(x.p_floor)}, {"results", x.results}, {"pass", x.pass}};
}
void from_json(const json& j, YuCheckReport& x) {
  j.at("k").get_to(x.k);
  x.p_floor = mpz_from(j.at("p_floor"));
  j.at("results").get_to(x.results);
  j.at("pass").get_to(x.pass);
}

void to_json(json& j, const YuReport& x) { j = json{{"rows", x.rows}}; }
void from_json(const json& j, YuReport& x) { j.at("rows").get_to(x.rows); }

void to_json(json& j, const ChainLink& x) {
  j = json{{"name", x.name}, {"statement", x.statement}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"pass", x.pass}};
}
void from_json(const json& j, ChainLink& x) {
  j.at("name").get_to(x.name);
  j.at("statement").get_to(x.statement);
  j.at("lhs").get_to(x.lhs);
  j.at("rhs").get_to(x.rhs);
  j.at("pass").get_to(x.pass);
}

void to_json(json& j, const BigKappaReport& x) {
  j = json{{"log_kappa", x.log_kappa}, {"k", x.k}, {"threshold", x.threshold}, {"links", x.links}, {"pass", x.pass}};
}
void from_json(const json& j, BigKappaReport& x) {
  j.at("log_kappa").get_to(x.log_kappa);
  j.at("k").get_to(x.k);
  j.at("threshold").get_to(x.threshold);
  j.at("links").get_to(x.links);
  j.at("pass").get_to(x.pass);
}

template <typename T>
T parse_report(std::string_view json_text) {
  const json j = json::parse(json_text);
  if (j.at("schema").get<std::string>() != kSchema) throw std::invalid_argument("unsupported schema");
  if (j.at("type").get<std::string>() != type_name<T>()) {
    throw std::invalid_argument("report type is " + j.at("type").get<std::string>() + ", expected " +
                                std::string(type_name<T>()));
  }
  return j.at("report").get<T>();
}

template BoundResult parse_report<BoundResult>(std::string_view);
template TablesReport parse_report<TablesReport>(std::string_view);
template QkReport parse_report<QkReport>(std::string_view);
template PrimitiveReport parse_report<PrimitiveReport>(std::string_view);
template CyclotomicReport parse_report<CyclotomicReport>(std::string_view);
template YuReport parse_report<YuReport>(std::string_view);
template BigKappaReport parse_report<BigKappaReport>(std::string_view);

// ---- emit ----

std::string emit(const BoundResult& x, Format format) {
  switch (format) {
    case Format::Json:
      return wrap(type_name<BoundResult>(), x);
    case Format::Csv:
      return kBoundCsvHeader + bound_csv_row(x);
    case Format::Human: {
      Lines out;
      bound_human(out, x);
      return out.str();
    }
  }
  return {};
}

std::string emit(const TablesReport& x, Format format) {
  switch (format) {
    case Format::Json:
      return wrap(type_name<TablesReport>(), x);
    case Format::Csv: {
      std::string out = kBoundCsvHeader;
      for (const BoundResult& r : x.rows) out += bound_csv_row(r);
      return out;
    }
    case Format::Human: {
      std::string out = x.which == 1 ? "kappa = 1..10" : "kappa from 20 to 10^6";
      out += "    [n0 such that F_n has a primitive divisor >= (kappa+1)n - 1 for n >= e^n0]\n";
      char buf[128];
      std::snprintf(buf, sizeof buf, "%10s %4s %8s  %s\n", "kappa", "k", "n0", "log n bound");
      out += buf;
      for (const BoundResult& r : x.rows) {
        std::snprintf(buf, sizeof buf, "%10s %4d %8lld  %s\n", mpz_string(r.kappa).c_str(), r.k,
                      static_cast<long long>(r.n0), r.log_n_bound_decimal.c_str());
        out += buf;
      }
      return out;
    }
  }
  return {};
}

std::string emit(const QkReport& x, Format format) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  switch (format) {
    case Format::Json:
      return wrap(type_name<QkReport>(), x);
    case Format::Csv:
      return "k_from,k_to,exponent,pass,first_fail_k,first_fail_q,checked,last_q\n" + std::to_string(x.k_from) +
             "," + std::to_string(x.k_to) + "," + csv_field(x.exponent) + "," + yes(x.pass) + "," +
             opt(x.first_fail_k) + "," + opt(x.first_fail_q) + "," + std::to_string(x.checked) + "," +
             std::to_string(x.last_q) + "\n";
    case Format::Human: {
      Lines out;
      out.row("range", "k = " + std::to_string(x.k_from) + ".." + std::to_string(x.k_to),
              "eta q_k < k^" + x.exponent + ", eta rounded up, k^a rounded down");
      out.row("result", x.pass ? "pass" : "FAIL");
      if (x.first_fail_k) out.row("first failure", "k = " + opt(x.first_fail_k) + ", q_k = " + opt(x.first_fail_q));
      out.row("checked", std::to_string(x.checked) + " indices");
      out.row("last q_k", std::to_string(x.last_q));
      return out.str();
    }
  }
  return {};
}

std::string emit(const PrimitiveReport& x, Format format) {
  switch (format) {
    case Format::Json:
      return wrap(type_name<PrimitiveReport>(), x);
    case Format::Csv: {
      std::string out = "n,p,exponent,p_mod_n,complete,primality_proven,eliou_pass,eliou_in_regime\n";
      for (const PrimitiveRow& r : x.rows) {
        const mpz_class n = static_cast<unsigned long>(r.set.n);
        for (const PrimitiveDivisor& d : r.set.divisors) {
          const mpz_class residue = d.p % n;
          out += std::to_string(r.set.n) + "," + mpz_string(d.p) + "," + std::to_string(d.exponent) + "," +
                 mpz_string(residue) + "," + yes(r.set.complete) + "," + yes(r.set.primality_proven) + "," +
                 yes(r.eliou.pass) + "," + yes(r.eliou.in_regime) + "\n";
        }
      }
      return out;
    }
    case Format::Human: {
      Lines out;
      for (const PrimitiveRow& r : x.rows) {
        std::string list;
        for (const PrimitiveDivisor& d : r.set.divisors) {
          if (!list.empty()) list += " * ";
          list += mpz_string(d.p);
          if (d.exponent > 1) list += "^" + std::to_string(d.exponent);
        }
        if (list.empty()) list = "(none)";
        out.row("n = " + std::to_string(r.set.n), list, "primitive part of F_n");
        out.row("  sum nu_p log p", short_num(r.eliou.lhs.lower()) + " >= " + short_num(r.eliou.rhs.upper()) +
                                        (r.eliou.pass ? "  pass" : "  fail") +
                                        (r.eliou.in_regime ? "" : "  (informational)"),
                "phi(n) log eta - log n - 0.24");
        if (!r.set.primality_proven) out.text("  note: largest factor is a probable prime (Baillie-PSW)");
      }
      return out.str();
    }
  }
  return {};
}

std::string emit(const CyclotomicReport& x, Format format) {
  switch (format) {
    case Format::Json:
      return wrap(type_name<CyclotomicReport>(), x);
    case Format::Csv: {
      std::string out =
          "n,value,norm,is_unit,esum_delta_upper,remainder_upper,delta_ok,remainder_ok,schinzel_excluded,"
          "schinzel_pass\n";
      for (const CyclotomicRow& r : x.rows) {
        out += std::to_string(r.value.n) + "," + csv_field(r.value.value.to_string()) + "," +
               mpz_string(r.value.norm) + "," + yes(r.value.is_unit) + "," + num(r.esum.delta.upper()) + "," +
               num(abs(r.esum.remainder).upper()) + "," + yes(r.esum.delta_ok) + "," + yes(r.esum.remainder_ok) +
               "," + yes(r.schinzel.excluded) + "," + yes(r.schinzel.pass) + "\n";
      }
      if (x.schwarz) {
        out += "\nn,abs_log_phi_upper\n";
        for (std::size_t i = 0; i < x.schwarz->values.size(); ++i) {
          out += std::to_string(i + 1) + "," + num(x.schwarz->values[i]) + "\n";
        }
      }
      return out;
    }
    case Format::Human: {
      Lines out;
      for (const CyclotomicRow& r : x.rows) {
        out.row("n = " + std::to_string(r.value.n), r.value.value.to_string(), "Phi_n(gamma), gamma = -eta^2");
        out.row("  norm", mpz_string(r.value.norm) + (r.value.is_unit ? " (unit)" : ""));
        out.row("  delta", short_num(r.esum.delta.upper()) + (r.esum.delta_ok ? "  ok" : "  exceeds 0.48"),
                "sum nu log N(p) = phi(n) log|gamma| + 2 log|Phi_n(gamma^-1)|");
        out.row("  2 log|Phi_n(1/gamma)|", short_num(r.esum.remainder.upper()) +
                                               (r.esum.remainder_ok ? "  within 0.48" : "  exceeds 0.48"),
                "the O(0.48) remainder");
        out.row("  Schinzel", r.schinzel.excluded ? "n = 6 excluded" : (r.schinzel.pass ? "pass" : "FAIL"),
                "nu_P(Phi_n(gamma)) <= nu_p(n) for non-primitive P");
        for (const SchinzelEntry& e : r.schinzel.entries) {
          if (!e.pass) {
            out.text("    P = " + e.prime.to_string() + " above " + mpz_string(e.p) + ": valuation " +
                     std::to_string(e.valuation) + " > " + std::to_string(e.nu_p_n) +
                     (e.ramified ? " (ramified prime)" : ""));
          }
        }
      }
      if (x.schwarz) {
        const SchwarzReport& s = *x.schwarz;
        out.row("sweep", "1 <= n <= " + std::to_string(s.n_max), "|log|Phi_n(gamma^-1)||");
        out.row("  bound (signed r)", s.bound.upper_string(6), "|log(1 - gamma^-1)| / (1 - gamma^-1)");
        out.row("  bound (r = |z|)", s.modulus_bound.upper_string(6), "|log(1 - r)| / (1 - r)");
        out.row("  n = 1 value", s.n1_value.upper_string(6), "reported separately");
        out.row("  max over n >= 2", s.max_value.upper_string(6) + " at n = " + std::to_string(s.argmax));
        out.row("  <= signed bound", s.within_bound ? "yes" : "no");
        out.row("  < 0.24", s.below_024 ? "yes" : "no");
        out.row("  <= |z| bound", s.within_modulus_bound ? "yes" : "no");
      }
      return out.str();
    }
  }
  return {};
}

std::string emit(const YuReport& x, Format format) {
  switch (format) {
    case Format::Json:
      return wrap(type_name<YuReport>(), x);
    case Format::Csv: {
      std::string out = "k,name,f_p,lhs,rhs,pass\n";
      for (const YuCheckReport& r : x.rows) {
        for (const YuInequality& y : r.results) {
          out += std::to_string(r.k) + "," + y.name + "," + std::to_string(y.f_p) + "," + num(y.lhs) + "," +
                 num(y.rhs) + "," + yes(y.pass) + "\n";
        }
      }
      return out;
    }
    case Format::Human: {
      Lines out;
      for (const YuCheckReport& r : x.rows) {
        out.row("k = " + std::to_string(r.k), std::string(r.pass ? "pass" : "FAIL") + ", p = " +
                                                  mpz_string(r.p_floor),
                "p = ceil(e^(3k) k^3)");
        for (const YuInequality& y : r.results) {
          const std::string f = y.f_p == 0 ? "" : " (f_p = " + std::to_string(y.f_p) + ")";
          out.row("  " + y.name + f, short_num(y.lhs) + (y.pass ? " < " : " !< ") + short_num(y.rhs));
        }
      }
      return out.str();
    }
  }
  return {};
}

std::string emit(const BigKappaReport& x, Format format) {
  switch (format) {
    case Format::Json:
      return wrap(type_name<BigKappaReport>(), x);
    case Format::Csv: {
      std::string out = "name,statement,lhs,rhs,pass\n";
      for (const ChainLink& l : x.links) {
        out += l.name + "," + csv_field(l.statement) + "," + num(l.lhs) + "," + num(l.rhs) + "," + yes(l.pass) + "\n";
      }
      return out;
    }
    case Format::Human: {
      Lines out;
      out.row("log kappa", short_num(x.log_kappa));
      out.row("k = floor(log M)", std::to_string(x.k), "M = kappa (kappa + 1)");
      for (const ChainLink& l : x.links) {
        out.row("  " + l.name, std::string(l.pass ? "pass  " : "FAIL  ") + l.statement);
      }
      out.row("threshold", short_num(x.threshold), "log n < 143 log kappa log log kappa");
      out.row("result", x.pass ? "pass" : "FAIL");
      return out.str();
    }
  }
  return {};
}

}  // namespace stewart
