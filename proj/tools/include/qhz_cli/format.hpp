#pragma once

// Parsing of complex command-line arguments and JSON / CSV / text rendering
// of library results.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhz/qbernoulli.hpp"
#include "qhz/qzeta.hpp"
#include "qhz/report.hpp"
#include "qhz/zqprod.hpp"

namespace qhz::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

/// "re" or "re,im"; throws DomainError on anything else.
Complex parse_complex(const std::string& text);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);
std::string format_complex(Complex z);

Json to_json(Complex z);
Json to_json(const SeriesValue& v);
Json to_json(const PoleDescriptor& p);
Json to_json(const QPolynomial& p);
Json to_json(const EvalReport& r);
Json to_json(const LimitRow& row);
Json to_json(const ProductValue& p);

/// Minimal CSV writer: every field is already a rendered number or a bare
/// word; fields containing commas or quotes are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

std::string inputs_text(const std::vector<std::pair<std::string, Complex>>& in);

}  // namespace qhz::cli
