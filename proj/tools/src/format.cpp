#include "qhz_cli/format.hpp"

#include <charconv>
#include <cstdlib>

namespace qhz::cli {

namespace {

double parse_double(const std::string& text, const std::string& whole) {
  if (text.empty()) throw DomainError("malformed complex value '" + whole + "'");
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + text.size() || !std::isfinite(v)) {
    throw DomainError("malformed complex value '" + whole + "'");
  }
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return Complex(parse_double(text, text), 0.0);
  if (text.find(',', comma + 1) != std::string::npos) {
    throw DomainError("malformed complex value '" + text + "'");
  }
  return Complex(parse_double(text.substr(0, comma), text),
                 parse_double(text.substr(comma + 1), text));
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  return format_double(z.real()) + (z.imag() < 0.0 ? "" : "+") +
         format_double(z.imag()) + "i";
}

Json to_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json to_json(const SeriesValue& v) {
  Json j;
  j["value"] = to_json(v.value);
  j["abs_err"] = v.abs_err;
  j["terms_used"] = v.terms_used;
  return j;
}

Json to_json(const PoleDescriptor& p) {
  Json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["location"] = to_json(p.location);
  j["residue"] = to_json(p.residue);
  return j;
}

Json to_json(const QPolynomial& p) {
  Json j;
  j["nu"] = p.nu;
  j["m"] = p.m;
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms) {
    Json t;
    t["k"] = k;
    t["re"] = c.real();
    t["im"] = c.imag();
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["log_term"] = to_json(p.log_term);
  return j;
}

Json to_json(const EvalReport& r) {
  Json j;
  j["identity"] = r.identity;
  Json inputs;
  for (const auto& [name, v] : r.inputs) inputs[name] = to_json(v);
  j["inputs"] = inputs;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["abs_diff"] = r.abs_diff;
  j["rel_diff"] = r.rel_diff;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const LimitRow& row) {
  Json j;
  j["k"] = row.k;
  j["q"] = row.q;
  j["q_value"] = to_json(row.q_value);
  j["classical_value"] = to_json(row.classical_value);
  j["abs_error"] = row.abs_error;
  return j;
}

Json to_json(const ProductValue& p) {
  Json j;
  j["log_value"] = to_json(p.log_value);
  j["value"] = to_json(p.value);
  j["abs_err"] = p.abs_err;
  j["depth"] = p.depth;
  return j;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out_ << '"';
      for (char c : f) {
        if (c == '"') out_ << '"';
        out_ << c;
      }
      out_ << '"';
    } else {
      out_ << f;
    }
  }
  out_ << '\n';
}

std::string inputs_text(const std::vector<std::pair<std::string, Complex>>& in) {
  std::string out;
  for (const auto& [name, v] : in) {
    if (!out.empty()) out += ' ';
    out += name + "=" + format_complex(v);
  }
  return out;
}

}  // namespace qhz::cli
