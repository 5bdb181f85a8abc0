#include "greenring/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace greenring {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

// 12 significant digits, still a JSON number.
ordered_json json_double(double v) {
  if (!std::isfinite(v)) return format_double(v);
  return std::strtod(format_double(v).c_str(), nullptr);
}

bool is_scalar_array(const ordered_json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

// Objects and nested arrays one item per line; arrays of scalars inline.
void write_json(std::ostringstream& os, const ordered_json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << ordered_json(k).dump() << ": ";
      write_json(os, v, indent + 2);
    }
    os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (j.is_array() && !is_scalar_array(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      write_json(os, j[i], indent + 2);
    }
    os << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else if (j.is_array()) {
    os << "[";
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << "]";
  } else {
    os << j.dump();
  }
}

std::string dump(const ordered_json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << "\n";
  return os.str();
}

ordered_json int_rows(const std::vector<IntVector>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) {
      if (v.fits_slong_p()) r.push_back(v.get_si());
      else r.push_back(v.get_str());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_vector(const BasedRing& r, const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool negative = v[i] < 0;
    const Integer mag = abs(v[i]);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += r.labels()[i];
  }
  return out.empty() ? "0" : out;
}

std::string csv_matrix(const BasedRing& r, const std::vector<IntVector>& rows, bool header_labels) {
  std::ostringstream os;
  if (header_labels) {
    os << "label";
    for (const auto& l : r.labels()) os << "," << l;
    os << "\n";
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (header_labels ? r.labels()[i] : std::to_string(i));
    for (const auto& v : rows[i]) os << "," << v.get_str();
    os << "\n";
  }
  return os.str();
}

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorCode::Format, "BasedRing file: " + what); }

std::size_t as_index(const ordered_json& v, const char* field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) format_error(std::string(field) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

std::string based_to_json(const BasedRing& r) {
  ordered_json j;
  j["format_version"] = kBasedRingFormatVersion;
  j["labels"] = r.labels();
  j["unit"] = r.unit_index();
  if (r.involution()) j["involution"] = *r.involution();
  ordered_json constants = ordered_json::array();
  for (const auto& c : r.constants()) constants.push_back({c.i, c.j, c.k, c.value});
  j["constants"] = std::move(constants);
  return dump(j);
}

BasedRing based_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    format_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) format_error("top level must be an object");
  if (!j.contains("format_version") || j["format_version"] != kBasedRingFormatVersion) {
    format_error("format_version must be " + std::to_string(kBasedRingFormatVersion));
  }
  if (!j.contains("labels") || !j["labels"].is_array()) format_error("labels must be an array");
  std::vector<std::string> labels;
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) format_error("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (!j.contains("unit")) format_error("missing unit");
  const std::size_t unit = as_index(j["unit"], "unit");

  std::optional<std::vector<std::size_t>> involution;
  if (j.contains("involution") && !j["involution"].is_null()) {
    if (!j["involution"].is_array()) format_error("involution must be an array");
    std::vector<std::size_t> sigma;
    for (const auto& v : j["involution"]) sigma.push_back(as_index(v, "involution entry"));
    involution = std::move(sigma);
  }

  if (!j.contains("constants") || !j["constants"].is_array()) format_error("constants must be an array");
  std::vector<BasedRing::Constant> constants;
  for (const auto& c : j["constants"]) {
    if (!c.is_array() || c.size() != 4) format_error("each constant must be [i, j, k, N]");
    if (!c[3].is_number_integer()) format_error("structure constants must be integers");
    constants.push_back({as_index(c[0], "i"), as_index(c[1], "j"), as_index(c[2], "k"), c[3].get<std::int64_t>()});
  }
  try {
    return BasedRing(std::move(labels), unit, constants, std::move(involution));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Format) throw;
    format_error(e.what());
  }
}

std::string render_ring(const BasedRing& r, Format f, const std::string& title) {
  switch (f) {
    case Format::Json: return based_to_json(r);
    case Format::Csv: {
      std::ostringstream os;
      os << "left,right,product\n";
      for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j) {
          if (r.product(i, j).empty()) continue;
          IntVector v(r.rank());
          for (const auto& e : r.product(i, j)) v[e.k] = e.value;
          os << r.labels()[i] << "," << r.labels()[j] << "," << render_vector(r, v) << "\n";
        }
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      os << "ring: " << title << "\nrank: " << r.rank() << "\nbasis:";
      for (const auto& l : r.labels()) os << " " << l;
      os << "\n";
      for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < r.rank(); ++j) {
          IntVector v(r.rank());
          for (const auto& e : r.product(i, j)) v[e.k] = e.value;
          os << r.labels()[i] << " * " << r.labels()[j] << " = " << render_vector(r, v) << "\n";
        }
      return os.str();
    }
  }
  return {};
}

std::string render_gram(const BasedRing& r, const FormReport& rep, Format f) {
  switch (f) {
    case Format::Json: {
      ordered_json j;
      j["labels"] = r.labels();
      j["gram"] = int_rows(rep.gram);
      j["nondegenerate"] = rep.nondegenerate;
      return dump(j);
    }
    case Format::Csv: return csv_matrix(r, rep.gram, true);
    case Format::Text: {
      std::ostringstream os;
      for (std::size_t i = 0; i < rep.gram.size(); ++i) {
        for (std::size_t k = 0; k < rep.gram[i].size(); ++k) os << (k ? " " : "") << rep.gram[i][k].get_str();
        os << "\n";
      }
      os << "nondegenerate: " << (rep.nondegenerate ? "true" : "false") << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_radical(const BasedRing& r, const FormReport& rep, Format f) {
  switch (f) {
    case Format::Json: {
      ordered_json j;
      j["labels"] = r.labels();
      j["left_rank"] = rep.left_radical.size();
      j["right_rank"] = rep.right_radical.size();
      j["left_radical"] = int_rows(rep.left_radical);
      j["right_radical"] = int_rows(rep.right_radical);
      j["nondegenerate"] = rep.nondegenerate;
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "side,index";
      for (const auto& l : r.labels()) os << "," << l;
      os << "\n";
      auto rows = [&](const char* side, const std::vector<IntVector>& basis) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
          os << side << "," << i;
          for (const auto& v : basis[i]) os << "," << v.get_str();
          os << "\n";
        }
      };
      rows("left", rep.left_radical);
      rows("right", rep.right_radical);
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      os << "left radical rank: " << rep.left_radical.size() << "\n";
      for (const auto& v : rep.left_radical) os << "  " << render_vector(r, v) << "\n";
      os << "right radical rank: " << rep.right_radical.size() << "\n";
      for (const auto& v : rep.right_radical) os << "  " << render_vector(r, v) << "\n";
      os << "nondegenerate: " << (rep.nondegenerate ? "true" : "false") << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_fpdim(const BasedRing& r, const std::vector<double>& dims, Format f) {
  switch (f) {
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (std::size_t i = 0; i < dims.size(); ++i) {
        ordered_json e;
        e["label"] = r.labels()[i];
        e["fpdim"] = json_double(dims[i]);
        arr.push_back(std::move(e));
      }
      ordered_json j;
      j["fpdim"] = std::move(arr);
      return dump(j);
    }
    case Format::Csv:
    case Format::Text: {
      std::ostringstream os;
      const char sep = f == Format::Csv ? ',' : ' ';
      if (f == Format::Csv) os << "label,fpdim\n";
      for (std::size_t i = 0; i < dims.size(); ++i) os << r.labels()[i] << sep << format_double(dims[i]) << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_report(const VerificationReport& rep, const std::string& ring, double tol, Format f) {
  switch (f) {
    case Format::Json: {
      ordered_json j;
      j["subject"] = rep.subject;
      j["ring"] = ring;
      j["tolerance"] = json_double(tol);
      j["passed"] = rep.passed();
      ordered_json checks = ordered_json::array();
      ordered_json violations = ordered_json::array();
      for (const auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["exact"] = c.exact;
        e["passed"] = c.passed;
        e["worst_residual"] = json_double(c.worst_residual);
        checks.push_back(std::move(e));
        for (const auto& v : c.violations) violations.push_back({{"check", c.name}, {"detail", v}});
      }
      j["checks"] = std::move(checks);
      j["violations"] = std::move(violations);
      return dump(j);
    }
    case Format::Csv: {
      std::ostringstream os;
      os << "check,exact,passed,worst_residual\n";
      for (const auto& c : rep.checks)
        os << c.name << "," << (c.exact ? "true" : "false") << "," << (c.passed ? "true" : "false") << ","
           << format_double(c.worst_residual) << "\n";
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      os << rep.subject << " verification of " << ring << " (tol " << format_double(tol) << ")\n";
      for (const auto& c : rep.checks) {
        os << (c.passed ? "  PASS " : "  FAIL ") << c.name << "  worst residual " << format_double(c.worst_residual)
           << "\n";
        for (const auto& v : c.violations) os << "    " << v << "\n";
      }
      os << (rep.passed() ? "PASSED" : "FAILED") << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace greenring
