#include "hyperspec/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hyperspec {

namespace {

using nlohmann::ordered_json;

std::string fixed(double v, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

ordered_json ranked(const std::vector<RankedComposition>& list) {
  ordered_json arr = ordered_json::array();
  for (const auto& rc : list) arr.push_back({{"parts", rc.composition.parts}, {"rho", rc.rho}});
  return arr;
}

ordered_json extremal_json(const ExtremalReport& r) {
  return {{"family", r.family},           {"n", r.n},
          {"evaluator", to_string(r.evaluator)}, {"evaluations", r.evaluations},
          {"tie_tolerance", r.tie_tolerance},    {"minima", ranked(r.minima)},
          {"maxima", ranked(r.maxima)}};
}

void text_table(std::ostream& out, const std::string& title, const std::vector<RankedComposition>& list) {
  std::size_t width = 5;
  for (const auto& rc : list) width = std::max(width, rc.composition.to_string().size());
  out << title << " (" << list.size() << ")\n";
  out << "  " << std::left << std::setw(static_cast<int>(width)) << "parts" << "  rho\n";
  for (const auto& rc : list)
    out << "  " << std::left << std::setw(static_cast<int>(width)) << rc.composition.to_string() << "  "
        << fixed(rc.rho) << '\n';
}

std::string csv_parts(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.parts.size(); ++i) s += (i ? ";" : "") + std::to_string(c.parts[i]);
  return s;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

void write_spectral(std::ostream& out, OutputFormat format, const std::string& family, const SpectralResult& r,
                    bool with_vector) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json j{{"schema", 1},
                     {"command", "rho"},
                     {"family", family},
                     {"rho", r.rho},
                     {"residual", r.residual},
                     {"iterations", r.iterations},
                     {"bracket", {r.lambda_min, r.lambda_max}},
                     {"converged", r.converged}};
      if (with_vector) j["vector"] = r.vector.values;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "family,rho,residual,iterations,lambda_min,lambda_max,converged\n";
      out << family << ',' << fixed(r.rho, 17) << ',' << fixed(r.residual, 6) << ',' << r.iterations << ','
          << fixed(r.lambda_min, 17) << ',' << fixed(r.lambda_max, 17) << ',' << (r.converged ? "true" : "false")
          << '\n';
      if (with_vector) {
        out << "vertex,value\n";
        for (std::size_t v = 0; v < r.vector.values.size(); ++v) out << v + 1 << ',' << fixed(r.vector.values[v], 17) << '\n';
      }
      break;
    case OutputFormat::text:
      out << "family      " << family << '\n'
          << "rho         " << fixed(r.rho) << '\n'
          << "residual    " << fixed(r.residual, 3) << '\n'
          << "iterations  " << r.iterations << '\n'
          << "bracket     [" << fixed(r.lambda_min, 15) << ", " << fixed(r.lambda_max, 15) << "]\n"
          << "converged   " << (r.converged ? "yes" : "no") << '\n';
      if (with_vector) {
        out << "vector\n";
        for (std::size_t v = 0; v < r.vector.values.size(); ++v)
          out << "  " << std::setw(4) << v + 1 << "  " << fixed(r.vector.values[v]) << '\n';
      }
      break;
  }
}

void write_extremal(std::ostream& out, OutputFormat format, const ExtremalReport& r) {
  switch (format) {
    case OutputFormat::json: {
      ordered_json j{{"schema", 1}, {"command", "extremal"}};
      j.update(extremal_json(r));
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "kind,parts,rho\n";
      for (const auto& rc : r.minima) out << "min," << csv_parts(rc.composition) << ',' << fixed(rc.rho, 17) << '\n';
      for (const auto& rc : r.maxima) out << "max," << csv_parts(rc.composition) << ',' << fixed(rc.rho, 17) << '\n';
      break;
    case OutputFormat::text:
      out << "family       " << r.family << "\nn            " << r.n << "\nevaluator    " << to_string(r.evaluator)
          << "\nevaluations  " << r.evaluations << "\ntie band     " << r.tie_tolerance << "\n";
      text_table(out, "minima", r.minima);
      text_table(out, "maxima", r.maxima);
      break;
  }
}

void write_verification(std::ostream& out, OutputFormat format, const std::string& suite,
                        const std::vector<VerificationReport>& reports) {
  bool all = std::ranges::all_of(reports, &VerificationReport::passed);
  switch (format) {
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json item{{"name", r.name}, {"passed", r.passed}, {"failures", r.failures}, {"notes", r.notes}};
        if (r.report.evaluations > 0) item["report"] = extremal_json(r.report);
        arr.push_back(std::move(item));
      }
      ordered_json j{{"schema", 1}, {"command", "verify"}, {"suite", suite}, {"passed", all}, {"instances", arr}};
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "name,passed,failures\n";
      for (const auto& r : reports) out << r.name << ',' << (r.passed ? "true" : "false") << ',' << r.failures.size() << '\n';
      break;
    case OutputFormat::text:
      for (const auto& r : reports) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        for (const auto& n : r.notes) out << "  [" << n << "]";
        out << '\n';
        for (const auto& f : r.failures) out << "      " << f << '\n';
      }
      out << suite << ": " << std::ranges::count_if(reports, &VerificationReport::passed) << "/" << reports.size()
          << " passed\n";
      break;
  }
}

}  // namespace hyperspec
