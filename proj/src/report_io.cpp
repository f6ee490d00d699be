#include "vortexq/report_io.hpp"

#include <sstream>

namespace vortexq {

using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
  if (text == "human") {
    return OutputFormat::human;
  }
  if (text == "json") {
    return OutputFormat::json;
  }
  if (text == "csv") {
    return OutputFormat::csv;
  }
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

json class_to_json(const CohomologyClass& c) {
  json sigma = json::array();
  for (const auto& b : c.sigma_coeffs) {
    sigma.push_back(to_string(b));
  }
  return json{{"eta", to_string(c.eta_coeff)}, {"sigma", sigma}, {"text", c.to_string()}};
}

json report_to_json(const DimensionReport& report) {
  const ModuliParams& p = report.params;
  json out{
      {"genus", p.genus},
      {"vortices", p.vortices},
      {"area_quanta", to_string(p.area_quanta)},
      {"euler_characteristic", to_string(report.euler_characteristic)},
      {"vanishing_guaranteed", report.vanishing_guaranteed},
      {"method", std::string(to_string(report.method))},
      {"kahler_class", class_to_json(kahler_class(p))},
      {"line_bundle_class", class_to_json(quantum_line_class(p))},
      {"tangent_class", class_to_json(tangent_chern(p))},
      {"notes", report.notes},
  };
  if (report.dimension) {
    out["dimension"] = to_string(*report.dimension);
  }
  return out;
}

json verification_to_json(const oracle::VerificationReport& report) {
  json discrepancies = json::array();
  for (const auto& d : report.discrepancies) {
    discrepancies.push_back(json{{"left", d.left.to_string()},
                                 {"right", d.right.to_string()},
                                 {"reduced", to_string(d.reduced_value)},
                                 {"oracle", to_string(d.oracle_value)}});
  }
  return json{{"genus", report.genus},
              {"vortices", report.points},
              {"monomials", report.monomials},
              {"pairs_checked", report.pairs_checked},
              {"discrepancy_count", report.discrepancies.size()},
              {"discrepancies", discrepancies}};
}

TableRow evaluate_row(const ModuliParams& p) {
  try {
    return TableRow{vortex_dimension(p), true};
  } catch (const ConsistencyError&) {
    TableRow row;
    row.paths_agree = false;
    row.report.params = p;
    row.report.euler_characteristic = euler_characteristic(quantum_line_class(p), p);
    row.report.closed_form = closed_form_dimension(p);
    row.report.vanishing_guaranteed = vanishing_guaranteed(p);
    row.report.notes.push_back("HRR ring value and closed form disagree");
    return row;
  }
}

json row_to_json(const TableRow& row) {
  json out = report_to_json(row.report);
  out["closed_form"] = row.report.closed_form ? json(to_string(*row.report.closed_form)) : json(nullptr);
  out["paths_agree"] = row.paths_agree;
  return out;
}

std::string csv_header() {
  return "genus,vortices,area_quanta,euler_characteristic,closed_form,dimension,vanishing_guaranteed,paths_agree";
}

std::string row_to_csv(const TableRow& row) {
  const DimensionReport& r = row.report;
  std::ostringstream os;
  os << r.params.genus << ',' << r.params.vortices << ',' << to_string(r.params.area_quanta) << ','
     << to_string(r.euler_characteristic) << ',' << (r.closed_form ? to_string(*r.closed_form) : "") << ','
     << (r.dimension ? to_string(*r.dimension) : "") << ',' << (r.vanishing_guaranteed ? "true" : "false") << ','
     << (row.paths_agree ? "true" : "false");
  return os.str();
}

namespace {

void write_class_lines(std::ostream& os, const ModuliParams& p) {
  os << "  [omega]/4pi          = " << kahler_class(p).to_string() << '\n'
     << "  c1(L)                = " << quantum_line_class(p).to_string() << '\n'
     << "  c1(TX)               = " << tangent_chern(p).to_string() << '\n'
     << "  [omega]/4pi + c1(TX) = " << (kahler_class(p) + tangent_chern(p)).to_string() << '\n';
}

void write_header(std::ostream& os, const ModuliParams& p) {
  os << "Sym^" << p.vortices << " of a genus-" << p.genus << " surface, k = A/4pi = " << to_string(p.area_quanta)
     << '\n';
}

}  // namespace

void write_human(std::ostream& os, const DimensionReport& report) {
  const ModuliParams& p = report.params;
  write_header(os, p);
  write_class_lines(os, p);
  os << "  Euler characteristic = " << to_string(report.euler_characteristic) << " (" << to_string(report.method)
     << ")\n";
  if (report.closed_form) {
    os << "  closed form C(" << to_string(p.area_quanta) << ", " << p.vortices
       << ") = " << to_string(*report.closed_form) << '\n';
  }
  os << "  vanishing guaranteed = " << (report.vanishing_guaranteed ? "yes" : "no") << '\n';
  if (report.dimension) {
    os << "  dimension            = " << to_string(*report.dimension) << '\n';
  }
  for (const auto& note : report.notes) {
    os << "  note: " << note << '\n';
  }
}

void write_classes_human(std::ostream& os, const ModuliParams& p) {
  write_header(os, p);
  write_class_lines(os, p);
  os << "  c1(K)                = " << canonical_class(p).to_string() << '\n'
     << "  sum identity holds   = " << (sum_identity_check(p) ? "yes" : "no") << '\n'
     << "  integral             = " << (is_integral(p) ? "yes" : "no") << '\n'
     << "  vanishing guaranteed = " << (vanishing_guaranteed(p) ? "yes" : "no") << '\n';
}

json classes_to_json(const ModuliParams& p) {
  const CohomologyClass sum = kahler_class(p) + tangent_chern(p);
  return json{{"genus", p.genus},
              {"vortices", p.vortices},
              {"area_quanta", to_string(p.area_quanta)},
              {"kahler_class", class_to_json(kahler_class(p))},
              {"line_bundle_class", class_to_json(quantum_line_class(p))},
              {"tangent_class", class_to_json(tangent_chern(p))},
              {"canonical_class", class_to_json(canonical_class(p))},
              {"sum_class", class_to_json(sum)},
              {"sum_identity_holds", sum_identity_check(p)},
              {"is_integral", is_integral(p)},
              {"vanishing_guaranteed", vanishing_guaranteed(p)}};
}

std::string dump_json(const json& value) { return value.dump(2) + "\n"; }

}  // namespace vortexq
