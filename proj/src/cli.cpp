#include "vortexq/cli.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <limits>
#include <optional>
#include <regex>
#include <thread>

#include "CLI11.hpp"
#include "vortexq/classes.hpp"
#include "vortexq/hrr.hpp"
#include "vortexq/oracle.hpp"
#include "vortexq/report_io.hpp"

namespace vortexq::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PointOptions {
  int genus = 0;
  int vortices = 0;
  std::string area_quanta;
  std::string area;
  std::string format = "human";
  std::string method = "hrr_ring";
};

struct TableOptions {
  std::string genus = "0";
  std::string vortices = "1";
  std::string area_quanta = "1";
  std::string format = "human";
  long long max_grid = 100000;
};

struct IntRange {
  long long first = 0;
  long long last = -1;

  long long size() const { return last < first ? 0 : last - first + 1; }
};

IntRange parse_range(const std::string& text, const std::string& what) {
  static const std::regex pattern(R"((-?[0-9]+)(?:\.\.(-?[0-9]+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw UsageError("bad range for " + what + ": '" + text + "' (expected a or a..b)");
  }
  IntRange r;
  try {
    r.first = std::stoll(m[1].str());
    r.last = m[2].matched ? std::stoll(m[2].str()) : r.first;
  } catch (const std::out_of_range&) {
    throw UsageError("range bound out of range for " + what);
  }
  return r;
}

Rational parse_area(const std::string& text) {
  // A is accepted symbolically as a multiple of 4π: "4pi", "4pi*5", "4*pi*7/2".
  static const std::regex pattern(R"(4\*?pi(?:\*(.+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw UsageError("--area must be written as 4pi*k, got '" + text + "'");
  }
  return m[1].matched ? parse_rational(m[1].str()) : Rational(1);
}

Rational resolve_area_quanta(const PointOptions& o) {
  if (!o.area_quanta.empty() && !o.area.empty()) {
    throw UsageError("give either --area-quanta or --area, not both");
  }
  if (o.area_quanta.empty() && o.area.empty()) {
    throw UsageError("one of --area-quanta or --area is required");
  }
  try {
    return o.area_quanta.empty() ? parse_area(o.area) : parse_rational(o.area_quanta);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ModuliParams point_params(const PointOptions& o) {
  if (o.genus < 0) {
    throw UsageError("--genus must be nonnegative");
  }
  if (o.vortices < 1) {
    throw UsageError("--vortices must be positive");
  }
  const Rational k = resolve_area_quanta(o);
  if (k <= 0) {
    throw UsageError("area quanta k must be positive, got " + to_string(k));
  }
  return ModuliParams(o.genus, o.vortices, k);
}

OutputFormat format_of(const std::string& text) {
  try {
    return parse_format(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_dimension(const PointOptions& o, std::ostream& out, std::ostream& err) {
  const ModuliParams p = point_params(o);
  const OutputFormat format = format_of(o.format);
  Method method;
  try {
    method = parse_method(o.method);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!is_integral(p)) {
    err << "error: k = " << to_string(p.area_quanta)
        << " is not a positive integer; the Kahler class is not integral, so there is no quantum line bundle\n";
    return kExitUsage;
  }
  const DimensionReport report = vortex_dimension(p, method);
  switch (format) {
    case OutputFormat::json:
      out << dump_json(report_to_json(report));
      break;
    case OutputFormat::csv:
      out << csv_header() << '\n' << row_to_csv(TableRow{report, true}) << '\n';
      break;
    case OutputFormat::human:
      write_human(out, report);
      break;
  }
  if (!report.vanishing_guaranteed) {
    err << "warning: vanishing of higher cohomology is not guaranteed for k = " << to_string(p.area_quanta)
        << "; the reported value is the Euler characteristic, not a dimension\n";
    return kExitUnguaranteed;
  }
  return kExitOk;
}

int cmd_classes(const PointOptions& o, std::ostream& out) {
  const ModuliParams p = point_params(o);
  if (format_of(o.format) == OutputFormat::json) {
    out << dump_json(classes_to_json(p));
  } else {
    write_classes_human(out, p);
  }
  return kExitOk;
}

std::vector<TableRow> evaluate_grid(const std::vector<ModuliParams>& points) {
  std::vector<std::optional<TableRow>> rows(points.size());
  std::vector<std::exception_ptr> failures(points.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(points.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) {
          try {
            rows[i] = evaluate_row(points[i]);
          } catch (...) {
            failures[i] = std::current_exception();
          }
        }
      });
    }
  }
  std::vector<TableRow> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (failures[i]) {
      std::rethrow_exception(failures[i]);
    }
    out.push_back(std::move(*rows[i]));
  }
  return out;
}

int cmd_table(const TableOptions& o, std::ostream& out) {
  const OutputFormat format = format_of(o.format);
  const IntRange gs = parse_range(o.genus, "--genus");
  const IntRange ns = parse_range(o.vortices, "--vortices");
  const IntRange ks = parse_range(o.area_quanta, "--area-quanta");
  if (gs.size() > 0 && gs.first < 0) {
    throw UsageError("--genus range must be nonnegative");
  }
  if (ns.size() > 0 && ns.first < 1) {
    throw UsageError("--vortices range must be positive");
  }
  if (ks.size() > 0 && ks.first < 1) {
    throw UsageError("--area-quanta range must be positive");
  }
  if (gs.size() > 0 && gs.last > kMaxGenus) {
    throw UsageError("--genus range exceeds " + std::to_string(kMaxGenus));
  }
  if (ns.size() > 0 && ns.last > std::numeric_limits<int>::max()) {
    throw UsageError("--vortices range too large");
  }
  const long double grid = static_cast<long double>(gs.size()) * ns.size() * ks.size();
  if (grid > static_cast<long double>(o.max_grid)) {
    throw UsageError("grid has " + std::to_string(static_cast<long long>(grid)) + " points, above --max-grid " +
                     std::to_string(o.max_grid));
  }

  std::vector<ModuliParams> points;
  for (long long g = gs.first; g <= gs.last; ++g) {
    for (long long n = ns.first; n <= ns.last; ++n) {
      for (long long k = ks.first; k <= ks.last; ++k) {
        points.emplace_back(static_cast<int>(g), static_cast<int>(n), Rational(Integer(std::to_string(k))));
      }
    }
  }
  const std::vector<TableRow> rows = evaluate_grid(points);

  switch (format) {
    case OutputFormat::json: {
      nlohmann::json array = nlohmann::json::array();
      for (const auto& row : rows) {
        array.push_back(row_to_json(row));
      }
      out << dump_json(array);
      break;
    }
    case OutputFormat::csv:
      out << csv_header() << '\n';
      for (const auto& row : rows) {
        out << row_to_csv(row) << '\n';
      }
      break;
    case OutputFormat::human:
      out << std::setw(4) << "g" << std::setw(5) << "N" << std::setw(7) << "k" << std::setw(16) << "euler_char"
          << std::setw(16) << "closed_form" << std::setw(12) << "guaranteed" << std::setw(7) << "agree" << '\n';
      for (const auto& row : rows) {
        const DimensionReport& r = row.report;
        out << std::setw(4) << r.params.genus << std::setw(5) << r.params.vortices << std::setw(7)
            << to_string(r.params.area_quanta) << std::setw(16) << to_string(r.euler_characteristic) << std::setw(16)
            << (r.closed_form ? to_string(*r.closed_form) : "-") << std::setw(12)
            << (r.vanishing_guaranteed ? "yes" : "no") << std::setw(7) << (row.paths_agree ? "yes" : "NO") << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_verify(const PointOptions& o, std::ostream& out) {
  if (o.genus < 0 || o.vortices < 1) {
    throw UsageError("verify needs --genus >= 0 and --vortices >= 1");
  }
  const OutputFormat format = format_of(o.format);
  const oracle::VerificationReport report = oracle::verify_reduced_ring(o.genus, o.vortices);
  if (format == OutputFormat::json) {
    out << dump_json(verification_to_json(report));
  } else {
    out << "g=" << report.genus << " N=" << report.points << ": " << report.monomials << " monomials, "
        << report.pairs_checked << " pairs, " << report.discrepancies.size() << " discrepancies\n";
    for (const auto& d : report.discrepancies) {
      out << "  " << d.left.to_string() << " * " << d.right.to_string() << ": reduced " << to_string(d.reduced_value)
          << ", oracle " << to_string(d.oracle_value) << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitUsage;
}

void add_point_options(CLI::App* sub, PointOptions& o, bool with_area) {
  sub->add_option("-g,--genus", o.genus, "Genus of the surface")->required();
  sub->add_option("-n,--vortices", o.vortices, "Number of vortices N")->required();
  if (with_area) {
    sub->add_option("-k,--area-quanta", o.area_quanta, "k = A/4pi, an integer or p/q");
    sub->add_option("--area", o.area, "Area written as 4pi*k");
  }
  sub->add_option("--format", o.format, "human, json or csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimension of the quantum Hilbert space of N vortices on a genus-g surface", "vortexq"};
  app.require_subcommand(1);

  PointOptions dim;
  auto* dimension = app.add_subcommand("dimension", "Hilbert space dimension for one parameter point");
  add_point_options(dimension, dim, true);
  dimension->add_option("--method", dim.method, "hrr_ring or closed_form");

  PointOptions cls;
  auto* classes = app.add_subcommand("classes", "Print the Kahler, line bundle, tangent and canonical classes");
  add_point_options(classes, cls, true);

  TableOptions tab;
  auto* table = app.add_subcommand("table", "Evaluate a (g, N, k) grid");
  table->add_option("-g,--genus", tab.genus, "Range a..b");
  table->add_option("-n,--vortices", tab.vortices, "Range a..b");
  table->add_option("-k,--area-quanta", tab.area_quanta, "Range a..b");
  table->add_option("--format", tab.format, "human, json or csv");
  table->add_option("--max-grid", tab.max_grid, "Largest accepted number of grid points");

  PointOptions ver;
  auto* verify = app.add_subcommand("verify", "Check the reduced ring against the tensor-ring oracle");
  add_point_options(verify, ver, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*dimension) {
      return cmd_dimension(dim, out, err);
    }
    if (*classes) {
      return cmd_classes(cls, out);
    }
    if (*table) {
      return cmd_table(tab, out);
    }
    if (*verify) {
      return cmd_verify(ver, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace vortexq::cli
