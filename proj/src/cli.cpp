#include "octic/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "octic/branch.hpp"
#include "octic/enumerate.hpp"
#include "octic/fixtures.hpp"
#include "octic/formulas.hpp"
#include "octic/generators.hpp"
#include "octic/io.hpp"

namespace octic {

namespace {

int output_width() {
  if (const char* env = std::getenv("OCTIC_OUTPUT_WIDTH")) {
    int w = std::atoi(env);
    if (w >= 40 && w <= 400) return w;
  }
  return 96;
}

std::string rule() { return std::string(output_width(), '-'); }

struct CommonOptions {
  std::string input;
  std::string fixture;
  std::string format = "human";
  bool trace = false;
};

bool structured(const CommonOptions& opts) { return opts.format == "structured"; }

// Any of the accepted input documents, at most one of which is set.
struct LoadedInput {
  std::optional<ArrangementDescriptor> descriptor;
  std::optional<std::vector<RationalPlane>> planes;
  std::optional<BranchModel> branch;
  std::string origin;
};

LoadedInput load_input(const CommonOptions& opts, bool allow_descriptor,
                       bool allow_planes, bool allow_branch) {
  if (opts.input.empty() == opts.fixture.empty())
    throw ParseError("exactly one of --input and --fixture is required");

  LoadedInput loaded;
  if (!opts.fixture.empty()) {
    loaded.origin = "fixture '" + opts.fixture + "'";
    if (allow_planes) {
      if (auto planes = plane_fixture(opts.fixture)) {
        loaded.planes = std::move(planes);
        return loaded;
      }
    }
    if (allow_descriptor) {
      if (auto desc = descriptor_fixture(opts.fixture)) {
        loaded.descriptor = std::move(desc);
        return loaded;
      }
    }
    std::string names;
    for (const auto& n : fixture_names()) names += "\n  " + n;
    throw ParseError("unknown fixture '" + opts.fixture +
                     "'; available fixtures:" + names);
  }

  loaded.origin = opts.input;
  std::ifstream file(opts.input);
  if (!file) throw ParseError("cannot open '" + opts.input + "'");
  Json doc = parse_document(file, opts.input);
  const std::string format = format_of(doc);
  if (format == kDescriptorFormat && allow_descriptor)
    loaded.descriptor = descriptor_from_json(doc);
  else if (format == kPlanesFormat && allow_planes)
    loaded.planes = planes_from_json(doc);
  else if (format == kBranchFormat && allow_branch)
    loaded.branch = branch_from_json(doc);
  else
    throw ParseError(opts.input + ": unsupported document format '" + format +
                     "' for this command");
  return loaded;
}

void print_validation_human(std::ostream& out, const ValidationReport& report) {
  if (report.ok()) {
    out << "validation: ok\n";
    return;
  }
  out << "validation: FAILED\n";
  for (const auto& issue : report.issues)
    out << "  [" << issue.code << "] " << issue.message << "\n";
}

std::string degrees_text(const std::vector<long long>& degrees) {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s;
}

void print_descriptor_human(std::ostream& out, const ArrangementDescriptor& d) {
  out << "degrees: (" << degrees_text(d.degrees) << ")  p4_0=" << d.p4_0
      << " p4_1=" << d.p4_1 << " p5_0=" << d.p5_0 << " p5_1=" << d.p5_1
      << " p5_2=" << d.p5_2 << " l3=" << d.l3;
  if (d.elliptic_case) out << "  elliptic_case=" << to_string(*d.elliptic_case);
  out << "\n";
}

void print_euler_human(std::ostream& out, const EulerResult& result) {
  out << "e(Y) = " << result.value << "  [path: " << to_string(result.path)
      << "]\n";
  for (const auto& [name, value] : result.trace)
    out << "  " << std::left << std::setw(24) << name << std::right
        << std::setw(8) << value << "\n";
}

// ---------------------------------------------------------------- euler ---

int cmd_euler(const CommonOptions& opts, std::ostream& out) {
  LoadedInput loaded = load_input(opts, true, true, false);
  ArrangementDescriptor desc;
  if (loaded.planes) {
    IncidenceReport report = analyze(*loaded.planes);
    if (!report.violations.empty())
      throw ViolationError("arrangement violates hypotheses: " +
                           report.violations.front().detail);
    desc = to_descriptor(report);
  } else {
    desc = *loaded.descriptor;
  }

  ValidationReport validation = validate(desc);
  if (!validation.ok())
    throw ValidationError("invalid descriptor (" +
                          validation.issues.front().code + "): " +
                          validation.issues.front().message);
  EulerResult result = desc.elliptic_case ? classify_elliptic(desc)
                                          : euler_closed_form(desc);

  if (structured(opts)) {
    Json j;
    j["format"] = "octic-euler/1";
    j["input"] = loaded.origin;
    j["descriptor"] = descriptor_to_json(desc);
    j["validation"] = validation_to_json(validation);
    j["euler"] = euler_to_json(result);
    out << j.dump(2) << "\n";
  } else {
    print_descriptor_human(out, desc);
    print_validation_human(out, validation);
    print_euler_human(out, result);
  }
  return kExitOk;
}

// -------------------------------------------------------------- analyze ---

int cmd_analyze(const CommonOptions& opts, std::ostream& out) {
  LoadedInput loaded = load_input(opts, false, true, false);
  const auto& planes = *loaded.planes;
  if (planes.size() < 2)
    throw ValidationError("need at least two planes to analyze");
  IncidenceReport report = analyze(planes);

  std::ostringstream buffer;
  bool violated = !report.violations.empty();
  std::optional<ArrangementDescriptor> desc;
  std::optional<ValidationReport> validation;
  std::optional<EulerResult> result;
  if (!violated) {
    desc = to_descriptor(report);
    validation = validate(*desc);
    if (validation->ok()) result = euler_closed_form(*desc);
  }

  if (structured(opts)) {
    Json j = report_to_json(report);
    j["input"] = loaded.origin;
    if (desc) j["descriptor"] = descriptor_to_json(*desc);
    if (validation) j["validation"] = validation_to_json(*validation);
    if (result) j["euler"] = euler_to_json(*result);
    buffer << j.dump(2) << "\n";
  } else {
    buffer << "planes: " << report.plane_count << "\n" << rule() << "\n";
    buffer << "lines (" << report.lines.size() << "):\n";
    for (const auto& l : report.lines)
      buffer << "  q=" << l.line.multiplicity() << " t=" << l.t_count
             << "  plucker=" << vector_to_string(l.line.plucker) << "\n";
    buffer << "points (" << report.points.size() << "):\n";
    for (const auto& p : report.points)
      buffer << "  p=" << p.multiplicity << " on " << p.triple_lines
             << " triple line(s)  at " << p.point.str() << "\n";
    if (violated) {
      buffer << "violations:\n";
      for (const auto& v : report.violations)
        buffer << "  [" << v.kind << "] " << v.detail << "\n";
    }
    if (desc) {
      buffer << rule() << "\n";
      print_descriptor_human(buffer, *desc);
      print_validation_human(buffer, *validation);
      if (result) print_euler_human(buffer, *result);
    }
  }

  out << buffer.str();
  if (violated) return kExitViolation;
  if (!validation->ok()) return kExitValidation;
  return kExitOk;
}

// -------------------------------------------------------------- resolve ---

int cmd_resolve(const CommonOptions& opts, std::ostream& out) {
  LoadedInput loaded = load_input(opts, true, true, true);
  BranchModel model;
  std::optional<long long> formula_value;

  if (loaded.planes) {
    IncidenceReport report = analyze(*loaded.planes);
    if (!report.violations.empty())
      throw ViolationError("arrangement violates hypotheses: " +
                           report.violations.front().detail);
    ArrangementDescriptor desc = to_descriptor(report);
    ValidationReport validation = validate(desc);
    if (!validation.ok())
      throw ValidationError("invalid descriptor: " +
                            validation.issues.front().message);
    formula_value = euler_closed_form(desc).value;
    model = branch_from_incidence(report);
  } else if (loaded.descriptor) {
    formula_value = euler_closed_form(*loaded.descriptor).value;
    model = branch_from_descriptor(*loaded.descriptor);
  } else {
    model = std::move(*loaded.branch);
  }

  ResolutionTrace trace = resolve_run(model);
  bool agrees = !formula_value || *formula_value == trace.euler.value;
  if (!agrees)
    throw LedgerError("ledger value " + std::to_string(trace.euler.value) +
                      " disagrees with formula value " +
                      std::to_string(*formula_value));

  if (structured(opts)) {
    Json j = trace_to_json(trace);
    j["input"] = loaded.origin;
    if (formula_value) {
      j["formula_euler"] = *formula_value;
      j["agreement"] = agrees;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "initial state: invariant = " << invariant_value(trace.initial)
        << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& record = trace.steps[i];
      out << "  step " << std::setw(3) << i + 1 << "  "
          << to_string(record.step.kind) << "  " << record.center;
      if (record.step.kind == StepKind::B || record.step.kind == StepKind::D)
        out << "  e(Z)=" << record.step.center_euler << " t=" << record.step.t;
      out << "  [E2=" << record.state.double_curve_euler_sum
          << " E3=" << record.state.triple_curve_euler_sum
          << " p3=" << record.state.triple_points;
      if (opts.trace)
        out << " p5=" << record.state.p5_0 << "/" << record.state.p5_1 << "/"
            << record.state.p5_2 << " e(V)=" << record.state.e_ambient
            << " e*=" << record.state.component_euler_sum;
      out << "]  invariant=" << record.invariant << "\n";
    }
    out << "steps: " << trace.steps.size() << "\n";
    out << "e(Y) = " << trace.euler.value << "  [path: ledger]\n";
    if (formula_value)
      out << "formula value " << *formula_value
          << (agrees ? " agrees" : " DISAGREES") << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------- validate ---

int cmd_validate(const CommonOptions& opts, std::ostream& out) {
  LoadedInput loaded = load_input(opts, true, true, false);
  ArrangementDescriptor desc;
  if (loaded.planes) {
    IncidenceReport report = analyze(*loaded.planes);
    if (!report.violations.empty())
      throw ViolationError("arrangement violates hypotheses: " +
                           report.violations.front().detail);
    desc = to_descriptor(report);
  } else {
    desc = *loaded.descriptor;
  }
  ValidationReport report = validate(desc);
  if (structured(opts)) {
    Json j;
    j["format"] = "octic-validation/1";
    j["input"] = loaded.origin;
    j["descriptor"] = descriptor_to_json(desc);
    j["validation"] = validation_to_json(report);
    out << j.dump(2) << "\n";
  } else {
    print_descriptor_human(out, desc);
    print_validation_human(out, report);
  }
  return report.ok() ? kExitOk : kExitValidation;
}

// ---------------------------------------------------------------- table ---

int cmd_table(const CommonOptions& opts, std::ostream& out) {
  const auto& rows = corpus();
  if (structured(opts)) {
    Json j;
    j["format"] = "octic-table/1";
    Json list = Json::array();
    for (const auto& desc : rows) {
      Json entry = descriptor_to_json(desc);
      entry.erase("format");
      entry["euler"] = euler_closed_form(desc).value;
      list.push_back(std::move(entry));
    }
    j["rows"] = std::move(list);
    out << j.dump(2) << "\n";
  } else {
    out << std::left << std::setw(6) << "row" << std::setw(20) << "degrees"
        << std::right << std::setw(6) << "p4_0" << std::setw(6) << "p4_1"
        << std::setw(6) << "p5_0" << std::setw(6) << "p5_1" << std::setw(6)
        << "p5_2" << std::setw(6) << "l3" << std::setw(8) << "e(Y)" << "\n"
        << rule() << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& d = rows[i];
      out << std::left << std::setw(6) << i + 1 << std::setw(20)
          << degrees_text(d.degrees) << std::right << std::setw(6) << d.p4_0
          << std::setw(6) << d.p4_1 << std::setw(6) << d.p5_0 << std::setw(6)
          << d.p5_1 << std::setw(6) << d.p5_2 << std::setw(6) << d.l3
          << std::setw(8) << euler_closed_form(d).value << "\n";
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------- examples ---

int cmd_examples(const std::string& name, std::ostream& out,
                 std::ostream& err) {
  auto planes = build_generator(name);
  if (!planes) {
    err << "unknown example '" << name << "'; available generators:\n";
    for (const auto& entry : generator_registry())
      err << "  " << std::left << std::setw(22) << entry.name
          << entry.description << "\n";
    err << "  generic-N             N planes in general position (2..16)\n";
    return kExitParse;
  }
  // The emitted plane list is itself an input document, so it is always
  // written in the structured format regardless of --format.
  Json j = planes_to_json(*planes);
  j["name"] = name;
  out << j.dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------------ enumerate ---

struct EnumerateOptions {
  EnumerationBounds bounds;
  std::string degrees_csv;
  bool list_entries = true;
};

int cmd_enumerate(const EnumerateOptions& eopts, const CommonOptions& opts,
                  std::ostream& out) {
  std::optional<std::vector<long long>> degrees;
  if (!eopts.degrees_csv.empty()) {
    std::vector<long long> parsed;
    std::stringstream ss(eopts.degrees_csv);
    std::string token;
    while (std::getline(ss, token, ','))
      if (!token.empty()) parsed.push_back(std::stoll(token));
    degrees = std::move(parsed);
  }

  long long count = 0;
  std::set<long long> values;
  Json entries = Json::array();
  std::ostringstream rows;
  enumerate_descriptors(
      eopts.bounds, degrees,
      [&](const ArrangementDescriptor& desc, const EulerResult& result) {
        ++count;
        values.insert(result.value);
        if (!eopts.list_entries) return;
        if (structured(opts)) {
          Json entry = descriptor_to_json(desc);
          entry.erase("format");
          entry["euler"] = result.value;
          entries.push_back(std::move(entry));
        } else {
          rows << "  (" << degrees_text(desc.degrees) << ") p4_0=" << desc.p4_0
               << " p4_1=" << desc.p4_1 << " p5_0=" << desc.p5_0
               << " p5_1=" << desc.p5_1 << " p5_2=" << desc.p5_2
               << " l3=" << desc.l3 << "  ->  " << result.value << "\n";
        }
      });

  if (structured(opts)) {
    Json j;
    j["format"] = "octic-enumeration/1";
    j["descriptor_count"] = count;
    j["distinct_euler_count"] = static_cast<long long>(values.size());
    j["euler_values"] = values;
    if (eopts.list_entries) j["entries"] = std::move(entries);
    out << j.dump(2) << "\n";
  } else {
    if (eopts.list_entries) out << rows.str();
    out << "descriptors: " << count
        << ", distinct Euler numbers: " << values.size() << "\n";
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_input = true) {
  if (with_input) {
    cmd->add_option("--input", opts.input, "input document (JSON)");
    cmd->add_option("--fixture", opts.fixture, "named fixture");
  }
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}));
  cmd->add_flag("--trace", opts.trace, "verbose per-step state");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Euler numbers of double covers of projective 3-space branched over "
      "octic arrangements",
      "octic"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string examples_name;
  EnumerateOptions eopts;

  CLI::App* euler =
      app.add_subcommand("euler", "Euler number of a descriptor");
  add_common(euler, opts);
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "incidence structure of a plane list");
  add_common(analyze_cmd, opts);
  CLI::App* resolve =
      app.add_subcommand("resolve", "step-by-step resolution ledger");
  add_common(resolve, opts);
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a descriptor against the octic constraints");
  add_common(validate_cmd, opts);
  CLI::App* table = app.add_subcommand("table", "the 63-row Euler number table");
  add_common(table, opts, false);
  CLI::App* examples =
      app.add_subcommand("examples", "emit a named example plane list");
  examples->add_option("name", examples_name, "generator name");
  add_common(examples, opts, false);
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "all valid descriptors within bounds");
  add_common(enumerate_cmd, opts, false);
  enumerate_cmd->add_option("--degrees", eopts.degrees_csv,
                            "restrict to one degree multiset, e.g. 1,1,6");
  enumerate_cmd->add_option("--max-p4-0", eopts.bounds.p4_0, "bound for p4_0");
  enumerate_cmd->add_option("--max-p4-1", eopts.bounds.p4_1, "bound for p4_1");
  enumerate_cmd->add_option("--max-p5-0", eopts.bounds.p5_0, "bound for p5_0");
  enumerate_cmd->add_option("--max-p5-1", eopts.bounds.p5_1, "bound for p5_1");
  enumerate_cmd->add_option("--max-p5-2", eopts.bounds.p5_2, "bound for p5_2");
  enumerate_cmd->add_option("--max-l3", eopts.bounds.l3, "bound for l3");
  enumerate_cmd->add_flag("!--no-entries", eopts.list_entries,
                          "suppress the per-descriptor listing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (euler->parsed()) return cmd_euler(opts, out);
    if (analyze_cmd->parsed()) return cmd_analyze(opts, out);
    if (resolve->parsed()) return cmd_resolve(opts, out);
    if (validate_cmd->parsed()) return cmd_validate(opts, out);
    if (table->parsed()) return cmd_table(opts, out);
    if (examples->parsed()) return cmd_examples(examples_name, out, err);
    if (enumerate_cmd->parsed()) return cmd_enumerate(eopts, opts, out);
    err << "error: no command given\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ViolationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const LedgerError& e) {
    err << "error: " << e.what() << "\n";
    return kExitLedger;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace octic
