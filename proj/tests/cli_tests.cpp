// Drives the installed octic binary end to end: exit codes, output shape,
// determinism. Invoked as: octic_cli_tests <path-to-octic>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "expected_values.hpp"

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

std::string shell_quote(const std::string& s) {
  return "'" + s + "'";
}

RunResult run(const std::string& binary, const std::string& args) {
  std::string command = shell_quote(binary) + " " + args + " 2>/tmp/octic_cli_err.txt";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "failed to spawn: " << command << "\n";
    std::exit(70);
  }
  RunResult result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    result.output.append(buffer, n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& label) {
  if (ok) {
    std::cout << "ok: " << label << "\n";
  } else {
    ++failures;
    std::cout << "FAIL: " << label << "\n";
  }
}

void expect_exit(const RunResult& r, int code, const std::string& label) {
  if (r.exit_code != code) {
    ++failures;
    std::cout << "FAIL: " << label << " (exit " << r.exit_code << ", expected "
              << code << ")\n";
  } else {
    std::cout << "ok: " << label << "\n";
  }
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: octic_cli_tests <octic-binary>\n";
    return 64;
  }
  const std::string octic = argv[1];

  // euler on descriptor fixtures
  RunResult smooth = run(octic, "euler --fixture octic-smooth");
  expect_exit(smooth, 0, "euler octic-smooth exits 0");
  expect(contains(smooth.output, "-296"), "euler octic-smooth prints -296");
  expect(contains(smooth.output, "validation: ok"),
         "euler octic-smooth reports validation");

  // euler on a plane fixture goes through the incidence engine
  RunResult generic = run(octic, "euler --fixture planes-8-generic");
  expect_exit(generic, 0, "euler planes-8-generic exits 0");
  expect(contains(generic.output, "e(Y) = 40"),
         "euler planes-8-generic prints 40");

  // euler on an elliptic descriptor fixture routes to the classification
  RunResult elliptic = run(octic, "euler --fixture elliptic-E1");
  expect_exit(elliptic, 0, "euler elliptic-E1 exits 0");
  expect(contains(elliptic.output, "-16"), "euler elliptic-E1 prints -16");

  RunResult structured_euler =
      run(octic, "euler --fixture table-53 --format structured");
  expect_exit(structured_euler, 0, "structured euler exits 0");
  expect(contains(structured_euler.output, "\"value\": 80"),
         "structured euler carries the value");
  expect(contains(structured_euler.output, "octic-descriptor/1"),
         "structured euler embeds the descriptor");

  // malformed file: exit 2, no partial output
  write_file("/tmp/octic_bad.json", "this is { not json");
  RunResult malformed = run(octic, "euler --input /tmp/octic_bad.json");
  expect_exit(malformed, 2, "malformed file exits 2");
  expect(malformed.output.empty(), "malformed file produces no stdout");

  // analyze: the engineered cube fixture
  RunResult cube6 = run(octic, "analyze --fixture cube+2@6");
  expect_exit(cube6, 0, "analyze cube+2@6 exits 0");
  expect(contains(cube6.output, "p4_0=9"), "analyze cube+2@6 finds p4_0=9");
  expect(contains(cube6.output, "e(Y) = 76"), "analyze cube+2@6 prints 76");

  RunResult pencil = run(octic, "analyze --fixture pencil-chain");
  expect_exit(pencil, 0, "analyze pencil-chain exits 0");
  expect(contains(pencil.output, "p4_1=7"), "pencil-chain p4_1=7");
  expect(contains(pencil.output, "p5_2=2"), "pencil-chain p5_2=2");
  expect(contains(pencil.output, "l3=3"), "pencil-chain l3=3");
  expect(contains(pencil.output, "e(Y) = 104"), "pencil-chain prints 104");

  // analyze: duplicate planes exit 3
  write_file("/tmp/octic_dup.json",
             "{\"format\":\"octic-planes/1\",\"planes\":[[1,0,0,-1],[2,0,0,-2],"
             "[0,1,0,0]]}");
  RunResult dup = run(octic, "analyze --input /tmp/octic_dup.json");
  expect_exit(dup, 3, "duplicate planes exit 3");

  // analyze: non-octic degree sum exits 3
  write_file("/tmp/octic_four.json",
             "{\"format\":\"octic-planes/1\",\"planes\":[[1,0,0,0],[0,1,0,0],"
             "[0,0,1,0],[1,1,1,0]]}");
  RunResult four = run(octic, "analyze --input /tmp/octic_four.json");
  expect_exit(four, 3, "four planes through a point exit 3");

  // analyze: violations exit 4 and suppress the Euler number
  write_file("/tmp/octic_violation.json",
             "{\"format\":\"octic-planes/1\",\"planes\":[[1,0,0,0],[0,1,0,0],"
             "[1,1,0,0],[1,2,0,0],[0,0,1,0],[0,0,1,1],[0,0,1,2],[0,0,1,3]]}");
  RunResult violated = run(octic, "analyze --input /tmp/octic_violation.json");
  expect_exit(violated, 4, "q>=4 violation exits 4");
  expect(!contains(violated.output, "e(Y)"), "violation suppresses e(Y)");

  // resolve: ledger agrees with the formula
  RunResult resolve = run(octic, "resolve --fixture planes-8-generic");
  expect_exit(resolve, 0, "resolve planes-8-generic exits 0");
  expect(contains(resolve.output, "e(Y) = 40"), "resolve terminal value 40");
  expect(contains(resolve.output, "steps: 28"), "resolve runs 28 steps");
  expect(contains(resolve.output, "agrees"), "resolve agrees with formula");

  RunResult resolve_smooth = run(octic, "resolve --fixture octic-smooth");
  expect_exit(resolve_smooth, 0, "resolve octic-smooth exits 0");
  expect(contains(resolve_smooth.output, "steps: 0"),
         "smooth octic has an empty trace");
  expect(contains(resolve_smooth.output, "e(Y) = -296"),
         "smooth octic resolves to -296");

  RunResult resolve_octa = run(octic, "resolve --fixture octahedron");
  expect_exit(resolve_octa, 0, "resolve octahedron exits 0");
  expect(contains(resolve_octa.output, "e(Y) = 88"), "octahedron resolves to 88");

  RunResult traced = run(octic, "resolve --fixture octahedron --trace");
  expect_exit(traced, 0, "resolve --trace exits 0");
  expect(contains(traced.output, "e(V)="), "--trace shows the full state");

  // validate
  write_file("/tmp/octic_bad_desc.json",
             "{\"format\":\"octic-descriptor/1\",\"degrees\":[1,1,1,1,1,1,1,1],"
             "\"l3\":1}");
  RunResult invalid = run(octic, "validate --input /tmp/octic_bad_desc.json");
  expect_exit(invalid, 3, "descriptor breaking the line relation exits 3");
  expect(contains(invalid.output, "triple-line-relation"),
         "validate names the violated constraint");

  RunResult valid = run(octic, "validate --fixture table-53");
  expect_exit(valid, 0, "table-53 validates");

  // table
  RunResult table = run(octic, "table");
  expect_exit(table, 0, "table exits 0");
  expect(contains(table.output, "-296"), "table contains -296");
  expect(contains(table.output, "136"), "table contains 136");
  expect(contains(table.output, "63"), "table prints the last row number");

  // examples
  RunResult example = run(octic, "examples octahedron");
  expect_exit(example, 0, "examples octahedron exits 0");
  expect(contains(example.output, "octic-planes/1"),
         "examples emits a plane-list document");
  RunResult unknown = run(octic, "examples no-such-thing");
  expect_exit(unknown, 2, "unknown example exits 2");

  // round trip: examples output feeds analyze, for every shipped generator
  for (const auto& fixture : octic::testing::plane_fixture_expectations()) {
    RunResult emitted = run(octic, "examples " + fixture.name);
    if (emitted.exit_code != 0) {
      expect(false, "examples " + fixture.name + " exits 0");
      continue;
    }
    write_file("/tmp/octic_example.json", emitted.output);
    RunResult round = run(octic, "analyze --input /tmp/octic_example.json");
    expect(round.exit_code == 0 &&
               contains(round.output,
                        "e(Y) = " + std::to_string(fixture.euler)),
           "examples|analyze round trip reproduces " +
               std::to_string(fixture.euler) + " for " + fixture.name);
  }

  // resolve needs curve data once a descriptor carries strata
  RunResult strata = run(octic, "resolve --fixture table-53");
  expect_exit(strata, 3, "resolve on a strata-rich descriptor exits 3");
  RunResult elliptic_resolve = run(octic, "resolve --fixture elliptic-E2");
  expect_exit(elliptic_resolve, 3, "resolve on an elliptic descriptor exits 3");

  // enumerate
  RunResult enumerate = run(
      octic, "enumerate --degrees 1,1,1,1,1,1,1,1 --max-p4-0 12 --no-entries");
  expect_exit(enumerate, 0, "enumerate exits 0");
  expect(contains(enumerate.output, "descriptors: 13"),
         "enumerate finds 13 descriptors");

  // structured output determinism
  RunResult once = run(octic, "table --format structured");
  RunResult twice = run(octic, "table --format structured");
  expect(once.exit_code == 0 && once.output == twice.output,
         "structured table output is byte-identical across runs");

  RunResult trace_once = run(octic, "resolve --fixture four-pencils --format structured");
  RunResult trace_twice = run(octic, "resolve --fixture four-pencils --format structured");
  expect(trace_once.exit_code == 0 && trace_once.output == trace_twice.output,
         "structured resolve output is byte-identical across runs");

  std::cout << (failures ? "FAILURES: " : "all cli checks passed: ")
            << (failures ? std::to_string(failures) : "") << "\n";
  return failures ? 1 : 0;
}
