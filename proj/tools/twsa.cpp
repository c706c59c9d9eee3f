#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twsa/constructions.hpp"
#include "twsa/equivalence.hpp"
#include "twsa/explore.hpp"
#include "twsa/io.hpp"
#include "twsa/numbers.hpp"
#include "twsa/oracles.hpp"

using namespace twsa;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Machine loadMachine(const std::string& spec) {
  if (spec.starts_with("builtin:")) return constructions::builtin(spec.substr(8));
  return io::parseMachine(readFile(spec));
}

std::optional<std::size_t> budget(std::int64_t maxSteps) {
  if (maxSteps < 0) return std::nullopt;
  return static_cast<std::size_t>(maxSteps);
}

void printVerdict(const RunOutcome& r) {
  std::cout << toString(r.verdict) << " steps=" << r.stepsTaken;
  if (r.verdict == Verdict::WellFormednessViolation) std::cout << " " << r.violation;
  std::cout << "\n";
}

int exitCode(const RunOutcome& r) {
  switch (r.verdict) {
    case Verdict::Accepted: return kAccept;
    case Verdict::Rejected: return kReject;
    default: return kError;
  }
}

std::vector<Symbol> parseSymbols(const Alphabet& alphabet, const std::string& list) {
  std::vector<Symbol> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    std::istringstream words(item);
    std::string w;
    while (words >> w) out.push_back(alphabet.at(w));
  }
  return out;
}

std::string describeBound(const ClassBound& b) {
  std::ostringstream os;
  if (b.exactExponent) {
    os << "2^" << b.exactExponent->str() << "\n";
  } else {
    os << "2^" << b.exponent.str(15) << "\n";
  }
  os << b.value.str() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator and analysis tool for deterministic tree-walking-storage automata"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string machineSpec, word, oracleName, samplePath, extend;
  std::int64_t maxSteps = -1;
  std::size_t maxLen = 0;
  unsigned ell = 1;
  std::uint64_t states = 1, treeSymbols = 1;
  bool snapshots = false;

  auto* validateCmd = app.add_subcommand("validate", "Check a machine file; exit 0 iff it is valid");
  validateCmd->add_option("machine", machineSpec, "machine file or builtin:NAME")->required();

  auto* runCmd = app.add_subcommand("run", "Run a machine on a word");
  runCmd->add_option("machine", machineSpec, "machine file or builtin:NAME")->required();
  runCmd->add_option("word", word, "input word (λ or empty for the empty word)");
  runCmd->add_option("--max-steps", maxSteps, "step budget (required for machines that are not real-time)");

  auto* traceCmd = app.add_subcommand("trace", "Print one line per step");
  traceCmd->add_option("machine", machineSpec, "machine file or builtin:NAME")->required();
  traceCmd->add_option("--word", word, "input word");
  traceCmd->add_flag("--snapshots", snapshots, "append the tree after every step");
  traceCmd->add_option("--max-steps", maxSteps, "step budget");

  auto* enumCmd = app.add_subcommand("enum", "List accepted words up to a length");
  enumCmd->add_option("machine", machineSpec, "machine file or builtin:NAME")->required();
  enumCmd->add_option("--max-len", maxLen, "maximal word length")->required();
  enumCmd->add_option("--max-steps", maxSteps, "step budget");

  auto* checkCmd = app.add_subcommand("check", "Compare a machine with a language oracle");
  checkCmd->add_option("machine", machineSpec, "machine file or builtin:NAME")->required();
  checkCmd->add_option("--oracle", oracleName, "oracle name")->required();
  checkCmd->add_option("--max-len", maxLen, "maximal word length")->required();
  checkCmd->add_option("--max-steps", maxSteps, "step budget");

  auto* classesCmd = app.add_subcommand("classes", "Partition sample words into ell-equivalence classes");
  classesCmd->add_option("--oracle", oracleName, "oracle name")->required();
  classesCmd->add_option("--sample", samplePath, "file with one word per line")->required();
  classesCmd->add_option("--ell", ell, "extension length")->required();
  classesCmd->add_option("--extend", extend, "extension symbols, comma separated (default: whole alphabet)");

  auto* boundCmd = app.add_subcommand("bound", "Upper bound on ell-equivalence classes of a real-time machine");
  boundCmd->add_option("--states", states, "number of states")->required();
  boundCmd->add_option("--tree-symbols", treeSymbols, "number of tree symbols")->required();
  boundCmd->add_option("--ell", ell, "extension length")->required();

  auto* exportCmd = app.add_subcommand("export", "Print a machine in file format");
  exportCmd->add_option("machine", machineSpec, "machine file or builtin:NAME")->required();

  auto* sampleCmd = app.add_subcommand("lh-sample", "Print the w_P sample words for L_h");
  sampleCmd->add_option("--ell", ell, "1 or 2")->required();

  app.add_subcommand("list", "List builtin machines and oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (validateCmd->parsed()) {
      std::vector<io::Diagnostic> diags;
      if (machineSpec.starts_with("builtin:")) {
        loadMachine(machineSpec);
      } else {
        diags = io::checkMachineFile(readFile(machineSpec));
      }
      if (diags.empty()) {
        std::cout << "OK\n";
        return 0;
      }
      for (const auto& d : diags) std::cout << d.str() << "\n";
      return kReject;
    }

    if (runCmd->parsed() || traceCmd->parsed()) {
      const Machine m = loadMachine(machineSpec);
      RunOptions opts;
      opts.budget = budget(maxSteps);
      opts.traced = traceCmd->parsed();
      opts.snapshots = snapshots;
      const RunOutcome r = run(m, io::parseWord(m.inputAlphabet(), word), opts);
      for (const auto& rec : r.trace) std::cout << io::formatStep(m, rec) << "\n";
      printVerdict(r);
      return exitCode(r);
    }

    if (enumCmd->parsed()) {
      const Machine m = loadMachine(machineSpec);
      ExploreOptions opts;
      opts.stepBudget = budget(maxSteps);
      for (const Word& w : enumerateAccepted(m, maxLen, opts)) std::cout << io::formatWord(m.inputAlphabet(), w) << "\n";
      return 0;
    }

    if (checkCmd->parsed()) {
      const Machine m = loadMachine(machineSpec);
      ExploreOptions opts;
      opts.stepBudget = budget(maxSteps);
      const auto report = crossCheck(m, oracles::byName(oracleName), maxLen, opts);
      if (report.ok()) {
        std::cout << "OK\n";
        return 0;
      }
      for (const auto& mm : report.mismatches) {
        std::cout << io::formatWord(m.inputAlphabet(), mm.word) << " machine=" << (mm.machine ? "accept" : "reject")
                  << " oracle=" << (mm.oracle ? "member" : "non-member") << "\n";
      }
      if (report.mismatchCount > report.mismatches.size()) {
        std::cout << "... " << report.mismatchCount << " mismatches in total\n";
      }
      if (report.realTimeViolations > 0) {
        std::cout << report.realTimeViolations << " configurations with a λ move in a real-time run\n";
      }
      return kReject;
    }

    if (classesCmd->parsed()) {
      const LanguageOracle oracle = oracles::byName(oracleName);
      std::vector<Word> sample;
      std::istringstream in(readFile(samplePath));
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        sample.push_back(io::parseWord(oracle.alphabet, line));
      }
      std::vector<Symbol> ext;
      if (extend.empty()) {
        for (Symbol s = 0; s < oracle.alphabet.size(); ++s) ext.push_back(s);
      } else {
        ext = parseSymbols(oracle.alphabet, extend);
      }
      const auto partition = countClasses(oracle, sample, ell, ext);
      std::cout << partition.count() << "\n";
      for (const auto& cls : partition.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          std::cout << (i ? " | " : "") << io::formatWord(oracle.alphabet, cls[i]);
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (boundCmd->parsed()) {
      std::cout << describeBound(classUpperBound(states, treeSymbols, ell));
      return 0;
    }

    if (exportCmd->parsed()) {
      std::cout << io::exportMachine(loadMachine(machineSpec));
      return 0;
    }

    if (sampleCmd->parsed()) {
      const Alphabet sigma = oracles::lh().alphabet;
      for (const Word& w : lhSample(ell)) std::cout << io::formatWord(sigma, w) << "\n";
      return 0;
    }

    std::cout << "machines:";
    for (const auto& n : constructions::builtinNames()) std::cout << " builtin:" << n;
    std::cout << "\noracles:";
    for (const auto& n : oracles::names()) std::cout << " " << n;
    std::cout << "\n";
    return 0;
  } catch (const io::MachineFileError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << d.str() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
