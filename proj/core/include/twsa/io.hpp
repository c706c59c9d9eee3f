#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twsa/simulator.hpp"

namespace twsa::io {

/// One problem found in a machine file. `kind` is SyntaxError,
/// PatternConflict or a ViolationKind name; line 0 means the file as a whole.
struct Diagnostic {
  int line = 0;
  std::string kind;
  std::string message;

  std::string str() const;  // "line 3: PatternConflict: ..."
};

class MachineFileError : public Error {
 public:
  explicit MachineFileError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Every diagnostic for a machine file; empty means it parses to a valid
/// machine. Syntax errors stop at the first one.
std::vector<Diagnostic> checkMachineFile(std::string_view text);

/// Parses a machine file. Throws MachineFileError.
///
///   # comment
///   states: q0 q1 ...            (optional; other names are then unknown)
///   alphabet: a b $ ...
///   tree-symbols: o ...
///   start: q0
///   accept: q1 ...
///   realtime: true|false
///   nonerasing: true|false
///   initial-tree: (ROOT (o . .) .)   (optional)
///   initial-pointer: l               (optional, λ for the root)
///   trans <q> <in> (<anc>,<hl>,<hr>) <label> -> <q'> <action>
///
/// <in> is a symbol, lambda or END; <anc> is one of - l r *; <hl>, <hr> are
/// one of - + *; <label> is a tree symbol, ROOT or *; <action> is up, stay,
/// down-l, down-r, pop or push <sym> l|r. More concrete patterns override
/// wildcards where they overlap.
Machine parseMachine(std::string_view text);

/// Machine file for `machine`, with transitions grouped back into wildcard
/// patterns where possible. parseMachine(exportMachine(m)) describes the
/// same machine.
std::string exportMachine(const Machine& machine);

/// "λ" for the empty word; symbols concatenated when every name is one
/// character long, space separated otherwise.
std::string formatWord(const Alphabet& alphabet, WordView word);

/// Inverse of formatWord. Without spaces, names are matched greedily
/// (longest first). Throws Error on unknown symbols.
Word parseWord(const Alphabet& alphabet, std::string_view text);

/// step=<i> state=<q> in=<a|λ|END> act=<action> ptr=<path> nodes=<n>, with the
/// snapshot appended when the record has one. Steps are numbered from 0.
std::string formatStep(const Machine& machine, const StepRecord& record);

}  // namespace twsa::io
