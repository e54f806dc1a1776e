#ifndef AFREG_IO_HPP
#define AFREG_IO_HPP

#include <string>

#include "afreg/af_spec.hpp"

namespace afreg {

/// AFS text format (line oriented, '#' starts a comment):
///   alphabet:  whitespace-separated symbol names
///   arguments: one regex
///   attack:    one attack expression
/// Each key exactly once; unknown keys rejected. ParseError carries the
/// line number.
AfSpec parse_afs(const std::string& text);
AfSpec load_afs(const std::string& path);

/// The inverse of parse_afs up to whitespace.
std::string render_afs(const AfSpec& spec);

/// APX format: lines `arg(name).` and `att(a,b).`, whitespace
/// insensitive; attacks may only reference declared arguments; any
/// other non-empty line is rejected with its line number.
FiniteAf parse_apx(const std::string& text);
FiniteAf load_apx(const std::string& path);

/// Combination manifest (line oriented, '#' comments):
///   part:   NAME FILE.afs
///   finite: FILE.apx
///   cross:  FROM -> TO : u v        (one attacking pair per line)
/// FROM/TO are part names, or the word `finite` for the finite part.
/// Relative file names resolve against the manifest's directory.
AfSpec load_manifest(const std::string& path);

}  // namespace afreg

#endif
