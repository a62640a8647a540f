#pragma once

#include <iosfwd>
#include <string>

#include "sftlab/acoe.hpp"

namespace sft {

// Matrix text format: first line N, then N lines of N space-separated bits.
TransitionMatrix parse_matrix(std::istream& in);
TransitionMatrix load_matrix(const std::string& path);

// Table format: first line the window radius, then one line
// "s_1 ... s_{2k+1} -> value" per admissible word.
LocallyConstantFn parse_table(std::istream& in, const TransitionMatrix& A);
LocallyConstantFn load_table(const std::string& path, const TransitionMatrix& A);

// Bundle file: matrices, directions, map chains with rule tables, cocycle
// tables, and the family descriptor.  Relative paths resolve against the
// bundle file's directory.
struct LoadedBundle {
    AcoeBundle bundle;
    FamilyDescriptor family;
};
LoadedBundle load_bundle(const std::string& path);
LoadedBundle parse_bundle(std::istream& in, const std::string& base_dir);

std::string render_report_text(const VerificationReport& rep);
std::string render_report_json(const VerificationReport& rep);

}  // namespace sft
