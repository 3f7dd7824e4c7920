#pragma once

// Text formats. Doubles are written with 17 significant digits so files
// round-trip exactly.
//
//   QHAL-OP v1 L=<int>      then L^2 lines "<re> <im>", row-major
//   QHAL-SIG v1 L=<int>     then L lines "<re> <im>"
//   QHAL-PF v1 L=<int>      then L^2 lines "<m> <n> <re> <im>"
//   QHAL-QF v1 L=<int>      then a LATTICE v1 record for Lambda°, then "<m> <n> <re> <im>" per coset
//   QHAL-SEQ v1             then a LATTICE v1 record, then "<m> <n> <re> <im>" per lattice point

#include <string>

#include "qhal/functions.hpp"
#include "qhal/operators.hpp"

namespace qhal {

std::string format_double(double x);

std::string operator_to_text(const FiniteOperator& S);
FiniteOperator operator_from_text(const std::string& text);

std::string signal_to_text(const Signal& psi);
Signal signal_from_text(const std::string& text);

std::string phase_function_to_text(const PhaseFunction& f);
PhaseFunction phase_function_from_text(const std::string& text);

std::string quotient_function_to_text(const QuotientFunction& f);
QuotientFunction quotient_function_from_text(const std::string& text);

std::string sequence_to_text(const LatticeSequence& c);
LatticeSequence sequence_from_text(const std::string& text);

/// Throws IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qhal
