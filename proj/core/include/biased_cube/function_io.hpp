#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "biased_cube/fourier.hpp"

namespace bcube {

// Text formats
//
//   n=<int> alpha=<decimal>
//   bool:<hex>           2^n bits, bit m set iff f(m) = +1, most significant
//                        hex digit first (highest indices)
//   real: v_0 v_1 ...    2^n values in ascending index order
//   spec: a_0 a_1 ...    2^n coefficients in bitmask order
//
// Values after `real:`/`spec:` may continue over any number of lines.

TableFunction readFunction(std::istream& in);
TableFunction readFunctionFile(const std::string& path);
void writeFunction(std::ostream& out, const TableFunction& f);

Spectrum readSpectrum(std::istream& in);
void writeSpectrum(std::ostream& out, const Spectrum& s);

/// One line of whitespace-separated decimals.
std::vector<double> readCoefficientLine(std::istream& in);

/// Shortest decimal that round-trips to the same double.
std::string formatDouble(double v);

}  // namespace bcube
