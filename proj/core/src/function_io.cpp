#include "biased_cube/function_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "biased_cube/errors.hpp"

namespace bcube {

namespace {

double parseDouble(std::string_view token) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw FormatError("not a decimal number: '" + std::string(token) + "'");
    return v;
}

struct Header {
    int n = 0;
    Bias bias;
};

Header readHeader(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing header line");
    std::istringstream ss(line);
    std::string nField, alphaField;
    ss >> nField >> alphaField;
    if (nField.rfind("n=", 0) != 0 || alphaField.rfind("alpha=", 0) != 0)
        throw FormatError("header must read 'n=<int> alpha=<decimal>'");
    Header h;
    const auto nText = std::string_view(nField).substr(2);
    const auto [ptr, ec] = std::from_chars(nText.data(), nText.data() + nText.size(), h.n);
    if (ec != std::errc{} || ptr != nText.data() + nText.size())
        throw FormatError("bad n in header");
    if (h.n < 1 || h.n > kMaxCoordinates) throw FormatError("n out of range in header");
    h.bias = makeBias(parseDouble(std::string_view(alphaField).substr(6)));
    return h;
}

std::vector<double> readValues(std::istream& in, std::string_view firstChunk, std::size_t count) {
    std::vector<double> values;
    values.reserve(count);
    auto consume = [&](std::istream& src) {
        std::string token;
        while (src >> token) {
            if (values.size() == count) throw FormatError("too many values");
            values.push_back(parseDouble(token));
        }
    };
    std::istringstream head{std::string(firstChunk)};
    consume(head);
    consume(in);
    if (values.size() != count)
        throw FormatError("expected " + std::to_string(count) + " values, got " +
                          std::to_string(values.size()));
    return values;
}

int hexNibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError(std::string("bad hex digit '") + c + "'");
}

std::vector<double> readBoolHex(std::string_view hex, int n) {
    const std::size_t count = std::size_t{1} << n;
    const std::size_t digits = (count + 3) / 4;
    while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.remove_suffix(1);
    if (hex.size() != digits)
        throw FormatError("bool table for n=" + std::to_string(n) + " needs " +
                          std::to_string(digits) + " hex digits");
    std::vector<double> values(count);
    for (std::size_t m = 0; m < count; ++m) {
        const int nibble = hexNibble(hex[digits - 1 - m / 4]);
        values[m] = (nibble >> (m % 4) & 1) ? 1.0 : -1.0;
    }
    // n = 1 uses two bits of a single digit; the rest must be clear.
    if (count < 4 && hexNibble(hex[0]) >> count != 0)
        throw FormatError("bool table has bits beyond 2^n");
    return values;
}

std::string writeHeader(int n, const Bias& bias) {
    return "n=" + std::to_string(n) + " alpha=" + formatDouble(bias.alpha);
}

}  // namespace

std::string formatDouble(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

TableFunction readFunction(std::istream& in) {
    const auto header = readHeader(in);
    std::string body;
    if (!(in >> std::ws) || !std::getline(in, body)) throw FormatError("missing value line");
    const std::size_t count = std::size_t{1} << header.n;
    if (body.rfind("bool:", 0) == 0)
        return TableFunction(header.n, readBoolHex(std::string_view(body).substr(5), header.n),
                             header.bias);
    if (body.rfind("real:", 0) == 0)
        return TableFunction(header.n, readValues(in, std::string_view(body).substr(5), count),
                             header.bias);
    throw FormatError("value line must start with 'bool:' or 'real:'");
}

TableFunction readFunctionFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return readFunction(in);
}

void writeFunction(std::ostream& out, const TableFunction& f) {
    out << writeHeader(f.n(), f.bias()) << '\n';
    if (f.isBoolean()) {
        const std::size_t digits = (f.size() + 3) / 4;
        std::string hex(digits, '0');
        for (std::size_t d = 0; d < digits; ++d) {
            int nibble = 0;
            for (std::size_t b = 0; b < 4; ++b) {
                const std::size_t m = 4 * d + b;
                if (m < f.size() && f[m] > 0) nibble |= 1 << b;
            }
            hex[digits - 1 - d] = "0123456789abcdef"[nibble];
        }
        out << "bool:" << hex << '\n';
        return;
    }
    out << "real:";
    for (double v : f.values()) out << ' ' << formatDouble(v);
    out << '\n';
}

Spectrum readSpectrum(std::istream& in) {
    const auto header = readHeader(in);
    std::string body;
    if (!(in >> std::ws) || !std::getline(in, body)) throw FormatError("missing coefficient line");
    if (body.rfind("spec:", 0) != 0) throw FormatError("coefficient line must start with 'spec:'");
    return Spectrum(header.n,
                    readValues(in, std::string_view(body).substr(5), std::size_t{1} << header.n),
                    header.bias);
}

void writeSpectrum(std::ostream& out, const Spectrum& s) {
    out << writeHeader(s.n(), s.bias()) << '\n' << "spec:";
    for (double c : s.coeffs()) out << ' ' << formatDouble(c);
    out << '\n';
}

std::vector<double> readCoefficientLine(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    std::istringstream ss(line);
    std::vector<double> out;
    std::string token;
    while (ss >> token) out.push_back(parseDouble(token));
    if (out.empty()) throw FormatError("empty coefficient line");
    return out;
}

}  // namespace bcube
