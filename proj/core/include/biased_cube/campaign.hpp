#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biased_cube/affine.hpp"
#include "biased_cube/random.hpp"

namespace bcube {

class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

enum class Check { Hyper, Fkn, Theorem3, HK, Scan, Example };
enum class Mode { Exhaustive, Random, Example };

struct CampaignConfig {
    Check check = Check::Fkn;
    Mode mode = Mode::Exhaustive;
    int n = 3;
    double alpha = 0.5;
    std::optional<double> q;   // verify-hyper: single q instead of the default grid
    double c0 = 0.01;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    double tol = 1e-10;
    ConstantPair constants = kDefaultConstants;
    std::string example = "counterexample";  // or "jow"
    double s = 2.0;                          // jow scale
    std::vector<double> coefficients;        // verify-hk: check this one sum
};

/// Throws ConfigError describing the first invalid field.
void validate(const CampaignConfig& config);

struct Report {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> notes;
    std::size_t violations = 0;
};

/// Runs one campaign. Rows come out in instance order regardless of the
/// worker count.
Report runCampaign(const CampaignConfig& config);

/// Header, rows, then `# key: value` summary lines and `# note` lines.
void writeCsv(std::ostream& out, const Report& report);
/// Human-readable summary (title, summary, notes; no rows).
void printSummary(std::ostream& out, const Report& report);

/// Boolean table whose truth-table id has bit m set iff f(m) = +1.
TableFunction booleanFromId(int n, std::uint64_t id, const Bias& bias);
TableFunction randomBoolean(int n, const Bias& bias, CounterRng& rng);
TableFunction randomBounded(int n, const Bias& bias, CounterRng& rng);

/// Default q grid used when verify-hyper gets no --q.
inline const std::vector<double> kDefaultQGrid{1.0, 1.2, 1.5, 1.8, 2.0};

}  // namespace bcube
