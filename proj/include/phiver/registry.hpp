#pragma once

#include "phiver/numkernel.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace phiver::reg {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sampler starvation or an inconsistent domain.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParamValue {
    CValue value{};
    bool integer = false;
};

struct ParamSample {
    std::map<std::string, ParamValue> values;
    std::uint64_t seed = 0;
    std::size_t index = 0;

    CValue c(const std::string& name) const;
    double r(const std::string& name) const;
    long n(const std::string& name) const;
};

struct ParamBox {
    enum class Kind { REAL, COMPLEX, INTEGER };

    std::string name;
    Kind kind = Kind::REAL;
    double re_lo = 0.0, re_hi = 0.0;
    double im_lo = 0.0, im_hi = 0.0;

    static ParamBox real(std::string name, double lo, double hi);
    static ParamBox complex(std::string name, double re_lo, double re_hi, double im_lo, double im_hi);
    static ParamBox integer(std::string name, long lo, long hi);
};

struct Constraint {
    std::string text;
    std::function<bool(const ParamSample&)> holds;
};

struct ParamDomain {
    std::vector<ParamBox> boxes;
    std::vector<Constraint> constraints;
    // Fixed parameter sets; when present the sampler returns exactly these.
    std::vector<std::map<std::string, ParamValue>> enumerated;

    bool contains(const ParamSample& s) const;
    std::string summary() const;
};

using Evaluator = std::function<EvalOutcome(const ParamSample&)>;

struct Identity {
    std::string id;
    std::string anchor;
    Evaluator lhs;
    Evaluator rhs;
    ParamDomain domain;
    double tol = 1e-9;
    std::set<std::string> tags;
    bool default_skip = false;
    std::string skip_reason;
    // Replaces the floating-point comparison when set (exact rational identities).
    std::function<bool(const ParamSample&)> exact_check;
    std::function<double(const ParamSample&)> sample_tol;
};

const std::vector<Identity>& catalog();
const Identity* find(const std::string& id);

std::vector<ParamSample> sample_params(const Identity& identity, std::uint64_t seed, std::size_t count);

enum class Status { PASS, FAIL, SKIPPED };
const char* to_string(Status s);

struct SampleResult {
    ParamSample params;
    EvalOutcome lhs;
    EvalOutcome rhs;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string reason;
};

struct IdentityReport {
    std::string id;
    std::string anchor;
    std::set<std::string> tags;
    Status status = Status::SKIPPED;
    std::string reason;
    std::vector<SampleResult> samples;
    double wall_ms = 0.0;
};

IdentityReport verify(const Identity& identity, const std::vector<ParamSample>& samples,
                      std::optional<double> tol_override = std::nullopt);

struct SuiteFilter {
    std::vector<std::string> ids;
    std::vector<std::string> tags;
    bool include_skipped = false;
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 10;
    std::optional<double> tol_override;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SuiteSummary {
    std::size_t total = 0, passed = 0, failed = 0, skipped = 0;
};

struct SuiteReport {
    std::string suite = "phiver";
    std::uint64_t seed = 42;
    std::string tolerance_policy;
    std::string timestamp;
    std::vector<IdentityReport> identities;
    SuiteSummary summary;
};

SuiteReport verify_suite(const SuiteFilter& filter, const SuiteOptions& opts = {});

}  // namespace phiver::reg
