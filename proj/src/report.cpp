#include "phiver/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <regex>
#include <sstream>

namespace phiver::report {

using nlohmann::ordered_json;

std::string shortest(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

ordered_json outcome_json(const EvalOutcome& o)
{
    return {{"re", o.value.real()},
            {"im", o.value.imag()},
            {"abs_err_est", o.abs_err_est},
            {"flags", flags_to_string(o.flags)}};
}

ordered_json params_json(const reg::ParamSample& s)
{
    ordered_json p = ordered_json::object();
    for (const auto& [name, v] : s.values)
        p[name] = {{"re", v.value.real()}, {"im", v.value.imag()}};
    return p;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

ordered_json to_json(const reg::SuiteReport& r)
{
    ordered_json ids = ordered_json::array();
    for (const auto& x : r.identities) {
        ordered_json samples = ordered_json::array();
        for (const auto& s : x.samples) {
            ordered_json j = {{"params", params_json(s.params)},
                              {"lhs", outcome_json(s.lhs)},
                              {"rhs", outcome_json(s.rhs)},
                              {"abs_residual", s.abs_residual},
                              {"rel_residual", s.rel_residual},
                              {"tol", s.tol},
                              {"pass", s.pass}};
            if (s.skipped)
                j["skipped"] = true;
            if (!s.reason.empty())
                j["reason"] = s.reason;
            samples.push_back(std::move(j));
        }
        ordered_json j = {{"id", x.id},
                          {"anchor", x.anchor},
                          {"tags", std::vector<std::string>(x.tags.begin(), x.tags.end())},
                          {"status", reg::to_string(x.status)}};
        if (!x.reason.empty())
            j["reason"] = x.reason;
        j["samples"] = std::move(samples);
        j["wall_ms"] = x.wall_ms;
        ids.push_back(std::move(j));
    }
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"tolerance_policy", r.tolerance_policy},
            {"timestamp", r.timestamp},
            {"identities", std::move(ids)},
            {"summary",
             {{"total", r.summary.total},
              {"passed", r.summary.passed},
              {"failed", r.summary.failed},
              {"skipped", r.summary.skipped}}}};
}

std::string render_json(const reg::SuiteReport& r)
{
    return to_json(r).dump(2) + "\n";
}

std::string render_csv(const reg::SuiteReport& r)
{
    std::string out = "identity,sample_index,param_json,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,pass\n";
    for (const auto& x : r.identities) {
        for (const auto& s : x.samples) {
            out += x.id + ',' + std::to_string(s.params.index) + ',' + csv_quote(params_json(s.params).dump())
                   + ',' + shortest(s.lhs.value.real()) + ',' + shortest(s.lhs.value.imag()) + ','
                   + shortest(s.rhs.value.real()) + ',' + shortest(s.rhs.value.imag()) + ','
                   + shortest(s.abs_residual) + ',' + shortest(s.rel_residual) + ','
                   + (s.pass ? "true" : "false") + '\n';
        }
    }
    return out;
}

std::string render_text(const reg::SuiteReport& r)
{
    std::ostringstream os;
    os << "suite " << r.suite << "  seed " << r.seed << "  tol " << r.tolerance_policy << "  " << r.timestamp
       << "\n";
    for (const auto& x : r.identities) {
        std::size_t passed = std::count_if(x.samples.begin(), x.samples.end(),
                                           [](const reg::SampleResult& s) { return s.pass; });
        double worst = 0.0;
        for (const auto& s : x.samples)
            if (!s.skipped)
                worst = std::max(worst, s.rel_residual);
        char line[160];
        std::snprintf(line, sizeof line, "%-20s %-7s %3zu/%-3zu max rel %9.2e %10.1f ms", x.id.c_str(),
                      reg::to_string(x.status), passed, x.samples.size(), worst, x.wall_ms);
        os << line;
        if (!x.reason.empty())
            os << "  (" << x.reason << ")";
        os << "\n";
    }
    os << r.summary.total << " identities: " << r.summary.passed << " passed, " << r.summary.failed
       << " failed, " << r.summary.skipped << " skipped\n";
    return os.str();
}

std::string scrub_volatile(const std::string& json_text)
{
    static const std::regex ts(R"re("timestamp": "[^"]*")re");
    static const std::regex ms(R"re("wall_ms": [-+0-9.eE]+)re");
    std::string out = std::regex_replace(json_text, ts, R"("timestamp": "")");
    return std::regex_replace(out, ms, R"("wall_ms": 0)");
}

}  // namespace phiver::report
