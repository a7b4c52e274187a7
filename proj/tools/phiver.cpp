#include "phiver/gammakit.hpp"
#include "phiver/lerchkit.hpp"
#include "phiver/registry.hpp"
#include "phiver/report.hpp"
#include "phiver/zetakit.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace phiver;

class ArgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<CValue> c;
    std::vector<long> n;
};

struct Result {
    EvalOutcome out;
    std::string exact_text;
};

struct Export {
    std::string signature;  // one letter per argument: c complex, n integer
    std::function<Result(const Args&)> fn;
};

double parse_real(const std::string& s)
{
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size())
        throw ArgError("bad number '" + s + "'");
    return v;
}

CValue parse_complex(const std::string& tok)
{
    try {
        auto comma = tok.find(',');
        if (comma == std::string::npos)
            return {parse_real(tok), 0.0};
        return {parse_real(tok.substr(0, comma)), parse_real(tok.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw ArgError("cannot parse complex argument '" + tok + "' (expected re or re,im)");
    }
}

long parse_integer(const std::string& tok)
{
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used == tok.size())
            return v;
    } catch (const std::logic_error&) {
    }
    throw ArgError("expected an integer argument, got '" + tok + "'");
}

Result plain(EvalOutcome o)
{
    return {o, {}};
}

Result rational(const zeta::Rational& q)
{
    return {exact(q.convert_to<double>()), q.str()};
}

const std::map<std::string, Export>& exports()
{
    using lerch::LerchPoint;
    static const std::map<std::string, Export> table = {
        {"clog", {"c", [](const Args& a) { return plain(exact(num::clog(a.c[0]))); }}},
        {"cpow", {"cc", [](const Args& a) { return plain(exact(num::cpow(a.c[0], a.c[1]))); }}},
        {"gamma", {"c", [](const Args& a) { return plain(gam::gamma(a.c[0])); }}},
        {"loggamma", {"c", [](const Args& a) { return plain(gam::loggamma(a.c[0])); }}},
        {"digamma", {"c", [](const Args& a) { return plain(gam::digamma(a.c[0])); }}},
        {"pochhammer", {"cn", [](const Args& a) {
             if (a.n[0] < 0)
                 throw DomainError("pochhammer: n must be >= 0");
             return plain(exact(gam::pochhammer(a.c[0], static_cast<unsigned>(a.n[0]))));
         }}},
        {"lower_gamma", {"cc", [](const Args& a) { return plain(gam::lower_gamma(a.c[0], a.c[1])); }}},
        {"upper_gamma", {"cc", [](const Args& a) { return plain(gam::upper_gamma(a.c[0], a.c[1])); }}},
        {"upper_gamma_scaled", {"cc", [](const Args& a) { return plain(gam::upper_gamma_scaled(a.c[0], a.c[1])); }}},
        {"upper_gamma_continued", {"ccn", [](const Args& a) {
             return plain(gam::upper_gamma_continued(a.c[0], a.c[1], {a.n[0]}));
         }}},
        {"upper_gamma_a_deriv", {"cc", [](const Args& a) { return plain(gam::upper_gamma_a_deriv(a.c[0], a.c[1])); }}},
        {"expint_en", {"nc", [](const Args& a) { return plain(gam::expint_en(static_cast<int>(a.n[0]), a.c[0])); }}},
        {"inc_beta", {"ccc", [](const Args& a) { return plain(gam::inc_beta(a.c[0], a.c[1], a.c[2])); }}},
        {"bernoulli_number", {"n", [](const Args& a) {
             if (a.n[0] < 0 || a.n[0] > zeta::kMaxBernoulli)
                 throw DomainError("bernoulli_number: n out of range");
             return rational(zeta::bernoulli_number(static_cast<int>(a.n[0])));
         }}},
        {"bernoulli_poly", {"nc", [](const Args& a) {
             return plain(exact(zeta::bernoulli_poly(static_cast<int>(a.n[0]), a.c[0])));
         }}},
        {"euler_number", {"n", [](const Args& a) {
             if (a.n[0] < 0 || a.n[0] > zeta::kMaxEuler)
                 throw DomainError("euler_number: n out of range");
             return rational(zeta::Rational(zeta::euler_number(static_cast<int>(a.n[0]))));
         }}},
        {"hurwitz_zeta", {"cc", [](const Args& a) { return plain(zeta::hurwitz_zeta(a.c[0], a.c[1])); }}},
        {"hurwitz_zeta_sderiv", {"ncc", [](const Args& a) {
             return plain(zeta::hurwitz_zeta_sderiv(static_cast<int>(a.n[0]), a.c[0], a.c[1]));
         }}},
        {"stieltjes", {"nc", [](const Args& a) { return plain(zeta::stieltjes(static_cast<int>(a.n[0]), a.c[0])); }}},
        {"lerch_phi", {"ccc", [](const Args& a) { return plain(lerch::lerch_phi({a.c[0], a.c[1], a.c[2]})); }}},
        {"lerch_phi_sderiv", {"nccc", [](const Args& a) {
             return plain(lerch::lerch_phi_sderiv(static_cast<int>(a.n[0]), {a.c[0], a.c[1], a.c[2]}));
         }}},
        {"lerch_phi_zderiv", {"nccc", [](const Args& a) {
             return plain(lerch::lerch_phi_zderiv(static_cast<int>(a.n[0]), {a.c[0], a.c[1], a.c[2]}));
         }}},
        {"polylog", {"cc", [](const Args& a) { return plain(lerch::polylog(a.c[0], a.c[1])); }}},
        {"polylog_sderiv", {"cc", [](const Args& a) { return plain(lerch::polylog_sderiv(a.c[0], a.c[1])); }}},
        {"legendre_chi", {"cc", [](const Args& a) { return plain(lerch::legendre_chi(a.c[0], a.c[1])); }}},
        {"ti_inverse_tangent_integral", {"cc", [](const Args& a) {
             return plain(lerch::ti_inverse_tangent_integral(a.c[0], a.c[1]));
         }}},
        {"funeq_residual", {"ccc", [](const Args& a) { return plain(lerch::funeq_residual(a.c[0], a.c[1], a.c[2])); }}},
        {"funeq515_residual", {"ccc", [](const Args& a) {
             return plain(lerch::funeq515_residual(a.c[0], a.c[1], a.c[2]));
         }}},
        {"jonquiere_residual", {"cc", [](const Args& a) { return plain(lerch::jonquiere_residual(a.c[0], a.c[1])); }}},
    };
    return table;
}

std::string arg_names(const std::string& sig)
{
    std::string out;
    for (char ch : sig)
        out += ch == 'n' ? " <int>" : " <re[,im]>";
    return out;
}

std::string eval_usage()
{
    std::ostringstream os;
    os << "usage: phiver eval <function> <args...>\nfunctions:\n";
    for (const auto& [name, e] : exports())
        os << "  " << name << arg_names(e.signature) << "\n";
    return os.str();
}

std::string complex_text(CValue v)
{
    std::string im = report::shortest(std::abs(v.imag()));
    return report::shortest(v.real()) + (std::signbit(v.imag()) ? " - " : " + ") + im + "i";
}

int cmd_eval(const std::vector<std::string>& tokens)
{
    if (tokens.empty()) {
        std::cerr << eval_usage();
        return 2;
    }
    auto it = exports().find(tokens[0]);
    if (it == exports().end()) {
        std::cerr << "phiver: unknown function '" << tokens[0] << "'\n" << eval_usage();
        return 2;
    }
    const Export& e = it->second;
    if (tokens.size() - 1 != e.signature.size()) {
        std::cerr << "phiver: " << tokens[0] << " takes " << e.signature.size() << " argument(s)\nusage: phiver eval "
                  << tokens[0] << arg_names(e.signature) << "\n";
        return 2;
    }
    Args args;
    try {
        for (std::size_t i = 0; i < e.signature.size(); ++i) {
            if (e.signature[i] == 'n')
                args.n.push_back(parse_integer(tokens[i + 1]));
            else
                args.c.push_back(parse_complex(tokens[i + 1]));
        }
    } catch (const ArgError& err) {
        std::cerr << "phiver: " << err.what() << "\n";
        return 2;
    }
    try {
        Result r = e.fn(args);
        std::cout << "value        " << complex_text(r.out.value) << "\n";
        if (!r.exact_text.empty())
            std::cout << "exact        " << r.exact_text << "\n";
        std::cout << "abs_err_est  " << report::shortest(r.out.abs_err_est) << "\n"
                  << "flags        " << flags_to_string(r.out.flags) << "\n";
    } catch (const DomainError& err) {
        std::cerr << "phiver: domain error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "phiver: " << err.what() << "\n";
        return 1;
    }
    return 0;
}

std::vector<std::string> split_list(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty())
                out.push_back(part);
    }
    return out;
}

bool write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "phiver: cannot open '" << path << "' for writing\n";
        return false;
    }
    f << text;
    f.close();
    if (!f) {
        std::cerr << "phiver: write to '" << path << "' failed\n";
        return false;
    }
    return true;
}

std::string render(const reg::SuiteReport& r, const std::string& format)
{
    if (format == "json")
        return report::render_json(r);
    if (format == "csv")
        return report::render_csv(r);
    return report::render_text(r);
}

std::string list_text()
{
    std::ostringstream os;
    for (const auto& x : reg::catalog()) {
        std::string tags;
        for (const auto& t : x.tags)
            tags += (tags.empty() ? "" : ",") + t;
        os << x.id << "\t" << x.anchor << "\t" << tags << "\t" << x.domain.summary();
        if (x.default_skip)
            os << "\t[skipped by default: " << x.skip_reason << "]";
        os << "\n";
    }
    return os.str();
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("PHIVER_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            std::cerr << "phiver: ignoring malformed PHIVER_SEED='" << env << "'\n";
        }
    }
    return 42;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hurwitz-Lerch zeta evaluation and identity verification", "phiver"};
    app.require_subcommand(1);

    std::vector<std::string> eval_tokens;
    auto* eval = app.add_subcommand("eval", "evaluate an exported function");
    eval->add_option("tokens", eval_tokens, "function name followed by its arguments")->allow_extra_args();

    std::vector<std::string> ids_raw, tags_raw;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    std::size_t samples = 10;
    std::string format = "text", out;
    bool include_skipped = false;

    auto suite_options = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--ids", ids_raw, "comma-separated identity ids")->delimiter(',');
        sub->add_option("--tags", tags_raw, "comma-separated tags")->delimiter(',');
        sub->add_option("--tol", tol, "tolerance override for every identity")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "sampling seed (default 42 or PHIVER_SEED)");
        sub->add_option("--samples", samples, "samples per parametrised identity")->check(CLI::Range(1, 100000));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", out, "write the output to this file");
        sub->add_flag("--include-skipped", include_skipped, "also attempt identities skipped by default");
    };
    auto* verify = app.add_subcommand("verify", "verify catalog identities");
    suite_options(verify, {"text", "json", "csv"});
    auto* rep = app.add_subcommand("report", "verify and serialize the suite report");
    suite_options(rep, {"json", "csv", "text"});
    auto* list = app.add_subcommand("list", "list the identity catalog");
    list->add_option("--out", out, "write the listing to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*eval)
        return cmd_eval(eval_tokens);
    if (*list)
        return write_output(list_text(), out) ? 0 : 1;

    const bool is_report = rep->parsed();
    if (is_report && rep->count("--format") == 0)
        format = "json";

    reg::SuiteFilter filter{split_list(ids_raw), split_list(tags_raw), include_skipped};
    reg::SuiteOptions opts;
    opts.seed = (is_report ? rep : verify)->count("--seed") ? seed : default_seed();
    opts.samples = samples;
    opts.tol_override = tol;

    reg::SuiteReport result;
    try {
        result = reg::verify_suite(filter, opts);
    } catch (const reg::UsageError& e) {
        std::cerr << "phiver: " << e.what() << "\n";
        return 2;
    }
    if (!write_output(render(result, format), out))
        return 1;
    if (is_report)
        return 0;
    return result.summary.failed > 0 ? 1 : 0;
}
