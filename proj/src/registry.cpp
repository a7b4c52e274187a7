#include "phiver/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <random>
#include <sstream>
#include <thread>

namespace phiver::reg {

CValue ParamSample::c(const std::string& name) const
{
    auto it = values.find(name);
    if (it == values.end())
        throw std::out_of_range("sample has no parameter '" + name + "'");
    return it->second.value;
}

double ParamSample::r(const std::string& name) const
{
    return c(name).real();
}

long ParamSample::n(const std::string& name) const
{
    return std::lround(c(name).real());
}

ParamBox ParamBox::real(std::string name, double lo, double hi)
{
    return {std::move(name), Kind::REAL, lo, hi, 0.0, 0.0};
}

ParamBox ParamBox::complex(std::string name, double re_lo, double re_hi, double im_lo, double im_hi)
{
    return {std::move(name), Kind::COMPLEX, re_lo, re_hi, im_lo, im_hi};
}

ParamBox ParamBox::integer(std::string name, long lo, long hi)
{
    return {std::move(name), Kind::INTEGER, static_cast<double>(lo), static_cast<double>(hi), 0.0, 0.0};
}

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

bool in_box(const ParamBox& b, const ParamValue& v)
{
    const double re = v.value.real(), im = v.value.imag();
    switch (b.kind) {
    case ParamBox::Kind::INTEGER:
        return v.integer && re >= b.re_lo && re <= b.re_hi && im == 0.0;
    case ParamBox::Kind::REAL:
        return re > b.re_lo && re < b.re_hi && im == 0.0;
    case ParamBox::Kind::COMPLEX:
        return re > b.re_lo && re < b.re_hi && im > b.im_lo && im < b.im_hi;
    }
    return false;
}

}  // namespace

bool ParamDomain::contains(const ParamSample& s) const
{
    for (const auto& b : boxes) {
        auto it = s.values.find(b.name);
        if (it == s.values.end() || !in_box(b, it->second))
            return false;
    }
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint& c) { return c.holds(s); });
}

std::string ParamDomain::summary() const
{
    if (!enumerated.empty()) {
        std::ostringstream os;
        os << enumerated.size() << " fixed case" << (enumerated.size() == 1 ? "" : "s");
        return os.str();
    }
    if (boxes.empty())
        return "no parameters";
    std::string out;
    auto sep = [&] {
        if (!out.empty())
            out += "; ";
    };
    for (const auto& b : boxes) {
        sep();
        switch (b.kind) {
        case ParamBox::Kind::INTEGER:
            out += b.name + " in {" + fmt(b.re_lo) + ".." + fmt(b.re_hi) + "}";
            break;
        case ParamBox::Kind::REAL:
            out += b.name + " in (" + fmt(b.re_lo) + ", " + fmt(b.re_hi) + ")";
            break;
        case ParamBox::Kind::COMPLEX:
            out += "Re " + b.name + " in (" + fmt(b.re_lo) + ", " + fmt(b.re_hi) + "), Im " + b.name
                   + " in (" + fmt(b.im_lo) + ", " + fmt(b.im_hi) + ")";
            break;
        }
    }
    for (const auto& c : constraints) {
        sep();
        out += c.text;
    }
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform on [0,1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    double x;
    do
        x = lo + (hi - lo) * unit(rng);
    while (!(x > lo && x < hi));
    return x;
}

ParamValue draw(const ParamBox& b, std::mt19937_64& rng)
{
    switch (b.kind) {
    case ParamBox::Kind::INTEGER: {
        const auto lo = static_cast<long>(b.re_lo);
        const auto span = static_cast<std::uint64_t>(static_cast<long>(b.re_hi) - lo + 1);
        return {CValue(static_cast<double>(lo + static_cast<long>(rng() % span)), 0.0), true};
    }
    case ParamBox::Kind::REAL:
        return {CValue(uniform(rng, b.re_lo, b.re_hi), 0.0), false};
    case ParamBox::Kind::COMPLEX: {
        const double re = uniform(rng, b.re_lo, b.re_hi);
        return {CValue(re, uniform(rng, b.im_lo, b.im_hi)), false};
    }
    }
    return {};
}

constexpr int kMaxRejections = 10000;

}  // namespace

std::vector<ParamSample> sample_params(const Identity& identity, std::uint64_t seed, std::size_t count)
{
    if (count < 1)
        throw ConfigError("sample_params: count must be at least 1");
    const ParamDomain& dom = identity.domain;
    std::vector<ParamSample> out;

    if (!dom.enumerated.empty()) {
        for (std::size_t i = 0; i < dom.enumerated.size(); ++i)
            out.push_back({dom.enumerated[i], seed, i});
        return out;
    }
    if (dom.boxes.empty()) {
        out.push_back({{}, seed, 0});
        return out;
    }

    const std::uint64_t base = fnv1a(identity.id) ^ splitmix(seed);
    for (std::size_t i = 0; i < count; ++i) {
        std::mt19937_64 rng(splitmix(base + i));
        ParamSample s{{}, seed, i};
        int rejected = 0;
        for (;;) {
            s.values.clear();
            for (const auto& b : dom.boxes)
                s.values[b.name] = draw(b, rng);
            if (dom.contains(s))
                break;
            if (++rejected >= kMaxRejections)
                throw ConfigError("sample_params: " + identity.id + " rejected "
                                  + std::to_string(kMaxRejections) + " draws in a row");
        }
        out.push_back(std::move(s));
    }
    return out;
}

const char* to_string(Status s)
{
    switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::SKIPPED: return "SKIPPED";
    }
    return "?";
}

const Identity* find(const std::string& id)
{
    const auto& cat = catalog();
    auto it = std::find_if(cat.begin(), cat.end(), [&](const Identity& x) { return x.id == id; });
    return it == cat.end() ? nullptr : &*it;
}

IdentityReport verify(const Identity& identity, const std::vector<ParamSample>& samples,
                      std::optional<double> tol_override)
{
    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport rep{identity.id, identity.anchor, identity.tags, Status::SKIPPED, {}, {}, 0.0};

    std::size_t skipped = 0, failed = 0;
    for (const auto& s : samples) {
        SampleResult r;
        r.params = s;
        r.tol = tol_override ? *tol_override
                             : (identity.sample_tol ? identity.sample_tol(s) : identity.tol);
        try {
            r.lhs = identity.lhs(s);
            r.rhs = identity.rhs(s);
            r.abs_residual = std::abs(r.lhs.value - r.rhs.value);
            r.rel_residual = r.abs_residual / std::max(1.0, std::abs(r.lhs.value));
            const bool both = r.lhs.converged() && r.rhs.converged();
            if (identity.exact_check && !tol_override)
                r.pass = both && identity.exact_check(s);
            else
                r.pass = both && r.abs_residual <= r.tol * std::max(1.0, std::abs(r.lhs.value));
            if (!both)
                r.reason = "not converged: lhs " + flags_to_string(r.lhs.flags) + ", rhs "
                           + flags_to_string(r.rhs.flags);
        } catch (const DomainError& e) {
            r.skipped = true;
            r.reason = e.what();
        } catch (const std::exception& e) {
            r.reason = e.what();
        }
        if (r.skipped)
            ++skipped;
        else if (!r.pass)
            ++failed;
        rep.samples.push_back(std::move(r));
    }

    if (samples.empty()) {
        rep.reason = "no samples";
    } else if (skipped == samples.size()) {
        rep.status = Status::SKIPPED;
        rep.reason = rep.samples.front().reason;
    } else if (failed > 0 || skipped > 0) {
        rep.status = Status::FAIL;
        rep.reason = std::to_string(failed) + " failed, " + std::to_string(skipped)
                     + " skipped of " + std::to_string(samples.size());
    } else {
        rep.status = Status::PASS;
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

std::string rfc3339_now()
{
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<const Identity*> select(const SuiteFilter& filter)
{
    const auto& cat = catalog();
    for (const auto& id : filter.ids)
        if (!find(id))
            throw UsageError("unknown identity id: " + id);
    for (const auto& tag : filter.tags) {
        bool known = std::any_of(cat.begin(), cat.end(),
                                 [&](const Identity& x) { return x.tags.count(tag) > 0; });
        if (!known)
            throw UsageError("unknown tag: " + tag);
    }

    std::vector<const Identity*> out;
    for (const auto& x : cat) {
        if (!filter.ids.empty()
            && std::find(filter.ids.begin(), filter.ids.end(), x.id) == filter.ids.end())
            continue;
        if (!filter.tags.empty()
            && std::none_of(filter.tags.begin(), filter.tags.end(),
                            [&](const std::string& t) { return x.tags.count(t) > 0; }))
            continue;
        out.push_back(&x);
    }
    std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->id < b->id; });
    return out;
}

}  // namespace

SuiteReport verify_suite(const SuiteFilter& filter, const SuiteOptions& opts)
{
    SuiteReport rep;
    rep.seed = opts.seed;
    rep.tolerance_policy = opts.tol_override ? "override:" + fmt(*opts.tol_override) : "per-identity";
    rep.timestamp = rfc3339_now();

    const auto chosen = select(filter);
    rep.identities.resize(chosen.size());

    auto run_one = [&](std::size_t i) {
        const Identity& x = *chosen[i];
        IdentityReport& out = rep.identities[i];
        if (x.default_skip && !filter.include_skipped) {
            out = {x.id, x.anchor, x.tags, Status::SKIPPED, x.skip_reason, {}, 0.0};
            return;
        }
        try {
            out = verify(x, sample_params(x, opts.seed, opts.samples), opts.tol_override);
        } catch (const ConfigError& e) {
            out = {x.id, x.anchor, x.tags, Status::FAIL, e.what(), {}, 0.0};
        }
    };

    unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, chosen.size()));
    if (n <= 1) {
        for (std::size_t i = 0; i < chosen.size(); ++i)
            run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < chosen.size();)
                    run_one(i);
            });
        for (auto& t : pool)
            t.join();
    }

    for (const auto& r : rep.identities) {
        ++rep.summary.total;
        switch (r.status) {
        case Status::PASS: ++rep.summary.passed; break;
        case Status::FAIL: ++rep.summary.failed; break;
        case Status::SKIPPED: ++rep.summary.skipped; break;
        }
    }
    return rep;
}

}  // namespace phiver::reg
