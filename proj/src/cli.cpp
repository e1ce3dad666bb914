/*
   Copyright 2026 The dedekind Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dedekind/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "dedekind/corpus.hpp"
#include "dedekind/criterion.hpp"
#include "dedekind/extensions.hpp"
#include "dedekind/hensel.hpp"
#include "dedekind/poly_io.hpp"

namespace dedekind::cli {
namespace {

using json = nlohmann::ordered_json;

struct EngineArgs {
    std::string base_kind;
    std::string prime;
    std::uint64_t p = 0;
    unsigned e = 1;
    std::string pi;
    std::string poly;
    std::string precision = "auto";
    bool assume_irreducible = false;
};

struct CorpusArgs {
    std::size_t count = 100;
    unsigned max_deg = 6;
    std::vector<std::uint64_t> primes{2, 3, 5};
    std::vector<std::uint64_t> fq_chars;
    std::optional<std::size_t> instance;
};

struct Common {
    bool json = false;
    std::uint64_t seed = 0;
};

json skeleton(const std::string& command, std::uint64_t seed)
{
    json j;
    j["command"] = command;
    j["base"] = nullptr;
    j["poly"] = nullptr;
    j["verdict"] = nullptr;
    j["splitting"] = nullptr;
    j["verify"] = nullptr;
    j["count"] = nullptr;
    j["seed"] = seed;
    j["version"] = version();
    return j;
}

ValuedBase make_base(const EngineArgs& a)
{
    if (a.base_kind == "Q") {
        if (a.prime.empty())
            throw Error(ErrorCode::usage, "--base Q needs --prime");
        mpz_class p;
        if (a.prime.find_first_not_of("0123456789") != std::string::npos || p.set_str(a.prime, 10) != 0)
            throw Error(ErrorCode::invalid_base, "--prime must be a positive decimal integer");
        return IntegerBase(p);
    }
    if (a.p == 0 || a.pi.empty())
        throw Error(ErrorCode::usage, "--base Fq needs --p and --pi (and optionally --e)");
    if (a.e < 1 || a.e > 64)
        throw Error(ErrorCode::invalid_base, "--e must lie in [1, 64]");
    auto Fq = FiniteField::galois_field(a.p, a.e);
    return FunctionBase(Fq, parse_tpoly(*Fq, a.pi));
}

json base_json(const IntegerBase& b)
{
    return json{{"kind", "Q"}, {"prime", mpz_get_ui(b.prime().get_mpz_t())}};
}

json base_json(const FunctionBase& b)
{
    return json{{"kind", "Fq"},
                {"p", b.characteristic()},
                {"e", b.constant_field_degree()},
                {"pi", b.to_string(b.prime())}};
}

std::string nu_string(const Valuation& v)
{
    return v.is_infinite() ? "inf" : std::to_string(v.value());
}

json nu_json(const Valuation& v)
{
    return v.is_infinite() ? json(nullptr) : json(v.value());
}

template <ValuedRing B>
std::string residue_string(const B& base, const ResiduePoly& p)
{
    return FieldPolyRing(base.residue_field()).to_string(p, "x");
}

template <ValuedRing B>
json verdict_json(const B& base, const CriterionVerdict<B>& v)
{
    json factors = json::array();
    for (const auto& f : v.factorization.factors)
        factors.push_back({{"phibar", residue_string(base, f.phibar)}, {"l", f.multiplicity}});
    json w = json::array();
    for (const auto& x : v.witnesses)
        w.push_back({{"i", x.index + 1},
                     {"phi", format_poly(base, x.phi.poly())},
                     {"l", x.multiplicity},
                     {"r", format_poly(base, x.remainder)},
                     {"nu_r", nu_json(x.valuation)}});
    return json{{"integrally_closed", v.integrally_closed},
                {"sigma", v.sigma},
                {"residue_factors", factors},
                {"witnesses", w}};
}

template <ValuedRing B>
void verdict_text(std::ostream& os, const B& base, const CriterionVerdict<B>& v)
{
    os << "residue factorization:";
    for (const auto& f : v.factorization.factors)
        os << " (" << residue_string(base, f.phibar) << ")^" << f.multiplicity;
    os << '\n';
    for (const auto& x : v.witnesses)
        os << "witness " << x.index + 1 << ": phi = " << format_poly(base, x.phi.poly()) << ", l = " << x.multiplicity
           << ", r = " << format_poly(base, x.remainder) << ", nu(r) = " << nu_string(x.valuation) << '\n';
    if (v.witnesses.empty())
        os << "no repeated residue factor\n";
    os << "integrally closed: " << (v.integrally_closed ? "yes" : "no") << '\n';
}

std::string rational(const mpq_class& q)
{
    return q.get_str();
}

template <ValuedRing B>
Outcome run_engine(const std::string& command, const B& base, const EngineArgs& a, const Common& c)
{
    json j = skeleton(command, c.seed);
    std::ostringstream text;
    auto f = MonicPoly<typename B::Elem>::checked(base, parse_poly(base, a.poly));
    j["base"] = base_json(base);
    j["poly"] = format_poly(base, f.poly());
    text << "base: " << base.describe() << '\n' << "f: " << format_poly(base, f.poly()) << '\n';

    VerdictOptions opts{c.seed, a.assume_irreducible, false};
    auto verdict = dedekind_verdict(base, f, opts);
    opts.assume_irreducible = true; // already checked once
    j["verdict"] = verdict_json(base, verdict);
    verdict_text(text, base, verdict);
    int code = exit_ok;

    if (command == "check") {
        code = verdict.integrally_closed ? exit_ok : exit_false;
    } else if (command == "split") {
        auto rep = split_from_verdict(base, f, verdict);
        json s = json::array();
        std::size_t n = 0;
        for (const auto& q : rep.ideals) {
            s.push_back({{"gens", json::array({base.to_string(q.prime), format_poly(base, q.phi.poly())})},
                         {"e", q.e},
                         {"f", q.f}});
            text << "ideal " << ++n << ": (" << base.to_string(q.prime) << ", " << format_poly(base, q.phi.poly())
                 << "), e = " << q.e << ", f = " << q.f << '\n';
        }
        j["splitting"] = s;
        text << "defectless: " << (rep.defectless ? "yes" : "no") << '\n';
    } else if (command == "verify") {
        std::optional<unsigned> k;
        if (a.precision != "auto") {
            if (a.precision.empty() || a.precision.size() > 4 || a.precision.find_first_not_of("0123456789") != std::string::npos)
                throw Error(ErrorCode::usage, "--precision must be 'auto' or an integer in [1, 1024]");
            k = static_cast<unsigned>(std::stoul(a.precision));
        }
        auto rep = verify_main2(base, f, opts, k);
        json vj = json::array();
        for (const auto& e : rep.entries) {
            vj.push_back({{"i", e.index + 1}, {"lhs", rational(e.lhs)}, {"rhs", "1"}, {"pass", e.pass}});
            text << "i = " << e.index + 1 << ": l * omega = " << e.multiplicity << " * " << rational(e.omega.value)
                 << " = " << rational(e.lhs) << ", nu(Res(F, phi)) = " << e.omega.resultant_valuation
                 << ", deg phi = " << e.phi_degree << (e.pass ? "  pass" : "  FAIL") << '\n';
        }
        text << "precision: " << rep.precision << '\n';
        j["verify"] = vj;
        if (!rep.all_pass)
            internal_error("verification failed on a true verdict");
    } else {
        auto cnt = count_extensions(base, f, opts);
        json cert = json::array();
        for (const auto& s : cnt.certificate)
            cert.push_back(s);
        j["count"] = {{"status", cnt.known() ? "known" : "unknown"},
                      {"t", cnt.known() ? json(cnt.t) : json(nullptr)},
                      {"certificate", cert}};
        if (cnt.known())
            text << "extensions: " << cnt.t << '\n';
        else
            text << "extensions: unknown\n";
        for (const auto& s : cnt.certificate)
            text << "  " << s << '\n';
    }
    return {code, c.json ? j.dump(2) + "\n" : text.str(), ""};
}

std::string join(const std::vector<std::uint64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Outcome run_corpus_command(const CorpusArgs& a, const Common& c)
{
    CorpusConfig cfg;
    cfg.seed = c.seed;
    cfg.count = a.count;
    cfg.max_deg = a.max_deg;
    cfg.primes = a.primes;
    cfg.fq_chars = a.fq_chars;
    cfg.only = a.instance;
    if (a.count < 1)
        throw Error(ErrorCode::usage, "--count must be at least 1");
    if (a.max_deg < 1 || a.max_deg > 16)
        throw Error(ErrorCode::usage, "--max-deg must lie in [1, 16]");
    if (a.instance && *a.instance >= a.count)
        throw Error(ErrorCode::usage, "--instance must be below --count");
    for (auto p : a.primes)
        if (p >= 1000)
            throw Error(ErrorCode::usage, "corpus primes must be below 1000");
    for (auto p : a.fq_chars)
        if (p >= 1000)
            throw Error(ErrorCode::usage, "corpus characteristics must be below 1000");

    json j = skeleton("corpus", c.seed);
    CorpusReport rep;
    try {
        rep = run_corpus(cfg);
    } catch (const CorpusFailure& e) {
        const std::string repro = "dedekind corpus --seed " + std::to_string(e.seed()) + " --count " +
                                  std::to_string(a.count) + " --max-deg " + std::to_string(a.max_deg) +
                                  " --primes " + join(a.primes) +
                                  (a.fq_chars.empty() ? "" : " --fq-chars " + join(a.fq_chars)) + " --instance " +
                                  std::to_string(e.index());
        if (c.json) {
            j["error"] = {{"code", "internal"}, {"message", e.what()}, {"reproducer", repro}};
            return {exit_internal, j.dump(2) + "\n", ""};
        }
        return {exit_internal, "", std::string("error[internal]: ") + e.what() + "\nreproducer: " + repro + "\n"};
    }

    auto suite = [](const SuiteStats& s) { return json{{"run", s.run}, {"failures", s.failures}}; };
    j["corpus"] = {{"count", a.count},
                   {"max_deg", a.max_deg},
                   {"primes", a.primes},
                   {"fq_chars", a.fq_chars},
                   {"instances", rep.instances},
                   {"verdict_true", rep.verdict_true},
                   {"verdict_false", rep.verdict_false},
                   {"lifts_checked", rep.lifts_checked},
                   {"suites",
                    {{"oracle_agreement", suite(rep.oracle_agreement)},
                     {"lift_invariance", suite(rep.lift_invariance)},
                     {"defectless", suite(rep.defectless)},
                     {"verify_main2", suite(rep.verify_main2)}}}};
    std::ostringstream text;
    text << "instances: " << rep.instances << " (true " << rep.verdict_true << ", false " << rep.verdict_false << ")\n";
    auto line = [&](const char* name, const SuiteStats& s) {
        text << name << ": " << s.run << " run, " << s.failures << " failures\n";
    };
    line("oracle_agreement", rep.oracle_agreement);
    line("lift_invariance", rep.lift_invariance);
    line("defectless", rep.defectless);
    line("verify_main2", rep.verify_main2);
    text << "lifts checked: " << rep.lifts_checked << '\n';
    return {exit_ok, c.json ? j.dump(2) + "\n" : text.str(), ""};
}

Outcome error_outcome(const std::string& command, const Common& c, std::string_view code, const std::string& msg,
                      int exit_code)
{
    if (c.json) {
        json j = skeleton(command, c.seed);
        j["error"] = {{"code", code}, {"message", msg}};
        return {exit_code, j.dump(2) + "\n", ""};
    }
    return {exit_code, "", "error[" + std::string(code) + "]: " + msg + "\n"};
}

} // namespace

const char* version() noexcept
{
    return DEDEKIND_VERSION;
}

int exit_code_for(ErrorCode code) noexcept
{
    return code == ErrorCode::internal ? exit_internal : exit_input;
}

Outcome run(const std::vector<std::string>& args)
{
    CLI::App app{"Integral closedness of monogenic orders at a prime", "dedekind"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    Common common;
    EngineArgs engine;
    CorpusArgs corpus;
    common.json = std::find(args.begin(), args.end(), "--json") != args.end();

    const std::vector<std::pair<std::string, std::string>> engine_commands{
        {"check", "decide whether the order is integrally closed at the prime"},
        {"split", "factor the prime into prime ideals (criterion must hold)"},
        {"verify", "check l_i * omega_i(phi_i(alpha)) = 1 through Hensel factors"},
        {"count-extensions", "count the extensions of the valuation when certifiable"}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, help] : engine_commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--base", engine.base_kind, "Q or Fq")->required()->check(CLI::IsMember({"Q", "Fq"}));
        sub->add_option("--prime", engine.prime, "prime p (Q)");
        sub->add_option("--p", engine.p, "characteristic (Fq)");
        sub->add_option("--e", engine.e, "degree of F_q over F_p (Fq)")->capture_default_str();
        sub->add_option("--pi", engine.pi, "monic irreducible place in t (Fq)");
        sub->add_option("--poly", engine.poly, "monic polynomial in x")->required();
        sub->add_flag("--json", common.json, "machine-readable output");
        sub->add_option("--seed", common.seed, "seed for randomized factoring")->capture_default_str();
        sub->add_option("--precision", engine.precision, "working precision or 'auto'")->capture_default_str();
        sub->add_flag("--assume-irreducible", engine.assume_irreducible, "skip the reducibility pre-check");
        subs.push_back(sub);
    }
    auto* cor = app.add_subcommand("corpus", "run the randomized consistency suites");
    cor->add_option("--seed", common.seed, "corpus seed")->capture_default_str();
    cor->add_option("--count", corpus.count, "number of instances")->capture_default_str();
    cor->add_option("--max-deg", corpus.max_deg, "degree bound")->capture_default_str();
    cor->add_option("--primes", corpus.primes, "primes for Q bases")->delimiter(',');
    cor->add_option("--fq-chars", corpus.fq_chars, "characteristics for F_p(t) bases")->delimiter(',');
    cor->add_option("--instance", corpus.instance, "replay a single instance");
    cor->add_flag("--json", common.json, "machine-readable output");

    std::string command = "none";
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return {exit_ok, app.help(), ""};
    } catch (const CLI::CallForVersion&) {
        return {exit_ok, std::string(version()) + "\n", ""};
    } catch (const CLI::ParseError& e) {
        return error_outcome(command, common, "usage", e.what(), exit_input);
    }
    for (auto* s : app.get_subcommands())
        command = s->get_name();

    try {
        if (command == "corpus")
            return run_corpus_command(corpus, common);
        const auto base = make_base(engine);
        return std::visit([&](const auto& b) { return run_engine(command, b, engine, common); }, base);
    } catch (const Error& e) {
        return error_outcome(command, common, error_code_name(e.code()), e.what(), exit_code_for(e.code()));
    } catch (const std::exception& e) {
        return error_outcome(command, common, "internal", e.what(), exit_internal);
    }
}

} // namespace dedekind::cli
