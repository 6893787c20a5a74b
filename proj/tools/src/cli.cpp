#include "hvb_cli/cli.hpp"

#include "hvb/checks.hpp"
#include "hvb/cohomology.hpp"
#include "hvb/errors.hpp"
#include "hvb/expr.hpp"
#include "hvb/families.hpp"
#include "hvb/format.hpp"
#include "hvb/report.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace hvb::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string algebra = "twisted-hv";
    int window = 4;
    long long seed = 0;
    std::string format = "text";
    std::string r;
    std::string family;
    std::string out;
    std::string policy = "interior";
    int arity = 2;
    bool antisymmetric = false;
    bool partial = false;
    std::vector<std::string> positional;
    bool algebra_given = false;
};

struct Family {
    AlgebraSpec alg;
    LinearRule rule;
};

Scalar random_scalar(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
    return make_scalar(num(rng), den(rng));
}

BasisVector parse_selector(const std::string& text, const AlgebraSpec& alg)
{
    Element e = parse_element(text, alg);
    if (e.size() != 1 || e.begin()->second != 1)
        throw UsageError("selector must be a single basis symbol: " + text);
    return e.begin()->first;
}

// name[:key=value,...]; a value of ? draws from the seeded generator.
Family parse_family(const std::string& text, long long seed)
{
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw UsageError("bad family parameter '" + item + "'");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }

    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto scalar = [&](const std::string& key) -> Scalar {
        auto v = take(key);
        if (!v)
            return 0;
        if (*v == "?")
            return random_scalar(rng);
        return parse_scalar(*v);
    };
    auto selector = [&](const std::string& key, const AlgebraSpec& alg) -> BasisVector {
        auto v = take(key);
        if (!v)
            return BasisVector::I(0);
        if (*v == "?") {
            auto c = alg.center_basis();
            std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
            return c[pick(rng)];
        }
        return parse_selector(*v, alg);
    };
    auto full_params = [&](const AlgebraSpec& alg) {
        FamilyParams p;
        p.alpha = scalar("alpha");
        p.alpha_dag = scalar("alpha_dag");
        p.beta = scalar("beta");
        p.beta_dag = scalar("beta_dag");
        p.gamma = scalar("gamma");
        p.gamma_dag = scalar("gamma_dag");
        p.z1 = selector("z1", alg);
        p.z1_dag = selector("z1_dag", alg);
        p.w1 = selector("w1", alg);
        p.w1_dag = selector("w1_dag", alg);
        return p;
    };

    std::optional<Family> f;
    if (name == "chi") {
        Scalar a = scalar("alpha"), b = scalar("beta"), g = scalar("gamma");
        f = Family{AlgebraSpec::twisted_hv(), chi_family(a, b, g)};
    } else if (name == "rho") {
        auto alg = AlgebraSpec::twisted_hv();
        f = Family{alg, rho_family(full_params(alg))};
    } else if (name == "sv") {
        auto alg = AlgebraSpec::sv();
        f = Family{alg, sv_family(full_params(alg))};
    } else if (name == "g1") {
        Scalar a = scalar("alpha"), ad = scalar("alpha_dag"), b = scalar("beta"), bd = scalar("beta_dag"),
               g = scalar("gamma"), gd = scalar("gamma_dag");
        f = Family{AlgebraSpec::g1(), g1_family(a, ad, b, bd, g, gd)};
    } else if (name == "zeta") {
        int order = 3;
        if (auto o = take("order"))
            order = std::stoi(*o);
        if (order < 1)
            throw UsageError("zeta order must be positive");
        Scalar a = scalar("alpha"), ad = scalar("alpha_dag");
        f = Family{AlgebraSpec::diffops(order), zeta_family(a, ad, order)};
    } else {
        throw UsageError("unknown family '" + name + "' (chi, rho, g1, zeta, sv)");
    }
    if (!kv.empty())
        throw UsageError("unknown parameter '" + kv.begin()->first + "' for family " + name);
    return *f;
}

AlgebraSpec resolve_algebra(const Options& o, const std::optional<Family>& fam)
{
    if (!fam)
        return AlgebraSpec::parse(o.algebra);
    if (o.algebra_given && AlgebraSpec::parse(o.algebra).id() != fam->alg.id())
        throw UsageError("family lives on " + fam->alg.id() + ", not " + o.algebra);
    return fam->alg;
}

std::optional<Family> family_of(const Options& o)
{
    if (o.family.empty())
        return std::nullopt;
    return parse_family(o.family, o.seed);
}

// Delta_r, the family, or their sum.
LinearRule rule_of(const Options& o, const AlgebraSpec& alg, const std::optional<Family>& fam)
{
    if (o.r.empty() && !fam)
        throw UsageError("need --r or --family");
    if (o.r.empty())
        return fam->rule;
    LinearRule d = delta_r(alg, parse_tensor(o.r, alg, 2));
    return fam ? d + fam->rule : d;
}

std::string need_r(const Options& o)
{
    if (o.r.empty())
        throw UsageError("--r is required");
    return o.r;
}

std::vector<std::string> images_of(const LinearRule& rule, int window)
{
    std::vector<std::string> lines;
    for (const auto& b : rule.domain().generators(window)) {
        if (!rule.defined_at(b))
            continue;
        TensorElement img = rule(b);
        if (!img.is_zero())
            lines.push_back(to_string(b) + " -> " + to_string(img));
    }
    return lines;
}

struct Outcome {
    Report report;
    int code = 0;
    // Text output replacing the rendered report, for commands whose result is a single value.
    std::optional<std::string> plain;
};

Outcome verdict(Report r)
{
    int code = r.pass ? 0 : 1;
    return {std::move(r), code, std::nullopt};
}

Outcome value_command(const std::string& name, const AlgebraSpec& alg, const std::vector<std::string>& inputs,
                      const TensorElement& value)
{
    Report r;
    r.check = name;
    r.algebra = alg.id();
    r.add("input", inputs);
    r.add("result", to_string(value));
    return {std::move(r), 0, to_string(value)};
}

Outcome dispatch(const std::string& cmd, const Options& o)
{
    if (o.window < 1)
        throw UsageError("--window must be >= 1");
    auto fam = family_of(o);
    AlgebraSpec alg = resolve_algebra(o, fam);
    const auto& pos = o.positional;

    if (cmd == "bracket") {
        if (pos.size() != 2)
            throw UsageError("bracket takes two elements");
        Element v = alg.bracket(parse_element(pos[0], alg), parse_element(pos[1], alg));
        return value_command(cmd, alg, pos, TensorElement::from_element(v));
    }
    if (cmd == "act") {
        if (pos.size() != 2)
            throw UsageError("act takes an element and a tensor");
        TensorElement t = diagonal_action(alg, parse_element(pos[0], alg), parse_expression(pos[1], alg));
        return value_command(cmd, alg, pos, t);
    }
    if (cmd == "cybe") {
        Report r = make_report(check_cybe(alg, parse_tensor(need_r(o), alg, 2)));
        r.add("r", o.r);
        return verdict(std::move(r));
    }
    if (cmd == "mcybe") {
        Report r = make_report(check_mcybe(alg, parse_tensor(need_r(o), alg, 2), o.window));
        r.add("r", o.r);
        return verdict(std::move(r));
    }
    if (cmd == "delta-r") {
        LinearRule d = delta_r(alg, parse_tensor(need_r(o), alg, 2));
        Report r;
        r.check = cmd;
        r.algebra = alg.id();
        r.window = o.window;
        r.add("r", o.r);
        if (pos.empty()) {
            r.add("images", images_of(d, o.window));
        } else {
            std::vector<std::string> lines;
            for (const auto& x : pos)
                lines.push_back(x + " -> " + to_string(d(parse_element(x, alg))));
            r.add("images", lines);
        }
        return verdict(std::move(r));
    }
    if (cmd == "derivation-check") {
        LinearRule rule = rule_of(o, alg, fam);
        Report r = make_report(check_derivation(alg, rule, o.window));
        r.add("rule", rule.name());
        return verdict(std::move(r));
    }
    if (cmd == "bialgebra-check") {
        LinearRule rule = rule_of(o, alg, fam);
        Report r = make_report(verdict_bialgebra(alg, rule, o.window));
        r.add("rule", rule.name());
        return verdict(std::move(r));
    }
    if (cmd == "h1") {
        H1Policy policy = o.policy == "finite-support" ? H1Policy::FiniteSupport : H1Policy::Interior;
        return verdict(make_report(h1_degree_zero(alg, o.window, policy), alg));
    }
    if (cmd == "invariants") {
        auto basis = invariant_tensors(alg, o.arity, o.window, o.antisymmetric);
        Report r;
        r.check = cmd;
        r.algebra = alg.id();
        r.window = o.window;
        r.add("arity", static_cast<long long>(o.arity));
        r.add("antisymmetric", o.antisymmetric);
        r.add("dimension", static_cast<long long>(basis.size()));
        std::vector<std::string> lines;
        for (const auto& t : basis)
            lines.push_back(to_string(t));
        r.add("basis", lines);
        return verdict(std::move(r));
    }
    if (cmd == "hom-solve") {
        if (alg.kind() != AlgebraKind::TwistedHV)
            throw UsageError("hom-solve is defined for twisted-hv only");
        HomSolveResult res = module_hom_solve(o.window, o.partial ? HomRows::Partial : HomRows::Full);
        Report r;
        r.check = cmd;
        r.algebra = alg.id();
        r.window = o.window;
        r.pass = res.report.solvable();
        r.add("rows", o.partial ? std::string("partial") : std::string("full"));
        r.add("unknowns", static_cast<long long>(res.unknowns.size()));
        r.add("rank", static_cast<long long>(res.report.rank));
        r.add("nullity", static_cast<long long>(res.report.nullity));
        std::vector<std::string> kernel;
        for (const auto& k : res.report.kernel) {
            TensorElement f = res.image(BasisVector::I(1), k);
            if (!f.is_zero())
                kernel.push_back("f(I[1]) = " + to_string(f));
        }
        r.add("kernel", kernel);
        return verdict(std::move(r));
    }
    if (cmd == "reduce") {
        TensorElement v = parse_tensor(need_r(o), alg, 2);
        Report r;
        r.check = cmd;
        r.algebra = alg.id();
        r.add("input", o.r);
        auto res = reduce_mod_center(alg, v);
        if (auto* ok = std::get_if<CentralReduction>(&res)) {
            r.add("antisymmetric", to_string(ok->antisymmetric));
            r.add("central", to_string(ok->central));
        } else {
            r.pass = false;
            r.add("offending", to_string(std::get<NotReducible>(res).offending));
        }
        return verdict(std::move(r));
    }
    if (cmd == "family") {
        if (!fam)
            throw UsageError("--family is required");
        Report r;
        r.check = cmd;
        r.algebra = alg.id();
        r.window = o.window;
        r.add("family", o.family);
        r.add("rule", fam->rule.name());
        r.add("images", images_of(fam->rule, o.window));
        return verdict(std::move(r));
    }
    throw UsageError("unknown command " + cmd);
}

void common_options(CLI::App* sub, Options& o)
{
    sub->add_option("--algebra", o.algebra, "witt | virasoro | heisenberg | twisted-hv | g1 | sv | wab:a=,b= | diffops:order=");
    sub->add_option("--window", o.window, "index window N");
    sub->add_option("--seed", o.seed, "seed for ? parameters");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", o.out, "write the report to a file");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact checks for graded Lie algebras and their bialgebra structures", "hvb"};
    app.require_subcommand(1);
    Options o;

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec specs[] = {
        {"bracket", "bracket of two elements"},
        {"act", "diagonal action x . t"},
        {"cybe", "classical Yang-Baxter check c(r) = 0"},
        {"mcybe", "modified Yang-Baxter check x . c(r) = 0"},
        {"delta-r", "coboundary images x . r"},
        {"derivation-check", "derivation identity on a window"},
        {"bialgebra-check", "all Lie bialgebra axioms on a window"},
        {"h1", "degree-0 derivations modulo inner ones"},
        {"invariants", "invariant tensors"},
        {"hom-solve", "module maps from the ideal of twisted-hv into W (x) W"},
        {"reduce", "split a 2-tensor into antisymmetric plus central part"},
        {"family", "tabulate a derivation family"},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        common_options(sub, o);
        std::string n = s.name;
        if (n == "bracket" || n == "act" || n == "delta-r")
            sub->add_option("inputs", o.positional, "elements");
        if (n != "bracket" && n != "act" && n != "h1" && n != "invariants" && n != "hom-solve" && n != "family")
            sub->add_option("--r", o.r, "2-tensor expression");
        if (n == "derivation-check" || n == "bialgebra-check" || n == "family")
            sub->add_option("--family", o.family, "name:key=value,... (value ? draws from --seed)");
        if (n == "h1")
            sub->add_option("--policy", o.policy)->check(CLI::IsMember({"interior", "finite-support"}));
        if (n == "invariants") {
            sub->add_option("--arity", o.arity)->check(CLI::Range(1, 3));
            sub->add_flag("--antisymmetric", o.antisymmetric);
        }
        if (n == "hom-solve")
            sub->add_flag("--partial", o.partial, "equivariance under L[-m] only");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "hvb: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    o.algebra_given = sub->count("--algebra") > 0;

    Outcome result;
    try {
        result = dispatch(sub->get_name(), o);
    } catch (const std::exception& e) {
        err << "hvb " << sub->get_name() << ": " << e.what() << "\n";
        return 2;
    }

    ReportFormat fmt = o.format == "structured" ? ReportFormat::Structured : ReportFormat::Text;
    std::string text;
    if (fmt == ReportFormat::Text && result.plain)
        text = *result.plain + "\n";
    else
        text = render(result.report, fmt);

    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            err << "hvb: cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return result.code;
}

}  // namespace hvb::cli
