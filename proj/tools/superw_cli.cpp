// Command-line front end: parses algebra configs and element/tensor
// expressions, dispatches the checks and prints canonical reports.
// Exit codes: 0 = success/pass, 1 = a check failed, 2 = usage or input error.

#include "superw/bialgebra.hpp"
#include "superw/cohomology.hpp"
#include "superw/config.hpp"
#include "superw/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace superw;

struct CommonOpts {
    std::string config_path;
    std::string format = "text";
    int window = 0;  // 0 = use config default
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "algebra config file (JSON)");
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--window", opts.window, "window radius N");
    cmd->add_option("--seed", opts.seed, "seed recorded in the report digest")
        ->each([&opts](const std::string&) { opts.seed_set = true; });
}

// Without --config, quick calls get a case-A group spanned by the indices
// that actually appear (plus 1, so integer examples stay on <1>).
AlgebraConfig resolve_config(const CommonOpts& opts, const std::vector<std::string>& exprs) {
    AlgebraConfig cfg;
    if (!opts.config_path.empty()) {
        cfg = AlgebraConfig::load(opts.config_path);
    } else {
        std::vector<Rational> gens{Rational(1)};
        for (const auto& e : exprs)
            for (auto& idx : collect_indices(e))
                if (!idx.is_zero()) gens.push_back(std::move(idx));
        cfg.group = std::make_shared<const Group>(std::move(gens), Rational(0));
    }
    if (opts.seed_set) cfg.seed = opts.seed;
    return cfg;
}

int emit_report(CheckReport rep, const AlgebraConfig& cfg, const CommonOpts& opts) {
    rep.config_digest = cfg.digest();
    std::cout << (opts.format == "structured" ? rep.structured() : rep.text());
    return rep.exit_code();
}

struct RInput {
    std::string inline_expr;
    std::string file_path;
};

// r from --r / --r-file; the file's group wins unless --config was given
std::pair<AlgebraConfig, RMatrix> resolve_r(const CommonOpts& opts, const RInput& rin) {
    if (!rin.file_path.empty()) {
        RMatrixFile f = RMatrixFile::load(rin.file_path);
        AlgebraConfig cfg;
        if (!opts.config_path.empty()) {
            cfg = AlgebraConfig::load(opts.config_path);
        } else {
            cfg.group = f.group;
        }
        if (opts.seed_set) cfg.seed = opts.seed;
        Algebra algebra(cfg.group);
        return {cfg, make_rmatrix(parse_tensor(algebra, f.r_text))};
    }
    if (rin.inline_expr.empty())
        throw std::invalid_argument("an r-matrix is required: pass --r or --r-file");
    AlgebraConfig cfg = resolve_config(opts, {rin.inline_expr});
    Algebra algebra(cfg.group);
    return {cfg, make_rmatrix(parse_tensor(algebra, rin.inline_expr))};
}

int window_radius(const CommonOpts& opts, const AlgebraConfig& cfg) {
    return opts.window > 0 ? opts.window : cfg.default_window_radius;
}

Family family_from_letter(char c) {
    switch (c) {
        case 'L': return Family::L;
        case 'I': return Family::I;
        case 'G': return Family::G;
        case 'H': return Family::H;
    }
    throw std::invalid_argument(std::string("unknown family letter '") + c + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer-algebra kernel for the generalized super W-algebra"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string arg1, arg2;
    RInput rin;
    std::string degree_str = "0";
    std::string parity_str = "even";
    std::string export_path;
    std::string sector_str = "LL";

    auto* c_bracket = app.add_subcommand("bracket", "super-bracket of two elements");
    c_bracket->add_option("x", arg1, "first element")->required();
    c_bracket->add_option("y", arg2, "second element")->required();
    add_common(c_bracket, opts);

    auto* c_act = app.add_subcommand("act", "adjoint diagonal action x o u");
    c_act->add_option("x", arg1, "acting element")->required();
    c_act->add_option("u", arg2, "tensor")->required();
    add_common(c_act, opts);

    auto* c_cobracket = app.add_subcommand("cobracket", "coboundary cobracket Delta_r(x)");
    c_cobracket->add_option("x", arg1, "element")->required();
    c_cobracket->add_option("--r", rin.inline_expr, "r-matrix expression");
    c_cobracket->add_option("--r-file", rin.file_path, "r-matrix file");
    add_common(c_cobracket, opts);

    auto* c_cybe = app.add_subcommand("cybe", "classical Yang-Baxter obstruction c(r)");
    c_cybe->add_option("--r", rin.inline_expr, "r-matrix expression");
    c_cybe->add_option("--r-file", rin.file_path, "r-matrix file");
    add_common(c_cybe, opts);

    auto* c_mybe = app.add_subcommand("mybe", "modified Yang-Baxter check over a window");
    c_mybe->add_option("--r", rin.inline_expr, "r-matrix expression");
    c_mybe->add_option("--r-file", rin.file_path, "r-matrix file");
    add_common(c_mybe, opts);

    auto* c_verify = app.add_subcommand("bialgebra-verify",
                                        "coalgebra + compatibility axioms for Delta_r");
    c_verify->add_option("--r", rin.inline_expr, "r-matrix expression");
    c_verify->add_option("--r-file", rin.file_path, "r-matrix file");
    add_common(c_verify, opts);

    auto* c_h1 = app.add_subcommand("h1", "windowed H1 quotient dimension");
    c_h1->add_option("--degree", degree_str, "derivation degree t (rational)");
    c_h1->add_option("--parity", parity_str, "derivation parity")
        ->check(CLI::IsMember({"even", "odd"}));
    c_h1->add_option("--export", export_path, "write the cocycle system dump here");
    add_common(c_h1, opts);

    auto* c_norm = app.add_subcommand("normalize", "length reduction of inner(u) at degree 0");
    c_norm->add_option("--u", arg1, "degree-0 homogeneous tensor u")->required();
    c_norm->add_option("--sector", sector_str, "tensor sector, two family letters (default LL)");
    add_common(c_norm, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_bracket)) {
            AlgebraConfig cfg = resolve_config(opts, {arg1, arg2});
            Algebra algebra(cfg.group);
            std::cout << bracket(parse_element(algebra, arg1), parse_element(algebra, arg2)).str()
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(c_act)) {
            AlgebraConfig cfg = resolve_config(opts, {arg1, arg2});
            Algebra algebra(cfg.group);
            std::cout << act(parse_element(algebra, arg1), parse_tensor(algebra, arg2)).str()
                      << "\n";
            return 0;
        }
        if (app.got_subcommand(c_cobracket)) {
            auto [cfg, r] = resolve_r(opts, rin);
            Algebra algebra(cfg.group);
            std::cout << cobracket(r, parse_element(algebra, arg1)).str() << "\n";
            return 0;
        }
        if (app.got_subcommand(c_cybe)) {
            auto [cfg, r] = resolve_r(opts, rin);
            TripleTensor c = cybe(r);
            CheckReport rep;
            rep.check_name = "cybe";
            if (!c.is_zero()) rep.add_counterexample(r.value.str(), c.str());
            rep.finalize();
            return emit_report(std::move(rep), cfg, opts);
        }
        if (app.got_subcommand(c_mybe)) {
            auto [cfg, r] = resolve_r(opts, rin);
            Algebra algebra(cfg.group);
            DegreeWindow window(algebra.group(), window_radius(opts, cfg));
            CheckReport rep = mybe_check(algebra, r, window.symbols(algebra));
            rep.window = window.describe();
            return emit_report(std::move(rep), cfg, opts);
        }
        if (app.got_subcommand(c_verify)) {
            auto [cfg, r] = resolve_r(opts, rin);
            Algebra algebra(cfg.group);
            DegreeWindow window(algebra.group(), window_radius(opts, cfg));
            CheckReport coalg = verify_coalgebra(algebra, r, window);
            CheckReport compat = verify_compatibility(algebra, r, window);
            int rc = std::max(emit_report(std::move(coalg), cfg, opts),
                              emit_report(std::move(compat), cfg, opts));
            return rc;
        }
        if (app.got_subcommand(c_h1)) {
            AlgebraConfig cfg;
            if (!opts.config_path.empty()) {
                cfg = AlgebraConfig::load(opts.config_path);
            } else {
                cfg.group = std::make_shared<const Group>(std::vector<Rational>{Rational(1)},
                                                          Rational(0));
            }
            if (opts.seed_set) cfg.seed = opts.seed;
            Algebra algebra(cfg.group);
            DegreeWindow window(algebra.group(), window_radius(opts, cfg));
            Degree t = algebra.group().degree_of(Rational::parse(degree_str));
            Parity parity = parity_str == "odd" ? Parity::Odd : Parity::Even;
            CocycleSystem sys;
            CheckReport rep = solve_h1_window(algebra, t, parity, window, &sys);
            if (!export_path.empty()) {
                std::ofstream out(export_path);
                if (!out) throw std::invalid_argument("cannot write " + export_path);
                out << sys.export_text();
            }
            return emit_report(std::move(rep), cfg, opts);
        }
        if (app.got_subcommand(c_norm)) {
            AlgebraConfig cfg = resolve_config(opts, {arg1});
            Algebra algebra(cfg.group);
            DegreeWindow window(algebra.group(), window_radius(opts, cfg));
            TensorElement u = parse_tensor(algebra, arg1);
            auto pu = u.parity();
            if (!pu) throw std::invalid_argument("normalize: u has mixed parity");
            if (sector_str.size() != 2) throw std::invalid_argument("normalize: sector must be two letters");
            std::pair<Family, Family> sector{family_from_letter(sector_str[0]),
                                             family_from_letter(sector_str[1])};
            HomDerivation d = inner(algebra, window, u, *pu);
            NormalizeResult res = normalize_d0(algebra, d, sector);
            CheckReport rep;
            rep.check_name = "normalize-d0";
            rep.window = window.describe();
            rep.dimensions["steps"] = res.steps;
            rep.dimensions["mirror_steps"] = res.mirror_steps;
            rep.dimensions["witnesses"] = static_cast<long long>(res.witnesses.size());
            rep.dimensions["initial_length"] = res.initial_length;
            rep.pass = true;
            return emit_report(std::move(rep), cfg, opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
