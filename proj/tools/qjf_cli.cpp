// Command-line surface over the exact pipeline and the numeric checks.
// All output is JSON on stdout (or --output). Exit code 0 iff every
// requested check passed; CLI/input errors exit 2 with an error object.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qjf/qjf.hpp"

namespace {

using namespace qjf;

std::string error_name(const Error& e) {
    if (dynamic_cast<const ZeroLeadingTerm*>(&e)) return "ZeroLeadingTerm";
    if (dynamic_cast<const BeyondTruncation*>(&e)) return "BeyondTruncation";
    if (dynamic_cast<const NonRealPhase*>(&e)) return "NonRealPhase";
    if (dynamic_cast<const UnsupportedPhase*>(&e)) return "UnsupportedPhase";
    if (dynamic_cast<const NotPositiveDefinite*>(&e)) return "NotPositiveDefinite";
    if (dynamic_cast<const DecompositionMismatch*>(&e)) return "DecompositionMismatch";
    if (dynamic_cast<const NotConstant*>(&e)) return "NotConstant";
    if (dynamic_cast<const GridMismatch*>(&e)) return "GridMismatch";
    if (dynamic_cast<const SymmetryViolation*>(&e)) return "SymmetryViolation";
    if (dynamic_cast<const ConvergenceNotReached*>(&e)) return "ConvergenceNotReached";
    if (dynamic_cast<const ConvergencePoor*>(&e)) return "ConvergencePoor";
    if (dynamic_cast<const UnknownSeries*>(&e)) return "UnknownSeries";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    return "Error";
}

// "0.3+0.8i", "i", "2i", "1/4+2i", "-0.5-1i", plain reals too.
cd parse_complex(std::string s) {
    auto parse_real = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        if (t.find('/') != std::string::npos) return to_double(parse_rat(t));
        return std::stod(t);
    };
    std::erase(s, ' ');
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() != 'i') return {parse_real(s), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E' &&
            body[i - 1] != '/') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_real(body)};
    return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) throw Error("cannot write " + output_path);
        out << j.dump(2) << "\n";
    }
}

json run_examples(const std::string& which, const Rat& order, long long nmax) {
    json out;
    out["example"] = which;
    if (which == "k3") {
        JacobiFormInput in = build_k3(order);
        DecompResult res = decompose_full(in, nmax);
        out["form"] = to_json(in);
        out["decomposition"] = to_json(res);
        out["parity_root"] = to_string(parity_root_obstruction(in));
    } else if (which == "rank6") {
        Rank6Example ex = build_rank6(order);
        GDecomp d = trace_decompose(ex.trace);
        JacobiFormInput genus{ex.genus.series, ex.genus.label};
        DecompResult res = decompose_full(genus, nmax);
        out["trace"] = to_json(ex.trace.series);
        out["genus"] = to_json(genus);
        out["g0"] = to_json(d.g.at(0));
        out["g1"] = to_json(d.g.at(1));
        out["decomposition"] = to_json(res);
        out["positivity"] = to_json(positivity_check(d, true));
        out["parity_root"] = to_string(parity_root_obstruction(genus));
    } else {
        throw UnknownSeries("example must be k3 or rank6, got '" + which + "'");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series engine for index-one Jacobi form decompositions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string order_str = "20";
    std::string output_path;
    app.add_option("--output", output_path, "write JSON here instead of stdout");

    // series
    auto* cmd_series = app.add_subcommand("series", "emit a named exact series");
    std::string series_name;
    cmd_series->add_option("name", series_name, "S0 | S1 | eta3 | theta2 | theta3 | theta4")
        ->required();
    cmd_series->add_option("--order", order_str, "truncation order as P/Q");

    // decompose
    auto* cmd_decompose = app.add_subcommand("decompose", "run the pipeline on a Jacobi form");
    std::string input_path;
    long long nmax = -1;
    cmd_decompose->add_option("--input", input_path, "JacobiFormInput JSON")->required();
    cmd_decompose->add_option("--order", order_str, "truncate the input to this order");
    cmd_decompose->add_option("--nmax", nmax, "emit B_0..B_nmax");

    // examples
    auto* cmd_examples = app.add_subcommand("examples", "build a worked example from scratch");
    std::string which;
    cmd_examples->add_option("which", which, "k3 | rank6")->required();
    cmd_examples->add_option("--order", order_str, "truncation order as P/Q");
    cmd_examples->add_option("--nmax", nmax, "emit B_0..B_nmax");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the exact identity suite");
    std::string only;
    bool inject_bug = false;
    cmd_verify->add_option("--order", order_str, "truncation order as P/Q");
    cmd_verify->add_option("--only", only, "run a single named check");
    cmd_verify->add_flag("--inject-bug", inject_bug, "flip a sign to test the harness")
        ->group(""); // hidden
    bool quiet = false;
    cmd_verify->add_flag("--quiet", quiet, "suppress per-check output");

    // numeric
    auto* cmd_numeric = app.add_subcommand("numeric", "floating-point verification checks");
    std::string check, tau_str = "i", z_str = "0.1", example = "k3", gamma_str = "S";
    int radius = 12;
    double tol = 1e-8;
    std::string num_order = "40";
    cmd_numeric
        ->add_option("check", check, "vartheta-transforms | completions | fhat | jacobi-automorphy")
        ->required();
    cmd_numeric->add_option("--tau", tau_str, "point in the upper half-plane, e.g. 0.3+0.8i");
    cmd_numeric->add_option("--z", z_str, "elliptic variable for automorphy checks");
    cmd_numeric->add_option("--radius", radius, "lattice/sum truncation radius");
    cmd_numeric->add_option("--tol", tol, "tolerance");
    cmd_numeric->add_option("--order", num_order, "series truncation order");
    cmd_numeric->add_option("--example", example, "k3 | rank6");
    cmd_numeric->add_option("--gamma", gamma_str, "word in S,T (e.g. ST3S) or a,b,c,d");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_series) {
            Rat order = parse_rat(order_str);
            if (order <= 0) throw Error("order must be positive");
            QSeries s;
            if (series_name == "S0")
                s = s_series(0, order);
            else if (series_name == "S1")
                s = s_series(1, order);
            else if (series_name == "eta3")
                s = eta_power(3, order).truncated(order);
            else if (series_name == "theta2")
                s = theta_const(2, 1, order);
            else if (series_name == "theta3")
                s = theta_const(3, 1, order);
            else if (series_name == "theta4")
                s = theta_const(4, 1, order);
            else
                throw UnknownSeries("no series named '" + series_name + "'");
            emit(to_json(s), output_path);
            return 0;
        }
        if (*cmd_decompose) {
            std::ifstream in(input_path);
            if (!in) throw Error("cannot read " + input_path);
            json j = json::parse(in, nullptr, true);
            JacobiFormInput input = jacobi_input_from_json(j);
            if (cmd_decompose->count("--order"))
                input.form = input.form.truncated(parse_rat(order_str));
            emit(to_json(decompose_full(input, nmax)), output_path);
            return 0;
        }
        if (*cmd_examples) {
            Rat order = parse_rat(order_str);
            emit(run_examples(which, order, nmax), output_path);
            return 0;
        }
        if (*cmd_verify) {
            VerifyReport rep = run_verify(parse_rat(order_str), only, inject_bug);
            json checks = json::array();
            for (const auto& item : rep.items)
                checks.push_back({{"name", item.name}, {"pass", item.pass}});
            emit({{"order", order_str}, {"checks", checks}, {"pass", rep.pass}}, output_path);
            return rep.pass ? 0 : 1;
        }
        if (*cmd_numeric) {
            NumericContext ctx{parse_complex(tau_str), parse_complex(z_str), radius, tol};
            CheckReport rep;
            if (check == "vartheta-transforms") {
                rep = check_vartheta_transforms(ctx);
            } else if (check == "completions") {
                rep = check_completions(ctx, parse_rat(num_order));
            } else if (check == "fhat") {
                if (!cmd_numeric->count("--tol")) ctx.tol = 1e-6;
                rep = check_fhat_k3(ctx, parse_rat(num_order), parse_gamma(gamma_str));
            } else if (check == "jacobi-automorphy") {
                if (!cmd_numeric->count("--tol")) ctx.tol = 1e-6;
                if (!cmd_numeric->count("--order") && example == "rank6") num_order = "12";
                rep = check_jacobi_automorphy(example, parse_gamma(gamma_str), ctx,
                                              parse_rat(num_order));
            } else {
                throw UnknownSeries("no numeric check named '" + check + "'");
            }
            emit(to_json(rep), output_path);
            return rep.pass ? 0 : 1;
        }
    } catch (const Error& e) {
        json err = {{"error", error_name(e)}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err = {{"error", "Error"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 0;
}
