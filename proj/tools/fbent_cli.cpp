// fbent: command-line front end for the belief entropy library.

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fbent/fbent.hpp"

namespace {

using fbent::MassAssignment;
using nlohmann::ordered_json;

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string masses_line(const MassAssignment& bpa) {
    std::string line;
    for (const auto& e : bpa) {
        if (!line.empty()) line += ' ';
        line += bpa.frame().format(e.set) + ":" + fixed6(e.mass);
    }
    return line;
}

std::string probs_line(const fbent::DiscreteDistribution& p) {
    std::string line;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) line += ' ';
        line += p.frame().label(i) + ":" + fixed6(p[i]);
    }
    return line;
}

ordered_json probs_json(const fbent::DiscreteDistribution& p) {
    ordered_json doc = ordered_json::object();
    for (std::size_t i = 0; i < p.size(); ++i) doc[p.frame().label(i)] = p[i];
    return doc;
}

struct Options {
    bool json = false;

    std::string measure = "fb";
    double base = 2.0;
    std::string input;

    std::string method;
    std::string rule;
    std::string left;
    std::string right;

    std::string kernel = "uniform";
    double p = 3.0;
    std::size_t steps = 10000;
    double tol = 1e-9;
    std::string trace;

    std::size_t negations = 1;

    std::string experiment;
    std::string out_dir = ".";
    std::vector<std::string> params;
};

int exit_code_for(const fbent::Error& e) { return e.code() == fbent::ErrorCode::IoFailure ? 2 : 1; }

void run_entropy(const Options& o, std::ostream& out) {
    const auto id = fbent::parse_measure(o.measure);
    const auto bpa = fbent::load_bpa(o.input);
    if (!o.json) {
        out << fixed6(fbent::measure(id, bpa, o.base)) << '\n';
        return;
    }
    ordered_json doc{{"measure", o.measure}, {"base", o.base}};
    if (id == fbent::MeasureId::fb) {
        const auto r = fbent::decompose(bpa, o.base);
        doc["value"] = r.total;
        doc["discord"] = r.discord;
        doc["nonspecificity"] = r.nonspecificity;
    } else {
        doc["value"] = fbent::measure(id, bpa, o.base);
    }
    out << doc.dump() << '\n';
}

void run_transform(const Options& o, std::ostream& out) {
    const auto bpa = fbent::load_bpa(o.input);
    const auto p = o.method == "betp" ? fbent::betp(bpa) : fbent::pnpl(bpa);
    if (o.json) {
        out << ordered_json{{"method", o.method}, {"probabilities", probs_json(p)}}.dump() << '\n';
    } else {
        out << probs_line(p) << '\n';
    }
}

void run_combine(const Options& o, std::ostream& out) {
    const auto a = fbent::load_bpa(o.left);
    const auto b = fbent::load_bpa(o.right);
    if (o.rule == "dempster") {
        const auto c = fbent::dempster_combine(a, b);
        if (o.json) {
            out << ordered_json{{"rule", o.rule}, {"bpa", fbent::to_json(c.bpa)}, {"conflict", c.conflict}}.dump()
                << '\n';
        } else {
            out << masses_line(c.bpa) << "\nconflict:" << fixed6(c.conflict) << '\n';
        }
        return;
    }
    const auto c = fbent::disjunctive_combine(a, b);
    if (o.json) {
        out << ordered_json{{"rule", o.rule}, {"bpa", fbent::to_json(c)}}.dump() << '\n';
    } else {
        out << masses_line(c) << '\n';
    }
}

void run_simulate(const Options& o, std::ostream& out) {
    const auto bpa = fbent::load_bpa(o.input);
    fbent::SplitKernel kernel = fbent::UniformKernel{};
    if (o.kernel == "param3") kernel = fbent::Param3Kernel{o.p};
    fbent::ProcessOptions opts;
    opts.max_steps = o.steps;
    opts.tol = o.tol;
    const auto trace = fbent::iterate_split(bpa, kernel, opts);

    if (!o.trace.empty()) {
        std::ostringstream csv;
        fbent::write_trace_csv(trace, csv);
        std::ofstream file(o.trace, std::ios::binary);
        file << csv.str();
        file.close();
        if (!file) throw fbent::Error(fbent::ErrorCode::IoFailure, "cannot write '" + o.trace + "'");
    }
    const std::size_t steps = trace.steps.size() - 1;
    if (o.json) {
        out << ordered_json{{"steps", steps}, {"converged", trace.converged}, {"bpa", fbent::to_json(trace.result())}}
                   .dump()
            << '\n';
    } else {
        out << masses_line(trace.result()) << "\nsteps:" << steps << " converged:" << (trace.converged ? "yes" : "no")
            << '\n';
    }
}

void run_negate(const Options& o, std::ostream& out) {
    auto bpa = fbent::load_bpa(o.input);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 1; i <= o.negations; ++i) {
        bpa = fbent::negation_step(bpa);
        if (o.json) {
            rows.push_back(fbent::to_json(bpa));
        } else {
            out << i << ' ' << masses_line(bpa) << '\n';
        }
    }
    if (o.json) out << rows.dump() << '\n';
}

void run_experiment(const Options& o, std::ostream& out) {
    fbent::ExperimentSpec spec{o.experiment, {}, o.out_dir};
    for (const auto& kv : o.params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw fbent::Error(fbent::ErrorCode::InvalidParam, "parameters are written key=value, got '" + kv + "'");
        }
        spec.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    const auto paths = fbent::run_experiment(spec);
    std::ifstream in(paths.back());
    const auto summary = nlohmann::json::parse(in);
    if (o.json) {
        ordered_json files = ordered_json::array();
        for (const auto& p : paths) files.push_back(p.string());
        out << ordered_json{{"files", files}, {"passed", fbent::summary_passed(summary)}}.dump() << '\n';
        return;
    }
    for (const auto& p : paths) out << p.string() << '\n';
    for (const auto& a : summary.at("assertions")) {
        out << (a.at("pass").get<bool>() ? "PASS " : "FAIL ") << a.at("name").get<std::string>() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractal-based belief entropy and related evidence-theory tools"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "emit JSON instead of text");

    auto* entropy = app.add_subcommand("entropy", "uncertainty of a BPA");
    entropy->add_option("--measure", o.measure, "measure id")->required();
    entropy->add_option("--base", o.base, "logarithm base")->capture_default_str();
    entropy->add_option("--input", o.input, "BPA JSON file")->required();

    auto* transform = app.add_subcommand("transform", "probability transform of a BPA");
    transform->add_option("--method", o.method)->required()->check(CLI::IsMember({"betp", "pnpl"}));
    transform->add_option("--input", o.input)->required();

    auto* combine = app.add_subcommand("combine", "combine two BPAs");
    combine->add_option("--rule", o.rule)->required()->check(CLI::IsMember({"dempster", "disjunctive"}));
    combine->add_option("A", o.left)->required();
    combine->add_option("B", o.right)->required();

    auto* simulate = app.add_subcommand("simulate", "run the splitting process");
    simulate->add_option("--kernel", o.kernel)->check(CLI::IsMember({"uniform", "param3"}))->capture_default_str();
    simulate->add_option("--p", o.p, "rate of the param3 kernel")->capture_default_str();
    simulate->add_option("--steps", o.steps, "maximum number of steps")->capture_default_str();
    simulate->add_option("--tol", o.tol, "stop once multi-element mass is below this")->capture_default_str();
    simulate->add_option("--input", o.input)->required();
    simulate->add_option("--trace", o.trace, "write the trace CSV here");

    auto* negate = app.add_subcommand("negate", "apply negation repeatedly");
    negate->add_option("--steps", o.negations)->capture_default_str()->check(CLI::Range(1, 100000));
    negate->add_option("--input", o.input)->required();

    auto* experiment = app.add_subcommand("experiment", "run a named experiment");
    experiment->add_option("name", o.experiment)->required();
    experiment->add_option("--out", o.out_dir)->capture_default_str();
    experiment->add_option("--param", o.params, "key=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::ostringstream out;
    try {
        if (*entropy) run_entropy(o, out);
        if (*transform) run_transform(o, out);
        if (*combine) run_combine(o, out);
        if (*simulate) run_simulate(o, out);
        if (*negate) run_negate(o, out);
        if (*experiment) run_experiment(o, out);
    } catch (const fbent::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::cout << out.str();
    return 0;
}
